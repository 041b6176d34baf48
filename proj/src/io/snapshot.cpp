#include "rotns/io/snapshot.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rotns/diagnostics.hpp"
#include "rotns/spectral.hpp"

namespace rotns {

namespace {

constexpr char kMagic[4] = {'C', 'B', 'S', 'V'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 8 * 4 + 4 + 4;

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xffu));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xffu));
}

class Reader {
 public:
  Reader(const std::string& bytes, std::size_t offset) : bytes_(bytes), pos_(offset) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(byte(pos_ + b)) << (8 * b);
    pos_ += 4;
    return v;
  }
  double f64() {
    need(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(byte(pos_ + b)) << (8 * b);
    pos_ += 8;
    return std::bit_cast<double>(v);
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  unsigned char byte(std::size_t i) const { return static_cast<unsigned char>(bytes_[i]); }
  void need(std::size_t k) const {
    if (pos_ + k > bytes_.size()) throw std::runtime_error("snapshot: truncated header");
  }

  const std::string& bytes_;
  std::size_t pos_;
};

}  // namespace

std::string encode_snapshot(const SpectralField& field, double nu, double omega) {
  const Grid& g = field.grid();
  const int n = g.n();
  std::string out(kMagic, 4);
  out.reserve(kHeaderBytes + 16 * g.size() * field.components());
  put_u32(out, kSnapshotVersion);
  put_u32(out, static_cast<std::uint32_t>(n));
  put_f64(out, g.length());
  put_f64(out, nu);
  put_f64(out, omega);
  put_f64(out, field.time());
  put_u32(out, static_cast<std::uint32_t>(field.components()));
  std::uint32_t flags = 0;
  if (field.mean_free()) flags |= 1u;
  if (field.components() == 3 && is_solenoidal(field)) flags |= 2u;
  put_u32(out, flags);
  for (int c = 0; c < field.components(); ++c) {
    for (int k1 = -n / 2 + 1; k1 <= n / 2; ++k1) {
      for (int k2 = -n / 2 + 1; k2 <= n / 2; ++k2) {
        for (int k3 = -n / 2 + 1; k3 <= n / 2; ++k3) {
          const Complex z = field.at(c, IVec3{k1, k2, k3});
          put_f64(out, z.real());
          put_f64(out, z.imag());
        }
      }
    }
  }
  return out;
}

Snapshot decode_snapshot(const std::string& bytes) {
  if (bytes.size() < 4 || bytes.compare(0, 4, kMagic, 4) != 0) {
    throw std::runtime_error("snapshot: bad magic");
  }
  Reader r(bytes, 4);
  const std::uint32_t version = r.u32();
  if (version != kSnapshotVersion) {
    throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
  }
  const std::uint32_t n = r.u32();
  const double length = r.f64();
  const double nu = r.f64();
  const double omega = r.f64();
  const double time = r.f64();
  const std::uint32_t comps = r.u32();
  const std::uint32_t flags = r.u32();
  if (n < 8 || n > 1024 || (n & (n - 1)) != 0) throw std::runtime_error("snapshot: invalid n");
  if (comps < 1 || comps > 3) throw std::runtime_error("snapshot: invalid component count");
  const Grid g(static_cast<int>(n), length);
  const std::size_t expected = 16 * g.size() * comps;
  if (r.remaining() != expected) throw std::runtime_error("snapshot: payload length mismatch");

  Snapshot snap{SpectralField(g, static_cast<int>(comps), time), nu, omega};
  Reader payload(bytes, kHeaderBytes);
  const int h = static_cast<int>(n) / 2;
  for (int c = 0; c < static_cast<int>(comps); ++c) {
    for (int k1 = -h + 1; k1 <= h; ++k1) {
      for (int k2 = -h + 1; k2 <= h; ++k2) {
        for (int k3 = -h + 1; k3 <= h; ++k3) {
          const double re = payload.f64();
          const double im = payload.f64();
          snap.field.at(c, IVec3{k1, k2, k3}) = Complex(re, im);
        }
      }
    }
  }
  if ((flags & 1u) && !snap.field.mean_free()) warn("snapshot: mean-free flag does not match data");
  if ((flags & 2u) && (comps != 3 || !is_solenoidal(snap.field))) {
    warn("snapshot: solenoidal flag does not match data");
  }
  return snap;
}

void write_snapshot(const std::string& path, const SpectralField& field, double nu, double omega) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const std::string bytes = encode_snapshot(field, nu, omega);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_snapshot(buf.str());
}

}  // namespace rotns
