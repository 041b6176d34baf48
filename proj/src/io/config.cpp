#include "rotns/io/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/io/snapshot.hpp"
#include "rotns/spectral.hpp"

namespace rotns {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) {
    throw ConfigError(prefix.empty() ? "config root must be an object"
                                     : prefix + " must be an object");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) {
      throw ConfigError("unknown key '" + (prefix.empty() ? "" : prefix + ".") + item.key() + "'");
    }
  }
}

template <class T>
void read(const json& obj, const char* key, const std::string& where, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

}  // namespace

Config parse_config(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  reject_unknown(root, "",
                 {"grid", "params", "time", "data", "norms", "picard", "suite", "seed", "output"});
  Config c;
  if (root.contains("grid")) {
    const json& g = root["grid"];
    reject_unknown(g, "grid", {"n", "L"});
    read(g, "n", "grid", c.n);
    read(g, "L", "grid", c.length);
  }
  if (root.contains("params")) {
    const json& p = root["params"];
    reject_unknown(p, "params", {"nu", "omega", "smallness_c", "c_weight"});
    read(p, "nu", "params", c.params.nu);
    read(p, "omega", "params", c.params.omega);
    if (p.contains("smallness_c")) {
      read(p, "smallness_c", "params", c.params.smallness_c);
      c.smallness_configured = true;
    }
    if (p.contains("c_weight")) {
      read(p, "c_weight", "params", c.c_weight);
      c.c_weight_configured = true;
    }
  }
  if (root.contains("time")) {
    const json& t = root["time"];
    reject_unknown(t, "time", {"T", "M"});
    read(t, "T", "time", c.time.T);
    read(t, "M", "time", c.time.M);
  }
  if (root.contains("data")) {
    const json& d = root["data"];
    reject_unknown(d, "data", {"kind", "amplitude", "m", "slope", "band", "width", "path"});
    read(d, "kind", "data", c.data.kind);
    read(d, "amplitude", "data", c.data.amplitude);
    read(d, "m", "data", c.data.m);
    read(d, "slope", "data", c.data.slope);
    read(d, "width", "data", c.data.width);
    read(d, "path", "data", c.data.path);
    if (d.contains("band")) {
      const json& b = d["band"];
      if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
          !b[1].is_number_integer()) {
        throw ConfigError("data.band must be a pair of integers");
      }
      c.data.band_lo = b[0].get<int>();
      c.data.band_hi = b[1].get<int>();
    }
  }
  if (root.contains("norms")) {
    const json& nm = root["norms"];
    reject_unknown(nm, "norms", {"p", "s", "sigma"});
    read(nm, "p", "norms", c.p);
    read(nm, "s", "norms", c.s);
    if (nm.contains("sigma")) {
      double sigma = 0.0;
      read(nm, "sigma", "norms", sigma);
      c.sigma = sigma;
    }
  }
  if (root.contains("picard")) {
    const json& pc = root["picard"];
    reject_unknown(pc, "picard", {"tol", "max_iter"});
    read(pc, "tol", "picard", c.picard_tol);
    read(pc, "max_iter", "picard", c.picard_max_iter);
  }
  if (root.contains("suite")) {
    const json& s = root["suite"];
    reject_unknown(s, "suite", {"ensemble_size"});
    read(s, "ensemble_size", "suite", c.ensemble_size);
  }
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
    c.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("output")) {
    const json& o = root["output"];
    reject_unknown(o, "output", {"dir"});
    read(o, "dir", "output", c.output_dir);
  }
  validate(c);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void validate(const Config& c) {
  if (c.n < 8 || (c.n & (c.n - 1)) != 0) throw ConfigError("grid.n must be a power of two >= 8");
  if (!(c.length > 0.0)) throw ConfigError("grid.L must be positive");
  if (!(c.params.nu > 0.0)) throw ConfigError("params.nu must be positive");
  if (!(c.params.omega >= 0.0)) throw ConfigError("params.omega must be non-negative");
  if (!(c.params.smallness_c > 0.0)) throw ConfigError("params.smallness_c must be positive");
  if (!(c.c_weight > 0.0)) throw ConfigError("params.c_weight must be positive");
  if (!(c.time.T > 0.0)) throw ConfigError("time.T must be positive");
  if (c.time.M < 4) throw ConfigError("time.M must be at least 4");
  if (!(c.p >= 1.0)) throw ConfigError("norms.p must be >= 1");
  if (!std::isfinite(c.s)) throw ConfigError("norms.s must be finite");
  if (c.sigma && !std::isfinite(*c.sigma)) throw ConfigError("norms.sigma must be finite");
  if (!(c.picard_tol > 0.0)) throw ConfigError("picard.tol must be positive");
  if (c.picard_max_iter < 1) throw ConfigError("picard.max_iter must be positive");
  if (c.ensemble_size < 10) throw ConfigError("suite.ensemble_size must be at least 10");
  const std::string& k = c.data.kind;
  if (k != "zero" && k != "random_solenoidal" && k != "oscillating_vortex" && k != "snapshot") {
    throw ConfigError("data.kind must be zero, random_solenoidal, oscillating_vortex or snapshot");
  }
  if (k == "snapshot" && c.data.path.empty()) throw ConfigError("data.path is required for snapshot data");
  if (c.data.m < 1) throw ConfigError("data.m must be positive");
  if (c.data.band_lo > c.data.band_hi) throw ConfigError("data.band must satisfy lo <= hi");
  if (!(c.data.width >= 0.0)) throw ConfigError("data.width must be non-negative");
  if (c.output_dir.empty()) throw ConfigError("output.dir must not be empty");
}

SpectralField initial_field(const Config& c) {
  const DataConfig& d = c.data;
  if (d.kind == "snapshot") return read_snapshot(d.path).field;
  const Grid g = c.grid();
  if (d.kind == "zero") return SpectralField(g, 3);
  if (d.kind == "oscillating_vortex") {
    EnvelopeSpec env = default_envelope(g, d.amplitude);
    if (d.width > 0.0) env.width = d.width;
    return oscillating_vortex(d.m, env, g, c.params.omega);
  }
  SpectralField u = random_solenoidal(c.seed, d.slope, d.band_lo, d.band_hi, g);
  const double l2 = lp_norm(u, 2.0);
  if (l2 > 0.0) u *= d.amplitude / l2;
  return u;
}

}  // namespace rotns
