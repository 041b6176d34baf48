#pragma once

#include <cstdint>
#include <string>

#include "rotns/field.hpp"

namespace rotns {

/// Binary field snapshot: "CBSV" magic, u32 version, u32 n, f64 L, nu, omega,
/// time tag, u32 component count, u32 flags (bit 0 mean-free, bit 1
/// solenoidal), then (re, im) f64 pairs per component. Wavevectors run from
/// -n/2+1 to n/2 on each axis with k3 fastest. Everything is little-endian.
struct Snapshot {
  SpectralField field;
  double nu = 1.0;
  double omega = 1.0;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

std::string encode_snapshot(const SpectralField& field, double nu, double omega);
Snapshot decode_snapshot(const std::string& bytes);

void write_snapshot(const std::string& path, const SpectralField& field, double nu, double omega);
Snapshot read_snapshot(const std::string& path);

}  // namespace rotns
