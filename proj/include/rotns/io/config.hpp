#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rotns/field.hpp"
#include "rotns/grid.hpp"
#include "rotns/series.hpp"

namespace rotns {

/// Invalid or unreadable configuration. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Initial data selection. `kind` is one of zero, random_solenoidal,
/// oscillating_vortex or snapshot.
struct DataConfig {
  std::string kind = "random_solenoidal";
  double amplitude = 1.0;  ///< L2 norm for random data, envelope amplitude otherwise
  int m = 4;
  double slope = -11.0 / 6.0;
  int band_lo = 0;
  int band_hi = 1;
  double width = 0.0;  ///< 0 selects L/4
  std::string path;
};

struct Config {
  int n = 32;
  double length = kTwoPi;
  FlowParams params;
  bool smallness_configured = false;
  double c_weight = 1.0;
  bool c_weight_configured = false;
  TimeGrid time;
  DataConfig data;
  double p = 2.0;
  double s = 0.5;
  /// Second regularity index of the reported hybrid norm; unset means 3/p - 1.
  std::optional<double> sigma;
  double picard_tol = 1e-8;
  int picard_max_iter = 50;
  int ensemble_size = 10;
  std::uint64_t seed = 0;
  std::string output_dir = "out";

  Grid grid() const { return make_grid(n, length); }
  /// c_weight defaults to nu unless set explicitly.
  double weight_constant() const { return c_weight_configured ? c_weight : params.nu; }
  double hybrid_sigma() const { return sigma.value_or(3.0 / p - 1.0); }
};

/// Parses JSON text. `source` names the input in error messages.
Config parse_config(const std::string& text, const std::string& source = "<config>");
Config load_config(const std::string& path);

/// Range checks; messages name the offending key.
void validate(const Config& config);

/// Initial field described by config.data. Snapshot data brings its own grid;
/// random data is scaled to L2 norm `amplitude`.
SpectralField initial_field(const Config& config);

}  // namespace rotns
