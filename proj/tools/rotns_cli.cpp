#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/io/config.hpp"
#include "rotns/io/report.hpp"
#include "rotns/io/snapshot.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/mild_solver.hpp"
#include "rotns/semigroup.hpp"
#include "rotns/spectral.hpp"
#include "rotns/suites.hpp"

namespace {

using namespace rotns;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfigError = 2;

struct Common {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
};

Config resolve(const Common& common) {
  Config c = common.config_path.empty() ? Config{} : load_config(common.config_path);
  if (common.seed) c.seed = *common.seed;
  if (!common.out.empty()) c.output_dir = common.out;
  validate(c);
  return c;
}

std::string out_file(const Config& c, const std::string& name) {
  std::filesystem::create_directories(c.output_dir);
  return (std::filesystem::path(c.output_dir) / name).string();
}

void flush_warnings() {
  for (const auto& w : drain_warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

/// Smallness threshold: the configured value, else 0.05 / eta measured on the
/// configuration grid.
double smallness_threshold(const Config& c, const Grid& g) {
  if (c.smallness_configured) return c.params.smallness_c;
  BilinearProbeOptions po;
  po.ensemble_size = c.ensemble_size;
  po.p = c.p;
  po.seed = derive_seed(c.seed, 3);
  const double eta = bilinear_bound_probe(g, c.time, c.params, po).eta;
  return 0.05 / eta;
}

CsvTable series_table(const FieldSeries& u, const Config& c) {
  const EnergyReport er = energy_report(u, c.params);
  CsvTable t({"t", "l2", "h12", "hybrid", "energy_budget"});
  for (std::size_t i = 0; i < u.size(); ++i) {
    t.add_row(std::vector<double>{u.times()[i], std::sqrt(er.energy[i]), sobolev_norm(u[i], 0.5),
                                  hybrid_norm(u[i], c.s, c.hybrid_sigma(), c.p, c.params.omega),
                                  er.budget[i]});
  }
  return t;
}

int cmd_analyze(const Common& common, const std::string& input) {
  Config c = resolve(common);
  SpectralField u = input.empty() ? initial_field(c) : read_snapshot(input).field;
  const double omega = c.params.omega;
  const BlockNorms bn = block_norms(u, c.p);
  CsvTable blocks({"j", "l2", "lp"});
  for (int j = bn.j_min; j <= bn.j_max(); ++j) {
    blocks.add_row(std::vector<double>{static_cast<double>(j), bn.l2_at(j), bn.lp_at(j)});
  }
  write_csv(out_file(c, "analyze_blocks.csv"), blocks);

  CsvTable summary({"quantity", "value"});
  auto add = [&](const std::string& name, double v) { summary.add_row({name, format_double(v)}); };
  add("l2", lp_norm(u, 2.0));
  add("lp", lp_norm(u, c.p));
  add("h12", sobolev_norm(u, 0.5));
  const HybridParts hp = hybrid_parts(u, c.s, c.hybrid_sigma(), c.p, omega);
  add("hybrid_low", hp.low);
  add("hybrid_high", hp.high);
  add("hybrid", hp.total());
  add("besov_half_2_inf", besov_norm(u, 0.5, 2.0, kInfinity));
  if (u.components() == 3) {
    add("divergence_residual", divergence_residual(u));
    c.params.smallness_c = smallness_threshold(c, u.grid());
    const GateResult gate = smallness_gate(u, c.p, c.params);
    add("smallness_c", c.params.smallness_c);
    add("gate_norm", gate.norm);
    add("gate_pass", gate.pass ? 1.0 : 0.0);
  }
  write_csv(out_file(c, "analyze_summary.csv"), summary);
  std::printf("%s", summary.render().c_str());
  return kPass;
}

int cmd_propagate(const Common& common) {
  const Config c = resolve(common);
  const SpectralField u0 = initial_field(c);
  const FieldSeries u = series_propagate(u0, c.time, c.params);
  write_csv(out_file(c, "propagate.csv"), series_table(u, c));
  write_snapshot(out_file(c, "propagate_final.cbsv"), u[u.size() - 1], c.params.nu, c.params.omega);
  return kPass;
}

int cmd_simulate(const Common& common) {
  const Config c = resolve(common);
  const FieldSeries u = if_step_integrate(initial_field(c), c.time, c.params);
  write_csv(out_file(c, "simulate.csv"), series_table(u, c));
  write_snapshot(out_file(c, "simulate_final.cbsv"), u[u.size() - 1], c.params.nu, c.params.omega);
  const EnergyReport er = energy_report(u, c.params);
  std::printf("energy budget max %s (limit %s): %s\n", format_double(er.max_budget).c_str(),
              format_double(1e-4 * er.initial_energy).c_str(), er.pass ? "pass" : "FAIL");
  return er.pass ? kPass : kFail;
}

int cmd_picard(const Common& common) {
  const Config c = resolve(common);
  const PicardResult res =
      picard_solve(initial_field(c), c.time, c.params, c.p, c.picard_tol, c.picard_max_iter);
  const PicardReport& rep = res.report;
  CsvTable iters({"iteration", "iterate_norm", "difference", "ratio"});
  for (std::size_t i = 0; i < rep.differences.size(); ++i) {
    double ratio = std::numeric_limits<double>::quiet_NaN();
    if (i > 0 && rep.differences[i - 1] > 1e-14) ratio = rep.differences[i] / rep.differences[i - 1];
    iters.add_row(std::vector<double>{static_cast<double>(i), rep.iterate_norms[i], rep.differences[i], ratio});
  }
  write_csv(out_file(c, "picard_iterations.csv"), iters);
  CsvTable summary({"quantity", "value"});
  auto add = [&](const std::string& name, double v) { summary.add_row({name, format_double(v)}); };
  add("data_norm", rep.data_norm);
  add("eta_measured", rep.eta_measured);
  add("residual", rep.residual);
  add("iterations", rep.iterations);
  add("converged", rep.converged ? 1.0 : 0.0);
  add("fp_norm", fp_norm(res.solution, c.p, c.params.omega));
  write_csv(out_file(c, "picard_summary.csv"), summary);
  write_snapshot(out_file(c, "picard_final.cbsv"), res.solution[res.solution.size() - 1],
                 c.params.nu, c.params.omega);
  std::printf("%s", summary.render().c_str());
  return rep.converged ? kPass : kFail;
}

int cmd_verify(const Common& common, const std::string& suite) {
  const Config c = resolve(common);
  if (!is_suite(suite)) {
    std::fprintf(stderr, "error: unknown suite '%s'\n", suite.c_str());
    return kConfigError;
  }
  const SuiteResult r = run_suite(suite, SuiteOptions{c.seed, c.ensemble_size});
  write_suite(r, c.output_dir);
  for (const auto& chk : r.checks) {
    std::printf("%-4s %s = %s in [%s, %s]\n", chk.pass ? "ok" : "FAIL", chk.name.c_str(),
                format_double(chk.value).c_str(), format_double(chk.lower).c_str(),
                format_double(chk.upper).c_str());
  }
  std::printf("suite %s: %s\n", suite.c_str(), r.passed() ? "pass" : "FAIL");
  return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotating Navier-Stokes spectral toolkit"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON configuration file");
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
  };
  std::string input;
  std::string suite;
  CLI::App* analyze = app.add_subcommand("analyze", "norms of a snapshot or configured field");
  add_common(analyze);
  analyze->add_option("--input", input, "snapshot file (defaults to the configured data)");
  CLI::App* propagate = app.add_subcommand("propagate", "linear Stokes-Coriolis evolution");
  add_common(propagate);
  CLI::App* simulate = app.add_subcommand("simulate", "nonlinear integrating-factor run");
  add_common(simulate);
  CLI::App* picard = app.add_subcommand("picard", "fixed-point construction of the mild solution");
  add_common(picard);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", suite, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  for (CLI::App* sub : {analyze, propagate, simulate, picard, verify}) {
    if (sub->count("--seed") > 0) common.seed = seed;
  }

  int code = kPass;
  try {
    if (*analyze) code = cmd_analyze(common, input);
    if (*propagate) code = cmd_propagate(common);
    if (*simulate) code = cmd_simulate(common);
    if (*picard) code = cmd_picard(common);
    if (*verify) code = cmd_verify(common, suite);
  } catch (const ConfigError& e) {
    flush_warnings();
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    flush_warnings();
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    flush_warnings();
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFail;
  }
  flush_warnings();
  return code;
}
