#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "rotns/initial_data.hpp"
#include "rotns/io/config.hpp"
#include "rotns/io/report.hpp"
#include "rotns/io/snapshot.hpp"
#include "rotns/spectral.hpp"

using namespace rotns;

TEST_CASE("config defaults and overrides") {
  const Config d = parse_config("{}");
  CHECK(d.n == 32);
  CHECK(d.p == 2.0);
  CHECK(d.s == 0.5);
  CHECK(d.hybrid_sigma() == doctest::Approx(0.5));
  CHECK(d.time.M == 64);
  CHECK(d.data.kind == "random_solenoidal");

  const Config c = parse_config(R"({"grid": {"n": 16}, "params": {"nu": 0.5, "omega": 4},
      "norms": {"p": 4, "sigma": 0.1}, "data": {"kind": "zero"}, "seed": 7})");
  CHECK(c.n == 16);
  CHECK(c.params.nu == 0.5);
  CHECK(c.params.omega == 4.0);
  CHECK(c.hybrid_sigma() == 0.1);
  CHECK(c.seed == 7);
  CHECK(c.weight_constant() == 0.5);
  CHECK(initial_field(c).is_zero());
}

TEST_CASE("config errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"grid": {"n": 12}})"), doctest::Contains("grid.n must be a power of two"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"params": {"viscocity": 1}})"), doctest::Contains("viscocity"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"params": {"nu": -1}})"), doctest::Contains("params.nu"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"time": {"T": "long"}})"), doctest::Contains("time.T"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"grid\": "), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("random initial data has the requested L2 norm") {
  const Config c = parse_config(R"({"grid": {"n": 16}, "data": {"amplitude": 0.3}})");
  const SpectralField u = initial_field(c);
  CHECK(lp_norm(u, 2.0) == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(is_solenoidal(u));
}

TEST_CASE("snapshot round trip is bitwise") {
  const Grid g = make_grid(8, 3.0);
  SpectralField u = random_solenoidal(5, -11.0 / 6.0, 0, 1, g);
  u.set_time(0.25);
  const std::string bytes = encode_snapshot(u, 0.1, 2.0);
  CHECK(bytes.substr(0, 4) == "CBSV");
  const Snapshot s = decode_snapshot(bytes);
  CHECK(s.field == u);
  CHECK(s.field.grid() == g);
  CHECK(s.field.time() == 0.25);
  CHECK(s.nu == 0.1);
  CHECK(s.omega == 2.0);
  CHECK(encode_snapshot(s.field, s.nu, s.omega) == bytes);

  const auto path = std::filesystem::temp_directory_path() / "rotns_unit_snapshot.cbsv";
  write_snapshot(path.string(), u, 0.1, 2.0);
  CHECK(read_snapshot(path.string()).field == u);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt snapshots are rejected") {
  const Grid g = make_grid(8);
  const std::string bytes = encode_snapshot(random_solenoidal(1, -11.0 / 6.0, 0, 1, g), 1.0, 1.0);
  CHECK_THROWS_WITH(decode_snapshot(bytes.substr(0, bytes.size() - 8)), doctest::Contains("payload length mismatch"));
  std::string version = bytes;
  version[4] = 99;
  CHECK_THROWS_WITH(decode_snapshot(version), doctest::Contains("unsupported version"));
  std::string magic = bytes;
  magic[0] = 'X';
  CHECK_THROWS_WITH(decode_snapshot(magic), doctest::Contains("bad magic"));
  CHECK_THROWS(decode_snapshot(bytes.substr(0, 20)));
}

TEST_CASE("csv tables") {
  CsvTable t({"a", "b"});
  CHECK_THROWS_WITH(t.render(), doctest::Contains("no rows"));
  t.add_row(std::vector<double>{1.0, 0.1});
  t.add_row(std::vector<std::string>{"x", "y"});
  CHECK(t.render() == "a,b\n1,0.10000000000000001\nx,y\n");
  CHECK_THROWS(t.add_row(std::vector<double>{1.0}));
  CHECK(format_double(0.5) == "0.5");
}
