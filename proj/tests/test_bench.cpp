#include <catch_amalgamated.hpp>

#include <sstream>

#include <roast/bench/commands.hpp>
#include <roast/bench/table.hpp>
#include <roast/bench/timing.hpp>

using namespace roast;
using Catch::Approx;

namespace {

std::string run(const RunConfig& c) {
  std::ostringstream os;
  run_command(c, os);
  return os.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split_csv(const std::string& l) {
  std::vector<std::string> out;
  std::istringstream is(l);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("doubles print with 17 significant digits", "[table]") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(kPi)) == kPi);
}

TEST_CASE("CSV layout", "[table]") {
  Table t{{"a", "b", "c", "d"}, {}};
  t.add_row({3L, 0.5, std::string("x"), true});
  std::ostringstream os;
  write_csv(os, t, {"meta one", "meta two"});
  CHECK(os.str() == "# meta one\n# meta two\na,b,c,d\n3,0.5,x,true\n");
  CHECK_THROWS_AS(t.add_row({1L}), InvalidArgument);
  const nlohmann::json j = table_to_json(t);
  CHECK(j["rows"][0]["a"] == 3);
  CHECK(j["rows"][0]["d"] == true);
}

TEST_CASE("median timing is positive and repeats short calls", "[timing]") {
  long calls = 0;
  const double t = median_seconds([&] { ++calls; }, 5);
  CHECK(t > 0.0);
  CHECK(calls > 5);
  CHECK(once_seconds([] {}) >= 0.0);
}

TEST_CASE("config validation", "[config]") {
  RunConfig c;
  c.command = "nope";
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.command = "rank-report";
  validate(c);
  c.w = 0.5;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.w = 0.25;
  c.format = "xml";
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.format.clear();
  c.command = "build";
  CHECK_THROWS_AS(validate(c), InvalidArgument);  // needs --out
  c.output_path = "x.bin";
  c.r = 600;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.command = "recover";
  c.r = 5;
  c.m = 100;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  CHECK(effective_format(c) == "csv");
  c.command = "verify";
  CHECK(effective_format(c) == "json");
}

TEST_CASE("rank report columns", "[cli]") {
  RunConfig c;
  c.command = "rank-report";
  const auto out = lines_of(run(c));
  REQUIRE(out.size() == 4 + default_scaling_sizes().size());
  CHECK(out[0].rfind("# roast ", 0) == 0);
  CHECK(out[1].rfind("# config {", 0) == 0);
  CHECK(out[3] == "n,c_n,roast_r,fst_r,dpss_capture_r,average_error_r");
  for (std::size_t i = 0; i < default_scaling_sizes().size(); ++i) {
    const auto f = split_csv(out[4 + i]);
    const long n = std::stol(f[0]);
    CHECK(n == default_scaling_sizes()[i]);
    CHECK(std::stod(f[1]) == Approx(4.0 / (kPi * kPi) * std::log(8.0 * n) + 6.0).epsilon(1e-12));
    CHECK(std::stol(f[2]) == long(std::floor(3.0 * std::log(double(n)))));
    CHECK(std::stol(f[3]) > std::stol(f[2]));
  }
}

TEST_CASE("identical configs give identical output", "[cli]") {
  RunConfig c;
  c.command = "sweep-sinusoid";
  c.n = 128;
  c.grid = 64;
  const std::string a = run(c), b = run(c);
  CHECK(a == b);
  const auto out = lines_of(a);
  CHECK(out.size() == 64 + 7);

  RunConfig d;
  d.command = "bandlimited-snr";
  d.n = 128;
  d.r_max = 8;
  d.tones = 200;
  CHECK(run(d) == run(d));
  d.format = "json";
  const auto j = nlohmann::json::parse(run(d));
  CHECK(j["rows"].size() == 9);
  CHECK(j["config"]["tones"] == 200);
}

TEST_CASE("sinusoid sweep behaviour", "[cli]") {
  const auto rows = sinusoid_sweep(256, 0.25, 10, RoastMethod::svd_fb, 1, 257);
  for (const auto& r : rows) {
    if (std::abs(r.f) >= 0.49) {
      CHECK(r.subdft <= 3.0);
      CHECK(r.dpss <= 3.0);
      CHECK(r.roast <= 3.0);
      CHECK(r.roast_randomized <= 3.0);
    }
  }
  // f = k/256 on the grid for even index offsets: in-band on-grid values are exact for Sub-DFT.
  const auto on_grid = sinusoid_sweep(256, 0.25, 10, RoastMethod::svd_fb, 1, 257);
  CHECK(on_grid[128].f == 0.0);
  CHECK(on_grid[128].subdft == std::numeric_limits<double>::infinity());
}

TEST_CASE("bandlimited SNR curve", "[cli]") {
  const auto rows = bandlimited_snr_curve(256, 0.25, 12, RoastMethod::svd_fb, 3, 500);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0].roast == rows[0].subdft);
  CHECK(rows[0].roast_randomized == rows[0].subdft);
  for (std::size_t r = 1; r < rows.size(); ++r) CHECK(rows[r].roast >= rows[r - 1].roast - 1e-9);
  CHECK(rows.back().roast >= rows.back().subdft);
}

TEST_CASE("verify negative path", "[cli]") {
  const BoundLedger l = verify_dpss_capture_at(256, 0.25, 1e-3, 1);
  CHECK_FALSE(l.all_satisfied());
  CHECK(verify_dpss_capture_at(256, 0.25, 1e-3, rank_rules::dpss_capture(256, 1e-3)).all_satisfied());

  RunConfig c;
  c.command = "verify";
  c.n = 256;
  c.r = 1;
  std::ostringstream os;
  CHECK(run_command(c, os) == 1);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["ledger"]["all_satisfied"] == false);
  const BoundLedger back = j["ledger"].get<BoundLedger>();
  CHECK(back.entries.size() == l.entries.size());
}

TEST_CASE("build writes a loadable basis", "[cli]") {
  RunConfig c;
  c.command = "build";
  c.n = 128;
  c.r = 6;
  c.output_path = (std::filesystem::temp_directory_path() / "roast_cli_build.bin").string();
  run(c);
  const RoastBasis b = load_basis(c.output_path);
  CHECK(b.r() == 6);
  CHECK(b.v() == build_roast(128, 0.25, 6, RoastMethod::svd_fb).v());
  c.method = RoastMethod::randomized;
  c.p = 7;
  c.r.reset();
  run(c);
  CHECK(load_basis(c.output_path).sketch_width() == 7);
  std::remove(c.output_path.c_str());
}

TEST_CASE("scaling and recovery commands run at small sizes", "[cli]") {
  RunConfig c;
  c.command = "scaling-bench";
  c.n_list = {64, 128};
  c.tones = 50;
  c.timing_samples = 3;
  const auto out = lines_of(run(c));
  CHECK(out.back().rfind("128,", 0) == 0);

  RunConfig r;
  r.command = "recover";
  r.n = 64;
  r.seeds = 2;
  const auto rec = lines_of(run(r));
  long data = 0;
  for (const auto& l : rec) data += !l.empty() && l[0] != '#';
  CHECK(data == 1 + 2 * 5);
}
