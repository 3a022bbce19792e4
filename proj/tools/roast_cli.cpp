#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "roast/bench/commands.hpp"
#include "roast/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ROAST: fast orthonormal approximate Slepian bases"};
  app.set_version_flag("--version", std::string(roast::kVersion));
  app.require_subcommand(1);

  roast::RunConfig cfg;
  std::string method = "svd_fb";
  std::string log_base = "natural";
  long r = -1, p = -1, m = -1;

  const std::map<std::string, std::string> about{
      {"build", "build a ROAST basis and write it to --out"},
      {"verify", "evaluate the bound checks and print the ledger"},
      {"sweep-sinusoid", "SNR of pure tones across the frequency grid"},
      {"bandlimited-snr", "SNR of random bandlimited signals against R"},
      {"scaling-bench", "precompute and apply timings over --n-list"},
      {"rank-report", "rank rules over --n-list"},
      {"recover", "compressive recovery with CG, ROAST vs the FST factor"},
  };

  for (const auto& name : roast::known_commands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--n", cfg.n, "signal length N")->capture_default_str();
    sub->add_option("--w", cfg.w, "half-bandwidth W in (0, 1/2)")->capture_default_str();
    sub->add_option("--r", r, "columns R of V");
    sub->add_option("--p", p, "sketch width P (randomized method)");
    sub->add_option("--method", method, "svd_fb | svd_fbf | randomized")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--eps", cfg.eps, "accuracy parameter")->capture_default_str();
    sub->add_option("--log-base", log_base, "natural | base2 | base10")->capture_default_str();
    sub->add_option("--format", cfg.format, "csv | json");
    sub->add_option("--out", cfg.output_path, "output path (basis file for build)");
    sub->add_option("--grid", cfg.grid, "frequency grid size")->capture_default_str();
    sub->add_option("--tones", cfg.tones, "tones in the random bandlimited signal")->capture_default_str();
    sub->add_option("--r-max", cfg.r_max, "largest R in the bandlimited sweep")->capture_default_str();
    sub->add_option("--n-list", cfg.n_list, "signal lengths for scaling/rank reports")->delimiter(',');
    sub->add_option("--m", m, "number of measurements (recover)");
    sub->add_option("--seeds", cfg.seeds, "number of seeds (recover)")->capture_default_str();
    sub->add_option("--timing-samples", cfg.timing_samples, "timing samples per measurement")->capture_default_str();
  }

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.method = roast::parse_roast_method(method);
    cfg.log_base = roast::parse_log_base(log_base);
    if (r >= 0) cfg.r = r;
    if (p >= 0) cfg.p = p;
    if (m >= 0) cfg.m = m;
    if (r < -1 || p < -1 || m < -1) throw roast::InvalidArgument("--r, --p and --m must be non-negative");

    if (cfg.command == "build" || cfg.output_path.empty()) return roast::run_command(cfg, std::cout);
    roast::validate(cfg);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw roast::Error("cannot open '" + cfg.output_path + "' for writing");
    const int status = roast::run_command(cfg, out);
    out.flush();
    if (!out) throw roast::Error("write to '" + cfg.output_path + "' failed");
    return status;
  } catch (const roast::InvalidArgument& e) {
    std::cerr << "roast: invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "roast: " << e.what() << '\n';
    return 3;
  }
}
