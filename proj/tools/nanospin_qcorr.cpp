// nanospin-qcorr: parameter sweeps of pair entanglement and discord for
// spin-1/2 gas in a nanopore, plus analytic-vs-exact verification.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nanospin/errors.hpp"
#include "nanospin/sweep.hpp"

namespace {

using namespace nanospin;

std::vector<int> parse_special(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad special-time index '" + item + "'");
    }
    if (used != item.size() || l < 0) throw UsageError("bad special-time index '" + item + "'");
    out.push_back(l);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int emit(const sweep::SweepConfig& config, const sweep::Table& table, const std::string& path) {
  if (path.empty() || path == "-") {
    sweep::write_table(std::cout, config, table);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  sweep::write_table(out, config, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and quantum discord of spin pairs in a nanopore spin gas"};
  app.set_version_flag("--version", "nanospin-qcorr v" + std::string(sweep::kVersion));
  app.require_subcommand(0, 1);

  std::string quantity = "all", spins_text, beta_range, temp_range, tau_range, engine = "analytic",
              format = "csv", out_path;
  double omega0 = physical::kDefaultLarmorFrequency;
  int max_spins = 10;
  unsigned threads = 0;

  app.add_option("--quantity", quantity,
                 "concurrence | discord | geometric_discord | correlations | all")
      ->capture_default_str();
  app.add_option("--N", spins_text, "spin counts: 6 | 3,4,5 | 3-9 | inf");
  auto* beta_opt = app.add_option("--beta-range", beta_range, "inverse temperature lo:hi:step");
  auto* temp_opt = app.add_option("--temp-range", temp_range, "temperature in K lo:hi:step");
  beta_opt->excludes(temp_opt);
  app.add_option("--omega0", omega0, "Larmor frequency in rad/s")->capture_default_str();
  app.add_option("--tau-range", tau_range,
                 "dimensionless time a*t as lo:hi:step, or special:<l>[,<l>...] for "
                 "tau = (1+2l) pi/2");
  app.add_option("--tau", tau_range, "alias of --tau-range");
  app.add_option("--engine", engine, "analytic | oracle | both")->capture_default_str();
  app.add_option("--format", format, "csv | json")->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--max-oracle-spins", max_spins, "dense oracle size limit")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "compare the analytic model with the dense oracle");
  std::string verify_spins = "2-9", verify_betas = "0.5,1,3,10";
  int tau_points = 32;
  double tolerance = 1e-10, discord_tolerance = 1e-6, corruption = 0.0;
  bool skip_discord = false;
  verify_cmd->add_option("--N", verify_spins, "spin counts (finite only)")->capture_default_str();
  verify_cmd->add_option("--betas", verify_betas, "comma list of beta values")->capture_default_str();
  verify_cmd->add_option("--tau-points", tau_points, "tau grid points over [0, 2 pi)")
      ->capture_default_str();
  verify_cmd->add_option("--tolerance", tolerance)->capture_default_str();
  verify_cmd->add_option("--discord-tolerance", discord_tolerance)->capture_default_str();
  verify_cmd->add_flag("--skip-discord", skip_discord, "omit the optimizer-based discord check");
  verify_cmd->add_option("--inject-corruption", corruption,
                         "test hook: shift the analytic p before comparing")
      ->group("");
  verify_cmd->add_option("--max-oracle-spins", max_spins)->capture_default_str();
  verify_cmd->add_option("--threads", threads)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) {
      sweep::VerifyConfig cfg;
      cfg.spins.clear();
      for (const auto s : sweep::parse_spins(verify_spins)) {
        if (s.is_limit()) throw UsageError("verify needs finite N");
        cfg.spins.push_back(static_cast<int>(s.value()));
      }
      cfg.betas.clear();
      for (const auto& item : CLI::detail::split(verify_betas, ','))
        cfg.betas.push_back(sweep::parse_range(item).lo);
      cfg.tau_points = tau_points;
      cfg.tolerance = tolerance;
      cfg.discord_tolerance = discord_tolerance;
      cfg.include_discord = !skip_discord;
      cfg.corruption = corruption;
      cfg.limits.max_spins = max_spins;
      cfg.threads = threads;
      const auto report = sweep::verify(cfg);
      sweep::write_report(std::cout, report);
      return report.passed() ? 0 : 1;
    }

    if (spins_text.empty()) throw UsageError("--N is required");
    if (beta_range.empty() && temp_range.empty())
      throw UsageError("one of --beta-range or --temp-range is required");

    sweep::SweepConfig cfg;
    cfg.quantity = sweep::parse_quantity(quantity);
    cfg.spins = sweep::parse_spins(spins_text);
    if (!beta_range.empty()) {
      cfg.temperature.kind = sweep::TemperatureAxis::Kind::Beta;
      cfg.temperature.range = sweep::parse_range(beta_range);
    } else {
      cfg.temperature.kind = sweep::TemperatureAxis::Kind::Kelvin;
      cfg.temperature.range = sweep::parse_range(temp_range);
    }
    cfg.temperature.omega0 = omega0;
    if (tau_range.rfind("special:", 0) == 0)
      cfg.tau.special = parse_special(tau_range.substr(8));
    else if (!tau_range.empty())
      cfg.tau.range = sweep::parse_range(tau_range);
    cfg.engine = sweep::parse_engine(engine);
    cfg.format = sweep::parse_format(format);
    cfg.limits.max_spins = max_spins;
    cfg.threads = threads;

    const auto table = sweep::run_sweep(cfg);
    return emit(cfg, table, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
