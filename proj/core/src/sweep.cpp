#include "nanospin/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "nanospin/entanglement.hpp"
#include "nanospin/errors.hpp"
#include "nanospin/geometric_discord.hpp"

namespace nanospin::sweep {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return v;
}

long parse_long(std::string_view text, std::string_view what) {
  long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  // Static interleaved partition; each index is written by exactly one thread.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Concurrence: return "concurrence";
    case Quantity::Discord: return "discord";
    case Quantity::GeometricDiscord: return "geometric_discord";
    case Quantity::Correlations: return "correlations";
    case Quantity::All: return "all";
  }
  return "?";
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Analytic: return "analytic";
    case Engine::Oracle: return "oracle";
    case Engine::Both: return "both";
  }
  return "?";
}

bool wants(Quantity selected, Quantity q) { return selected == Quantity::All || selected == q; }

std::vector<std::string> quantity_columns(Quantity selected) {
  std::vector<std::string> cols;
  if (wants(selected, Quantity::Correlations)) cols.insert(cols.end(), {"p", "q", "r", "u", "v"});
  if (wants(selected, Quantity::Concurrence))
    cols.insert(cols.end(), {"concurrence", "entanglement_of_formation"});
  if (wants(selected, Quantity::Discord))
    cols.insert(cols.end(), {"discord", "mutual_information", "classical_correlation"});
  if (wants(selected, Quantity::GeometricDiscord)) cols.emplace_back("geometric_discord");
  return cols;
}

struct GridPoint {
  SpinCount spins;
  double beta;
  double kelvin;
  double tau;
  std::optional<int> special;
};

std::vector<double> analytic_values(const SweepConfig& cfg, const GridPoint& pt) {
  const CorrelationSet corr =
      pt.special ? special_time_correlations(pt.spins, pt.beta, *pt.special)
                 : correlations({pt.spins, pt.beta, pt.tau});
  const CSDensityMatrix cs = cs_from_correlations(corr);
  std::vector<double> out;
  if (wants(cfg.quantity, Quantity::Correlations))
    out.insert(out.end(), {corr.p, corr.q, corr.r, corr.u, corr.v});
  if (wants(cfg.quantity, Quantity::Concurrence)) {
    const double c = concurrence_from_correlations(corr);
    out.insert(out.end(), {c, entanglement_of_formation(c)});
  }
  if (wants(cfg.quantity, Quantity::Discord)) {
    if (pt.spins.is_limit()) {
      const double q = discord_bell_diagonal(corr.q);
      const double info = mutual_information(cs.to_dense());
      out.insert(out.end(), {q, info, info - q});
    } else {
      const auto d = discord_numeric(cs.to_dense(), cfg.discord);
      out.insert(out.end(), {d.discord, d.mutual_information, d.classical_correlation});
    }
  }
  if (wants(cfg.quantity, Quantity::GeometricDiscord)) out.push_back(geometric_discord_cs(cs));
  return out;
}

std::vector<double> oracle_values(const SweepConfig& cfg, const GridPoint& pt) {
  const auto state =
      oracle::nanopore_state(static_cast<int>(pt.spins.value()), pt.beta, pt.tau, cfg.limits);
  const DensityMatrix4 pair = oracle::partial_trace_pair(state);
  std::vector<double> out;
  if (wants(cfg.quantity, Quantity::Correlations)) {
    const auto m = oracle::measure_correlations(state).values;
    out.insert(out.end(), {m.p, m.q, m.r, m.u, m.v});
  }
  if (wants(cfg.quantity, Quantity::Concurrence)) {
    const auto c = concurrence_numeric(pair);
    out.insert(out.end(), {c.concurrence, c.entanglement_of_formation});
  }
  if (wants(cfg.quantity, Quantity::Discord)) {
    const auto d = discord_numeric(pair, cfg.discord);
    out.insert(out.end(), {d.discord, d.mutual_information, d.classical_correlation});
  }
  if (wants(cfg.quantity, Quantity::GeometricDiscord))
    out.push_back(geometric_discord_generic(pair));
  return out;
}

std::vector<GridPoint> grid(const SweepConfig& cfg) {
  std::vector<GridPoint> points;
  const auto temps = cfg.temperature.range.values();
  const auto tau_values = cfg.tau.range.values();
  for (const auto spins : cfg.spins) {
    for (const double t : temps) {
      GridPoint base{spins, 0.0, 0.0, 0.0, std::nullopt};
      if (cfg.temperature.kind == TemperatureAxis::Kind::Beta) {
        base.beta = t;
        base.kelvin = temperature_from_beta(t, cfg.temperature.omega0);
      } else {
        base.kelvin = t;
        base.beta = beta_from_temperature(t, cfg.temperature.omega0);
      }
      if (!cfg.tau.special.empty()) {
        for (const int l : cfg.tau.special) {
          GridPoint pt = base;
          pt.tau = special_time_tau(l);
          pt.special = l;
          points.push_back(pt);
        }
      } else {
        for (const double tau : tau_values) {
          GridPoint pt = base;
          pt.tau = tau;
          points.push_back(pt);
        }
      }
    }
  }
  return points;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  for (const auto part : split(line, ',')) out.emplace_back(part);
  return out;
}

}  // namespace

std::vector<double> Range::values() const {
  std::vector<double> out;
  if (hi == lo) return {lo};
  const auto count = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12) + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

Range parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  Range r;
  if (parts.size() == 1) {
    r.lo = r.hi = parse_double(parts[0], "range value");
    return r;
  }
  if (parts.size() != 3) throw UsageError("range must be lo:hi:step, got '" + std::string(text) + "'");
  r.lo = parse_double(parts[0], "range lo");
  r.hi = parse_double(parts[1], "range hi");
  r.step = parse_double(parts[2], "range step");
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !std::isfinite(r.step))
    throw UsageError("range bounds must be finite");
  if (r.hi < r.lo) throw UsageError("range hi < lo in '" + std::string(text) + "'");
  if (!(r.step > 0)) throw UsageError("range step must be positive in '" + std::string(text) + "'");
  return r;
}

std::vector<SpinCount> parse_spins(std::string_view text) {
  std::vector<SpinCount> out;
  for (const auto item : split(text, ',')) {
    if (item == "inf") {
      out.push_back(SpinCount::thermodynamic_limit());
      continue;
    }
    const auto dash = item.find('-');
    try {
      if (dash != std::string_view::npos && dash > 0) {
        const long lo = parse_long(item.substr(0, dash), "N");
        const long hi = parse_long(item.substr(dash + 1), "N");
        if (hi < lo) throw UsageError("empty N span '" + std::string(item) + "'");
        for (long n = lo; n <= hi; ++n) out.push_back(SpinCount::finite(n));
      } else {
        out.push_back(SpinCount::finite(parse_long(item, "N")));
      }
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("no spin counts given");
  return out;
}

Quantity parse_quantity(std::string_view text) {
  for (auto q : {Quantity::Concurrence, Quantity::Discord, Quantity::GeometricDiscord,
                 Quantity::Correlations, Quantity::All})
    if (quantity_name(q) == text) return q;
  throw UsageError("unknown quantity '" + std::string(text) + "'");
}

Engine parse_engine(std::string_view text) {
  for (auto e : {Engine::Analytic, Engine::Oracle, Engine::Both})
    if (engine_name(e) == text) return e;
  throw UsageError("unknown engine '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

void validate(const SweepConfig& config) {
  if (config.spins.empty()) throw UsageError("no spin counts given");
  if (config.temperature.range.values().empty()) throw UsageError("empty temperature range");
  if (config.tau.special.empty() && config.tau.range.values().empty())
    throw UsageError("empty tau range");
  if (config.temperature.kind == TemperatureAxis::Kind::Beta && config.temperature.range.lo < 0)
    throw UsageError("beta must be >= 0");
  if (config.temperature.kind == TemperatureAxis::Kind::Kelvin &&
      !(config.temperature.range.lo > 0))
    throw UsageError("temperatures must be positive");
  if (!(config.temperature.omega0 > 0)) throw UsageError("omega0 must be positive");
  for (const int l : config.tau.special)
    if (l < 0) throw UsageError("special time index must be >= 0");
  for (const auto spins : config.spins) {
    if (spins.is_limit()) {
      if (config.engine != Engine::Analytic)
        throw UsageError("N = inf is only available with the analytic engine");
      if (!config.tau.special.empty())
        throw UsageError("special times are excluded from the N = inf limit");
    } else if (config.engine != Engine::Analytic && spins.value() > config.limits.max_spins) {
      throw ResourceLimitError("oracle engine limited to N <= " +
                               std::to_string(config.limits.max_spins));
    }
  }
}

Table run_sweep(const SweepConfig& config) {
  validate(config);
  const auto points = grid(config);
  const auto qcols = quantity_columns(config.quantity);

  Table table;
  table.columns = {"N", "beta", "T_K", "tau"};
  for (const auto& c : qcols) {
    switch (config.engine) {
      case Engine::Analytic: table.columns.push_back(c); break;
      case Engine::Oracle: table.columns.push_back(c + "_oracle"); break;
      case Engine::Both:
        table.columns.insert(table.columns.end(), {c, c + "_oracle", c + "_absdiff"});
        break;
    }
  }

  table.rows.resize(points.size());
  parallel_for(points.size(), config.threads, [&](std::size_t i) {
    const auto& pt = points[i];
    std::vector<double> row{
        pt.spins.is_limit() ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(pt.spins.value()),
        pt.beta, pt.kelvin, pt.tau};
    std::vector<double> analytic, exact;
    if (config.engine != Engine::Oracle) analytic = analytic_values(config, pt);
    if (config.engine != Engine::Analytic) exact = oracle_values(config, pt);
    for (std::size_t k = 0; k < qcols.size(); ++k) {
      switch (config.engine) {
        case Engine::Analytic: row.push_back(analytic[k]); break;
        case Engine::Oracle: row.push_back(exact[k]); break;
        case Engine::Both:
          row.insert(row.end(), {analytic[k], exact[k], std::abs(analytic[k] - exact[k])});
          break;
      }
    }
    table.rows[i] = std::move(row);
  });
  return table;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const SweepConfig& config, const Table& table) {
  out << "# nanospin-qcorr v" << kVersion << '\n';
  out << "# quantity=" << quantity_name(config.quantity) << " engine=" << engine_name(config.engine)
      << " omega0_rad_per_s=" << format_double(config.temperature.omega0) << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepConfig& config, const Table& table) {
  nlohmann::json doc;
  doc["generator"] = "nanospin-qcorr v" + std::string(kVersion);
  doc["quantity"] = quantity_name(config.quantity);
  doc["engine"] = engine_name(config.engine);
  doc["omega0_rad_per_s"] = config.temperature.omega0;
  doc["columns"] = table.columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto jrow = nlohmann::json::array();
    for (const double v : row) {
      if (std::isfinite(v))
        jrow.push_back(v);
      else
        jrow.push_back(format_double(v));
    }
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(1) << '\n';
}

void write_table(std::ostream& out, const SweepConfig& config, const Table& table) {
  if (config.format == Format::Json)
    write_json(out, config, table);
  else
    write_csv(out, config, table);
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_line(line);
    if (header) {
      table.columns = std::move(fields);
      header = false;
      continue;
    }
    if (fields.size() != table.columns.size()) throw UsageError("ragged CSV row: " + line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, "CSV field"));
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

VerifyReport verify(const VerifyConfig& config) {
  if (config.spins.empty() || config.betas.empty() || config.tau_points < 1)
    throw UsageError("verify grid is empty");
  for (const int n : config.spins) {
    if (n < 2) throw UsageError("verify needs N >= 2");
    if (n > config.limits.max_spins)
      throw ResourceLimitError("oracle limited to N <= " + std::to_string(config.limits.max_spins));
  }

  struct Point {
    int spins;
    double beta;
    double tau;
  };
  std::vector<Point> points;
  for (const int n : config.spins)
    for (const double b : config.betas)
      for (int k = 0; k < config.tau_points; ++k)
        points.push_back({n, b, 2.0 * std::numbers::pi * k / config.tau_points});

  VerifyReport report;
  report.points = points.size();
  report.checks = {
      {"correlations", 0.0, config.tolerance},
      {"correlation_swap_symmetry", 0.0, config.tolerance},
      {"reduced_density", 0.0, config.tolerance},
      {"concurrence_closed_form", 0.0, config.tolerance},
      {"concurrence_cs", 0.0, config.tolerance},
      {"lambda1_maximal", 0.0, config.tolerance},
      {"geometric_discord", 0.0, config.tolerance},
      {"structural_zeros", 0.0, std::min(config.tolerance, 1e-12)},
  };
  if (config.include_discord) report.checks.push_back({"discord", 0.0, config.discord_tolerance});

  std::vector<std::vector<double>> errors(points.size());
  // A corrupted analytic state that the closed forms reject fails that comparison.
  constexpr double kRejected = std::numeric_limits<double>::infinity();
  auto evaluate = [&](const Point& pt) {
    CorrelationSet corr = correlations({SpinCount::finite(pt.spins), pt.beta, pt.tau});
    corr.p += config.corruption;
    const CSDensityMatrix cs = cs_from_correlations(corr);

    const auto state = oracle::nanopore_state(pt.spins, pt.beta, pt.tau, config.limits);
    const DensityMatrix4 pair = oracle::partial_trace_pair(state);
    const auto measured = oracle::measure_correlations(state);
    const auto& m = measured.values;

    std::vector<double> e;
    e.push_back(std::max({std::abs(corr.p - m.p), std::abs(corr.q - m.q), std::abs(corr.r - m.r),
                          std::abs(corr.u - m.u), std::abs(corr.v - m.v)}));
    e.push_back(std::max(std::abs(m.p - measured.p_swapped), std::abs(m.u - measured.u_swapped)));
    e.push_back((cs.matrix() - pair.matrix()).cwiseAbs().maxCoeff());

    const auto numeric = concurrence_numeric(pair);
    e.push_back(std::abs(concurrence_from_correlations(corr) - numeric.concurrence));
    try {
      const auto closed = concurrence_cs(cs);
      e.push_back(std::abs(closed.concurrence - numeric.concurrence));
      e.push_back(std::max(0.0, *std::max_element(closed.lambdas.begin(), closed.lambdas.end()) -
                                    closed.lambdas[0]));
    } catch (const InconsistentParametersError&) {
      e.insert(e.end(), 2, kRejected);
    }
    e.push_back(std::abs(geometric_discord_cs(cs) - geometric_discord_generic(pair)));

    const auto alpha = spin_expansion_coefficients(pair);
    e.push_back(std::max({std::abs(alpha[0][3]), std::abs(alpha[3][0]), std::abs(alpha[1][2]),
                          std::abs(alpha[2][1]), std::abs(alpha[3][1]), std::abs(alpha[1][3]),
                          std::abs(m.v)}));
    if (config.include_discord) {
      const double exact = discord_numeric(pair, config.discord).discord;
      try {
        e.push_back(std::abs(discord_numeric(cs.to_dense(), config.discord).discord - exact));
      } catch (const InvalidInputError&) {
        e.push_back(kRejected);
      }
    }
    return e;
  };
  parallel_for(points.size(), config.threads,
               [&](std::size_t i) { errors[i] = evaluate(points[i]); });

  for (const auto& e : errors)
    for (std::size_t k = 0; k < e.size(); ++k)
      report.checks[k].max_error = std::max(report.checks[k].max_error, e[k]);
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  out << "# nanospin-qcorr v" << kVersion << " verify: " << report.points << " grid points\n";
  for (const auto& c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " max_error=" << format_double(c.max_error)
        << " tolerance=" << format_double(c.tolerance) << '\n';
  }
  out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
}

}  // namespace nanospin::sweep
