#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nanospin/discord.hpp"
#include "nanospin/exact_oracle.hpp"
#include "nanospin/nanopore_model.hpp"

namespace nanospin::sweep {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Quantity { Concurrence, Discord, GeometricDiscord, Correlations, All };
enum class Engine { Analytic, Oracle, Both };
enum class Format { Csv, Json };

/// Closed range lo, lo + step, ... <= hi (one point when lo == hi).
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// "lo:hi:step" or a single value. Throws UsageError.
Range parse_range(std::string_view text);
/// Comma list of integers >= 2, "a-b" spans, or "inf". Throws UsageError.
std::vector<SpinCount> parse_spins(std::string_view text);
Quantity parse_quantity(std::string_view text);
Engine parse_engine(std::string_view text);
Format parse_format(std::string_view text);

struct TemperatureAxis {
  enum class Kind { Beta, Kelvin };
  Kind kind = Kind::Beta;
  Range range;
  double omega0 = physical::kDefaultLarmorFrequency;
};

struct TauAxis {
  /// Either a numeric range or a list of special-time indices l.
  Range range{0.0, 0.0, 1.0};
  std::vector<int> special;
};

struct SweepConfig {
  Quantity quantity = Quantity::All;
  std::vector<SpinCount> spins;
  TemperatureAxis temperature;
  TauAxis tau;
  Engine engine = Engine::Analytic;
  Format format = Format::Csv;
  DiscordOptions discord;
  oracle::Limits limits;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Throws UsageError for empty axes, ResourceLimitError when the oracle engine
/// cannot handle a requested N.
void validate(const SweepConfig& config);

/// One row per (N, temperature, tau) point in that nesting order. Columns:
/// N, beta, T_K, tau, then the quantity columns; the Both engine appends
/// `<col>_oracle` and `<col>_absdiff` after each analytic column.
Table run_sweep(const SweepConfig& config);

/// 17 significant digits, shortest round-trip form for specials ("inf").
std::string format_double(double v);

void write_csv(std::ostream& out, const SweepConfig& config, const Table& table);
void write_json(std::ostream& out, const SweepConfig& config, const Table& table);
void write_table(std::ostream& out, const SweepConfig& config, const Table& table);

/// Inverse of write_csv (comment lines skipped).
Table read_csv(std::istream& in);

struct VerifyConfig {
  std::vector<int> spins{2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<double> betas{0.5, 1.0, 3.0, 10.0};
  int tau_points = 32;
  double tolerance = 1e-10;
  double discord_tolerance = 1e-6;
  bool include_discord = true;
  /// Added to the analytic p before comparison; nonzero values must fail.
  double corruption = 0.0;
  DiscordOptions discord;
  oracle::Limits limits;
  unsigned threads = 0;
};

struct Discrepancy {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

struct VerifyReport {
  std::vector<Discrepancy> checks;
  std::size_t points = 0;
  bool passed() const;
};

/// Analytic model against the dense oracle over the configured grid.
VerifyReport verify(const VerifyConfig& config);

void write_report(std::ostream& out, const VerifyReport& report);

}  // namespace nanospin::sweep
