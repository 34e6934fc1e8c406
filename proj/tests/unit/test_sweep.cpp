#include <doctest.h>

#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "nanospin/errors.hpp"
#include "nanospin/sweep.hpp"

using namespace nanospin;
using namespace nanospin::sweep;

namespace {

SweepConfig small_config() {
  SweepConfig config;
  config.spins = parse_spins("2,4-5");
  config.temperature.range = parse_range("0.5:3:1.25");
  config.tau.range = parse_range("0:2:0.5");
  config.threads = 1;
  return config;
}

std::string csv_of(const SweepConfig& config) {
  std::ostringstream out;
  write_csv(out, config, run_sweep(config));
  return out.str();
}

std::size_t column(const Table& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  REQUIRE(it != t.columns.end());
  return static_cast<std::size_t>(it - t.columns.begin());
}

}  // namespace

TEST_CASE("range parsing") {
  const auto r = parse_range("0:1:0.25");
  CHECK(r.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(parse_range("2.5").values() == std::vector<double>{2.5});
  CHECK(parse_range("0:0.3:0.1").values().size() == 4);
  CHECK_THROWS_AS(parse_range(""), UsageError);
  CHECK_THROWS_AS(parse_range("1:0:0.1"), UsageError);
  CHECK_THROWS_AS(parse_range("0:1:0"), UsageError);
  CHECK_THROWS_AS(parse_range("0:1:-1"), UsageError);
  CHECK_THROWS_AS(parse_range("a:b:c"), UsageError);
  CHECK_THROWS_AS(parse_range("0:1"), UsageError);
}

TEST_CASE("enum and spin parsing") {
  const auto spins = parse_spins("2,5-7,inf");
  REQUIRE(spins.size() == 5);
  CHECK(spins[0].value() == 2);
  CHECK(spins[3].value() == 7);
  CHECK(spins[4].is_limit());
  CHECK_THROWS_AS(parse_spins("1"), UsageError);
  CHECK_THROWS_AS(parse_spins("7-5"), UsageError);
  CHECK_THROWS_AS(parse_spins("x"), UsageError);

  CHECK(parse_quantity("concurrence") == Quantity::Concurrence);
  CHECK(parse_quantity("geometric_discord") == Quantity::GeometricDiscord);
  CHECK(parse_engine("both") == Engine::Both);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_quantity("entropy"), UsageError);
  CHECK_THROWS_AS(parse_engine("fast"), UsageError);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("sweep layout") {
  auto config = small_config();
  const auto table = run_sweep(config);
  CHECK(table.rows.size() == 3 * 3 * 5);
  REQUIRE(table.columns.size() >= 5);
  CHECK(table.columns[0] == "N");
  CHECK(table.columns[1] == "beta");
  CHECK(table.columns[2] == "T_K");
  CHECK(table.columns[3] == "tau");
  // N outermost, tau innermost.
  CHECK(table.rows[0][0] == 2.0);
  CHECK(table.rows[1][3] == 0.5);
  CHECK(table.rows[5][1] == 1.75);
  CHECK(table.rows[14][0] == 2.0);
  CHECK(table.rows[15][0] == 4.0);

  config.quantity = Quantity::GeometricDiscord;
  CHECK(run_sweep(config).columns ==
        std::vector<std::string>{"N", "beta", "T_K", "tau", "geometric_discord"});
  config.quantity = Quantity::Correlations;
  config.engine = Engine::Oracle;
  CHECK(run_sweep(config).columns.back() == "v_oracle");
}

TEST_CASE("output is deterministic across thread counts") {
  auto config = small_config();
  const auto serial = csv_of(config);
  CHECK(serial == csv_of(config));
  config.threads = 4;
  CHECK(serial == csv_of(config));
  CHECK(serial.rfind("# nanospin-qcorr v0.1.0\n", 0) == 0);
}

TEST_CASE("csv round trip is exact") {
  auto config = small_config();
  const auto table = run_sweep(config);
  std::ostringstream out;
  write_csv(out, config, table);
  std::istringstream in(out.str());
  const auto back = read_csv(in);
  CHECK(back.columns == table.columns);
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) CHECK(back.rows[i] == table.rows[i]);

  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("json output") {
  auto config = small_config();
  config.format = Format::Json;
  config.quantity = Quantity::Concurrence;
  std::ostringstream out;
  write_table(out, config, run_sweep(config));
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["columns"].size() == 6);
  CHECK(doc["rows"].size() == 45);
  CHECK(doc["quantity"] == "concurrence");
}

TEST_CASE("kelvin axis") {
  auto config = small_config();
  config.temperature.kind = TemperatureAxis::Kind::Kelvin;
  config.temperature.range = parse_range("0.001");
  const auto table = run_sweep(config);
  CHECK(table.rows[0][2] == 0.001);
  CHECK(table.rows[0][1] == doctest::Approx(beta_from_temperature(0.001)));
}

TEST_CASE("analytic and oracle engines agree") {
  auto config = small_config();
  config.engine = Engine::Both;
  config.quantity = Quantity::All;
  const auto table = run_sweep(config);
  for (const auto& name : table.columns) {
    if (name.size() < 8 || name.substr(name.size() - 7) != "_absdiff") continue;
    const auto idx = column(table, name);
    const double tol = name.rfind("discord", 0) == 0 || name.rfind("classical", 0) == 0 ? 1e-6 : 1e-10;
    for (const auto& row : table.rows) CHECK(row[idx] <= tol);
  }
  CHECK(table.columns[column(table, "concurrence") + 1] == "concurrence_oracle");
  CHECK(table.columns[column(table, "concurrence") + 2] == "concurrence_absdiff");
}

TEST_CASE("configuration errors") {
  auto config = small_config();
  config.engine = Engine::Oracle;
  config.spins = parse_spins("12");
  CHECK_THROWS_AS(validate(config), ResourceLimitError);
  CHECK_THROWS_AS(run_sweep(config), ResourceLimitError);
  config.limits.max_spins = 12;
  CHECK_NOTHROW(validate(config));

  config.spins = parse_spins("inf");
  CHECK_THROWS_AS(validate(config), UsageError);
  config.engine = Engine::Analytic;
  CHECK_NOTHROW(validate(config));
  config.tau.special = {0};
  CHECK_THROWS_AS(validate(config), UsageError);
  config.spins.clear();
  CHECK_THROWS_AS(validate(config), UsageError);
}

TEST_CASE("special times and the large-N limit") {
  auto config = small_config();
  config.quantity = Quantity::Correlations;
  config.spins = parse_spins("3,4");
  config.tau.special = {0, 1};
  const auto table = run_sweep(config);
  const auto tau = column(table, "tau"), p = column(table, "p"), q = column(table, "q"),
             r = column(table, "r");
  for (const auto& row : table.rows) {
    CHECK(row[p] == 0.0);
    const bool even = row[0] == 4.0;
    CHECK((even ? row[r] : row[q]) == 0.0);
    CHECK(std::fmod(row[tau], std::numbers::pi) == doctest::Approx(std::numbers::pi / 2));
  }

  config.tau.special.clear();
  config.spins = parse_spins("inf");
  config.quantity = Quantity::All;
  const auto limit = run_sweep(config);
  CHECK(std::isinf(limit.rows[0][0]));
  for (const auto& row : limit.rows) CHECK(row[column(limit, "concurrence")] == 0.0);
}

TEST_CASE("verification report") {
  VerifyConfig config;
  config.spins = {2, 3, 4};
  config.betas = {1.0, 10.0};
  config.tau_points = 8;
  config.threads = 1;
  const auto report = verify(config);
  CHECK(report.passed());
  CHECK(report.points == 3 * 2 * 8);
  std::ostringstream out;
  write_report(out, report);
  CHECK(out.str().find("FAIL") == std::string::npos);

  config.corruption = 1e-6;
  config.include_discord = false;
  const auto broken = verify(config);
  CHECK_FALSE(broken.passed());
  std::ostringstream bad;
  write_report(bad, broken);
  CHECK(bad.str().find("FAIL") != std::string::npos);
}
