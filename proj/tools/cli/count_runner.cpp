#include "cli/count_runner.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ptcount/formulas.hpp"

namespace ptcount::cli {

std::string to_string(Method method) {
  switch (method) {
    case Method::formula: return "formula";
    case Method::oracle: return "oracle";
    case Method::backtrack: return "backtrack";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "formula") return Method::formula;
  if (name == "oracle") return Method::oracle;
  if (name == "backtrack") return Method::backtrack;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

namespace {

CountReport formula_report(Statistic stat, int p, int q) {
  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  report.statistic = ptcount::to_string(stat);
  report.p = p;
  report.q = q;
  report.method = "formula";
  switch (stat) {
    case Statistic::z:
      report.value = z_formula(p, q);
      break;
    case Statistic::ze:
      report.value = ze_formula(p, q);
      break;
    case Statistic::zt_perm:
    case Statistic::zt_fixed:
      report.value = zt_closed(p, q);
      break;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

CountReport run_count(Statistic stat, Method method, int p, int q,
                      const OracleOptions& opts, int backtrack_guard) {
  switch (method) {
    case Method::formula:
      return formula_report(stat, p, q);
    case Method::oracle:
      switch (stat) {
        case Statistic::z: return count_z_oracle(p, q, opts);
        case Statistic::ze: return count_ze_oracle(p, q, opts);
        case Statistic::zt_perm:
        case Statistic::zt_fixed:
          return count_zt_oracle(p, q, stat, opts);
      }
      break;
    case Method::backtrack:
      if (stat != Statistic::z)
        throw std::invalid_argument(
            "method 'backtrack' is only defined for --stat z");
      return count_z_backtrack(p, q, backtrack_guard);
  }
  throw std::invalid_argument("unknown statistic/method combination");
}

std::string render_count(const CountReport& report, OutputFormat format) {
  const std::string value = to_decimal(report.value);
  const double elapsed_ms = report.elapsed_seconds * 1000.0;
  switch (format) {
    case OutputFormat::plain:
      return value + "\n";
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "stat,p,q,method,value,elapsed_ms\n"
          << report.statistic << ',' << report.p << ',' << report.q << ','
          << report.method << ',' << value << ',' << elapsed_ms << '\n';
      return out.str();
    }
    case OutputFormat::json: {
      nlohmann::json j;
      j["stat"] = report.statistic;
      j["p"] = report.p;
      j["q"] = report.q;
      j["method"] = report.method;
      j["value"] = value;
      j["elapsed_ms"] = elapsed_ms;
      return j.dump(2) + "\n";
    }
  }
  return value + "\n";
}

}  // namespace ptcount::cli
