#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ptcount/oracle.hpp"

namespace ptcount::cli {

enum class Method { formula, oracle, backtrack };

std::string to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

enum class OutputFormat { plain, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Dispatches a statistic/method pair to the evaluator behind it. For the zt
/// statistics, "formula" means the quoted closed form, which does not
/// distinguish the two variants. "backtrack" is only defined for z.
CountReport run_count(Statistic stat, Method method, int p, int q,
                      const OracleOptions& opts, int backtrack_guard);

/// plain: the decimal value alone. csv/json: stat, p, q, method, value,
/// elapsed_ms; the value is rendered as the identical decimal string in every
/// format.
std::string render_count(const CountReport& report, OutputFormat format);

}  // namespace ptcount::cli
