#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

namespace ssclaim::cli {

enum class Command { Breakeven, Critical, GainCurve, Optimize, Cola };
enum class OutputFormat { TextTable, Csv, Json };

/// Parses "text", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Fixed-point with the given number of decimals.
std::string fixed(double x, int decimals);

/// Shortest representation that round-trips.
std::string shortest(double x);

/// Renders a service response. Text tables round n to 2 decimals and rates
/// to 5; CSV and JSON carry full precision.
void render(std::ostream& out, Command command, OutputFormat format, const nlohmann::json& response);

}  // namespace ssclaim::cli
