#pragma once

// JSON request/response layer shared by the command-line tool and the HTTP
// service, so both emit identical payloads for identical parameters.
//
// Every response has the shape
//   { "inputs_echo": {...fully defaulted inputs...},
//     "result": {...} | {"rows": [...]},
//     "warnings": [...] }
// A scalar request (single K, q, r, n) yields a single result object; any
// list-valued field yields "rows" over the cartesian product.

#include <functional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "ssclaim/cola_data.hpp"

namespace ssclaim::service {

using json = nlohmann::json;

inline constexpr double kDefaultP = 0.08;
inline constexpr double kDefaultQ = 0.025;
inline constexpr double kDefaultS0 = 1.0;
inline constexpr std::size_t kMaxSamples = 200000;

/// Malformed or invalid request field.
class RequestError : public std::invalid_argument {
public:
    RequestError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

json breakeven(const json& request);
json critical(const json& request);
json gain_curve(const json& request);
json optimize(const json& request);
json cola_average(const json& request, const RateSeries& series);

/// {"error": {"code", "message", "field"?}} plus optional diagnostics.
json error_body(const std::string& code, const std::string& message,
                const std::string& field = {});

struct Reply {
    int status = 200;
    json body;
};

/// Runs a handler and maps library exceptions to HTTP-style replies:
/// 400 for invalid input or windows, 422 for solver failures.
Reply guarded(const std::function<json()>& handler);

/// Parses a request body; malformed JSON becomes a 400 reply via RequestError.
json parse_body(const std::string& body);

/// Numeric r* for K = 1 against the closed form e^(p/e) - 1, n* = e/p.
bool self_test();

}  // namespace ssclaim::service
