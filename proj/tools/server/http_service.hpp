#pragma once

#include <atomic>
#include <string>

#include "ssclaim/cola_data.hpp"

namespace httplib {
class Server;
}

namespace ssclaim::http {

struct ServiceState {
    RateSeries cola_series;
    std::atomic<bool> ready{false};
};

/// GET /healthz and the POST /v1/* compute endpoints. /healthz answers 503
/// until `ready` is set.
void install_routes(httplib::Server& server, ServiceState& state);

/// Runs the core self-test and flips `ready` when it passes.
bool warm_up(ServiceState& state);

struct BindAddress {
    std::string host = "127.0.0.1";
    int port = 8080;
};

/// Parses "host:port" (or ":port", or "host"); throws std::invalid_argument.
BindAddress parse_bind_address(const std::string& text);

}  // namespace ssclaim::http
