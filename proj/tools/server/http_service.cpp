#include "http_service.hpp"

#include <charconv>
#include <stdexcept>

#include <httplib.h>

#include "ssclaim/service.hpp"
#include "ssclaim/version.hpp"

namespace ssclaim::http {

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, const service::Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), kJson);
}

template <typename Handler>
void post_json(httplib::Server& server, const char* path, Handler handler) {
    server.Post(path, [handler](const httplib::Request& req, httplib::Response& res) {
        send(res, service::guarded([&] { return handler(service::parse_body(req.body)); }));
    });
}

}  // namespace

void install_routes(httplib::Server& server, ServiceState& state) {
    server.Get("/healthz", [&state](const httplib::Request&, httplib::Response& res) {
        const bool ready = state.ready.load();
        res.status = ready ? 200 : 503;
        res.set_content(
            service::json{{"status", ready ? "ok" : "starting"}, {"version", kVersion}}.dump(),
            kJson);
    });

    post_json(server, "/v1/breakeven", [](const service::json& req) { return service::breakeven(req); });
    post_json(server, "/v1/critical", [](const service::json& req) { return service::critical(req); });
    post_json(server, "/v1/gain-curve", [](const service::json& req) { return service::gain_curve(req); });
    post_json(server, "/v1/optimize", [](const service::json& req) { return service::optimize(req); });
    post_json(server, "/v1/cola-average", [&state](const service::json& req) {
        return service::cola_average(req, state.cola_series);
    });

    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
        const std::string code = res.status == 404 ? "not_found" : "http_error";
        res.set_content(service::error_body(code, "no route for " + req.method + " " + req.path).dump(),
                        kJson);
        return httplib::Server::HandlerResponse::Handled;
    });
}

bool warm_up(ServiceState& state) {
    const bool ok = service::self_test();
    state.ready.store(ok);
    return ok;
}

BindAddress parse_bind_address(const std::string& text) {
    BindAddress out;
    if (text.empty()) return out;
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) {
        out.host = text;
        return out;
    }
    if (colon > 0) out.host = text.substr(0, colon);
    const std::string port = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
    if (ec != std::errc{} || ptr != port.data() + port.size() || value < 0 || value > 65535) {
        throw std::invalid_argument("bad port in BIND_ADDR '" + text + "'");
    }
    out.port = value;
    return out;
}

}  // namespace ssclaim::http
