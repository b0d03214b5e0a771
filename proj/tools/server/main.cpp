#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include <httplib.h>

#include "http_service.hpp"
#include "ssclaim/error.hpp"
#include "ssclaim/version.hpp"

namespace {

std::filesystem::path cola_data_path() {
    if (const char* env = std::getenv("COLA_DATA_PATH"); env && *env) return env;
    if (std::filesystem::exists(ssclaim::kDefaultColaDataPath)) return ssclaim::kDefaultColaDataPath;
    return ssclaim::kInstalledColaDataPath;
}

}  // namespace

int main() {
    ssclaim::http::BindAddress bind;
    ssclaim::http::ServiceState state;
    try {
        const char* env = std::getenv("BIND_ADDR");
        bind = ssclaim::http::parse_bind_address(env ? env : "");
        state.cola_series = ssclaim::load_series(cola_data_path());
    } catch (const std::exception& e) {
        std::cerr << "ssclaim-server: " << e.what() << '\n';
        return 3;
    }

    httplib::Server server;
    ssclaim::http::install_routes(server, state);

    std::thread warm([&state] {
        if (!ssclaim::http::warm_up(state)) {
            std::cerr << "ssclaim-server: self-test failed; /healthz stays 503\n";
        }
    });

    std::cerr << "ssclaim-server " << ssclaim::kVersion << " listening on " << bind.host << ':'
              << bind.port << '\n';
    const bool ok = server.listen(bind.host, bind.port);
    warm.join();
    if (!ok) {
        std::cerr << "ssclaim-server: cannot bind " << bind.host << ':' << bind.port << '\n';
        return 1;
    }
    return 0;
}
