#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "render.hpp"
#include "ssclaim/error.hpp"
#include "ssclaim/service.hpp"
#include "ssclaim/version.hpp"

namespace {

using ssclaim::service::json;
using ssclaim::cli::Command;

enum ExitCode { kOk = 0, kUsage = 2, kDataError = 3, kSolverFailure = 4 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_number(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double x = std::stod(text, &used);
        if (used == text.size() && std::isfinite(x)) return x;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + flag + ": '" + text + "' is not a number");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
    return parts;
}

// "a", "a,b,c" or an inclusive sweep "lo:hi:step".
json parse_values(const std::string& text, const std::string& flag) {
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw UsageError("--" + flag + ": sweep must be lo:hi:step");
        const double lo = parse_number(parts[0], flag);
        const double hi = parse_number(parts[1], flag);
        const double step = parse_number(parts[2], flag);
        if (!(step > 0.0) || hi < lo) throw UsageError("--" + flag + ": sweep needs lo <= hi and step > 0");
        const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
        if (count > 100000) throw UsageError("--" + flag + ": sweep too long");
        json values = json::array();
        for (long i = 0; i <= count; ++i) values.push_back(lo + static_cast<double>(i) * step);
        return values;
    }
    const auto parts = split(text, ',');
    if (parts.empty()) throw UsageError("--" + flag + ": empty value");
    if (parts.size() == 1) return parse_number(parts[0], flag);
    json values = json::array();
    for (const auto& part : parts) values.push_back(parse_number(part, flag));
    return values;
}

json as_list(json value) {
    return value.is_array() ? value : json::array({value});
}

std::filesystem::path cola_data_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("COLA_DATA_PATH"); env && *env) return env;
    if (std::filesystem::exists(ssclaim::kDefaultColaDataPath)) return ssclaim::kDefaultColaDataPath;
    return ssclaim::kInstalledColaDataPath;
}

struct Options {
    std::string p = "0.08";
    std::string q;
    std::string r;
    std::string K;
    std::string n;
    std::string from;
    std::string to;
    std::string format = "text";
    std::string data_file;
    std::string step = "0.5";
    std::string mode = "maximin";
};

int run(Command command, const Options& opt) {
    const auto format = ssclaim::cli::parse_format(opt.format);
    const double p = parse_number(opt.p, "p");
    json response;

    switch (command) {
        case Command::Breakeven:
        case Command::Critical: {
            json request = {{"p", p},
                            {"q", as_list(parse_values(opt.q.empty() ? "0,0.025,0.037" : opt.q, "q"))},
                            {"K", as_list(parse_values(opt.K.empty() ? "1:8:1" : opt.K, "K"))}};
            response = command == Command::Breakeven ? ssclaim::service::breakeven(request)
                                                     : ssclaim::service::critical(request);
            break;
        }
        case Command::GainCurve: {
            json request = {{"K", parse_number(opt.K, "K")},
                            {"p", p},
                            {"q", parse_number(opt.q.empty() ? "0.025" : opt.q, "q")},
                            {"r", parse_number(opt.r, "r")},
                            {"n_from", parse_number(opt.from.empty() ? "0.5" : opt.from, "from")},
                            {"n_to", parse_number(opt.to.empty() ? "120" : opt.to, "to")},
                            {"step", parse_number(opt.step, "step")}};
            response = ssclaim::service::gain_curve(request);
            break;
        }
        case Command::Optimize: {
            json request = {{"mode", opt.mode},
                            {"p", p},
                            {"q", parse_number(opt.q.empty() ? "0.025" : opt.q, "q")},
                            {"r", parse_values(opt.r, "r")}};
            if (opt.mode == "at-age") {
                if (opt.n.empty()) throw UsageError("--mode at-age requires --n");
                request["n"] = parse_values(opt.n, "n");
            } else if (!opt.n.empty()) {
                throw UsageError("--n is only valid with --mode at-age");
            }
            response = ssclaim::service::optimize(request);
            break;
        }
        case Command::Cola: {
            auto year = [](const std::string& text, const char* flag) {
                const double y = parse_number(text, flag);
                if (y != std::floor(y)) throw UsageError(std::string("--") + flag + " must be a year");
                return static_cast<int>(y);
            };
            json request = {{"from", year(opt.from, "from")}, {"to", year(opt.to, "to")}};
            const auto series = ssclaim::load_series(cola_data_path(opt.data_file));
            response = ssclaim::service::cola_average(request, series);
            break;
        }
    }
    ssclaim::cli::render(std::cout, command, format, response);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social Security claiming-age calculator: break-even points, critical market "
                 "rates and optimal claiming offsets"};
    app.set_version_flag("--version", std::string(ssclaim::kVersion));
    app.require_subcommand(1);

    Options opt;
    std::optional<Command> chosen;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", opt.p, "delayed-credit / early-penalty rate")->capture_default_str();
        sub->add_option("--format", opt.format, "text, csv or json")->capture_default_str();
    };

    auto* breakeven = app.add_subcommand("breakeven", "break-even years after 70 for K = 1..8");
    add_common(breakeven);
    breakeven->add_option("--q", opt.q, "COLA rate(s), comma separated [0,0.025,0.037]");
    breakeven->add_option("--K", opt.K, "claiming offset(s) [1:8:1]");
    breakeven->callback([&] { chosen = Command::Breakeven; });

    auto* critical = app.add_subcommand("critical", "critical (n*, r*) for K = 1..8");
    add_common(critical);
    critical->add_option("--q", opt.q, "COLA rate(s), comma separated [0,0.025,0.037]");
    critical->add_option("--K", opt.K, "claiming offset(s) [1:8:1]");
    critical->callback([&] { chosen = Command::Critical; });

    auto* curve = app.add_subcommand("gain-curve", "sample the relative gain over n");
    add_common(curve);
    curve->add_option("--K", opt.K, "claiming offset (years before 70)")->required();
    curve->add_option("--q", opt.q, "COLA rate [0.025]");
    curve->add_option("--r", opt.r, "market return rate")->required();
    curve->add_option("--from", opt.from, "first n [0.5]");
    curve->add_option("--to", opt.to, "last n [120]");
    curve->add_option("--step", opt.step, "n step")->capture_default_str();
    curve->callback([&] { chosen = Command::GainCurve; });

    auto* optimize = app.add_subcommand("optimize", "optimal claiming offset K_opt");
    add_common(optimize);
    optimize->add_option("--mode", opt.mode, "maximin or at-age")->capture_default_str();
    optimize->add_option("--n", opt.n, "years after 70 (at-age), value, list or lo:hi:step");
    optimize->add_option("--q", opt.q, "COLA rate [0.025]");
    optimize->add_option("--r", opt.r, "market return, value, list or lo:hi:step")->required();
    optimize->callback([&] { chosen = Command::Optimize; });

    auto* cola = app.add_subcommand("cola", "geometric-average COLA over a year window");
    add_common(cola);
    cola->add_option("--from", opt.from, "first year")->required();
    cola->add_option("--to", opt.to, "last year")->required();
    cola->add_option("--data-file", opt.data_file, "CSV of <year>,<rate> records");
    cola->callback([&] { chosen = Command::Cola; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run(*chosen, opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ssclaim::service::RequestError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ssclaim::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ssclaim::RangeError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const ssclaim::ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const ssclaim::NoBracketError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kSolverFailure;
    } catch (const ssclaim::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kSolverFailure;
    }
}
