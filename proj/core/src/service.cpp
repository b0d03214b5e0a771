#include "ssclaim/service.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "ssclaim/benefits.hpp"
#include "ssclaim/critical.hpp"
#include "ssclaim/error.hpp"
#include "ssclaim/gain.hpp"
#include "ssclaim/optimize.hpp"
#include "ssclaim/types.hpp"

namespace ssclaim::service {

namespace {

// A numeric field that may be a scalar or a list; scalar-ness is echoed back.
struct NumberField {
    std::vector<double> values;
    bool is_list = false;

    json echo() const { return is_list ? json(values) : json(values.front()); }
};

const json& require_object(const json& request) {
    if (!request.is_object()) throw RequestError("", "request body must be a JSON object");
    return request;
}

void reject_unknown(const json& request, std::initializer_list<const char*> allowed) {
    const std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& item : request.items()) {
        if (!names.contains(item.key())) {
            throw RequestError(item.key(), "unknown field '" + item.key() + "'");
        }
    }
}

double as_number(const json& value, const std::string& field) {
    if (!value.is_number()) throw RequestError(field, field + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw RequestError(field, field + " must be finite");
    return x;
}

NumberField number_field(const json& request, const std::string& field,
                         std::optional<std::vector<double>> fallback, bool fallback_is_list = false) {
    NumberField out;
    if (!request.contains(field) || request.at(field).is_null()) {
        if (!fallback) throw RequestError(field, field + " is required");
        out.values = *fallback;
        out.is_list = fallback_is_list;
        return out;
    }
    const json& value = request.at(field);
    if (value.is_array()) {
        if (value.empty()) throw RequestError(field, field + " must not be an empty list");
        for (const json& v : value) out.values.push_back(as_number(v, field));
        out.is_list = true;
    } else {
        out.values.push_back(as_number(value, field));
    }
    return out;
}

double scalar_field(const json& request, const std::string& field, std::optional<double> fallback) {
    NumberField f = number_field(request, field,
                                 fallback ? std::optional(std::vector<double>{*fallback})
                                          : std::nullopt);
    if (f.is_list) throw RequestError(field, field + " must be a single number");
    return f.values.front();
}

int year_field(const json& request, const std::string& field) {
    if (!request.contains(field)) throw RequestError(field, field + " is required");
    const json& value = request.at(field);
    if (!value.is_number_integer()) throw RequestError(field, field + " must be an integer year");
    return value.get<int>();
}

void check_K(const NumberField& K) {
    for (double k : K.values) {
        if (!(k > 0.0 && k <= kMaxClaimOffset)) throw RequestError("K", "K must be in (0,8]");
    }
}

void check_p(double p) {
    if (!(p > 0.0 && p < 1.0)) throw RequestError("p", "p must be in (0,1)");
}

void check_rates(const NumberField& field, const char* name) {
    for (double x : field.values) {
        if (!(x >= 0.0 && x < 1.0)) {
            throw RequestError(name, std::string(name) + " must be in [0,1)");
        }
    }
}

void check_positive(const NumberField& field, const char* name) {
    for (double x : field.values) {
        if (!(x > 0.0)) throw RequestError(name, std::string(name) + " must be > 0");
    }
}

void warn_near_singular(const NumberField& q, json& warnings) {
    for (double x : q.values) {
        if (x > 0.0 && cola_negligible(x)) {
            std::ostringstream msg;
            msg << "q=" << x << " is below " << kColaEpsilon << " and is treated as 0";
            warnings.push_back(msg.str());
        }
    }
}

json respond(json inputs, json rows, bool scalar, json warnings) {
    json out;
    out["inputs_echo"] = std::move(inputs);
    out["result"] = scalar ? rows.at(0) : json{{"rows", std::move(rows)}};
    out["warnings"] = std::move(warnings);
    return out;
}

std::vector<double> all_offsets() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

}  // namespace

json breakeven(const json& request) {
    require_object(request);
    reject_unknown(request, {"p", "q", "K"});
    const double p = scalar_field(request, "p", kDefaultP);
    const NumberField q = number_field(request, "q", std::vector<double>{kDefaultQ});
    const NumberField K = number_field(request, "K", all_offsets(), true);
    check_p(p);
    check_rates(q, "q");
    check_K(K);

    json warnings = json::array();
    warn_near_singular(q, warnings);
    json rows = json::array();
    for (double k : K.values) {
        for (double qq : q.values) {
            rows.push_back({{"K", k},
                            {"q", qq},
                            {"variant", to_string(variant_for(qq))},
                            {"n1", breakeven_cola(k, p, qq)}});
        }
    }
    json inputs = {{"p", p}, {"q", q.echo()}, {"K", K.echo()}};
    return respond(std::move(inputs), std::move(rows), !q.is_list && !K.is_list, std::move(warnings));
}

json critical(const json& request) {
    require_object(request);
    reject_unknown(request, {"p", "q", "K"});
    const double p = scalar_field(request, "p", kDefaultP);
    const NumberField q = number_field(request, "q", std::vector<double>{kDefaultQ});
    const NumberField K = number_field(request, "K", all_offsets(), true);
    check_p(p);
    check_rates(q, "q");
    check_K(K);

    json warnings = json::array();
    warn_near_singular(q, warnings);
    json rows = json::array();
    for (double k : K.values) {
        for (double qq : q.values) {
            const CriticalPoint cp = r_star_cola(k, p, qq);
            rows.push_back({{"K", k},
                            {"q", qq},
                            {"variant", to_string(cp.variant)},
                            {"n_star", cp.n_star},
                            {"r_star", cp.r_star},
                            {"residual", cp.residual}});
        }
    }
    json inputs = {{"p", p}, {"q", q.echo()}, {"K", K.echo()}};
    return respond(std::move(inputs), std::move(rows), !q.is_list && !K.is_list, std::move(warnings));
}

json gain_curve(const json& request) {
    require_object(request);
    reject_unknown(request, {"K", "p", "q", "r", "n_from", "n_to", "step", "S0"});
    NumberField K{{scalar_field(request, "K", std::nullopt)}};
    check_K(K);
    const double p = scalar_field(request, "p", kDefaultP);
    const NumberField q{{scalar_field(request, "q", kDefaultQ)}};
    const NumberField r{{scalar_field(request, "r", std::nullopt)}};
    const double n_from = scalar_field(request, "n_from", 0.5);
    const double n_to = scalar_field(request, "n_to", 120.0);
    const double step = scalar_field(request, "step", 0.5);
    const double S0 = scalar_field(request, "S0", kDefaultS0);
    check_p(p);
    check_rates(q, "q");
    check_rates(r, "r");
    check_positive(NumberField{{n_from}}, "n_from");
    check_positive(NumberField{{step}}, "step");
    check_positive(NumberField{{S0}}, "S0");
    if (!(n_to >= n_from)) throw RequestError("n_to", "n_to must be >= n_from");
    if ((n_to - n_from) / step + 1.0 > static_cast<double>(kMaxSamples)) {
        throw RequestError("step", "too many samples requested");
    }

    json warnings = json::array();
    warn_near_singular(q, warnings);
    const RateParams params{p, q.values.front(), r.values.front()};
    const double k = K.values.front();
    const GainCurve curve = sample_gain_curve(k, params, n_from, n_to, step);

    json samples = json::array();
    for (const GainSample& s : curve.samples) samples.push_back({{"n", s.n}, {"g", s.g}});
    const bool has_minimum = params.r > params.q && params.r > 0.0;

    json result = {{"variant", to_string(curve.variant)},
                   {"K", k},
                   {"p", p},
                   {"q", params.q},
                   {"r", params.r},
                   {"samples", std::move(samples)},
                   {"zero_crossings", gain_zero_crossings(k, params)},
                   {"n_star", has_minimum ? json(n_star(params.q, params.r)) : json(nullptr)}};
    json inputs = {{"K", k}, {"p", p}, {"q", params.q}, {"r", params.r},
                   {"n_from", n_from}, {"n_to", n_to}, {"step", step}, {"S0", S0}};
    json rows = json::array({std::move(result)});
    return respond(std::move(inputs), std::move(rows), true, std::move(warnings));
}

json optimize(const json& request) {
    require_object(request);
    reject_unknown(request, {"mode", "n", "p", "q", "r"});
    std::string mode = "maximin";
    if (request.contains("mode")) {
        if (!request.at("mode").is_string()) throw RequestError("mode", "mode must be a string");
        mode = request.at("mode").get<std::string>();
    }
    if (mode != "maximin" && mode != "at-age") {
        throw RequestError("mode", "mode must be 'maximin' or 'at-age'");
    }
    const bool at_age = mode == "at-age";
    const double p = scalar_field(request, "p", kDefaultP);
    const NumberField q{{scalar_field(request, "q", kDefaultQ)}};
    const NumberField r = number_field(request, "r", std::nullopt);
    NumberField n;
    if (at_age) {
        n = number_field(request, "n", std::nullopt);
        check_positive(n, "n");
    } else if (request.contains("n")) {
        throw RequestError("n", "n is only accepted with mode 'at-age'");
    }
    check_p(p);
    check_rates(q, "q");
    check_rates(r, "r");
    const double qq = q.values.front();
    for (double rr : r.values) {
        if (!(rr > qq)) throw RequestError("r", "r must exceed q for optimization");
    }

    json warnings = json::array();
    warn_near_singular(q, warnings);
    json rows = json::array();
    auto emit = [&](double rr, const OptResult& opt) {
        if (opt.clamped) {
            std::ostringstream msg;
            msg << "optimum clamped to K=" << opt.K_opt << " at r=" << rr << ", n=" << opt.n_eval;
            warnings.push_back(msg.str());
        }
        rows.push_back({{"mode", mode},
                        {"r", rr},
                        {"n_eval", opt.n_eval},
                        {"K_opt", opt.K_opt},
                        {"claim_age", 70.0 - opt.K_opt},
                        {"gain_at_opt", opt.gain_at_opt},
                        {"K_floor", opt.K_floor},
                        {"gain_floor", opt.gain_floor},
                        {"K_ceil", opt.K_ceil},
                        {"gain_ceil", opt.gain_ceil},
                        {"clamped", opt.clamped}});
    };
    for (double rr : r.values) {
        if (at_age) {
            for (double nn : n.values) emit(rr, k_opt_at_n(nn, p, qq, rr));
        } else {
            emit(rr, k_opt_maximin(p, qq, rr));
        }
    }

    json inputs = {{"mode", mode}, {"p", p}, {"q", qq}, {"r", r.echo()}};
    if (at_age) inputs["n"] = n.echo();
    const bool scalar = !r.is_list && !(at_age && n.is_list);
    return respond(std::move(inputs), std::move(rows), scalar, std::move(warnings));
}

json cola_average(const json& request, const RateSeries& series) {
    require_object(request);
    reject_unknown(request, {"from", "to"});
    const int from = year_field(request, "from");
    const int to = year_field(request, "to");
    const double average = geometric_average(series, from, to);
    json row = {{"from", from},
                {"to", to},
                {"years", to - from + 1},
                {"average", average},
                {"source", series.source_label()}};
    return respond({{"from", from}, {"to", to}}, json::array({std::move(row)}), true,
                   json::array());
}

json error_body(const std::string& code, const std::string& message, const std::string& field) {
    json err = {{"code", code}, {"message", message}};
    if (!field.empty()) err["field"] = field;
    return {{"error", std::move(err)}};
}

Reply guarded(const std::function<json()>& handler) {
    try {
        return {200, handler()};
    } catch (const RequestError& e) {
        return {400, error_body("invalid_request", e.what(), e.field())};
    } catch (const DomainError& e) {
        return {400, error_body("domain_error", e.what())};
    } catch (const RangeError& e) {
        return {400, error_body("range_error", e.what())};
    } catch (const ParseError& e) {
        return {400, error_body("parse_error", e.what())};
    } catch (const NoBracketError& e) {
        json body = error_body("no_bracket", e.what());
        body["error"]["bracket"] = {e.lo(), e.hi()};
        body["error"]["values"] = {e.f_lo(), e.f_hi()};
        return {422, std::move(body)};
    } catch (const SolverError& e) {
        return {422, error_body("solver_failure", e.what())};
    } catch (const json::exception& e) {
        return {400, error_body("invalid_request", e.what())};
    } catch (const std::exception& e) {
        return {500, error_body("internal", e.what())};
    }
}

json parse_body(const std::string& body) {
    json parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded()) throw RequestError("", "malformed JSON body");
    return parsed;
}

bool self_test() {
    constexpr double p = 0.08;
    const CriticalPoint cp = r_star_no_cola(1.0, p);
    const double r_exact = std::exp(p / std::numbers::e) - 1.0;
    const double n_exact = std::numbers::e / p;
    return std::fabs(cp.r_star - r_exact) < 1e-10 && std::fabs(cp.n_star - n_exact) < 1e-10;
}

}  // namespace ssclaim::service
