#include "render.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ssclaim::cli {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::TextTable;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

std::string fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::vector<json> rows_of(const json& response) {
    const json& result = response.at("result");
    if (result.contains("rows")) return result.at("rows").get<std::vector<json>>();
    return {result};
}

std::vector<double> as_list(const json& value) {
    if (value.is_array()) return value.get<std::vector<double>>();
    return {value.get<double>()};
}

// Right-aligned columns separated by three spaces.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) {
            width[c] = header_[c].size();
            for (const auto& row : rows_) width[c] = std::max(width[c], row[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c > 0) out << "   ";
                out << std::setw(static_cast<int>(width[c])) << cells[c];
            }
            out << '\n';
        };
        line(header_);
        for (const auto& row : rows_) line(row);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string k_label(double K) {
    return K == static_cast<int>(K) ? std::to_string(static_cast<int>(K)) : fixed(K, 2);
}

void print_warnings(std::ostream& out, const json& response) {
    for (const json& w : response.at("warnings")) out << "warning: " << w.get<std::string>() << '\n';
}

// Wide table: one row per K, one group of columns per q.
void render_by_k_and_q(std::ostream& out, const json& response,
                       const std::vector<std::pair<std::string, std::pair<std::string, int>>>& columns) {
    const json& inputs = response.at("inputs_echo");
    const std::vector<double> qs = as_list(inputs.at("q"));
    const std::vector<double> ks = as_list(inputs.at("K"));
    std::map<std::pair<double, double>, json> by_cell;
    for (const json& row : rows_of(response)) {
        by_cell[{row.at("K").get<double>(), row.at("q").get<double>()}] = row;
    }

    std::vector<std::string> header{"K"};
    for (double q : qs) {
        for (const auto& [label, field] : columns) header.push_back(label + "(q=" + shortest(q) + ")");
    }
    TextTable table(header);
    for (double K : ks) {
        std::vector<std::string> cells{k_label(K)};
        for (double q : qs) {
            const json& row = by_cell.at({K, q});
            for (const auto& [label, field] : columns) {
                cells.push_back(fixed(row.at(field.first).get<double>(), field.second));
            }
        }
        table.add(std::move(cells));
    }
    table.print(out);
}

void render_text(std::ostream& out, Command command, const json& response) {
    const json& inputs = response.at("inputs_echo");
    switch (command) {
        case Command::Breakeven:
            out << "Break-even point n1 (years after 70), p = " << shortest(inputs.at("p").get<double>())
                << '\n';
            render_by_k_and_q(out, response, {{"n1", {"n1", 2}}});
            break;
        case Command::Critical:
            out << "Critical parameters n* (years after 70) and r*, p = "
                << shortest(inputs.at("p").get<double>()) << '\n';
            render_by_k_and_q(out, response, {{"n*", {"n_star", 2}}, {"r*", {"r_star", 5}}});
            break;
        case Command::GainCurve: {
            const json& result = response.at("result");
            out << "Relative gain g(n), K = " << k_label(result.at("K").get<double>())
                << ", p = " << shortest(result.at("p").get<double>())
                << ", q = " << shortest(result.at("q").get<double>())
                << ", r = " << shortest(result.at("r").get<double>()) << " ("
                << result.at("variant").get<std::string>() << ")\n";
            if (!result.at("n_star").is_null()) {
                out << "minimum at n* = " << fixed(result.at("n_star").get<double>(), 2) << '\n';
            }
            out << "zero crossings:";
            if (result.at("zero_crossings").empty()) out << " none";
            for (const json& n : result.at("zero_crossings")) out << ' ' << fixed(n.get<double>(), 2);
            out << '\n';
            TextTable table({"n", "g"});
            for (const json& s : result.at("samples")) {
                table.add({fixed(s.at("n").get<double>(), 2), fixed(s.at("g").get<double>(), 5)});
            }
            table.print(out);
            break;
        }
        case Command::Optimize: {
            out << "Optimal claiming offset (" << inputs.at("mode").get<std::string>()
                << "), p = " << shortest(inputs.at("p").get<double>())
                << ", q = " << shortest(inputs.at("q").get<double>()) << '\n';
            TextTable table({"r", "n", "K_opt", "claim_age", "gain", "K_floor", "gain_floor", "K_ceil",
                             "gain_ceil", "clamped"});
            for (const json& row : rows_of(response)) {
                table.add({fixed(row.at("r").get<double>(), 5), fixed(row.at("n_eval").get<double>(), 2),
                           fixed(row.at("K_opt").get<double>(), 2),
                           fixed(row.at("claim_age").get<double>(), 2),
                           fixed(row.at("gain_at_opt").get<double>(), 5),
                           k_label(row.at("K_floor").get<double>()),
                           fixed(row.at("gain_floor").get<double>(), 5),
                           k_label(row.at("K_ceil").get<double>()),
                           fixed(row.at("gain_ceil").get<double>(), 5),
                           row.at("clamped").get<bool>() ? "yes" : "no"});
            }
            table.print(out);
            break;
        }
        case Command::Cola: {
            const json& result = response.at("result");
            out << "Geometric average " << result.at("from").get<int>() << '-'
                << result.at("to").get<int>() << " (" << result.at("years").get<int>()
                << " years): " << fixed(result.at("average").get<double>(), 5) << '\n';
            out << "source: " << result.at("source").get<std::string>() << '\n';
            break;
        }
    }
    print_warnings(out, response);
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
}

void render_csv(std::ostream& out, Command command, const json& response) {
    auto num = [](const json& row, const char* field) { return shortest(row.at(field).get<double>()); };
    switch (command) {
        case Command::Breakeven:
            csv_line(out, {"K", "q", "variant", "n1"});
            for (const json& row : rows_of(response)) {
                csv_line(out, {num(row, "K"), num(row, "q"), row.at("variant").get<std::string>(),
                               num(row, "n1")});
            }
            break;
        case Command::Critical:
            csv_line(out, {"K", "q", "variant", "n_star", "r_star", "residual"});
            for (const json& row : rows_of(response)) {
                csv_line(out, {num(row, "K"), num(row, "q"), row.at("variant").get<std::string>(),
                               num(row, "n_star"), num(row, "r_star"), num(row, "residual")});
            }
            break;
        case Command::GainCurve:
            csv_line(out, {"n", "g"});
            for (const json& s : response.at("result").at("samples")) csv_line(out, {num(s, "n"), num(s, "g")});
            break;
        case Command::Optimize:
            csv_line(out, {"mode", "r", "n_eval", "K_opt", "claim_age", "gain_at_opt", "K_floor",
                           "gain_floor", "K_ceil", "gain_ceil", "clamped"});
            for (const json& row : rows_of(response)) {
                csv_line(out, {row.at("mode").get<std::string>(), num(row, "r"), num(row, "n_eval"),
                               num(row, "K_opt"), num(row, "claim_age"), num(row, "gain_at_opt"),
                               num(row, "K_floor"), num(row, "gain_floor"), num(row, "K_ceil"),
                               num(row, "gain_ceil"), row.at("clamped").get<bool>() ? "true" : "false"});
            }
            break;
        case Command::Cola: {
            const json& result = response.at("result");
            csv_line(out, {"from", "to", "years", "average"});
            csv_line(out, {std::to_string(result.at("from").get<int>()),
                           std::to_string(result.at("to").get<int>()),
                           std::to_string(result.at("years").get<int>()), num(result, "average")});
            break;
        }
    }
}

}  // namespace

void render(std::ostream& out, Command command, OutputFormat format, const json& response) {
    switch (format) {
        case OutputFormat::TextTable:
            render_text(out, command, response);
            break;
        case OutputFormat::Csv:
            render_csv(out, command, response);
            break;
        case OutputFormat::Json:
            out << response.dump(2) << '\n';
            break;
    }
}

}  // namespace ssclaim::cli
