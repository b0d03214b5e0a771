#include "ssclaim/cola_data.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "checks.hpp"

namespace ssclaim {

RateSeries::RateSeries(std::vector<YearRate> entries, std::string source_label)
    : entries_(std::move(entries)), source_label_(std::move(source_label)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        detail::require(std::isfinite(entries_[i].rate) && entries_[i].rate > -1.0,
                        "rate for " + std::to_string(entries_[i].year) + " must be > -1");
        if (i > 0) {
            detail::require(entries_[i].year == entries_[i - 1].year + 1,
                            "years must be contiguous and increasing");
        }
    }
}

int RateSeries::first_year() const {
    if (entries_.empty()) throw RangeError("empty rate series");
    return entries_.front().year;
}

int RateSeries::last_year() const {
    if (entries_.empty()) throw RangeError("empty rate series");
    return entries_.back().year;
}

double RateSeries::rate(int year) const {
    if (entries_.empty() || year < first_year() || year > last_year()) {
        throw RangeError("year " + std::to_string(year) + " not in series");
    }
    return entries_[static_cast<std::size_t>(year - first_year())].rate;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

constexpr std::string_view kSourceTag = "source:";

}  // namespace

RateSeries parse_series(std::istream& in, std::string_view label) {
    std::vector<YearRate> entries;
    std::string source{label};
    std::string raw;
    std::size_t line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view comment = trim(line.substr(1));
            if (source.empty() && comment.substr(0, kSourceTag.size()) == kSourceTag) {
                source = std::string(trim(comment.substr(kSourceTag.size())));
            }
            continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError("expected '<year>,<rate>'", line_no);
        }
        const std::string_view year_text = trim(line.substr(0, comma));
        const std::string_view rate_text = trim(line.substr(comma + 1));

        int year = 0;
        if (!parse_number(year_text, year)) {
            throw ParseError("bad year '" + std::string(year_text) + "'", line_no);
        }
        double rate = 0.0;
        if (!parse_number(rate_text, rate) || !std::isfinite(rate)) {
            throw ParseError("bad rate '" + std::string(rate_text) + "'", line_no);
        }
        if (rate <= -1.0) {
            throw ParseError("rate must be > -1 (decimal fraction)", line_no);
        }
        if (!entries.empty()) {
            const int prev = entries.back().year;
            if (year == prev) {
                throw ParseError("duplicate year " + std::to_string(year), line_no);
            }
            if (year < prev) {
                throw ParseError("year " + std::to_string(year) + " out of order after " +
                                     std::to_string(prev),
                                 line_no);
            }
            if (year > prev + 1) {
                throw ParseError("gap in years: " + std::to_string(prev + 1) + "-" +
                                     std::to_string(year - 1) + " missing",
                                 line_no);
            }
        }
        entries.push_back({year, rate});
    }
    if (entries.empty()) throw ParseError("no records", line_no);
    return RateSeries(std::move(entries), std::move(source));
}

RateSeries parse_series(std::string_view text, std::string_view label) {
    std::istringstream in{std::string(text)};
    return parse_series(in, label);
}

RateSeries load_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RangeError("cannot open rate series '" + path.string() + "'");
    RateSeries parsed = parse_series(in);
    if (!parsed.source_label().empty()) return parsed;
    return RateSeries(parsed.entries(), path.string());
}

double geometric_average(const RateSeries& series, int from_year, int to_year) {
    if (from_year > to_year) {
        throw RangeError("window start " + std::to_string(from_year) + " is after end " +
                         std::to_string(to_year));
    }
    if (series.empty() || from_year < series.first_year() || to_year > series.last_year()) {
        std::ostringstream msg;
        msg << "window " << from_year << "-" << to_year << " outside series";
        if (!series.empty()) msg << " " << series.first_year() << "-" << series.last_year();
        throw RangeError(msg.str());
    }
    double log_sum = 0.0;
    for (int year = from_year; year <= to_year; ++year) log_sum += std::log1p(series.rate(year));
    return std::expm1(log_sum / static_cast<double>(to_year - from_year + 1));
}

}  // namespace ssclaim
