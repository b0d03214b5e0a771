#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ssclaim {

struct YearRate {
    int year;
    double rate;
};

/// Annual rates over contiguous, strictly increasing years.
class RateSeries {
public:
    RateSeries() = default;
    /// Throws DomainError when years are not contiguous or a rate is <= -1.
    RateSeries(std::vector<YearRate> entries, std::string source_label);

    const std::vector<YearRate>& entries() const noexcept { return entries_; }
    const std::string& source_label() const noexcept { return source_label_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    int first_year() const;
    int last_year() const;
    double rate(int year) const;

private:
    std::vector<YearRate> entries_;
    std::string source_label_;
};

/// Parses `<year>,<rate>` records (UTF-8, LF or CRLF). Lines starting with
/// '#' and blank lines are skipped; a `# source: ...` comment becomes the
/// source label. Throws ParseError with the offending line number.
RateSeries parse_series(std::istream& in, std::string_view label = {});
RateSeries parse_series(std::string_view text, std::string_view label = {});

/// Reads and parses a file; the label defaults to the path.
RateSeries load_series(const std::filesystem::path& path);

/// exp(mean(ln(1 + rate))) - 1 over the inclusive window [from_year, to_year].
/// Throws RangeError when the window is empty or outside the series.
double geometric_average(const RateSeries& series, int from_year, int to_year);

}  // namespace ssclaim
