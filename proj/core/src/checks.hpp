#pragma once

#include <cmath>
#include <string>

#include "ssclaim/error.hpp"

namespace ssclaim::detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

inline void require_finite(double x, const char* name) {
    require(std::isfinite(x), std::string(name) + " must be finite");
}

inline void require_positive(double x, const char* name) {
    require_finite(x, name);
    require(x > 0.0, std::string(name) + " must be > 0");
}

inline void require_non_negative(double x, const char* name) {
    require_finite(x, name);
    require(x >= 0.0, std::string(name) + " must be >= 0");
}

// Rates are annual fractions: p > -1 keeps (1+p)^K defined.
inline void require_rate_above_minus_one(double x, const char* name) {
    require_finite(x, name);
    require(x > -1.0, std::string(name) + " must be > -1");
}

}  // namespace ssclaim::detail
