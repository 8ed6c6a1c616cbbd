#pragma once

#include <cmath>
#include <limits>
#include <string_view>

namespace embnorm {

/// An exponent p in [1, inf], its conjugate p* (1/p + 1/p* = 1) and the
/// constant m = (p*+1)^(-1/p*), with m = 1 at p = 1 and m = 1/2 at p = inf.
struct ExponentPair {
    double p = 2.0;
    double p_star = 2.0;
    double m = 0.0;

    bool is_one() const { return p == 1.0; }
    bool is_inf() const { return std::isinf(p); }

    static ExponentPair from_p(double p);

    /// Accepts a decimal ("2", "1.5"), a fraction ("3/2") or "inf".
    static ExponentPair parse(std::string_view text);
};

} // namespace embnorm
