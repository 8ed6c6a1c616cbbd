#include <embnorm/exponent.hpp>

#include <charconv>
#include <stdexcept>
#include <string>

namespace embnorm {

ExponentPair ExponentPair::from_p(double p) {
    if (std::isnan(p) || p < 1.0)
        throw std::domain_error("ExponentPair: p must lie in [1, inf]");
    // p* overflows as p -> 1; clamp to the exact endpoint.
    if (p < 1.0 + 1e-12) p = 1.0;

    ExponentPair e;
    e.p = p;
    if (p == 1.0) {
        e.p_star = std::numeric_limits<double>::infinity();
        e.m = 1.0;
    } else if (std::isinf(p)) {
        e.p_star = 1.0;
        e.m = 0.5;
    } else {
        e.p_star = p / (p - 1.0);
        e.m = std::pow(e.p_star + 1.0, -1.0 / e.p_star);
    }
    return e;
}

ExponentPair ExponentPair::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return from_p(std::numeric_limits<double>::infinity());

    const auto slash = text.find('/');
    auto to_double = [](std::string_view sv) {
        std::string s(sv);
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("ExponentPair: cannot parse '" + s + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("ExponentPair: cannot parse '" + s + "'");
        return v;
    };
    if (slash == std::string_view::npos) return from_p(to_double(text));

    const double num = to_double(text.substr(0, slash));
    const double den = to_double(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("ExponentPair: zero denominator");
    return from_p(num / den);
}

} // namespace embnorm
