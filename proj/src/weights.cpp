#include <embnorm/weights.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace embnorm {
namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

WeightScheme::WeightScheme(Variant v) : variant_(std::move(v)) {
    std::visit(
        [](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) {
                require(!w.gammas.empty(), "product weights: empty gamma sequence");
                for (double g : w.gammas)
                    require(g > 0.0, "product weights: gammas must be strictly positive");
            } else if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                require(w.omega > 0.0, "finite-order weights: omega must be positive");
                require(w.q >= 1, "finite-order weights: q must be >= 1");
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                require(w.omega > 0.0, "finite-diameter weights: omega must be positive");
                require(w.q >= 1, "finite-diameter weights: q must be >= 1");
            } else if constexpr (std::is_same_v<T, PodWeights>) {
                require(w.c > 0.0, "POD weights: c must be positive");
                require(w.beta1 > 0.0 && w.beta1 < w.beta2,
                        "POD weights: require 0 < beta1 < beta2");
            } else if constexpr (std::is_same_v<T, ExplicitWeights>) {
                require(w.dim >= 1, "explicit weights: dimension must be >= 1");
                std::vector<SubsetMask> support;
                support.reserve(w.table.size());
                for (const auto& [bits, g] : w.table) {
                    require(g > 0.0, "explicit weights: weights must be strictly positive");
                    require((bits >> w.dim) == 0,
                            "explicit weights: subset exceeds the stated dimension");
                    support.push_back(SubsetMask{bits, w.dim});
                }
                require(w.table.count(0) == 1,
                        "explicit weights: gamma of the empty set must be given");
                require(is_downward_closed(support),
                        "explicit weights: support is not downward closed");
            }
        },
        variant_);
}

std::string WeightScheme::kind() const {
    return std::visit(
        [](const auto& w) -> std::string {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) return "product";
            else if constexpr (std::is_same_v<T, FiniteOrderWeights>) return "fow";
            else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) return "fdw";
            else if constexpr (std::is_same_v<T, PodWeights>) return "pod";
            else return "explicit";
        },
        variant_);
}

std::string WeightScheme::describe() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) {
                os << "product(gammas=";
                for (std::size_t j = 0; j < w.gammas.size(); ++j)
                    os << (j ? "," : "") << w.gammas[j];
                os << ")";
            } else if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                os << "fow(omega=" << w.omega << ",q=" << w.q << ")";
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                os << "fdw(omega=" << w.omega << ",q=" << w.q << ")";
            } else if constexpr (std::is_same_v<T, PodWeights>) {
                os << "pod(c=" << w.c << ",beta1=" << w.beta1 << ",beta2=" << w.beta2 << ")";
            } else {
                os << "explicit(" << w.table.size() << " sets, s=" << w.dim << ")";
            }
        },
        variant_);
    return os.str();
}

double weight(const WeightScheme& scheme, const SubsetMask& u) {
    return std::visit(
        [&](const auto& w) -> double {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) {
                require(u.dim <= static_cast<int>(w.gammas.size()),
                        "product weights: dimension exceeds the stored gamma sequence");
                double g = 1.0;
                std::uint64_t rest = u.bits;
                while (rest) {
                    const int j = std::countr_zero(rest);
                    g *= w.gammas[static_cast<std::size_t>(j)];
                    rest &= rest - 1;
                }
                return g;
            } else if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                const int k = u.cardinality();
                return k <= w.q ? std::pow(w.omega, k) : 0.0;
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                return diameter(u) <= w.q ? std::pow(w.omega, u.cardinality()) : 0.0;
            } else if constexpr (std::is_same_v<T, PodWeights>) {
                const int k = u.cardinality();
                if (k > 20) return std::exp(log_weight(WeightScheme{w}, u));
                double g = 1.0;
                for (int i = 2; i <= k; ++i) g *= static_cast<double>(i);
                g = std::pow(g, w.beta1);
                std::uint64_t rest = u.bits;
                while (rest) {
                    const int j = std::countr_zero(rest) + 1;
                    g *= w.c / std::pow(static_cast<double>(j), w.beta2);
                    rest &= rest - 1;
                }
                return g;
            } else {
                const auto it = w.table.find(u.bits);
                return it == w.table.end() ? 0.0 : it->second;
            }
        },
        scheme.variant());
}

double log_weight(const WeightScheme& scheme, const SubsetMask& u) {
    return std::visit(
        [&](const auto& w) -> double {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) {
                require(u.dim <= static_cast<int>(w.gammas.size()),
                        "product weights: dimension exceeds the stored gamma sequence");
                double lg = 0.0;
                std::uint64_t rest = u.bits;
                while (rest) {
                    const int j = std::countr_zero(rest);
                    lg += std::log(w.gammas[static_cast<std::size_t>(j)]);
                    rest &= rest - 1;
                }
                return lg;
            } else if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                const int k = u.cardinality();
                return k <= w.q ? k * std::log(w.omega)
                                : -std::numeric_limits<double>::infinity();
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                return diameter(u) <= w.q
                           ? u.cardinality() * std::log(w.omega)
                           : -std::numeric_limits<double>::infinity();
            } else if constexpr (std::is_same_v<T, PodWeights>) {
                const int k = u.cardinality();
                double lg = w.beta1 * log_factorial(k);
                std::uint64_t rest = u.bits;
                while (rest) {
                    const int j = std::countr_zero(rest) + 1;
                    lg += std::log(w.c) - w.beta2 * std::log(static_cast<double>(j));
                    rest &= rest - 1;
                }
                return lg;
            } else {
                const auto it = w.table.find(u.bits);
                return it == w.table.end() ? -std::numeric_limits<double>::infinity()
                                           : std::log(it->second);
            }
        },
        scheme.variant());
}

namespace {

std::vector<SubsetMask> cardinality_capped_sets(int s, int q) {
    std::vector<SubsetMask> out;
    out.push_back(SubsetMask{0, s});
    // Grow each cardinality class from the previous one by appending a
    // higher coordinate; every set of size k <= q appears exactly once.
    std::vector<std::uint64_t> current{0};
    for (int k = 1; k <= std::min(q, s); ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t base : current) {
            const int hi = base ? 64 - std::countl_zero(base) : 0;
            for (int j = hi; j < s; ++j) next.push_back(base | (std::uint64_t{1} << j));
        }
        for (std::uint64_t b : next) out.push_back(SubsetMask{b, s});
        current = std::move(next);
    }
    return out;
}

std::vector<SubsetMask> diameter_capped_sets(int s, int q) {
    std::vector<SubsetMask> out;
    out.push_back(SubsetMask{0, s});
    for (int i = 0; i < s; ++i) out.push_back(SubsetMask{std::uint64_t{1} << i, s});
    for (int ell = 1; ell <= std::min(q, s - 1); ++ell) {
        for (int i = 0; i + ell < s; ++i) {
            const std::uint64_t ends =
                (std::uint64_t{1} << i) | (std::uint64_t{1} << (i + ell));
            const std::uint64_t middle_all =
                ell >= 2 ? (((std::uint64_t{1} << (ell - 1)) - 1) << (i + 1)) : 0;
            for_each_submask(middle_all,
                             [&](std::uint64_t mid) { out.push_back(SubsetMask{ends | mid, s}); });
        }
    }
    return out;
}

} // namespace

std::vector<SubsetMask> active_sets(const WeightScheme& scheme, int s) {
    std::vector<SubsetMask> out = std::visit(
        [&](const auto& w) -> std::vector<SubsetMask> {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ProductWeights>) {
                require(s <= static_cast<int>(w.gammas.size()),
                        "product weights: s exceeds the stored gamma sequence");
                return enumerate_subsets(s);
            } else if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                return cardinality_capped_sets(s, w.q);
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                return diameter_capped_sets(s, w.q);
            } else if constexpr (std::is_same_v<T, PodWeights>) {
                return enumerate_subsets(s);
            } else {
                require(s == w.dim, "explicit weights: dimension mismatch");
                std::vector<SubsetMask> sets;
                sets.reserve(w.table.size());
                for (const auto& [bits, g] : w.table) sets.push_back(SubsetMask{bits, s});
                return sets;
            }
        },
        scheme.variant());
    std::sort(out.begin(), out.end(),
              [](const SubsetMask& a, const SubsetMask& b) { return a.bits < b.bits; });
    return out;
}

std::uint64_t active_set_count(const WeightScheme& scheme, int s) {
    return std::visit(
        [&](const auto& w) -> std::uint64_t {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, FiniteOrderWeights>) {
                std::uint64_t n = 0;
                for (int k = 0; k <= std::min(w.q, s); ++k) n += binomial(s, k);
                return n;
            } else if constexpr (std::is_same_v<T, FiniteDiameterWeights>) {
                std::uint64_t n = static_cast<std::uint64_t>(s) + 1;
                for (int ell = 1; ell <= std::min(w.q, s - 1); ++ell)
                    n += count_by_diameter(s, ell);
                return n;
            } else if constexpr (std::is_same_v<T, ExplicitWeights>) {
                return w.table.size();
            } else {
                if (s > 62) return std::numeric_limits<std::uint64_t>::max();
                return std::uint64_t{1} << s;
            }
        },
        scheme.variant());
}

WeightScheme load_explicit_weights(std::istream& in, int s) {
    ExplicitWeights w;
    w.dim = s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string subset_spec;
        if (!(ls >> subset_spec)) continue; // blank line
        double g;
        if (!(ls >> g))
            throw std::invalid_argument("weight file line " + std::to_string(lineno) +
                                        ": missing weight value");
        std::string trailing;
        if (ls >> trailing)
            throw std::invalid_argument("weight file line " + std::to_string(lineno) +
                                        ": trailing tokens");
        std::uint64_t bits = 0;
        if (subset_spec != "empty") {
            std::istringstream ss(subset_spec);
            std::string coord;
            while (std::getline(ss, coord, ',')) {
                int j;
                try {
                    std::size_t pos = 0;
                    j = std::stoi(coord, &pos);
                    if (pos != coord.size()) throw std::invalid_argument(coord);
                } catch (const std::exception&) {
                    throw std::invalid_argument("weight file line " + std::to_string(lineno) +
                                                ": bad coordinate '" + coord + "'");
                }
                if (j < 1 || j > s)
                    throw std::invalid_argument("weight file line " + std::to_string(lineno) +
                                                ": coordinate " + std::to_string(j) +
                                                " outside [1," + std::to_string(s) + "]");
                bits |= std::uint64_t{1} << (j - 1);
            }
        }
        if (!w.table.emplace(bits, g).second)
            throw std::invalid_argument("weight file line " + std::to_string(lineno) +
                                        ": duplicate subset");
    }
    return WeightScheme{std::move(w)};
}

WeightScheme load_explicit_weights_file(const std::string& path, int s) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weight file: " + path);
    return load_explicit_weights(in, s);
}

} // namespace embnorm
