#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <embnorm/subset_lattice.hpp>

namespace embnorm {

/// gamma_u = prod_{j in u} gamma_j
struct ProductWeights {
    std::vector<double> gammas;
};

/// gamma_u = omega^|u| if |u| <= q, else 0
struct FiniteOrderWeights {
    double omega = 1.0;
    int q = 1;
};

/// gamma_u = omega^|u| if diam(u) <= q, else 0
struct FiniteDiameterWeights {
    double omega = 1.0;
    int q = 1;
};

/// gamma_u = (|u|!)^beta1 * prod_{j in u} c / j^beta2, with 0 < beta1 < beta2
struct PodWeights {
    double c = 1.0;
    double beta1 = 0.5;
    double beta2 = 1.0;
};

/// Arbitrary positive table on a downward-closed support.
struct ExplicitWeights {
    int dim = 0;
    std::unordered_map<std::uint64_t, double> table;
};

class WeightScheme {
public:
    using Variant = std::variant<ProductWeights, FiniteOrderWeights,
                                 FiniteDiameterWeights, PodWeights, ExplicitWeights>;

    explicit WeightScheme(Variant v); // validates parameters

    const Variant& variant() const { return variant_; }
    bool is_product() const { return std::holds_alternative<ProductWeights>(variant_); }
    bool is_finite_order() const { return std::holds_alternative<FiniteOrderWeights>(variant_); }
    bool is_finite_diameter() const { return std::holds_alternative<FiniteDiameterWeights>(variant_); }
    bool is_pod() const { return std::holds_alternative<PodWeights>(variant_); }
    bool is_explicit() const { return std::holds_alternative<ExplicitWeights>(variant_); }

    /// Short tag for reports: "product", "fow", "fdw", "pod", "explicit".
    std::string kind() const;

    /// Human-readable descriptor including parameters.
    std::string describe() const;

private:
    Variant variant_;
};

/// gamma_u; exactly 0 outside the support.
double weight(const WeightScheme& scheme, const SubsetMask& u);

/// log(gamma_u); -inf outside the support.  Safe for POD weights at large |u|.
double log_weight(const WeightScheme& scheme, const SubsetMask& u);

/// The support U = {u : gamma_u > 0}, without duplicates, bits ascending.
/// Product/POD/Explicit-full supports are dense and capped at s <= 30;
/// finite-order and finite-diameter supports are generated directly and
/// carry no such cap.
std::vector<SubsetMask> active_sets(const WeightScheme& scheme, int s);

/// Size of active_sets(scheme, s) without materializing it.
std::uint64_t active_set_count(const WeightScheme& scheme, int s);

/// Parses the explicit weight file format: one entry per line,
/// `<comma-separated 1-based coordinates or "empty"> <weight>`,
/// `#` starts a comment.  Validates positivity, duplicates and
/// downward closure of the support.
WeightScheme load_explicit_weights(std::istream& in, int s);
WeightScheme load_explicit_weights_file(const std::string& path, int s);

} // namespace embnorm
