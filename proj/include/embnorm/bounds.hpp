#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <embnorm/matrix_pnorm.hpp>
#include <embnorm/weights.hpp>

namespace embnorm {

/// Everything known about the embedding norm for one (scheme, s, p).
struct BoundReport {
    std::string scheme;
    int s = 0;
    double p = 2.0;
    double lower_bound = 0.0;
    double lower_bound_simple = 0.0;
    std::optional<double> exact;
    std::optional<double> upper_bound;
    std::string method;
    int iterations = 0;
    double residual = 0.0;
    std::string witness_summary;

    /// lower_bound_simple <= lower_bound <= exact <= upper_bound, with
    /// relative slack.
    bool orderings_hold(double rel_slack = 1e-9) const;
};

struct BoundOptions {
    PowerOptions power;
    /// Threshold on |U| below which exact endpoint norms, the dense
    /// operator and full candidate enumeration are used.
    std::uint64_t dense_cap = kDenseOperatorCap;
};

/// Exact embedding norm at p = 1: max_{u in U} sum_{v <= u} gamma_u/gamma_v.
/// Enumerates when |U| is small, otherwise uses the product / finite-order /
/// finite-diameter closed forms.
double exact_norm_p1(const WeightScheme& scheme, int s);

/// Exact embedding norm at p = inf:
/// max_{v in U} sum_{w : v+w in U} gamma_{v+w} / (2^|w| gamma_v).
double exact_norm_pinf(const WeightScheme& scheme, int s);

/// Certified lower bound: the induced p-norm of the embedding operator in
/// the best available representation (closed forms at the endpoints,
/// Kronecker factors for product weights, sparse active-set otherwise).
PNormResult lower_bound(const WeightScheme& scheme, int s, const ExponentPair& exps,
                        const BoundOptions& opts = {});

/// The single-witness lower bound
/// max_u (sum_{v<=u} gamma_u^p / ((p*+1)^{p|u\v|/p*} gamma_v^p))^{1/p}.
double lower_bound_simple(const WeightScheme& scheme, int s, const ExponentPair& exps,
                          const BoundOptions& opts = {});

/// Interpolation upper bound (exact_p1)^(1/p) * (exact_pinf)^(1/p*);
/// nullopt when an endpoint norm is not computable.
std::optional<double> upper_bound_interpolation(const WeightScheme& scheme, int s,
                                                const ExponentPair& exps);

/// Exact p = 2 norm for product weights:
/// prod_j (1 + gamma_j/sqrt(3) * (sqrt(1+gamma_j^2/12) + gamma_j^3/sqrt(12)))^(1/2).
double exact_norm_p2_product(const std::vector<double>& gammas);

/// Closed-form product-weight lower bound
/// prod_j (1 + gamma_j ((p-1)/(p*+1))^(1/p*))^(1/p), for 1 < p < inf.
double product_lower_bound(const std::vector<double>& gammas, const ExponentPair& exps);

/// Finite-order proof bound m^q omega^q C(s,q)^(1-1/p).
double fow_lower_bound_explicit(int s, int q, double omega, const ExponentPair& exps);

/// Finite-diameter proof bound omega^q m^2 ((1+m)/2^(1/p))^(q-1) (s-q)^(1/p*).
double fdw_lower_bound_explicit(int s, int q, double omega, const ExponentPair& exps);

/// POD chain bound
/// (sum_{k=1}^s (s!/(s-k+1)!)^(p b1) (c/(p*+1)^(1/p*))^(p(k-1)) ((k-1)!)^(-p b2))^(1/p),
/// evaluated in log-space.
double pod_chain_lower_bound(int s, const ExponentPair& exps, double c, double beta1,
                             double beta2);

/// Least-squares slope of log(value) against log(s) over the last half of
/// the points.  Requires >= 5 points with positive values.
double fit_growth_rate(const std::vector<std::pair<double, double>>& pairs);

/// Assembles the full report; lower_bound is floored at lower_bound_simple.
BoundReport compute_report(const WeightScheme& scheme, int s, const ExponentPair& exps,
                           const BoundOptions& opts = {});

} // namespace embnorm
