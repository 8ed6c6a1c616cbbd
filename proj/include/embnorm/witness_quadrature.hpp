#pragma once

#include <Eigen/Core>

#include <embnorm/embedding_operator.hpp>
#include <embnorm/exponent.hpp>
#include <embnorm/weights.hpp>

namespace embnorm {

/// The Hoelder-extremal univariate witness h(t) = (p*+1)^(1/p) (1-t)^(p*-1)
/// on [0,1]; h == 1 at p = 1.  Satisfies ||h||_p = 1 and
/// integral h(t)(1-t) dt = m.  p = inf has no integrable witness and is
/// rejected.
struct WitnessFunction {
    ExponentPair exps;

    double operator()(double t) const;

    /// H(x) = integral_0^x h.
    double antiderivative(double x) const;
};

WitnessFunction extremal_h(const ExponentPair& exps);

/// Composite Gauss-Legendre rule on [0,1], graded toward t = 1 where the
/// witness has an endpoint derivative blowup for p > 2.
struct QuadratureGrid {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    int size() const { return static_cast<int>(nodes.size()); }

    /// n total points per axis, split over geometrically shrinking panels.
    static QuadratureGrid make(int n);
};

inline constexpr int kQuadratureDimCap = 3;

/// Pointwise value of the witness-built anchored function
/// f(x) = sum_u c_u gamma_u prod_{j in u} H(x_j), s <= 3.
double anchored_eval(const Eigen::VectorXd& c, const WeightScheme& scheme,
                     const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                     const Eigen::VectorXd& x);

/// Anchored norm of the witness function: (sum_u c_u^p)^(1/p).
double norm_F_numeric(const Eigen::VectorXd& c, const WeightScheme& scheme,
                      const std::vector<SubsetMask>& sets, const ExponentPair& exps);

/// Anchored norm recomputed term-by-term with tensor quadrature (s <= 2);
/// cross-check for norm_F_numeric.
double norm_F_quadrature(const Eigen::VectorXd& c, const WeightScheme& scheme,
                         const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                         const QuadratureGrid& grid);

/// ANOVA norm of the witness function by tensor quadrature of every active
/// v-term, s <= 3 and finite p.
double norm_H_numeric(const Eigen::VectorXd& c, const WeightScheme& scheme,
                      const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                      const QuadratureGrid& grid);

} // namespace embnorm
