#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <embnorm/embedding_operator.hpp>
#include <embnorm/exponent.hpp>

namespace embnorm {

enum class PNormMethod { column_sum, row_sum, spectral, power_method, kronecker };

std::string to_string(PNormMethod m);

/// Result of an induced-norm computation.  `value` is always a certified
/// lower estimate: the ratio ||A w||_p / ||w||_p at the returned witness w
/// (exact for the closed-form endpoint methods).
struct PNormResult {
    double value = 0.0;
    PNormMethod method = PNormMethod::power_method;
    int iterations = 0;
    double residual = 0.0;
    CoefficientVector witness;
};

struct PowerOptions {
    double tol = 1e-10;
    int max_iters = 50000;
    int random_starts = 8;
    std::uint64_t seed = 0;
    std::vector<CoefficientVector> extra_starts;
    std::vector<double>* ratio_trace = nullptr; // per-iteration ratios, all starts
};

/// ||x||_p with the p = inf convention, computed with overflow guards.
double vector_pnorm(const Eigen::VectorXd& x, double p);

PNormResult norm_1(const DenseOperator& op);
PNormResult norm_1(const SparseOperator& op);
PNormResult norm_inf(const DenseOperator& op);
PNormResult norm_inf(const SparseOperator& op);

/// Largest singular value via power iteration on the Gram map c -> A^T(A c).
PNormResult norm_2(const DenseOperator& op, double tol = 1e-12, int max_iters = 10000);
PNormResult norm_2(const SparseOperator& op, double tol = 1e-12, int max_iters = 10000);

/// Induced p-norm of a nonnegative matrix by nonlinear (Boyd) power
/// iteration with multi-start; endpoints route to norm_1 / norm_inf.
/// The returned value is the best witness ratio seen.
PNormResult norm_p(const DenseOperator& op, const ExponentPair& exps,
                   const PowerOptions& opts = {});
PNormResult norm_p(const SparseOperator& op, const ExponentPair& exps,
                   const PowerOptions& opts = {});

/// Raw-matrix variants for operators assembled outside the SubsetMask
/// representations (structured supports at s > 63).
using RowSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
PNormResult norm_1(const RowSparse& mat);
PNormResult norm_inf(const RowSparse& mat);
PNormResult norm_2(const RowSparse& mat, double tol = 1e-12, int max_iters = 10000);
PNormResult norm_p(const RowSparse& mat, const ExponentPair& exps,
                   const PowerOptions& opts = {});

/// Product of the s individual 2x2 factor norms; O(s).
PNormResult norm_p_kronecker(const KroneckerOperator& op, const ExponentPair& exps);

/// Induced p-norm of the 2x2 matrix [[1, a], [0, 1]], a >= 0.
double two_by_two_norm_p(double a, const ExponentPair& exps);

/// Grid + coordinate-ascent maximization of ||Ac||_p / ||c||_p over c >= 0.
/// Test oracle; dimension <= 16.
double brute_force_norm_p(const Eigen::MatrixXd& mat, const ExponentPair& exps,
                          std::uint64_t seed = 0);

} // namespace embnorm
