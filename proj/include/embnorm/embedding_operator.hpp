#pragma once

#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <embnorm/exponent.hpp>
#include <embnorm/weights.hpp>

namespace embnorm {

/// Nonnegative coefficients indexed like the active-set list of an operator.
using CoefficientVector = Eigen::VectorXd;

inline constexpr std::uint64_t kDenseOperatorCap = std::uint64_t{1} << 20;

/// The coefficient operator of the embedding lower bound:
/// A[v][u] = gamma_u * m^|u\v| / gamma_v for active v <= u, else 0.
/// Rows and columns are indexed by `sets` (bits ascending), so A is upper
/// triangular with unit diagonal.
struct DenseOperator {
    std::vector<SubsetMask> sets;
    Eigen::MatrixXd mat;

    int size() const { return static_cast<int>(sets.size()); }
    int index_of(std::uint64_t bits) const;
    std::unordered_map<std::uint64_t, int> index; // bits -> row/column
};

/// Product-weight factorization: the dense operator is the s-fold Kronecker
/// product of the 2x2 factors [[1, gamma_j * m], [0, 1]], with coordinate 1
/// as the least significant bit of the global index.
struct KroneckerOperator {
    int dim = 0;
    std::vector<double> off_diagonal; // gamma_j * m, j = 1..s
};

/// Sparse row-major form over a restricted support (finite-order or
/// finite-diameter weights at large s).
struct SparseOperator {
    std::vector<SubsetMask> sets;
    Eigen::SparseMatrix<double, Eigen::RowMajor> mat;

    int size() const { return static_cast<int>(sets.size()); }
};

DenseOperator build_dense(const WeightScheme& scheme, int s, const ExponentPair& exps);

KroneckerOperator kronecker_factors(const std::vector<double>& gammas,
                                    const ExponentPair& exps);
KroneckerOperator kronecker_factors(const WeightScheme& scheme, int s,
                                    const ExponentPair& exps);

/// Restricted-support sparse operator; intended for finite-order and
/// finite-diameter schemes where |U| is far below 2^s.
SparseOperator build_active_set(const WeightScheme& scheme, int s,
                                const ExponentPair& exps);

Eigen::VectorXd apply(const DenseOperator& op, const Eigen::VectorXd& c);
Eigen::VectorXd apply(const SparseOperator& op, const Eigen::VectorXd& c);

/// Factor-by-factor application over the full powerset vector (length 2^s);
/// never materializes the 2^s x 2^s matrix.
Eigen::VectorXd apply(const KroneckerOperator& op, const Eigen::VectorXd& c);

/// Materializes the Kronecker product as a dense operator (test oracle and
/// small-s paths).
DenseOperator expand_dense(const KroneckerOperator& op);

} // namespace embnorm
