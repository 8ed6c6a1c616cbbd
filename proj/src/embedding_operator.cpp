#include <embnorm/embedding_operator.hpp>

#include <cmath>

#include <embnorm/errors.hpp>

namespace embnorm {

int DenseOperator::index_of(std::uint64_t bits) const {
    const auto it = index.find(bits);
    return it == index.end() ? -1 : it->second;
}

namespace {

std::unordered_map<std::uint64_t, int> build_index(const std::vector<SubsetMask>& sets) {
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(sets.size() * 2);
    for (std::size_t i = 0; i < sets.size(); ++i)
        index.emplace(sets[i].bits, static_cast<int>(i));
    return index;
}

} // namespace

DenseOperator build_dense(const WeightScheme& scheme, int s, const ExponentPair& exps) {
    if (active_set_count(scheme, s) > kDenseOperatorCap)
        throw capacity_error(
            "build_dense: active set too large; use build_active_set or "
            "kronecker_factors instead");

    DenseOperator op;
    op.sets = active_sets(scheme, s);
    op.index = build_index(op.sets);
    const int n = op.size();
    op.mat = Eigen::MatrixXd::Zero(n, n);

    std::vector<double> gamma(static_cast<std::size_t>(n));
    std::vector<double> lgamma_v(static_cast<std::size_t>(n));
    double max_abs_log = 0.0;
    for (int i = 0; i < n; ++i) {
        gamma[i] = weight(scheme, op.sets[i]);
        lgamma_v[i] = log_weight(scheme, op.sets[i]);
        max_abs_log = std::max(max_abs_log, std::abs(lgamma_v[i]));
    }
    const bool use_logs = max_abs_log > 300.0;
    const double log_m = std::log(exps.m);

    for (int col = 0; col < n; ++col) {
        const SubsetMask& u = op.sets[static_cast<std::size_t>(col)];
        for_each_submask(u.bits, [&](std::uint64_t vb) {
            const int row = op.index_of(vb);
            if (row < 0) return;
            const int k = std::popcount(u.bits & ~vb); // |u \ v|
            if (use_logs)
                op.mat(row, col) = std::exp(lgamma_v[col] - lgamma_v[row] + k * log_m);
            else
                op.mat(row, col) =
                    gamma[static_cast<std::size_t>(col)] /
                    gamma[static_cast<std::size_t>(row)] * std::pow(exps.m, k);
        });
    }
    return op;
}

KroneckerOperator kronecker_factors(const std::vector<double>& gammas,
                                    const ExponentPair& exps) {
    KroneckerOperator op;
    op.dim = static_cast<int>(gammas.size());
    op.off_diagonal.reserve(gammas.size());
    for (double g : gammas) {
        if (g <= 0.0)
            throw std::invalid_argument("kronecker_factors: gammas must be positive");
        op.off_diagonal.push_back(g * exps.m);
    }
    return op;
}

KroneckerOperator kronecker_factors(const WeightScheme& scheme, int s,
                                    const ExponentPair& exps) {
    const auto* prod = std::get_if<ProductWeights>(&scheme.variant());
    if (!prod)
        throw std::invalid_argument("kronecker_factors: product weights only");
    if (s > static_cast<int>(prod->gammas.size()))
        throw std::invalid_argument("kronecker_factors: s exceeds the gamma sequence");
    return kronecker_factors(
        std::vector<double>(prod->gammas.begin(), prod->gammas.begin() + s), exps);
}

SparseOperator build_active_set(const WeightScheme& scheme, int s,
                                const ExponentPair& exps) {
    SparseOperator op;
    op.sets = active_sets(scheme, s);
    const auto index = build_index(op.sets);
    const int n = op.size();

    std::vector<double> gamma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gamma[i] = weight(scheme, op.sets[i]);

    std::vector<Eigen::Triplet<double>> entries;
    for (int col = 0; col < n; ++col) {
        const SubsetMask& u = op.sets[static_cast<std::size_t>(col)];
        for_each_submask(u.bits, [&](std::uint64_t vb) {
            const auto it = index.find(vb);
            if (it == index.end()) return;
            const int row = it->second;
            const int k = std::popcount(u.bits & ~vb);
            entries.emplace_back(row, col,
                                 gamma[static_cast<std::size_t>(col)] /
                                     gamma[static_cast<std::size_t>(row)] *
                                     std::pow(exps.m, k));
        });
    }
    op.mat.resize(n, n);
    op.mat.setFromTriplets(entries.begin(), entries.end());
    return op;
}

Eigen::VectorXd apply(const DenseOperator& op, const Eigen::VectorXd& c) {
    if (c.size() != op.mat.cols())
        throw std::invalid_argument("apply: dimension mismatch");
    return op.mat * c;
}

Eigen::VectorXd apply(const SparseOperator& op, const Eigen::VectorXd& c) {
    if (c.size() != op.mat.cols())
        throw std::invalid_argument("apply: dimension mismatch");
    return op.mat * c;
}

Eigen::VectorXd apply(const KroneckerOperator& op, const Eigen::VectorXd& c) {
    const std::uint64_t n = std::uint64_t{1} << op.dim;
    if (static_cast<std::uint64_t>(c.size()) != n)
        throw std::invalid_argument("apply: expected a vector of length 2^s");
    Eigen::VectorXd y = c;
    for (int j = 0; j < op.dim; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        const double a = op.off_diagonal[static_cast<std::size_t>(j)];
        for (std::uint64_t i = 0; i < n; ++i)
            if (!(i & bit)) y[static_cast<Eigen::Index>(i)] += a * y[static_cast<Eigen::Index>(i | bit)];
    }
    return y;
}

DenseOperator expand_dense(const KroneckerOperator& op) {
    const int s = op.dim;
    if (s > 20) throw capacity_error("expand_dense: 2^s too large");
    DenseOperator out;
    out.sets = enumerate_subsets(s);
    out.index = build_index(out.sets);
    const std::uint64_t n = std::uint64_t{1} << s;
    out.mat = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::uint64_t u = 0; u < n; ++u) {
        for_each_submask(u, [&](std::uint64_t v) {
            double e = 1.0;
            std::uint64_t rest = u & ~v;
            while (rest) {
                e *= op.off_diagonal[static_cast<std::size_t>(std::countr_zero(rest))];
                rest &= rest - 1;
            }
            out.mat(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = e;
        });
    }
    return out;
}

} // namespace embnorm
