#include <embnorm/matrix_pnorm.hpp>

#include <cmath>
#include <random>

#include <embnorm/errors.hpp>

namespace embnorm {

std::string to_string(PNormMethod m) {
    switch (m) {
        case PNormMethod::column_sum: return "column_sum";
        case PNormMethod::row_sum: return "row_sum";
        case PNormMethod::spectral: return "spectral";
        case PNormMethod::power_method: return "power_method";
        case PNormMethod::kronecker: return "kronecker";
    }
    return "?";
}

double vector_pnorm(const Eigen::VectorXd& x, double p) {
    const double amax = x.cwiseAbs().maxCoeff();
    if (amax == 0.0 || x.size() == 0) return 0.0;
    if (std::isinf(p)) return amax;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        sum += std::pow(std::abs(x[i]) / amax, p);
    return amax * std::pow(sum, 1.0 / p);
}

namespace {

template <class Mat>
PNormResult norm_1_impl(const Mat& mat) {
    const Eigen::Index n = mat.cols();
    Eigen::RowVectorXd col_sums = Eigen::RowVectorXd::Ones(mat.rows()) * mat;
    Eigen::Index arg = 0;
    const double value = n ? col_sums.maxCoeff(&arg) : 0.0;
    PNormResult r;
    r.value = value;
    r.method = PNormMethod::column_sum;
    r.witness = Eigen::VectorXd::Zero(n);
    if (n) r.witness[arg] = 1.0;
    return r;
}

template <class Mat>
PNormResult norm_inf_impl(const Mat& mat) {
    Eigen::VectorXd row_sums = mat * Eigen::VectorXd::Ones(mat.cols());
    PNormResult r;
    r.value = row_sums.size() ? row_sums.maxCoeff() : 0.0;
    r.method = PNormMethod::row_sum;
    r.witness = Eigen::VectorXd::Ones(mat.cols());
    return r;
}

template <class Mat>
PNormResult norm_2_impl(const Mat& mat, double tol, int max_iters) {
    const Eigen::Index n = mat.cols();
    PNormResult r;
    r.method = PNormMethod::spectral;
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n).normalized();
    double prev = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        Eigen::VectorXd y = mat * c;
        const double sigma = y.norm();
        r.iterations = it;
        if (sigma == 0.0) {
            r.value = 0.0;
            r.witness = c;
            return r;
        }
        Eigen::VectorXd g = mat.transpose() * y;
        c = g / g.norm();
        r.residual = std::abs(sigma - prev) / std::max(1.0, sigma);
        if (r.residual < tol) {
            prev = sigma;
            break;
        }
        prev = sigma;
    }
    r.witness = c;
    r.value = (mat * c).norm() / c.norm();
    return r;
}

// Entrywise x^e for x >= 0, scaled by max first so extreme exponents
// (p near 1 or very large) neither overflow nor underflow the argmax.
Eigen::VectorXd scaled_pow(const Eigen::VectorXd& x, double e) {
    const double xmax = x.maxCoeff();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(x.size());
    if (xmax <= 0.0) return out;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] > 0.0) out[i] = std::pow(x[i] / xmax, e);
    return out;
}

template <class Mat>
void power_run(const Mat& mat, const ExponentPair& exps, const PowerOptions& opts,
               Eigen::VectorXd c, PNormResult& best, int& total_iters) {
    const double p = exps.p;
    const double nc = vector_pnorm(c, p);
    if (nc == 0.0) return;
    c /= nc;
    // zero marks a run boundary: the ratio is monotone within a run only
    if (opts.ratio_trace) opts.ratio_trace->push_back(0.0);

    auto consider = [&](double ratio, const Eigen::VectorXd& w) {
        if (ratio > best.value) {
            best.value = ratio;
            best.witness = w;
        }
    };

    double prev = vector_pnorm(mat * c, p);
    consider(prev, c);
    for (int it = 0; it < opts.max_iters; ++it) {
        Eigen::VectorXd y = mat * c;
        if (y.maxCoeff() <= 0.0) break;
        Eigen::VectorXd z = mat.transpose() * scaled_pow(y, p - 1.0);
        if (z.maxCoeff() <= 0.0) break;
        c = scaled_pow(z, exps.p_star - 1.0);
        c /= vector_pnorm(c, p);
        const double ratio = vector_pnorm(mat * c, p);
        ++total_iters;
        if (opts.ratio_trace) opts.ratio_trace->push_back(ratio);
        consider(ratio, c);
        const double change = std::abs(ratio - prev) / std::max(1.0, std::abs(ratio));
        prev = ratio;
        if (change < opts.tol) {
            best.residual = std::max(best.residual, change);
            return;
        }
    }
    best.residual = std::max(best.residual, opts.tol);
}

template <class Mat>
PNormResult norm_p_impl(const Mat& mat, const ExponentPair& exps,
                        const PowerOptions& opts) {
    for (int k = 0; k < mat.outerSize(); ++k) {
        // nonnegativity is required for the monotone iteration
        if constexpr (std::is_same_v<Mat, Eigen::MatrixXd>) {
            if ((mat.col(k).array() < 0.0).any())
                throw std::domain_error("norm_p: matrix must be entrywise nonnegative");
        }
    }
    if constexpr (!std::is_same_v<Mat, Eigen::MatrixXd>) {
        for (int k = 0; k < mat.outerSize(); ++k)
            for (typename Mat::InnerIterator it(mat, k); it; ++it)
                if (it.value() < 0.0)
                    throw std::domain_error("norm_p: matrix must be entrywise nonnegative");
    }

    const Eigen::Index n = mat.cols();
    PNormResult best;
    best.method = PNormMethod::power_method;
    best.value = 0.0;
    best.witness = Eigen::VectorXd::Zero(n);
    int total_iters = 0;

    power_run(mat, exps, opts, Eigen::VectorXd::Ones(n), best, total_iters);
    for (const auto& start : opts.extra_starts)
        power_run(mat, exps, opts, start, best, total_iters);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    for (int k = 0; k < opts.random_starts; ++k) {
        Eigen::VectorXd c(n);
        for (Eigen::Index i = 0; i < n; ++i) c[i] = dist(rng);
        power_run(mat, exps, opts, c, best, total_iters);
    }
    best.iterations = total_iters;
    return best;
}

} // namespace

PNormResult norm_1(const DenseOperator& op) { return norm_1_impl(op.mat); }
PNormResult norm_1(const SparseOperator& op) { return norm_1_impl(op.mat); }
PNormResult norm_inf(const DenseOperator& op) { return norm_inf_impl(op.mat); }
PNormResult norm_inf(const SparseOperator& op) { return norm_inf_impl(op.mat); }

PNormResult norm_2(const DenseOperator& op, double tol, int max_iters) {
    return norm_2_impl(op.mat, tol, max_iters);
}
PNormResult norm_2(const SparseOperator& op, double tol, int max_iters) {
    return norm_2_impl(op.mat, tol, max_iters);
}

PNormResult norm_p(const DenseOperator& op, const ExponentPair& exps,
                   const PowerOptions& opts) {
    if (exps.is_one()) return norm_1(op);
    if (exps.is_inf()) return norm_inf(op);
    return norm_p_impl(op.mat, exps, opts);
}

PNormResult norm_p(const SparseOperator& op, const ExponentPair& exps,
                   const PowerOptions& opts) {
    if (exps.is_one()) return norm_1(op);
    if (exps.is_inf()) return norm_inf(op);
    return norm_p_impl(op.mat, exps, opts);
}

PNormResult norm_1(const RowSparse& mat) { return norm_1_impl(mat); }
PNormResult norm_inf(const RowSparse& mat) { return norm_inf_impl(mat); }
PNormResult norm_2(const RowSparse& mat, double tol, int max_iters) {
    return norm_2_impl(mat, tol, max_iters);
}
PNormResult norm_p(const RowSparse& mat, const ExponentPair& exps,
                   const PowerOptions& opts) {
    if (exps.is_one()) return norm_1(mat);
    if (exps.is_inf()) return norm_inf(mat);
    return norm_p_impl(mat, exps, opts);
}

double two_by_two_norm_p(double a, const ExponentPair& exps) {
    if (a < 0.0) throw std::domain_error("two_by_two_norm_p: a must be >= 0");
    if (exps.is_one() || exps.is_inf()) return 1.0 + a;
    if (exps.p == 2.0) {
        const double tr = 2.0 + a * a;
        return std::sqrt((tr + std::sqrt(tr * tr - 4.0)) / 2.0);
    }
    const double p = exps.p;
    // c(t) = ((1-t)^(1/p), t^(1/p)) traces the nonnegative unit p-sphere.
    auto f = [&](double t) {
        const double c1 = std::pow(1.0 - t, 1.0 / p);
        const double c2 = std::pow(t, 1.0 / p);
        return std::pow(std::pow(c1 + a * c2, p) + t, 1.0 / p);
    };
    const int grid = 128;
    int best = 0;
    double fbest = f(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double v = f(static_cast<double>(i) / grid);
        if (v > fbest) {
            fbest = v;
            best = i;
        }
    }
    double lo = std::max(0.0, (best - 1.0) / grid);
    double hi = std::min(1.0, (best + 1.0) / grid);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-13) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return std::max({fbest, f1, f2});
}

PNormResult norm_p_kronecker(const KroneckerOperator& op, const ExponentPair& exps) {
    PNormResult r;
    r.method = PNormMethod::kronecker;
    r.value = 1.0;
    for (double a : op.off_diagonal) r.value *= two_by_two_norm_p(a, exps);
    return r;
}

double brute_force_norm_p(const Eigen::MatrixXd& mat, const ExponentPair& exps,
                          std::uint64_t seed) {
    const Eigen::Index n = mat.cols();
    if (n > 16) throw capacity_error("brute_force_norm_p: dimension must be <= 16");
    const double p = exps.p;

    auto ratio = [&](const Eigen::VectorXd& c) {
        const double nc = vector_pnorm(c, p);
        return nc == 0.0 ? 0.0 : vector_pnorm(mat * c, p) / nc;
    };

    std::vector<Eigen::VectorXd> starts;
    starts.push_back(Eigen::VectorXd::Ones(n));
    for (Eigen::Index i = 0; i < n; ++i)
        starts.push_back(Eigen::VectorXd::Unit(n, i));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<std::pair<double, Eigen::VectorXd>> pool;
    for (const auto& s : starts) pool.emplace_back(ratio(s), s);
    for (int k = 0; k < 300; ++k) {
        Eigen::VectorXd c(n);
        for (Eigen::Index i = 0; i < n; ++i) c[i] = dist(rng);
        pool.emplace_back(ratio(c), c);
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    pool.resize(std::min<std::size_t>(pool.size(), 8));

    double global_best = 0.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (auto& [r0, c] : pool) {
        double best = r0;
        for (int sweep = 0; sweep < 100; ++sweep) {
            double improved = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double scale = std::max(1.0, c.maxCoeff());
                double lo = 0.0, hi = 8.0 * scale;
                // coarse scan then golden-section refine on coordinate i
                double tbest = c[i], fb = best;
                for (int g = 0; g <= 32; ++g) {
                    const double t = lo + (hi - lo) * g / 32.0;
                    c[i] = t;
                    const double v = ratio(c);
                    if (v > fb) {
                        fb = v;
                        tbest = t;
                    }
                }
                lo = std::max(0.0, tbest - (hi / 32.0));
                hi = tbest + (hi / 32.0);
                double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
                c[i] = x1;
                double f1 = ratio(c);
                c[i] = x2;
                double f2 = ratio(c);
                while (hi - lo > 1e-10 * scale) {
                    if (f1 < f2) {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + phi * (hi - lo);
                        c[i] = x2;
                        f2 = ratio(c);
                    } else {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - phi * (hi - lo);
                        c[i] = x1;
                        f1 = ratio(c);
                    }
                }
                c[i] = f1 > f2 ? x1 : x2;
                const double v = std::max({fb, f1, f2});
                if (v > best + 1e-15) improved = v - best;
                if (v >= best) best = v;
                if (fb >= std::max(f1, f2)) c[i] = tbest;
            }
            if (improved < 1e-12) break;
        }
        global_best = std::max(global_best, best);
    }
    return global_best;
}

} // namespace embnorm
