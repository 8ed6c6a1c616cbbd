#include <embnorm/verify.hpp>

#include <cmath>
#include <unordered_map>

#include <embnorm/bounds.hpp>
#include <embnorm/errors.hpp>
#include <embnorm/matrix_pnorm.hpp>
#include <embnorm/witness_quadrature.hpp>

namespace embnorm {
namespace {

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

SuiteResult suite_eqell(int max_s) {
    SuiteResult r{"eqell"};
    const int cap = std::min(max_s, 14);
    for (int s = 2; s <= cap; ++s) {
        const auto sets = enumerate_subsets(s);
        for (int ell = 0; ell <= s - 1; ++ell) {
            std::uint64_t count = 0;
            for (const auto& u : sets)
                if (diameter(u) == ell) ++count;
            if (count != count_by_diameter(s, ell)) {
                r.detail = "count mismatch at s=" + std::to_string(s) +
                           " ell=" + std::to_string(ell);
                r.worst_residual = 1.0;
                return r;
            }
            if (ell == 0) continue;
            for (double x : {0.25, 0.5, 1.0, 2.0}) {
                double brute = 0.0;
                for (const auto& u : sets)
                    if (diameter(u) == ell) brute += std::pow(x, u.cardinality());
                r.worst_residual = std::max(
                    r.worst_residual, rel_diff(brute, weighted_diameter_sum(s, ell, x)));
            }
        }
    }
    r.passed = r.worst_residual <= 1e-12;
    return r;
}

SuiteResult suite_endpoint(int max_s, std::uint64_t seed) {
    SuiteResult r{"endpoint"};
    std::mt19937_64 rng(seed);
    const int cap = std::min(max_s, 10);
    std::uniform_int_distribution<int> sdist(1, cap);
    for (int trial = 0; trial < 25; ++trial) {
        const int s = sdist(rng);
        const WeightScheme scheme = random_downward_closed(s, rng);
        {
            const auto op = build_dense(scheme, s, ExponentPair::from_p(1.0));
            r.worst_residual = std::max(
                r.worst_residual, rel_diff(norm_1(op).value, exact_norm_p1(scheme, s)));
        }
        {
            const auto op = build_dense(
                scheme, s, ExponentPair::from_p(std::numeric_limits<double>::infinity()));
            r.worst_residual =
                std::max(r.worst_residual,
                         rel_diff(norm_inf(op).value, exact_norm_pinf(scheme, s)));
        }
    }
    r.passed = r.worst_residual <= 1e-10;
    return r;
}

SuiteResult suite_kronecker(int max_s, std::uint64_t seed) {
    SuiteResult r{"kronecker"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> gdist(0.1, 2.0);
    const int cap = std::min(max_s, 8);
    const double inf = std::numeric_limits<double>::infinity();
    for (int s = 1; s <= cap; ++s) {
        std::vector<double> gammas(static_cast<std::size_t>(s));
        for (double& g : gammas) g = gdist(rng);
        const WeightScheme scheme{ProductWeights{gammas}};
        for (double p : {1.0, 1.5, 2.0, 3.0, inf}) {
            const auto exps = ExponentPair::from_p(p);
            const auto dense = build_dense(scheme, s, exps);
            const double direct = norm_p(dense, exps).value;
            const double factored =
                norm_p_kronecker(kronecker_factors(gammas, exps), exps).value;
            r.worst_residual = std::max(r.worst_residual, rel_diff(direct, factored));
        }
    }
    r.passed = r.worst_residual <= 1e-6;
    return r;
}

SuiteResult suite_witness(std::uint64_t seed) {
    SuiteResult r{"witness"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cdist(0.0, 1.0);
    const double gamma_choices[] = {0.5, 1.0, 2.0};
    const QuadratureGrid grid = QuadratureGrid::make(96);
    for (int s : {1, 2}) {
        std::vector<double> gammas(static_cast<std::size_t>(s));
        for (double& g : gammas) g = gamma_choices[rng() % 3];
        const WeightScheme scheme{ProductWeights{gammas}};
        for (double p : {1.5, 2.0, 3.0}) {
            const auto exps = ExponentPair::from_p(p);
            const auto op = build_dense(scheme, s, exps);
            for (int trial = 0; trial < 5; ++trial) {
                Eigen::VectorXd c(op.size());
                for (int i = 0; i < op.size(); ++i) c[i] = cdist(rng);
                const double matrix_ratio =
                    vector_pnorm(apply(op, c), p) / vector_pnorm(c, p);
                const double func_ratio =
                    norm_H_numeric(c, scheme, op.sets, exps, grid) /
                    norm_F_numeric(c, scheme, op.sets, exps);
                r.worst_residual =
                    std::max(r.worst_residual, rel_diff(matrix_ratio, func_ratio));
            }
        }
    }
    r.passed = r.worst_residual <= 1e-6;
    return r;
}

SuiteResult suite_support(int max_s, std::uint64_t seed) {
    SuiteResult r{"support"};
    std::mt19937_64 rng(seed);
    const int cap = std::min(max_s, 12);
    std::vector<WeightScheme> schemes;
    schemes.emplace_back(ProductWeights{std::vector<double>(12, 0.7)});
    schemes.emplace_back(FiniteOrderWeights{1.5, 2});
    schemes.emplace_back(FiniteDiameterWeights{0.5, 3});
    schemes.emplace_back(PodWeights{1.0, 0.5, 1.0});
    for (int s = 1; s <= cap; ++s) schemes.push_back(random_downward_closed(s, rng));
    for (const auto& scheme : schemes) {
        for (int s : {2, 5, cap}) {
            if (scheme.is_explicit()) continue;
            const auto active = active_sets(scheme, s);
            if (!is_downward_closed(active)) {
                r.worst_residual = 1.0;
                r.detail = scheme.kind() + " support not downward closed at s=" +
                           std::to_string(s);
                break;
            }
            std::unordered_map<std::uint64_t, bool> in_support;
            for (const auto& u : active) {
                in_support[u.bits] = true;
                if (!(weight(scheme, u) > 0.0)) r.worst_residual = 1.0;
            }
            for (const auto& u : enumerate_subsets(s))
                if (!in_support.count(u.bits) && weight(scheme, u) != 0.0)
                    r.worst_residual = 1.0;
            if (active.size() != active_set_count(scheme, s)) r.worst_residual = 1.0;
        }
    }
    r.passed = r.worst_residual == 0.0;
    return r;
}

} // namespace

WeightScheme random_downward_closed(int s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> gdist(0.1, 2.0);
    const std::uint64_t full = (std::uint64_t{1} << s) - 1;
    ExplicitWeights w;
    w.dim = s;
    const int n_generators = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < n_generators; ++g) {
        const std::uint64_t gen = rng() & full;
        for_each_submask(gen, [&](std::uint64_t sub) {
            w.table.emplace(sub, gdist(rng));
        });
    }
    w.table.emplace(0, gdist(rng));
    return WeightScheme{std::move(w)};
}

std::vector<SuiteResult> run_suites(const std::string& only, int max_s,
                                    std::uint64_t seed) {
    if (max_s > kVerifyMaxS)
        throw capacity_error("verify: dense suites cap at max-s = " +
                             std::to_string(kVerifyMaxS));
    if (max_s < 2) throw std::invalid_argument("verify: max-s must be >= 2");
    std::vector<SuiteResult> out;
    auto want = [&](const std::string& name) { return only.empty() || only == name; };
    if (want("eqell")) out.push_back(suite_eqell(max_s));
    if (want("endpoint")) out.push_back(suite_endpoint(max_s, seed));
    if (want("kronecker")) out.push_back(suite_kronecker(max_s, seed));
    if (want("witness")) out.push_back(suite_witness(seed));
    if (want("support")) out.push_back(suite_support(max_s, seed));
    if (out.empty())
        throw std::invalid_argument("verify: unknown suite '" + only + "'");
    return out;
}

} // namespace embnorm
