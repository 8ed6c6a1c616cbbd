#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/SVD>

#include <embnorm/bounds.hpp>
#include <embnorm/embedding_operator.hpp>
#include <embnorm/matrix_pnorm.hpp>

using namespace embnorm;

namespace {

DenseOperator random_operator(std::mt19937_64& rng, int s) {
    std::uniform_real_distribution<double> gdist(0.2, 2.0);
    std::vector<double> gammas(static_cast<std::size_t>(s));
    for (double& g : gammas) g = gdist(rng);
    std::uniform_real_distribution<double> pdist(1.2, 4.0);
    return build_dense(WeightScheme{ProductWeights{gammas}}, s,
                       ExponentPair::from_p(pdist(rng)));
}

} // namespace

TEST_CASE("vector_pnorm endpoints and scaling") {
    Eigen::VectorXd x(3);
    x << 3.0, -4.0, 0.0;
    CHECK(vector_pnorm(x, 1.0) == doctest::Approx(7.0));
    CHECK(vector_pnorm(x, 2.0) == doctest::Approx(5.0));
    CHECK(vector_pnorm(x, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(4.0));
    // overflow guard: huge entries survive the p-th power
    Eigen::VectorXd big(2);
    big << 1e300, 1e300;
    CHECK(std::isfinite(vector_pnorm(big, 3.0)));
    CHECK(vector_pnorm(big, 3.0) == doctest::Approx(1e300 * std::pow(2.0, 1.0 / 3.0)));
}

TEST_CASE("norm_1 and norm_inf are the extreme column and row sums") {
    const WeightScheme scheme{ProductWeights{{0.5, 1.5}}};
    const auto op = build_dense(scheme, 2, ExponentPair::from_p(1.0));
    double max_col = 0.0, max_row = 0.0;
    for (int j = 0; j < op.size(); ++j) max_col = std::max(max_col, op.mat.col(j).sum());
    for (int i = 0; i < op.size(); ++i) max_row = std::max(max_row, op.mat.row(i).sum());
    CHECK(norm_1(op).value == doctest::Approx(max_col));
    const auto opinf =
        build_dense(scheme, 2, ExponentPair::from_p(std::numeric_limits<double>::infinity()));
    double max_row_inf = 0.0;
    for (int i = 0; i < opinf.size(); ++i)
        max_row_inf = std::max(max_row_inf, opinf.mat.row(i).sum());
    CHECK(norm_inf(opinf).value == doctest::Approx(max_row_inf));
}

TEST_CASE("norm_2 matches the largest singular value") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto op = random_operator(rng, 2 + static_cast<int>(rng() % 4));
        const double sigma =
            Eigen::JacobiSVD<Eigen::MatrixXd>(op.mat).singularValues()(0);
        CHECK(norm_2(op).value == doctest::Approx(sigma).epsilon(1e-9));
    }
}

TEST_CASE("norm_p approaches the endpoint norms as p -> 1 and p -> inf") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto op = random_operator(rng, 3);
        const double n1 = norm_1(op).value;
        const double ninf = norm_inf(op).value;
        CHECK(norm_p(op, ExponentPair::from_p(1.0 + 1e-6)).value ==
              doctest::Approx(n1).epsilon(1e-4));
        CHECK(norm_p(op, ExponentPair::from_p(1e6)).value ==
              doctest::Approx(ninf).epsilon(1e-4));
    }
}

TEST_CASE("norm_p agrees with the brute-force oracle on small matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> pdist(1.1, 6.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 2); // 2 or 4 dimensional
        const auto op = random_operator(rng, s);
        const auto exps = ExponentPair::from_p(pdist(rng));
        const double iterate = norm_p(op, exps).value;
        const double brute = brute_force_norm_p(op.mat, exps, trial);
        CHECK(iterate == doctest::Approx(brute).epsilon(1e-3));
        // both are witness ratios, so neither may exceed the true norm by much
        CHECK(iterate >= brute * (1.0 - 1e-3));
    }
}

TEST_CASE("power iteration ratio is nondecreasing along each run") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto op = random_operator(rng, 4);
        std::vector<double> trace;
        PowerOptions opts;
        opts.random_starts = 2;
        opts.ratio_trace = &trace;
        norm_p(op, ExponentPair::from_p(2.7), opts);
        REQUIRE(!trace.empty());
        for (std::size_t i = 1; i < trace.size(); ++i) {
            if (trace[i] == 0.0) continue; // run boundary marker resets the ratio
            if (trace[i - 1] == 0.0) continue;
            CHECK(trace[i] >= trace[i - 1] * (1.0 - 1e-13));
        }
    }
}

TEST_CASE("two_by_two_norm_p closed forms") {
    // p = 2: largest singular value of [[1, a], [0, 1]]
    for (double a : {0.0, 0.3, 1.0, 2.5}) {
        const double tr = 2.0 + a * a;
        const double sigma = std::sqrt((tr + std::sqrt(tr * tr - 4.0)) / 2.0);
        CHECK(two_by_two_norm_p(a, ExponentPair::from_p(2.0)) ==
              doctest::Approx(sigma).epsilon(1e-12));
    }
    // p = 1 and p = inf: column and row sums
    CHECK(two_by_two_norm_p(0.7, ExponentPair::from_p(1.0)) == doctest::Approx(1.7));
    CHECK(two_by_two_norm_p(0.7,
                            ExponentPair::from_p(std::numeric_limits<double>::infinity())) ==
          doctest::Approx(1.7));
    // golden ratio: a = 1, p = 2 gives (1 + sqrt 5)/2
    CHECK(two_by_two_norm_p(1.0, ExponentPair::from_p(2.0)) ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("Kronecker norm is the product of the factor norms") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> gdist(0.2, 2.0);
    for (int s = 1; s <= 8; ++s) {
        std::vector<double> gammas(static_cast<std::size_t>(s));
        for (double& g : gammas) g = gdist(rng);
        for (double p : {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
            const auto exps = ExponentPair::from_p(p);
            const auto kron = kronecker_factors(gammas, exps);
            double expected = 1.0;
            for (double a : kron.off_diagonal) expected *= two_by_two_norm_p(a, exps);
            CHECK(norm_p_kronecker(kron, exps).value ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("raw sparse norms agree with the operator overloads") {
    const WeightScheme scheme{FiniteOrderWeights{1.2, 2}};
    const int s = 7;
    for (double p : {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
        const auto exps = ExponentPair::from_p(p);
        const auto sp = build_active_set(scheme, s, exps);
        const RowSparse& raw = sp.mat;
        double via_op = 0.0, via_raw = 0.0;
        if (p == 1.0) {
            via_op = norm_1(sp).value;
            via_raw = norm_1(raw).value;
        } else if (std::isinf(p)) {
            via_op = norm_inf(sp).value;
            via_raw = norm_inf(raw).value;
        } else {
            via_op = norm_p(sp, exps).value;
            via_raw = norm_p(raw, exps).value;
        }
        CHECK(via_op == doctest::Approx(via_raw).epsilon(1e-9));
    }
}
