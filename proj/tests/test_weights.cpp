#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <embnorm/weights.hpp>

using namespace embnorm;

namespace {

double brute_pod(const SubsetMask& u, double c, double b1, double b2) {
    double w = std::tgamma(u.cardinality() + 1.0);
    w = std::pow(w, b1);
    for (int j = 1; j <= u.dim; ++j)
        if (u.contains(j)) w *= c / std::pow(j, b2);
    return w;
}

} // namespace

TEST_CASE("product weights multiply coordinate gammas") {
    const WeightScheme scheme{ProductWeights{{0.5, 2.0, 3.0}}};
    CHECK(weight(scheme, SubsetMask{0, 3}) == 1.0);
    CHECK(weight(scheme, SubsetMask{0b101, 3}) == doctest::Approx(1.5));
    CHECK(weight(scheme, SubsetMask{0b111, 3}) == doctest::Approx(3.0));
}

TEST_CASE("finite-order weights vanish above the order cap") {
    const WeightScheme scheme{FiniteOrderWeights{1.5, 2}};
    CHECK(weight(scheme, SubsetMask{0, 5}) == 1.0);
    CHECK(weight(scheme, SubsetMask{0b10001, 5}) == doctest::Approx(2.25));
    CHECK(weight(scheme, SubsetMask{0b10101, 5}) == 0.0);
}

TEST_CASE("finite-diameter weights vanish above the diameter cap") {
    const WeightScheme scheme{FiniteDiameterWeights{0.5, 2}};
    CHECK(weight(scheme, SubsetMask{0b00111, 5}) == doctest::Approx(0.125));
    CHECK(weight(scheme, SubsetMask{0b10100, 5}) == doctest::Approx(0.25));
    CHECK(weight(scheme, SubsetMask{0b10001, 5}) == 0.0);
}

TEST_CASE("pod weights match the direct formula, in and out of log space") {
    const double c = 1.3, b1 = 0.4, b2 = 0.9;
    const WeightScheme scheme{PodWeights{c, b1, b2}};
    for (std::uint64_t bits : {0ull, 0b1ull, 0b1011ull, 0b111111ull}) {
        const SubsetMask u{bits, 6};
        const double expected = brute_pod(u, c, b1, b2);
        CHECK(weight(scheme, u) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(log_weight(scheme, u) ==
              doctest::Approx(std::log(expected)).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((WeightScheme(ProductWeights{{1.0, -0.5}})), std::invalid_argument);
    CHECK_THROWS_AS((WeightScheme(ProductWeights{})), std::invalid_argument);
    CHECK_THROWS_AS((WeightScheme(FiniteOrderWeights{0.0, 2})), std::invalid_argument);
    CHECK_THROWS_AS((WeightScheme(FiniteDiameterWeights{1.0, -1})),
                    std::invalid_argument);
    CHECK_THROWS_AS((WeightScheme(PodWeights{1.0, 0.9, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS((WeightScheme(PodWeights{-1.0, 0.5, 0.9})), std::invalid_argument);
}

TEST_CASE("explicit tables parse, validate and reject bad input") {
    std::istringstream good("# comment\nempty 1\n1 0.5\n2 0.25\n1,2 0.125\n");
    const WeightScheme scheme = load_explicit_weights(good, 2);
    CHECK(weight(scheme, SubsetMask{0, 2}) == 1.0);
    CHECK(weight(scheme, SubsetMask{0b11, 2}) == doctest::Approx(0.125));

    std::istringstream no_empty("1 1\n");
    CHECK_THROWS_AS(load_explicit_weights(no_empty, 1), std::invalid_argument);

    std::istringstream not_closed("empty 1\n1,2 1\n");
    CHECK_THROWS_AS(load_explicit_weights(not_closed, 2), std::invalid_argument);

    std::istringstream dup("empty 1\n1 1\n1 2\n");
    CHECK_THROWS_AS(load_explicit_weights(dup, 1), std::invalid_argument);

    std::istringstream negative("empty 1\n1 -2\n");
    CHECK_THROWS_AS(load_explicit_weights(negative, 1), std::invalid_argument);
}

TEST_CASE("active_sets matches a brute filter of the full lattice") {
    std::vector<WeightScheme> schemes;
    schemes.emplace_back(ProductWeights{std::vector<double>(9, 1.1)});
    schemes.emplace_back(FiniteOrderWeights{1.0, 3});
    schemes.emplace_back(FiniteDiameterWeights{2.0, 2});
    schemes.emplace_back(PodWeights{0.8, 0.3, 1.2});
    for (const auto& scheme : schemes) {
        for (int s : {1, 4, 9}) {
            const auto active = active_sets(scheme, s);
            CHECK(active.size() == active_set_count(scheme, s));
            CHECK(is_downward_closed(active));
            std::size_t expected = 0;
            for (const auto& u : enumerate_subsets(s))
                if (weight(scheme, u) > 0.0) ++expected;
            CHECK(active.size() == expected);
            for (std::size_t i = 1; i < active.size(); ++i)
                CHECK(active[i - 1].bits < active[i].bits);
        }
    }
}

TEST_CASE("kind tags") {
    CHECK(WeightScheme{FiniteOrderWeights{1.0, 1}}.kind() == "fow");
    CHECK(WeightScheme{FiniteDiameterWeights{1.0, 1}}.kind() == "fdw");
    CHECK(WeightScheme{PodWeights{1.0, 0.5, 1.0}}.kind() == "pod");
    CHECK(WeightScheme{ProductWeights{{1.0}}}.kind() == "product");
}
