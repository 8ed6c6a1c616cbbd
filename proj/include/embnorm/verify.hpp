#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <embnorm/weights.hpp>

namespace embnorm {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst_residual = 0.0;
    std::string detail;
};

/// A random explicit weight table on a random downward-closed support.
WeightScheme random_downward_closed(int s, std::mt19937_64& rng);

inline constexpr int kVerifyMaxS = 16;

/// Runs the oracle suites ("eqell", "endpoint", "kronecker", "witness",
/// "support"); `only` empty runs all.  Throws capacity_error when max_s
/// exceeds what the dense suites can enumerate.
std::vector<SuiteResult> run_suites(const std::string& only, int max_s,
                                    std::uint64_t seed);

} // namespace embnorm
