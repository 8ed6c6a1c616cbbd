#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <embnorm/errors.hpp>

namespace embnorm {

/// Subsets of the coordinate set {1,...,s} as bitmasks.  Coordinate j maps to
/// bit j-1, so the empty set is bits==0 and the full set is (1<<s)-1.
struct SubsetMask {
    std::uint64_t bits = 0;
    int dim = 0; // s

    int cardinality() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int coord) const { return (bits >> (coord - 1)) & 1u; }
    bool subset_of(const SubsetMask& other) const { return (bits & ~other.bits) == 0; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

inline constexpr int kDenseEnumerationCap = 30;

/// All 2^s subsets of [s] in increasing bits order.  s <= 30.
std::vector<SubsetMask> enumerate_subsets(int s);

/// max_{i,j in u} |i - j|; 0 for the empty set and singletons.
int diameter(const SubsetMask& u);

/// Sum of x^|u| over subsets u of [s] with diameter exactly ell,
/// via the closed form (s - ell) * x^2 * (1 + x)^(ell-1).  1 <= ell <= s-1.
double weighted_diameter_sum(int s, int ell, double x);

/// Number of subsets of [s] with diameter exactly ell:
/// s + 1 for ell = 0, (s - ell) * 2^(ell-1) for ell >= 1.
std::uint64_t count_by_diameter(int s, int ell);

/// True iff every subset of every member is a member.
bool is_downward_closed(const std::vector<SubsetMask>& active);

/// Visits every submask of bits (including bits itself and 0) in
/// decreasing order.
template <class F>
void for_each_submask(std::uint64_t bits, F&& f) {
    std::uint64_t sub = bits;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & bits;
    }
}

} // namespace embnorm
