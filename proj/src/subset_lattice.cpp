#include <embnorm/subset_lattice.hpp>

#include <cmath>
#include <unordered_set>

namespace embnorm {

std::vector<SubsetMask> enumerate_subsets(int s) {
    if (s < 1) throw std::invalid_argument("enumerate_subsets: s must be >= 1");
    if (s > kDenseEnumerationCap)
        throw capacity_error("enumerate_subsets: s = " + std::to_string(s) +
                             " exceeds the dense enumeration cap of " +
                             std::to_string(kDenseEnumerationCap));
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << s);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << s); ++b)
        out.push_back(SubsetMask{b, s});
    return out;
}

int diameter(const SubsetMask& u) {
    if (u.bits == 0) return 0;
    const int hi = 63 - std::countl_zero(u.bits);
    const int lo = std::countr_zero(u.bits);
    return hi - lo;
}

double weighted_diameter_sum(int s, int ell, double x) {
    if (ell < 1 || ell > s - 1)
        throw std::domain_error("weighted_diameter_sum: require 1 <= ell <= s-1");
    if (x < 0) throw std::domain_error("weighted_diameter_sum: x must be >= 0");
    return static_cast<double>(s - ell) * x * x * std::pow(1.0 + x, ell - 1);
}

std::uint64_t count_by_diameter(int s, int ell) {
    if (ell < 0 || ell > s - 1) return 0;
    if (ell == 0) return static_cast<std::uint64_t>(s) + 1; // empty set and singletons
    return static_cast<std::uint64_t>(s - ell) << (ell - 1);
}

bool is_downward_closed(const std::vector<SubsetMask>& active) {
    std::unordered_set<std::uint64_t> members;
    members.reserve(active.size() * 2);
    for (const auto& u : active) members.insert(u.bits);
    // Closure under removal of one element implies full downward closure.
    for (const auto& u : active) {
        std::uint64_t rest = u.bits;
        while (rest) {
            const std::uint64_t low = rest & (~rest + 1);
            if (!members.count(u.bits & ~low)) return false;
            rest ^= low;
        }
    }
    return true;
}

} // namespace embnorm
