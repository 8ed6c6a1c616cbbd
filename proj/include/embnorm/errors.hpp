#pragma once

#include <stdexcept>
#include <string>

namespace embnorm {

// Thrown when a request would require enumerating more subsets (or denser
// storage) than the dense code paths allow.  Callers are expected to switch
// to a structured representation or reduce s.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace embnorm
