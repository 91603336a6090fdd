#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace frobsplit {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>; // row-major

// Trial division; inputs here are desk-scale primes (p <= a few thousand).
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace frobsplit
