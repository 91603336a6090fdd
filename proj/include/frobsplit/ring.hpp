#pragma once

#include "frobsplit/integer.hpp"

#include <cstdint>
#include <stdexcept>

namespace frobsplit {

// Base ring tag: the integers (p == 0) or the prime field F_p.
struct Ring {
    std::int64_t p = 0;

    static Ring integers() { return Ring{0}; }
    static Ring prime_field(std::int64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("Ring: p must be prime");
        return Ring{p};
    }

    bool is_fp() const { return p != 0; }

    // Canonical representative: in [0, p) over F_p, unchanged over Z.
    Int normalize(Int v) const {
        if (p == 0) return v;
        v %= p;
        if (v < 0) v += p;
        return v;
    }

    bool operator==(const Ring&) const = default;
};

} // namespace frobsplit
