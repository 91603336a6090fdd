#include "frobsplit/binomial.hpp"

#include <stdexcept>

namespace frobsplit {

Int binom(const Int& n, unsigned k) {
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1; // exact: product of i+1 consecutive integers
    }
    return result;
}

namespace {

// Lucas: binom(n, k) mod p via base-p digits, n >= 0.
std::int64_t lucas(Int n, unsigned long long k, std::int64_t p) {
    std::int64_t result = 1;
    while (k > 0 || n > 0) {
        auto nd = static_cast<unsigned>(n % p);
        auto kd = static_cast<unsigned>(k % p);
        if (kd > nd) return 0;
        result = result * static_cast<std::int64_t>(binom(Int(nd), kd) % p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

} // namespace

std::int64_t binom_mod_p(const Int& n, unsigned k, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: p must be prime");
    if (n >= 0) return lucas(n, k, p);
    // binom(n,k) = (-1)^k binom(-n+k-1, k) for n < 0
    std::int64_t r = lucas(-n + k - 1, k, p);
    if (k % 2 == 1) r = (p - r) % p;
    return r;
}

// The three expansion primitives are pure and hit with the same arguments
// throughout a sweep; thread_local memo tables keep them cheap without locks.

std::map<unsigned, Int> vandermonde_shift(const Int& m, unsigned r) {
    thread_local std::map<std::pair<Int, unsigned>, std::map<unsigned, Int>> cache;
    auto key = std::make_pair(m, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<unsigned, Int> out;
    for (unsigned k = 0; k <= r; ++k) {
        Int c = binom(m, r - k);
        if (c != 0) out.emplace(k, std::move(c));
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

std::map<unsigned, Int> mahler_scale(const Int& c, unsigned j) {
    thread_local std::map<std::pair<Int, unsigned>, std::map<unsigned, Int>> cache;
    auto key = std::make_pair(c, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<unsigned, Int> out;
    for (unsigned k = 0; k <= j; ++k) {
        Int d = 0;
        for (unsigned i = 0; i <= k; ++i) {
            Int term = binom(Int(k), i) * binom(c * i, j);
            if ((k - i) % 2 == 1) d -= term; else d += term;
        }
        if (d != 0) out.emplace(k, std::move(d));
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

std::map<unsigned, Int> torus_basis_product(unsigned r, unsigned s) {
    thread_local std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Int>> cache;
    auto key = std::make_pair(r, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<unsigned, Int> out;
    unsigned lim = std::min(r, s);
    for (unsigned i = 0; i <= lim; ++i) {
        Int c = binom(Int(r + s - i), s) * binom(Int(s), i);
        if (c != 0) out.emplace(r + s - i, std::move(c));
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace frobsplit
