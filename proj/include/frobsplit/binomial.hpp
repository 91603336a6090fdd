#pragma once

// Generalized binomial coefficients over Z, their reductions mod p, and the
// three expansion primitives used throughout the torus algebra: shifting the
// argument (Vandermonde), scaling the argument (finite differences), and the
// product of two basis binomials.

#include "frobsplit/integer.hpp"

#include <cstdint>
#include <map>

namespace frobsplit {

// binom(n, k) = n(n-1)...(n-k+1)/k!, exact for any integer n, k >= 0.
Int binom(const Int& n, unsigned k);

// binom(n, k) mod p.  Nonnegative n goes through base-p digits (Lucas);
// negative n through the reflection binom(n,k) = (-1)^k binom(-n+k-1, k).
// Throws std::invalid_argument for non-prime p.
std::int64_t binom_mod_p(const Int& n, unsigned k, std::int64_t p);

// Coefficients of binom(X+m, r) in the basis {binom(X,k)}: k -> binom(m, r-k).
// Zero coefficients omitted.
std::map<unsigned, Int> vandermonde_shift(const Int& m, unsigned r);

// Coefficients d_k with binom(cX, j) = sum_k d_k binom(X, k), computed by
// finite differences of k -> binom(ck, j).  Support within [0, j]; all
// coefficients exact integers.
std::map<unsigned, Int> mahler_scale(const Int& c, unsigned j);

// Coefficients of binom(X,r) binom(X,s) in the basis {binom(X,t)}:
// t = r+s-i -> binom(r+s-i, s) binom(s, i), i in [0, min(r,s)].
std::map<unsigned, Int> torus_basis_product(unsigned r, unsigned s);

} // namespace frobsplit
