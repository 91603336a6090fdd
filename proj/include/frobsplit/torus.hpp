#pragma once

// The commutative algebra Dist(T) in the basis binom(H, b) = prod binom(H_i, b_i),
// over Z or F_p: structure-constant products, the evaluation oracle, the
// idempotent mu_0, phi^0, the torus Frobenius, and the Lemma sweeps behind
// the `verify lemma11` subcommand.

#include "frobsplit/binomial.hpp"
#include "frobsplit/report.hpp"
#include "frobsplit/ring.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace frobsplit {

using MultiIndex = std::vector<unsigned>;

class TorusElement {
public:
    TorusElement(unsigned rank, Ring ring) : rank_(rank), ring_(ring) {}

    static TorusElement zero(unsigned rank, Ring ring) { return {rank, ring}; }
    static TorusElement one(unsigned rank, Ring ring);
    // coef * binom(H, b)
    static TorusElement monomial(unsigned rank, Ring ring, MultiIndex b, Int coef = 1);

    unsigned rank() const { return rank_; }
    const Ring& ring() const { return ring_; }
    const std::map<MultiIndex, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& b, const Int& coef);

    TorusElement& operator+=(const TorusElement& other);
    TorusElement& operator-=(const TorusElement& other);
    TorusElement operator+(const TorusElement& o) const { auto r = *this; r += o; return r; }
    TorusElement operator-(const TorusElement& o) const { auto r = *this; r -= o; return r; }
    TorusElement operator*(const TorusElement& other) const;
    TorusElement scaled(const Int& c) const;
    bool operator==(const TorusElement&) const = default;

    // binom(H, b) |-> prod binom(h_i, b_i); a ring homomorphism for fixed h.
    Int eval(const IntVec& h) const;

    TorusElement reduce_mod(std::int64_t p) const;

    nlohmann::json to_json() const;
    static TorusElement from_json(const nlohmann::json& j);

private:
    unsigned rank_;
    Ring ring_;
    std::map<MultiIndex, Int> terms_; // canonical: no zero coefficients
};

// mu_0 = prod_i binom(H_i - 1, p - 1), expanded into the basis over F_p.
TorusElement mu0(std::int64_t p, unsigned rank);

// binom(sum_i c_i H_i + m, r) expanded into the basis; exact over Z.
TorusElement lincomb_binom(const IntVec& c, const Int& m, unsigned r,
                           unsigned rank, Ring ring);

// binom(H_i, b) |-> binom(H_i + s_i, b), extended multiplicatively and linearly.
TorusElement shift_torus(const TorusElement& x, const IntVec& s);

// binom(H, b) |-> binom(H, p b) mu_0, extended linearly.  F_p only.
TorusElement phi0(const TorusElement& x);

// binom(H, b) |-> binom(H, b/p) when p divides b componentwise, else 0.
TorusElement frobenius_torus(const TorusElement& x);

enum class Lemma11Part { i, ii, iii };

// Exhaustive sweep of the Lemma identities over a in a_range, c in c_range,
// b <= b_max, all coordinates i.  Part (iii) uses the mu_0-corrected right
// side.  Ranges are inclusive.
VerificationReport verify_lemma_1_1(std::int64_t p, unsigned rank,
                                    std::int64_t a_lo, std::int64_t a_hi,
                                    std::int64_t c_lo, std::int64_t c_hi,
                                    unsigned b_max, Lemma11Part which);

} // namespace frobsplit
