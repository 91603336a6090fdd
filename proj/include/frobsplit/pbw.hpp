#pragma once

// The hyperalgebra of a reductive root datum of semisimple rank 1 and
// arbitrary torus rank, in the PBW basis F^(a) binom(H, b) E^(c).
// Multiplication straightens through three rules: E-past-F commutation,
// torus-past-F/E shifts, and the divided-power rule
// F^(a) F^(a') = binom(a+a', a) F^(a+a').

#include "frobsplit/report.hpp"
#include "frobsplit/root_datum.hpp"
#include "frobsplit/torus.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>

namespace frobsplit {

struct AlgebraContext {
    RootDatum datum;          // exactly one positive (= simple) root
    unsigned rank = 0;        // torus rank l
    IntVec alpha_on_H;        // alpha(H_i), i.e. coordinates of alpha in X
    IntVec coroot_coeffs;     // c_i with H_alpha = sum c_i H_i
    Ring ring;

    static AlgebraContext make(RootDatum rd, Ring ring);

    bool operator==(const AlgebraContext& o) const {
        return rank == o.rank && alpha_on_H == o.alpha_on_H &&
               coroot_coeffs == o.coroot_coeffs && ring == o.ring;
    }
};

struct PbwKey {
    unsigned f;     // exponent of F^(f)
    MultiIndex b;   // torus multi-index
    unsigned e;     // exponent of E^(e)

    auto operator<=>(const PbwKey&) const = default;
};

class PbwElement {
public:
    explicit PbwElement(std::shared_ptr<const AlgebraContext> ctx)
        : ctx_(std::move(ctx)) {}

    static PbwElement zero(std::shared_ptr<const AlgebraContext> ctx) {
        return PbwElement(std::move(ctx));
    }
    static PbwElement one(std::shared_ptr<const AlgebraContext> ctx);
    static PbwElement monomial(std::shared_ptr<const AlgebraContext> ctx,
                               unsigned f, MultiIndex b, unsigned e, Int coef = 1);
    static PbwElement f_power(std::shared_ptr<const AlgebraContext> ctx, unsigned n);
    static PbwElement e_power(std::shared_ptr<const AlgebraContext> ctx, unsigned n);
    static PbwElement from_torus(std::shared_ptr<const AlgebraContext> ctx,
                                 const TorusElement& t);

    const std::shared_ptr<const AlgebraContext>& context() const { return ctx_; }
    const std::map<PbwKey, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PbwKey& k, const Int& coef);

    PbwElement& operator+=(const PbwElement& other);
    PbwElement& operator-=(const PbwElement& other);
    PbwElement operator+(const PbwElement& o) const { auto r = *this; r += o; return r; }
    PbwElement operator-(const PbwElement& o) const { auto r = *this; r -= o; return r; }
    PbwElement operator*(const PbwElement& other) const;
    PbwElement scaled(const Int& c) const;

    bool equal(const PbwElement& other) const {
        return *ctx_ == *other.ctx_ && terms_ == other.terms_;
    }
    bool operator==(const PbwElement& o) const { return equal(o); }

    PbwElement reduce_mod(std::int64_t p) const;

    nlohmann::json to_json() const;
    static PbwElement from_json(std::shared_ptr<const AlgebraContext> ctx,
                                const nlohmann::json& j);

private:
    std::shared_ptr<const AlgebraContext> ctx_;
    std::map<PbwKey, Int> terms_; // canonical: no zero coefficients
};

// mu_0 embedded in the hyperalgebra.  F_p only.
PbwElement mu0_pbw(const std::shared_ptr<const AlgebraContext>& ctx);

// F^(a) binom(H,b) E^(c) |-> F^(a/p) binom(H,b/p) E^(c/p) when p divides
// everything, else 0.  F_p only.
PbwElement frobenius(const PbwElement& x);

// F^(a) binom(H,b) E^(c) |-> F^(pa) binom(H,pb) E^(pc) mu_0, extended
// linearly.  F_p only; multiplicativity is what `verify_theorem` checks.
PbwElement phi(const PbwElement& x);

// Checks F^(pa) phi0(binom(H_i+c, b)) = phi0(binom(H_i + a alpha(H_i) + c, b)) F^(pa)
// and the E-side analogue with - a alpha(H_i), over the full grid.
VerificationReport verify_borel(const std::shared_ptr<const AlgebraContext>& ctx,
                                unsigned a_max, unsigned b_max,
                                std::int64_t c_lo, std::int64_t c_hi);

struct TheoremMode {
    bool exhaustive = true;
    unsigned samples = 0;
    std::uint64_t seed = 0;
};

// (a) phi(xy) = phi(x) phi(y) on basis monomial pairs, (b) frobenius(phi(x)) = x,
// (c) the straightened E^(pa) F^(pb) mu_0 identity; all within deg_bound.
VerificationReport verify_theorem(const std::shared_ptr<const AlgebraContext>& ctx,
                                  unsigned deg_bound, TheoremMode mode = {},
                                  unsigned jobs = 1);

// All basis monomials with f, e <= deg and |b| <= deg, in canonical order.
std::vector<PbwKey> monomial_grid(unsigned rank, unsigned deg);

} // namespace frobsplit
