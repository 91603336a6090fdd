#pragma once

// Dist(pi_hat): the projection from the z-extension's torus algebra onto
// Dist(T).  In the chosen bases the cocharacter map is a 0/1 coordinate
// projection, so the algebra map kills binom(H_j, b>0) for dropped
// coordinates and renames the rest.

#include "frobsplit/pbw.hpp"
#include "frobsplit/root_datum.hpp"
#include "frobsplit/torus.hpp"

#include <vector>

namespace frobsplit {

struct TorusProjection {
    unsigned source_rank = 0;
    unsigned target_rank = 0;
    std::vector<bool> killed;       // size source_rank
    std::vector<unsigned> keep_map; // source index -> target index (killed: unused)

    // Derive from a z_extend morphism, whose matrix is a coordinate projection.
    static TorusProjection from_morphism(const LatticeMorphism& m);
};

TorusElement dist_pi_hat(const TorusProjection& proj, const TorusElement& x);

// Rank-1 slice version: identity on E/F exponents, projection on the torus part.
PbwElement dist_pi_hat_pbw(const TorusProjection& proj,
                           const std::shared_ptr<const AlgebraContext>& target_ctx,
                           const PbwElement& x);

// Dist(pi_hat) . phi_hat = phi . Dist(pi_hat) on all torus monomials with
// |b| <= deg_bound, as exact TorusElement equalities; plus mu_0 descent.
VerificationReport verify_compat(const TorusProjection& proj, std::int64_t p,
                                 unsigned deg_bound);

} // namespace frobsplit
