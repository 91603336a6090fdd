#pragma once

// Root data stored with X = Y = Z^l in dual coordinates, pairing = dot
// product.  Every lattice map is an explicit integer matrix on cocharacters.

#include "frobsplit/integer.hpp"
#include "frobsplit/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frobsplit {

Int dot(const IntVec& a, const IntVec& b);
IntVec mat_apply(const IntMat& m, const IntVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// Elementary divisors of an integer matrix (Smith normal form diagonal,
// nonnegative, divisibility chain).
std::vector<Int> smith_normal_form(IntMat m);

struct RootDatum {
    std::string name;
    unsigned rank = 0;
    std::vector<IntVec> roots;        // coordinates in X
    std::vector<IntVec> coroots;      // coordinates in Y
    std::vector<unsigned> simple_indices;

    Int pairing(unsigned root_idx, unsigned coroot_idx) const {
        return dot(roots[root_idx], coroots[coroot_idx]);
    }

    static RootDatum from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    static RootDatum load(const std::string& path);
};

// Integer matrix acting on cocharacters, target_rank x source_rank.
struct LatticeMorphism {
    unsigned source_rank = 0;
    unsigned target_rank = 0;
    IntMat matrix;

    IntVec apply(const IntVec& y) const { return mat_apply(matrix, y); }
    // Transpose action on characters (target X -> source X).
    IntVec pullback(const IntVec& x) const;
};

// Root-datum axioms: dimensions, <alpha, alpha^vee> = 2, reflections permute
// roots and coroots compatibly, positive roots are nonnegative integer
// combinations of the simple roots.
VerificationReport validate(const RootDatum& rd);

// True iff the coroot lattice is saturated in Y: all Smith elementary
// divisors of the coroot matrix are 1.
bool is_derived_simply_connected(const RootDatum& rd);

// Central-extension construction: X^ = X_sc (+) X, Y^ = Y_sc (+) Y with
// Y_sc spanned by the simple coroots, roots (0, alpha), coroots
// (alpha^vee in simple-coroot coordinates, alpha^vee), plus the projection
// Y^ -> Y killing the sc block.  The result has simply connected derived
// group and surjective projection; both are checked internally.
std::pair<RootDatum, LatticeMorphism> z_extend(const RootDatum& rd);

struct DatumIsomorphism {
    IntMat on_cocharacters;  // P: Y1 -> Y2
    IntMat on_characters;    // inverse transpose: X1 -> X2
};

// Bounded brute-force search for an isomorphism of root data: P in GL(Z)
// on cocharacters with entries in [-bound, bound] carrying coroots to
// coroots bijectively while the inverse transpose carries roots to roots
// with the same bijection.  Absent result is inconclusive, not a disproof.
std::optional<DatumIsomorphism> find_isomorphism(const RootDatum& rd1,
                                                 const RootDatum& rd2,
                                                 unsigned bound);

} // namespace frobsplit
