#pragma once

// Finite-dimensional X-graded modules over a rank-1 context, carrying
// explicit divided-power operator matrices.  Operators beyond n_max are zero
// (E and F act nilpotently with degree < dim <= n_max).

#include "frobsplit/pbw.hpp"
#include "frobsplit/report.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace frobsplit {

using Mat = std::vector<IntVec>; // row-major, entry[row][col]

Mat zero_mat(unsigned rows, unsigned cols);
Mat identity_mat(unsigned n);
Mat mat_product(const Mat& a, const Mat& b, const Ring& ring);
Mat mat_scaled(const Mat& a, const Int& c, const Ring& ring);
Mat mat_sum(const Mat& a, const Mat& b, const Ring& ring);
Mat kronecker(const Mat& a, const Mat& b, const Ring& ring);

struct WeightModule {
    std::shared_ptr<const AlgebraContext> ctx;
    unsigned dim = 0;
    std::vector<IntVec> weights;  // weight of each basis vector, in X
    unsigned n_max = 0;
    std::vector<Mat> opE;         // index n in [0, n_max]; opE[0] = identity
    std::vector<Mat> opF;

    // zero matrix beyond n_max
    Mat op_e(unsigned n) const;
    Mat op_f(unsigned n) const;

    // diag over basis vectors of prod_i binom(<lambda, H_i>, b_i)
    Mat torus_op(const MultiIndex& b) const;

    // action matrix of an arbitrary hyperalgebra element
    Mat action(const PbwElement& x) const;

    bool equal(const WeightModule& other) const;

    nlohmann::json to_json() const;
};

// A weight lambda with <lambda, alpha_vee> = n, when n is a multiple of the
// gcd of the coroot coordinates (e.g. every n for SL2, even n for PGL2).
std::optional<IntVec> dominant_weight(const AlgebraContext& ctx, unsigned n);

// Divided-power Weyl module of highest weight lambda: basis v_0..v_n with
// F^(r) v_i = binom(i+r, r) v_{i+r}, E^(r) v_i = binom(n-i+r, r) v_{i-r},
// n = <lambda, alpha_vee>, weights lambda - i alpha.
WeightModule weyl_module(std::shared_ptr<const AlgebraContext> ctx, IntVec lambda);

// All WeightModule invariants as exact matrix identities: weight zero
// patterns, divided-power rules, E/F commutation.  relation_bound = 0 picks
// min(n_max, dim + 1).
VerificationReport validate_module(const WeightModule& m, unsigned relation_bound = 0);

// Action through Dist(F): weights times p, op(n) = old op(n/p) when p | n.
WeightModule frobenius_twist(const WeightModule& m);

// mu_0 M: span of basis vectors with p | <lambda, H_i> for all i, weights
// divided by p, op(n) = restriction of old op(pn).
WeightModule contract(const WeightModule& m);

WeightModule tensor(const WeightModule& a, const WeightModule& b);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);

struct TorusProjection; // compat.hpp

// Subspace of weight vectors whose killed coordinates vanish, re-expressed
// over the target context with operators restricted.
WeightModule k_invariants(const WeightModule& m, const TorusProjection& proj,
                          std::shared_ptr<const AlgebraContext> target_ctx);

// Basis of the common kernel of op_e(i), op_f(i) for 0 < i < p intersected
// with the weight spaces divisible by p.  F_p only.
std::vector<IntVec> g1_invariants(const WeightModule& m);

} // namespace frobsplit
