#include "frobsplit/compat.hpp"

#include <stdexcept>

namespace frobsplit {

TorusProjection TorusProjection::from_morphism(const LatticeMorphism& m) {
    TorusProjection proj;
    proj.source_rank = m.source_rank;
    proj.target_rank = m.target_rank;
    proj.killed.assign(m.source_rank, true);
    proj.keep_map.assign(m.source_rank, 0);
    for (unsigned j = 0; j < m.source_rank; ++j) {
        unsigned hits = 0, target = 0;
        for (unsigned i = 0; i < m.target_rank; ++i) {
            if (m.matrix[i][j] == 0) continue;
            if (m.matrix[i][j] != 1) throw std::invalid_argument(
                "TorusProjection: morphism is not a coordinate projection");
            ++hits;
            target = i;
        }
        if (hits > 1) throw std::invalid_argument(
            "TorusProjection: morphism is not a coordinate projection");
        if (hits == 1) {
            proj.killed[j] = false;
            proj.keep_map[j] = target;
        }
    }
    return proj;
}

TorusElement dist_pi_hat(const TorusProjection& proj, const TorusElement& x) {
    if (x.rank() != proj.source_rank)
        throw std::invalid_argument("dist_pi_hat: rank mismatch");
    TorusElement out(proj.target_rank, x.ring());
    for (const auto& [b, c] : x.terms()) {
        MultiIndex image(proj.target_rank, 0);
        bool survives = true;
        for (unsigned j = 0; j < proj.source_rank; ++j) {
            if (proj.killed[j]) {
                if (b[j] != 0) { survives = false; break; }
            } else {
                image[proj.keep_map[j]] = b[j];
            }
        }
        if (survives) out.add_term(image, c);
    }
    return out;
}

PbwElement dist_pi_hat_pbw(const TorusProjection& proj,
                           const std::shared_ptr<const AlgebraContext>& target_ctx,
                           const PbwElement& x) {
    if (x.context()->rank != proj.source_rank || target_ctx->rank != proj.target_rank)
        throw std::invalid_argument("dist_pi_hat_pbw: rank mismatch");
    PbwElement out(target_ctx);
    for (const auto& [k, c] : x.terms()) {
        MultiIndex image(proj.target_rank, 0);
        bool survives = true;
        for (unsigned j = 0; j < proj.source_rank; ++j) {
            if (proj.killed[j]) {
                if (k.b[j] != 0) { survives = false; break; }
            } else {
                image[proj.keep_map[j]] = k.b[j];
            }
        }
        if (survives) out.add_term({k.f, std::move(image), k.e}, c);
    }
    return out;
}

VerificationReport verify_compat(const TorusProjection& proj, std::int64_t p,
                                 unsigned deg_bound) {
    VerificationReport rep;
    rep.check = "compat";
    rep.parameters = {{"p", p}, {"source_rank", proj.source_rank},
                      {"target_rank", proj.target_rank}, {"deg_bound", deg_bound}};
    Ring ring = Ring::prime_field(p);

    ++rep.trials;
    if (!(dist_pi_hat(proj, mu0(p, proj.source_rank)) == mu0(p, proj.target_rank)))
        rep.fail({{"part", "mu0_descent"}});

    // enumerate source multi-indices with |b| <= deg_bound
    std::vector<MultiIndex> bs;
    MultiIndex cur(proj.source_rank, 0);
    auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos == proj.source_rank) { bs.push_back(cur); return; }
        for (unsigned v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, deg_bound);

    for (const auto& b : bs) {
        ++rep.trials;
        TorusElement x = TorusElement::monomial(proj.source_rank, ring, b);
        if (!(dist_pi_hat(proj, phi0(x)) == phi0(dist_pi_hat(proj, x))))
            rep.fail({{"part", "phi_intertwine"}, {"b", b}});
        // Frobenius intertwining on the same grid
        if (!(dist_pi_hat(proj, frobenius_torus(x)) ==
              frobenius_torus(dist_pi_hat(proj, x))))
            rep.fail({{"part", "frobenius_intertwine"}, {"b", b}});
    }

    // homomorphism property on monomial pairs
    for (const auto& b1 : bs)
        for (const auto& b2 : bs) {
            ++rep.trials;
            TorusElement x = TorusElement::monomial(proj.source_rank, ring, b1);
            TorusElement y = TorusElement::monomial(proj.source_rank, ring, b2);
            if (!(dist_pi_hat(proj, x * y) ==
                  dist_pi_hat(proj, x) * dist_pi_hat(proj, y)))
                rep.fail({{"part", "homomorphism"}, {"b1", b1}, {"b2", b2}});
        }
    return rep;
}

} // namespace frobsplit
