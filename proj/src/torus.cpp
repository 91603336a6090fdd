#include "frobsplit/torus.hpp"

#include <stdexcept>

namespace frobsplit {

TorusElement TorusElement::one(unsigned rank, Ring ring) {
    return monomial(rank, ring, MultiIndex(rank, 0));
}

TorusElement TorusElement::monomial(unsigned rank, Ring ring, MultiIndex b, Int coef) {
    TorusElement x(rank, ring);
    x.add_term(b, coef);
    return x;
}

void TorusElement::add_term(const MultiIndex& b, const Int& coef) {
    if (b.size() != rank_) throw std::invalid_argument("TorusElement: multi-index length != rank");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        Int v = ring_.normalize(coef);
        if (v != 0) terms_.emplace(b, std::move(v));
    } else {
        it->second = ring_.normalize(it->second + coef);
        if (it->second == 0) terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
    if (rank_ != other.rank_ || ring_ != other.ring_)
        throw std::invalid_argument("TorusElement: rank/ring mismatch");
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
    if (rank_ != other.rank_ || ring_ != other.ring_)
        throw std::invalid_argument("TorusElement: rank/ring mismatch");
    for (const auto& [b, c] : other.terms_) add_term(b, -c);
    return *this;
}

TorusElement TorusElement::operator*(const TorusElement& other) const {
    if (rank_ != other.rank_ || ring_ != other.ring_)
        throw std::invalid_argument("TorusElement: rank/ring mismatch");
    TorusElement out(rank_, ring_);
    for (const auto& [b1, c1] : terms_)
        for (const auto& [b2, c2] : other.terms_) {
            // distribute the coordinatewise products binom(H_i,b1_i) binom(H_i,b2_i)
            std::vector<std::pair<MultiIndex, Int>> partial{{MultiIndex{}, c1 * c2}};
            for (unsigned i = 0; i < rank_; ++i) {
                auto factor = torus_basis_product(b1[i], b2[i]);
                std::vector<std::pair<MultiIndex, Int>> next;
                next.reserve(partial.size() * factor.size());
                for (const auto& [prefix, coef] : partial)
                    for (const auto& [t, d] : factor) {
                        MultiIndex ext = prefix;
                        ext.push_back(t);
                        next.emplace_back(std::move(ext), coef * d);
                    }
                partial = std::move(next);
            }
            for (auto& [b, c] : partial) out.add_term(b, c);
        }
    return out;
}

TorusElement TorusElement::scaled(const Int& c) const {
    TorusElement out(rank_, ring_);
    for (const auto& [b, v] : terms_) out.add_term(b, v * c);
    return out;
}

Int TorusElement::eval(const IntVec& h) const {
    if (h.size() != rank_) throw std::invalid_argument("TorusElement::eval: size mismatch");
    Int sum = 0;
    for (const auto& [b, c] : terms_) {
        Int prod = c;
        for (unsigned i = 0; i < rank_; ++i) prod *= binom(h[i], b[i]);
        sum += prod;
    }
    return ring_.normalize(sum);
}

TorusElement TorusElement::reduce_mod(std::int64_t p) const {
    TorusElement out(rank_, Ring::prime_field(p));
    for (const auto& [b, c] : terms_) out.add_term(b, c);
    return out;
}

nlohmann::json TorusElement::to_json() const {
    nlohmann::json j;
    if (ring_.is_fp()) j["ring"] = {{"Fp", ring_.p}};
    else j["ring"] = "Z";
    j["rank"] = rank_;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [b, c] : terms_) // std::map order = lexicographic
        arr.push_back({{"b", b}, {"coef", c.str()}});
    j["terms"] = arr;
    return j;
}

TorusElement TorusElement::from_json(const nlohmann::json& j) {
    Ring ring = j.at("ring").is_string() ? Ring::integers()
                : Ring::prime_field(j.at("ring").at("Fp").get<std::int64_t>());
    TorusElement x(j.at("rank").get<unsigned>(), ring);
    for (const auto& t : j.at("terms")) {
        MultiIndex b = t.at("b").get<MultiIndex>();
        x.add_term(b, Int(t.at("coef").get<std::string>()));
    }
    return x;
}

TorusElement mu0(std::int64_t p, unsigned rank) {
    Ring ring = Ring::prime_field(p);
    TorusElement out = TorusElement::one(rank, ring);
    for (unsigned i = 0; i < rank; ++i) {
        TorusElement factor(rank, ring);
        for (const auto& [k, c] : vandermonde_shift(Int(-1), static_cast<unsigned>(p - 1))) {
            MultiIndex b(rank, 0);
            b[i] = k;
            factor.add_term(b, c);
        }
        out = out * factor;
    }
    return out;
}

TorusElement lincomb_binom(const IntVec& c, const Int& m, unsigned r,
                           unsigned rank, Ring ring) {
    if (c.size() != rank) throw std::invalid_argument("lincomb_binom: size mismatch");
    struct Key {
        IntVec c; Int m; unsigned r; unsigned rank; std::int64_t p;
        bool operator<(const Key& o) const {
            return std::tie(c, m, r, rank, p) < std::tie(o.c, o.m, o.r, o.rank, o.p);
        }
    };
    thread_local std::map<Key, TorusElement> cache;
    Key key{c, m, r, rank, ring.p};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    // binom(sum c_i H_i + m, r): convolve one summand at a time (Vandermonde),
    // expanding each binom(c_i H_i, j) via mahler_scale.
    // state: partial multi-index expansion of the first i summands by degree used
    struct Partial { MultiIndex b; Int coef; };
    // deg -> terms of total Vandermonde degree split so far
    std::map<unsigned, std::vector<Partial>> by_used{{0, {{MultiIndex{}, Int(1)}}}};
    for (unsigned i = 0; i < rank; ++i) {
        std::map<unsigned, std::vector<Partial>> next;
        for (const auto& [used, parts] : by_used)
            for (unsigned j = 0; j + used <= r; ++j) {
                auto expansion = mahler_scale(c[i], j);
                if (expansion.empty() && j > 0) continue;
                if (j == 0) expansion = {{0u, Int(1)}};
                for (const auto& p : parts)
                    for (const auto& [k, d] : expansion) {
                        MultiIndex b = p.b;
                        b.push_back(k);
                        next[used + j].push_back({std::move(b), p.coef * d});
                    }
            }
        by_used = std::move(next);
    }
    TorusElement out(rank, ring);
    for (const auto& [used, parts] : by_used) {
        Int scalar = binom(m, r - used); // binom(m, j_0) with j_0 = r - used
        if (scalar == 0) continue;
        for (const auto& p : parts) out.add_term(p.b, p.coef * scalar);
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

TorusElement shift_torus(const TorusElement& x, const IntVec& s) {
    if (s.size() != x.rank()) throw std::invalid_argument("shift_torus: size mismatch");
    thread_local std::map<std::pair<MultiIndex, IntVec>,
                          std::vector<std::pair<MultiIndex, Int>>> cache;
    TorusElement out(x.rank(), x.ring());
    for (const auto& [b, c] : x.terms()) {
        auto key = std::make_pair(b, s);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<std::pair<MultiIndex, Int>> partial{{MultiIndex{}, Int(1)}};
            for (unsigned i = 0; i < x.rank(); ++i) {
                auto factor = vandermonde_shift(s[i], b[i]);
                std::vector<std::pair<MultiIndex, Int>> next;
                for (const auto& [prefix, coef] : partial)
                    for (const auto& [k, d] : factor) {
                        MultiIndex ext = prefix;
                        ext.push_back(k);
                        next.emplace_back(std::move(ext), coef * d);
                    }
                partial = std::move(next);
            }
            it = cache.emplace(std::move(key), std::move(partial)).first;
        }
        for (const auto& [nb, nc] : it->second) out.add_term(nb, nc * c);
    }
    return out;
}

TorusElement phi0(const TorusElement& x) {
    if (!x.ring().is_fp())
        throw std::invalid_argument("phi0: defined over F_p only");
    auto p = static_cast<unsigned>(x.ring().p);
    TorusElement out(x.rank(), x.ring());
    for (const auto& [b, c] : x.terms()) {
        MultiIndex pb(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) pb[i] = p * b[i];
        out.add_term(pb, c);
    }
    return out * mu0(x.ring().p, x.rank());
}

TorusElement frobenius_torus(const TorusElement& x) {
    if (!x.ring().is_fp())
        throw std::invalid_argument("frobenius_torus: defined over F_p only");
    auto p = static_cast<unsigned>(x.ring().p);
    TorusElement out(x.rank(), x.ring());
    for (const auto& [b, c] : x.terms()) {
        MultiIndex q(b.size());
        bool divisible = true;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] % p != 0) { divisible = false; break; }
            q[i] = b[i] / p;
        }
        if (divisible) out.add_term(q, c);
    }
    return out;
}

VerificationReport verify_lemma_1_1(std::int64_t p, unsigned rank,
                                    std::int64_t a_lo, std::int64_t a_hi,
                                    std::int64_t c_lo, std::int64_t c_hi,
                                    unsigned b_max, Lemma11Part which) {
    VerificationReport rep;
    rep.check = "lemma11";
    rep.parameters = {{"p", p}, {"rank", rank}, {"a", {a_lo, a_hi}},
                      {"c", {c_lo, c_hi}}, {"b_max", b_max},
                      {"part", which == Lemma11Part::i ? "i"
                               : which == Lemma11Part::ii ? "ii" : "iii"}};
    Ring ring = Ring::prime_field(p);
    TorusElement mu = mu0(p, rank);

    auto coord = [&](unsigned i, const Int& coef) {
        IntVec c(rank, 0);
        c[i] = coef;
        return c;
    };

    for (unsigned i = 0; i < rank; ++i) {
        for (std::int64_t a = a_lo; a <= a_hi; ++a) {
            if (which == Lemma11Part::iii && a != a_lo) break; // (iii) has no a
            for (std::int64_t c = c_lo; c <= c_hi; ++c) {
                if (which != Lemma11Part::iii && c != c_lo) break; // only (iii) has c
                for (unsigned b = 0; b <= b_max; ++b) {
                    ++rep.trials;
                    bool ok = true;
                    switch (which) {
                    case Lemma11Part::i: {
                        // binom(aH_i, b) mu_0 = 0 unless p | b
                        if (b % p == 0) break;
                        auto lhs = lincomb_binom(coord(i, a), 0, b, rank, ring) * mu;
                        ok = lhs.is_zero();
                        break;
                    }
                    case Lemma11Part::ii: {
                        // phi0(binom(aH_i, b)) = binom(aH_i, pb) mu_0
                        auto lhs = phi0(lincomb_binom(coord(i, a), 0, b, rank, ring));
                        auto rhs = lincomb_binom(coord(i, a), 0,
                                                 b * static_cast<unsigned>(p), rank, ring) * mu;
                        ok = lhs == rhs;
                        break;
                    }
                    case Lemma11Part::iii: {
                        // phi0(binom(H_i + c, b)) = binom(H_i + pc, pb) mu_0
                        auto lhs = phi0(lincomb_binom(coord(i, 1), c, b, rank, ring));
                        auto rhs = lincomb_binom(coord(i, 1), Int(c) * p,
                                                 b * static_cast<unsigned>(p), rank, ring) * mu;
                        ok = lhs == rhs;
                        break;
                    }
                    }
                    if (!ok)
                        rep.fail({{"i", i}, {"a", a}, {"c", c}, {"b", b}});
                }
            }
        }
    }
    return rep;
}

} // namespace frobsplit
