#include "frobsplit/character.hpp"

#include <stdexcept>

namespace frobsplit {

Character Character::operator*(const Character& other) const {
    Character out;
    for (const auto& [w1, m1] : mult)
        for (const auto& [w2, m2] : other.mult) {
            IntVec w = w1;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
            auto& v = out.mult[w];
            v += m1 * m2;
            if (v == 0) out.mult.erase(w);
        }
    return out;
}

Character Character::operator+(const Character& other) const {
    Character out = *this;
    for (const auto& [w, m] : other.mult) {
        auto& v = out.mult[w];
        v += m;
        if (v == 0) out.mult.erase(w);
    }
    return out;
}

nlohmann::json Character::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, m] : mult) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : w) row.push_back(static_cast<std::int64_t>(x));
        arr.push_back({{"weight", row}, {"mult", m}});
    }
    return arr;
}

Character character(const WeightModule& m) {
    Character ch;
    for (const auto& w : m.weights) ++ch.mult[w];
    return ch;
}

Character contract_character(const Character& ch, std::int64_t p) {
    Character out;
    for (const auto& [w, m] : ch.mult) {
        IntVec q(w.size());
        bool divisible = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] % p != 0) { divisible = false; break; }
            q[i] = w[i] / p;
        }
        if (divisible) out.mult[q] += m;
    }
    return out;
}

Character stretch_character(const Character& ch, std::int64_t p) {
    Character out;
    for (const auto& [w, m] : ch.mult) {
        IntVec pw = w;
        for (auto& v : pw) v *= p;
        out.mult[pw] = m;
    }
    return out;
}

Character weyl_character_sl2(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("weyl_character_sl2: n < 0");
    Character ch;
    for (std::int64_t w = -n; w <= n; w += 2) ch.mult[{Int(w)}] = 1;
    return ch;
}

Character tilting_character_sl2(std::int64_t p, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("tilting_character_sl2: m < 0");
    if (m <= p - 1) return weyl_character_sl2(m);
    if (m <= 2 * p - 2)
        return weyl_character_sl2(m) + weyl_character_sl2(2 * p - 2 - m);
    // m = m0 + p m1, m0 in [p-1, 2p-2]
    std::int64_t m0 = p - 1 + (m - (p - 1)) % p;
    std::int64_t m1 = (m - m0) / p;
    return tilting_character_sl2(p, m0) *
           stretch_character(tilting_character_sl2(p, m1), p);
}

CharacterDecomposition decompose_character(const Character& ch,
                                           CharacterBasis basis,
                                           std::int64_t p) {
    for (const auto& [w, m] : ch.mult)
        if (w.size() != 1)
            throw std::invalid_argument("decompose_character: rank-1 characters only");
    if (basis == CharacterBasis::tilting && !is_prime(p))
        throw std::invalid_argument("decompose_character: tilting basis needs prime p");

    CharacterDecomposition out;
    Character rem = ch;
    while (!rem.mult.empty()) {
        // highest weight present
        Int top = rem.mult.begin()->first[0];
        std::int64_t mult = 0;
        for (const auto& [w, m] : rem.mult)
            if (w[0] > top) { top = w[0]; }
        mult = rem.mult.at({top});
        if (top < 0) { out.exact = false; return out; } // not in the span
        auto n = static_cast<std::int64_t>(top);
        Character b = basis == CharacterBasis::weyl ? weyl_character_sl2(n)
                                                    : tilting_character_sl2(p, n);
        out.coeffs[n] = mult;
        for (const auto& [w, m] : b.mult) {
            auto& v = rem.mult[w];
            v -= mult * m;
            if (v == 0) rem.mult.erase(w);
        }
    }
    out.exact = true;
    out.nonneg = true;
    for (const auto& [n, c] : out.coeffs)
        if (c < 0) out.nonneg = false;
    return out;
}

} // namespace frobsplit
