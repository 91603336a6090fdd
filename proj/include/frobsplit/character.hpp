#pragma once

// Characters of weight modules and their decompositions in the Weyl and
// tilting bases for SL2-type contexts (rank 1, root = (2)).  Tilting
// characters come from the classical table: chT(m) = chi(m) for m <= p-1,
// chi(m) + chi(2p-2-m) for p <= m <= 2p-2, and the Donkin tensor recursion
// chT(m0 + p m1) = chT(m0) * stretch_p(chT(m1)) with m0 in [p-1, 2p-2]
// above that.  The table is cross-checked structurally, not assumed.

#include "frobsplit/weight_module.hpp"

#include <cstdint>
#include <map>

namespace frobsplit {

struct Character {
    std::map<IntVec, std::int64_t> mult;

    Character operator*(const Character& other) const; // convolution
    Character operator+(const Character& other) const;
    bool operator==(const Character&) const = default;

    nlohmann::json to_json() const;
};

Character character(const WeightModule& m);

// keep weights with all coordinates divisible by p, divide by p
Character contract_character(const Character& ch, std::int64_t p);

// multiply all weights by p
Character stretch_character(const Character& ch, std::int64_t p);

// chi(n) on a rank-1 lattice: weights n, n-2, ..., -n with multiplicity 1
Character weyl_character_sl2(std::int64_t n);

Character tilting_character_sl2(std::int64_t p, std::int64_t m);

enum class CharacterBasis { weyl, tilting };

struct CharacterDecomposition {
    std::map<std::int64_t, std::int64_t> coeffs;
    bool exact = false;   // remainder zero
    bool nonneg = false;  // all coefficients >= 0
};

// Triangular elimination against the chosen basis; requires a rank-1
// character.  p is used for the tilting basis only.
CharacterDecomposition decompose_character(const Character& ch,
                                           CharacterBasis basis,
                                           std::int64_t p = 0);

} // namespace frobsplit
