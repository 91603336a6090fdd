#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobsplit/binomial.hpp"

using namespace frobsplit;

namespace {

// independent pointwise oracle: evaluate a {k -> coeff} expansion at x
Int eval_expansion(const std::map<unsigned, Int>& e, const Int& x) {
    Int s = 0;
    for (const auto& [k, c] : e) s += c * binom(x, k);
    return s;
}

} // namespace

TEST_CASE("binom on integers, including negative upper entry") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(-1, 2) == 1);
    CHECK(binom(-3, 3) == -10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-1, 0) == 1);
}

TEST_CASE("Pascal identity, negative n included") {
    for (int n = -12; n <= 12; ++n)
        for (unsigned k = 1; k <= 10; ++k)
            CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
}

TEST_CASE("binom_mod_p agrees with exact binom reduced") {
    for (std::int64_t p : {2, 3, 5, 7})
        for (int n = -60; n <= 60; ++n)
            for (unsigned k = 0; k <= 60; ++k) {
                Int exact = binom(n, k) % p;
                if (exact < 0) exact += p;
                CHECK(binom_mod_p(n, k, p) == exact);
            }
}

TEST_CASE("binom_mod_p pinned values") {
    for (std::int64_t p : {2, 3, 5})
        CHECK(binom_mod_p(-1, static_cast<unsigned>(p - 1), p) == 1);
    CHECK(binom_mod_p(6, 3, 3) == 2);
    CHECK(binom_mod_p(4, 2, 2) == 0);
}

TEST_CASE("binom_mod_p rejects composite modulus") {
    CHECK_THROWS_AS(binom_mod_p(5, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(binom_mod_p(5, 2, 1), std::invalid_argument);
}

TEST_CASE("vandermonde_shift examples") {
    auto e = vandermonde_shift(1, 2);
    CHECK(e == std::map<unsigned, Int>{{1, 1}, {2, 1}});
    e = vandermonde_shift(-1, 2);
    CHECK(e == std::map<unsigned, Int>{{0, 1}, {1, -1}, {2, 1}});
    e = vandermonde_shift(0, 3);
    CHECK(e == std::map<unsigned, Int>{{3, 1}});
}

TEST_CASE("vandermonde_shift pointwise oracle") {
    for (int m = -5; m <= 5; ++m)
        for (unsigned r = 0; r <= 6; ++r) {
            auto e = vandermonde_shift(m, r);
            for (int x = -static_cast<int>(r) - 8; x <= static_cast<int>(r) + 8; ++x)
                CHECK(eval_expansion(e, x) == binom(Int(x) + m, r));
        }
}

TEST_CASE("mahler_scale examples") {
    CHECK(mahler_scale(2, 2) == std::map<unsigned, Int>{{1, 1}, {2, 4}});
    CHECK(mahler_scale(1, 5) == std::map<unsigned, Int>{{5, 1}});
    CHECK(mahler_scale(-1, 1) == std::map<unsigned, Int>{{1, -1}});
}

TEST_CASE("mahler_scale pointwise oracle") {
    for (int c = -4; c <= 4; ++c)
        for (unsigned j = 0; j <= 6; ++j) {
            auto e = mahler_scale(c, j);
            for (const auto& [k, d] : e) CHECK(k <= j); // support bound
            for (int x = -static_cast<int>(j) - 8; x <= static_cast<int>(j) + 8; ++x)
                CHECK(eval_expansion(e, x) == binom(Int(c) * x, j));
        }
}

TEST_CASE("torus_basis_product examples and oracle") {
    CHECK(torus_basis_product(1, 1) == std::map<unsigned, Int>{{1, 1}, {2, 2}});
    CHECK(torus_basis_product(4, 0) == std::map<unsigned, Int>{{4, 1}});

    for (unsigned r = 0; r <= 7; ++r)
        for (unsigned s = 0; s <= 7; ++s) {
            auto e = torus_basis_product(r, s);
            for (const auto& [t, c] : e) {
                CHECK(t >= std::max(r, s));
                CHECK(t <= r + s);
            }
            for (int x = -static_cast<int>(r + s) - 3;
                 x <= static_cast<int>(r + s) + 3; ++x)
                CHECK(eval_expansion(e, x) == binom(x, r) * binom(x, s));
        }
}

TEST_CASE("divided-power digit coefficient is 1 mod p") {
    // coefficient of binom(X, p b' + b'') in binom(X, p b') binom(X, b'')
    for (std::int64_t p : {2, 3, 5})
        for (unsigned bp = 1; bp <= 3; ++bp)
            for (unsigned bs = 1; bs < static_cast<unsigned>(p); ++bs) {
                auto e = torus_basis_product(static_cast<unsigned>(p) * bp, bs);
                Int top = e.at(static_cast<unsigned>(p) * bp + bs);
                CHECK(top % p == 1);
            }
}
