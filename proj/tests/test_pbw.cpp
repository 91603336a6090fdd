#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobsplit/pbw.hpp"
#include "frobsplit/weight_module.hpp"

#include <random>
#include <string>

using namespace frobsplit;

namespace {

std::shared_ptr<const AlgebraContext> ctx_for(const std::string& file, Ring ring) {
    return std::make_shared<AlgebraContext>(AlgebraContext::make(
        RootDatum::load(std::string(FROBSPLIT_DATA_DIR) + "/" + file), ring));
}

} // namespace

TEST_CASE("E F straightening in SL2") {
    auto ctx = ctx_for("sl2.json", Ring::integers());
    auto prod = PbwElement::e_power(ctx, 1) * PbwElement::f_power(ctx, 1);
    PbwElement expect(ctx);
    expect.add_term({1, {0}, 1}, 1);
    expect.add_term({0, {1}, 0}, 1);
    CHECK(prod.equal(expect));
}

TEST_CASE("E F straightening in PGL2 picks up H_alpha = 2 H") {
    auto ctx = ctx_for("pgl2.json", Ring::integers());
    auto prod = PbwElement::e_power(ctx, 1) * PbwElement::f_power(ctx, 1);
    PbwElement expect(ctx);
    expect.add_term({1, {0}, 1}, 1);
    expect.add_term({0, {1}, 0}, 2);
    CHECK(prod.equal(expect));
}

TEST_CASE("divided power rule") {
    auto ctx = ctx_for("sl2.json", Ring::integers());
    auto ff = PbwElement::f_power(ctx, 1) * PbwElement::f_power(ctx, 1);
    PbwElement expect(ctx);
    expect.add_term({2, {0}, 0}, 2);
    CHECK(ff.equal(expect));
    auto e23 = PbwElement::e_power(ctx, 2) * PbwElement::e_power(ctx, 3);
    PbwElement expect2(ctx);
    expect2.add_term({0, {0}, 5}, 10);
    CHECK(e23.equal(expect2));
}

TEST_CASE("context mismatch is rejected") {
    auto a = ctx_for("sl2.json", Ring::integers());
    auto b = ctx_for("pgl2.json", Ring::integers());
    CHECK_THROWS_AS(PbwElement::one(a) * PbwElement::one(b), std::invalid_argument);
}

TEST_CASE("associativity on random monomial triples") {
    for (const char* file : {"sl2.json", "pgl2.json", "gl2.json"}) {
        auto ctx = ctx_for(file, Ring::integers());
        std::mt19937_64 rng(0xabcdef12u);
        std::uniform_int_distribution<unsigned> small(0, 4);
        for (int trial = 0; trial < 120; ++trial) {
            MultiIndex b1(ctx->rank), b2(ctx->rank), b3(ctx->rank);
            for (auto& v : b1) v = small(rng);
            for (auto& v : b2) v = small(rng);
            for (auto& v : b3) v = small(rng);
            auto x = PbwElement::monomial(ctx, small(rng), b1, small(rng));
            auto y = PbwElement::monomial(ctx, small(rng), b2, small(rng));
            auto z = PbwElement::monomial(ctx, small(rng), b3, small(rng));
            CHECK(((x * y) * z).equal(x * (y * z)));
        }
    }
}

TEST_CASE("mod-p reduction commutes with multiplication") {
    auto ctx = ctx_for("gl2.json", Ring::integers());
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned> small(0, 3);
    for (std::int64_t p : {2, 3})
        for (int trial = 0; trial < 60; ++trial) {
            MultiIndex b1(ctx->rank), b2(ctx->rank);
            for (auto& v : b1) v = small(rng);
            for (auto& v : b2) v = small(rng);
            auto x = PbwElement::monomial(ctx, small(rng), b1, small(rng));
            auto y = PbwElement::monomial(ctx, small(rng), b2, small(rng));
            CHECK((x * y).reduce_mod(p).equal(x.reduce_mod(p) * y.reduce_mod(p)));
        }
}

TEST_CASE("filtration and weight bookkeeping of straightening") {
    auto ctx = ctx_for("sl2.json", Ring::integers());
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b) {
            auto prod = PbwElement::e_power(ctx, a) * PbwElement::f_power(ctx, b);
            for (const auto& [k, c] : prod.terms()) {
                CHECK(k.f + k.e <= a + b);
                // alpha-weight e - f preserved
                CHECK(static_cast<int>(k.e) - static_cast<int>(k.f) ==
                      static_cast<int>(a) - static_cast<int>(b));
            }
        }
}

TEST_CASE("mu0 commutes with E^(pn), F^(pn)") {
    for (const char* file : {"sl2.json", "pgl2.json", "gl2.json"})
        for (std::int64_t p : {2, 3}) {
            auto ctx = ctx_for(file, Ring::prime_field(p));
            auto mu = mu0_pbw(ctx);
            for (unsigned n = 1; n * p <= 3 * p; ++n) {
                auto e = PbwElement::e_power(ctx, n * static_cast<unsigned>(p));
                auto f = PbwElement::f_power(ctx, n * static_cast<unsigned>(p));
                CHECK((mu * e).equal(e * mu));
                CHECK((mu * f).equal(f * mu));
            }
        }
}

TEST_CASE("phi on generators and corner containment") {
    for (std::int64_t p : {2, 3}) {
        auto ctx = ctx_for("sl2.json", Ring::prime_field(p));
        auto mu = mu0_pbw(ctx);
        CHECK(phi(PbwElement::f_power(ctx, 1))
                  .equal(PbwElement::f_power(ctx, static_cast<unsigned>(p)) * mu));
        CHECK(phi(PbwElement::one(ctx)).equal(mu));
        for (const auto& k : monomial_grid(1, 3)) {
            auto x = phi(PbwElement::monomial(ctx, k.f, k.b, k.e));
            CHECK((mu * x * mu).equal(x));
        }
    }
}

TEST_CASE("phi agrees on both evaluation orders of E F") {
    auto ctx = ctx_for("sl2.json", Ring::prime_field(2));
    auto lhs = phi(PbwElement::e_power(ctx, 1) * PbwElement::f_power(ctx, 1));
    auto rhs = phi(PbwElement::e_power(ctx, 1)) * phi(PbwElement::f_power(ctx, 1));
    CHECK(lhs.equal(rhs));
}

TEST_CASE("frobenius on basis monomials") {
    auto ctx = ctx_for("sl2.json", Ring::prime_field(2));
    CHECK(frobenius(PbwElement::e_power(ctx, 4)).equal(PbwElement::e_power(ctx, 2)));
    CHECK(frobenius(PbwElement::e_power(ctx, 3)).is_zero());
    CHECK(frobenius(mu0_pbw(ctx)).equal(PbwElement::one(ctx)));
}

TEST_CASE("borel sweeps pass") {
    CHECK(verify_borel(ctx_for("sl2.json", Ring::prime_field(2)), 3, 3, -3, 3).pass());
    CHECK(verify_borel(ctx_for("pgl2.json", Ring::prime_field(3)), 2, 2, -2, 2).pass());
    CHECK(verify_borel(ctx_for("gl2.json", Ring::prime_field(2)), 2, 2, -2, 2).pass());
}

TEST_CASE("theorem sweep passes at small degree") {
    auto rep = verify_theorem(ctx_for("sl2.json", Ring::prime_field(2)), 2);
    CHECK(rep.pass());
    auto rep2 = verify_theorem(ctx_for("pgl2.json", Ring::prime_field(3)), 1);
    CHECK(rep2.pass());
}

TEST_CASE("matrix oracle: action on sum of Weyl modules is multiplicative") {
    for (const char* file : {"sl2.json", "gl2.json", "pgl2.json"})
        for (std::int64_t p : {0, 3}) {
            Ring ring = p ? Ring::prime_field(p) : Ring::integers();
            auto ctx = ctx_for(file, ring);
            WeightModule sum;
            bool first = true;
            for (unsigned n = 0; n <= 6; ++n) {
                auto lambda = dominant_weight(*ctx, n);
                if (!lambda) continue;
                auto v = weyl_module(ctx, *lambda);
                sum = first ? v : direct_sum(sum, v);
                first = false;
            }
            std::mt19937_64 rng(2024);
            std::uniform_int_distribution<unsigned> small(0, 3);
            for (int trial = 0; trial < 40; ++trial) {
                MultiIndex b1(ctx->rank), b2(ctx->rank);
                for (auto& v : b1) v = small(rng);
                for (auto& v : b2) v = small(rng);
                auto x = PbwElement::monomial(ctx, small(rng), b1, small(rng));
                auto y = PbwElement::monomial(ctx, small(rng), b2, small(rng));
                CHECK(sum.action(x * y) ==
                      mat_product(sum.action(x), sum.action(y), ring));
            }
        }
}

TEST_CASE("serialization round-trip with canonical term order") {
    auto ctx = ctx_for("sl2.json", Ring::prime_field(3));
    PbwElement x(ctx);
    x.add_term({2, {1}, 0}, 2);
    x.add_term({0, {0}, 3}, 1);
    auto j = x.to_json();
    CHECK(j["terms"][0]["a"] == 0);
    CHECK(PbwElement::from_json(ctx, j).equal(x));
}
