#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxker/gf.hpp"
#include "support/oracles.hpp"

using namespace maxker;

TEST_CASE("field construction picks deterministic moduli") {
    Field f2(2, 1, 1);
    CHECK(f2.modulus_code() == 2);  // x is the first monic irreducible of degree 1
    CHECK(f2.order() == 2);

    Field f16(2, 1, 4);
    CHECK(f16.modulus_code() == 19);  // x^4 + x + 1
    CHECK(f16.q() == 2);
    CHECK(f16.order() == 16);

    Field f9(3, 1, 2);
    CHECK(f9.modulus_code() == 10);  // x^2 + 1, irreducible since -1 is a non-square mod 3
}

TEST_CASE("user moduli are validated") {
    // x^4 + x + 1 accepted
    CHECK_NOTHROW(Field(2, 1, 4, {1, 1, 0, 0, 1}));
    // x^2 + 1 over F_3 accepted
    CHECK_NOTHROW(Field(3, 1, 2, {1, 0, 1}));
    // x^4 + 1 = (x+1)^4 over F_2 rejected
    CHECK_THROWS_AS(Field(2, 1, 4, {1, 0, 0, 0, 1}), Error);
    // wrong degree rejected
    CHECK_THROWS_AS(Field(2, 1, 4, {1, 1, 1}), Error);
    // non-prime p rejected
    CHECK_THROWS_AS(Field(4, 1, 2), Error);
    CHECK_THROWS_AS(Field(1, 1, 2), Error);
}

TEST_CASE("frobenius is the q-power map") {
    Field F4(2, 1, 2);
    Elem w = F4.elem(2);  // the class of x, modulus x^2+x+1
    CHECK(F4.frobenius_q(w, 1) == F4.elem(3));  // w^2 = w + 1
    CHECK(F4.frobenius_q(w, 0) == w);
    CHECK(F4.frobenius_q(w, 2) == w);  // x^{q^n} = x

    Field F(2, 1, 4);
    for (std::uint64_t z = 0; z < F.order(); ++z) {
        CHECK(F.frobenius_q(Elem{z}, 0) == Elem{z});
        CHECK(F.frobenius_q(Elem{z}, 4) == Elem{z});
        CHECK(F.frobenius_q(Elem{z}, 1) == F.mul(Elem{z}, Elem{z}));
        // composition law
        for (long j1 = 0; j1 < 4; ++j1)
            for (long j2 = 0; j2 < 4; ++j2)
                CHECK(F.frobenius_q(F.frobenius_q(Elem{z}, j1), j2) ==
                      F.frobenius_q(Elem{z}, j1 + j2));
    }
}

TEST_CASE("frobenius is additive and multiplicative") {
    Field F(3, 1, 4);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Elem a{rng() % F.order()}, b{rng() % F.order()};
        CHECK(F.frobenius_q(F.add(a, b), 1) ==
              F.add(F.frobenius_q(a, 1), F.frobenius_q(b, 1)));
        CHECK(F.frobenius_q(F.mul(a, b), 1) ==
              F.mul(F.frobenius_q(a, 1), F.frobenius_q(b, 1)));
    }
}

TEST_CASE("norm and trace to subfields") {
    Field F4(2, 1, 2);
    Elem w = F4.elem(2);
    CHECK(F4.norm_to(w, 1) == F4.one());   // w * w^2 = w^3 = 1
    CHECK(F4.trace_to(w, 1) == F4.one());  // w + w^2 = 1

    Field F9(3, 1, 2);
    Elem g = F9.multiplicative_generator();
    CHECK(F9.norm_to(g, 1) == F9.neg(F9.one()));  // g^4 has order 2

    Field F(2, 1, 4);
    CHECK(F.norm_to(F.one(), 1) == F.one());
    CHECK(F.norm_to(F.one(), 2) == F.one());
    CHECK(F.trace_to(F.zero(), 1) == F.zero());
    // z in F_q: Tr_{q^n/q}(z) = n*z in characteristic p
    CHECK(F.trace_to(F.one(), 1) == F.zero());  // 4*1 = 0 in char 2
    for (std::uint64_t z = 0; z < 3; ++z)       // n = 2 over F_3: Tr(z) = 2z
        CHECK(F9.trace_to(Elem{z}, 1) == F9.add(Elem{z}, Elem{z}));

    // membership: outputs land in the subfield
    for (unsigned m : {1u, 2u}) {
        for (std::uint64_t z = 0; z < F.order(); ++z) {
            CHECK(F.in_subfield(F.norm_to(Elem{z}, m), m));
            CHECK(F.in_subfield(F.trace_to(Elem{z}, m), m));
        }
    }
    CHECK_THROWS_AS(F.norm_to(F.one(), 3), Error);  // 3 does not divide 4
}

TEST_CASE("multiplicative group order") {
    for (Field F : {Field(2, 1, 4), Field(3, 1, 2), Field(2, 2, 2)}) {
        for (std::uint64_t z = 1; z < F.order(); ++z)
            CHECK(F.pow(Elem{z}, F.order() - 1) == F.one());
    }
}

TEST_CASE("fq coordinates") {
    Field F(2, 1, 4);
    auto c = F.fq_coordinates(F.gamma());
    REQUIRE(c.size() == 4);
    CHECK(c[0] == F.zero());
    CHECK(c[1] == F.one());
    CHECK(c[2] == F.zero());
    CHECK(c[3] == F.zero());
    CHECK(F.fq_coordinates(F.zero()) == std::vector<Elem>(4, F.zero()));

    // bijective round trip, exhaustive
    for (std::uint64_t z = 0; z < F.order(); ++z) {
        auto coords = F.fq_coordinates(Elem{z});
        for (auto& ci : coords) CHECK(F.in_subfield(ci, 1));
        CHECK(F.fq_combine(coords) == Elem{z});
    }
}

TEST_CASE("fq coordinates with a proper prime power q") {
    Field F(2, 2, 2);  // F_16 viewed as F_{4^2}
    CHECK(F.q() == 4);
    CHECK(F.fq_basis().size() == 2);
    for (std::uint64_t z = 0; z < F.order(); ++z) {
        auto coords = F.fq_coordinates(Elem{z});
        REQUIRE(coords.size() == 2);
        for (auto& ci : coords) CHECK(F.in_subfield(ci, 1));  // fixed by x -> x^4
        CHECK(F.fq_combine(coords) == Elem{z});
    }
}

TEST_CASE("fields beyond the table limit use the generic path") {
    Field F(2, 1, 17);
    Elem a = F.elem(31415), b = F.elem(27182);
    CHECK(F.mul(a, F.inv(a)) == F.one());
    CHECK(F.frobenius_q(F.mul(a, b), 1) ==
          F.mul(F.frobenius_q(a, 1), F.frobenius_q(b, 1)));
    CHECK(F.frobenius_q(a, 17) == a);
    CHECK(F.pow(a, F.order() - 1) == F.one());
    CHECK(F.norm_to(a, 1) == F.one());  // N: F_{2^17} -> F_2 is 1 on nonzero elements
}

TEST_CASE("element codes validate") {
    Field F(2, 1, 4);
    CHECK_THROWS_AS(F.elem(16), Error);
    CHECK_NOTHROW(F.elem(15));
    CHECK_THROWS_AS(F.inv(F.zero()), Error);
}
