#include <catch2/catch_amalgamated.hpp>

#include "maxker/format.hpp"

using namespace maxker;

TEST_CASE("field spec parsing") {
    SECTION("with an explicit modulus") {
        Field F = make_field("2^1^4/19");
        CHECK(F.p() == 2);
        CHECK(F.e() == 1);
        CHECK(F.n() == 4);
        CHECK(F.modulus_code() == 19);  // x^4 + x + 1
    }

    SECTION("default modulus") {
        Field F = make_field("2^1^5");
        CHECK(F.modulus_code() == 37);  // x^5 + x^2 + 1 is the first irreducible
        CHECK(field_spec_string(F) == "2^1^5/37");
    }

    SECTION("round trip") {
        for (const char* spec : {"2^1^4/19", "3^1^2/10", "2^2^2/19", "2^1^6/67"}) {
            Field F = make_field(spec);
            CHECK(field_spec_string(F) == spec);
        }
    }

    SECTION("rejects malformed specs") {
        CHECK_THROWS_AS(make_field("2^1"), Error);
        CHECK_THROWS_AS(make_field("2^1^4/19/2"), Error);
        CHECK_THROWS_AS(make_field("x^1^4"), Error);
        CHECK_THROWS_AS(make_field("4^1^2"), Error);     // p not prime
        CHECK_THROWS_AS(make_field("2^1^4/17"), Error);  // x^4 + 1 is reducible
        CHECK_THROWS_AS(make_field("2^1^4/3"), Error);   // wrong degree
    }
}

TEST_CASE("polynomial spec parsing") {
    Field F = make_field("2^1^4/19");

    SECTION("basic") {
        LinPoly f = parse_poly_spec("s=1;a=[1,0,15]", F);
        CHECK(f.s() == 1);
        CHECK(f.sigma_degree() == 2);
        CHECK(f.coeff_s(0) == F.one());
        CHECK(f.coeff_s(2) == F.elem(15));
    }

    SECTION("whitespace tolerated") {
        LinPoly f = parse_poly_spec(" s=1 ; a=[ 1, 1, 1, 1 ]", F);
        CHECK(f.sigma_degree() == 3);
    }

    SECTION("print/parse round trip") {
        for (const char* spec : {"s=1;a=[1,0,15]", "s=1;a=[1,1,1,1]", "s=3;a=[5,9]"}) {
            LinPoly f = parse_poly_spec(spec, F);
            CHECK(parse_poly_spec(poly_spec_string(f), F) == f);
        }
    }

    SECTION("rejects malformed specs") {
        CHECK_THROWS_AS(parse_poly_spec("a=[1]", F), Error);
        CHECK_THROWS_AS(parse_poly_spec("s=1;a=1,2", F), Error);
        CHECK_THROWS_AS(parse_poly_spec("s=1;a=[]", F), Error);
        CHECK_THROWS_AS(parse_poly_spec("s=1;a=[16]", F), Error);  // code out of range
        CHECK_THROWS_AS(parse_poly_spec("s=2;a=[1,1]", F), Error); // gcd(2,4) != 1
    }
}
