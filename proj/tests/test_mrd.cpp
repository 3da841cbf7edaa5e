#include <catch2/catch_amalgamated.hpp>

#include "maxker/mrd.hpp"

using namespace maxker;

TEST_CASE("gabidulin code generators") {
    Field F(2, 1, 4);

    SECTION("k = 2, s = 1: span of x and x^q") {
        auto code = gabidulin_code(F, 2, 1);
        REQUIRE(code.generators.size() == 2);
        CHECK(code.generators[0] == LinPoly(F, 1, {F.one()}));
        CHECK(code.generators[1] == LinPoly(F, 1, {F.zero(), F.one()}));
    }

    SECTION("k = 1: scalar maps only") {
        auto code = gabidulin_code(F, 1, 1);
        auto rep = verify_mrd(code);
        CHECK(rep.is_mrd);
        CHECK(rep.max_kernel_dim == 0);
        CHECK(rep.min_rank == 4);
    }

    SECTION("k = n: the whole s-grid span") {
        auto code = gabidulin_code(F, 4, 1);
        REQUIRE(code.generators.size() == 4);
        CHECK(code.generators[3] == LinPoly(F, 1, {F.zero(), F.zero(), F.zero(), F.one()}));
    }

    SECTION("parameter validation") {
        CHECK_THROWS_AS(gabidulin_code(F, 0, 1), Error);
        CHECK_THROWS_AS(gabidulin_code(F, 5, 1), Error);
        CHECK_THROWS_AS(gabidulin_code(F, 2, 2), Error);  // gcd(2,4) != 1
    }
}

TEST_CASE("G_{2,1} over F_16: all 255 nonzero codewords") {
    Field F(2, 1, 4);
    auto rep = verify_mrd(gabidulin_code(F, 2, 1));
    CHECK(rep.is_mrd);
    CHECK(rep.max_kernel_dim == 1);  // attained: k-1
    CHECK(rep.min_rank == 3);        // n-k+1
    REQUIRE(rep.worst_coeffs.size() == 2);
    // the reported worst codeword really attains kernel dimension 1
    LinPoly worst = add(scalar_mul(Elem{rep.worst_coeffs[0]}, LinPoly(F, 1, {F.one()})),
                        scalar_mul(Elem{rep.worst_coeffs[1]}, LinPoly(F, 1, {F.zero(), F.one()})));
    CHECK(kernel_dim(worst) == 1);
}

TEST_CASE("budget guard") {
    Field F(2, 1, 5);
    CHECK_THROWS_AS(verify_mrd(gabidulin_code(F, 3, 2), 1000), Error);
}

TEST_CASE("full-length code still satisfies the kernel bound") {
    // even for k = n the zero-excluded sweep must respect dim ker <= sigma-degree
    Field F(2, 1, 3);
    auto rep = verify_mrd(gabidulin_code(F, 3, 1));
    CHECK(rep.is_mrd);
    CHECK(rep.max_kernel_dim == 2);  // the trace polynomial lives in this code
    CHECK(rep.min_rank == 1);
}
