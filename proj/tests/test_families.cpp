#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "maxker/families.hpp"
#include "support/oracles.hpp"

using namespace maxker;

TEST_CASE("trace family") {
    Field F(2, 1, 4);

    SECTION("alpha = beta = 1, m = 1 over F_16 is x + x^2 + x^4 + x^8") {
        LinPoly f = trace_family(F, F.one(), F.one(), 1);
        CHECK(f.storage() == std::vector<Elem>{F.one(), F.one(), F.one(), F.one()});
        CHECK(kernel_dim(f) == 3);
    }

    SECTION("kernel dimension is n - m (the image F_{q^m} has F_q-dimension m)") {
        Field F64(2, 1, 6);
        for (unsigned m : {1u, 2u, 3u, 6u}) {
            LinPoly f = trace_family(F64, F64.elem(5), F64.elem(9), m);
            CHECK(kernel_dim(f) == 6 - m);
            if (m < 6) CHECK(f.sigma_degree() == 6 - m);
        }
    }

    SECTION("m = n collapses to a scalar map") {
        LinPoly f = trace_family(F, F.elem(3), F.elem(7), 4);
        CHECK(f.sigma_degree() == 0);
        CHECK(f.storage()[0] == F.mul(F.elem(3), F.elem(7)));
        CHECK(kernel_dim(f) == 0);
    }

    SECTION("rejects zero parameters") {
        CHECK_THROWS_AS(trace_family(F, F.zero(), F.one(), 1), Error);
        CHECK_THROWS_AS(trace_family(F, F.one(), F.zero(), 1), Error);
    }
}

TEST_CASE("binomial criterion") {
    Field F(2, 1, 4);

    SECTION("k = 2, a_0 = 1: kernel is F_{q^2}") {
        CHECK(binomial_has_max_kernel(F, F.one(), 2, 1));
    }

    SECTION("k = 2 fails for a multiplicative generator") {
        Elem w{2};
        CHECK(F.pow(w, 5) != F.one());  // N_{16/4}(w) = w^5 has order 3
        CHECK_FALSE(binomial_has_max_kernel(F, w, 2, 1));
    }

    SECTION("k does not divide n: always false") {
        Field F32(2, 1, 5);
        for (std::uint64_t c = 0; c < 32; ++c)
            CHECK_FALSE(binomial_has_max_kernel(F32, Elem{c}, 2, 1));
    }

    SECTION("agrees with the kernel oracle, exhaustive over F_16") {
        for (unsigned k = 1; k <= 3; ++k)
            for (std::uint64_t c = 0; c < 16; ++c) {
                std::vector<Elem> a(k + 1, F.zero());
                a[0] = Elem{c};
                a[k] = F.neg(F.one());
                LinPoly f(F, 1, a);
                CHECK(binomial_has_max_kernel(F, Elem{c}, k, 1) ==
                      (kernel_dim(f) == k));
            }
    }
}

TEST_CASE("degree n-2 coefficient system") {
    Field F(2, 1, 4);

    SECTION("n=4 seed (1, 0) gives x + x^4 with maximum kernel") {
        auto [f, ok] = derive_degree_n_minus_2({&F, 1, F.one(), F.zero()});
        CHECK(ok);
        CHECK(f.storage() == std::vector<Elem>{F.one(), F.zero(), F.one(), F.zero()});
        CHECK(is_maximum_kernel(f, Method::Matrix));
    }

    SECTION("n=5: the closing conditions agree with the oracle on every seed") {
        Field F32(2, 1, 5);
        for (std::uint64_t c0 = 0; c0 < 32; ++c0)
            for (std::uint64_t c2 = 0; c2 < 32; ++c2) {
                auto [f, ok] = derive_degree_n_minus_2({&F32, 1, Elem{c0}, Elem{c2}});
                CHECK(ok == is_maximum_kernel(f, Method::Oracle));
            }
    }

    SECTION("true seeds also pass the matrix criterion") {
        for (std::uint64_t c0 = 0; c0 < 16; ++c0)
            for (std::uint64_t c1 = 0; c1 < 16; ++c1) {
                auto [f, ok] = derive_degree_n_minus_2({&F, 1, Elem{c0}, Elem{c1}});
                if (ok) CHECK(is_maximum_kernel(f, Method::Matrix));
            }
    }

    SECTION("needs n >= 4") {
        Field F8(2, 1, 3);
        CHECK_THROWS_AS(derive_degree_n_minus_2({&F8, 1, F8.one(), F8.one()}), Error);
    }
}

TEST_CASE("cross-coefficient relations") {
    Field F(2, 1, 4);
    auto polys = enumerate_max_kernel(F, 1, 2);
    REQUIRE(polys.size() == 35);

    SECTION("hold for every admissible t") {
        for (auto& f : polys) {
            CHECK(newrelt_check(f, 2));
            CHECK(newrelt_check(f, 4));  // t-1 = 3 is coprime to 4
        }
    }

    SECTION("inadmissible t rejected") {
        CHECK_THROWS_AS(newrelt_check(polys[0], 3), Error);  // gcd(2, 4) = 2
    }

    SECTION("non-maximum-kernel input rejected") {
        Elem w{2};
        LinPoly g(F, 1, {w, F.zero(), F.neg(F.one())});
        CHECK_THROWS_AS(newrelt_check(g, 2), Error);
    }
}

TEST_CASE("trace2 classification") {
    Field F(2, 1, 4);

    SECTION("x + x^4 over F_16") {
        LinPoly f(F, 1, {F.one(), F.zero(), F.one()});
        auto [alpha, beta] = trace2_classify(f);
        LinPoly rec = trace_family(F, alpha, beta, 2);
        LinPoly fn = monic_normalize(f);
        for (std::uint64_t z = 0; z < 16; ++z)
            CHECK(evaluate(rec, Elem{z}) == evaluate(fn, Elem{z}));
    }

    SECTION("every binomial-row polynomial over F_16 classifies") {
        for (std::uint64_t c = 0; c < 16; ++c) {
            if (!binomial_has_max_kernel(F, Elem{c}, 2, 1)) continue;
            LinPoly f(F, 1, {Elem{c}, F.zero(), F.neg(F.one())});
            auto [alpha, beta] = trace2_classify(f);
            CHECK(trace_family(F, alpha, beta, 2) == monic_normalize(f));
        }
    }

    SECTION("odd n rejected") {
        Field F32(2, 1, 5);
        auto polys = enumerate_max_kernel(F32, 1, 3);
        CHECK_THROWS_AS(trace2_classify(polys.front()), Error);
    }

    SECTION("nonzero a_1 rejected") {
        auto polys = enumerate_max_kernel(F, 1, 2);
        for (auto& f : polys)
            if (!F.is_zero(f.coeff_s(1))) {
                CHECK_THROWS_AS(trace2_classify(f), Error);
                break;
            }
    }
}

TEST_CASE("table conditions, spot checks") {
    Field F16(2, 1, 4), F64(2, 1, 6);

    SECTION("table 1 binomial row at a_0 = 1") {
        TableID id{1, 4, 1, 2, RowKind::Binomial};
        CHECK(table_condition(id, F16, {F16.one(), F16.zero()}));
        CHECK_FALSE(table_condition(id, F16, {F16.elem(2), F16.zero()}));
        CHECK_FALSE(table_condition(id, F16, {F16.one(), F16.one()}));  // wrong shape
    }

    SECTION("table 3 k=4 general row requires a_1 != 0") {
        TableID id{3, 6, 1, 4, RowKind::General};
        // a trace_q2 polynomial has a_1 = 0 and must be rejected by this row
        auto e4 = enumerate_max_kernel(F64, 1, 4, EnumMethod::Seeded);
        bool found = false;
        for (auto& f : e4)
            if (F64.is_zero(f.coeff_s(1))) {
                std::vector<Elem> t;
                for (unsigned i = 0; i < 4; ++i) t.push_back(f.coeff_s(i));
                CHECK_FALSE(table_condition(id, F64, t));
                CHECK(table_condition({3, 6, 1, 4, RowKind::TraceSub2}, F64, t));
                found = true;
                break;
            }
        CHECK(found);
    }

    SECTION("table 3 k=5 trace row: members pass, non-members fail") {
        TableID id{3, 6, 1, 5, RowKind::TraceFull};
        auto sols = row_solutions(id, F64);
        CHECK(sols.size() == 63);  // (q^6-1)/(q-1)
        std::vector<Elem> member;
        for (auto c : sols.front()) member.push_back(Elem{c});
        CHECK(table_condition(id, F64, member));
        // perturb one coefficient
        auto bad = member;
        bad[0] = F64.add(bad[0], F64.one());
        CHECK_FALSE(table_condition(id, F64, bad));
        // each solution really is a maximum-kernel polynomial
        for (auto& tuple : sols) {
            std::vector<Elem> a;
            for (auto c : tuple) a.push_back(Elem{c});
            a.push_back(F64.neg(F64.one()));
            CHECK(kernel_dim(LinPoly(F64, 1, a)) == 5);
        }
    }

    SECTION("rows reject malformed tuples") {
        TableID id{1, 4, 1, 2, RowKind::General};
        CHECK_THROWS_AS(table_condition(id, F16, {F16.one()}), Error);
        Field F32(2, 1, 5);
        CHECK_THROWS_AS(table_condition(id, F32, {F32.one(), F32.one()}), Error);
    }
}

TEST_CASE("appendix raw and simplified systems agree (A1, both characteristics)") {
    // A2..A6 are covered at full size by the acceptance suite
    for (Field F : {Field(2, 1, 4), Field(3, 1, 4)}) {
        for (std::uint64_t c0 = 0; c0 < F.order(); ++c0)
            for (std::uint64_t c1 = 0; c1 < F.order(); ++c1) {
                std::vector<Elem> a{Elem{c0}, Elem{c1}};
                CHECK(appendix_raw(1, F, 1, a) == appendix_star(1, F, 1, a));
            }
    }
}

TEST_CASE("appendix raw systems match the Q-sequence criterion") {
    // each raw system is the recursion's terminal condition written out in
    // closed form, so the two must coincide tuple by tuple
    auto check = [](unsigned item, const Field& F, unsigned k, const std::vector<std::uint64_t>& codes) {
        std::vector<Elem> a;
        for (auto c : codes) a.push_back(Elem{c});
        std::vector<Elem> coeffs = a;
        coeffs.push_back(F.neg(F.one()));
        LinPoly f(F, 1, coeffs);
        REQUIRE(appendix_raw(item, F, 1, a) == is_maximum_kernel(f, Method::Recursion));
        (void)k;
    };

    SECTION("A1 and A3, exhaustive") {
        Field F16(2, 1, 4), F32(2, 1, 5);
        for (std::uint64_t c0 = 0; c0 < 16; ++c0)
            for (std::uint64_t c1 = 0; c1 < 16; ++c1) check(1, F16, 2, {c0, c1});
        for (std::uint64_t c0 = 0; c0 < 32; ++c0)
            for (std::uint64_t c1 = 0; c1 < 32; ++c1) check(3, F32, 2, {c0, c1});
    }

    SECTION("A2, exhaustive") {
        Field F32(2, 1, 5);
        for (std::uint64_t c0 = 0; c0 < 32; ++c0)
            for (std::uint64_t c1 = 0; c1 < 32; ++c1)
                for (std::uint64_t c2 = 0; c2 < 32; ++c2) check(2, F32, 3, {c0, c1, c2});
    }

    SECTION("A4 exhaustive; A5, A6 sampled plus all positives") {
        Field F64(2, 1, 6);
        for (std::uint64_t c0 = 0; c0 < 64; ++c0)
            for (std::uint64_t c1 = 0; c1 < 64; ++c1) check(4, F64, 2, {c0, c1});
        std::mt19937_64 rng(53);
        for (int i = 0; i < 20000; ++i)
            check(5, F64, 3, {rng() % 64, rng() % 64, rng() % 64});
        for (int i = 0; i < 20000; ++i)
            check(6, F64, 4, {rng() % 64, rng() % 64, rng() % 64, rng() % 64});
        for (auto& f : enumerate_max_kernel(F64, 1, 3))
            check(5, F64, 3, monic_tuple(f));
        for (auto& f : enumerate_max_kernel(F64, 1, 4, EnumMethod::Seeded))
            check(6, F64, 4, monic_tuple(f));
    }
}

TEST_CASE("enumeration") {
    Field F(2, 1, 4);

    SECTION("counts match the subspace counts") {
        CHECK(enumerate_max_kernel(F, 1, 1).size() == 15);
        CHECK(enumerate_max_kernel(F, 1, 2).size() == 35);
        CHECK(enumerate_max_kernel(F, 1, 3).size() == 15);
        CHECK(oracles::gaussian_binomial(4, 2, 2) == 35);
    }

    SECTION("count is independent of s") {
        Field F32(2, 1, 5);
        CHECK(enumerate_max_kernel(F32, 1, 2).size() ==
              enumerate_max_kernel(F32, 2, 2).size());
    }

    SECTION("deterministic lexicographic order") {
        auto polys = enumerate_max_kernel(F, 1, 2);
        auto tuples = std::vector<std::vector<std::uint64_t>>{};
        for (auto& f : polys) tuples.push_back(monic_tuple(f));
        CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    }

    SECTION("seeded sweep equals the oracle sweep") {
        auto a = enumerate_max_kernel(F, 1, 2, EnumMethod::Oracle);
        auto b = enumerate_max_kernel(F, 1, 2, EnumMethod::Seeded);
        CHECK(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }

    SECTION("budget") {
        CHECK_THROWS_AS(enumerate_max_kernel(F, 1, 3, EnumMethod::Oracle, 100), Error);
    }
}

TEST_CASE("table verification, table 1 at q = 2") {
    Field F(2, 1, 4);
    auto report = verify_table(F, 1, 1);
    CHECK(report.all_equal);
    REQUIRE(report.per_k.size() == 3);
    for (auto& kr : report.per_k) {
        CHECK(kr.equal);
        if (kr.k == 2) {
            CHECK(kr.enumerated == 35);
            // the binomial row is the a_1 = 0 slice of the general row here
            REQUIRE(kr.overlaps.size() == 1);
            CHECK(kr.overlaps[0][2] == 5);
        }
    }
}
