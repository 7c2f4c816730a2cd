#include <doctest.h>

#include "somos/symbolic.hpp"

using namespace somos;

TEST_CASE("symbolic Somos 4: first steps") {
    const auto sym = symbolic_somos4(8);
    const auto& vars = sym.vars;
    auto v = [&](const char* n, int e = 1) { return LaurentPoly::variable(vars, n, e); };

    // A_5 = alpha A_2 A_4 / A_1 + beta A_3^2 / A_1
    const LaurentPoly a5 = v("alpha") * v("A2") * v("A4") * v("A1", -1) +
                           v("beta") * v("A3", 2) * v("A1", -1);
    CHECK(sym.at(5) == a5);

    // denominator monomial of A_6 divides A_1 A_2
    const auto p1 = sym.at(6).exponent_profile("A1");
    const auto p2 = sym.at(6).exponent_profile("A2");
    CHECK(p1.min_exp >= -1);
    CHECK(p2.min_exp >= -1);
    const auto p3 = sym.at(6).exponent_profile("A3");
    const auto p4 = sym.at(6).exponent_profile("A4");
    CHECK(p3.min_exp >= 0);
    CHECK(p4.min_exp >= 0);
}

TEST_CASE("symbolic Somos 4 specializes to the integer sequence") {
    const auto sym = symbolic_somos4(13);
    const long expect[] = {1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313};
    const std::vector<Rat> ones(6, Rat(1));
    for (std::int64_t n = 1; n <= 13; ++n) CHECK(sym.at(n).evaluate(ones) == Rat(expect[n - 1]));
}

TEST_CASE("symbolic Somos 4 respects the configured bound") {
    CHECK_THROWS_AS(symbolic_somos4(15), BoundExceededError);
    CHECK_NOTHROW(symbolic_somos4(6, 6));
}

TEST_CASE("strong Laurent property holds to n = 12 with dual-path agreement") {
    const auto rep = strong_laurent_check(12);
    CHECK(rep.all_ok);
    REQUIRE(rep.rows.size() == 12);
    for (const auto& row : rep.rows) {
        CHECK(row.ok);
        CHECK(row.witness.empty());
    }
    for (bool ok : rep.dual_path_ok) CHECK(ok);

    // specialization of the direct path to the 1331/119790 data; the next
    // term after the inits is A_5 = 2460698229
    const auto direct = symbolic_somos4(8);
    const Rat a5 = direct.at(5).evaluate(
        {Rat(1331), Rat(119790), Rat(1), Rat(3), Rat(121), Rat(177023)});
    CHECK(a5 == Rat(Int("2460698229")));
    SomosRecurrence<Rat> rec(4, {Rat(1331), Rat(119790)});
    auto orbit = generate(rec, {Rat(1), Rat(3), Rat(121), Rat(177023)}, 1, 1, 8);
    for (std::int64_t n = 5; n <= 8; ++n)
        CHECK(direct.at(n).evaluate(
                  {Rat(1331), Rat(119790), Rat(1), Rat(3), Rat(121), Rat(177023)}) ==
              orbit.at(n));
}

TEST_CASE("strong-ring terms specialize through I directly") {
    // evaluate the strong-ring A_5 at u^2 = 1331 by splitting off even u powers
    const auto rep = strong_laurent_check(8);
    const auto& p = rep.terms[4];
    const auto& vars = rep.vars;
    const std::size_t iu = *vars->index_of("u");
    Rat sum;
    const Rat uval(1331), beta(119790), I(105869071);
    const Rat A[4] = {Rat(1), Rat(3), Rat(121), Rat(177023)};
    for (const auto& t : p.terms()) {
        REQUIRE(t.exps[iu] % 2 == 0);
        Rat m(t.coeff);
        m *= uval.pow(t.exps[iu] / 2);
        m *= beta.pow(t.exps[*vars->index_of("beta")]);
        m *= I.pow(t.exps[*vars->index_of("I")]);
        m *= A[0].pow(t.exps[*vars->index_of("A1")]);
        m *= A[1].pow(t.exps[*vars->index_of("A2")]);
        m *= A[2].pow(t.exps[*vars->index_of("A3")]);
        m *= A[3].pow(t.exps[*vars->index_of("A4")]);
        sum += m;
    }
    CHECK(sum == Rat(Int("2460698229")));
}

TEST_CASE("EDS parity: W_5 and W_6 match the closed forms") {
    const auto rep = eds_parity_check(8);
    CHECK(rep.all_ok);
    CHECK(rep.antisymmetry_ok);

    const auto& vars = rep.vars;
    auto v = [&](const char* n, int e = 1) { return LaurentPoly::variable(vars, n, e); };
    const LaurentPoly u = v("u"), beta = v("beta"), I = v("I");
    // W_5 = -u^4 I + beta^3
    CHECK(rep.terms[4] == -(v("u", 4) * I) + beta.pow(3));
    // W_6 = -u (I^2 + u^4 I - beta^3) beta
    CHECK(rep.terms[5] == -(u * (I * I + v("u", 4) * I - beta.pow(3)) * beta));
}

TEST_CASE("EDS parity holds to n = 16") {
    const auto rep = eds_parity_check(16);
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) CHECK(row.ok);
}

TEST_CASE("positivity of Somos 4 Laurent coefficients to n = 10") {
    const auto rep = positivity_check(10);
    CHECK(rep.all_positive);
    CHECK(rep.rows[4].monomials == 2);  // A_5 has coefficients {1, 1}
    CHECK(rep.rows[4].min_coeff == Int(1));
    // monomial counts are nondecreasing on this range (recorded observation)
    for (std::size_t i = 4; i + 1 < rep.rows.size(); ++i)
        CHECK(rep.rows[i].monomials <= rep.rows[i + 1].monomials);
}

TEST_CASE("N-family symbolic terms match the displayed polynomials") {
    const auto rep = n_family_symbolic(-8, 20);
    CHECK(rep.all_ok);
    const auto& vars = rep.vars;
    auto N = [&](int e = 1) { return LaurentPoly::variable(vars, "N", e); };
    auto k = [&](long c) { return LaurentPoly::constant(vars, Int(c)); };

    CHECK(rep.terms.at(5) == k(1) + N(2));
    CHECK(rep.terms.at(6) == N());
    CHECK(rep.terms.at(7) == N(3) + k(2) * N());
    CHECK(rep.terms.at(8) == -N(4) - k(2) * N(2) - k(2));
    CHECK(rep.terms.at(9) == N(4) + k(4) * N(2) + k(2));
}

TEST_CASE("N-family specializations") {
    const auto rep = n_family_symbolic(-4, 15);

    SUBCASE("N = 2 reproduces the alpha = -1/2 sequence") {
        const long expect[] = {2, 10, -4, 2, 3, 1, -2, 2, 1, 5, 2, 12, -26, 34, 236, 352, -1912};
        for (std::int64_t n = -4; n <= 12; ++n)
            CHECK(n_family_evaluate(rep.terms.at(n), Rat(2)) == Rat(expect[n + 4]));
    }
    SUBCASE("N = 1 gives the EDS-like sequence with A_0 = 0") {
        const long expect[] = {1, -1, 1, 1, 2, 1, 3, -5, 7, 4, 23, 29, 59, -129, 314};
        for (std::int64_t n = 1; n <= 15; ++n)
            CHECK(n_family_evaluate(rep.terms.at(n), Rat(1)) == Rat(expect[n - 1]));
        CHECK(n_family_evaluate(rep.terms.at(0), Rat(1)) == Rat(0));
    }
    SUBCASE("N = 3 gives integers with A_6 = 3, A_7 = 33") {
        CHECK(n_family_evaluate(rep.terms.at(6), Rat(3)) == Rat(3));
        CHECK(n_family_evaluate(rep.terms.at(7), Rat(3)) == Rat(33));
    }
}

TEST_CASE("N-family parity and zero values over [-8, 20]") {
    const auto rep = n_family_symbolic(-8, 20);
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) {
        CHECK(row.ok);
        if (!row.ok) MESSAGE("n = ", row.n, " witness ", row.witness);
    }
}

TEST_CASE("strong Laurent property of the reversed sequence covers backward terms") {
    const auto rep = strong_laurent_reversal_check(8);
    CHECK(rep.all_ok);
    REQUIRE(rep.rows.size() == 8);
    for (const auto& row : rep.rows) {
        CHECK(row.ok);  // member of Z[alpha, beta, I, A4^(+-1), A1, A2, A3]
        if (!row.ok) MESSAGE("original index ", row.n, " witness ", row.witness);
    }
    for (bool ok : rep.dual_path_ok) CHECK(ok);  // matches direct backward iteration
    CHECK(rep.rows.front().n == 0);
    CHECK(rep.rows.back().n == -7);
}
