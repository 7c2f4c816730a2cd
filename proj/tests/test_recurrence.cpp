#include <doctest.h>

#include "somos/invariants.hpp"
#include "somos/recurrence.hpp"

using namespace somos;

namespace {

Orbit<Rat> somos4_unit(std::int64_t from, std::int64_t to) {
    SomosRecurrence<Rat> rec(4, {Rat(1), Rat(1)});
    return generate(rec, {Rat(1), Rat(1), Rat(1), Rat(1)}, 1, from, to);
}

}  // namespace

TEST_CASE("Somos(4) forward terms") {
    auto orbit = somos4_unit(1, 13);
    const long expect[] = {1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313};
    for (std::int64_t n = 1; n <= 13; ++n) CHECK(orbit.at(n) == Rat(expect[n - 1]));
}

TEST_CASE("Somos(4) backward terms") {
    auto orbit = somos4_unit(-4, 5);
    CHECK(orbit.at(0) == Rat(2));
    CHECK(orbit.at(-1) == Rat(3));
    CHECK(orbit.at(-2) == Rat(7));
    CHECK(orbit.at(-3) == Rat(23));
    CHECK(orbit.at(-4) == Rat(59));
}

TEST_CASE("two-sided window of the 1331/119790 sequence") {
    SomosRecurrence<Rat> rec(4, {Rat(1331), Rat(119790)});
    auto orbit = generate(rec, {Rat(1), Rat(3), Rat(121), Rat(177023)}, 1, -2, 5);
    CHECK(orbit.at(-2) == Rat(2498287));
    CHECK(orbit.at(-1) == Rat(1221));
    CHECK(orbit.at(0) == Rat(7));
    CHECK(orbit.at(5) == Rat(Int("2460698229")));
}

TEST_CASE("Somos 5 with unit data") {
    SomosRecurrence<Rat> rec(5, {Rat(1), Rat(1)});
    auto orbit = generate(rec, std::vector<Rat>(5, Rat(1)), 1, 1, 10);
    const long expect[] = {2, 3, 5, 11, 37};
    for (std::int64_t n = 6; n <= 10; ++n) CHECK(orbit.at(n) == Rat(expect[n - 6]));
}

TEST_CASE("recurrence residuals vanish and iteration round-trips") {
    auto orbit = somos4_unit(-6, 12);
    for (std::int64_t n = -6; n + 4 <= 12; ++n) CHECK(orbit.at(n + 4) * orbit.at(n) ==
                                                      orbit.at(n + 3) * orbit.at(n + 1) +
                                                          orbit.at(n + 2) * orbit.at(n + 2));
    // forward-then-backward reproduces the initial window bit-exactly
    SomosRecurrence<Rat> rec(4, {Rat(1), Rat(1)});
    std::vector<Rat> far;
    for (std::int64_t n = 9; n <= 12; ++n) far.push_back(orbit.at(n));
    auto back = generate(rec, far, 9, 1, 12);
    for (std::int64_t n = 1; n <= 4; ++n) CHECK(back.at(n) == Rat(1));
}

TEST_CASE("zero pivot aborts with the failing index") {
    SomosRecurrence<Rat> rec(4, {Rat(-1, 1), Rat(1)});
    // alpha = -1, beta = 1, unit inits: A5 = (-1 + 1) / 1 = 0, then A9 needs A5
    auto orbit = generate(rec, std::vector<Rat>(4, Rat(1)), 1, 1, 5);
    CHECK(orbit.at(5) == Rat(0));
    CHECK_THROWS_AS(orbit.extend_to(9), ZeroPivotError);
    try {
        orbit.extend_to(9);
    } catch (const ZeroPivotError& e) {
        CHECK(e.index() == 5);
    }
}

TEST_CASE("gauge transform") {
    auto orbit = somos4_unit(-2, 8);
    SUBCASE("identity") {
        auto g = gauge_apply(orbit, Rat(1), Rat(1));
        for (std::int64_t n = -2; n <= 8; ++n) CHECK(g.at(n) == orbit.at(n));
    }
    SUBCASE("scale by 2") {
        auto g = gauge_apply(orbit, Rat(2), Rat(1));
        CHECK(g.at(5) == Rat(4));
        CHECK(g.at(6) == Rat(6));
        CHECK(g.at(7) == Rat(14));
    }
    SUBCASE("alternating signs") {
        auto g = gauge_apply(orbit, Rat(1), Rat(-1));
        CHECK(g.at(5) == Rat(-2));
        CHECK(g.at(6) == Rat(3));
    }
    CHECK_THROWS_AS(gauge_apply(orbit, Rat(0), Rat(1)), ZeroGaugeParameterError);
}

TEST_CASE("covariance transform rescales the coefficients and preserves j") {
    auto orbit = somos4_unit(-2, 8);
    auto [rec2, hat] = covariance_apply(orbit, Rat(2));
    CHECK(rec2.coeffs[0] == Rat(64));
    CHECK(rec2.coeffs[1] == Rat(256));

    std::vector<Rat> w0, w1;
    for (std::int64_t n = 1; n <= 4; ++n) {
        w0.push_back(orbit.at(n));
        w1.push_back(hat.at(n));
    }
    const Rat T0 = t_invariant(Rat(1), Rat(1), w0);
    const Rat T1 = t_invariant(rec2.coeffs[0], rec2.coeffs[1], w1);
    CHECK(T0 == Rat(4));
    CHECK(T1 == Rat(64));  // c^4 T

    const auto c0 = curve_from_invariants(Rat(1), Rat(1), T0);
    const auto c1 = curve_from_invariants(rec2.coeffs[0], rec2.coeffs[1], T1);
    REQUIRE(c0.j.has_value());
    REQUIRE(c1.j.has_value());
    CHECK(*c0.j == *c1.j);
    CHECK(*c0.j == Rat(110592, 37));

    // c = -1 fixes the coefficients (c^6 = c^8 = 1); terms pick up (-1)^(n^2)
    // = (-1)^n, i.e. the gauge transform with b = -1
    auto [rec3, flipped] = covariance_apply(orbit, Rat(-1));
    CHECK(rec3.coeffs[0] == Rat(1));
    CHECK(rec3.coeffs[1] == Rat(1));
    for (std::int64_t n = -2; n <= 8; ++n)
        CHECK(flipped.at(n) == (n % 2 == 0 ? orbit.at(n) : -orbit.at(n)));
}

TEST_CASE("f-sequence of Somos(4)") {
    auto orbit = somos4_unit(-3, 7);
    auto fs = to_f_sequence(orbit);
    CHECK(fs.at(0) == Rat(3, 4));
    CHECK(fs.at(1) == Rat(2));
    CHECK(fs.at(2) == Rat(1));
    CHECK(fs.at(3) == Rat(1));
    CHECK(fs.at(4) == Rat(2));      // A3 A5 / A4^2 = 2
    CHECK(fs.at(5) == Rat(3, 4));
}

TEST_CASE("f-sequence of a constant orbit is constant 1") {
    SomosRecurrence<Rat> rec(4, {Rat(1), Rat(0)});
    auto orbit = generate(rec, std::vector<Rat>(4, Rat(5)), 1, 1, 9);
    auto fs = to_f_sequence(orbit);
    for (std::int64_t n = 2; n <= 8; ++n) CHECK(fs.at(n) == Rat(1));
}

TEST_CASE("f2 of the N = 2 sequence") {
    SomosRecurrence<Rat> rec(4, {Rat(-1, 2), Rat(1)});
    auto orbit = generate(rec, {Rat(1), Rat(-2), Rat(2), Rat(1)}, 1, 1, 5);
    auto fs = to_f_sequence(orbit);
    CHECK(fs.at(2) == Rat(1, 2));
}

TEST_CASE("QRT step and its conserved quantity") {
    CHECK(qrt_step(Rat(1), Rat(2), Rat(1), Rat(1)) == Rat(3, 4));
    CHECK(qrt_step(Rat(2), Rat(1), Rat(1), Rat(1)) == Rat(1));   // f-orbit of Somos(4)
    CHECK(qrt_step(Rat(1), Rat(1), Rat(1), Rat(0)) == Rat(1));   // fixed point
    CHECK_THROWS_AS(qrt_step(Rat(0), Rat(1), Rat(1), Rat(1)), ZeroPivotError);

    // the invariant is constant along a QRT orbit
    const Rat alpha(3, 2), beta(-2, 5);
    Rat fp(2, 3), fc(5, 7);
    const Rat inv0 = qrt_invariant(fp, fc, alpha, beta);
    for (int i = 0; i < 12; ++i) {
        const Rat fn = qrt_step(fp, fc, alpha, beta);
        CHECK(qrt_invariant(fc, fn, alpha, beta) == inv0);
        fp = fc;
        fc = fn;
    }
}
