#include <doctest.h>

#include "somos/extension.hpp"
#include "somos/laurent.hpp"
#include "somos/numbers.hpp"

using namespace somos;
using Ext = ExtElem<Rat>;

TEST_CASE("s^2 reduction") {
    // gamma = 1: s * s = 1
    const Ext s1 = Ext::s_power(2, Rat(1), Rat(1), 1);
    CHECK(s1 * s1 == Ext::scalar(2, Rat(1), Rat(1)));

    // gamma = -1/2 (the alpha of the N = 2 family): s * s = -1/2
    const Ext s2 = Ext::s_power(2, Rat(-1, 2), Rat(1), 1);
    CHECK(s2 * s2 == Ext::scalar(2, Rat(-1, 2), Rat(-1, 2)));
}

TEST_CASE("mu^4 reduction with the quartic modulus") {
    const Rat I_tilde(10951468);
    const Ext mu2 = Ext::s_power(4, I_tilde, Rat(1), 2);
    CHECK(mu2 * mu2 == Ext::scalar(4, I_tilde, I_tilde));
}

TEST_CASE("mixed extensions are rejected") {
    const Ext a = Ext::scalar(2, Rat(2), Rat(1));
    const Ext b = Ext::scalar(2, Rat(3), Rat(1));
    const Ext c = Ext::scalar(4, Rat(2), Rat(1));
    CHECK_THROWS_AS(a * b, MixedExtensionError);
    CHECK_THROWS_AS(a + c, MixedExtensionError);
}

TEST_CASE("collapse agrees with base arithmetic when gamma is a square") {
    // gamma = 9/4, root 3/2: (2 + 5s)(1 - s) collapsed both ways
    const Rat gamma(9, 4), root(3, 2);
    const Ext x(2, gamma, {Rat(2), Rat(5)});
    const Ext y(2, gamma, {Rat(1), Rat(-1)});
    CHECK((x * y).collapse(root) == x.collapse(root) * y.collapse(root));
}

TEST_CASE("single-term division, including gamma wrap") {
    const Rat gamma(1331);
    const Ext x(2, gamma, {Rat(0), Rat(7)});        // 7 s
    const Ext s = Ext::s_power(2, gamma, Rat(1), 1);
    CHECK(ring_div_exact(x, s) == Ext::scalar(2, gamma, Rat(7)));
    // scalar / s wraps through gamma: 5 / s = (5/1331) s
    const Ext c5 = Ext::scalar(2, gamma, Rat(5));
    CHECK(ring_div_exact(c5, s) == Ext::s_power(2, gamma, Rat(5, 1331), 1));
    CHECK(ring_div_exact(c5, s) * s == c5);
}

TEST_CASE("conjugate division for general quadratic divisors") {
    const Rat gamma(5);
    const Ext x(2, gamma, {Rat(1), Rat(2)});
    const Ext y(2, gamma, {Rat(3), Rat(1)});
    const Ext q = ring_div_exact(x, y);
    CHECK(q * y == x);
    CHECK_THROWS_AS(ring_div_exact(x, ring_zero_like(x)), ZeroDivideError);
}

TEST_CASE("extension over a polynomial base ring") {
    auto vars = VarSet::make({"at", "bt", "It"});
    const LaurentPoly at = LaurentPoly::variable(vars, "at");
    const LaurentPoly bt = LaurentPoly::variable(vars, "bt");
    const LaurentPoly It = LaurentPoly::variable(vars, "It");
    const LaurentPoly zero = LaurentPoly::zero(vars);
    const LaurentPoly one = LaurentPoly::constant(vars, Int(1));

    // one Somos 5 companion step: a5 = (mu^2 a4 a2 - at a3^2) / a1 = -bt It - at^3
    using PExt = ExtElem<LaurentPoly>;
    const PExt a1 = PExt::scalar(4, It, one);
    const PExt a2 = PExt::s_power(4, It, -one, 1);
    const PExt a3 = PExt::scalar(4, It, at);
    const PExt a4 = PExt::s_power(4, It, bt, 1);
    const PExt mu2 = PExt::s_power(4, It, one, 2);
    const PExt num = mu2 * a4 * a2 - PExt::scalar(4, It, at) * a3 * a3;
    const PExt a5 = ring_div_exact(num, a1);
    CHECK(a5.is_single_term());
    CHECK(a5.single_exponent() == 0);  // mu-degree 0, the odd-index parity
    CHECK(a5.coeff(0) == -(bt * It) - at * at * at);
}
