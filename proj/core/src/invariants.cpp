#include "somos/invariants.hpp"

namespace somos {

namespace {

// T from four consecutive terms (the ratio form and the single-fraction form
// are the same expression over a common denominator).
Rat t_from_four(const Rat& alpha, const Rat& beta, const Rat& a1, const Rat& a2, const Rat& a3,
                const Rat& a4) {
    const Rat num = a1 * a1 * a4 * a4 + alpha * (a2 * a2 * a2 * a4 + a1 * a3 * a3 * a3) +
                    beta * a2 * a2 * a3 * a3;
    return num / (a1 * a2 * a3 * a4);
}

// Compact five-term expression, terms indexed a[0..4] = A_{n-2}..A_{n+2}.
Rat t_from_five(const Rat& alpha, const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3,
                const Rat& a4) {
    return a1 * a4 / (a2 * a3) + alpha * a2 * a2 / (a1 * a3) + a0 * a3 / (a1 * a2);
}

}  // namespace

Rat t_invariant(const Rat& alpha, const Rat& beta, std::span<const Rat> window) {
    if (window.size() != 4 && window.size() != 5)
        throw Error("BadWindow", "T needs a window of 4 or 5 consecutive terms");
    for (std::size_t i = 0; i < window.size(); ++i)
        if (window[i].is_zero()) throw ZeroTermError(std::int64_t(i));
    const Rat t = t_from_four(alpha, beta, window[0], window[1], window[2], window[3]);
    if (window.size() == 5) {
        const Rat t2 = t_from_four(alpha, beta, window[1], window[2], window[3], window[4]);
        const Rat t3 = t_from_five(alpha, window[0], window[1], window[2], window[3], window[4]);
        if (t != t2 || t != t3)
            throw InconsistentWindowError("window does not lie on a Somos 4 orbit");
    }
    return t;
}

Somos4Invariants somos4_invariants(const Rat& alpha, const Rat& beta,
                                   std::span<const Rat> window) {
    if (alpha.is_zero()) throw ZeroAlphaError();
    const Rat T = t_invariant(alpha, beta, window);
    Somos4Invariants inv;
    inv.T = T;
    inv.lambda = (T * T / Rat(4) - beta) / (Rat(3) * alpha);
    inv.I = alpha * alpha + beta * T;
    return inv;
}

Somos5Invariants j_tilde(const Rat& alpha_t, const Rat& beta_t, std::span<const Rat> w) {
    if (w.size() != 5) throw Error("BadWindow", "J~ needs 5 consecutive terms");
    for (std::size_t i = 0; i < 5; ++i)
        if (w[i].is_zero()) throw ZeroTermError(std::int64_t(i));
    const Rat& t1 = w[0];
    const Rat& t2 = w[1];
    const Rat& t3 = w[2];
    const Rat& t4 = w[3];
    const Rat& t5 = w[4];
    Somos5Invariants inv;
    inv.J = t4 * t1 / (t3 * t2) + t5 * t2 / (t4 * t3) +
            alpha_t * (t3 * t2 / (t4 * t1) + t4 * t3 / (t5 * t2)) + beta_t * t3 * t3 / (t5 * t1);
    inv.I_tilde = beta_t + alpha_t * inv.J;
    return inv;
}

CurveData curve_from_invariants(const Rat& alpha, const Rat& beta, const Rat& T) {
    if (alpha.is_zero()) throw ZeroAlphaError();
    const Rat T2 = T * T, T3 = T2 * T, T4 = T2 * T2, T6 = T3 * T3;
    const Rat a2 = alpha * alpha;

    CurveData c;
    c.g2 = (T4 - Rat(8) * beta * T2 - Rat(24) * a2 * T + Rat(16) * beta * beta) / (Rat(12) * a2);
    c.g3 = -(T6 - Rat(12) * beta * T4 - Rat(36) * a2 * T3 + Rat(48) * beta * beta * T2 +
             Rat(144) * a2 * beta * T + Rat(216) * a2 * a2 - Rat(64) * beta * beta * beta) /
           (Rat(216) * a2 * alpha);
    c.A = -c.g2 / Rat(4);
    c.B = -c.g3 / Rat(4);

    const Rat disc = c.g2.pow(3) - Rat(27) * c.g3 * c.g3;
    if (!disc.is_zero()) {
        c.j = Rat(1728) * c.g2.pow(3) / disc;
        // closed form directly in (alpha, beta, T)
        const Rat num = (T4 - Rat(8) * beta * T2 - Rat(24) * a2 * T + Rat(16) * beta * beta).pow(3);
        const Rat den = a2 * a2 *
                        (beta * T4 + a2 * T3 - Rat(8) * beta * beta * T2 -
                         Rat(36) * a2 * beta * T + Rat(16) * beta * beta * beta -
                         Rat(27) * a2 * a2);
        if (den.is_zero() || *c.j != num / den)
            throw Error("InternalCheck", "j closed form disagrees with 1728 g2^3 / disc");
    }
    return c;
}

CurveData n_family_curve(const Rat& N) {
    if (N.is_zero()) throw ZeroParameterError();
    const Rat N4 = N.pow(4), N8 = N4 * N4, N12 = N8 * N4, N16 = N8 * N8;
    const Rat N20 = N16 * N4, N24 = N16 * N8;

    CurveData c;
    c.g2 = (N16 - Rat(4) * N12 + Rat(30) * N8 + Rat(20) * N4 + Rat(1)) / (Rat(12) * N.pow(6));
    c.g3 = (N24 - Rat(6) * N20 + Rat(51) * N16 - Rat(56) * N12 + Rat(195) * N8 + Rat(30) * N4 +
            Rat(1)) /
           (Rat(216) * N.pow(9));
    c.A = -c.g2 / Rat(4);
    c.B = -c.g3 / Rat(4);
    const Rat jden = N16 * (N12 - Rat(5) * N8 + Rat(39) * N4 + Rat(2));
    if (!jden.is_zero())
        c.j = (N16 - Rat(4) * N12 + Rat(30) * N8 + Rat(20) * N4 + Rat(1)).pow(3) / jden;

    // same curve as the generic formulas at alpha = -1/N, beta = 1, T = -N^2 - 1/N^2
    const Rat T = -(N * N) - (N * N).inv();
    const CurveData ref = curve_from_invariants(-N.inv(), Rat(1), T);
    if (ref.g2 != c.g2 || ref.g3 != c.g3)
        throw Error("InternalCheck", "N-family closed forms disagree with the generic curve");
    return c;
}

NFamilyCurvePolys n_family_curve_symbolic() {
    auto vars = VarSet::make({"N"});
    auto mono = [&](int e, long c) {
        return LaurentPoly::variable(vars, "N", e) * LaurentPoly::constant(vars, Int(c));
    };
    NFamilyCurvePolys p{LaurentPoly::zero(vars), LaurentPoly::zero(vars),
                        LaurentPoly::zero(vars), LaurentPoly::zero(vars)};
    p.g2_num = mono(16, 1) + mono(12, -4) + mono(8, 30) + mono(4, 20) + mono(0, 1);
    p.g3_num = mono(24, 1) + mono(20, -6) + mono(16, 51) + mono(12, -56) + mono(8, 195) +
               mono(4, 30) + mono(0, 1);
    p.j_num = p.g2_num.pow(3);
    p.j_den = mono(16, 1) * (mono(12, 1) + mono(8, -5) + mono(4, 39) + mono(0, 2));
    return p;
}

}  // namespace somos
