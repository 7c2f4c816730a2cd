#include "somos/curve.hpp"

namespace somos {

namespace {

QuadVal embed(const QuadVal& like, const Rat& v) {
    return QuadVal::scalar(2, like.gamma(), v);
}

}  // namespace

bool on_curve(const CurvePoint& p, const CurveData& curve) {
    if (p.infinity) return true;
    const QuadVal rhs = embed(p.x, Rat(4)) * p.x * p.x * p.x - embed(p.x, curve.g2) * p.x -
                        embed(p.x, curve.g3);
    return p.y * p.y == rhs;
}

CurvePoint ec_neg(const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y);
}

CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q, const CurveData& curve) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (!on_curve(p, curve)) throw PointNotOnCurveError("left addend is off the curve");
    if (!on_curve(q, curve)) throw PointNotOnCurveError("right addend is off the curve");

    // short form coordinates X = x, Y = y / 2
    const QuadVal half = embed(p.x, Rat(1, 2));
    const QuadVal X1 = p.x, Y1 = p.y * half;
    const QuadVal X2 = q.x, Y2 = q.y * half;
    const QuadVal A = embed(p.x, curve.A);

    QuadVal slope;
    if (X1 == X2) {
        if (Y1 == -Y2) return CurvePoint::at_infinity();
        slope = ring_div_exact(embed(p.x, Rat(3)) * X1 * X1 + A, Y1 + Y1);
    } else {
        slope = ring_div_exact(Y2 - Y1, X2 - X1);
    }
    const QuadVal X3 = slope * slope - X1 - X2;
    const QuadVal Y3 = slope * (X1 - X3) - Y1;
    return CurvePoint::affine(X3, Y3 + Y3);
}

SequencePoints sequence_points(const Orbit<Rat>& orbit, const Rat& alpha, const Rat& beta) {
    if (alpha.is_zero()) throw ZeroAlphaError();
    for (std::int64_t n = -2; n <= 2; ++n)
        if (orbit.at(n).is_zero()) throw ZeroTermError(n);

    std::vector<Rat> window;
    for (std::int64_t n = -2; n <= 2; ++n) window.push_back(orbit.at(n));
    const auto inv = somos4_invariants(alpha, beta, window);

    SequencePoints sp;
    sp.curve = curve_from_invariants(alpha, beta, inv.T);
    sp.lambda = inv.lambda;
    sp.f_m1 = orbit.at(-2) * orbit.at(0) / (orbit.at(-1) * orbit.at(-1));
    sp.f_0 = orbit.at(-1) * orbit.at(1) / (orbit.at(0) * orbit.at(0));
    sp.f_1 = orbit.at(0) * orbit.at(2) / (orbit.at(1) * orbit.at(1));

    Rat root;
    sp.collapsed = alpha.perfect_square_root(root);
    auto make = [&](const Rat& c0, const Rat& c1) {
        if (sp.collapsed) return QuadVal::scalar(2, alpha, c0 + c1 * root);
        return QuadVal(2, alpha, {c0, c1});
    };

    const QuadVal s = make(Rat(0), Rat(1));
    sp.P = CurvePoint::affine(make(inv.lambda, Rat(0)), s);
    const Rat qy_num = sp.f_0 * sp.f_0 * (sp.f_1 - sp.f_m1);
    sp.Q = CurvePoint::affine(make(inv.lambda - sp.f_0, Rat(0)),
                              ring_div_exact(make(qy_num, Rat(0)), s));
    if (!on_curve(sp.P, sp.curve)) throw PointNotOnCurveError("P = (lambda, sqrt(alpha))");
    if (!on_curve(sp.Q, sp.curve)) throw PointNotOnCurveError("Q from the point correspondence");
    return sp;
}

CorrespondenceReport verify_correspondence(const Orbit<Rat>& orbit, const Rat& alpha,
                                           const Rat& beta, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("BadRange", "empty verification range");
    const auto sp = sequence_points(orbit, alpha, beta);
    const auto fs = to_f_sequence(orbit);

    CorrespondenceReport rep;
    rep.lo = lo;
    rep.hi = hi;

    std::vector<Rat> window;
    for (std::int64_t n = -2; n <= 2; ++n) window.push_back(orbit.at(n));
    const auto inv = somos4_invariants(alpha, beta, window);

    // T = 6 lambda^2 - g2 / 2, the exact algebraic form of T = p''(kappa)
    rep.t_identity_ok = inv.T == Rat(6) * inv.lambda * inv.lambda - sp.curve.g2 / Rat(2);

    // beta = alpha (x([2]P) - lambda) from the parametric relations
    {
        const CurvePoint twoP = ec_add(sp.P, sp.P, sp.curve);
        const QuadVal lhs = QuadVal::scalar(2, alpha, beta);
        const QuadVal rhs =
            QuadVal::scalar(2, alpha, alpha) * (twoP.x - QuadVal::scalar(2, alpha, sp.lambda));
        rep.beta_identity_ok = !twoP.infinity && lhs == rhs;
    }

    Rat root;
    const bool collapsed = alpha.perfect_square_root(root);
    const QuadVal s = collapsed ? QuadVal::scalar(2, alpha, root)
                                : QuadVal(2, alpha, {Rat(0), Rat(1)});

    int branch_pos = 0, branch_neg = 0;
    auto check_at = [&](std::int64_t n, const CurvePoint& R) {
        const Rat fx = sp.lambda - fs.at(n);
        if (R.infinity || !(R.x == QuadVal::scalar(2, alpha, fx))) {
            rep.x_matches = false;
            rep.failed.push_back(n);
            return;
        }
        const Rat ynum = fs.at(n) * fs.at(n) * (fs.at(n + 1) - fs.at(n - 1));
        const QuadVal expect = ring_div_exact(QuadVal::scalar(2, alpha, ynum), s);
        if (R.y == expect)
            ++branch_pos;
        else if (R.y == -expect)
            ++branch_neg;
    };

    CurvePoint R = sp.Q;
    for (std::int64_t n = 0; n <= hi; ++n) {
        if (n >= lo) check_at(n, R);
        if (n < hi) R = ec_add(R, sp.P, sp.curve);
    }
    R = sp.Q;
    const CurvePoint negP = ec_neg(sp.P);
    for (std::int64_t n = -1; n >= lo; --n) {
        R = ec_add(R, negP, sp.curve);
        if (n <= hi) check_at(n, R);
    }

    const std::int64_t total = hi - lo + 1;
    if (rep.x_matches && branch_pos == total)
        rep.y_branch = +1;
    else if (rep.x_matches && branch_neg == total)
        rep.y_branch = -1;
    else
        rep.y_branch = 0;
    return rep;
}

}  // namespace somos
