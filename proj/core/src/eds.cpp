#include "somos/eds.hpp"

#include "somos/invariants.hpp"

namespace somos {

namespace {

using Ext = ExtElem<Rat>;

Ext scale(const Ext& x, const Rat& r) {
    std::vector<Rat> c;
    c.reserve(std::size_t(x.modulus_degree()));
    for (int k = 0; k < x.modulus_degree(); ++k) c.push_back(x.coeff(k) * r);
    return Ext(x.modulus_degree(), x.gamma(), std::move(c));
}

Rat as_scalar(const Ext& x) {
    for (int k = 1; k < x.modulus_degree(); ++k)
        if (!x.coeff(k).is_zero())
            throw Error("InternalCheck", "extension element expected to be scalar");
    return x.coeff(0);
}

}  // namespace

EdsSequence EdsSequence::companion_of_somos4(const Rat& alpha, const Rat& beta, const Rat& T) {
    if (alpha.is_zero()) throw ZeroAlphaError();
    const Rat I = alpha * alpha + beta * T;
    std::vector<Ext> w;
    w.push_back(Ext::scalar(2, alpha, Rat(0)));            // W_0
    w.push_back(Ext::scalar(2, alpha, Rat(1)));            // W_1
    w.push_back(Ext::s_power(2, alpha, Rat(-1), 1));       // W_2 = -s
    w.push_back(Ext::scalar(2, alpha, -beta));             // W_3
    w.push_back(Ext::s_power(2, alpha, I, 1));             // W_4 = I s
    EdsSequence e(alpha, Ext::scalar(2, alpha, alpha), Ext::scalar(2, alpha, beta), std::move(w));
    Rat root;
    if (alpha.perfect_square_root(root)) e.collapse_root_ = root;
    return e;
}

EdsSequence EdsSequence::companion_of_somos5(const Rat& alpha_t, const Rat& beta_t,
                                             const Rat& J) {
    const Rat I_tilde = beta_t + alpha_t * J;
    if (I_tilde.is_zero())
        throw DegenerateInvariantError("I~ = beta~ + alpha~ J~ vanishes");
    std::vector<Ext> a;
    a.push_back(Ext::scalar(4, I_tilde, Rat(0)));           // a_0
    a.push_back(Ext::scalar(4, I_tilde, Rat(1)));           // a_1
    a.push_back(Ext::s_power(4, I_tilde, Rat(-1), 1));      // a_2 = -mu
    a.push_back(Ext::scalar(4, I_tilde, alpha_t));          // a_3
    a.push_back(Ext::s_power(4, I_tilde, beta_t, 1));       // a_4 = beta~ mu
    return EdsSequence(I_tilde, Ext::s_power(4, I_tilde, Rat(1), 2),
                       Ext::scalar(4, I_tilde, -alpha_t), std::move(a));
}

EdsSequence EdsSequence::from_ward_inits(const Int& W2, const Int& W3, const Int& W4) {
    const Rat alpha = Rat(W2) * Rat(W2);
    const Rat beta = -Rat(W3);
    if (alpha.is_zero()) throw ZeroTermError(2);
    // self-companion form: sqrt(alpha) = -W_2, so W_2 = -s and W_4 = (W_4 / W_2) (-s)
    std::vector<Ext> w;
    w.push_back(Ext::scalar(2, alpha, Rat(0)));
    w.push_back(Ext::scalar(2, alpha, Rat(1)));
    w.push_back(Ext::s_power(2, alpha, Rat(-1), 1));
    w.push_back(Ext::scalar(2, alpha, Rat(W3)));
    w.push_back(Ext::s_power(2, alpha, -Rat(W4) / Rat(W2), 1));
    EdsSequence e(alpha, Ext::scalar(2, alpha, alpha), Ext::scalar(2, alpha, beta), std::move(w));
    e.collapse_root_ = -Rat(W2);
    return e;
}

ExtElem<Rat> EdsSequence::at(std::int64_t n) const {
    if (n < 0) return -at(-n);
    if (n >= std::int64_t(w_.size())) throw MissingIndexError(n);
    return w_[std::size_t(n)];
}

void EdsSequence::extend_to(std::int64_t n) {
    while (std::int64_t(w_.size()) <= n) {
        const std::int64_t t = std::int64_t(w_.size());
        const Ext& pivot = w_[std::size_t(t - 4)];
        if (pivot.is_zero()) throw ZeroPivotError(t - 4);
        const Ext num = ca_ * w_[std::size_t(t - 1)] * w_[std::size_t(t - 3)] +
                        cb_ * w_[std::size_t(t - 2)] * w_[std::size_t(t - 2)];
        w_.push_back(ring_div_exact(num, pivot));
    }
}

ExtElem<Rat> ward_residual(const EdsSequence& w, std::int64_t m, std::int64_t n) {
    return w.at(n + m) * w.at(n - m) -
           (w.at(m) * w.at(n - 1)) * (w.at(m) * w.at(n + 1)) +
           (w.at(m - 1) * w.at(n)) * (w.at(m + 1) * w.at(n));
}

EdsBlock eds_block(const EdsSequence& w, std::int64_t center) {
    EdsBlock b;
    b.center = center;
    for (std::int64_t i = 0; i < 8; ++i) b.w[std::size_t(i)] = w.at(center - 3 + i);
    return b;
}

std::pair<ExtElem<Rat>, ExtElem<Rat>> eds_double_step(const EdsBlock& block) {
    const std::int64_t m = block.center;
    const Ext& wm = block.at(m);
    const Ext s = Ext::s_power(2, wm.gamma(), Rat(1), 1);
    const Ext odd = wm * wm * wm * block.at(m + 2) -
                    block.at(m + 1) * block.at(m + 1) * block.at(m + 1) * block.at(m - 1);
    const Ext even_num = block.at(m + 2) * block.at(m + 2) * block.at(m + 1) * block.at(m - 1) -
                         wm * wm * block.at(m + 3) * block.at(m + 1);
    return {odd, ring_div_exact(even_num, s)};
}

HankelResiduals hankel4_residuals(const Orbit<Rat>& orbit, const EdsSequence& w, std::int64_t m,
                                  std::int64_t n) {
    HankelResiduals r;
    const Ext w1 = w.at(1);
    r.eq_a = scale(w1 * w1, orbit.at(n + m) * orbit.at(n - m)) -
             scale(w.at(m) * w.at(m), orbit.at(n + 1) * orbit.at(n - 1)) +
             scale(w.at(m - 1) * w.at(m + 1), orbit.at(n) * orbit.at(n));
    r.eq_b = scale(w1 * w.at(2), orbit.at(n + m + 1) * orbit.at(n - m)) -
             scale(w.at(m + 1) * w.at(m), orbit.at(n + 2) * orbit.at(n - 1)) +
             scale(w.at(m - 1) * w.at(m + 2), orbit.at(n) * orbit.at(n + 1));
    return r;
}

ExtElem<Rat> hankel5_residual(const Orbit<Rat>& orbit, const EdsSequence& a, std::int64_t m,
                              std::int64_t n) {
    return scale(a.at(1) * a.at(2), orbit.at(n + m + 1) * orbit.at(n - m)) -
           scale(a.at(m + 1) * a.at(m), orbit.at(n + 2) * orbit.at(n - 1)) +
           scale(a.at(m - 1) * a.at(m + 2), orbit.at(n) * orbit.at(n + 1));
}

namespace {

struct LadderState {
    std::int64_t m;                // block center
    std::array<Ext, 8> W;          // W_{m-3} .. W_{m+4}
    std::array<Rat, 6> A;          // A_{m-1} .. A_{m+4}
};

LadderState ladder_advance(const LadderState& st, std::int64_t c, const Ext& s, const Rat& A1) {
    const std::int64_t m = st.m;
    auto W = [&](std::int64_t i) -> const Ext& { return st.W[std::size_t(i - (m - 3))]; };
    auto A = [&](std::int64_t i) -> const Rat& { return st.A[std::size_t(i - (m - 1))]; };

    LadderState out;
    out.m = c;
    for (std::int64_t j = 0; j < 8; ++j) {
        const std::int64_t t = c - 3 + j;
        if (t % 2 != 0) {
            const std::int64_t k = (t - 1) / 2;
            out.W[std::size_t(j)] =
                W(k) * W(k) * W(k) * W(k + 2) - W(k + 1) * W(k + 1) * W(k + 1) * W(k - 1);
        } else {
            const std::int64_t k = (t - 2) / 2;
            const Ext num = W(k + 2) * W(k + 2) * W(k + 1) * W(k - 1) -
                            W(k) * W(k) * W(k + 3) * W(k + 1);
            out.W[std::size_t(j)] = ring_div_exact(num, s);
        }
    }
    for (std::int64_t j = 0; j < 6; ++j) {
        const std::int64_t t = c - 1 + j;
        if (t % 2 != 0) {
            const std::int64_t k = (t - 1) / 2;
            const Ext num = scale(W(k) * W(k), A(k) * A(k + 2)) -
                            scale(W(k + 1) * W(k - 1), A(k + 1) * A(k + 1));
            out.A[std::size_t(j)] = as_scalar(num) / A1;
        } else {
            const std::int64_t k = (t - 2) / 2;
            const Ext num = scale(W(k + 2) * W(k - 1), A(k + 1) * A(k + 2)) -
                            scale(W(k) * W(k + 1), A(k) * A(k + 3));
            out.A[std::size_t(j)] = as_scalar(ring_div_exact(num, s)) / A1;
        }
    }
    return out;
}

}  // namespace

Rat fast_somos_term(const SomosRecurrence<Rat>& rec, const std::array<Rat, 4>& inits,
                    std::int64_t n) {
    if (rec.order != 4) throw Error("UnsupportedOrder", "fast evaluation is defined for order 4");
    if (n < 1) throw Error("BadRange", "fast evaluation is defined for n >= 1");
    if (inits[0].is_zero()) throw ZeroTermError(1);

    std::vector<Rat> iv(inits.begin(), inits.end());
    constexpr std::int64_t kNaiveCutoff = 24;
    if (n <= kNaiveCutoff) {
        auto orbit = generate(rec, iv, 1, 1, n);
        return orbit.at(n);
    }

    const Rat T = t_invariant(rec.coeffs[0], rec.coeffs[1], iv);
    EdsSequence w = EdsSequence::companion_of_somos4(rec.coeffs[0], rec.coeffs[1], T);
    constexpr std::int64_t kBaseTop = 20;
    w.extend_to(kBaseTop);
    auto orbit = generate(rec, iv, 1, 1, kBaseTop);

    // halving chain of block centers down to the naive window
    std::vector<std::int64_t> centers;
    for (std::int64_t c = n - 1; c > 16; c /= 2) centers.push_back(c);
    const std::int64_t base = centers.empty() ? n - 1 : centers.back() / 2;

    LadderState st;
    st.m = base;
    for (std::int64_t j = 0; j < 8; ++j) st.W[std::size_t(j)] = w.at(base - 3 + j);
    for (std::int64_t j = 0; j < 6; ++j) st.A[std::size_t(j)] = orbit.at(base - 1 + j);

    const Ext s = Ext::s_power(2, w.ext_gamma(), Rat(1), 1);
    for (auto it = centers.rbegin(); it != centers.rend(); ++it)
        st = ladder_advance(st, *it, s, inits[0]);

    return st.A[std::size_t(n - (st.m - 1))];
}

DivisibilityReport divisibility_check(const EdsSequence& w, std::int64_t lo, std::int64_t hi) {
    if (!w.collapse_root())
        throw NonIntegerSequenceError("sequence does not collapse to rational values");
    std::vector<Int> vals;
    for (std::int64_t i = lo; i <= hi; ++i) {
        const Rat v = w.at(i).collapse(*w.collapse_root());
        if (!v.is_integer())
            throw NonIntegerSequenceError("W_" + std::to_string(i) + " = " + v.str());
        vals.push_back(v.num());
    }
    return divisibility_check(vals, lo, hi);
}

DivisibilityReport divisibility_check(const std::vector<Int>& terms, std::int64_t lo,
                                      std::int64_t hi) {
    if (std::int64_t(terms.size()) != hi - lo + 1)
        throw Error("BadRange", "terms must cover [lo, hi]");
    DivisibilityReport rep;
    rep.lo = lo;
    rep.hi = hi;
    for (std::int64_t d = std::max<std::int64_t>(lo, 1); d <= hi; ++d) {
        for (std::int64_t m = 2 * d; m <= hi; m += d) {
            if (m < lo) continue;
            const Int& wd = terms[std::size_t(d - lo)];
            const Int& wm = terms[std::size_t(m - lo)];
            if (!int_divides(wd, wm)) rep.violations.emplace_back(d, m);
        }
    }
    return rep;
}

DivPolyBasis divpoly_from_curve(const Rat& A, const Rat& B, const Rat& X, const Rat& Y2) {
    if (Y2 != X * X * X + A * X + B)
        throw PointNotOnCurveError("Y^2 != X^3 + AX + B");
    DivPolyBasis d;
    d.alpha_sq = Rat(16) * Y2 * Y2;
    d.beta = A * A - Rat(6) * X * X * A - Rat(12) * X * B - Rat(3) * X.pow(4);
    d.I = Rat(2) * A.pow(3) + Rat(10) * X * X * A * A - (Rat(10) * X.pow(4) - Rat(8) * X * B) * A -
          Rat(2) * X.pow(6) - Rat(40) * X.pow(3) * B + Rat(16) * B * B;
    d.degenerate = Y2.is_zero();
    return d;
}

DivPolySymbolic divpoly_symbolic() {
    auto vars = VarSet::make({"A", "B", "X"});
    auto A = LaurentPoly::variable(vars, "A");
    auto B = LaurentPoly::variable(vars, "B");
    auto X = LaurentPoly::variable(vars, "X");
    auto k = [&](long c) { return LaurentPoly::constant(vars, Int(c)); };

    DivPolySymbolic d{LaurentPoly::zero(vars), LaurentPoly::zero(vars), LaurentPoly::zero(vars)};
    d.alpha_sq = k(16) * (X.pow(3) + A * X + B).pow(2);
    d.beta = A * A - k(6) * X * X * A - k(12) * X * B - k(3) * X.pow(4);
    d.I = k(2) * A.pow(3) + k(10) * X * X * A * A - (k(10) * X.pow(4) - k(8) * X * B) * A -
          k(2) * X.pow(6) - k(40) * X.pow(3) * B + k(16) * B * B;
    return d;
}

}  // namespace somos
