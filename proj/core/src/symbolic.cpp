#include "somos/symbolic.hpp"

#include <algorithm>

namespace somos {

namespace {

std::string witness_monomial(const LaurentPoly& p, std::size_t term_idx) {
    const auto t = p.terms()[term_idx];
    return LaurentPoly::monomial(p.vars(), t.exps, t.coeff).str();
}

// first term violating pred(exps) -> witness, or empty when all pass
template <class Pred>
std::string find_violation(const LaurentPoly& p, Pred&& pred) {
    const auto ts = p.terms();
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (!pred(ts[i].exps)) return witness_monomial(p, i);
    return {};
}

// I as a Laurent polynomial of the direct ring: alpha^2 + beta T with T from
// the four-term window formula.
LaurentPoly strong_I_substitution(const VarSetPtr& dvars) {
    auto dvar = [&](const char* nm, int e) { return LaurentPoly::variable(dvars, nm, e); };
    const LaurentPoly alpha = dvar("alpha", 1), beta = dvar("beta", 1);
    const LaurentPoly T_num = dvar("A1", 2) * dvar("A4", 2) +
                              alpha * (dvar("A2", 3) * dvar("A4", 1) +
                                       dvar("A1", 1) * dvar("A3", 3)) +
                              beta * dvar("A2", 2) * dvar("A3", 2);
    return alpha * alpha + beta * T_num * dvar("A1", -1) * dvar("A2", -1) * dvar("A3", -1) *
                               dvar("A4", -1);
}

// Map a strong-ring polynomial (u even powers, I polynomial) into the direct
// ring by u^2 -> alpha and I -> alpha^2 + beta T.
LaurentPoly strong_to_direct(const LaurentPoly& p, const VarSetPtr& svars,
                             const VarSetPtr& dvars, const LaurentPoly& I_sub) {
    const std::size_t iu = *svars->index_of("u"), ibeta = *svars->index_of("beta"),
                      iI = *svars->index_of("I");
    const std::size_t sA[4] = {*svars->index_of("A1"), *svars->index_of("A2"),
                               *svars->index_of("A3"), *svars->index_of("A4")};
    const std::size_t dalpha = *dvars->index_of("alpha"), dbeta = *dvars->index_of("beta");
    const std::size_t dA[4] = {*dvars->index_of("A1"), *dvars->index_of("A2"),
                               *dvars->index_of("A3"), *dvars->index_of("A4")};
    int max_i = p.is_zero() ? 0 : p.exponent_profile("I").max_exp;
    std::vector<std::vector<LaurentTerm>> by_ie(std::size_t(max_i) + 1);
    for (const auto& t : p.terms()) {
        ExpVec e{};
        e[dalpha] = static_cast<std::int16_t>(t.exps[iu] / 2);
        e[dbeta] = t.exps[ibeta];
        for (int k = 0; k < 4; ++k) e[dA[k]] = t.exps[sA[k]];
        by_ie[std::size_t(t.exps[iI])].push_back({e, t.coeff});
    }
    LaurentPoly acc = LaurentPoly::from_terms(dvars, std::move(by_ie[std::size_t(max_i)]));
    for (int i = max_i - 1; i >= 0; --i)
        acc = acc * I_sub + LaurentPoly::from_terms(dvars, std::move(by_ie[std::size_t(i)]));
    return acc;
}

}  // namespace

SymbolicSomos4 symbolic_somos4(int n_max, int bound) {
    if (n_max < 4) throw Error("BadRange", "need n_max >= 4");
    if (n_max > bound)
        throw BoundExceededError("n_max " + std::to_string(n_max) + " above configured bound " +
                                 std::to_string(bound));
    SymbolicSomos4 out;
    out.vars = VarSet::make({"alpha", "beta", "A1", "A2", "A3", "A4"});
    std::vector<LaurentPoly> inits;
    for (const char* v : {"A1", "A2", "A3", "A4"})
        inits.push_back(LaurentPoly::variable(out.vars, v));
    SomosRecurrence<LaurentPoly> rec(
        4, {LaurentPoly::variable(out.vars, "alpha"), LaurentPoly::variable(out.vars, "beta")});
    auto orbit = generate(rec, inits, 1, 1, n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) out.terms.push_back(orbit.at(n));
    return out;
}

StrongLaurentReport strong_laurent_check(int n_max, int bound) {
    if (n_max < 5) throw Error("BadRange", "need n_max >= 5");
    if (n_max > bound)
        throw BoundExceededError("n_max " + std::to_string(n_max) + " above configured bound " +
                                 std::to_string(bound));

    StrongLaurentReport rep;
    rep.vars = VarSet::make({"u", "beta", "I", "A1", "A2", "A3", "A4"});
    const auto& vars = rep.vars;
    auto var = [&](const char* name) { return LaurentPoly::variable(vars, name); };
    const LaurentPoly u = var("u"), beta = var("beta"), I = var("I");

    // companion EDS over {u, beta, I}: W1 = 1, W2 = -u, W3 = -beta, W4 = I u,
    // iterated by W_{t} = (u^2 W_{t-1} W_{t-3} + beta W_{t-2}^2) / W_{t-4}
    std::vector<LaurentPoly> W;  // W[k] = W_k
    W.push_back(LaurentPoly::zero(vars));
    W.push_back(LaurentPoly::constant(vars, Int(1)));
    W.push_back(-u);
    W.push_back(-beta);
    W.push_back(I * u);
    const LaurentPoly usq = u * u;
    const int w_top = n_max / 2 + 3;
    for (int t = 5; t <= w_top; ++t)
        W.push_back(LaurentPoly::div_exact(usq * W[std::size_t(t - 1)] * W[std::size_t(t - 3)] +
                                               beta * W[std::size_t(t - 2)] * W[std::size_t(t - 2)],
                                           W[std::size_t(t - 4)]));

    // A_1..A_4 are variables; A_n for n >= 5 via the Hankel halving identities
    rep.terms.push_back(var("A1"));
    rep.terms.push_back(var("A2"));
    rep.terms.push_back(var("A3"));
    rep.terms.push_back(var("A4"));
    const LaurentPoly A1inv = LaurentPoly::variable(vars, "A1", -1);
    auto A = [&](std::int64_t k) -> const LaurentPoly& { return rep.terms[std::size_t(k - 1)]; };
    for (std::int64_t n = 5; n <= n_max; ++n) {
        if (n % 2 == 1) {
            const std::int64_t m = (n - 1) / 2;
            rep.terms.push_back(
                (W[std::size_t(m)] * W[std::size_t(m)] * A(m) * A(m + 2) -
                 W[std::size_t(m + 1)] * W[std::size_t(m - 1)] * A(m + 1) * A(m + 1)) *
                A1inv);
        } else {
            const std::int64_t m = (n - 2) / 2;
            const LaurentPoly num = W[std::size_t(m + 2)] * W[std::size_t(m - 1)] * A(m + 1) * A(m + 2) -
                                    W[std::size_t(m)] * W[std::size_t(m + 1)] * A(m) * A(m + 3);
            rep.terms.push_back(LaurentPoly::div_exact(num, u) * A1inv);
        }
    }

    // membership in Z[alpha, beta, I, A1^(+-1), A2, A3, A4]: u only in even
    // nonnegative powers, no negative exponent on beta, I, A2, A3, A4
    const std::size_t iu = *vars->index_of("u"), ibeta = *vars->index_of("beta"),
                      iI = *vars->index_of("I"), iA2 = *vars->index_of("A2"),
                      iA3 = *vars->index_of("A3"), iA4 = *vars->index_of("A4");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        SymbolicRow row;
        row.n = n;
        row.monomials = A(n).term_count();
        row.min_coeff = A(n).min_coefficient();
        row.witness = find_violation(A(n), [&](const ExpVec& e) {
            return e[iu] >= 0 && e[iu] % 2 == 0 && e[ibeta] >= 0 && e[iI] >= 0 && e[iA2] >= 0 &&
                   e[iA3] >= 0 && e[iA4] >= 0;
        });
        row.ok = row.witness.empty();
        if (!row.ok) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
    }

    // dual path: substitute u^2 -> alpha and I -> alpha^2 + beta T into the
    // strong-ring terms; must reproduce the directly iterated polynomials
    const auto direct = symbolic_somos4(n_max, std::max(bound, 14));
    const auto& dvars = direct.vars;
    const LaurentPoly I_sub = strong_I_substitution(dvars);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        bool ok = rep.rows[std::size_t(n - 1)].ok;
        if (ok) ok = strong_to_direct(A(n), vars, dvars, I_sub) == direct.at(n);
        rep.dual_path_ok.push_back(ok);
        if (!ok) rep.all_ok = false;
    }
    return rep;
}

ReversalReport strong_laurent_reversal_check(int depth, int bound) {
    if (depth < 1) throw Error("BadRange", "need depth >= 1");
    const int n_max = 4 + depth;
    const auto strong = strong_laurent_check(n_max, std::max(bound, n_max));
    const auto& vars = strong.vars;
    const std::size_t iu = *vars->index_of("u"), ibeta = *vars->index_of("beta"),
                      iI = *vars->index_of("I");
    const std::size_t iA1 = *vars->index_of("A1"), iA2 = *vars->index_of("A2"),
                      iA3 = *vars->index_of("A3"), iA4 = *vars->index_of("A4");

    // Relabel A1 <-> A4, A2 <-> A3: the reversed sequence has the same
    // recurrence and the same T and I, so the generic strong-ring A*_n turns
    // into A_{5-n} expressed over Z[u, beta, I, A4^(+-1), A1, A2, A3].
    auto reverse_vars = [&](const LaurentPoly& p) {
        std::vector<LaurentTerm> ts;
        for (const auto& t : p.terms()) {
            ExpVec e = t.exps;
            std::swap(e[iA1], e[iA4]);
            std::swap(e[iA2], e[iA3]);
            ts.push_back({e, t.coeff});
        }
        return LaurentPoly::from_terms(vars, std::move(ts));
    };

    // direct backward iterates A_0, A_-1, .. over the Laurent ring
    auto dvars = VarSet::make({"alpha", "beta", "A1", "A2", "A3", "A4"});
    std::vector<LaurentPoly> inits;
    for (const char* v : {"A1", "A2", "A3", "A4"})
        inits.push_back(LaurentPoly::variable(dvars, v));
    SomosRecurrence<LaurentPoly> rec(
        4, {LaurentPoly::variable(dvars, "alpha"), LaurentPoly::variable(dvars, "beta")});
    auto orbit = generate(rec, inits, 1, 1 - std::int64_t(depth), 4);
    const LaurentPoly I_sub = strong_I_substitution(dvars);

    ReversalReport rep;
    for (int n = 5; n <= n_max; ++n) {
        const LaurentPoly rev = reverse_vars(strong.terms[std::size_t(n - 1)]);
        SymbolicRow row;
        row.n = 5 - n;  // original index of the backward term
        row.monomials = rev.term_count();
        row.min_coeff = rev.is_zero() ? Int(0) : rev.min_coefficient();
        row.witness = find_violation(rev, [&](const ExpVec& e) {
            return e[iu] >= 0 && e[iu] % 2 == 0 && e[ibeta] >= 0 && e[iI] >= 0 && e[iA1] >= 0 &&
                   e[iA2] >= 0 && e[iA3] >= 0;
        });
        row.ok = row.witness.empty();
        const bool dual =
            row.ok && strong_to_direct(rev, vars, dvars, I_sub) == orbit.at(5 - n);
        rep.dual_path_ok.push_back(dual);
        if (!row.ok || !dual) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

EdsParityReport eds_parity_check(int n_max, int bound) {
    if (n_max < 4) throw Error("BadRange", "need n_max >= 4");
    if (n_max > bound)
        throw BoundExceededError("n_max " + std::to_string(n_max) + " above configured bound " +
                                 std::to_string(bound));
    EdsParityReport rep;
    rep.vars = VarSet::make({"u", "beta", "I"});
    const auto& vars = rep.vars;
    const LaurentPoly u = LaurentPoly::variable(vars, "u");
    const LaurentPoly beta = LaurentPoly::variable(vars, "beta");
    const LaurentPoly I = LaurentPoly::variable(vars, "I");
    const LaurentPoly usq = u * u;

    std::vector<LaurentPoly> W{LaurentPoly::zero(vars), LaurentPoly::constant(vars, Int(1)), -u,
                               -beta, I * u};
    for (int t = 5; t <= n_max; ++t)
        W.push_back(LaurentPoly::div_exact(usq * W[std::size_t(t - 1)] * W[std::size_t(t - 3)] +
                                               beta * W[std::size_t(t - 2)] * W[std::size_t(t - 2)],
                                           W[std::size_t(t - 4)]));

    const std::size_t iu = *vars->index_of("u"), ibeta = *vars->index_of("beta"),
                      iI = *vars->index_of("I");
    for (int n = 1; n <= n_max; ++n) {
        const LaurentPoly& p = W[std::size_t(n)];
        SymbolicRow row;
        row.n = n;
        row.monomials = p.term_count();
        row.min_coeff = p.is_zero() ? Int(0) : p.min_coefficient();
        const int want = n % 2 == 1 ? 0 : 1;
        row.witness = find_violation(p, [&](const ExpVec& e) {
            return e[iu] >= 0 && e[iu] % 4 == want && e[ibeta] >= 0 && e[iI] >= 0;
        });
        row.ok = row.witness.empty();
        if (!row.ok) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
        rep.terms.push_back(p);
    }

    // Antisymmetry. W_{-1}, W_{-2}, W_{-3} follow from backward division
    // (pivots W_3, W_2, W_1); past the forced zero W_0 the extension
    // W_{-n} = -W_n is definitional, so there we verify that it satisfies the
    // recurrence identically.
    {
        // W_t = (u^2 W_{t+3} W_{t+1} + beta W_{t+2}^2) / W_{t+4} for t = -1, -2, -3
        std::vector<LaurentPoly> win{W[3], W[2], W[1], W[0]};  // W_{t+4}, .., W_{t+1}
        for (int t = -1; t >= -3; --t) {
            const LaurentPoly num = usq * win[1] * win[3] + beta * win[2] * win[2];
            LaurentPoly wt = LaurentPoly::div_exact(num, win[0]);
            if (!(wt == -W[std::size_t(-t)])) rep.antisymmetry_ok = false;
            win = {win[1], win[2], win[3], wt};
        }
        const int top = std::min(n_max, 10);
        auto wat = [&](int k) {
            return k >= 0 ? W[std::size_t(k)] : -W[std::size_t(-k)];
        };
        for (int t = -top; t <= -1; ++t) {
            const LaurentPoly residual =
                wat(t + 4) * wat(t) - usq * wat(t + 3) * wat(t + 1) - beta * wat(t + 2) * wat(t + 2);
            if (!residual.is_zero()) rep.antisymmetry_ok = false;
        }
    }
    if (!rep.antisymmetry_ok) rep.all_ok = false;
    return rep;
}

PositivityReport positivity_check(int n_max, int bound) {
    const auto sym = symbolic_somos4(n_max, std::max(bound, 14));
    PositivityReport rep;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const LaurentPoly& p = sym.at(n);
        SymbolicRow row;
        row.n = n;
        row.monomials = p.term_count();
        row.min_coeff = p.min_coefficient();
        row.ok = row.min_coeff > 0;
        if (!row.ok) {
            rep.all_positive = false;
            row.witness = "min coefficient " + row.min_coeff.get_str();
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

NFamilySymbolicReport n_family_symbolic(std::int64_t lo, std::int64_t hi) {
    if (lo > 1 || hi < 4) throw Error("BadRange", "range must contain the initial window [1,4]");
    NFamilySymbolicReport rep;
    rep.vars = VarSet::make({"N"});
    const auto& vars = rep.vars;
    const LaurentPoly N = LaurentPoly::variable(vars, "N");
    const LaurentPoly one = LaurentPoly::constant(vars, Int(1));

    SomosRecurrence<LaurentPoly> rec(4, {-LaurentPoly::variable(vars, "N", -1), one});
    std::vector<LaurentPoly> inits{one, -N, N, one};
    auto orbit = generate(rec, inits, 1, lo, hi);

    const std::size_t iN = *vars->index_of("N");
    for (std::int64_t n = lo; n <= hi; ++n) {
        const LaurentPoly& p = orbit.at(n);
        rep.terms.emplace(n, p);
        SymbolicRow row;
        row.n = n;
        row.monomials = p.term_count();
        row.min_coeff = p.is_zero() ? Int(0) : p.min_coefficient();
        const int mod4 = int(((n % 4) + 4) % 4);
        const int want_parity = (mod4 == 0 || mod4 == 1) ? 0 : 1;
        row.witness = find_violation(
            p, [&](const ExpVec& e) { return e[iN] >= 0 && e[iN] % 2 == want_parity; });
        row.ok = row.witness.empty();

        // zero values at N = 0: A_{4m} = (-1)^{m-1} 2^{m(m-1)/2}, A_{4m+1} = 2^{m(m-1)/2},
        // A_{4m-1} = A_{4m+2} = 0
        if (row.ok) {
            const Rat at0 = n_family_evaluate(p, Rat(0));
            Rat expect;
            if (mod4 == 0) {
                const std::int64_t m = n / 4;
                expect = Rat(int_pow(Int(2), unsigned((m * (m - 1)) / 2)));
                if (m % 2 == 0) expect = -expect;
            } else if (mod4 == 1) {
                const std::int64_t m = (n - 1) / 4;
                expect = Rat(int_pow(Int(2), unsigned((m * (m - 1)) / 2)));
            } else {
                expect = Rat(0);
            }
            if (at0 != expect) {
                row.ok = false;
                row.witness = "value at N=0 is " + at0.str() + ", expected " + expect.str();
            }
        }
        if (!row.ok) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Rat n_family_evaluate(const LaurentPoly& term, const Rat& N) {
    return term.evaluate({N});
}

}  // namespace somos
