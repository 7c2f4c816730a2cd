#include "somos/integrality.hpp"

#include <deque>

#include "somos/invariants.hpp"
#include "somos/symbolic.hpp"

namespace somos {

namespace {

bool is_unit(const Rat& x) { return x.is_integer() && (x.is_one() || (-x).is_one()); }

Hypothesis integer_hyp(std::string name, const Rat& v) {
    return {std::move(name), v.is_integer(), v.str()};
}

Hypothesis nonzero_integers_hyp(std::string name, std::span<const Rat> vals,
                                std::int64_t first_index) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!vals[i].is_integer() || vals[i].is_zero()) {
            return {std::move(name), false,
                    "A_" + std::to_string(first_index + std::int64_t(i)) + " = " + vals[i].str()};
        }
    }
    return {std::move(name), true, ""};
}

Hypothesis integers_hyp(std::string name, std::span<const Rat> vals, std::int64_t first_index) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!vals[i].is_integer()) {
            return {std::move(name), false,
                    "A_" + std::to_string(first_index + std::int64_t(i)) + " = " + vals[i].str()};
        }
    }
    return {std::move(name), true, ""};
}

bool all_hold(const std::vector<Hypothesis>& hyps) {
    for (const auto& h : hyps)
        if (!h.holds) return false;
    return true;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IntegralForward: return "IntegralForward";
        case Verdict::IntegralBidirectional: return "IntegralBidirectional";
        default: return "Inconclusive";
    }
}

CriteriaReport check_cor_somos4(const Rat& alpha, const Rat& beta, std::span<const Rat> window) {
    if (window.size() != 7 && window.size() != 4)
        throw Error("BadWindow", "expected A_-2..A_4 (7 terms) or A_1..A_4 (4 terms)");
    const bool have_back = window.size() == 7;
    const std::span<const Rat> inits = window.subspan(have_back ? 3 : 0, 4);

    CriteriaReport rep;
    rep.hypotheses.push_back(integer_hyp("alpha_integer", alpha));
    rep.hypotheses.push_back(integer_hyp("beta_integer", beta));
    rep.hypotheses.push_back({"A1_unit", is_unit(inits[0]), inits[0].str()});
    rep.hypotheses.push_back(nonzero_integers_hyp("A2_A3_A4_nonzero_integers", inits.subspan(1), 2));
    const Rat T = t_invariant(alpha, beta, inits);  // may throw ZeroTerm
    rep.hypotheses.push_back(integer_hyp("betaT_integer", beta * T));
    const bool forward = all_hold(rep.hypotheses);

    Hypothesis back{"A0_Am1_Am2_integers", false, have_back ? "" : "backward terms not provided"};
    if (have_back) back = integers_hyp("A0_Am1_Am2_integers", window.subspan(0, 3), -2);
    rep.hypotheses.push_back(back);

    rep.verdict = !forward ? Verdict::Inconclusive
                           : (back.holds ? Verdict::IntegralBidirectional
                                         : Verdict::IntegralForward);
    return rep;
}

CriteriaReport check_thm_gcd(const Rat& alpha, const Rat& beta, std::span<const Rat> w) {
    if (w.size() != 8) throw Error("BadWindow", "expected the eight terms A_-2..A_5");
    CriteriaReport rep;
    rep.hypotheses.push_back(integer_hyp("alpha_integer", alpha));
    rep.hypotheses.push_back(integer_hyp("beta_integer", beta));
    rep.hypotheses.push_back(integers_hyp("eight_terms_integers", w, -2));

    const bool can_gcd = rep.hypotheses[0].holds && rep.hypotheses[1].holds &&
                         rep.hypotheses[2].holds;
    auto at = [&](std::int64_t n) { return w[std::size_t(n + 2)]; };  // w[0] = A_-2
    auto gcd_hyp = [&](std::string name, std::vector<Int> vals) {
        if (!can_gcd) {
            rep.hypotheses.push_back({std::move(name), false, "requires integer inputs"});
            return;
        }
        Int g(0);
        for (const auto& v : vals) g = int_gcd(g, v);
        rep.hypotheses.push_back({std::move(name), g == 1, "gcd = " + g.get_str()});
    };
    gcd_hyp("gcd_alpha_beta", {alpha.num(), beta.num()});
    gcd_hyp("gcd_A1_A2", {at(1).num(), at(2).num()});
    gcd_hyp("gcd_alpha_A0_A2", {alpha.num(), at(0).num(), at(2).num()});
    gcd_hyp("gcd_alpha_A1_A3", {alpha.num(), at(1).num(), at(3).num()});

    rep.verdict = all_hold(rep.hypotheses) ? Verdict::IntegralBidirectional
                                           : Verdict::Inconclusive;
    return rep;
}

CriteriaReport check_cor_somos5(const Rat& alpha_t, const Rat& beta_t,
                                std::span<const Rat> window) {
    if (window.size() != 8 && window.size() != 5)
        throw Error("BadWindow", "expected tau_-2..tau_5 (8 terms) or tau_1..tau_5 (5 terms)");
    const bool have_back = window.size() == 8;
    const std::span<const Rat> inits = window.subspan(have_back ? 3 : 0, 5);

    CriteriaReport rep;
    rep.hypotheses.push_back(integer_hyp("alpha_integer", alpha_t));
    rep.hypotheses.push_back(integer_hyp("beta_integer", beta_t));
    rep.hypotheses.push_back({"tau1_unit", is_unit(inits[0]), inits[0].str()});
    rep.hypotheses.push_back({"tau2_unit", is_unit(inits[1]), inits[1].str()});
    rep.hypotheses.push_back(
        nonzero_integers_hyp("tau3_tau4_tau5_nonzero_integers", inits.subspan(2), 3));
    const auto inv = j_tilde(alpha_t, beta_t, inits);  // may throw ZeroTerm
    rep.hypotheses.push_back(integer_hyp("alphaJ_integer", alpha_t * inv.J));
    const bool forward = all_hold(rep.hypotheses);

    Hypothesis back{"tau0_taum1_taum2_integers", false,
                    have_back ? "" : "backward terms not provided"};
    if (have_back) back = integers_hyp("tau0_taum1_taum2_integers", window.subspan(0, 3), -2);
    rep.hypotheses.push_back(back);

    rep.verdict = !forward ? Verdict::Inconclusive
                           : (back.holds ? Verdict::IntegralBidirectional
                                         : Verdict::IntegralForward);
    return rep;
}

Family family_abcde(const Int& a, const Int& d, const Int& e, const Int& b, const Int& c) {
    if (a == 0 || e == 0)
        throw ConstraintViolatedError("a and e must be nonzero");
    if (int_pow(a, 3) * d + e * e != b * c)
        throw ConstraintViolatedError("a^3 d + e^2 != b c");

    auto R = [](const Int& v) { return Rat(v); };
    const Int e2 = e * e, e3 = e2 * e;
    const Rat alpha = R(e3);
    const Rat beta = R(Int(a * d * e3));
    Family fam{SomosRecurrence<Rat>(4, {alpha, beta}),
               {Rat(1), R(a), R(e2), R(Int(c * e3))},
               {},
               R(Int(d * e2 * e2 * (int_pow(a, 3) + b * e + c)))};

    // two-sided window A_-2..A_5 from the closed forms
    fam.window = {R(Int(e3 * (b * b * d + e * (b + d)))),
                  R(Int(a * e * (b + d))),
                  R(b),
                  fam.inits[0],
                  fam.inits[1],
                  fam.inits[2],
                  fam.inits[3],
                  R(Int(a * int_pow(e, 6) * (c + d * e)))};

    // exact recurrence residuals across the window (no divisions, so zero
    // entries in the window are fine)
    for (std::size_t i = 0; i + 4 < fam.window.size(); ++i) {
        const Rat r = fam.window[i + 4] * fam.window[i] -
                      alpha * fam.window[i + 3] * fam.window[i + 1] -
                      beta * fam.window[i + 2] * fam.window[i + 2];
        if (!r.is_zero())
            throw Error("InternalCheck", "family window violates the recurrence");
    }
    return fam;
}

Orbit<Rat> n_family(const Int& N, std::int64_t lo, std::int64_t hi) {
    if (N == 0) throw ZeroParameterError();
    const auto sym = n_family_symbolic(lo, hi);

    std::deque<Rat> terms;
    for (std::int64_t n = lo; n <= hi; ++n)
        terms.push_back(n_family_evaluate(sym.terms.at(n), Rat(N)));

    SomosRecurrence<Rat> rec(4, {-Rat(N).inv(), Rat(1)});
    auto orbit = Orbit<Rat>::from_terms(rec, std::move(terms), lo);

    // cross-check against direct rational iteration where it exists
    try {
        auto direct = generate(rec, {Rat(Int(1)), -Rat(N), Rat(N), Rat(Int(1))}, 1, lo, hi);
        for (std::int64_t n = lo; n <= hi; ++n)
            if (direct.at(n) != orbit.at(n))
                throw Error("InternalCheck", "polynomial and rational paths disagree");
    } catch (const ZeroPivotError&) {
        // iteration hits a zero term (e.g. N = 1); the polynomial path stands
    }
    return orbit;
}

GapReport gap_lengths(const Orbit<Rat>& orbit, const Int& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw Error("NotPrime", p.get_str() + " is not prime");
    GapReport rep;
    rep.p = p;
    for (std::int64_t n = orbit.first_index(); n <= orbit.last_index(); ++n) {
        const Rat& v = orbit.at(n);
        if (!v.is_integer()) throw NonIntegerOrbitError("A_" + std::to_string(n) + " = " + v.str());
        if (int_divides(p, v.num())) rep.indices.push_back(n);
    }
    for (std::size_t i = 1; i < rep.indices.size(); ++i)
        rep.gaps.push_back(rep.indices[i] - rep.indices[i - 1]);
    return rep;
}

}  // namespace somos
