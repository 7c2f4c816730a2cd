#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "somos/recurrence.hpp"

namespace somos {

/// Outcome of a sufficient integrality criterion. Inconclusive never asserts
/// non-integrality: the criteria are sufficient, not necessary.
enum class Verdict { IntegralForward, IntegralBidirectional, Inconclusive };
const char* verdict_name(Verdict v);

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string witness;
};

struct CriteriaReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Hypothesis> hypotheses;
};

/// Somos 4 criterion: alpha, beta integers, A_1 = +-1, A_2..A_4 nonzero
/// integers and beta*T integral give forward integrality; integer backward
/// terms A_0, A_-1, A_-2 upgrade it to bidirectional. The window is
/// A_-2..A_4 (7 terms) or A_1..A_4 (4 terms, forward hypotheses only).
CriteriaReport check_cor_somos4(const Rat& alpha, const Rat& beta, std::span<const Rat> window);

/// gcd criterion: alpha, beta integers, the eight terms A_-2..A_5 integers,
/// and gcd(alpha,beta) = gcd(A1,A2) = gcd(alpha,A0,A2) = gcd(alpha,A1,A3) = 1.
CriteriaReport check_thm_gcd(const Rat& alpha, const Rat& beta, std::span<const Rat> window8);

/// Somos 5 criterion over tau_-2..tau_5 (8 terms) or tau_1..tau_5 (5 terms):
/// tau_1 = +-1, tau_2 = +-1, tau_3..tau_5 nonzero integers, alpha~ J~ integral.
CriteriaReport check_cor_somos5(const Rat& alpha_t, const Rat& beta_t,
                                std::span<const Rat> window);

/// The (a, d, e; b, c) family with a^3 d + e^2 = b c: recurrence
/// A_{n+4} A_n = e^3 A_{n+3} A_{n+1} + a d e^3 A_{n+2}^2, inits
/// (1, a, e^2, c e^3), guaranteed integral in both directions.
struct Family {
    SomosRecurrence<Rat> rec;
    std::vector<Rat> inits;    // A_1..A_4
    std::vector<Rat> window;   // A_-2..A_5
    Rat beta_T;                // d e^4 (a^3 + b e + c)
};
Family family_abcde(const Int& a, const Int& d, const Int& e, const Int& b, const Int& c);

/// Integer orbit of the one-parameter family at integer N != 0, produced from
/// the polynomial terms (authoritative; handles windows containing zeros) and
/// cross-checked against direct rational iteration where the latter exists.
Orbit<Rat> n_family(const Int& N, std::int64_t lo = -20, std::int64_t hi = 40);

struct GapReport {
    Int p;
    std::vector<std::int64_t> indices;  // n with p | A_n, ascending
    std::vector<std::int64_t> gaps;     // consecutive differences
};
/// Divisibility gaps of a prime p along an integer orbit.
GapReport gap_lengths(const Orbit<Rat>& orbit, const Int& p);

}  // namespace somos
