#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "somos/laurent.hpp"
#include "somos/recurrence.hpp"

namespace somos {

struct SymbolicRow {
    std::int64_t n = 0;
    std::size_t monomials = 0;
    Int min_coeff;
    bool ok = true;            // membership / positivity verdict for this n
    std::string witness;       // offending monomial when ok is false
};

/// Terms A_1..A_n of the Somos 4 recurrence iterated symbolically over
/// Z[alpha, beta, A1^(+-1), .., A4^(+-1)]. Every division performed by the
/// iteration is exact; a failure would falsify the Laurent property and
/// surfaces as NotDivisible.
struct SymbolicSomos4 {
    VarSetPtr vars;                   // {alpha, beta, A1, A2, A3, A4}
    std::vector<LaurentPoly> terms;   // terms[0] = A_1
    const LaurentPoly& at(std::int64_t n) const {
        if (n < 1 || n > std::int64_t(terms.size())) throw MissingIndexError(n);
        return terms[std::size_t(n - 1)];
    }
};
SymbolicSomos4 symbolic_somos4(int n_max, int bound = 14);

/// Strong Laurent verification: builds A_n through the companion EDS over
/// {u, beta, I} (alpha = u^2) with the Hankel halving identities, checks
/// membership in Z[alpha, beta, I, A1^(+-1), A2, A3, A4], and checks that
/// substituting I -> alpha^2 + beta T reproduces the directly iterated A_n.
struct StrongLaurentReport {
    bool all_ok = true;
    std::vector<SymbolicRow> rows;        // membership per n
    std::vector<bool> dual_path_ok;       // per n (offset by first_n = 1)
    VarSetPtr vars;                       // {u, beta, I, A1, A2, A3, A4}
    std::vector<LaurentPoly> terms;       // strong-ring A_1..A_n
};
StrongLaurentReport strong_laurent_check(int n_max = 12, int bound = 12);

/// Backward counterpart of the strong Laurent property: running the same
/// construction on the reversed sequence A*_n = A_{5-n} (which satisfies the
/// same recurrence, with T and I unchanged) places the backward terms
/// A_0, A_-1, ... in Z[alpha, beta, I, A4^(+-1), A1, A2, A3]. Each reversed
/// term is also compared against direct backward iteration.
struct ReversalReport {
    bool all_ok = true;
    std::vector<SymbolicRow> rows;      // indexed by original n = 0, -1, ..
    std::vector<bool> dual_path_ok;
};
ReversalReport strong_laurent_reversal_check(int depth = 8, int bound = 12);

/// Parity structure of the symbolic companion EDS over {u, beta, I}:
/// odd-index terms have u-exponents = 0 mod 4, even-index terms = 1 mod 4,
/// all beta and I exponents nonnegative; antisymmetry W_{-n} = -W_n.
struct EdsParityReport {
    bool all_ok = true;
    bool antisymmetry_ok = true;
    std::vector<SymbolicRow> rows;
    VarSetPtr vars;                    // {u, beta, I}
    std::vector<LaurentPoly> terms;    // W_1..W_n
};
EdsParityReport eds_parity_check(int n_max = 16, int bound = 16);

/// Coefficient positivity of the symbolic Somos 4 Laurent polynomials.
struct PositivityReport {
    bool all_positive = true;
    std::vector<SymbolicRow> rows;
};
PositivityReport positivity_check(int n_max = 10, int bound = 12);

/// The one-parameter family iterated over Z[N, N^-1] with alpha = -1/N,
/// beta = 1 and inits (1, -N, N, 1). Checks: each term is a polynomial in N,
/// with only even powers when n = 0, 1 mod 4 and only odd powers when
/// n = 2, 3 mod 4; values at N = 0 follow the closed zero-value formulas.
struct NFamilySymbolicReport {
    bool all_ok = true;
    std::vector<SymbolicRow> rows;
    std::map<std::int64_t, LaurentPoly> terms;
    VarSetPtr vars;  // {N}
};
NFamilySymbolicReport n_family_symbolic(std::int64_t lo, std::int64_t hi);

/// Evaluate a one-variable polynomial of the N-family at an integer N.
Rat n_family_evaluate(const LaurentPoly& term, const Rat& N);

}  // namespace somos
