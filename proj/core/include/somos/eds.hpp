#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "somos/curve.hpp"
#include "somos/extension.hpp"
#include "somos/laurent.hpp"
#include "somos/recurrence.hpp"

namespace somos {

/// A (generalized) elliptic divisibility sequence with terms in a quotient
/// extension of Q: s^2 = alpha for Somos 4 companions, mu^4 = I~ for Somos 5
/// companions. W_0 = 0 and W_{-n} = -W_n; forward terms are generated on
/// demand by the shared fourth-order recurrence.
class EdsSequence {
public:
    /// Companion of a Somos 4 recurrence: W_1 = 1, W_2 = -s, W_3 = -beta,
    /// W_4 = I s with s^2 = alpha and I = alpha^2 + beta T.
    static EdsSequence companion_of_somos4(const Rat& alpha, const Rat& beta, const Rat& T);

    /// Companion of a Somos 5 recurrence: a_1 = 1, a_2 = -mu, a_3 = alpha~,
    /// a_4 = beta~ mu in Q[mu]/(mu^4 - I~), following the recurrence
    /// a_{n+4} a_n = mu^2 a_{n+3} a_{n+1} - alpha~ a_{n+2}^2.
    static EdsSequence companion_of_somos5(const Rat& alpha_t, const Rat& beta_t, const Rat& J);

    /// Generalized EDS from Ward-style integer data W_1 = 1, W_2, W_3, W_4.
    /// Such a sequence is its own companion with sqrt(alpha) = -W_2, so the
    /// extension collapses.
    static EdsSequence from_ward_inits(const Int& W2, const Int& W3, const Int& W4);

    int ext_degree() const { return w_[1].modulus_degree(); }
    const Rat& ext_gamma() const { return gamma_; }

    /// W_n; negative indices via antisymmetry. MissingIndex when the term has
    /// not been computed yet (use extend_to first).
    ExtElem<Rat> at(std::int64_t n) const;
    std::int64_t computed_up_to() const { return std::int64_t(w_.size()) - 1; }
    void extend_to(std::int64_t n);

    /// Recurrence coefficients (alpha, beta) of the EDS in the extension ring.
    const ExtElem<Rat>& coeff_alpha() const { return ca_; }
    const ExtElem<Rat>& coeff_beta() const { return cb_; }

    /// Rational value substituted for s when the extension collapses (set for
    /// Ward-style sequences and for companions with square alpha).
    const std::optional<Rat>& collapse_root() const { return collapse_root_; }

private:
    EdsSequence(Rat gamma, ExtElem<Rat> ca, ExtElem<Rat> cb, std::vector<ExtElem<Rat>> w01234)
        : gamma_(std::move(gamma)), ca_(std::move(ca)), cb_(std::move(cb)), w_(std::move(w01234)) {}

    Rat gamma_;
    ExtElem<Rat> ca_, cb_;
    std::vector<ExtElem<Rat>> w_;  // w_[n] = W_n for n >= 0
    std::optional<Rat> collapse_root_;
};

/// Residual of Ward's identity
/// W_{n+m} W_{n-m} - (W_m^2 W_{n-1} W_{n+1} - W_{m-1} W_{m+1} W_n^2).
ExtElem<Rat> ward_residual(const EdsSequence& w, std::int64_t m, std::int64_t n);

/// Eight consecutive EDS terms W_{center-3} .. W_{center+4}.
struct EdsBlock {
    std::int64_t center = 0;
    std::array<ExtElem<Rat>, 8> w;
    const ExtElem<Rat>& at(std::int64_t idx) const {  // absolute index
        return w[static_cast<std::size_t>(idx - (center - 3))];
    }
};
EdsBlock eds_block(const EdsSequence& w, std::int64_t center);

/// Index doubling: (W_{2m+1}, W_{2m+2}) from the block around m, by
/// W_{2m+1} = W_m^3 W_{m+2} - W_{m+1}^3 W_{m-1} and
/// W_{2m+2} = (W_{m+2}^2 W_{m+1} W_{m-1} - W_m^2 W_{m+3} W_{m+1}) / s.
std::pair<ExtElem<Rat>, ExtElem<Rat>> eds_double_step(const EdsBlock& block);

/// Residuals of the Hankel determinant identities coupling a Somos 4 orbit
/// with its companion EDS:
///   eq_a: W_1^2 A_{n+m} A_{n-m} - (W_m^2 A_{n+1} A_{n-1} - W_{m-1} W_{m+1} A_n^2)
///   eq_b: W_1 W_2 A_{n+m+1} A_{n-m} - (W_{m+1} A_{n+2} W_m A_{n-1} - W_{m-1} A_n W_{m+2} A_{n+1})
struct HankelResiduals {
    ExtElem<Rat> eq_a, eq_b;
    bool both_zero() const { return eq_a.is_zero() && eq_b.is_zero(); }
};
HankelResiduals hankel4_residuals(const Orbit<Rat>& orbit, const EdsSequence& w, std::int64_t m,
                                  std::int64_t n);

/// Somos 5 analogue: a_1 a_2 tau_{n+m+1} tau_{n-m} - det(...) with the
/// companion a-sequence.
ExtElem<Rat> hankel5_residual(const Orbit<Rat>& orbit, const EdsSequence& a, std::int64_t m,
                              std::int64_t n);

/// A_n of a Somos 4 orbit in O(log n) doubling steps over fixed-width blocks
/// of companion W values and orbit A values; bit-exact match with generate().
/// Defined for n >= 1 with initial data at indices 1..4.
Rat fast_somos_term(const SomosRecurrence<Rat>& rec, const std::array<Rat, 4>& inits,
                    std::int64_t n);

struct DivisibilityReport {
    std::int64_t lo = 0, hi = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> violations;  // (n, m) with W_n not | W_m
    bool all_hold() const { return violations.empty(); }
};

/// Check W_n | W_m for all index pairs n | m inside [lo, hi] (indices with
/// W_n = 0 are skipped on the divisor side). Terms must be integers.
DivisibilityReport divisibility_check(const EdsSequence& w, std::int64_t lo, std::int64_t hi);
/// Same check over explicit integer values terms[0] = W_lo, ...
DivisibilityReport divisibility_check(const std::vector<Int>& terms, std::int64_t lo,
                                      std::int64_t hi);

/// Division-polynomial basis attached to a point (X, Y) on Y^2 = X^3 + AX + B:
/// alpha^2 = 16 Y^4, beta = A^2 - 6X^2 A - 12XB - 3X^4,
/// I = 2A^3 + 10X^2 A^2 - (10X^4 - 8XB) A - 2X^6 - 40X^3 B + 16B^2.
struct DivPolyBasis {
    Rat alpha_sq, beta, I;
    bool degenerate = false;  // Y = 0, two-torsion point, no EDS attached
};
DivPolyBasis divpoly_from_curve(const Rat& A, const Rat& B, const Rat& X, const Rat& Y2);

/// The same three quantities as integer polynomials in {A, B, X}.
struct DivPolySymbolic {
    LaurentPoly alpha_sq, beta, I;
};
DivPolySymbolic divpoly_symbolic();

}  // namespace somos
