#pragma once

#include <optional>
#include <span>

#include "somos/laurent.hpp"
#include "somos/numbers.hpp"

namespace somos {

/// Translation invariant T of a Somos 4 orbit, from a window of 4 or 5
/// consecutive nonzero terms. With 5 terms the two embedded 4-term windows
/// and the compact 5-term expression are all evaluated and must agree.
Rat t_invariant(const Rat& alpha, const Rat& beta, std::span<const Rat> window);

struct Somos4Invariants {
    Rat T;
    Rat lambda;  // (T^2/4 - beta) / (3 alpha)
    Rat I;       // alpha^2 + beta T
};
Somos4Invariants somos4_invariants(const Rat& alpha, const Rat& beta,
                                   std::span<const Rat> window);

struct Somos5Invariants {
    Rat J;
    Rat I_tilde;  // beta~ + alpha~ J~
};
/// J~ of a Somos 5 orbit from 5 consecutive nonzero terms.
Somos5Invariants j_tilde(const Rat& alpha_t, const Rat& beta_t, std::span<const Rat> window5);

struct CurveData {
    Rat g2, g3;           // y^2 = 4x^3 - g2 x - g3
    Rat A, B;             // short form Y^2 = X^3 + A X + B with A = -g2/4, B = -g3/4
    std::optional<Rat> j; // nullopt when g2^3 - 27 g3^2 = 0 (singular curve)
    bool j_infinite() const { return !j.has_value(); }
};

/// Weierstrass data of the curve associated with (alpha, beta, T); the
/// j-invariant is cross-checked against its closed form in (alpha, beta, T).
CurveData curve_from_invariants(const Rat& alpha, const Rat& beta, const Rat& T);

/// Curve family of the one-parameter integer sequences (alpha = -1/N, beta = 1).
CurveData n_family_curve(const Rat& N);

/// The same family symbolically: integer polynomials in N with
/// g2 = g2_num / (12 N^6), g3 = g3_num / (216 N^9), j = j_num / j_den.
struct NFamilyCurvePolys {
    LaurentPoly g2_num, g3_num, j_num, j_den;  // over the single variable N
};
NFamilyCurvePolys n_family_curve_symbolic();

}  // namespace somos
