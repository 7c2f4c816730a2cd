#pragma once

#include <cstdint>
#include <vector>

#include "somos/extension.hpp"
#include "somos/invariants.hpp"
#include "somos/recurrence.hpp"

namespace somos {

/// Element of Q(sqrt(alpha)) represented in Q[s]/(s^2 - alpha). When alpha is
/// a perfect rational square the constructors below collapse s to its
/// nonnegative root and values stay rational.
using QuadVal = ExtElem<Rat>;

struct CurvePoint {
    bool infinity = true;
    QuadVal x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(QuadVal px, QuadVal py) {
        CurvePoint p;
        p.infinity = false;
        p.x = std::move(px);
        p.y = std::move(py);
        return p;
    }
};

/// Exact check of y^2 = 4x^3 - g2 x - g3 in the extension ring.
bool on_curve(const CurvePoint& p, const CurveData& curve);

CurvePoint ec_neg(const CurvePoint& p);

/// Chord-tangent addition, computed on Y^2 = X^3 + AX + B via x = X, y = 2Y.
CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q, const CurveData& curve);

struct SequencePoints {
    CurveData curve;
    CurvePoint P, Q;
    Rat lambda;
    Rat f_m1, f_0, f_1;
    bool collapsed;  // alpha was a perfect square; coordinates are rational
};

/// The base point P = (lambda, sqrt(alpha)) and translate Q of a Somos 4
/// orbit; both verified to lie on the associated curve. Requires the terms
/// A_{-2}..A_2 of the orbit.
SequencePoints sequence_points(const Orbit<Rat>& orbit, const Rat& alpha, const Rat& beta);

struct CorrespondenceReport {
    std::int64_t lo = 0, hi = 0;
    bool x_matches = true;            // x(Q + [n]P) == lambda - f_n for all n
    int y_branch = 0;                 // +1 / -1 when consistent, 0 when mixed
    bool t_identity_ok = true;        // T == 6 lambda^2 - g2 / 2
    bool beta_identity_ok = true;     // beta == alpha (x([2]P) - lambda)
    std::vector<std::int64_t> failed; // indices with an x mismatch
    bool ok() const { return x_matches && y_branch != 0 && t_identity_ok && beta_identity_ok; }
};

/// Walk Q + [n]P with the group law for n in [lo, hi] and compare against
/// (lambda - f_n, f_n^2 (f_{n+1} - f_{n-1}) / s) exactly. Needs orbit terms
/// on [lo - 2, hi + 2].
CorrespondenceReport verify_correspondence(const Orbit<Rat>& orbit, const Rat& alpha,
                                           const Rat& beta, std::int64_t lo, std::int64_t hi);

}  // namespace somos
