#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "somos/recurrence.hpp"

namespace somos {

/// Quartic s^2 v^2 + alpha (s u^3 + t^3 v) + beta t^2 u^2 = T s t u v.
struct QuarticInstance {
    Rat alpha, beta, T;
    bool beta_t_integral = false;
};
/// Build an instance from a Somos 4 window (T computed exactly).
QuarticInstance quartic_instance(const Rat& alpha, const Rat& beta,
                                 const std::array<Rat, 4>& window);
Rat quartic_residual(const QuarticInstance& inst, const std::array<Rat, 4>& stuv);

/// Quintic (s w + alpha~ u^2)(s v^2 + t^2 w) + beta~ t u^3 v = J~ s t u v w.
struct QuinticInstance {
    Rat alpha_t, beta_t, J;
    bool alpha_j_integral = false;
};
QuinticInstance quintic_instance(const Rat& alpha_t, const Rat& beta_t,
                                 const std::array<Rat, 5>& window);
Rat quintic_residual(const QuinticInstance& inst, const std::array<Rat, 5>& stuvw);

struct StreamItem {
    std::int64_t start_index = 0;
    std::vector<Rat> window;
    Int gcd;
    Rat residual;  // exactly zero along Somos orbits
};

struct StreamResult {
    std::vector<StreamItem> items;
    bool periodic = false;       // a window repeated: torsion orbit, stream stopped
    std::int64_t scanned = 0;    // windows examined
};

/// Stream consecutive orbit windows as solution tuples, starting at index 1.
/// With primitive_only, windows with gcd != 1 are filtered out (the equation
/// is homogeneous, so each window's gcd is reported rather than divided out).
/// A repeated window within the first max(count, 64) windows stops the stream
/// with the periodic flag set.
StreamResult stream_quartic(const QuarticInstance& inst, const std::array<Rat, 4>& inits,
                            std::size_t count, bool primitive_only);
StreamResult stream_quintic(const QuinticInstance& inst, const std::array<Rat, 5>& inits,
                            std::size_t count, bool primitive_only);

}  // namespace somos
