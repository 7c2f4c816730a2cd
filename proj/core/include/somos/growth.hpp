#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "somos/recurrence.hpp"

namespace somos {

/// Natural log of |z| from the bigint's mantissa and bit length; never
/// materializes the operand as a float. ZeroValue on 0.
double log_abs_int(const Int& z);

/// Naive logarithmic height h(p/q) = log max(|p|, q) of a reduced fraction.
double log_height(const Rat& x);

struct GrowthReport {
    enum class Model { QuadraticC, LinearK };
    Model model = Model::QuadraticC;
    double constant = 0.0;    // fitted C (log A_n ~ C n^2) or K (log h(S_n) ~ K n)
    double intercept = 0.0;
    std::int64_t n_lo = 0, n_hi = 0;
    double rmse = 0.0;
    double max_abs_residual = 0.0;
};

/// Ordinary least squares of log|A_n| against n^2 over [lo, hi] (at least 10
/// samples). The slope estimates the quadratic height-growth constant.
GrowthReport fit_quadratic_growth(const Orbit<Rat>& orbit, std::int64_t lo, std::int64_t hi);

struct Somos8Report {
    GrowthReport fit;                                     // log h(S_n) ~ K n on [25, n_max]
    std::optional<std::int64_t> first_nonintegral;        // Laurent-failure witness
    Rat first_nonintegral_value;
    std::vector<std::pair<std::int64_t, double>> heights; // (n, h(S_n))
};

/// Iterate the all-ones Somos 8 recurrence exactly (n_max <= 50; operand
/// sizes grow doubly exponentially), report the first non-integer iterate and
/// the linear fit of log h(S_n) against n.
Somos8Report somos8_experiment(std::int64_t n_max);

}  // namespace somos
