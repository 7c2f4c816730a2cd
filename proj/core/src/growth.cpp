#include "somos/growth.hpp"

#include <cmath>

namespace somos {

double log_abs_int(const Int& z) {
    if (mpz_sgn(z.get_mpz_t()) == 0) throw ZeroValueError();
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + double(exp2) * std::log(2.0);
}

double log_height(const Rat& x) {
    if (x.is_zero()) throw ZeroValueError();
    const Int num = x.num(), den = x.den();
    Int a;
    mpz_abs(a.get_mpz_t(), num.get_mpz_t());
    return log_abs_int(a >= den ? a : den);
}

namespace {

GrowthReport least_squares(const std::vector<std::pair<double, double>>& pts,
                           GrowthReport::Model model, std::int64_t lo, std::int64_t hi) {
    if (pts.size() < 10)
        throw InsufficientDataError("need at least 10 samples, have " +
                                    std::to_string(pts.size()));
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double mx = sx / double(pts.size()), my = sy / double(pts.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    GrowthReport rep;
    rep.model = model;
    rep.constant = sxy / sxx;
    rep.intercept = my - rep.constant * mx;
    rep.n_lo = lo;
    rep.n_hi = hi;
    double ss = 0;
    for (const auto& [x, y] : pts) {
        const double r = y - (rep.intercept + rep.constant * x);
        ss += r * r;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::fabs(r));
    }
    rep.rmse = std::sqrt(ss / double(pts.size()));
    return rep;
}

}  // namespace

GrowthReport fit_quadratic_growth(const Orbit<Rat>& orbit, std::int64_t lo, std::int64_t hi) {
    if (lo < orbit.first_index() || hi > orbit.last_index() || hi - lo + 1 < 10)
        throw InsufficientDataError("range must lie in the orbit and have >= 10 samples");
    std::vector<std::pair<double, double>> pts;
    for (std::int64_t n = lo; n <= hi; ++n) {
        const Rat& v = orbit.at(n);
        const double logabs = log_abs_int(v.num()) - log_abs_int(v.den());
        pts.emplace_back(double(n) * double(n), logabs);
    }
    return least_squares(pts, GrowthReport::Model::QuadraticC, lo, hi);
}

Somos8Report somos8_experiment(std::int64_t n_max) {
    if (n_max > 50) throw BoundExceededError("somos8 experiment is limited to n_max <= 50");
    if (n_max < 8) throw InsufficientDataError("n_max must be at least 8");

    SomosRecurrence<Rat> rec(8, {Rat(1), Rat(1), Rat(1), Rat(1)});
    std::vector<Rat> inits(8, Rat(1));
    auto orbit = generate(rec, inits, 1, 1, n_max);

    Somos8Report rep;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Rat& v = orbit.at(n);
        if (!rep.first_nonintegral && !v.is_integer()) {
            rep.first_nonintegral = n;
            rep.first_nonintegral_value = v;
        }
        rep.heights.emplace_back(n, log_height(v));
    }

    const std::int64_t fit_lo = 25;
    if (n_max >= fit_lo + 9) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& [n, h] : rep.heights)
            if (n >= fit_lo) pts.emplace_back(double(n), std::log(h));
        rep.fit = least_squares(pts, GrowthReport::Model::LinearK, fit_lo, n_max);
    }
    return rep;
}

}  // namespace somos
