#include "somos/recurrence.hpp"

#include <deque>

namespace somos {

Orbit<Rat> gauge_apply(const Orbit<Rat>& orbit, const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroGaugeParameterError();
    std::deque<Rat> terms;
    for (std::int64_t n = orbit.first_index(); n <= orbit.last_index(); ++n)
        terms.push_back(a * b.pow(n) * orbit.at(n));
    return Orbit<Rat>::from_terms(orbit.recurrence(), std::move(terms), orbit.first_index());
}

std::pair<SomosRecurrence<Rat>, Orbit<Rat>> covariance_apply(const Orbit<Rat>& orbit,
                                                             const Rat& c) {
    if (c.is_zero()) throw ZeroGaugeParameterError();
    if (orbit.recurrence().order != 4)
        throw Error("UnsupportedOrder", "covariance transform is defined for order 4");
    const Rat alpha_hat = c.pow(6) * orbit.recurrence().coeffs[0];
    const Rat beta_hat = c.pow(8) * orbit.recurrence().coeffs[1];
    SomosRecurrence<Rat> rec(4, {alpha_hat, beta_hat});
    std::deque<Rat> terms;
    for (std::int64_t n = orbit.first_index(); n <= orbit.last_index(); ++n)
        terms.push_back(c.pow(n * n) * orbit.at(n));
    auto transformed = Orbit<Rat>::from_terms(rec, std::move(terms), orbit.first_index());
    return {std::move(rec), std::move(transformed)};
}

Rat qrt_step(const Rat& f_prev, const Rat& f_cur, const Rat& alpha, const Rat& beta) {
    if (f_prev.is_zero() || f_cur.is_zero()) throw ZeroPivotError(0);
    return (alpha * f_cur + beta) / (f_cur * f_cur * f_prev);
}

FSequence to_f_sequence(const Orbit<Rat>& orbit) {
    FSequence fs;
    fs.first_n = orbit.first_index() + 1;
    for (std::int64_t n = fs.first_n; n <= orbit.last_index() - 1; ++n) {
        if (orbit.at(n).is_zero()) throw ZeroTermError(n);
        if (orbit.at(n - 1).is_zero()) throw ZeroTermError(n - 1);
        fs.values.push_back(orbit.at(n - 1) * orbit.at(n + 1) / (orbit.at(n) * orbit.at(n)));
    }
    return fs;
}

Rat qrt_invariant(const Rat& f, const Rat& g, const Rat& alpha, const Rat& beta) {
    if (f.is_zero() || g.is_zero()) throw ZeroTermError(0);
    return f * g + alpha * (f.inv() + g.inv()) + beta / (f * g);
}

}  // namespace somos
