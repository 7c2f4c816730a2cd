#pragma once

#include <concepts>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "somos/errors.hpp"
#include "somos/numbers.hpp"

namespace somos {

/// A commutative ring with an exactness-checked division, the minimum the
/// orbit engine needs. Models: Rat, LaurentPoly, ExtElem<R>.
template <class R>
concept Ring = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_is_zero(a) } -> std::convertible_to<bool>;
    { ring_zero_like(a) } -> std::convertible_to<R>;
    { ring_div_exact(a, b) } -> std::convertible_to<R>;
};

/// Somos-k recurrence S_{n+k} S_n = sum_{j=1}^{floor(k/2)} c_j S_{n+k-j} S_{n+j}.
/// k = 4 carries (alpha, beta), k = 5 (alpha~, beta~), k = 8 four coefficients.
template <Ring R>
struct SomosRecurrence {
    int order = 4;
    std::vector<R> coeffs;

    SomosRecurrence(int k, std::vector<R> c) : order(k), coeffs(std::move(c)) {
        if (k != 4 && k != 5 && k != 8)
            throw Error("UnsupportedOrder", "recurrence order must be 4, 5 or 8");
        if (coeffs.size() != static_cast<std::size_t>(k / 2))
            throw Error("BadCoefficients", "coefficient count must be floor(k/2)");
    }
};

/// A contiguous window of computed terms, extendable in both directions.
template <Ring R>
class Orbit {
public:
    Orbit(SomosRecurrence<R> rec, std::vector<R> inits, std::int64_t init_start = 1)
        : rec_(std::move(rec)), base_(init_start) {
        if (inits.size() != static_cast<std::size_t>(rec_.order))
            throw Error("BadInitialData", "need exactly k initial terms");
        for (std::size_t i = 0; i < inits.size(); ++i)
            if (ring_is_zero(inits[i])) throw ZeroTermError(init_start + std::int64_t(i));
        for (auto& v : inits) terms_.push_back(std::move(v));
    }

    const SomosRecurrence<R>& recurrence() const { return rec_; }
    std::int64_t first_index() const { return base_; }
    std::int64_t last_index() const { return base_ + std::int64_t(terms_.size()) - 1; }
    bool has(std::int64_t n) const { return n >= first_index() && n <= last_index(); }

    const R& at(std::int64_t n) const {
        if (!has(n)) throw MissingIndexError(n);
        return terms_[static_cast<std::size_t>(n - base_)];
    }

    void extend_to(std::int64_t hi) {
        const int k = rec_.order;
        while (last_index() < hi) {
            const std::int64_t t = last_index() + 1;
            const R& pivot = at(t - k);
            if (ring_is_zero(pivot)) throw ZeroPivotError(t - k);
            terms_.push_back(ring_div_exact(combination(t, +1), pivot));
        }
    }

    void extend_back_to(std::int64_t lo) {
        const int k = rec_.order;
        while (first_index() > lo) {
            const std::int64_t t = first_index() - 1;
            const R& pivot = at(t + k);
            if (ring_is_zero(pivot)) throw ZeroPivotError(t + k);
            terms_.push_front(ring_div_exact(combination(t, -1), pivot));
            --base_;
        }
    }

    /// Residual A_{n+k} A_n - sum_j c_j A_{n+k-j} A_{n+j}; zero on every
    /// stored window of a consistent orbit.
    R residual(std::int64_t n) const {
        const int k = rec_.order;
        R r = at(n + k) * at(n) - at(n + k - 1) * at(n + 1) * rec_.coeffs[0];
        for (int j = 2; j <= k / 2; ++j)
            r = r - rec_.coeffs[std::size_t(j - 1)] * at(n + k - j) * at(n + j);
        return r;
    }

    /// Replace the stored window (used by gauge/covariance transforms, which
    /// re-verify the recurrence on the result).
    static Orbit from_terms(SomosRecurrence<R> rec, std::deque<R> terms, std::int64_t base) {
        Orbit o(std::move(rec), std::move(terms), base);
        for (std::int64_t n = o.first_index(); n + o.rec_.order <= o.last_index(); ++n)
            if (!ring_is_zero(o.residual(n)))
                throw Error("RecurrenceViolated",
                            "terms do not satisfy the recurrence at n=" + std::to_string(n));
        return o;
    }

private:
    Orbit(SomosRecurrence<R> rec, std::deque<R> terms, std::int64_t base)
        : rec_(std::move(rec)), terms_(std::move(terms)), base_(base) {
        if (terms_.size() < static_cast<std::size_t>(rec_.order))
            throw Error("BadInitialData", "need at least k terms");
    }

    // Bilinear combination whose quotient by the pivot yields the new term at
    // index t; dir=+1 extends forward, dir=-1 backward.
    R combination(std::int64_t t, int dir) const {
        const int k = rec_.order;
        auto idx = [&](int j) { return dir > 0 ? t - j : t + j; };
        auto idx2 = [&](int j) { return dir > 0 ? t - (k - j) : t + (k - j); };
        R sum = rec_.coeffs[0] * at(idx(1)) * at(idx2(1));
        for (int j = 2; j <= k / 2; ++j)
            sum = sum + rec_.coeffs[std::size_t(j - 1)] * at(idx(j)) * at(idx2(j));
        return sum;
    }

    SomosRecurrence<R> rec_;
    std::deque<R> terms_;
    std::int64_t base_ = 1;
};

template <Ring R>
Orbit<R> generate(SomosRecurrence<R> rec, std::vector<R> inits, std::int64_t init_start,
                  std::int64_t from, std::int64_t to) {
    Orbit<R> orbit(std::move(rec), std::move(inits), init_start);
    if (to > orbit.last_index()) orbit.extend_to(to);
    if (from < orbit.first_index()) orbit.extend_back_to(from);
    return orbit;
}

// ---- transforms on rational orbits ----

/// A_n -> a * b^n * A_n; same recurrence, residuals re-verified.
Orbit<Rat> gauge_apply(const Orbit<Rat>& orbit, const Rat& a, const Rat& b);

/// A_n -> c^{n^2} A_n with (alpha, beta) -> (c^6 alpha, c^8 beta).
std::pair<SomosRecurrence<Rat>, Orbit<Rat>> covariance_apply(const Orbit<Rat>& orbit,
                                                             const Rat& c);

/// One step of the QRT map f_{n+1} f_n^2 f_{n-1} = alpha f_n + beta.
Rat qrt_step(const Rat& f_prev, const Rat& f_cur, const Rat& alpha, const Rat& beta);

/// f_n = A_{n-1} A_{n+1} / A_n^2 for all interior indices of the orbit.
struct FSequence {
    std::int64_t first_n = 0;
    std::vector<Rat> values;
    const Rat& at(std::int64_t n) const {
        if (n < first_n || n >= first_n + std::int64_t(values.size())) throw MissingIndexError(n);
        return values[std::size_t(n - first_n)];
    }
    std::int64_t last_n() const { return first_n + std::int64_t(values.size()) - 1; }
};
FSequence to_f_sequence(const Orbit<Rat>& orbit);

/// Conserved quantity of the QRT map, Eq-level form of the translation
/// invariant: f g + alpha (1/f + 1/g) + beta / (f g).
Rat qrt_invariant(const Rat& f, const Rat& g, const Rat& alpha, const Rat& beta);

}  // namespace somos
