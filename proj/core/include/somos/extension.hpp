#pragma once

#include <string>
#include <vector>

#include "somos/errors.hpp"

namespace somos {

/// Element of the quotient ring BaseRing[s]/(s^m - gamma), m in {2, 4}.
/// Coefficients are stored densely as c0..c_{m-1} for sum c_k s^k; every
/// arithmetic result has all s-exponents reduced below m via s^m -> gamma.
template <class R>
class ExtElem {
public:
    ExtElem() = default;

    ExtElem(int m, R gamma, std::vector<R> coeffs)
        : m_(m), gamma_(std::move(gamma)), c_(std::move(coeffs)) {
        if (m_ != 2 && m_ != 4) throw MixedExtensionError("modulus degree must be 2 or 4");
        if (c_.size() != static_cast<std::size_t>(m_))
            throw MixedExtensionError("coefficient count must equal the modulus degree");
    }

    static ExtElem scalar(int m, const R& gamma, const R& c0) {
        return s_power(m, gamma, c0, 0);
    }

    static ExtElem s_power(int m, const R& gamma, const R& c, int e) {
        if (e < 0 || e >= m) throw MixedExtensionError("s-exponent out of range");
        std::vector<R> coeffs;
        coeffs.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) coeffs.push_back(ring_zero_like(gamma));
        coeffs[static_cast<std::size_t>(e)] = c;
        return ExtElem(m, gamma, std::move(coeffs));
    }

    int modulus_degree() const { return m_; }
    const R& gamma() const { return gamma_; }
    const R& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!ring_is_zero(c)) return false;
        return true;
    }

    /// True iff at most one s-power carries a nonzero coefficient.
    bool is_single_term() const {
        int nz = 0;
        for (const auto& c : c_)
            if (!ring_is_zero(c)) ++nz;
        return nz <= 1;
    }

    /// Exponent of the single nonzero s-power (0 for the zero element).
    int single_exponent() const {
        for (int k = 0; k < m_; ++k)
            if (!ring_is_zero(c_[std::size_t(k)])) return k;
        return 0;
    }

    ExtElem operator-() const {
        ExtElem r = *this;
        for (auto& c : r.c_) c = ring_zero_like(c) - c;
        return r;
    }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        a.check_compatible(b);
        ExtElem r = a;
        for (int k = 0; k < a.m_; ++k) r.c_[std::size_t(k)] = a.c_[std::size_t(k)] + b.c_[std::size_t(k)];
        return r;
    }

    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }

    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        a.check_compatible(b);
        const int m = a.m_;
        std::vector<R> out;
        out.reserve(std::size_t(m));
        for (int k = 0; k < m; ++k) out.push_back(ring_zero_like(a.gamma_));
        for (int i = 0; i < m; ++i) {
            if (ring_is_zero(a.c_[std::size_t(i)])) continue;
            for (int j = 0; j < m; ++j) {
                if (ring_is_zero(b.c_[std::size_t(j)])) continue;
                R prod = a.c_[std::size_t(i)] * b.c_[std::size_t(j)];
                int k = i + j;
                if (k >= m) {
                    prod = prod * a.gamma_;  // s^m -> gamma; i+j <= 2m-2 < 2m
                    k -= m;
                }
                out[std::size_t(k)] = out[std::size_t(k)] + prod;
            }
        }
        return ExtElem(m, a.gamma_, std::move(out));
    }

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        a.check_compatible(b);
        for (int k = 0; k < a.m_; ++k)
            if (!(a.c_[std::size_t(k)] == b.c_[std::size_t(k)])) return false;
        return true;
    }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    /// Substitute s -> root (valid when gamma == root^m in the base ring).
    R collapse(const R& root) const {
        R acc = c_[std::size_t(m_ - 1)];
        for (int k = m_ - 2; k >= 0; --k) acc = acc * root + c_[std::size_t(k)];
        return acc;
    }

    std::string str(const std::string& sym = "s") const;

    void check_compatible(const ExtElem& b) const {
        if (m_ == 0 || b.m_ == 0)
            throw MixedExtensionError("operation on an uninitialized extension element");
        if (m_ != b.m_) throw MixedExtensionError("mixed modulus degrees");
        if (!(gamma_ == b.gamma_)) throw MixedExtensionError("mixed extension moduli (gamma differs)");
    }

private:
    int m_ = 0;
    R gamma_{};
    std::vector<R> c_;
};

template <class R>
bool ring_is_zero(const ExtElem<R>& x) {
    return x.is_zero();
}

template <class R>
ExtElem<R> ring_zero_like(const ExtElem<R>& x) {
    return ExtElem<R>::scalar(x.modulus_degree(), x.gamma(), ring_zero_like(x.gamma()));
}

/// Exact division. Single-term divisors divide componentwise with the s-power
/// shifted down (wrapping multiplies the divisor by gamma). For m == 2 a
/// general divisor is handled through the conjugate, requiring exact division
/// by its norm in the base ring.
template <class R>
ExtElem<R> ring_div_exact(const ExtElem<R>& x, const ExtElem<R>& y) {
    x.check_compatible(y);
    const int m = x.modulus_degree();
    if (y.is_zero()) throw ZeroDivideError("extension division by zero");

    if (y.is_single_term()) {
        const int e = y.single_exponent();
        const R& c = y.coeff(e);
        std::vector<R> out;
        out.reserve(std::size_t(m));
        for (int k = 0; k < m; ++k) out.push_back(ring_zero_like(x.gamma()));
        for (int k = 0; k < m; ++k) {
            if (ring_is_zero(x.coeff(k))) continue;
            const int j = ((k - e) % m + m) % m;
            if (k >= e) {
                out[std::size_t(j)] = ring_div_exact(x.coeff(k), c);
            } else {
                out[std::size_t(j)] = ring_div_exact(x.coeff(k), c * x.gamma());
            }
        }
        return ExtElem<R>(m, x.gamma(), std::move(out));
    }

    if (m == 2) {
        // x / (a + b s) = x (a - b s) / (a^2 - gamma b^2)
        const R& a = y.coeff(0);
        const R& b = y.coeff(1);
        R norm = a * a - x.gamma() * b * b;
        if (ring_is_zero(norm))
            throw NotDivisibleError("extension divisor has zero norm (zero divisor)");
        ExtElem<R> conj(2, x.gamma(), {a, ring_zero_like(b) - b});
        ExtElem<R> num = x * conj;
        std::vector<R> out{ring_div_exact(num.coeff(0), norm), ring_div_exact(num.coeff(1), norm)};
        return ExtElem<R>(2, x.gamma(), std::move(out));
    }

    throw NotDivisibleError("general division unsupported for modulus degree 4");
}

template <class R>
std::string ext_coeff_str(const R& c) {
    return c.str();
}

template <class R>
std::string ExtElem<R>::str(const std::string& sym) const {
    std::string out;
    for (int k = 0; k < m_; ++k) {
        if (ring_is_zero(c_[std::size_t(k)])) continue;
        if (!out.empty()) out += " + ";
        std::string cs = ext_coeff_str(c_[std::size_t(k)]);
        if (k == 0) {
            out += cs;
        } else {
            if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
            out += (cs == "1" ? "" : cs + "*") + sym + (k == 1 ? "" : "^" + std::to_string(k));
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace somos
