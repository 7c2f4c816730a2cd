#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "somos/errors.hpp"

namespace somos {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

Int int_pow(const Int& base, unsigned long e);
Int int_gcd(const Int& a, const Int& b);
bool int_divides(const Int& d, const Int& n);  // d | n, with 0 | n iff n == 0
Int parse_int(std::string_view s);

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    explicit Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    static Rat parse(std::string_view s);  // "p/q" or "p" decimal strings

    Int num() const { return Int(mpq_numref(q_.get_mpq_t())); }
    Int den() const { return Int(mpq_denref(q_.get_mpq_t())); }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_one() const { return mpq_cmp_si(q_.get_mpq_t(), 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat inv() const;
    Rat pow(long e) const;  // negative e inverts; 0^negative throws
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// True iff the value is r^2 for some rational r; if so sets root to the
    /// nonnegative square root.
    bool perfect_square_root(Rat& root) const;

    std::string str() const;  // "p/q", or "p" when the denominator is 1

    const mpq_class& raw() const { return q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline bool ring_is_zero(const Rat& x) { return x.is_zero(); }
inline Rat ring_zero_like(const Rat&) { return Rat(); }
inline Rat ring_div_exact(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw ZeroDivideError("rational division by zero");
    return a / b;
}

}  // namespace somos
