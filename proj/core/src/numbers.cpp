#include "somos/numbers.hpp"

namespace somos {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool int_divides(const Int& d, const Int& n) {
    if (mpz_sgn(d.get_mpz_t()) == 0) return mpz_sgn(n.get_mpz_t()) == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int parse_int(std::string_view s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0)
        throw ParseError("not a decimal integer: '" + std::string(s) + "'");
    return v;
}

Rat::Rat(const Int& num, const Int& den) {
    if (mpz_sgn(den.get_mpz_t()) == 0) throw ZeroDivideError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (mpz_sgn(den.get_mpz_t()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ZeroDivideError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw ZeroDivideError("inverse of zero");
    Rat r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    const Rat base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_.get_mpq_t()), mpq_numref(base.q_.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(r.q_.get_mpq_t()), mpq_denref(base.q_.get_mpq_t()), k);
    return r;  // powers of a canonical fraction stay canonical
}

bool Rat::perfect_square_root(Rat& root) const {
    if (sign() < 0) return false;
    if (is_zero()) { root = Rat(); return true; }
    const Int n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rat(rn, rd);
    return true;
}

std::string Rat::str() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

}  // namespace somos
