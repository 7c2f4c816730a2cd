#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "somos/numbers.hpp"

namespace somos {

inline constexpr std::size_t kMaxLaurentVars = 8;

/// Exponent vector of fixed arity; unused slots stay zero. Ordering is
/// lexicographic with the first variable most significant.
using ExpVec = std::array<std::int16_t, kMaxLaurentVars>;

struct LaurentTerm {
    ExpVec exps{};
    Int coeff;
};

/// Immutable ordered variable list shared between polynomials of one ring.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);
    static std::shared_ptr<const VarSet> make(std::initializer_list<const char*> names);

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

struct ExponentProfile {
    int min_exp = 0;
    int max_exp = 0;
    int modulus = 0;           // 0 when residues were not requested
    std::set<int> residues;    // exponent residues mod `modulus`
};

/// Sparse multivariate Laurent polynomial over the integers. Terms are kept
/// in descending lexicographic order of exponent vectors; no zero
/// coefficients are stored, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero over a null variable set; usable only as a placeholder

    static LaurentPoly zero(VarSetPtr vars);
    static LaurentPoly constant(VarSetPtr vars, Int c);
    static LaurentPoly variable(VarSetPtr vars, std::string_view name, int e = 1);
    static LaurentPoly monomial(VarSetPtr vars, const ExpVec& exps, Int c);
    static LaurentPoly from_terms(VarSetPtr vars, std::vector<LaurentTerm> terms);  // sorts, merges

    const VarSetPtr& vars() const { return vars_; }
    std::span<const LaurentTerm> terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly pow(unsigned e) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact quotient q with q*b == a over the integer Laurent ring.
    /// Throws NotDivisible when no such quotient exists, ZeroDivide for b == 0.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

    /// Min/max exponent of one variable across all terms, plus the exponent
    /// residues mod `modulus` when modulus > 0. Throws ZeroPolynomial on 0.
    ExponentProfile exponent_profile(std::string_view var, int modulus = 0) const;

    /// Substitute one rational value per variable (in VarSet order).
    /// Negative exponents require the corresponding value to be nonzero.
    Rat evaluate(const std::vector<Rat>& values) const;

    Int min_coefficient() const;  // smallest coefficient; ZeroPolynomial on 0

    std::string str() const;

private:
    void check_compatible(const LaurentPoly& o) const;

    VarSetPtr vars_;
    std::vector<LaurentTerm> terms_;
};

inline bool ring_is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly ring_zero_like(const LaurentPoly& p) { return LaurentPoly::zero(p.vars()); }
inline LaurentPoly ring_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::div_exact(a, b);
}

}  // namespace somos
