#include "somos/laurent.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace somos {

namespace {

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (std::size_t i = 0; i < kMaxLaurentVars; ++i) {
        int v = int(a[i]) + int(b[i]);
        if (v < INT16_MIN || v > INT16_MAX)
            throw Error("ExponentOverflow", "Laurent exponent out of range");
        r[i] = static_cast<std::int16_t>(v);
    }
    return r;
}

ExpVec sub_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (std::size_t i = 0; i < kMaxLaurentVars; ++i) {
        int v = int(a[i]) - int(b[i]);
        if (v < INT16_MIN || v > INT16_MAX)
            throw Error("ExponentOverflow", "Laurent exponent out of range");
        r[i] = static_cast<std::int16_t>(v);
    }
    return r;
}

struct ExpHash {
    std::size_t operator()(const ExpVec& e) const noexcept {
        std::uint64_t lo, hi;
        std::memcpy(&lo, e.data(), 8);
        std::memcpy(&hi, e.data() + 4, 8);
        std::uint64_t x = (lo ^ 0x9E3779B97F4A7C15ull) * 0xC2B2AE3D27D4EB4Full;
        x ^= (hi + 0x165667B19E3779F9ull + (x << 5));
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

// Merge two term lists sorted in descending lex order, summing equal keys.
std::vector<LaurentTerm> merge_sorted(const std::vector<LaurentTerm>& a,
                                      const std::vector<LaurentTerm>& b) {
    std::vector<LaurentTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].exps > b[j].exps) {
            out.push_back(a[i++]);
        } else if (b[j].exps > a[i].exps) {
            out.push_back(b[j++]);
        } else {
            Int c = a[i].coeff + b[j].coeff;
            if (mpz_sgn(c.get_mpz_t()) != 0) out.push_back({a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxLaurentVars)
        throw VariableMismatchError("variable count must be in [1, 8]");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw VariableMismatchError("duplicate variable '" + names_[i] + "'");
}

std::shared_ptr<const VarSet> VarSet::make(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    v.reserve(names.size());
    for (const char* n : names) v.emplace_back(n);
    return std::make_shared<const VarSet>(std::move(v));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (!vars_ || !o.vars_)
        throw VariableMismatchError("operation on a polynomial without a variable set");
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
        throw VariableMismatchError("polynomials over different variable sets");
}

LaurentPoly LaurentPoly::zero(VarSetPtr vars) {
    LaurentPoly p;
    p.vars_ = std::move(vars);
    return p;
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, Int c) {
    LaurentPoly p = zero(std::move(vars));
    if (mpz_sgn(c.get_mpz_t()) != 0) p.terms_.push_back({ExpVec{}, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::string_view name, int e) {
    auto idx = vars->index_of(name);
    if (!idx) throw VariableMismatchError("unknown variable '" + std::string(name) + "'");
    ExpVec ev{};
    if (e < INT16_MIN || e > INT16_MAX) throw Error("ExponentOverflow", "exponent out of range");
    ev[*idx] = static_cast<std::int16_t>(e);
    return monomial(std::move(vars), ev, Int(1));
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, const ExpVec& exps, Int c) {
    LaurentPoly p = zero(std::move(vars));
    for (std::size_t i = p.vars_->arity(); i < kMaxLaurentVars; ++i)
        if (exps[i] != 0) throw VariableMismatchError("exponent outside declared arity");
    if (mpz_sgn(c.get_mpz_t()) != 0) p.terms_.push_back({exps, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarSetPtr vars, std::vector<LaurentTerm> terms) {
    LaurentPoly p = zero(std::move(vars));
    std::sort(terms.begin(), terms.end(),
              [](const LaurentTerm& a, const LaurentTerm& b) { return a.exps > b.exps; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
            p.terms_.back().coeff += t.coeff;
            if (mpz_sgn(p.terms_.back().coeff.get_mpz_t()) == 0) p.terms_.pop_back();
        } else if (mpz_sgn(t.coeff.get_mpz_t()) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].exps == ExpVec{} &&
           mpz_cmp_ui(terms_[0].coeff.get_mpz_t(), 1) == 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p = LaurentPoly::zero(a.vars_);
    p.terms_ = merge_sorted(a.terms_, b.terms_);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p = LaurentPoly::zero(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return p;

    // single-term factors preserve the sorted order
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const LaurentTerm& s = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& rest = a.terms_.size() == 1 ? b.terms_ : a.terms_;
        p.terms_.reserve(rest.size());
        for (const auto& t : rest)
            p.terms_.push_back({add_exps(t.exps, s.exps), t.coeff * s.coeff});
        return p;
    }

    std::unordered_map<ExpVec, Int, ExpHash> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Int& slot = acc[add_exps(ta.exps, tb.exps)];
            mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
        }
    }
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (mpz_sgn(c.get_mpz_t()) != 0) p.terms_.push_back({e, std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const LaurentTerm& x, const LaurentTerm& y) { return x.exps > y.exps; });
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    if (!vars_) throw VariableMismatchError("pow on a polynomial without a variable set");
    LaurentPoly r = constant(vars_, Int(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

namespace {

// Remaining suffix of a term list, consumed from the front.
struct Bucket {
    std::vector<LaurentTerm> terms;
    std::size_t pos = 0;
    std::size_t remaining() const { return terms.size() - pos; }
    const LaurentTerm& head() const { return terms[pos]; }
};

Bucket merge_buckets(Bucket& a, Bucket& b) {
    Bucket out;
    out.terms.reserve(a.remaining() + b.remaining());
    std::size_t i = a.pos, j = b.pos;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].exps > b.terms[j].exps) {
            out.terms.push_back(std::move(a.terms[i++]));
        } else if (b.terms[j].exps > a.terms[i].exps) {
            out.terms.push_back(std::move(b.terms[j++]));
        } else {
            Int c = a.terms[i].coeff + b.terms[j].coeff;
            if (mpz_sgn(c.get_mpz_t()) != 0) out.terms.push_back({a.terms[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(std::move(a.terms[i]));
    for (; j < b.terms.size(); ++j) out.terms.push_back(std::move(b.terms[j]));
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    if (b.is_zero()) throw ZeroDivideError("division by the zero polynomial");
    LaurentPoly q = zero(a.vars_);
    if (a.is_zero()) return q;

    // Shift both operands so every exponent is nonnegative; lex on N^k is a
    // well-order, so leading-term elimination below terminates.
    ExpVec amin = a.terms_[0].exps, bmin = b.terms_[0].exps;
    for (const auto& t : a.terms_)
        for (std::size_t i = 0; i < kMaxLaurentVars; ++i) amin[i] = std::min(amin[i], t.exps[i]);
    for (const auto& t : b.terms_)
        for (std::size_t i = 0; i < kMaxLaurentVars; ++i) bmin[i] = std::min(bmin[i], t.exps[i]);

    std::vector<LaurentTerm> bs;
    bs.reserve(b.terms_.size());
    for (const auto& t : b.terms_) bs.push_back({sub_exps(t.exps, bmin), t.coeff});
    const LaurentTerm& blead = bs[0];

    std::vector<Bucket> buckets;
    {
        Bucket b0;
        b0.terms.reserve(a.terms_.size());
        for (const auto& t : a.terms_) b0.terms.push_back({sub_exps(t.exps, amin), t.coeff});
        buckets.push_back(std::move(b0));
    }

    auto pop_leading = [&]() -> std::optional<LaurentTerm> {
        for (;;) {
            int best = -1;
            for (std::size_t k = 0; k < buckets.size(); ++k) {
                if (buckets[k].remaining() == 0) continue;
                if (best < 0 || buckets[k].head().exps > buckets[std::size_t(best)].head().exps)
                    best = int(k);
            }
            if (best < 0) return std::nullopt;
            ExpVec e = buckets[std::size_t(best)].head().exps;
            Int c(0);
            for (auto& bk : buckets) {
                while (bk.remaining() > 0 && bk.head().exps == e) {
                    c += bk.head().coeff;
                    ++bk.pos;
                }
            }
            if (mpz_sgn(c.get_mpz_t()) != 0) return LaurentTerm{e, std::move(c)};
        }
    };

    const ExpVec unshift = sub_exps(amin, bmin);
    while (auto lt = pop_leading()) {
        // quotient term = lt / lead(b)
        ExpVec qe{};
        for (std::size_t i = 0; i < kMaxLaurentVars; ++i) {
            int v = int(lt->exps[i]) - int(blead.exps[i]);
            if (v < 0) throw NotDivisibleError("leading monomial not divisible");
            qe[i] = static_cast<std::int16_t>(v);
        }
        if (!mpz_divisible_p(lt->coeff.get_mpz_t(), blead.coeff.get_mpz_t()))
            throw NotDivisibleError("leading coefficient not divisible");
        Int qc;
        mpz_divexact(qc.get_mpz_t(), lt->coeff.get_mpz_t(), blead.coeff.get_mpz_t());

        // r -= qterm * tail(b); qterm * tail stays sorted
        if (bs.size() > 1) {
            Bucket nb;
            nb.terms.reserve(bs.size() - 1);
            for (std::size_t i = 1; i < bs.size(); ++i)
                nb.terms.push_back({add_exps(bs[i].exps, qe), -(qc * bs[i].coeff)});
            buckets.push_back(std::move(nb));
            while (buckets.size() >= 2 &&
                   buckets[buckets.size() - 2].remaining() <=
                       2 * buckets[buckets.size() - 1].remaining()) {
                Bucket merged = merge_buckets(buckets[buckets.size() - 2], buckets.back());
                buckets.pop_back();
                buckets.pop_back();
                buckets.push_back(std::move(merged));
            }
        }
        q.terms_.push_back({add_exps(qe, unshift), std::move(qc)});
    }
    return q;  // quotient exponents were emitted in strictly descending order
}

ExponentProfile LaurentPoly::exponent_profile(std::string_view var, int modulus) const {
    if (!vars_) throw VariableMismatchError("polynomial without a variable set");
    auto idx = vars_->index_of(var);
    if (!idx) throw VariableMismatchError("unknown variable '" + std::string(var) + "'");
    if (terms_.empty()) throw ZeroPolynomialError();
    ExponentProfile prof;
    prof.modulus = modulus;
    prof.min_exp = prof.max_exp = terms_[0].exps[*idx];
    for (const auto& t : terms_) {
        int e = t.exps[*idx];
        prof.min_exp = std::min(prof.min_exp, e);
        prof.max_exp = std::max(prof.max_exp, e);
        if (modulus > 0) prof.residues.insert(((e % modulus) + modulus) % modulus);
    }
    return prof;
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& values) const {
    if (!vars_) throw VariableMismatchError("polynomial without a variable set");
    if (values.size() != vars_->arity())
        throw VariableMismatchError("evaluate: expected one value per variable");
    Rat sum;
    for (const auto& t : terms_) {
        Rat m(t.coeff);
        for (std::size_t i = 0; i < vars_->arity(); ++i) {
            int e = t.exps[i];
            if (e == 0) continue;
            if (values[i].is_zero() && e < 0)
                throw ZeroDivideError("negative power of zero in evaluation");
            m *= values[i].pow(e);
        }
        sum += m;
    }
    return sum;
}

Int LaurentPoly::min_coefficient() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    Int m = terms_[0].coeff;
    for (const auto& t : terms_)
        if (t.coeff < m) m = t.coeff;
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.coeff;
        const bool neg = mpz_sgn(c.get_mpz_t()) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        std::string mono;
        for (std::size_t i = 0; i < vars_->arity(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_->name(i);
            if (t.exps[i] != 1) mono += "^" + std::to_string(t.exps[i]);
        }
        const bool unit = mpz_cmp_ui(c.get_mpz_t(), 1) == 0;
        if (mono.empty()) {
            out += c.get_str();
        } else if (unit) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
        first = false;
    }
    return out;
}

}  // namespace somos
