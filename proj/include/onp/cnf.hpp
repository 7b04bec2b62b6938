#pragma once
// Cantor normal form over the representable segment: ordinals strictly below
// [w^w^w], written sum w^E * m with exponents E < w^w (ExpOrdinal) and
// natural coefficients m >= 1. This is the base-independent side of the two
// ordinal notations; conversions to and from base-p expansions live here too.
// Arithmetic implements the classical normal-form algorithms: absorbing
// addition, left subtraction, distributive multiplication, and exponentiation
// split into limit and finite exponent parts.

#include <compare>
#include <map>

#include "onp/errors.hpp"
#include "onp/exp_ordinal.hpp"
#include "onp/ordinal.hpp"

namespace onp {

class Cnf {
public:
    using TermMap = std::map<ExpOrdinal, BigNat, std::greater<ExpOrdinal>>;

    Cnf() = default;

    static Cnf from_nat(const BigNat& n) {
        Cnf c;
        if (n > 0) c.terms_[ExpOrdinal()] = n;
        return c;
    }

    // w^E * m as a one-term normal form.
    static Cnf omega_power(const ExpOrdinal& e, const BigNat& m = 1) {
        Cnf c;
        if (m > 0) c.terms_[e] = m;
        return c;
    }

    static Cnf from_exp_ordinal(const ExpOrdinal& e) {
        Cnf c;
        for (const auto& [k, count] : e.terms())
            c.terms_[ExpOrdinal::from_nat(k)] = count;
        return c;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const { return terms_.empty() || terms_.begin()->first.is_zero(); }

    BigNat finite_value() const {
        if (!is_finite()) throw std::domain_error("Cnf: not finite");
        return terms_.empty() ? BigNat(0) : terms_.begin()->second;
    }

    // Reinterpret a value below w^w as an ExpOrdinal; values at or above w^w
    // do not fit the representable segment's exponent position.
    ExpOrdinal to_exp_ordinal() const {
        ExpOrdinal e;
        for (const auto& [exp, m] : terms_) {
            if (!exp.is_finite())
                throw out_of_range_error("ordinal exponent reaches w^w; result would leave the representable segment");
            BigNat k = exp.finite_value();
            if (k > 0xffffffffULL)
                throw resource_error("ordinal exponent position too large");
            e.set_count(k.convert_to<std::uint64_t>(), m);
        }
        return e;
    }

    // --- ordering ---------------------------------------------------------

    friend bool operator==(const Cnf& a, const Cnf& b) { return a.terms_ == b.terms_; }

    friend std::strong_ordering operator<=>(const Cnf& a, const Cnf& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first)
                return ia->first < ib->first ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
            if (ia->second != ib->second)
                return ia->second < ib->second ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
        }
        if (ia != a.terms_.end()) return std::strong_ordering::greater;
        if (ib != b.terms_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    // --- arithmetic -------------------------------------------------------

    Cnf plus(const Cnf& other) const {
        if (other.is_zero()) return *this;
        const ExpOrdinal& lead = other.terms_.begin()->first;
        Cnf out;
        for (const auto& [e, m] : terms_)
            if (e > lead) out.terms_[e] = m;
        BigNat merged = other.terms_.begin()->second;
        if (auto it = terms_.find(lead); it != terms_.end()) merged += it->second;
        out.terms_[lead] = merged;
        for (auto it = std::next(other.terms_.begin()); it != other.terms_.end(); ++it)
            out.terms_[it->first] = it->second;
        return out;
    }

    // Left subtraction: the unique gamma with other + gamma == *this.
    // Throws std::domain_error when other > *this.
    Cnf left_minus(const Cnf& other) const {
        if (other > *this) throw std::domain_error("ordinal subtraction: minuend is smaller");
        auto ia = terms_.begin(), ib = other.terms_.begin();
        for (; ib != other.terms_.end() && ia != terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || ia->second != ib->second) break;
        }
        Cnf out;
        if (ib == other.terms_.end()) {
            for (; ia != terms_.end(); ++ia) out.terms_[ia->first] = ia->second; // strict tail
        } else if (ia->first == ib->first && ia->second > ib->second) {
            out.terms_[ia->first] = ia->second - ib->second;
            for (++ia; ia != terms_.end(); ++ia) out.terms_[ia->first] = ia->second;
        } else {
            // first difference already favours *this by exponent
            for (; ia != terms_.end(); ++ia) out.terms_[ia->first] = ia->second;
        }
        return out;
    }

    Cnf times(const Cnf& other) const {
        if (is_zero() || other.is_zero()) return Cnf();
        const ExpOrdinal& lead_exp = terms_.begin()->first;
        Cnf out;
        for (const auto& [e, m] : other.terms_) {
            if (e.is_zero()) {
                // finite right factor: scale the leading term, keep the tail
                out.terms_[lead_exp] = terms_.begin()->second * m;
                for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
                    out.terms_[it->first] = it->second;
            } else {
                out.terms_[lead_exp.plus(e)] = m;
            }
        }
        return out;
    }

    // this ^ other. Caps keep degenerate literals (huge finite powers) from
    // exhausting memory; they surface as resource errors.
    Cnf pow(const Cnf& other,
            std::uint64_t finite_exp_cap = 1'000'000,
            std::uint64_t term_cap = 100'000) const {
        if (other.is_zero()) return from_nat(1);
        if (is_zero()) return Cnf();
        if (terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1)
            return from_nat(1); // 1^x

        Cnf limit_part;
        BigNat n = 0;
        for (const auto& [e, m] : other.terms_) {
            if (e.is_zero()) n = m;
            else limit_part.terms_[e] = m;
        }

        Cnf result = from_nat(1);
        if (!limit_part.is_zero()) {
            Cnf m_exp;
            if (is_finite()) {
                // a^(w^E * b) = w^(w^(E-1) * b) for finite a >= 2
                for (const auto& [e, b] : limit_part.terms_)
                    m_exp.terms_[e.left_decrement()] = b;
            } else {
                // a^L = w^(lead(a) * L) for infinite a
                m_exp = from_exp_ordinal(terms_.begin()->first).times(limit_part);
            }
            result = omega_power(m_exp.to_exp_ordinal());
        }
        if (n > 0) {
            if (n > finite_exp_cap)
                throw resource_error("ordinal power: finite exponent exceeds cap");
            result = result.times(pow_finite(n.convert_to<std::uint64_t>(), term_cap));
        }
        return result;
    }

private:
    // this^n for a machine-sized finite n >= 1, by squaring.
    Cnf pow_finite(std::uint64_t n, std::uint64_t term_cap) const {
        if (is_finite()) {
            BigNat base = finite_value();
            // bit-size guard: |base^n| in bits
            if (static_cast<std::uint64_t>(boost::multiprecision::msb(base) + 1) * n > (1ULL << 25))
                throw resource_error("ordinal power: finite result exceeds size cap");
            return from_nat(bignat_pow(base, n));
        }
        Cnf acc = from_nat(1), sq = *this;
        while (n) {
            if (n & 1) acc = acc.times(sq);
            n >>= 1;
            if (n) sq = sq.times(sq);
            if (acc.terms_.size() > term_cap || sq.terms_.size() > term_cap)
                throw resource_error("ordinal power: term count exceeds cap");
        }
        return acc;
    }

    TermMap terms_;
};

// --- conversions between the two notations ---------------------------------

// Base-p expansion -> Cantor normal form. Each group [p^delta] with
// delta = L + c_0 (limit part plus finite count) contributes to the CNF term
// with exponent L shifted down one omega-power, coefficient multiplied by
// p^c_0; digits sharing that exponent accumulate.
inline Cnf cnf_from_ordinal(const Ordinal& o, unsigned p) {
    std::map<ExpOrdinal, BigNat> acc;
    for (const auto& [delta, a] : o.digits()) {
        BigNat c0 = delta.finite_count();
        if (c0 > 1'000'000)
            throw resource_error("base-p expansion: finite exponent too large to expand");
        ExpOrdinal e = delta.limit_part().shifted_down();
        acc[e] += BigNat(a) * bignat_pow(BigNat(p), c0.convert_to<std::uint64_t>());
    }
    Cnf out;
    // descending exponent order so that ordinal addition never absorbs a term
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        out = out.plus(Cnf::omega_power(it->first, it->second));
    return out;
}

// Cantor normal form -> base-p expansion: expand each coefficient in base p,
// the digit at p^j of coefficient m(E) landing on position w*(E shifted up) + j.
inline Ordinal ordinal_from_cnf(const Cnf& c, unsigned p) {
    Ordinal o;
    for (const auto& [e, m] : c.terms()) {
        ExpOrdinal base = e.shifted_up();
        BigNat rest = m;
        BigNat j = 0;
        while (rest > 0) {
            if (j > 1'000'000)
                throw resource_error("base-p expansion: coefficient too large to expand");
            unsigned digit = static_cast<unsigned>(rest % p);
            if (digit != 0) {
                ExpOrdinal delta = base;
                if (j > 0) delta.set_count(0, j);
                o.set_digit(delta, digit);
            }
            rest /= p;
            ++j;
        }
    }
    return o;
}

} // namespace onp
