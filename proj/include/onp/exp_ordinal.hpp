#pragma once
// ExpOrdinal: an ordinal strictly below w^w, stored as its base-omega
// expansion sum_k w^k * c_k with finitely many nonzero counts c_k. Counts are
// arbitrary-precision naturals. This type plays two roles: the exponent
// position delta in base-p expansions [p^delta], and the exponent gamma of a
// Cantor-normal-form term w^gamma * m.

#include <compare>
#include <cstdint>
#include <map>

#include "onp/factor.hpp" // BigNat

namespace onp {

class ExpOrdinal {
public:
    // Terms keyed by the omega-power k, descending so that iteration order is
    // the significance order used by comparisons and printing.
    using TermMap = std::map<std::uint64_t, BigNat, std::greater<std::uint64_t>>;

    ExpOrdinal() = default;

    static ExpOrdinal from_nat(const BigNat& n) {
        ExpOrdinal e;
        if (n > 0) e.terms_[0] = n;
        return e;
    }

    static ExpOrdinal omega_power(std::uint64_t k, const BigNat& count = 1) {
        ExpOrdinal e;
        if (count > 0) e.terms_[k] = count;
        return e;
    }

    const TermMap& terms() const { return terms_; }

    // Count at position k (0 if absent).
    BigNat count_at(std::uint64_t k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigNat(0) : it->second;
    }

    void set_count(std::uint64_t k, const BigNat& c) {
        if (c == 0) terms_.erase(k);
        else terms_[k] = c;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const { return terms_.empty() || terms_.begin()->first == 0; }

    // Value of a finite ExpOrdinal; throws otherwise.
    BigNat finite_value() const {
        if (!is_finite()) throw std::domain_error("ExpOrdinal: not finite");
        return terms_.empty() ? BigNat(0) : terms_.begin()->second;
    }

    // Terms with k >= 1 (the limit part) and the k == 0 count.
    ExpOrdinal limit_part() const {
        ExpOrdinal e;
        for (const auto& [k, c] : terms_)
            if (k >= 1) e.terms_[k] = c;
        return e;
    }
    BigNat finite_count() const { return count_at(0); }

    // Ordinal addition: this + other. Terms of *this strictly above other's
    // leading position survive; the leading positions merge; other's tail is
    // kept verbatim.
    ExpOrdinal plus(const ExpOrdinal& other) const {
        if (other.is_zero()) return *this;
        std::uint64_t lead = other.terms_.begin()->first;
        ExpOrdinal out;
        for (const auto& [k, c] : terms_)
            if (k > lead) out.terms_[k] = c;
        out.terms_[lead] = count_at(lead) + other.terms_.begin()->second;
        for (auto it = std::next(other.terms_.begin()); it != other.terms_.end(); ++it)
            out.terms_[it->first] = it->second;
        return out;
    }

    // Every term w^k * c becomes w^(k-1) * c. Requires finite_count() == 0.
    ExpOrdinal shifted_down() const {
        if (count_at(0) != 0) throw std::domain_error("ExpOrdinal: shift of non-limit value");
        ExpOrdinal e;
        for (const auto& [k, c] : terms_) e.terms_[k - 1] = c;
        return e;
    }

    // Every term w^k * c becomes w^(k+1) * c.
    ExpOrdinal shifted_up() const {
        ExpOrdinal e;
        for (const auto& [k, c] : terms_) e.terms_[k + 1] = c;
        return e;
    }

    // The gamma with 1 + gamma == *this. Identity on infinite values,
    // predecessor on finite nonzero ones.
    ExpOrdinal left_decrement() const {
        if (!is_finite()) return *this;
        BigNat v = finite_value();
        if (v == 0) throw std::domain_error("ExpOrdinal: decrement of zero");
        return from_nat(v - 1);
    }

    friend bool operator==(const ExpOrdinal& a, const ExpOrdinal& b) { return a.terms_ == b.terms_; }

    friend std::strong_ordering operator<=>(const ExpOrdinal& a, const ExpOrdinal& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first)
                return ia->first <=> ib->first; // larger omega-power dominates
            if (ia->second != ib->second)
                return ia->second < ib->second ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
        }
        if (ia != a.terms_.end()) return std::strong_ordering::greater;
        if (ib != b.terms_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    TermMap terms_;
};

} // namespace onp
