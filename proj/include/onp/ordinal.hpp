#pragma once
// Ordinal: an ordinal below [the first transcendental], represented by its
// base-p expansion sum [p^delta] * a_delta with exponents delta < w^w
// (ExpOrdinal) and digits a_delta in 1..p-1. The base p itself lives in the
// Context; two Ordinals are comparable whenever they were built over the same
// base, and comparison is lexicographic on (delta, digit) from the most
// significant exponent down.

#include <compare>
#include <map>

#include "onp/errors.hpp"
#include "onp/exp_ordinal.hpp"

namespace onp {

class Ordinal {
public:
    using DigitMap = std::map<ExpOrdinal, unsigned, std::greater<ExpOrdinal>>;

    Ordinal() = default;

    const DigitMap& digits() const { return digits_; }

    unsigned digit_at(const ExpOrdinal& delta) const {
        auto it = digits_.find(delta);
        return it == digits_.end() ? 0u : it->second;
    }

    void set_digit(const ExpOrdinal& delta, unsigned a) {
        if (a == 0) digits_.erase(delta);
        else digits_[delta] = a;
    }

    bool is_zero() const { return digits_.empty(); }

    // Finite ordinals are exactly those whose every exponent is finite.
    bool is_finite() const {
        return digits_.empty() || digits_.begin()->first.is_finite();
    }

    // Base-p digits of a natural number.
    static Ordinal from_nat(BigNat n, unsigned p) {
        Ordinal o;
        std::uint64_t pos = 0;
        while (n > 0) {
            unsigned digit = static_cast<unsigned>(n % p);
            if (digit != 0) o.digits_[ExpOrdinal::from_nat(pos)] = digit;
            n /= p;
            ++pos;
        }
        return o;
    }

    // Value of a finite ordinal as a natural. Positions are capped so a
    // pathological literal like [p^(10^18)] cannot materialize.
    BigNat to_nat(unsigned p) const {
        if (!is_finite()) throw std::domain_error("Ordinal: not finite");
        BigNat total = 0;
        for (const auto& [delta, a] : digits_) {
            BigNat pos = delta.finite_value();
            if (pos > 1'000'000)
                throw resource_error("Ordinal: finite value too large to materialize");
            total += BigNat(a) * bignat_pow(BigNat(p), pos.convert_to<std::uint64_t>());
        }
        return total;
    }

    // The single group [p^delta].
    static Ordinal group(const ExpOrdinal& delta) {
        Ordinal o;
        o.digits_[delta] = 1;
        return o;
    }

    friend bool operator==(const Ordinal& a, const Ordinal& b) { return a.digits_ == b.digits_; }

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
        auto ia = a.digits_.begin(), ib = b.digits_.begin();
        for (; ia != a.digits_.end() && ib != b.digits_.end(); ++ia, ++ib) {
            if (ia->first != ib->first)
                return ia->first < ib->first ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
            if (ia->second != ib->second)
                return ia->second <=> ib->second;
        }
        if (ia != a.digits_.end()) return std::strong_ordering::greater;
        if (ib != b.digits_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    DigitMap digits_;
};

// Three-way comparison as a signed int, mirroring the library interface.
inline int compare(const Ordinal& a, const Ordinal& b) {
    auto c = a <=> b;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

} // namespace onp
