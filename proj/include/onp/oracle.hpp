#pragma once
// Independent oracles and the MEX machinery.
//
// TowerField rebuilds the finite-field chain from first principles: starting
// at the prime field, each step finds the minimal degree n at which some
// g(x) = x^n - h(x) is rootless, picks the lexicographically earliest h
// (higher coefficients first, coefficients compared as ordinals), and extends
// by a root, the current field's ordinal itself playing the root. Addition
// and multiplication come out as dense tables, computed with nothing but the
// previous step's tables and polynomial reduction mod g — no engine code.
//
// on2_genetic rebuilds characteristic-2 arithmetic from the genetic (mex)
// definitions alone: a+b = mex{a'+b, a+b'}, ab = mex{a'b + ab' - a'b'}.
//
// mex_set / has_mex_property / check_lower_bounds run the same mex sets
// through the engine, for the lower-bound lemma and the conjecture sweeps.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "onp/parser.hpp"
#include "onp/structure.hpp"

namespace onp {

// --- dense tower oracle -------------------------------------------------------

struct TowerField {
    unsigned p = 0;
    std::size_t size = 0;
    std::vector<std::uint32_t> add_tab, mul_tab;
    // h chosen at each extension step, coefficients descending (h_{n-1}..h_0)
    std::vector<std::vector<std::uint32_t>> step_h;

    std::uint32_t add(std::size_t a, std::size_t b) const { return add_tab[a * size + b]; }
    std::uint32_t mul(std::size_t a, std::size_t b) const { return mul_tab[a * size + b]; }
};

namespace detail {

// a - b inside the tower: a + (additive inverse of b), found from the table.
inline std::uint32_t tower_sub(const TowerField& f, std::uint32_t a, std::uint32_t b) {
    for (std::size_t c = 0; c < f.size; ++c)
        if (f.add(b, c) == 0) return f.add(a, static_cast<std::uint32_t>(c));
    throw std::logic_error("tower_sub: no additive inverse"); // unreachable on a group
}

// Evaluate g(x) = x^n - h(x) at xi over the tower field.
inline std::uint32_t tower_eval_g(const TowerField& f, const std::vector<std::uint32_t>& h,
                                  std::uint32_t xi) {
    std::uint32_t xn = 1;
    for (std::size_t i = 0; i < h.size(); ++i) xn = f.mul(xn, xi); // xi^n, n == h.size()
    std::uint32_t hv = 0; // Horner on h, descending coefficients
    for (std::uint32_t c : h) hv = f.add(f.mul(hv, xi), c);
    return tower_sub(f, xn, hv);
}

} // namespace detail

// One extension step: minimal rootless degree, lexicographically earliest h.
inline TowerField extend_tower(const TowerField& f, std::uint64_t cell_cap) {
    // find the minimal degree n and, within it, the lex-earliest h
    std::vector<std::uint32_t> h;
    std::size_t n = 1;
    for (; n <= 8; ++n) {
        std::vector<std::uint32_t> cand(n, 0);
        bool exhausted = false;
        while (!exhausted) {
            bool rootless = true;
            for (std::size_t xi = 0; xi < f.size && rootless; ++xi)
                if (detail::tower_eval_g(f, cand, static_cast<std::uint32_t>(xi)) == 0)
                    rootless = false;
            if (rootless) { h = cand; break; }
            // advance in lex order: lowest coefficient fastest
            std::size_t i = n;
            while (i-- > 0) {
                if (++cand[i] < f.size) break;
                cand[i] = 0;
                if (i == 0) exhausted = true;
            }
        }
        if (!h.empty()) break;
    }
    if (h.empty()) throw std::logic_error("extend_tower: no rootless polynomial found");

    std::size_t new_size = 1;
    for (std::size_t i = 0; i < n; ++i) new_size *= f.size;
    if (new_size > cell_cap)
        throw resource_error("tower: size cap exceeded");

    TowerField out;
    out.p = f.p;
    out.size = new_size;
    out.step_h = f.step_h;
    out.step_h.push_back(h);
    out.add_tab.assign(new_size * new_size, 0);
    out.mul_tab.assign(new_size * new_size, 0);

    // elements are polynomials in the adjoined root phi, digits base f.size;
    // index sum a_i * size^i <-> sum a_i * phi^i
    auto digits_of = [&](std::size_t v) {
        std::vector<std::uint32_t> d(n);
        for (std::size_t i = 0; i < n; ++i) { d[i] = static_cast<std::uint32_t>(v % f.size); v /= f.size; }
        return d;
    };
    auto index_of = [&](const std::vector<std::uint32_t>& d) {
        std::size_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * f.size + d[i];
        return v;
    };

    for (std::size_t a = 0; a < new_size; ++a) {
        auto da = digits_of(a);
        for (std::size_t b = 0; b <= a; ++b) {
            auto db = digits_of(b);
            // addition: componentwise
            std::vector<std::uint32_t> ds(n);
            for (std::size_t i = 0; i < n; ++i) ds[i] = f.add(da[i], db[i]);
            std::size_t s = index_of(ds);
            out.add_tab[a * new_size + b] = static_cast<std::uint32_t>(s);
            out.add_tab[b * new_size + a] = static_cast<std::uint32_t>(s);

            // multiplication: schoolbook product, then reduce x^n -> h(x)
            std::vector<std::uint32_t> prod(2 * n - 1, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    prod[i + j] = f.add(prod[i + j], f.mul(da[i], db[j]));
            for (std::size_t d = 2 * n - 2; d >= n && d < prod.size(); --d) {
                std::uint32_t c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (std::size_t i = 0; i < n; ++i) { // h stored descending
                    std::uint32_t hc = h[n - 1 - i];
                    prod[d - n + i] = f.add(prod[d - n + i], f.mul(c, hc));
                }
            }
            std::vector<std::uint32_t> dm(prod.begin(), prod.begin() + n);
            std::size_t m = index_of(dm);
            out.mul_tab[a * new_size + b] = static_cast<std::uint32_t>(m);
            out.mul_tab[b * new_size + a] = static_cast<std::uint32_t>(m);
        }
    }
    return out;
}

// Dense tables for the field of the given size (a tower size: p, p^2, p^4, ...).
inline TowerField build_tower(unsigned p, std::size_t size, std::uint64_t cell_cap = 10'000) {
    if (!is_prime_u64(p)) throw std::invalid_argument("build_tower: p must be prime");
    if (size > cell_cap) throw resource_error("tower: size cap exceeded");
    TowerField f;
    f.p = p;
    f.size = p;
    f.add_tab.assign(std::size_t(p) * p, 0);
    f.mul_tab.assign(std::size_t(p) * p, 0);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            f.add_tab[a * p + b] = static_cast<std::uint32_t>((a + b) % p);
            f.mul_tab[a * p + b] = static_cast<std::uint32_t>(a * b % p);
        }
    while (f.size < size) {
        f = extend_tower(f, cell_cap);
        if (f.size > size)
            throw std::invalid_argument("build_tower: size is not a tower size for this p");
    }
    return f;
}

// --- smallest absent ordinal ---------------------------------------------------

// mex of a finite set: the least ordinal not in s. The scan over naturals
// terminates within |s|+1 steps.
inline Ordinal mex(const std::set<Ordinal>& s, unsigned p) {
    for (BigNat n = 0;; ++n) {
        Ordinal candidate = Ordinal::from_nat(n, p);
        if (s.find(candidate) == s.end()) return candidate;
    }
}

// --- genetic characteristic-2 tables -------------------------------------------

struct GeneticTables {
    std::size_t size = 0; // closure size actually built (2^(2^k) >= requested cap)
    std::vector<std::uint32_t> add_tab, mul_tab;
    std::uint32_t add(std::size_t a, std::size_t b) const { return add_tab[a * size + b]; }
    std::uint32_t mul(std::size_t a, std::size_t b) const { return mul_tab[a * size + b]; }
};

// Fill add and mul tables below cap straight from the mex recursions. The
// tables close under the recursion only at sizes 2^(2^k), so the build rounds
// up; 256 is the supported ceiling (the next closure point, 65536, is beyond
// a dense table's budget).
inline GeneticTables on2_genetic(std::size_t cap) {
    std::size_t size = 2;
    while (size < cap) {
        if (size >= 256)
            throw resource_error("on2_genetic: bound exceeds the 256 table ceiling");
        size *= size;
    }
    GeneticTables t;
    t.size = size;
    t.add_tab.assign(size * size, 0);
    t.mul_tab.assign(size * size, 0);

    // mex scratch: stamp[v] == generation marks v as present
    std::vector<std::uint32_t> stamp(2 * size + 1, 0);
    std::uint32_t gen = 0;
    auto mex_of_stamped = [&](std::uint32_t g) {
        std::uint32_t v = 0;
        while (stamp[v] == g) ++v;
        return v;
    };

    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            ++gen;
            for (std::size_t x = 0; x < a; ++x) stamp[t.add(x, b)] = gen;
            for (std::size_t y = 0; y < b; ++y) stamp[t.add(a, y)] = gen;
            std::uint32_t v = mex_of_stamped(gen);
            t.add_tab[a * size + b] = v;
            t.add_tab[b * size + a] = v;
        }

    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            ++gen;
            for (std::size_t x = 0; x < a; ++x)
                for (std::size_t y = 0; y < b; ++y) {
                    // x*b + a*y - x*y; subtraction is addition in char 2
                    std::uint32_t v = t.add(t.add(t.mul(x, b), t.mul(a, y)), t.mul(x, y));
                    stamp[v] = gen;
                }
            std::uint32_t v = mex_of_stamped(gen);
            t.mul_tab[a * size + b] = v;
            t.mul_tab[b * size + a] = v;
        }
    return t;
}

// --- engine-side MEX machinery ---------------------------------------------------

// { a'b + ab' - a'b' : a' < a, b' < b }, computed with the engine. Finite
// inputs only (the sets are enumerations below a cap).
inline std::set<Ordinal> mex_set(const Ordinal& a, const Ordinal& b, Context& ctx) {
    if (!a.is_finite() || !b.is_finite())
        throw std::invalid_argument("mex_set: inputs must be finite");
    BigNat abig = a.to_nat(ctx.p()), bbig = b.to_nat(ctx.p());
    if (abig > 100'000 || bbig > 100'000 || abig * bbig > 10'000'000)
        throw resource_error("mex_set: enumeration too large");
    std::uint64_t av = abig.convert_to<std::uint64_t>();
    std::uint64_t bv = bbig.convert_to<std::uint64_t>();

    std::uint64_t top = std::max(av, bv);
    std::vector<Element> els(top + 1);
    for (std::uint64_t i = 0; i <= top; ++i)
        els[i] = ordinal_to_element(Ordinal::from_nat(i, ctx.p()), ctx.p());
    const Element ea = els[av], eb = els[bv];

    std::set<Ordinal> out;
    for (std::uint64_t x = 0; x < av; ++x) {
        Element xb = mul(els[x], eb, ctx);
        for (std::uint64_t y = 0; y < bv; ++y) {
            Element v = sub(add(xb, mul(ea, els[y], ctx), ctx), mul(els[x], els[y], ctx), ctx);
            out.insert(element_to_ordinal(v, ctx.p()));
        }
    }
    return out;
}

// Does ab equal mex{a'b + ab' - a'b'}?
inline bool has_mex_property(const Ordinal& a, const Ordinal& b, Context& ctx) {
    Element ea = ordinal_to_element(a, ctx.p());
    Element eb = ordinal_to_element(b, ctx.p());
    Ordinal product = element_to_ordinal(mul(ea, eb, ctx), ctx.p());
    return product == mex(mex_set(a, b, ctx), ctx.p());
}

// Lower-bound sweep (the lemma: both operations dominate their mex sets).
struct MexReport {
    std::uint64_t pairs = 0;
    std::uint64_t add_equal = 0; // pairs where a+b == mex of the addition set
    std::uint64_t mul_equal = 0; // pairs where ab == mex of the product set
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline MexReport check_lower_bounds(std::uint64_t cap, Context& ctx) {
    MexReport report;
    const unsigned p = ctx.p();
    std::vector<Element> els(cap);
    for (std::uint64_t i = 0; i < cap; ++i)
        els[i] = ordinal_to_element(Ordinal::from_nat(i, p), p);

    for (std::uint64_t a = 0; a < cap; ++a)
        for (std::uint64_t b = 0; b < cap; ++b) {
            ++report.pairs;
            // addition bound: a+b >= mex{a'+b, a+b'}
            std::set<Ordinal> adds;
            for (std::uint64_t x = 0; x < a; ++x)
                adds.insert(element_to_ordinal(add(els[x], els[b], ctx), p));
            for (std::uint64_t y = 0; y < b; ++y)
                adds.insert(element_to_ordinal(add(els[a], els[y], ctx), p));
            Ordinal add_mex = mex(adds, p);
            Ordinal sum = element_to_ordinal(add(els[a], els[b], ctx), p);
            if (sum < add_mex)
                report.violations.push_back(
                    "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    ": sum below its mex bound");
            else if (sum == add_mex)
                ++report.add_equal;

            // product bound: ab >= mex{a'b + ab' - a'b'}
            Ordinal oa = Ordinal::from_nat(a, p), ob = Ordinal::from_nat(b, p);
            Ordinal mul_mex = mex(mex_set(oa, ob, ctx), p);
            Ordinal prod = element_to_ordinal(mul(els[a], els[b], ctx), p);
            if (prod < mul_mex)
                report.violations.push_back(
                    "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    ": product below its mex bound");
            else if (prod == mul_mex)
                ++report.mul_equal;
        }
    return report;
}

} // namespace onp
