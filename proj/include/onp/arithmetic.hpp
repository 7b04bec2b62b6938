#pragma once
// Field arithmetic. Addition is digit-wise mod p with no carrying, so on
// elements it is a plain merge of term maps. Multiplication is bilinear over
// monomial products: exponents add, and whenever a generator's exponent
// reaches its prime u the power chi_{u^n}^u is rewritten by the reduction
// rules (alpha_u for n = 1, the chi_4 square exception when p = 3 mod 4, the
// drop to chi_{u^(n-1)} otherwise, and the Artin-Schreier-style rule at
// u = p). Powers use the characteristic: raising to p is additive, so a^N is
// assembled from Frobenius iterates following the base-p digits of N.
//
// Hot loops run on an interned form (monomial id, coefficient) with memoized
// pairwise monomial products; the public API stays on plain Elements.
//
// This header and structure.hpp are mutually recursive (mul needs alpha_u,
// alpha_u is found with mul); including either one provides both.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "onp/context.hpp"
#include "onp/factor.hpp"

namespace onp {

// Defined with the structure routines; multiplication needs it to rewrite
// chi_u^u. The record lives in the Context's cache.
const AlphaRecord& alpha_u(std::uint64_t u, Context& ctx);

const Element& reduce_generator_power(GeneratorId g, Context& ctx);

// --- addition ---------------------------------------------------------------

inline Element add(const Element& a, const Element& b, Context& ctx) {
    Element out = a;
    for (const auto& [m, c] : b.terms) {
        auto it = out.terms.find(m);
        if (it == out.terms.end()) {
            out.terms.emplace(m, c);
        } else {
            unsigned s = (it->second + c) % ctx.p();
            if (s == 0) out.terms.erase(it);
            else it->second = s;
        }
    }
    return out;
}

inline Element negate(const Element& a, Context& ctx) {
    Element out;
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, ctx.p() - c);
    return out;
}

inline Element sub(const Element& a, const Element& b, Context& ctx) {
    return add(a, negate(b, ctx), ctx);
}

// --- interned engine ---------------------------------------------------------

namespace detail {

inline IElem to_internal(const Element& e, Context& ctx) {
    IElem out;
    out.reserve(e.terms.size());
    for (const auto& [m, c] : e.terms)
        out.emplace_back(ctx.intern(m), static_cast<std::uint32_t>(c));
    std::sort(out.begin(), out.end());
    return out;
}

inline Element to_element(const IElem& v, Context& ctx) {
    Element out;
    for (const auto& [id, c] : v)
        out.terms.emplace(ctx.monomial_at(id), static_cast<unsigned>(c));
    return out;
}

inline IElem ione(Context& ctx) { return {{ctx.intern(Monomial{}), 1u}}; }

IElem imul(const IElem& a, const IElem& b, Context& ctx);

// Product of two interned monomials as an element. Exponents add; if any
// generator's exponent reaches u, one factor of chi^u is split off and
// rewritten, and the multiplication recurses until everything is reduced.
inline IElem compute_pair(std::uint32_t ia, std::uint32_t ib, Context& ctx) {
    Monomial merged = ctx.monomial_at(ia);
    for (const auto& [g, e] : ctx.monomial_at(ib).exps)
        merged.exps[g] += e;

    // reduce the largest overflowing generator first
    GeneratorId over{0, 0};
    for (const auto& [g, e] : merged.exps)
        if (e >= g.u) over = g; // map is ascending; the last hit is the largest
    if (over.u == 0)
        return {{ctx.intern(merged), 1u}};

    auto it = merged.exps.find(over);
    it->second -= over.u;
    if (it->second == 0) merged.exps.erase(it);
    IElem rest{{ctx.intern(merged), 1u}};
    return imul(rest, to_internal(reduce_generator_power(over, ctx), ctx), ctx);
}

inline const IElem& pair_product(std::uint32_t ia, std::uint32_t ib, Context& ctx) {
    if (ia > ib) std::swap(ia, ib);
    std::uint64_t key = (static_cast<std::uint64_t>(ia) << 32) | ib;
    if (auto it = ctx.pair_cache.find(key); it != ctx.pair_cache.end())
        return it->second;
    IElem result = compute_pair(ia, ib, ctx);
    if (ctx.pair_cache.size() < ctx.config().pair_cache_cap)
        return ctx.pair_cache.emplace(key, std::move(result)).first->second;
    static thread_local IElem spill; // cache full: hand back a transient
    spill = std::move(result);
    return spill;
}

inline IElem imul(const IElem& a, const IElem& b, Context& ctx) {
    if (a.empty() || b.empty()) return {};
    const std::uint64_t p = ctx.p();

    if (a.size() * b.size() <= 32) {
        // small case: accumulate straight into a sorted vector
        IElem out;
        for (const auto& [ia, ca] : a)
            for (const auto& [ib, cb] : b) {
                std::uint64_t c = static_cast<std::uint64_t>(ca) * cb % p;
                if (c == 0) continue;
                const IElem& prod = pair_product(ia, ib, ctx);
                for (const auto& [id, pc] : prod) {
                    auto pos = std::lower_bound(out.begin(), out.end(), id,
                        [](const auto& entry, std::uint32_t v) { return entry.first < v; });
                    std::uint64_t add = c * pc % p;
                    if (pos != out.end() && pos->first == id) {
                        pos->second = static_cast<std::uint32_t>((pos->second + add) % p);
                    } else {
                        out.insert(pos, {id, static_cast<std::uint32_t>(add)});
                    }
                }
            }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& e) { return e.second == 0; }),
                  out.end());
        return out;
    }

    // dense accumulator over interned ids; ~0 marks "not seen yet" so a
    // coefficient that wraps to zero mod p still counts as touched once
    constexpr std::uint64_t kNotSeen = ~0ull;
    std::vector<std::uint64_t> acc(ctx.interned_count(), kNotSeen);
    std::vector<std::uint32_t> touched;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            std::uint64_t c = static_cast<std::uint64_t>(ca) * cb % p;
            if (c == 0) continue;
            const IElem& prod = pair_product(ia, ib, ctx);
            for (const auto& [id, pc] : prod) {
                if (id >= acc.size()) acc.resize(ctx.interned_count(), kNotSeen);
                std::uint64_t v = c * pc % p;
                if (acc[id] == kNotSeen) {
                    acc[id] = v;
                    touched.push_back(id);
                } else {
                    acc[id] = (acc[id] + v) % p;
                }
            }
        }
    std::sort(touched.begin(), touched.end());
    IElem out;
    out.reserve(touched.size());
    for (std::uint32_t id : touched)
        if (acc[id] != 0)
            out.emplace_back(id, static_cast<std::uint32_t>(acc[id]));
    return out;
}

// monomial^p, memoized; p is small so plain square-and-multiply is fine here
inline const IElem& frob_monomial(std::uint32_t id, Context& ctx) {
    if (auto it = ctx.frob_cache.find(id); it != ctx.frob_cache.end())
        return it->second;
    IElem base{{id, 1u}};
    IElem acc = ione(ctx);
    unsigned e = ctx.p();
    while (e) {
        if (e & 1) acc = imul(acc, base, ctx);
        e >>= 1;
        if (e) base = imul(base, base, ctx);
    }
    return ctx.frob_cache.emplace(id, std::move(acc)).first->second;
}

// x -> x^p, additive in characteristic p: apply to each monomial and merge.
inline IElem ifrob(const IElem& a, Context& ctx) {
    const std::uint64_t p = ctx.p();
    constexpr std::uint64_t kNotSeen = ~0ull;
    std::vector<std::uint64_t> acc(ctx.interned_count(), kNotSeen);
    std::vector<std::uint32_t> touched;
    for (const auto& [id, c] : a) {
        const IElem& fm = frob_monomial(id, ctx);
        for (const auto& [fid, fc] : fm) {
            if (fid >= acc.size()) acc.resize(ctx.interned_count(), kNotSeen);
            std::uint64_t v = static_cast<std::uint64_t>(c) * fc % p;
            if (acc[fid] == kNotSeen) {
                acc[fid] = v;
                touched.push_back(fid);
            } else {
                acc[fid] = (acc[fid] + v) % p;
            }
        }
    }
    std::sort(touched.begin(), touched.end());
    IElem out;
    out.reserve(touched.size());
    for (std::uint32_t id : touched)
        if (acc[id] != 0)
            out.emplace_back(id, static_cast<std::uint32_t>(acc[id]));
    return out;
}

// x^e for machine e by squaring.
inline IElem ipow_small(const IElem& x, std::uint64_t e, Context& ctx) {
    IElem acc = ione(ctx), base = x;
    while (e) {
        if (e & 1) acc = imul(acc, base, ctx);
        e >>= 1;
        if (e) base = imul(base, base, ctx);
    }
    return acc;
}

// a^N via the base-p digits of N: a^N = prod (a^(p^i))^(d_i), with the
// Frobenius chain supplying the a^(p^i).
inline IElem ipow(const IElem& a, BigNat n, Context& ctx) {
    if (n == 0) return ione(ctx);
    if (a.empty()) return {};
    std::vector<unsigned> digits;
    while (n > 0) {
        digits.push_back(static_cast<unsigned>(n % ctx.p()));
        n /= ctx.p();
    }
    IElem result = ione(ctx);
    IElem chain = a;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 1) result = imul(result, chain, ctx);
        else if (digits[i] > 1) result = imul(result, ipow_small(chain, digits[i], ctx), ctx);
        if (i + 1 < digits.size()) chain = ifrob(chain, ctx);
    }
    return result;
}

} // namespace detail

// --- multiplication and powers ------------------------------------------------

inline Element mul(const Element& a, const Element& b, Context& ctx) {
    return detail::to_element(
        detail::imul(detail::to_internal(a, ctx), detail::to_internal(b, ctx), ctx), ctx);
}

inline Element pow(const Element& a, const BigNat& n, Context& ctx) {
    return detail::to_element(detail::ipow(detail::to_internal(a, ctx), n, ctx), ctx);
}

inline Element frobenius(const Element& a, Context& ctx) {
    return detail::to_element(detail::ifrob(detail::to_internal(a, ctx), ctx), ctx);
}

// Smallest m >= 1 with a^(p^m) == a, i.e. the degree of the subfield F_{p^m}
// the element generates.
inline std::uint64_t degree(const Element& a, Context& ctx) {
    if (auto it = ctx.degree_cache.find(a); it != ctx.degree_cache.end())
        return it->second;
    detail::IElem start = detail::to_internal(a, ctx);
    detail::IElem x = detail::ifrob(start, ctx);
    std::uint64_t m = 1;
    while (x != start) {
        if (++m > ctx.config().degree_iter_cap)
            throw resource_error("degree: Frobenius iteration cap exceeded");
        x = detail::ifrob(x, ctx);
    }
    ctx.degree_cache.emplace(a, m);
    return m;
}

// chi_{u^n}^u, memoized. Dispatch: the u = p tower rule first (its n = 1 case
// is chi_p + 1), then alpha_u for first powers of other primes, then the
// p = 3 mod 4 exception for chi_4, then the plain drop to chi_{u^(n-1)}.
inline const Element& reduce_generator_power(GeneratorId g, Context& ctx) {
    if (auto it = ctx.reduce_cache.find(g); it != ctx.reduce_cache.end())
        return it->second;
    Element result;
    if (g.u == ctx.p()) {
        if (g.n == 1) {
            result = add(Element::from_monomial(Monomial::generator(g.u, 1)), Element::one(), ctx);
        } else {
            Element prod = Element::one();
            for (unsigned k = 1; k < g.n; ++k)
                prod = mul(prod,
                           pow(Element::from_monomial(Monomial::generator(g.u, k)),
                               BigNat(ctx.p() - 1), ctx),
                           ctx);
            result = add(Element::from_monomial(Monomial::generator(g.u, g.n)), prod, ctx);
        }
    } else if (g.n == 1) {
        result = alpha_u(g.u, ctx).alpha;
    } else if (g.u == 2 && g.n == 2 && ctx.p() % 4 == 3) {
        result = add(Element::from_monomial(Monomial::generator(2, 1)), Element::one(), ctx);
    } else {
        result = Element::from_monomial(Monomial::generator(g.u, g.n - 1));
    }
    return ctx.reduce_cache.emplace(g, std::move(result)).first->second;
}

// --- multiplicative diagnostics ------------------------------------------------

// Multiplicative order: factor p^degree - 1 through the cyclotomic split and
// peel off prime factors while the power still fixes 1.
inline BigNat ord(const Element& a, Context& ctx) {
    if (a.is_zero()) throw std::domain_error("ord: zero has no multiplicative order");
    std::uint64_t d = degree(a, ctx);
    BigNat n = bignat_pow(BigNat(ctx.p()), d) - 1;
    auto factors = factor_pd_minus_1(BigNat(ctx.p()), d,
                                     ctx.config().factor_trial_bound,
                                     ctx.config().factor_rho_iter_cap);
    detail::IElem ia = detail::to_internal(a, ctx);
    detail::IElem one = detail::ione(ctx);
    for (const auto& [q, mult] : factors) {
        for (unsigned i = 0; i < mult; ++i) {
            BigNat candidate = n / q;
            if (detail::ipow(ia, candidate, ctx) == one) n = candidate;
            else break;
        }
    }
    return n;
}

inline Element inverse(const Element& a, Context& ctx) {
    if (a.is_zero()) throw std::domain_error("inverse: zero is not invertible");
    BigNat n = bignat_pow(BigNat(ctx.p()), degree(a, ctx)) - 2;
    return pow(a, n, ctx);
}

} // namespace onp

#include "onp/structure.hpp"
