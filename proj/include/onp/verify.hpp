#pragma once
// Verification suites behind the CLI `verify` command. Each suite returns a
// SuiteResult; gating suites decide the process exit code, the conjecture
// sweep only reports.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "onp/oracle.hpp"
#include "onp/parser.hpp"

namespace onp {

struct SuiteResult {
    std::string name;
    bool gating = true;
    bool passed = false;
    std::uint64_t checks = 0;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<std::string> failures; // capped; representative only
};

namespace detail {
constexpr std::size_t kMaxFailures = 8;

inline void record_failure(SuiteResult& r, std::string msg) {
    if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(msg));
}
} // namespace detail

inline std::string suite_text(const SuiteResult& r) {
    std::ostringstream os;
    os << "suite " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks
       << " checks";
    if (!r.gating) os << ", report-only";
    os << ")\n";
    for (const auto& [k, v] : r.stats) os << "  " << k << ": " << v << "\n";
    for (const auto& f : r.failures) os << "  failure: " << f << "\n";
    return os.str();
}

inline nlohmann::json suite_json(const SuiteResult& r) {
    nlohmann::json stats = nlohmann::json::object();
    for (const auto& [k, v] : r.stats) stats[k] = v;
    return nlohmann::json{{"suite", r.name},     {"passed", r.passed},
                          {"gating", r.gating},  {"checks", r.checks},
                          {"stats", stats},      {"failures", r.failures}};
}

// --- tower equivalence ----------------------------------------------------------

// Exhaustive engine-vs-tower comparison of both operation tables.
inline SuiteResult verify_tower_equivalence(Context& ctx, std::size_t size = 0) {
    const unsigned p = ctx.p();
    if (size == 0) size = (p <= 3) ? std::size_t(p) * p * p * p : std::size_t(p) * p;
    SuiteResult r{.name = "tower-equivalence", .gating = true, .passed = true};
    TowerField tower = build_tower(p, size, ctx.config().tower_cap);

    std::vector<Element> els(size);
    for (std::size_t i = 0; i < size; ++i)
        els[i] = ordinal_to_element(Ordinal::from_nat(i, p), p);
    auto index_of = [&](const Element& e) {
        return element_to_ordinal(e, p).to_nat(p).convert_to<std::size_t>();
    };

    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) {
            r.checks += 2;
            std::size_t sum = index_of(add(els[a], els[b], ctx));
            if (sum != tower.add(a, b)) {
                r.passed = false;
                detail::record_failure(r, "add(" + std::to_string(a) + "," + std::to_string(b) +
                                              "): engine " + std::to_string(sum) + " tower " +
                                              std::to_string(tower.add(a, b)));
            }
            std::size_t prod = index_of(mul(els[a], els[b], ctx));
            if (prod != tower.mul(a, b)) {
                r.passed = false;
                detail::record_failure(r, "mul(" + std::to_string(a) + "," + std::to_string(b) +
                                              "): engine " + std::to_string(prod) + " tower " +
                                              std::to_string(tower.mul(a, b)));
            }
        }
    r.stats.emplace_back("field size", std::to_string(size));
    std::string steps;
    for (const auto& h : tower.step_h) {
        steps += steps.empty() ? "" : " ";
        steps += "x^" + std::to_string(h.size()) + "-h,h=(";
        for (std::size_t i = 0; i < h.size(); ++i)
            steps += (i ? "," : "") + std::to_string(h[i]);
        steps += ")";
    }
    r.stats.emplace_back("extension steps", steps.empty() ? "none" : steps);
    return r;
}

// --- genetic equivalence (p = 2) --------------------------------------------------

inline SuiteResult verify_genetic(Context& ctx, std::size_t cap = 256) {
    SuiteResult r{.name = "genetic", .gating = true, .passed = true};
    if (ctx.p() != 2) throw std::invalid_argument("genetic suite requires p = 2");
    GeneticTables t = on2_genetic(cap);

    std::vector<Element> els(cap);
    for (std::size_t i = 0; i < cap; ++i)
        els[i] = ordinal_to_element(Ordinal::from_nat(i, 2), 2);
    auto index_of = [&](const Element& e) {
        return element_to_ordinal(e, 2).to_nat(2).convert_to<std::size_t>();
    };

    for (std::size_t a = 0; a < cap; ++a)
        for (std::size_t b = 0; b < cap; ++b) {
            r.checks += 2;
            std::size_t sum = index_of(add(els[a], els[b], ctx));
            if (sum != t.add(a, b)) {
                r.passed = false;
                detail::record_failure(r, "add(" + std::to_string(a) + "," + std::to_string(b) +
                                              "): engine " + std::to_string(sum) + " genetic " +
                                              std::to_string(t.add(a, b)));
            }
            std::size_t prod = index_of(mul(els[a], els[b], ctx));
            if (prod != t.mul(a, b)) {
                r.passed = false;
                detail::record_failure(r, "mul(" + std::to_string(a) + "," + std::to_string(b) +
                                              "): engine " + std::to_string(prod) + " genetic " +
                                              std::to_string(t.mul(a, b)));
            }
        }
    r.stats.emplace_back("table size", std::to_string(t.size));
    return r;
}

// --- mex lower bounds ------------------------------------------------------------

inline SuiteResult verify_mex_bounds(Context& ctx, std::uint64_t cap = 32) {
    SuiteResult r{.name = "mex-bounds", .gating = true};
    MexReport report = check_lower_bounds(cap, ctx);
    r.checks = 2 * report.pairs;
    r.passed = report.ok();
    for (const auto& v : report.violations) detail::record_failure(r, v);
    r.stats.emplace_back("pairs", std::to_string(report.pairs));
    r.stats.emplace_back("add equality", std::to_string(report.add_equal));
    r.stats.emplace_back("mul equality", std::to_string(report.mul_equal));
    return r;
}

// --- conjecture sweep (report-only) ------------------------------------------------

// Group pairs below cap: both coordinates of the form p^k. The sweep asks
// whether every such pair has the MEX property; counterexamples are reported
// but never gate.
inline SuiteResult verify_conjecture(Context& ctx, std::uint64_t cap = 81) {
    SuiteResult r{.name = "conjecture", .gating = false, .passed = true};
    std::vector<std::uint64_t> groups;
    for (std::uint64_t g = 1; g < cap; g *= ctx.p()) groups.push_back(g);
    for (std::uint64_t a : groups)
        for (std::uint64_t b : groups) {
            ++r.checks;
            Ordinal oa = Ordinal::from_nat(a, ctx.p());
            Ordinal ob = Ordinal::from_nat(b, ctx.p());
            if (!has_mex_property(oa, ob, ctx)) {
                r.passed = false;
                detail::record_failure(r, "group pair (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") lacks the MEX property");
            }
        }
    r.stats.emplace_back("groups", std::to_string(groups.size()));
    return r;
}

// --- addition vs digit oracle -------------------------------------------------------

namespace detail {

// Random ordinal below [p^(w^2)] (value below w^w): digits at positions
// delta = w*c1 + c0 with small c1, c0.
inline Ordinal random_small_ordinal(std::mt19937_64& rng, unsigned p) {
    std::uniform_int_distribution<int> nterms(0, 4), c1d(0, 4), c0d(0, 6);
    std::uniform_int_distribution<unsigned> digit(1, p - 1);
    Ordinal o;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        ExpOrdinal delta = ExpOrdinal::from_nat(c0d(rng));
        int c1 = c1d(rng);
        if (c1 > 0) delta = delta.plus(ExpOrdinal::omega_power(1, c1));
        o.set_digit(delta, digit(rng));
    }
    return o;
}

// Independent addition oracle: digit-wise sum mod p on the expansions.
inline Ordinal digitwise_add(const Ordinal& a, const Ordinal& b, unsigned p) {
    Ordinal out = a;
    for (const auto& [delta, digit] : b.digits())
        out.set_digit(delta, (out.digit_at(delta) + digit) % p);
    return out;
}

} // namespace detail

inline SuiteResult verify_addition_oracle(Context& ctx, std::uint64_t samples = 10'000,
                                          std::uint64_t seed = 1) {
    SuiteResult r{.name = "addition-oracle", .gating = true, .passed = true};
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + ctx.p());
    const unsigned p = ctx.p();
    for (std::uint64_t i = 0; i < samples; ++i) {
        Ordinal a = detail::random_small_ordinal(rng, p);
        Ordinal b = detail::random_small_ordinal(rng, p);
        Ordinal expected = detail::digitwise_add(a, b, p);
        Ordinal got = element_to_ordinal(
            add(ordinal_to_element(a, p), ordinal_to_element(b, p), ctx), p);
        ++r.checks;
        if (!(got == expected)) {
            r.passed = false;
            detail::record_failure(r, format(a, Style::p_expansion, p) + " + " +
                                          format(b, Style::p_expansion, p) + ": engine " +
                                          format(got, Style::p_expansion, p) + " oracle " +
                                          format(expected, Style::p_expansion, p));
        }
    }
    r.stats.emplace_back("samples", std::to_string(samples));
    return r;
}

// --- field axioms (sampled) ----------------------------------------------------------

namespace detail {

// Sample from two pools: finite elements below [p^8] and elements of the
// infinite field below [p^(w*3)].
inline Element random_axiom_element(std::mt19937_64& rng, unsigned p) {
    std::uniform_int_distribution<int> pool(0, 1);
    if (pool(rng) == 0) {
        std::uniform_int_distribution<std::uint64_t> v(0, [&] {
            std::uint64_t n = 1;
            for (int i = 0; i < 8; ++i) n *= p;
            return n - 1;
        }());
        return ordinal_to_element(Ordinal::from_nat(v(rng), p), p);
    }
    std::uniform_int_distribution<int> nterms(0, 3), c1d(0, 2), c0d(0, 7);
    std::uniform_int_distribution<unsigned> digit(1, p - 1);
    Ordinal o;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        ExpOrdinal delta = ExpOrdinal::from_nat(c0d(rng));
        int c1 = c1d(rng);
        if (c1 > 0) delta = delta.plus(ExpOrdinal::omega_power(1, c1));
        o.set_digit(delta, digit(rng));
    }
    return ordinal_to_element(o, p);
}

} // namespace detail

inline SuiteResult verify_axioms(Context& ctx, std::uint64_t triples = 1'000,
                                 std::uint64_t seed = 1) {
    SuiteResult r{.name = "axioms", .gating = true, .passed = true};
    std::mt19937_64 rng(seed * 0xD1B54A32D192ED03ull + ctx.p());
    const unsigned p = ctx.p();
    const Element zero = Element::zero(), one = Element::one();
    auto show = [&](const Element& e) { return format(element_to_ordinal(e, p), Style::cnf, p); };
    auto expect = [&](bool ok, const std::string& what, const Element& a, const Element& b,
                      const Element& c) {
        ++r.checks;
        if (!ok) {
            r.passed = false;
            detail::record_failure(r, what + " on (" + show(a) + ", " + show(b) + ", " + show(c) +
                                          ")");
        }
    };

    for (std::uint64_t i = 0; i < triples; ++i) {
        Element a = detail::random_axiom_element(rng, p);
        Element b = detail::random_axiom_element(rng, p);
        Element c = detail::random_axiom_element(rng, p);

        expect(add(add(a, b, ctx), c, ctx) == add(a, add(b, c, ctx), ctx), "add associativity",
               a, b, c);
        expect(add(a, b, ctx) == add(b, a, ctx), "add commutativity", a, b, c);
        Element ab = mul(a, b, ctx);
        expect(mul(ab, c, ctx) == mul(a, mul(b, c, ctx), ctx), "mul associativity", a, b, c);
        expect(ab == mul(b, a, ctx), "mul commutativity", a, b, c);
        expect(mul(a, add(b, c, ctx), ctx) == add(ab, mul(a, c, ctx), ctx), "distributivity",
               a, b, c);
        expect(add(a, zero, ctx) == a && mul(a, one, ctx) == a, "identities", a, b, c);
        expect(add(a, negate(a, ctx), ctx).is_zero(), "additive inverse", a, b, c);
        if (!a.is_zero()) {
            expect(mul(a, inverse(a, ctx), ctx).is_one(), "multiplicative inverse", a, b, c);
            if (!b.is_zero()) expect(!ab.is_zero(), "no zero divisors", a, b, c);
        }
    }
    r.stats.emplace_back("triples", std::to_string(triples));
    return r;
}

} // namespace onp
