#pragma once
// Context: the per-base workspace. It pins the characteristic p, carries the
// resource caps, and owns every memo the engine builds up (generator-power
// reductions, alpha records, chi assemblies, degrees, monomial products,
// Frobenius images). A Context is confined to one thread; independent
// Contexts never share state, so parallel callers simply use one each.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "onp/element.hpp"
#include "onp/errors.hpp"
#include "onp/primes.hpp"

namespace onp {

struct Config {
    std::uint64_t alpha_scan_cap = 10'000;       // candidates tried per alpha_u
    std::uint64_t degree_iter_cap = 100'000;     // Frobenius iterations per degree()
    std::uint64_t genetic_cap = 256;             // default bound for the genetic tables
    std::uint64_t tower_cap = 10'000;            // dense tower cells per axis
    std::uint64_t factor_trial_bound = 1'000'000;
    std::uint64_t factor_rho_iter_cap = 50'000'000;
    std::uint64_t pair_cache_cap = 4'000'000;    // memoized monomial products
    std::uint64_t cnf_finite_exp_cap = 1'000'000;
    std::uint64_t cnf_term_cap = 100'000;
};

// Solved excess for one prime u: alpha_u = [chi_{f} + m] with f = f(u),
// chi_f assembled from the prime powers in Q, and m = m1 + excess where m1 is
// the natural tail of chi_f's expansion.
struct AlphaRecord {
    std::uint64_t u = 0;
    std::uint64_t f = 0;
    std::vector<std::uint64_t> Q; // in assembly order, matching chi_h
    std::uint64_t excess = 0;
    Element alpha;
};

namespace detail {
// Engine-internal element form: (interned monomial id, coefficient mod p),
// sorted by id. Conversions to and from the public Element live with the
// arithmetic routines.
using IElem = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
} // namespace detail

class Context {
public:
    explicit Context(unsigned p, Config config = Config{})
        : p_(p), config_(config) {
        if (p < 2 || !is_prime_u64(p))
            throw std::invalid_argument("Context: characteristic must be a prime");
        if (p >= (1u << 31))
            throw std::invalid_argument("Context: characteristic too large");
    }

    unsigned p() const { return p_; }
    Config& config() { return config_; }
    const Config& config() const { return config_; }

    // --- monomial interning -------------------------------------------------
    std::uint32_t intern(const Monomial& m) {
        auto it = mono_ids_.find(m);
        if (it != mono_ids_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(monomials_.size());
        monomials_.push_back(m);
        mono_ids_.emplace(m, id);
        return id;
    }
    const Monomial& monomial_at(std::uint32_t id) const { return monomials_[id]; }
    std::size_t interned_count() const { return monomials_.size(); }

    // --- memos shared by the engine (confined with the Context) ------------
    std::unordered_map<std::uint64_t, detail::IElem> pair_cache; // lo<<32|hi -> product
    std::unordered_map<std::uint32_t, detail::IElem> frob_cache; // id -> monomial^p
    std::map<GeneratorId, Element> reduce_cache;                 // chi_{u^n}^u
    std::map<std::uint64_t, AlphaRecord> alpha_cache;            // u -> record
    std::map<std::uint64_t, std::pair<Element, std::vector<std::uint64_t>>> chi_cache; // h -> (chi_h, Q)
    std::map<Element, std::uint64_t> degree_cache;

private:
    unsigned p_;
    Config config_;
    std::map<Monomial, std::uint32_t> mono_ids_;
    std::vector<Monomial> monomials_;
};

} // namespace onp
