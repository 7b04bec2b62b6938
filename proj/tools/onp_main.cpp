// onp: exact arithmetic in the characteristic-p ordinal field below the
// first transcendental. Subcommands: eval, tables, verify, repl.
//
// Exit codes: 0 ok; 1 gating verification failure; 2 parse/usage error;
// 3 out-of-range (beyond the supported segment); 4 resource cap.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include <onp/onp.hpp>

#ifdef _WIN32
#include <io.h>
#define ONP_ISATTY _isatty
#define ONP_FILENO _fileno
#else
#include <unistd.h>
#define ONP_ISATTY isatty
#define ONP_FILENO fileno
#endif

namespace {

struct Caps {
    std::uint64_t alpha_scan = 0, degree_iter = 0, tower = 0, genetic = 0, pair_cache = 0,
                  cnf_exp = 0, cnf_terms = 0, factor_rho = 0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--cap-alpha-scan", alpha_scan, "bound on the alpha_u tail scan");
        cmd->add_option("--cap-degree-iter", degree_iter, "bound on degree() iterations");
        cmd->add_option("--cap-tower", tower, "tower oracle size bound (cells per axis)");
        cmd->add_option("--cap-genetic", genetic, "genetic table bound");
        cmd->add_option("--cap-pair-cache", pair_cache, "pair product cache entries");
        cmd->add_option("--cap-cnf-exp", cnf_exp, "finite exponent bound in ordinal pow");
        cmd->add_option("--cap-cnf-terms", cnf_terms, "term count bound in ordinal pow");
        cmd->add_option("--cap-factor-rho", factor_rho, "Pollard rho iteration bound");
    }
    void apply(onp::Context& ctx) const {
        onp::Config& cfg = ctx.config();
        if (alpha_scan) cfg.alpha_scan_cap = alpha_scan;
        if (degree_iter) cfg.degree_iter_cap = degree_iter;
        if (tower) cfg.tower_cap = tower;
        if (genetic) cfg.genetic_cap = genetic;
        if (pair_cache) cfg.pair_cache_cap = pair_cache;
        if (cnf_exp) cfg.cnf_finite_exp_cap = cnf_exp;
        if (cnf_terms) cfg.cnf_term_cap = cnf_terms;
        if (factor_rho) cfg.factor_rho_iter_cap = factor_rho;
    }
};

int run_eval(unsigned p, const Caps& caps, const std::string& expr, const std::string& style,
             const std::string& fmt) {
    onp::Context ctx(p);
    caps.apply(ctx);
    onp::Ordinal value = onp::parse(expr, onp::ParseMode::field, ctx);
    std::string cnf = onp::format(value, onp::Style::cnf, p);
    std::string pexp = onp::format(value, onp::Style::p_expansion, p);
    if (fmt == "json") {
        nlohmann::json out{{"p", p}, {"expr", expr}, {"cnf", cnf}, {"p_expansion", pexp}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (style == "p" ? pexp : cnf) << "\n";
    }
    return 0;
}

int run_tables(unsigned p, const Caps& caps, std::uint64_t umax, const std::string& fmt,
               const std::string& cache) {
    onp::Context ctx(p);
    caps.apply(ctx);
    if (!cache.empty()) onp::load_cache(cache, ctx);
    onp::Tables t = onp::build_tables(ctx, umax);
    if (!cache.empty()) onp::save_cache(t, cache);
    if (fmt == "json")
        std::cout << onp::tables_json(t).dump(2) << "\n";
    else
        std::cout << onp::tables_text(t);
    return 0;
}

int run_verify(unsigned p, const Caps& caps, const std::string& suite, std::uint64_t cap,
               std::uint64_t samples, std::uint64_t seed, std::uint64_t size,
               const std::string& fmt) {
    onp::Context ctx(p);
    caps.apply(ctx);
    onp::SuiteResult result;
    if (suite == "tower-equivalence")
        result = onp::verify_tower_equivalence(ctx, size);
    else if (suite == "mex-bounds")
        result = onp::verify_mex_bounds(ctx, cap ? cap : 32);
    else if (suite == "conjecture")
        result = onp::verify_conjecture(ctx, cap ? cap : 81);
    else if (suite == "addition-oracle")
        result = onp::verify_addition_oracle(ctx, samples ? samples : 10'000, seed);
    else if (suite == "axioms")
        result = onp::verify_axioms(ctx, samples ? samples : 1'000, seed);
    else if (suite == "genetic")
        result = onp::verify_genetic(ctx, cap ? cap : 256);
    else
        throw CLI::ValidationError("unknown suite: " + suite);

    if (fmt == "json")
        std::cout << onp::suite_json(result).dump(2) << "\n";
    else
        std::cout << onp::suite_text(result);
    return (result.gating && !result.passed) ? 1 : 0;
}

int run_repl(unsigned p, const Caps& caps) {
    auto ctx = std::make_unique<onp::Context>(p);
    caps.apply(*ctx);
    const bool tty = ONP_ISATTY(ONP_FILENO(stdin)) != 0;
    std::string line;
    while (true) {
        if (tty) std::cout << "on_" << ctx->p() << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string text = line.substr(b, e - b + 1);
        if (text == ":quit" || text == ":q") break;
        if (text.rfind(":p", 0) == 0) {
            try {
                unsigned q = static_cast<unsigned>(std::stoul(text.substr(2)));
                ctx = std::make_unique<onp::Context>(q);
                caps.apply(*ctx);
            } catch (const std::exception& ex) {
                std::cout << "error: " << ex.what() << "\n";
            }
            continue;
        }
        try {
            onp::Ordinal value = onp::parse(text, onp::ParseMode::field, *ctx);
            std::cout << onp::format(value, onp::Style::cnf, ctx->p()) << "\n";
        } catch (const std::exception& ex) {
            std::cout << "error: " << ex.what() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in the characteristic-p ordinal field "
                 "below the first transcendental"};
    app.require_subcommand(1);

    unsigned p = 2;
    Caps caps;
    std::string expr, style = "cnf", fmt = "text", cache, suite;
    std::uint64_t umax = 43, cap = 0, samples = 0, seed = 1, size = 0;

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("-p,--prime", p, "field characteristic")->required();
    eval->add_option("expr", expr, "expression to evaluate")->required();
    eval->add_option("--style", style, "output style: cnf | p")
        ->check(CLI::IsMember({"cnf", "p"}));
    eval->add_option("--format", fmt, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    caps.add_flags(eval);

    CLI::App* tables = app.add_subcommand("tables", "generate the alpha_u table");
    tables->add_option("-p,--prime", p, "field characteristic")->required();
    tables->add_option("--umax", umax, "largest prime u to include");
    tables->add_option("--format", fmt, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    tables->add_option("--cache", cache, "JSON cache file (read and updated)");
    caps.add_flags(tables);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("-p,--prime", p, "field characteristic")->required();
    verify
        ->add_option("suite", suite,
                     "tower-equivalence | mex-bounds | conjecture | addition-oracle | axioms | "
                     "genetic")
        ->required();
    verify->add_option("--cap", cap, "sweep bound (suite-specific default)");
    verify->add_option("--samples", samples, "sample count for randomized suites");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--size", size, "tower field size (default by p)");
    verify->add_option("--format", fmt, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    caps.add_flags(verify);

    CLI::App* repl = app.add_subcommand("repl", "interactive evaluator");
    repl->add_option("-p,--prime", p, "initial field characteristic");
    caps.add_flags(repl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(p, caps, expr, style, fmt);
        if (tables->parsed()) return run_tables(p, caps, umax, fmt, cache);
        if (verify->parsed()) return run_verify(p, caps, suite, cap, samples, seed, size, fmt);
        if (repl->parsed()) return run_repl(p, caps);
    } catch (const onp::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const onp::out_of_range_error& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 3;
    } catch (const onp::resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
