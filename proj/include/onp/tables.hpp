#pragma once
// Table building and serialization: one row per prime u (u != p, u <= umax)
// with the tower data f, Q, excess and both renderings of alpha_u. A JSON
// cache file round-trips the same schema; loading it seeds the context's
// alpha cache so only missing rows get recomputed.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "onp/parser.hpp"
#include "onp/structure.hpp"

namespace onp {

struct TableRow {
    std::uint64_t u = 0;
    std::uint64_t f = 0;
    std::vector<std::uint64_t> Q;
    std::uint64_t excess = 0;
    std::string alpha_cnf;
    std::string alpha_p;
};

struct Tables {
    unsigned p = 0;
    std::vector<TableRow> rows;
};

inline Tables build_tables(Context& ctx, std::uint64_t umax) {
    Tables t;
    t.p = ctx.p();
    for (std::uint64_t u : primes_in(2, umax)) {
        if (u == ctx.p()) continue;
        const AlphaRecord& rec = alpha_u(u, ctx);
        Ordinal value = element_to_ordinal(rec.alpha, ctx.p());
        TableRow row;
        row.u = rec.u;
        row.f = rec.f;
        row.Q = rec.Q;
        row.excess = rec.excess;
        row.alpha_cnf = format(value, Style::cnf, ctx.p());
        row.alpha_p = format(value, Style::p_expansion, ctx.p());
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace detail {
inline std::string join_q(const std::vector<std::uint64_t>& q) {
    if (q.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(q[i]);
    }
    return out;
}
} // namespace detail

inline std::string tables_text(const Tables& t) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"u", "f", "Q", "excess", "alpha(p)", "alpha(cnf)"});
    for (const TableRow& r : t.rows)
        grid.push_back({std::to_string(r.u), std::to_string(r.f), detail::join_q(r.Q),
                        std::to_string(r.excess), r.alpha_p, r.alpha_cnf});
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    os << "p = " << t.p << "\n";
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json tables_json(const Tables& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TableRow& r : t.rows)
        rows.push_back({{"u", r.u},
                        {"f", r.f},
                        {"Q", r.Q},
                        {"excess", r.excess},
                        {"alpha_cnf", r.alpha_cnf},
                        {"alpha_p", r.alpha_p}});
    return nlohmann::json{{"p", t.p}, {"rows", rows}};
}

inline void save_cache(const Tables& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw resource_error("cannot write cache file: " + path);
    out << tables_json(t).dump(2) << "\n";
}

// Seed ctx.alpha_cache from a cache file. Rows that fail the consistency
// checks (or a p mismatch) are skipped; returns how many rows were accepted.
inline std::size_t load_cache(const std::string& path, Context& ctx) {
    std::ifstream in(path);
    if (!in) return 0;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return 0;
    }
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("rows")) return 0;
    if (doc["p"].get<std::uint64_t>() != ctx.p()) return 0;

    std::size_t accepted = 0;
    for (const auto& r : doc["rows"]) {
        try {
            AlphaRecord rec;
            rec.u = r.at("u").get<std::uint64_t>();
            rec.f = r.at("f").get<std::uint64_t>();
            rec.Q = r.at("Q").get<std::vector<std::uint64_t>>();
            rec.excess = r.at("excess").get<std::uint64_t>();
            std::string alpha_p = r.at("alpha_p").get<std::string>();
            if (!is_prime_u64(rec.u) || rec.u == ctx.p()) continue;
            if (rec.f != f_of(rec.u, ctx)) continue; // stale or corrupt
            Ordinal value = parse(alpha_p, ParseMode::ordinal_literal, ctx);
            if (format(value, Style::p_expansion, ctx.p()) != alpha_p) continue;
            rec.alpha = ordinal_to_element(value, ctx.p());
            if (ctx.alpha_cache.emplace(rec.u, std::move(rec)).second) ++accepted;
        } catch (const std::exception&) {
            continue; // malformed row: recompute instead
        }
    }
    return accepted;
}

} // namespace onp
