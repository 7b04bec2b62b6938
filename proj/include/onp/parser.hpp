#pragma once
// Expression grammar and the two printers.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" atom)?
//   atom   := NAT | "w" | "chi" "(" NAT ")" | "(" expr ")" | "[" expr "]"
//
// Outside brackets the operators are field operations on elements ("-" adds
// the additive inverse, "^" needs a natural right side). Inside "[...]" the
// same grammar is read as ordinal arithmetic on Cantor normal forms, with
// "-" as left subtraction. chi(r) denotes the field chi_r in both modes.
//
// Formatting emits either the Cantor normal form ("w^3+4") or the base-p
// expansion ("3^(w*3)+3"); both render back to the same value when parsed in
// ordinal-literal mode.

#include <cctype>
#include <string>
#include <string_view>
#include <variant>

#include "onp/cnf.hpp"
#include "onp/structure.hpp"

namespace onp {

enum class ParseMode { field, ordinal_literal };
enum class Style { cnf, p_expansion };

// --- printing ---------------------------------------------------------------

// "w^2*3+w+4" — CNF of a value below w^w, no outer parentheses.
inline std::string format_exp_ordinal(const ExpOrdinal& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : e.terms()) { // descending
        if (!first) out += "+";
        first = false;
        if (k == 0) { out += c.str(); continue; }
        out += k == 1 ? "w" : "w^" + std::to_string(k);
        if (c != 1) out += "*" + c.str();
    }
    return out;
}

// Whether format_exp_ordinal(e) is a grammar atom (a NAT or a bare "w"), so
// it can follow "^" without parentheses.
inline bool exp_ordinal_is_atom(const ExpOrdinal& e) {
    if (e.is_finite()) return true;
    return e.terms().size() == 1 && e.terms().begin()->first == 1 &&
           e.terms().begin()->second == 1;
}

inline std::string format_cnf(const Cnf& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, m] : c.terms()) { // descending
        if (!first) out += "+";
        first = false;
        if (e.is_zero()) { out += m.str(); continue; }
        if (e == ExpOrdinal::from_nat(1)) out += "w";
        else if (exp_ordinal_is_atom(e)) out += "w^" + format_exp_ordinal(e);
        else out += "w^(" + format_exp_ordinal(e) + ")";
        if (m != 1) out += "*" + m.str();
    }
    return out;
}

inline std::string format_p_expansion(const Ordinal& o, unsigned p) {
    if (o.is_zero()) return "0";
    const std::string base = std::to_string(p);
    std::string out;
    bool first = true;
    for (const auto& [delta, a] : o.digits()) { // descending
        if (!first) out += "+";
        first = false;
        if (delta.is_zero()) { out += std::to_string(a); continue; }
        if (delta == ExpOrdinal::from_nat(1)) out += base;
        else if (exp_ordinal_is_atom(delta)) out += base + "^" + format_exp_ordinal(delta);
        else out += base + "^(" + format_exp_ordinal(delta) + ")";
        if (a != 1) out += "*" + std::to_string(a);
    }
    return out;
}

inline std::string format(const Ordinal& o, Style style, unsigned p) {
    return style == Style::cnf ? format_cnf(cnf_from_ordinal(o, p))
                               : format_p_expansion(o, p);
}

// --- parsing ----------------------------------------------------------------

namespace detail {

struct ExprParser {
    std::string_view src;
    std::size_t pos = 0;
    Context& ctx;

    ExprParser(std::string_view s, Context& c) : src(s), ctx(c) {}

    using Value = std::variant<Element, Cnf>;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " (at offset " + std::to_string(pos) + ")");
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    BigNat parse_nat() {
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected a number");
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        return BigNat(std::string(src.substr(start, pos - start)));
    }

    std::string parse_word() {
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        return std::string(src.substr(start, pos - start));
    }

    Value make_value(ParseMode mode, const Element& e) const {
        if (mode == ParseMode::field) return e;
        return cnf_from_ordinal(element_to_ordinal(e, ctx.p()), ctx.p());
    }

    Value parse_atom(ParseMode mode) {
        skip_ws();
        if (pos >= src.size()) fail("expected a value");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigNat n = parse_nat();
            if (mode == ParseMode::field)
                return Value(ordinal_to_element(Ordinal::from_nat(n, ctx.p()), ctx.p()));
            return Value(Cnf::from_nat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = parse_word();
            if (word == "w") {
                if (mode == ParseMode::field)
                    return make_value(mode, ordinal_to_element(
                        Ordinal::group(ExpOrdinal::omega_power(1)), ctx.p()));
                return Value(Cnf::omega_power(ExpOrdinal::from_nat(1)));
            }
            if (word == "chi") {
                expect('(');
                BigNat h = parse_nat();
                expect(')');
                if (h < 1) fail("chi: index must be at least 1");
                if (h > 1'000'000'000)
                    throw resource_error("chi: index too large");
                return make_value(mode, chi_h(h.convert_to<std::uint64_t>(), ctx).first);
            }
            fail("unknown name '" + word + "'");
        }
        if (c == '(') {
            ++pos;
            Value v = parse_expr(mode);
            expect(')');
            return v;
        }
        if (c == '[') {
            ++pos;
            Value v = parse_expr(ParseMode::ordinal_literal);
            expect(']');
            const Cnf& cn = std::get<Cnf>(v);
            if (mode == ParseMode::field)
                return Value(ordinal_to_element(ordinal_from_cnf(cn, ctx.p()), ctx.p()));
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Value parse_factor(ParseMode mode) {
        Value v = parse_atom(mode);
        if (!consume('^')) return v;
        Value rhs = parse_atom(mode);
        if (mode == ParseMode::field) {
            // the exponent of a field power must come out a natural number
            Ordinal r = element_to_ordinal(std::get<Element>(rhs), ctx.p());
            if (!r.is_finite()) fail("field exponent must be a natural number");
            return Value(pow(std::get<Element>(v), r.to_nat(ctx.p()), ctx));
        }
        return Value(std::get<Cnf>(v).pow(std::get<Cnf>(rhs),
                                          ctx.config().cnf_finite_exp_cap,
                                          ctx.config().cnf_term_cap));
    }

    Value parse_term(ParseMode mode) {
        Value v = parse_factor(mode);
        while (consume('*')) {
            Value rhs = parse_factor(mode);
            if (mode == ParseMode::field)
                v = Value(mul(std::get<Element>(v), std::get<Element>(rhs), ctx));
            else
                v = Value(std::get<Cnf>(v).times(std::get<Cnf>(rhs)));
        }
        return v;
    }

    Value parse_expr(ParseMode mode) {
        Value v = parse_term(mode);
        for (;;) {
            if (consume('+')) {
                Value rhs = parse_term(mode);
                if (mode == ParseMode::field)
                    v = Value(add(std::get<Element>(v), std::get<Element>(rhs), ctx));
                else
                    v = Value(std::get<Cnf>(v).plus(std::get<Cnf>(rhs)));
            } else if (consume('-')) {
                Value rhs = parse_term(mode);
                if (mode == ParseMode::field) {
                    v = Value(sub(std::get<Element>(v), std::get<Element>(rhs), ctx));
                } else {
                    try {
                        v = Value(std::get<Cnf>(v).left_minus(std::get<Cnf>(rhs)));
                    } catch (const std::domain_error& e) {
                        fail(e.what());
                    }
                }
            } else {
                return v;
            }
        }
    }
};

} // namespace detail

inline Ordinal parse(std::string_view text, ParseMode mode, Context& ctx) {
    detail::ExprParser parser(text, ctx);
    detail::ExprParser::Value v = parser.parse_expr(mode);
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("unexpected trailing input");
    if (mode == ParseMode::field)
        return element_to_ordinal(std::get<Element>(v), ctx.p());
    return ordinal_from_cnf(std::get<Cnf>(v), ctx.p());
}

} // namespace onp
