// Expression grammar and printers: precedence, the two atom namespaces
// (field mode vs bracketed ordinal literals), chi() lookups, typed error
// classes, and the format -> reparse round trip for both output styles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "onp/onp.hpp"

using namespace onp;

namespace {

Ordinal feval(const std::string& s, Context& ctx) {
    return parse(s, ParseMode::field, ctx);
}

Ordinal oeval(const std::string& s, Context& ctx) {
    return parse(s, ParseMode::ordinal_literal, ctx);
}

Ordinal nat(std::uint64_t v, unsigned p) { return Ordinal::from_nat(v, p); }

} // namespace

TEST_CASE("precedence: ^ binds over * binds over + and -") {
    Context c7(7);
    CHECK(feval("2+3*4", c7) == nat(0, 7));    // 2 + 12 mod 7
    CHECK(feval("(2+3)*4", c7) == nat(6, 7));  // 5 * 4 mod 7
    CHECK(feval("2*3^2", c7) == nat(4, 7));    // 2 * 2
    CHECK(feval("(2*3)^2", c7) == nat(1, 7));  // 6^2 = 36 mod 7
    CHECK(feval("2-5", c7) == nat(4, 7));
    CHECK(feval("2-5+5", c7) == nat(2, 7));
    CHECK(feval(" 2 + 3 * 4 ", c7) == nat(0, 7));

    // Exponentiation does not chain: a second ^ is trailing garbage.
    CHECK_THROWS_AS(feval("2^3^2", c7), parse_error);
}

TEST_CASE("field atoms") {
    Context c3(3);
    CHECK(feval("0", c3).is_zero());
    CHECK(feval("22", c3) == nat(22, 3));
    CHECK(feval("w", c3) == Ordinal::group(ExpOrdinal::omega_power(1)));
    CHECK(feval("w-w", c3).is_zero());
    CHECK(feval("w^3", c3) == oeval("w+1", c3));      // chi_3 cubed
    Context c2(2);
    CHECK(feval("w^3", c2) == nat(2, 2));
    CHECK(feval("4*4+3", c2) == nat(5, 2));
}

TEST_CASE("chi atoms name the subfields") {
    Context c3(3);
    CHECK(feval("chi(1)", c3).is_zero());
    CHECK(feval("chi(2)", c3) == nat(3, 3));
    CHECK(feval("chi(4)", c3) == nat(9, 3));
    CHECK(feval("chi(9)", c3) == Ordinal::group(ExpOrdinal::omega_power(1, 3)));
    CHECK(feval("chi(8)", c3) == nat(81, 3));
    CHECK(feval("chi(6)-chi(3)", c3) == feval("chi(2)", c3));

    Context c11(11);
    Ordinal chi22 = feval("chi(22)", c11);
    CHECK(format(chi22, Style::cnf, 11) == "w^(w^3)+11");
    CHECK(format(chi22, Style::p_expansion, 11) == "11^(w^4)+11");
}

TEST_CASE("bracketed ordinal arithmetic") {
    Context c3(3);
    CHECK(oeval("2^10", c3) == nat(1024, 3));
    CHECK(oeval("w+1", c3) == feval("[w+1]", c3));
    CHECK(oeval("(w+3)-(w+1)", c3) == nat(2, 3));
    CHECK(oeval("w-1", c3) == Ordinal::group(ExpOrdinal::omega_power(1)));
    CHECK(oeval("w*2+5", c3).digit_at(ExpOrdinal::omega_power(1)) == 2);

    // Ordinal vs field semantics of the same text.
    CHECK(oeval("w^3", c3) == Ordinal::group(ExpOrdinal::omega_power(1, 3)));
    CHECK(feval("w^3", c3) != oeval("w^3", c3));

    // A bracketed literal used as a field operand: (w^w)^5 = 10.
    CHECK(feval("[w^w]^5", c3) == nat(10, 3));
    CHECK(feval("[w^3]^3", c3) == oeval("w^3+w^2", c3));
}

TEST_CASE("typed parse failures") {
    Context c3(3);
    CHECK_THROWS_AS(feval("", c3), parse_error);
    CHECK_THROWS_AS(feval("2+", c3), parse_error);
    CHECK_THROWS_AS(feval(")", c3), parse_error);
    CHECK_THROWS_AS(feval("2 3", c3), parse_error);
    CHECK_THROWS_AS(feval("foo", c3), parse_error);
    CHECK_THROWS_AS(feval("chi(4", c3), parse_error);
    CHECK_THROWS_AS(feval("chi(0)", c3), parse_error);
    CHECK_THROWS_AS(feval("[5-w]", c3), parse_error);   // no left difference
    CHECK_THROWS_AS(feval("w^w", c3), parse_error);     // infinite field exponent
    CHECK_THROWS_AS(feval("2*", c3), parse_error);
    CHECK_THROWS_AS(feval("(2", c3), parse_error);

    // Beyond the representable segment or configured limits.
    CHECK_THROWS_AS(oeval("w^(w^w)", c3), out_of_range_error);
    CHECK_THROWS_AS(feval("chi(2000000000)", c3), resource_error);
}

TEST_CASE("frozen format strings") {
    Context c3(3);
    CHECK(format(nat(0, 3), Style::cnf, 3) == "0");
    CHECK(format(nat(0, 3), Style::p_expansion, 3) == "0");
    CHECK(format(nat(22, 3), Style::cnf, 3) == "22");
    CHECK(format(nat(22, 3), Style::p_expansion, 3) == "3^2*2+3+1");

    Ordinal w = Ordinal::group(ExpOrdinal::omega_power(1));
    CHECK(format(w, Style::cnf, 3) == "w");
    CHECK(format(w, Style::p_expansion, 3) == "3^w");

    Ordinal chi9 = Ordinal::group(ExpOrdinal::omega_power(1, 3));
    CHECK(format(chi9, Style::cnf, 3) == "w^3");
    CHECK(format(chi9, Style::p_expansion, 3) == "3^(w*3)");

    Ordinal mixed = chi9;
    mixed.set_digit(ExpOrdinal::omega_power(1), 2);
    mixed.set_digit(ExpOrdinal::from_nat(0), 1);
    CHECK(format(mixed, Style::cnf, 3) == "w^3+w*2+1");
    CHECK(format(mixed, Style::p_expansion, 3) == "3^(w*3)+3^w*2+1");

    Ordinal ww = Ordinal::group(ExpOrdinal::omega_power(2));
    CHECK(format(ww, Style::cnf, 3) == "w^w");
    CHECK(format(ww, Style::p_expansion, 3) == "3^(w^2)");
}

TEST_CASE("format then reparse is the identity, both styles") {
    std::mt19937_64 rng(20260814);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Context ctx(p);
        std::vector<Ordinal> corpus;
        for (std::uint64_t v = 0; v < 12; ++v) corpus.push_back(nat(v, p));
        corpus.push_back(nat(p * p * p + 1, p));
        for (std::uint64_t h = 1; h <= 16; ++h) {
            Element e = chi_h(h, ctx).first;
            corpus.push_back(element_to_ordinal(e, p));
        }
        // Random digit maps over exponents up to w^3 * 4 + w^2 * 4 + ...
        for (int i = 0; i < 40; ++i) {
            Ordinal o;
            std::uniform_int_distribution<int> nterms(0, 3);
            std::uniform_int_distribution<std::uint64_t> kdist(0, 3), cdist(0, 4);
            std::uniform_int_distribution<unsigned> digit(1, p - 1);
            int terms = nterms(rng);
            for (int t = 0; t < terms; ++t) {
                ExpOrdinal delta;
                for (std::uint64_t k = 0; k <= kdist(rng); ++k)
                    delta.set_count(k, cdist(rng));
                o.set_digit(delta, digit(rng));
            }
            corpus.push_back(o);
        }
        for (const Ordinal& o : corpus) {
            std::string cnf = format(o, Style::cnf, p);
            std::string pexp = format(o, Style::p_expansion, p);
            CAPTURE(p);
            CAPTURE(cnf);
            CAPTURE(pexp);
            CHECK(parse(cnf, ParseMode::ordinal_literal, ctx) == o);
            CHECK(parse(pexp, ParseMode::ordinal_literal, ctx) == o);
        }
    }
}
