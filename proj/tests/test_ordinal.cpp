#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <onp/element.hpp>
#include <onp/exp_ordinal.hpp>
#include <onp/ordinal.hpp>

using namespace onp;

static ExpOrdinal W(std::uint64_t k, const BigNat& c = 1) {
    return ExpOrdinal::omega_power(k, c);
}

TEST_CASE("ExpOrdinal construction and accessors") {
    ExpOrdinal z;
    CHECK(z.is_zero());
    CHECK(z.is_finite());
    CHECK(z.finite_value() == 0);

    ExpOrdinal five = ExpOrdinal::from_nat(5);
    CHECK(five.finite_value() == 5);
    CHECK(five.count_at(0) == 5);
    CHECK(five.is_finite());

    ExpOrdinal w = W(1);
    CHECK(!w.is_finite());
    CHECK(w.count_at(1) == 1);
    CHECK_THROWS_AS(w.finite_value(), std::domain_error);

    ExpOrdinal mixed = W(2, 3).plus(W(1, 2)).plus(ExpOrdinal::from_nat(7));
    CHECK(mixed.count_at(2) == 3);
    CHECK(mixed.count_at(1) == 2);
    CHECK(mixed.finite_count() == 7);
    CHECK(mixed.limit_part() == W(2, 3).plus(W(1, 2)));
}

TEST_CASE("ExpOrdinal ordinal addition absorbs below the lead") {
    ExpOrdinal one = ExpOrdinal::from_nat(1);
    ExpOrdinal w = W(1);
    CHECK(one.plus(w) == w);                      // 1 + w = w
    CHECK(w.plus(one) == W(1).plus(one));         // w + 1 keeps both
    CHECK(w.plus(w) == W(1, 2));                  // w + w = w*2
    CHECK(W(2).plus(w).count_at(2) == 1);         // w^2 + w keeps both terms
    CHECK(W(2).plus(w).count_at(1) == 1);
    CHECK(w.plus(W(2)) == W(2));                  // w + w^2 = w^2
    // (w^2 + w*2 + 3) + (w*5 + 1) = w^2 + w*7 + 1
    ExpOrdinal a = W(2).plus(W(1, 2)).plus(ExpOrdinal::from_nat(3));
    ExpOrdinal b = W(1, 5).plus(ExpOrdinal::from_nat(1));
    ExpOrdinal s = a.plus(b);
    CHECK(s.count_at(2) == 1);
    CHECK(s.count_at(1) == 7);
    CHECK(s.finite_count() == 1);
}

TEST_CASE("ExpOrdinal comparison is the ordinal order") {
    std::vector<ExpOrdinal> inc = {
        ExpOrdinal{},
        ExpOrdinal::from_nat(1),
        ExpOrdinal::from_nat(2),
        W(1),
        W(1).plus(ExpOrdinal::from_nat(1)),
        W(1, 2),
        W(2),
        W(2).plus(W(1, 3)),
        W(2, 2),
        W(5),
    };
    for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = 0; j < inc.size(); ++j) {
            CHECK((inc[i] < inc[j]) == (i < j));
            CHECK((inc[i] == inc[j]) == (i == j));
        }
}

TEST_CASE("ExpOrdinal shifts and left decrement") {
    ExpOrdinal e = W(3, 2).plus(W(1, 4));
    CHECK(e.shifted_down() == W(2, 2).plus(W(0, 4)));
    CHECK(e.shifted_down().shifted_up() == e);
    CHECK_THROWS_AS(ExpOrdinal::from_nat(1).shifted_down(), std::domain_error);

    CHECK(ExpOrdinal::from_nat(5).left_decrement() == ExpOrdinal::from_nat(4));
    CHECK(W(1).left_decrement() == W(1)); // 1 + w = w
    CHECK(W(2).plus(ExpOrdinal::from_nat(3)).left_decrement() ==
          W(2).plus(ExpOrdinal::from_nat(3))); // infinite: identity
    CHECK_THROWS_AS(ExpOrdinal{}.left_decrement(), std::domain_error);
}

TEST_CASE("Ordinal base-p round trip") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u})
        for (std::uint64_t n = 0; n < 200; ++n) {
            Ordinal o = Ordinal::from_nat(n, p);
            CHECK(o.to_nat(p) == n);
            CHECK(o.is_finite());
        }
    CHECK(Ordinal::from_nat(0, 3).is_zero());
    // digits of 22 base 3: 2*9 + 1*3 + 1
    Ordinal o = Ordinal::from_nat(22, 3);
    CHECK(o.digit_at(ExpOrdinal::from_nat(2)) == 2);
    CHECK(o.digit_at(ExpOrdinal::from_nat(1)) == 1);
    CHECK(o.digit_at(ExpOrdinal::from_nat(0)) == 1);
}

TEST_CASE("Ordinal comparison is lexicographic on the expansion") {
    unsigned p = 3;
    for (std::uint64_t a = 0; a < 60; ++a)
        for (std::uint64_t b = 0; b < 60; ++b)
            CHECK(compare(Ordinal::from_nat(a, p), Ordinal::from_nat(b, p)) ==
                  (a < b ? -1 : a > b ? 1 : 0));

    Ordinal w = Ordinal::group(W(1));  // [p^w]
    Ordinal big = Ordinal::group(W(2)); // [p^(w*2)]
    CHECK(Ordinal::from_nat(1000, p) < w);
    CHECK(w < big);
    Ordinal wplus = w;
    wplus.set_digit(ExpOrdinal{}, 2);
    CHECK(w < wplus);
    CHECK(compare(wplus, wplus) == 0);
}

TEST_CASE("Ordinal group and infinite detection") {
    Ordinal g = Ordinal::group(W(1, 3));
    CHECK(!g.is_finite());
    CHECK_THROWS_AS(g.to_nat(3), std::domain_error);
    CHECK(Ordinal::group(ExpOrdinal::from_nat(4)).to_nat(2) == 16);
}

TEST_CASE("monomial_delta places generators at the right positions") {
    CHECK(monomial_delta(Monomial::generator(2, 1)) == ExpOrdinal::from_nat(1));
    CHECK(monomial_delta(Monomial::generator(2, 2)) == ExpOrdinal::from_nat(2));
    CHECK(monomial_delta(Monomial::generator(2, 3)) == ExpOrdinal::from_nat(4));
    CHECK(monomial_delta(Monomial::generator(3, 1)) == W(1));
    CHECK(monomial_delta(Monomial::generator(3, 2)) == W(1, 3));
    CHECK(monomial_delta(Monomial::generator(5, 1)) == W(2));
    CHECK(monomial_delta(Monomial::generator(7, 2)) == W(3, 7));
    // chi_4 * chi_3^2: delta = w*2 + 2
    Monomial m = Monomial::generator(2, 2);
    m.exps[GeneratorId{3, 1}] = 2;
    CHECK(monomial_delta(m) == W(1, 2).plus(ExpOrdinal::from_nat(2)));
}

TEST_CASE("factor_count_into writes base-u digits") {
    Monomial m;
    factor_count_into(m, 2, 13); // 13 = 1101_2 -> chi_2, chi_8, chi_16
    CHECK(m.exps.at(GeneratorId{2, 1}) == 1);
    CHECK(m.exps.find(GeneratorId{2, 2}) == m.exps.end());
    CHECK(m.exps.at(GeneratorId{2, 3}) == 1);
    CHECK(m.exps.at(GeneratorId{2, 4}) == 1);

    Monomial n;
    factor_count_into(n, 5, 17); // 17 = 3*5 + 2 -> chi_5^2 chi_25^3
    CHECK(n.exps.at(GeneratorId{5, 1}) == 2);
    CHECK(n.exps.at(GeneratorId{5, 2}) == 3);
}

TEST_CASE("element round trip is the identity below p^5") {
    for (unsigned p : {2u, 3u}) {
        std::uint64_t bound = 1;
        for (int i = 0; i < (p == 2 ? 8 : 5); ++i) bound *= p;
        for (std::uint64_t v = 0; v < bound; ++v) {
            Ordinal o = Ordinal::from_nat(v, p);
            CHECK(element_to_ordinal(ordinal_to_element(o, p), p) == o);
        }
    }
}

TEST_CASE("element round trip on infinite ordinals") {
    unsigned p = 5;
    Ordinal o = Ordinal::group(W(2, 4).plus(W(1, 7)).plus(ExpOrdinal::from_nat(9)));
    o.set_digit(W(1), 3);
    o.set_digit(ExpOrdinal::from_nat(2), 4);
    CHECK(element_to_ordinal(ordinal_to_element(o, p), p) == o);
}

TEST_CASE("conversion validation") {
    Ordinal o;
    o.set_digit(ExpOrdinal::from_nat(1), 4);
    CHECK_THROWS_AS(ordinal_to_element(o, 3), std::invalid_argument);

    Element e = Element::from_coeff(4);
    CHECK_THROWS_AS(element_to_ordinal(e, 3), std::invalid_argument);

    Monomial m;
    m.exps[GeneratorId{3, 1}] = 3; // unreduced: exponent == u
    CHECK_THROWS_AS(element_to_ordinal(Element::from_monomial(m), 5), std::invalid_argument);
}
