#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <onp/element.hpp>

using namespace onp;

TEST_CASE("element constructors and predicates") {
    CHECK(Element::zero().is_zero());
    CHECK(!Element::zero().is_one());
    CHECK(Element::one().is_one());
    CHECK(Element::from_coeff(0).is_zero());
    CHECK(Element::from_coeff(1) == Element::one());
    CHECK(!Element::from_coeff(2).is_one());
    CHECK(Element::from_monomial(Monomial{}, 1).is_one());
    CHECK(!Element::from_monomial(Monomial::generator(2, 1)).is_one());
    CHECK(Element::from_monomial(Monomial::generator(2, 1), 0).is_zero());
}

TEST_CASE("generator ordering is (u, n) lexicographic") {
    CHECK(GeneratorId{2, 1} < GeneratorId{2, 2});
    CHECK(GeneratorId{2, 9} < GeneratorId{3, 1});
    CHECK(GeneratorId{3, 1} < GeneratorId{5, 1});
    CHECK(GeneratorId{5, 2} == GeneratorId{5, 2});
}

TEST_CASE("monomial identity and comparison") {
    Monomial one;
    CHECK(one.is_one());
    CHECK(!Monomial::generator(2, 1).is_one());
    CHECK(Monomial::generator(2, 1) != Monomial::generator(2, 2));
    Monomial a = Monomial::generator(2, 1);
    Monomial b = a;
    b.exps[GeneratorId{3, 1}] = 2;
    CHECK(a != b);
    CHECK(monomial_delta(one).is_zero());
}

TEST_CASE("monomial_delta is additive over disjoint generators") {
    Monomial m = Monomial::generator(2, 2); // delta 2
    m.exps[GeneratorId{5, 1}] = 3;          // delta w^2 * 3
    m.exps[GeneratorId{3, 2}] = 1;          // delta w * 3
    ExpOrdinal d = monomial_delta(m);
    CHECK(d.count_at(2) == 3);
    CHECK(d.count_at(1) == 3);
    CHECK(d.count_at(0) == 2);
}

TEST_CASE("ordinal/element translation fixes the worked examples") {
    // 22 base 3 = 2*9 + 3 + 1: digits give chi_4^? -- count 2 at position 2
    // means chi_8 is NOT involved: 22 = [3^2]*2 + [3^1] + 1.
    Element e = ordinal_to_element(Ordinal::from_nat(22, 3), 3);
    // positions: delta=2 (chi_4), delta=1 (chi_2), delta=0 (unit)
    Monomial chi4 = Monomial::generator(2, 2);
    Monomial chi2 = Monomial::generator(2, 1);
    CHECK(e.terms.at(chi4) == 2);
    CHECK(e.terms.at(chi2) == 1);
    CHECK(e.terms.at(Monomial{}) == 1);
    CHECK(e.terms.size() == 3);

    // 6 base 2 = [2^2] + [2^1]: chi_4 + chi_2 in On_2
    Element f = ordinal_to_element(Ordinal::from_nat(6, 2), 2);
    CHECK(f.terms.size() == 2);
    CHECK(f.terms.count(chi4) == 1);
    CHECK(f.terms.count(chi2) == 1);

    // position 3 = 2 + 1 factors as chi_4 * chi_2
    Element g = ordinal_to_element(Ordinal::from_nat(8, 2), 2); // 8 = [2^3]
    Monomial prod = Monomial::generator(2, 1);
    prod.exps[GeneratorId{2, 2}] = 1;
    CHECK(g.terms.size() == 1);
    CHECK(g.terms.begin()->first == prod);
}

TEST_CASE("exhaustive element round trip below 2^10 and 5^4") {
    for (std::uint64_t v = 0; v < 1024; ++v) {
        Ordinal o = Ordinal::from_nat(v, 2);
        CHECK(element_to_ordinal(ordinal_to_element(o, 2), 2) == o);
    }
    for (std::uint64_t v = 0; v < 625; ++v) {
        Ordinal o = Ordinal::from_nat(v, 5);
        CHECK(element_to_ordinal(ordinal_to_element(o, 5), 5) == o);
    }
}
