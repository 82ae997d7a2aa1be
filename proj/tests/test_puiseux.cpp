#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chazy/puiseux.hpp"

using namespace chazy;

namespace {

PuiseuxSeries one_minus_q(long trunc = 40) {
    return PuiseuxSeries::constant(1, trunc) + PuiseuxSeries::monomial(-1, 4, trunc);
}

PuiseuxSeries one_plus_q(long trunc = 40) {
    return PuiseuxSeries::constant(1, trunc) + PuiseuxSeries::monomial(1, 4, trunc);
}

}  // namespace

TEST_CASE("addition cancels and respects truncation") {
    PuiseuxSeries s = one_plus_q() + one_minus_q();
    CHECK(s == PuiseuxSeries::constant(2, 40));
    CHECK(s.term_count() == 1);

    PuiseuxSeries a = PuiseuxSeries::constant(1, 40) + PuiseuxSeries::monomial(-24, 4, 40);
    CHECK(a + PuiseuxSeries::monomial(24, 4, 40) == PuiseuxSeries::constant(1, 40));

    PuiseuxSeries narrow = PuiseuxSeries::constant(1, 8);
    CHECK((a + narrow).trunc_order() == 8);
}

TEST_CASE("multiplication: Cauchy product and lattice closure") {
    CHECK(one_plus_q() * one_minus_q() ==
          PuiseuxSeries::constant(1, 40) + PuiseuxSeries::monomial(-1, 8, 40));

    PuiseuxSeries qq = PuiseuxSeries::monomial(1, 1, 40);  // q^{1/4}
    PuiseuxSeries half = qq * qq;
    CHECK(half.coeff(2) == 1);  // q^{1/2}
    CHECK(half.valuation() == 2);

    // (1 + 2q + 2q^4)^2 to order q^6
    PuiseuxSeries t = PuiseuxSeries::constant(1, 28) + PuiseuxSeries::monomial(2, 4, 28) +
                      PuiseuxSeries::monomial(2, 16, 28);
    PuiseuxSeries sq = t * t;
    CHECK(sq.coeff_q(0) == 1);
    CHECK(sq.coeff_q(1) == 4);
    CHECK(sq.coeff_q(2) == 4);
    CHECK(sq.coeff_q(3) == 0);
    CHECK(sq.coeff_q(4) == 4);
    CHECK(sq.coeff_q(5) == 8);
}

TEST_CASE("multiplication truncation follows the valuation-shift rule") {
    // a = q^2 + O(q^10), b = q + O(q^3): ab = q^3 + O(q^5)
    PuiseuxSeries a = PuiseuxSeries::monomial(1, 8, 40);
    PuiseuxSeries b = PuiseuxSeries::monomial(1, 4, 12);
    CHECK((a * b).trunc_order() == 20);
}

TEST_CASE("inverse: geometric series, Laurent shift, self-check") {
    PuiseuxSeries inv = one_minus_q().inverse();
    for (long k = 0; k < 9; ++k) CHECK(inv.coeff_q(k) == 1);

    PuiseuxSeries root = PuiseuxSeries::monomial(1, 2, 40);  // q^{1/2}
    PuiseuxSeries rinv = root.inverse();
    CHECK(rinv.coeff(-2) == 1);
    CHECK(rinv.term_count() == 1);

    CHECK_THROWS_AS(PuiseuxSeries::zero(40).inverse(), std::domain_error);

    // random-ish series times its inverse is 1
    PuiseuxSeries s = PuiseuxSeries::constant(rat(3, 2), 60) +
                      PuiseuxSeries::monomial(rat(-7, 3), 1, 60) +
                      PuiseuxSeries::monomial(5, 6, 60) + PuiseuxSeries::monomial(rat(1, 4), 9, 60);
    PuiseuxSeries prod = s * s.inverse();
    CHECK(prod == PuiseuxSeries::constant(1, prod.trunc_order()));

    // same with a fractional (q^{1/2}) valuation: the inverse shifts to q^{-1/2}
    PuiseuxSeries t = PuiseuxSeries::monomial(2, 2, 60) +
                      PuiseuxSeries::monomial(rat(1, 3), 5, 60) +
                      PuiseuxSeries::monomial(-1, 9, 60);
    PuiseuxSeries tinv = t.inverse();
    CHECK(tinv.valuation() == -2);
    PuiseuxSeries tprod = t * tinv;
    CHECK(tprod == PuiseuxSeries::constant(1, tprod.trunc_order()));
}

TEST_CASE("derivation D = q d/dq") {
    PuiseuxSeries s = PuiseuxSeries::monomial(1, 12, 40);  // q^3
    CHECK(s.derive().coeff_q(3) == 3);
    CHECK(PuiseuxSeries::constant(7, 40).derive().is_zero());
    PuiseuxSeries quarter = PuiseuxSeries::monomial(1, 1, 40);
    CHECK(quarter.derive().coeff(1) == rat(1, 4));

    // product rule, exactly
    PuiseuxSeries a = one_plus_q() * one_plus_q() + PuiseuxSeries::monomial(rat(2, 3), 5, 40);
    PuiseuxSeries b = one_minus_q() + PuiseuxSeries::monomial(rat(-1, 2), 2, 40);
    CHECK((a * b).derive() == a.derive() * b + a * b.derive());
}

TEST_CASE("substitute monomial") {
    PuiseuxSeries e2ish = PuiseuxSeries::constant(1, 40) + PuiseuxSeries::monomial(-24, 4, 40) +
                          PuiseuxSeries::monomial(-72, 8, 40);
    PuiseuxSeries sub = e2ish.substitute_monomial(1, 4);
    CHECK(sub.coeff_q(4) == -24);
    CHECK(sub.coeff_q(8) == -72);
    CHECK(sub.trunc_order() == 160);

    PuiseuxSeries flipped = e2ish.substitute_monomial(-1, 1);
    CHECK(flipped.coeff_q(1) == 24);
    CHECK(flipped.coeff_q(2) == -72);

    CHECK(e2ish.substitute_monomial(1, 1) == e2ish);

    PuiseuxSeries quarter = PuiseuxSeries::monomial(1, 1, 40);
    CHECK_THROWS_WITH_AS(quarter.substitute_monomial(-1, 1),
                         "sign substitution needs integer exponents", std::domain_error);
}

TEST_CASE("compose") {
    std::vector<Rational> geometric(12, rat(1));
    PuiseuxSeries q = PuiseuxSeries::monomial(1, 4, 48);
    PuiseuxSeries g = PuiseuxSeries::compose(geometric, q, 44);
    for (long k = 0; k < 11; ++k) CHECK(g.coeff_q(k) == 1);

    // empty inner: f(0) = c0
    std::vector<Rational> explike{rat(1), rat(1), rat(1, 2), rat(1, 6)};
    PuiseuxSeries z = PuiseuxSeries::compose(explike, PuiseuxSeries::zero(40), 40);
    CHECK(z == PuiseuxSeries::constant(1, 40));

    CHECK_THROWS_AS(PuiseuxSeries::compose(geometric, PuiseuxSeries::constant(1, 40), 40),
                    std::domain_error);
}

TEST_CASE("binomial powers") {
    PuiseuxSeries q = PuiseuxSeries::monomial(1, 4, 48);
    CHECK(PuiseuxSeries::binomial_pow(q, rat(1), 48) == one_plus_q(48));

    // (1 - 2x)^{-1/2} = 1 + x + (3/2) x^2 + ...
    PuiseuxSeries m2x = q * rat(-2);
    PuiseuxSeries s = PuiseuxSeries::binomial_pow(m2x, rat(-1, 2), 48);
    CHECK(s.coeff_q(0) == 1);
    CHECK(s.coeff_q(1) == 1);
    CHECK(s.coeff_q(2) == rat(3, 2));
    CHECK(s.coeff_q(3) == rat(5, 2));

    CHECK(PuiseuxSeries::binomial_pow(q, rat(0), 48) ==
          PuiseuxSeries::constant(1, 48));

    CHECK_THROWS_AS(PuiseuxSeries::binomial_pow(PuiseuxSeries::constant(1, 8), rat(1, 2), 8),
                    std::domain_error);
}

TEST_CASE("equality to order and mismatch reporting") {
    PuiseuxSeries a = one_plus_q() * one_minus_q();
    PuiseuxSeries b = PuiseuxSeries::constant(1, 40) + PuiseuxSeries::monomial(-1, 8, 40);
    CHECK(PuiseuxSeries::eq_to_order(a, b, 40));

    PuiseuxSeries c = b + PuiseuxSeries::monomial(rat(1, 3), 12, 40);
    auto mm = PuiseuxSeries::first_mismatch(a, c, 40);
    REQUIRE(mm.has_value());
    CHECK(mm->exponent == 3);
    CHECK(mm->lhs == 0);
    CHECK(mm->rhs == rat(1, 3));

    CHECK_THROWS_WITH_AS(PuiseuxSeries::eq_to_order(a, PuiseuxSeries::constant(1, 8), 40),
                         "order exceeds available precision", std::domain_error);
}

TEST_CASE("serialization") {
    PuiseuxSeries s = PuiseuxSeries::monomial(2, 1, 12) + PuiseuxSeries::monomial(rat(-3, 2), 4, 12);
    CHECK(s.to_json() ==
          R"({"lattice_den":4,"trunc_order":"3","terms":[["1/4","2"],["1","-3/2"]]})");
    CHECK(s.to_csv() == "exponent,coefficient\n1/4,2\n1,-3/2\n");
}

TEST_CASE("numeric evaluation") {
    PuiseuxSeries s = one_minus_q(80).inverse();
    double q = 0.125;
    CHECK(std::abs(s.eval({q, 0.0}) - 1.0 / (1.0 - q)) < 1e-12);
}
