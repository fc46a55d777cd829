#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modknot/laurent.hpp"

using namespace modknot;

TEST_CASE("construction and arithmetic") {
    LaurentZ x = LaurentZ::var();
    LaurentZ p = x * x + LaurentZ(1) + LaurentZ::var(-2);  // q^2 + 1 + q^-2
    CHECK(p.degree() == 2);
    CHECK(p.valuation() == -2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(LaurentZ().degree(), std::domain_error);
    CHECK(LaurentZ(0).is_zero());
    CHECK((LaurentZ(2) * LaurentZ::monomial(3, -1)) == LaurentZ::monomial(6, -1));
    CHECK(p.pow(0) == LaurentZ(1));
    CHECK(p.pow(2) == p * p);
}

TEST_CASE("reciprocal detection") {
    LaurentZ p = LaurentZ::var(2) + LaurentZ(1) + LaurentZ::var(-2);
    CHECK(p.is_reciprocal());
    CHECK(!(LaurentZ::var(1) + LaurentZ(1)).is_reciprocal());
    CHECK(p.inverted_var() == p);
    CHECK(LaurentZ::var(3).inverted_var() == LaurentZ::var(-3));
}

TEST_CASE("exact division") {
    LaurentZ t = LaurentZ::var();
    LaurentZ cyc = t * t + t + LaurentZ(1);
    LaurentZ prod = cyc * (t - LaurentZ(1)).shifted(-2);  // (t^3-1)/t^2 = t - t^-2
    CHECK(prod == t - LaurentZ::monomial(1, -2));
    auto q = prod.divided_exact(cyc);
    REQUIRE(q.has_value());
    CHECK(*q == (t - LaurentZ(1)).shifted(-2));
    CHECK(!(t + LaurentZ(1)).divided_exact(cyc).has_value());
    CHECK(LaurentZ().divided_exact(cyc)->is_zero());
    // non-monic leading coefficient must divide exactly
    CHECK(!(t * t + LaurentZ(1)).divided_exact(LaurentZ(2) * t + LaurentZ(2)).has_value());
    CHECK((LaurentZ(2) * t + LaurentZ(2)).divided_exact(t + LaurentZ(1)).value() == LaurentZ(2));
}

TEST_CASE("even exponent substitution x^2 -> -u") {
    // x^4 - 3 + x^-2  ->  u^2 - 3 - u^-1
    LaurentZ p = LaurentZ::var(4) - LaurentZ(3) + LaurentZ::var(-2);
    auto s = p.even_part_substitute();
    REQUIRE(s.has_value());
    CHECK(s->coeff(2) == 1);
    CHECK(s->coeff(0) == -3);
    CHECK(s->coeff(-1) == -1);
    CHECK(!(LaurentZ::var(1)).even_part_substitute().has_value());
}

TEST_CASE("evaluation") {
    LaurentZ p = LaurentZ::var(2) + LaurentZ(1) + LaurentZ::var(-2);
    CHECK(p.eval_rational(2) == Rat(21, 4));
    CHECK(p.eval_rational(Rat(1, 2)) == Rat(21, 4));  // reciprocal
    auto z = p.eval({0.0, 1.0});                      // q = i: -1 + 1 - 1
    CHECK(z.real() == doctest::Approx(-1.0));
    CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(p.eval({0.0, 0.0}), std::domain_error);
    CHECK(LaurentZ().eval({2.0, 0.0}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("printing") {
    LaurentZ p = LaurentZ::var(2) + LaurentZ(1) + LaurentZ::var(-2);
    CHECK(p.sparse_str() == "1:2 1:0 1:-2");
    CHECK(p.pretty_str() == "q^2 + 1 + q^-2");
    LaurentZ m = LaurentZ(-2) * LaurentZ::var(3) + LaurentZ(5);
    CHECK(m.pretty_str("t") == "-2*t^3 + 5");
    CHECK(LaurentZ().sparse_str() == "0:0");
}

TEST_CASE("matrix ops") {
    MatLaurent id = MatLaurent::identity();
    MatLaurent m{LaurentZ::var(), LaurentZ(1), LaurentZ(), LaurentZ::var(-1)};
    CHECK((m * id) == m);
    CHECK(m.det() == LaurentZ(1));
    CHECK((m * m.inverse_det1()) == id);
    CHECK(m.trace() == LaurentZ::var() + LaurentZ::var(-1));
}
