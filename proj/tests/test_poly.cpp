#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eta/poly.hpp"

using namespace eta;

namespace {

Polynomial T(int i) { return Polynomial::var(var_t(i)); }
Polynomial B(int p) { return Polynomial::var(var_b(p)); }
Polynomial BT(int k) { return Polynomial::var(var_bt(k)); }

}  // namespace

TEST_CASE("variable codes") {
  SUBCASE("significance order bt < b < t") {
    CHECK(var_bt(1) < var_b(1));
    CHECK(var_b(1) < var_b(2));
    CHECK(var_b(99) < var_t(1));
    CHECK(var_t(1) < var_t(2));
  }

  SUBCASE("degrees") {
    CHECK(var_degree(var_bt(3)) == 3);
    CHECK(var_degree(var_b(5)) == 5);
    CHECK(var_degree(var_t(7)) == 1);
  }

  SUBCASE("name round trip") {
    for (VarCode v : {var_bt(2), var_b(1), var_b(12), var_t(4)}) {
      CHECK(parse_var_name(var_name(v)) == v);
    }
    CHECK(var_name(var_bt(2)) == "bt2");
    CHECK(var_name(var_b(10)) == "b10");
    CHECK(var_name(var_t(1)) == "t1");
  }

  SUBCASE("bad names rejected") {
    CHECK_THROWS_AS(parse_var_name("q3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_var_name("b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_var_name("bt"), std::invalid_argument);
    CHECK_THROWS_AS(parse_var_name("b0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_var_name("t1x"), std::invalid_argument);
  }
}

TEST_CASE("monomials") {
  SUBCASE("normalization merges and sorts factors") {
    Monomial m({{var_t(1), 1}, {var_b(2), 2}, {var_t(1), 3}});
    CHECK(m.factors().size() == 2);
    CHECK(m.exponent(var_b(2)) == 2);
    CHECK(m.exponent(var_t(1)) == 4);
    CHECK(m.exponent(var_t(2)) == 0);
    CHECK(m.degree() == 8);
  }

  SUBCASE("zero exponents are dropped") {
    Monomial m({{var_b(1), 0}, {var_t(2), 0}});
    CHECK(m.is_unit());
    CHECK(m == Monomial::unit());
    CHECK(m.degree() == 0);
  }

  SUBCASE("negative exponents are rejected") {
    CHECK_THROWS_AS(Monomial({{var_b(1), -1}}), std::invalid_argument);
  }

  SUBCASE("product adds exponents") {
    Monomial a = Monomial::var(var_b(1)) * Monomial::var(var_t(2), 3);
    Monomial b({{var_t(2), 3}, {var_b(1), 1}});
    CHECK(a == b);
    CHECK((a * a).exponent(var_t(2)) == 6);
  }

  SUBCASE("t bookkeeping") {
    Monomial m({{var_b(2), 1}, {var_t(1), 2}, {var_t(3), 1}});
    CHECK(m.t_degree() == 3);
    CHECK(m.has_t());
    CHECK(!Monomial::var(var_b(2)).has_t());
  }

  SUBCASE("order is graded, ties broken on the significant end") {
    Monomial unit = Monomial::unit();
    Monomial t1 = Monomial::var(var_t(1));
    Monomial t2 = Monomial::var(var_t(2));
    Monomial b1 = Monomial::var(var_b(1));
    Monomial bt1 = Monomial::var(var_bt(1));
    CHECK(unit < t1);
    CHECK(!(t1 < t2));
    CHECK(t2 < t1);
    CHECK(t1 < b1);
    CHECK(b1 < bt1);
    CHECK(t1 < Monomial::var(var_t(1), 2));  // degree wins
    CHECK(!(t1 < t1));
  }
}

TEST_CASE("polynomial arithmetic") {
  SUBCASE("binomial square") {
    Polynomial f = (T(1) + T(2)).pow(2);
    Polynomial g = T(1) * T(1) + 2 * T(1) * T(2) + T(2) * T(2);
    CHECK(f == g);
    CHECK(f.size() == 3);
  }

  SUBCASE("pow") {
    CHECK(T(1).pow(0) == Polynomial::one());
    CHECK(Polynomial::zero().pow(0) == Polynomial::one());
    CHECK((B(2) * 3).pow(2) == B(2) * B(2) * 9);
  }

  SUBCASE("subtraction cancels") {
    Polynomial f = B(1) * T(1) - T(2);
    CHECK((f - f).is_zero());
    CHECK(f + (-f) == Polynomial::zero());
  }

  SUBCASE("add_term drops cancelled coefficients") {
    Polynomial f;
    f.add_term(Monomial::var(var_t(1)), 1);
    f.add_term(Monomial::var(var_t(1)), -1);
    CHECK(f.is_zero());
    CHECK(f.size() == 0);
    CHECK(f.degree() == -1);
  }

  SUBCASE("scalar multiplication") {
    Polynomial f = B(1) + T(1);
    CHECK(f * mpq_class(0) == Polynomial::zero());
    CHECK(f * mpq_class(1, 2) + f * mpq_class(1, 2) == f);
    CHECK(mpq_class(2) * f == f + f);
  }

  SUBCASE("constants") {
    Polynomial c(mpq_class(-7, 3));
    CHECK(c.is_constant());
    CHECK(c.constant_term() == mpq_class(-7, 3));
    CHECK(Polynomial::zero().is_constant());
    CHECK((B(1) + Polynomial::one()).constant_term() == 1);
    CHECK(!(B(1) + Polynomial::one()).is_constant());
  }
}

TEST_CASE("grading predicates") {
  CHECK(Polynomial::zero().degree() == -1);
  CHECK(Polynomial::one().degree() == 0);
  CHECK((B(2) * BT(1) + T(1).pow(3)).degree() == 3);

  Polynomial f = B(2) - BT(1) * T(1);
  CHECK(f.is_homogeneous(2));
  CHECK(!f.is_homogeneous(1));
  CHECK(!(f + Polynomial::one()).is_homogeneous(2));
  CHECK(Polynomial::zero().is_homogeneous(5));

  CHECK(f.is_integral());
  CHECK(!(f * mpq_class(1, 2)).is_integral());
  CHECK((f * mpq_class(1, 2) * 2).is_integral());
}

TEST_CASE("substitutions") {
  Polynomial f = T(1).pow(2) * T(2) + B(1) * T(3);

  SUBCASE("swap_t") {
    Polynomial g = f.swap_t(1, 2);
    CHECK(g == T(2).pow(2) * T(1) + B(1) * T(3));
    CHECK(g.swap_t(1, 2) == f);
    CHECK(f.swap_t(3, 3) == f);
  }

  SUBCASE("negate_t flips odd t-degree terms") {
    CHECK(f.negate_t() == -T(1).pow(2) * T(2) - B(1) * T(3));
    CHECK(f.negate_t().negate_t() == f);
    CHECK(B(2).negate_t() == B(2));
  }

  SUBCASE("zero_t kills every term with a t factor") {
    Polynomial g = B(1) * T(1) + B(2) + T(2).pow(4);
    CHECK(g.zero_t() == B(2));
    CHECK(T(1).zero_t().is_zero());
  }
}

TEST_CASE("decompose_by_var reassembles") {
  Polynomial f =
      B(2).pow(2) * T(1) + B(2) * T(2) + T(1) * T(2) + Polynomial(mpq_class(5));
  std::map<int, Polynomial> parts = f.decompose_by_var(var_b(2));
  CHECK(parts.size() == 3);
  CHECK(parts.count(0) == 1);
  CHECK(parts.count(1) == 1);
  CHECK(parts.count(2) == 1);
  CHECK(parts[2] == T(1));

  Polynomial back;
  for (const auto& [e, coeff] : parts) {
    for (const auto& [m, c] : coeff.terms()) CHECK(m.exponent(var_b(2)) == 0);
    back += coeff * Polynomial::var(var_b(2), e);
  }
  CHECK(back == f);
}

TEST_CASE("divide_linear") {
  SUBCASE("exact quotient") {
    Polynomial q = T(1) + 3 * T(2) + B(1);
    Polynomial f = q * (T(1) - T(2));
    CHECK(f.divide_linear(var_t(1), T(2)) == q);
  }

  SUBCASE("shift free of the variable") {
    Polynomial f = (B(2) + T(2)) * (T(1) - B(1) * T(2));
    CHECK(f.divide_linear(var_t(1), B(1) * T(2)) == B(2) + T(2));
  }

  SUBCASE("nonzero remainder throws") {
    Polynomial f = T(1).pow(2);
    CHECK_THROWS_AS(f.divide_linear(var_t(1), Polynomial::one()),
                    std::logic_error);
  }

  SUBCASE("shift depending on the variable throws") {
    CHECK_THROWS_AS(T(1).divide_linear(var_t(1), T(1)), std::logic_error);
  }

  SUBCASE("zero divides to zero") {
    CHECK(Polynomial::zero().divide_linear(var_t(1), T(2)).is_zero());
  }
}

TEST_CASE("string and json round trips") {
  SUBCASE("to_string conventions") {
    CHECK(Polynomial::zero().to_string() == "0");
    CHECK((B(1) - T(1)).to_string() == "b1 - t1");
    CHECK((T(1) + T(2)).to_string() == "t1 + t2");
    CHECK((-2 * B(2) * BT(1)).to_string() == "-2*bt1*b2");
    CHECK(T(1).pow(2).to_string() == "t1^2");
  }

  SUBCASE("json round trip") {
    Polynomial f = B(2) * mpq_class(3, 2) - BT(1) * T(1) * 7 +
                   Polynomial(mpq_class(-1, 3));
    CHECK(Polynomial::from_json(f.to_json()) == f);
    CHECK(Polynomial::from_json(Polynomial::zero().to_json()).is_zero());
  }

  SUBCASE("json literals") {
    Polynomial f = Polynomial::from_json(
        R"({"terms":[{"coeff":"3/2","vars":{"b2":1}},)"
        R"({"coeff":"-1","vars":{"t1":2}}]})");
    CHECK(f == B(2) * mpq_class(3, 2) - T(1).pow(2));
  }

  SUBCASE("bad json rejected") {
    CHECK_THROWS_AS(Polynomial::from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::from_json(R"({"no_terms":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Polynomial::from_json(R"({"terms":[{"coeff":"1/0","vars":{}}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        Polynomial::from_json(R"({"terms":[{"coeff":"x","vars":{}}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        Polynomial::from_json(R"({"terms":[{"coeff":"1","vars":{"b1":0}}]})"),
        std::invalid_argument);
  }
}
