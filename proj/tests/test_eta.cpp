#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <utility>
#include <vector>

#include "eta/eta.hpp"
#include "eta/partition.hpp"
#include "eta/poly.hpp"
#include "eta/quotient.hpp"
#include "eta/ring.hpp"
#include "eta/weyl.hpp"

using namespace eta;

namespace {

Polynomial T(int i) { return Polynomial::var(var_t(i)); }
Polynomial B(int p) { return Polynomial::var(var_b(p)); }
Polynomial BT(int k) { return Polynomial::var(var_bt(k)); }

TypedPartition tp(std::vector<int> parts, int k, int type) {
  return make_typed(std::move(parts), k, type);
}

const RaisingMonomial* find_term(const std::vector<RaisingMonomial>& ex,
                                 const std::map<std::pair<int, int>, int>& e) {
  for (const RaisingMonomial& r : ex) {
    if (r.exps == e) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("raising operator expansions") {
  SUBCASE("two rows outside the pair set") {
    std::vector<RaisingMonomial> ex = expand_raising(tp({1, 1}, 1, 1));
    CHECK(ex.size() == 2);
    const RaisingMonomial* unit = find_term(ex, {});
    const RaisingMonomial* r12 = find_term(ex, {{{1, 2}, 1}});
    REQUIRE(unit != nullptr);
    REQUIRE(r12 != nullptr);
    CHECK(unit->coeff == 1);
    CHECK(r12->coeff == -1);
  }

  SUBCASE("two rows inside the pair set") {
    std::vector<RaisingMonomial> ex = expand_raising(tp({2, 1}, 1, 1));
    CHECK(ex.size() == 2);
    const RaisingMonomial* unit = find_term(ex, {});
    const RaisingMonomial* r12 = find_term(ex, {{{1, 2}, 1}});
    REQUIRE(unit != nullptr);
    REQUIRE(r12 != nullptr);
    CHECK(unit->coeff == 1);
    CHECK(r12->coeff == -2);
  }

  SUBCASE("flows") {
    RaisingMonomial r;
    r.exps = {{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}};
    r.coeff = 1;
    CHECK(r.inflow(1) == 3);
    CHECK(r.outflow(1) == 0);
    CHECK(r.inflow(2) == 1);
    CHECK(r.outflow(2) == 1);
    CHECK(r.outflow(3) == 3);
  }
}

TEST_CASE("double eta polynomial anchors") {
  SUBCASE("single box classes") {
    CHECK(double_eta(tp({1}, 1, 1)) == B(1) - T(1));
    // the deformation sits entirely on the type 1 half
    CHECK(double_eta(tp({1}, 1, 2)) == BT(1));
    CHECK(double_eta(tp({2}, 2, 2)) == BT(2));
    CHECK(double_eta(tp({}, 1, 0)) == Polynomial::one());
  }

  SUBCASE("one row of length two at k=1") {
    CHECK(double_eta(tp({2}, 1, 0)) == B(2) - BT(1) * T(1));
  }

  SUBCASE("classes are homogeneous of the right degree") {
    for (int k : {1, 2}) {
      for (const TypedPartition& la : enumerate_typed(k, 3, 3)) {
        Polynomial f = double_eta(la);
        CHECK(f.is_homogeneous(la.weight()));
        CHECK(f.is_integral());
        CHECK(!f.is_zero());
      }
    }
  }

  SUBCASE("setting t to zero gives the single classes") {
    CHECK(single_eta(tp({1}, 1, 1)) == B(1));
    CHECK(single_eta(tp({2}, 1, 0)) == B(2));
    for (const TypedPartition& la : enumerate_typed(1, 2, 3)) {
      CHECK(single_eta(la) == double_eta(la).zero_t());
    }
  }
}

TEST_CASE("hatted classes") {
  SUBCASE("anchors at k=1") {
    CHECK(double_eta_hat({1}, 1) == B(1) + BT(1) - T(1));
    CHECK(double_eta_hat({2}, 1) == B(2) - BT(1) * T(1));
    CHECK(double_eta_hat({}, 1) == Polynomial::one());
  }

  SUBCASE("hatted class is the sum over the types of the shape") {
    for (int k : {1, 2}) {
      for (const std::vector<int>& sh : enumerate_shapes(k, 3, 3)) {
        Polynomial sum;
        for (const TypedPartition& la : typed_lifts(sh, k)) {
          sum += double_eta(la);
        }
        CHECK(double_eta_hat(sh, k) == sum);
      }
    }
  }

  SUBCASE("hatted context accepts shapes with and without a k part") {
    CHECK_NOTHROW(double_eta_hat({2, 1}, 1));
    CHECK_NOTHROW(double_eta_hat({3, 2}, 1));
    CHECK_NOTHROW(double_eta_hat({2, 2, 1}, 2));
    StarContext ctx = star_context_hatted({2, 1}, 1);
    CHECK(ctx.hatted);
    CHECK(ctx.k == 1);
  }
}

TEST_CASE("top cell classes") {
  CHECK(top_class(1, 2) == B(2) - BT(1) * T(1));
  CHECK(top_class(2, 3) == B(4) + B(3) * e_sym(1, 2, true) +
                               BT(2) * e_sym(2, 2, true));
  CHECK(top_class(1, 4) == double_eta(tp({4, 3, 2}, 1, 0)));
  CHECK(top_class(1, 4) == double_eta_hat({4, 3, 2}, 1));
  CHECK(top_class(2, 3) == double_eta(tp({4}, 2, 0)));
}

TEST_CASE("divided differences move along the covers") {
  SUBCASE("exact one step anchors at k=1") {
    Polynomial h2 = double_eta(tp({2}, 1, 0));
    CHECK(divided_difference(1, h2, 1) == BT(1));
    CHECK(divided_difference(0, h2, 1) == B(1) - T(1));
  }

  SUBCASE("a step that needs the ideal") {
    // dd along the cover (2,1) -> (1,1) matches only modulo the relations
    Polynomial lhs = divided_difference(1, double_eta(tp({2, 1}, 1, 2)), 1);
    Polynomial rhs = double_eta(tp({1, 1}, 1, 2));
    Polynomial diff = lhs - rhs;
    CHECK(diff == B(2) - BT(1) * B(1));
    CHECK(!diff.is_zero());
    CHECK(normal_form(diff, 1).is_zero());
  }

  SUBCASE("reconstruction from the top cell") {
    for (const TypedPartition& la : enumerate_typed(1, 2, 3)) {
      Polynomial rebuilt = eta_via_divided_differences(la, 1, 3);
      CHECK(eq_mod_ideal(rebuilt, double_eta(la), 1));
    }
    CHECK(eta_via_divided_differences(top_partition(1, 3), 1, 3) ==
          top_class(1, 3));
  }
}
