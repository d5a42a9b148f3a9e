#include <doctest.h>

#include <vector>

#include "hn/degrees.hpp"
#include "hn/dominance.hpp"
#include "hn/errors.hpp"
#include "test_util.hpp"

using hn::Bundle;
using hn::Rational;
using test_util::B;
using test_util::Q;
using test_util::all_bundles;

namespace {

// The exhaustive set for this suite: rank <= 4, slopes in [-3, 3],
// |degree| <= 4.
const std::vector<Bundle>& exhaustive_set() {
  static const std::vector<Bundle> bundles = [] {
    std::vector<Bundle> out;
    for (const Bundle& v : all_bundles(4, Q(-3), Q(3)))
      if (v.degree() >= -4 && v.degree() <= 4) out.push_back(v);
    return out;
  }();
  return bundles;
}

}  // namespace

TEST_SUITE("degrees") {

TEST_CASE("positive-part degree") {
  CHECK(hn::pos_part_degree(B("O(1) + O(-1)")) == 1);
  CHECK(hn::pos_part_degree(B("O(-1/2) + O(-2)")) == 0);
  CHECK(hn::pos_part_degree(B("O(0)^5")) == 0);
  CHECK(hn::pos_part_degree(Bundle()) == 0);
}

TEST_CASE("hom degree via cross products") {
  CHECK(hn::hom_degree(B("O(0)"), B("O(1)")) == 1);
  CHECK(hn::hom_degree(B("O(1/2)^3"), B("O(1/2)^3")) == 0);
  CHECK(hn::hom_degree(B("O(-2)^2"), B("O(-2)^2")) == 0);
  CHECK(hn::hom_degree(B("O(1) + O(0)"), B("O(1) + O(0)")) == 1);
}

TEST_CASE("oracle route on hand-checked pairs") {
  CHECK(hn::hom_degree_oracle(B("O(0)"), B("O(1)")) == 1);
  CHECK(hn::hom_degree_oracle(B("O(1/2)^3"), B("O(1/2)^3")) == 0);
  CHECK(hn::hom_degree_oracle(B("O(1) + O(0)"), B("O(1) + O(0)")) == 1);
  CHECK(hn::hom_degree_oracle(Bundle(), B("O(1)")) == 0);
  CHECK(hn::hom_degree_oracle(B("O(1)"), Bundle()) == 0);
  CHECK(hn::hom_degree_oracle(B("O(-1)"), B("O(-2)")) == 0);
}

TEST_CASE("hom degree equals the tensor-expansion oracle") {
  const auto& bundles = exhaustive_set();
  for (const Bundle& e : bundles)
    for (const Bundle& f : bundles)
      CHECK(hn::hom_degree(e, f) == hn::hom_degree_oracle(e, f));
}

TEST_CASE("parallelogram degree under the slope-order precondition") {
  CHECK(hn::parallelogram_degree(B("O(-1)"), B("O(1)")) == 2);
  CHECK(hn::parallelogram_degree(B("O(0)^2"), B("O(0)")) == 0);
  CHECK(hn::parallelogram_degree(B("O(0)"), B("O(1) + O(1/2)")) == 2);
  CHECK_THROWS_AS(hn::parallelogram_degree(B("O(1)"), B("O(0)")), hn::DomainError);
  CHECK_THROWS_AS(hn::parallelogram_degree(Bundle(), B("O(0)")), hn::DomainError);

  const auto& bundles = exhaustive_set();
  for (const Bundle& e : bundles) {
    for (const Bundle& f : bundles) {
      if (e.mu_max() > f.mu_min()) continue;
      CHECK(hn::parallelogram_degree(e, f) == hn::hom_degree(e, f));
    }
  }
}

TEST_CASE("aut degree equals twice the chord area") {
  CHECK(hn::aut_degree(B("O(1) + O(0)")) == 1);
  CHECK(hn::aut_degree(B("O(2/3)^2")) == 0);
  CHECK(hn::aut_degree(B("O(1) + O(-1)")) == 2);
  for (const Bundle& v : exhaustive_set())
    CHECK(hn::aut_degree(v) == hn::aut_degree_via_area(v));
  for (const Bundle& v : exhaustive_set())
    CHECK((hn::aut_degree(v) == 0) == v.is_semistable());
}

TEST_CASE("only the relevant slope ranges contribute") {
  const auto& bundles = exhaustive_set();
  for (const Bundle& e : bundles) {
    for (const Bundle& f : bundles) {
      long long expect = hn::hom_degree(e, f);
      for (const Rational& lambda : {e.mu_min() - Q(1), e.mu_min()})
        CHECK(hn::hom_degree(e, hn::truncate(f, lambda, hn::Cmp::Gt)) == expect);
      for (const Rational& lambda : {f.mu_max() + Q(1), f.mu_max()})
        CHECK(hn::hom_degree(hn::truncate(e, lambda, hn::Cmp::Lt), f) == expect);
    }
  }
}

TEST_CASE("shearing both arguments scales by den(lambda)^2") {
  const std::vector<Rational> lambdas = {Q(1, 2),  Q(-1, 2), Q(1, 3), Q(-1, 3),
                                         Q(2, 3),  Q(-2, 3), Q(1),    Q(-1)};
  const auto& bundles = exhaustive_set();
  for (const Bundle& e : bundles) {
    for (const Bundle& f : bundles) {
      long long base = hn::hom_degree(e, f);
      for (const Rational& l : lambdas) {
        long long r = l.den();
        CHECK(hn::hom_degree(hn::twist(e, l), hn::twist(f, l)) == r * r * base);
      }
    }
  }
}

TEST_CASE("vertical stretch scales the hom degree by the factor") {
  CHECK(hn::vertical_stretch(B("O(1) + O(-1)"), 2) == B("O(2) + O(-2)"));
  CHECK(hn::vertical_stretch(B("O(1/2)"), 2) == B("O(1)^2"));
  CHECK(hn::vertical_stretch(B("O(1/2)"), 3) == B("O(3/2)"));
  CHECK_THROWS_AS(hn::vertical_stretch(B("O(1)"), 0), hn::DomainError);

  const auto& bundles = exhaustive_set();
  for (long long c : {2LL, 3LL}) {
    for (const Bundle& e : bundles) {
      Bundle se = hn::vertical_stretch(e, c);
      for (const Bundle& f : bundles) {
        Bundle sf = hn::vertical_stretch(f, c);
        CHECK(hn::hom_degree(se, sf) == c * hn::hom_degree(e, f));
      }
    }
  }
}

TEST_CASE("slopewise dominance at equal rank bounds the positive part") {
  const auto& bundles = exhaustive_set();
  for (const Bundle& e : bundles) {
    for (const Bundle& f : bundles) {
      if (e.rank() != f.rank()) continue;
      if (!hn::slopewise_dominates(e, f)) continue;
      CHECK(hn::pos_part_degree(e) >= hn::pos_part_degree(f));
    }
  }
}

}  // TEST_SUITE
