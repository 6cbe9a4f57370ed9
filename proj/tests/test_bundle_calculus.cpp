#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pontcalc/bundle.hpp>
#include <pontcalc/verify.hpp>

using namespace pontcalc;

namespace {

const VarSet kAmbient = root_varset({"a", "b"});

GradedPolynomial xa() { return GradedPolynomial::variable(kAmbient, 0); }
GradedPolynomial xb() { return GradedPolynomial::variable(kAmbient, 1); }
GradedPolynomial u() { return GradedPolynomial::variable(kAmbient, 2); }

}  // namespace

TEST_CASE("rank") {
  CHECK(FormalBundle(kAmbient, {"a", "b"}, 1).rank() == 5);
  CHECK(FormalBundle::zero(kAmbient).rank() == 0);
  CHECK(FormalBundle(kAmbient, {"a"}, 0).rank() == 2);
}

TEST_CASE("direct sum") {
  const FormalBundle a(kAmbient, {"a"}, 0);
  const FormalBundle b(kAmbient, {"b"}, 0);
  CHECK(direct_sum(a, b) == FormalBundle(kAmbient, {"a", "b"}, 0));
  CHECK(direct_sum(a, FormalBundle::zero(kAmbient)) == a);
  CHECK(direct_sum(FormalBundle(kAmbient, {"a"}, 1),
                   FormalBundle(kAmbient, {}, 2)) ==
        FormalBundle(kAmbient, {"a"}, 3));
  CHECK_THROWS_AS(direct_sum(a, FormalBundle(root_varset({"c"}), {"c"}, 0)),
                  VarSetError);
  // total class is multiplicative on direct sums
  const FormalBundle sum = direct_sum(a, b);
  CHECK(total_class(sum).poly() ==
        total_class(a).poly() * total_class(b).poly());
}

TEST_CASE("dual is the identity representation") {
  const FormalBundle e(kAmbient, {"a", "b"}, 1);
  CHECK(dual(e) == e);
  CHECK(dual(FormalBundle::zero(kAmbient)) == FormalBundle::zero(kAmbient));
  CHECK(dual(dual(e)) == e);
}

TEST_CASE("pontryagin classes") {
  const FormalBundle ab(kAmbient, {"a", "b"}, 0);
  const FormalBundle ab1(kAmbient, {"a", "b"}, 1);
  CHECK(pontryagin(1, ab) == xa() + xb());
  CHECK(pontryagin(2, ab1) == xa() * xb());
  CHECK(pontryagin(1, FormalBundle(kAmbient, {}, 5)).is_zero());
  CHECK(pontryagin(0, ab) == GradedPolynomial::one(kAmbient));
  CHECK(pontryagin(-1, ab).is_zero());
  CHECK(pontryagin(3, ab).is_zero());
}

TEST_CASE("total class") {
  CHECK(total_class(FormalBundle(kAmbient, {"a"}, 0)).poly() ==
        GradedPolynomial::one(kAmbient) + xa());
  CHECK(total_class(FormalBundle(kAmbient, {"a", "b"}, 0)).poly() ==
        GradedPolynomial::one(kAmbient) + (xa() + xb()) + xa() * xb());
  CHECK(total_class(FormalBundle(kAmbient, {}, 3)).poly() ==
        GradedPolynomial::one(kAmbient));
  // constant term is always 1 and piece k is p_k
  const FormalBundle e(kAmbient, {"a", "a"}, 2);
  CHECK(total_class(e).poly().constant_coeff() == Int(1));
  for (int k = 0; k <= 3; ++k)
    CHECK(total_class(e).piece(k) == pontryagin(k, e));
}

TEST_CASE("top class") {
  CHECK(top_class(FormalBundle(kAmbient, {"a", "b"}, 0)) == xa() * xb());
  CHECK(top_class(FormalBundle(kAmbient, {"a"}, 2)).is_zero());
  CHECK_THROWS_AS(top_class(FormalBundle(kAmbient, {"a"}, 1)), OddRankError);
}

TEST_CASE("f polynomials") {
  const FormalBundle ab(kAmbient, {"a", "b"}, 0);
  CHECK(f_poly(0, ab).poly == GradedPolynomial::one(kAmbient));
  CHECK(f_poly(-2, ab).poly.is_zero());
  CHECK(f_poly(1, FormalBundle(kAmbient, {"a"}, 0)).poly == xa() - u());
  CHECK(f_poly(2, ab).poly ==
        xa() * xb() - (xa() + xb()) * u() + pow(u(), 2));
  CHECK(f_poly(2, ab).poly.to_string() == "x_a*x_b - x_a*u - x_b*u + u^2");
  // f_{r,E} is homogeneous of weight r
  for (int r = 0; r <= 5; ++r) {
    const GradedPolynomial f = f_poly(r, ab).poly;
    CHECK(f.is_homogeneous());
    if (!f.is_zero()) CHECK(f.homogeneous_weight() == r);
  }
}

TEST_CASE("f identities") {
  const FormalBundle ab(kAmbient, {"a", "b"}, 0);
  const FormalBundle da(kAmbient, {"a"}, 0);
  for (const auto& check : verify_f_identities(ab, da, 4)) CHECK(check.holds);

  // Q = 0: f_{r,E}(x_a) collapses to p_r(0)
  for (const auto& check : verify_f_identities(da, da, 3)) CHECK(check.holds);
  const GradedPolynomial f3 = f_poly(3, da).poly;
  CHECK(f3.substitute(2, xa()).is_zero());

  // stability under adding a trivial line
  const FormalBundle a1(kAmbient, {"a"}, 1);
  const FormalBundle a2(kAmbient, {"a"}, 2);
  for (int r = 0; r <= 4; ++r)
    CHECK(f_poly(r, a1).poly == f_poly(r, a2).poly);

  CHECK_THROWS_AS(verify_f_identities(ab, ab, 3), ShapeError);
  CHECK_THROWS_AS(
      verify_f_identities(ab, FormalBundle(kAmbient, {"a"}, 1), 3), ShapeError);
  // D must actually be a summand
  CHECK_THROWS_AS(
      verify_f_identities(FormalBundle(kAmbient, {"b"}, 0), da, 3), ShapeError);
}

TEST_CASE("whitney sum formula over small bundles") {
  const VarSet ambient = root_varset({"a", "b", "c", "d"});
  const std::vector<std::vector<std::string>> multisets = {
      {}, {"a"}, {"b"}, {"a", "a"}, {"a", "b"}, {"c", "d"}};
  for (const auto& re : multisets)
    for (const auto& rf : multisets)
      for (long le = 0; le <= 1; ++le)
        for (long lf = 0; lf <= 1; ++lf) {
          const FormalBundle e(ambient, re, le), f(ambient, rf, lf);
          const FormalBundle sum = direct_sum(e, f);
          for (int k = 0; k <= 4; ++k) {
            GradedPolynomial rhs(ambient);
            for (int i = 0; i <= k; ++i)
              rhs += pontryagin(i, e) * pontryagin(k - i, f);
            CHECK(pontryagin(k, sum) == rhs);
          }
        }
}

TEST_CASE("serialization is canonical") {
  CHECK(FormalBundle(kAmbient, {"b", "a"}, 2).to_string() == "U(a)+U(b)+2*1");
  CHECK(FormalBundle(kAmbient, {"a"}, 1).to_string() == "U(a)+1");
  CHECK(FormalBundle::zero(kAmbient).to_string() == "0");
  CHECK(FormalBundle(kAmbient, {}, 1).to_string() == "1");
  CHECK(FormalBundle(kAmbient, {"a", "a"}, 0).to_string() == "U(a)+U(a)");
}

TEST_CASE("bundle suite passes") { CHECK(all_pass(verify_bundle_suite())); }
