#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pontcalc/grassmann.hpp>
#include <pontcalc/verify.hpp>

#include <atomic>
#include <random>
#include <thread>

using namespace pontcalc;

TEST_CASE("gr2 presentations") {
  {
    const Gr2Presentation g = gr2_ring(4);
    CHECK(g.d() == 2);
    CHECK(g.total_rank() == 2);
    CHECK(g.basis_strings() == std::vector<std::string>{"1", "u"});
    CHECK(g.relation() == "u^2");
    CHECK(g.free_rank(0) == 1);
    CHECK(g.free_rank(1) == 1);
    CHECK(g.free_rank(2) == 0);
  }
  // s = 2d and s = 2d+1 present identically
  CHECK(gr2_ring(5).d() == gr2_ring(4).d());
  CHECK(gr2_ring(5).total_rank() == gr2_ring(4).total_rank());
  {
    // d = 0: the relation u^0 = 1 collapses the ring to zero
    const Gr2Presentation g = gr2_ring(1);
    CHECK(g.d() == 0);
    CHECK(g.total_rank() == 0);
    CHECK(g.basis_strings().empty());
    CHECK(g.power_vanishes(0));
  }
  CHECK_THROWS_AS(gr2_ring(-1), RangeError);
}

TEST_CASE("gr presentation for Gr(4,6)") {
  const GrassmannPresentation g = gr_ring(4, 6);
  CHECK(g.r() == 2);
  CHECK(g.d() == 3);
  CHECK(g.relation_level() == 2);
  CHECK(g.top_weight() == 2);

  const GradedPolynomial p1 = GradedPolynomial::variable(g.vars(), 0);
  const GradedPolynomial p2 = GradedPolynomial::variable(g.vars(), 1);

  CHECK(g.normal_form(p2) == pow(p1, 2));
  CHECK(g.normal_form(pow(p1, 3)).is_zero());
  CHECK(g.normal_form(GradedPolynomial::zero(g.vars())).is_zero());

  // coordinates on the degreewise basis
  const IntVector c2 = g.coordinates(p2);
  REQUIRE(c2.cols() == 1);
  CHECK(c2(0) == Int(1));
  CHECK(g.coordinates(pow(p1, 3)).cols() == 0);

  const RingRank rr = ring_rank(g);
  CHECK(rr.total == 3);
  CHECK_FALSE(rr.torsion_observed);
  CHECK(rr.per_weight.at(0) == 1);
  CHECK(rr.per_weight.at(1) == 1);
  CHECK(rr.per_weight.at(2) == 1);

  CHECK(g.basis_at(0).size() == 1);
  CHECK(GradedPolynomial::term(g.vars(), g.basis_at(2)[0], Int(1)).to_string() ==
        "p1^2");
  // beyond the top weight everything reduces to zero
  for (int w = 3; w <= 6; ++w) CHECK(g.free_rank(w) == 0);

  CHECK_THROWS_AS(g.normal_form(GradedPolynomial::one(g.vars()) + p1),
                  HomogeneityError);
}

TEST_CASE("gr parameter validation") {
  CHECK_THROWS_AS(gr_ring(3, 4), ParityError);
  CHECK_THROWS_AS(gr_ring(1, 2), ParityError);
  CHECK_THROWS_AS(gr_ring(4, 3), RangeError);
  CHECK_THROWS_AS(gr_ring(-1, 3), RangeError);
  CHECK_NOTHROW(gr_ring(3, 3));
  CHECK_NOTHROW(gr_ring(2, 5));
}

TEST_CASE("degenerate presentations") {
  // no generators: the base ring
  CHECK(ring_rank(gr_ring(1, 3)).total == 1);
  CHECK(gr_ring(1, 3).r() == 0);
  // d = r: the relations start at level one, leaving the base ring
  CHECK(ring_rank(gr_ring(4, 4)).total == 1);
  CHECK(ring_rank(gr_ring(0, 0)).total == 1);
}

TEST_CASE("tautological quotient classes") {
  const GrassmannPresentation g = gr_ring(4, 6);
  CHECK(tautological_quotient_class(g, 1).to_string() == "-p1");
  CHECK(tautological_quotient_class(g, 2).is_zero());
  CHECK(tautological_quotient_class(g, 0) ==
        GradedPolynomial::one(g.vars()));
  for (int k = g.relation_level(); k <= g.relation_level() + 3; ++k)
    CHECK(tautological_quotient_class(g, k).is_zero());
  CHECK_THROWS_AS(tautological_quotient_class(g, -1), RangeError);
}

TEST_CASE("gr2 and gr(2,s) agree") {
  for (int s = 2; s <= 13; ++s) {
    const Gr2Presentation g2 = gr2_ring(s);
    const GrassmannPresentation g = gr_ring(2, s);
    for (int w = 0; w <= g2.d() + 2; ++w)
      CHECK(g2.free_rank(w) == g.free_rank(w));
    // nilpotency degree of the generator
    const GradedPolynomial p1 = GradedPolynomial::variable(g.vars(), 0);
    CHECK(g.normal_form(pow(p1, g2.d())).is_zero());
    if (g2.d() >= 1) CHECK_FALSE(g.normal_form(pow(p1, g2.d() - 1)).is_zero());
  }
}

TEST_CASE("total rank matches the binomial pattern") {
  for (int r = 0; r <= 3; ++r)
    for (int d = r; d <= 6; ++d) {
      const RingRank rr = ring_rank(gr_ring(2 * r, 2 * d));
      long binom = 1;
      for (int i = 0; i < r; ++i) binom = binom * (d - i) / (i + 1);
      CHECK(rr.total == binom);
      CHECK_FALSE(rr.torsion_observed);
    }
}

TEST_CASE("basis size agrees with the smith-form rank route") {
  for (int r = 1; r <= 3; ++r)
    for (int d = r; d <= 6; ++d) {
      const GrassmannPresentation g = gr_ring(2 * r, 2 * d);
      for (int w = 0; w <= g.top_weight() + 2; ++w) {
        const QuotientRank q = quotient_rank_by_weight(r, g.relation_level(), w);
        CHECK(g.free_rank(w) == q.free_rank);
        CHECK(g.torsion_at(w) == q.torsion);
        // the kept monomials reduce to themselves: they are genuine coset
        // representatives, independent in the quotient
        for (const Monomial& m : g.basis_at(w)) {
          const GradedPolynomial mono =
              GradedPolynomial::term(g.vars(), m, Int(1));
          CHECK(g.normal_form(mono) == mono);
        }
      }
    }
}

TEST_CASE("odd and even parameters collapse to the same presentation") {
  for (int r = 0; r <= 3; ++r)
    for (int d = r; d <= 6; ++d) {
      const RingRank odd = ring_rank(gr_ring(2 * r + 1, 2 * d + 1));
      const RingRank even = ring_rank(gr_ring(2 * r, 2 * d));
      CHECK(odd.per_weight == even.per_weight);
      CHECK(odd.total == even.total);
    }
}

TEST_CASE("bgl truncations") {
  {
    const TruncatedSeriesRing ring = bgl_ring(2, 3);
    CHECK(ring.r() == 1);
    CHECK(ring.per_weight_ranks() ==
          std::vector<Eigen::Index>{1, 1, 1, 1});
    CHECK(ring.stabilization_certificate() == 4);
  }
  {
    const TruncatedSeriesRing ring = bgl_ring(5, 2);
    CHECK(ring.r() == 2);
    CHECK(ring.per_weight_ranks() == std::vector<Eigen::Index>{1, 1, 2});
  }
  {
    const TruncatedSeriesRing ring = bgl_ring(0, 4);
    CHECK(ring.r() == 0);
    CHECK(ring.per_weight_ranks() ==
          std::vector<Eigen::Index>{1, 0, 0, 0, 0});
  }
  // multiplication truncates at the cutoff
  const TruncatedSeriesRing ring = bgl_ring(2, 3);
  const GradedPolynomial p1 = GradedPolynomial::variable(ring.vars(), 0);
  CHECK(ring.mul(pow(p1, 2), pow(p1, 2)).is_zero());
  CHECK(ring.mul(p1, pow(p1, 2)) == pow(p1, 3));
}

TEST_CASE("bgl pair ring") {
  {
    const DoubleSeriesRing ring = bgl_pair_ring(2, 2);
    CHECK(ring.per_weight_ranks() == std::vector<Eigen::Index>{1, 2, 3});
    CHECK(ring.vars().size() == 2);
  }
  {
    const DoubleSeriesRing ring = bgl_pair_ring(0, 3);
    CHECK(ring.per_weight_ranks() ==
          std::vector<Eigen::Index>{1, 0, 0, 0});
  }
  {
    const DoubleSeriesRing ring = bgl_pair_ring(3, 1);
    CHECK(ring.per_weight_ranks() == std::vector<Eigen::Index>{1, 2});
  }
  // rank sequence is the convolution square of the single ring's sequence
  for (int n = 0; n <= 5; ++n) {
    const auto single = bgl_ring(n, 6).per_weight_ranks();
    const auto pair = bgl_pair_ring(n, 6).per_weight_ranks();
    for (int w = 0; w <= 6; ++w) {
      Eigen::Index conv = 0;
      for (int i = 0; i <= w; ++i)
        conv += single[static_cast<std::size_t>(i)] *
                single[static_cast<std::size_t>(w - i)];
      CHECK(pair[static_cast<std::size_t>(w)] == conv);
    }
  }
}

TEST_CASE("stabilization of the quotient tower") {
  {
    const StabilizationReport rep = stabilization_check(1, 3, 1, 6);
    CHECK(rep.least_agreeing_d == 4);
    for (const auto& row : rep.rows)
      CHECK(row.agrees == (row.d >= 4));
  }
  {
    const StabilizationReport rep = stabilization_check(2, 2, 1, 6);
    CHECK(rep.least_agreeing_d == 3);
  }
  {
    // weight zero: every positive level already agrees
    const StabilizationReport rep = stabilization_check(2, 0, 1, 4);
    CHECK(rep.least_agreeing_d == 1);
  }
}

TEST_CASE("normal form is linear, idempotent and a section of the quotient") {
  std::mt19937 rng(414);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const auto& [n, s] : std::vector<std::pair<int, int>>{
           {4, 6}, {4, 8}, {6, 12}, {4, 10}}) {
    const GrassmannPresentation g = gr_ring(n, s);
    const IdealExpr relations = IdealExpr::J(g.r(), g.relation_level());
    for (int w = 1; w <= g.top_weight() + 1; ++w) {
      const auto monos = monomials_of_weight(g.vars(), w);
      auto random_homogeneous = [&] {
        GradedPolynomial p(g.vars());
        for (const Monomial& m : monos) p.add_term(m, Int(coeff(rng)));
        return p;
      };
      for (int trial = 0; trial < 4; ++trial) {
        const GradedPolynomial f = random_homogeneous();
        const GradedPolynomial h = random_homogeneous();
        const GradedPolynomial nf = g.normal_form(f);
        CHECK(g.normal_form(nf) == nf);
        CHECK(g.normal_form(f + h) == nf + g.normal_form(h));
        // the representative differs from the input by a relation
        CHECK(ideal_contains_poly(relations, f - nf));
        CHECK((nf.is_zero() == ideal_contains_poly(relations, f)));
      }
    }
  }
}

TEST_CASE("presentation caches fill safely under concurrent use") {
  const GrassmannPresentation g = gr_ring(6, 12);
  const GrassmannPresentation reference = gr_ring(6, 12);
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 6; ++t)
    workers.emplace_back([&, t] {
      for (int w = t % 3; w <= g.top_weight(); ++w) {
        if (g.free_rank(w) != reference.free_rank(w)) ok = false;
        if (g.basis_at(w) != reference.basis_at(w)) ok = false;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(ok.load());
}

TEST_CASE("ring suite passes") { CHECK(all_pass(verify_ring_suite(10))); }
