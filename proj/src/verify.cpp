#include <pontcalc/verify.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace pontcalc {

namespace {

std::string range_string(int lo, int hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

using Params = std::vector<std::pair<std::string, std::string>>;

LemmaReport make_report(std::string id, Params params,
                        std::string weights = "-") {
  LemmaReport r;
  r.lemma_id = std::move(id);
  r.parameters = std::move(params);
  r.weights_checked = std::move(weights);
  return r;
}

void fail(LemmaReport& r, const std::string& where,
          const std::optional<std::string>& witness = std::nullopt) {
  if (!r.verdict) return;
  r.verdict = false;
  r.first_failure = where;
  r.witness = witness;
}

GradedPolynomial permute_variables(const GradedPolynomial& f,
                                   const std::vector<std::size_t>& perm) {
  GradedPolynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    Monomial image(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) image[perm[i]] = m[i];
    out.add_term(std::move(image), c);
  }
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

}  // namespace

std::vector<LemmaReport> verify_segre_suite() {
  constexpr int r_max = 4, j_max = 12;
  std::vector<LemmaReport> out;

  {
    auto rep = make_report("segre.convolution_identity",
                           {{"r", range_string(1, r_max)},
                            {"j", range_string(1, j_max)}});
    for (int r = 1; r <= r_max && rep.verdict; ++r) {
      SegreTable table(r);
      const VarSet& vars = table.vars();
      for (int j = 1; j <= j_max; ++j) {
        GradedPolynomial acc = table.at(j);
        for (int i = 1; i <= r && i <= j; ++i)
          acc += GradedPolynomial::variable(vars, static_cast<std::size_t>(i - 1)) *
                 table.at(j - i);
        if (!acc.is_zero()) {
          fail(rep, "r=" + std::to_string(r) + " j=" + std::to_string(j),
               acc.to_string());
          break;
        }
      }
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("segre.matches_series_inverse",
                           {{"r", range_string(1, r_max)},
                            {"j", range_string(0, j_max)}});
    for (int r = 1; r <= r_max && rep.verdict; ++r) {
      SegreTable table(r);
      const VarSet& vars = table.vars();
      GradedPolynomial f = GradedPolynomial::one(vars);
      for (int i = 0; i < r; ++i)
        f += GradedPolynomial::variable(vars, static_cast<std::size_t>(i));
      auto inv = series_inverse_truncated(f, j_max);
      for (int j = 0; j <= j_max; ++j) {
        if (table.at(j) != inv[static_cast<std::size_t>(j)]) {
          fail(rep, "r=" + std::to_string(r) + " j=" + std::to_string(j),
               inv[static_cast<std::size_t>(j)].to_string());
          break;
        }
      }
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("segre.homogeneous_of_weight_j",
                           {{"r", range_string(1, r_max)},
                            {"j", range_string(0, j_max)}});
    for (int r = 1; r <= r_max && rep.verdict; ++r) {
      SegreTable table(r);
      for (int j = 0; j <= j_max; ++j) {
        const GradedPolynomial& s = table.at(j);
        if (s.is_zero() || (s.is_homogeneous() && s.homogeneous_weight() == j))
          continue;
        fail(rep, "r=" + std::to_string(r) + " j=" + std::to_string(j),
             s.to_string());
        break;
      }
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("segre.boundary_values",
                           {{"r", range_string(1, r_max)}});
    for (int r = 1; r <= r_max && rep.verdict; ++r) {
      SegreTable table(r);
      if (table.at(0) != GradedPolynomial::one(table.vars()))
        fail(rep, "r=" + std::to_string(r) + " j=0");
      for (int j = -3; j < 0; ++j)
        if (!table.at(j).is_zero())
          fail(rep, "r=" + std::to_string(r) + " j=" + std::to_string(j));
    }
    out.push_back(std::move(rep));
  }

  return out;
}

std::vector<LemmaReport> verify_ideal_suite(int max_weight) {
  std::vector<LemmaReport> out;
  const std::string weights = range_string(0, max_weight);

  {
    auto rep = make_report("ideal.monotone_in_level",
                           {{"r", range_string(1, 3)}, {"d", range_string(0, 6)}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int d = 0; d <= 6 && rep.verdict; ++d) {
        auto c = ideal_contains_ideal(IdealExpr::J(r, d + 1), IdealExpr::J(r, d),
                                      max_weight);
        if (!c.holds)
          fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d),
               c.weights[static_cast<std::size_t>(*c.first_failure)].witness);
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ideal.J_rk_inside_L_power_k",
                           {{"r", range_string(1, 3)}, {"k", range_string(1, 3)}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int k = 1; k <= 3 && rep.verdict; ++k) {
        auto c = ideal_contains_ideal(IdealExpr::J(r, r * k),
                                      pow(IdealExpr::L(r), k), max_weight);
        if (!c.holds)
          fail(rep, "r=" + std::to_string(r) + " k=" + std::to_string(k),
               c.weights[static_cast<std::size_t>(*c.first_failure)].witness);
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ideal.L_power_k_inside_J_n",
                           {{"r", range_string(1, 3)},
                            {"n", range_string(1, 4)},
                            {"search_bound", "12"}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int n = 1; n <= 4 && rep.verdict; ++n) {
        auto k = minimal_k_for_Lk_in_Jn(n, r, 12, max_weight);
        if (!k)
          fail(rep, "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                        ": no k <= 12");
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ideal.L_power_s_J_d_inside_J_d_plus_1",
                           {{"r", range_string(1, 3)},
                            {"d", range_string(0, 3)},
                            {"search_bound", "12"}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int d = 0; d <= 3 && rep.verdict; ++d) {
        auto s = minimal_s_for_LsJd_in_Jd1(d, r, 12, max_weight);
        if (!s)
          fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d) +
                        ": no s <= 12");
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ideal.exact_sequence_in_r",
                           {{"r", range_string(1, 3)}, {"d", range_string(0, 4)}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int d = 0; d <= 4 && rep.verdict; ++d) {
        auto ex = verify_exact_sequence(r, d, max_weight);
        if (!ex.exact)
          fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d) +
                        " weight=" + std::to_string(*ex.first_failure));
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ideal.finite_generation",
                           {{"r", range_string(1, 3)},
                            {"d", range_string(1, 4)},
                            {"extra", range_string(1, 3)}},
                           weights);
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int d = 1; d <= 4 && rep.verdict; ++d)
        for (int extra = 1; extra <= 3 && rep.verdict; ++extra)
          for (int w = 0; w <= max_weight; ++w) {
            auto base = j_slice_with_extra_generators(r, d, 0, w);
            auto more = j_slice_with_extra_generators(r, d, extra, w);
            if (!lattice_equal<Int>(base.spanning, more.spanning)) {
              fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d) +
                            " extra=" + std::to_string(extra) +
                            " weight=" + std::to_string(w));
              break;
            }
          }
    out.push_back(std::move(rep));
  }

  return out;
}

namespace {

// Root multisets over the pool {a, b, c, d} used by the bundle suite.
std::vector<std::vector<std::string>> root_multisets(
    const std::vector<std::string>& pool, int max_size) {
  std::vector<std::vector<std::string>> out = {{}};
  std::vector<std::vector<std::string>> frontier = {{}};
  for (int step = 0; step < max_size; ++step) {
    std::vector<std::vector<std::string>> next;
    for (const auto& ms : frontier) {
      for (const auto& s : pool) {
        if (!ms.empty() && s < ms.back()) continue;  // keep sorted
        auto grown = ms;
        grown.push_back(s);
        next.push_back(grown);
        out.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<LemmaReport> verify_bundle_suite() {
  const std::vector<std::string> pool = {"a", "b", "c", "d"};
  const VarSet ambient = root_varset(pool);
  const auto multisets = root_multisets(pool, 4);

  std::vector<LemmaReport> out;

  {
    auto rep = make_report("bundle.whitney_sum",
                           {{"total_roots", "<=4"}, {"k", range_string(0, 4)}});
    for (const auto& re : multisets)
      for (const auto& rf : multisets) {
        if (re.size() + rf.size() > 4) continue;
        for (long le = 0; le <= 1; ++le)
          for (long lf = 0; lf <= 1; ++lf) {
            FormalBundle e(ambient, re, le), f(ambient, rf, lf);
            FormalBundle sum = direct_sum(e, f);
            for (int k = 0; k <= 4; ++k) {
              GradedPolynomial rhs(ambient);
              for (int i = 0; i <= k; ++i)
                rhs += pontryagin(i, e) * pontryagin(k - i, f);
              if (pontryagin(k, sum) != rhs) {
                fail(rep, "E=" + e.to_string() + " F=" + f.to_string() +
                              " k=" + std::to_string(k),
                     rhs.to_string());
              }
            }
            if (!rep.verdict) break;
          }
        if (!rep.verdict) break;
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.sigma_k_formula",
                           {{"roots", "distinct, <=4"}, {"k", range_string(0, 5)}});
    std::vector<std::vector<std::string>> subsets = {
        {}, {"a"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}};
    for (const auto& roots : subsets)
      for (long lines = 0; lines <= 2; ++lines) {
        FormalBundle e(ambient, roots, lines);
        std::vector<std::size_t> idx = e.root_indices();
        for (int k = 0; k <= 5; ++k)
          if (pontryagin(k, e) != elementary_symmetric(ambient, idx, k))
            fail(rep, "E=" + e.to_string() + " k=" + std::to_string(k));
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.trivial_bundle_vanishing",
                           {{"lines", range_string(0, 5)}, {"k", range_string(1, 4)}});
    for (long lines = 0; lines <= 5; ++lines) {
      FormalBundle e(ambient, {}, lines);
      for (int k = 1; k <= 4; ++k)
        if (!pontryagin(k, e).is_zero())
          fail(rep, "lines=" + std::to_string(lines) + " k=" + std::to_string(k));
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.vanishing_above_half_rank",
                           {{"roots", "<=2 of {a,b}"}, {"k", "rank/2+1..rank/2+4"}});
    for (const auto& roots : root_multisets({"a", "b"}, 2))
      for (long lines = 0; lines <= 2; ++lines) {
        FormalBundle e(ambient, roots, lines);
        const int half = static_cast<int>(e.rank() / 2);
        for (int k = half + 1; k <= half + 4; ++k)
          if (!pontryagin(k, e).is_zero())
            fail(rep, "E=" + e.to_string() + " k=" + std::to_string(k));
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.symmetry_in_roots",
                           {{"roots", "{a,b,c}"}, {"k", range_string(0, 3)}});
    FormalBundle e(ambient, {"a", "b", "c"}, 0);
    // permutations of the three root variables (u and x_d fixed)
    std::vector<std::size_t> base = {0, 1, 2, 3, 4};
    std::vector<std::size_t> roots3 = {0, 1, 2};
    std::sort(roots3.begin(), roots3.end());
    do {
      std::vector<std::size_t> perm = base;
      for (std::size_t i = 0; i < 3; ++i) perm[i] = roots3[i];
      for (int k = 0; k <= 3; ++k) {
        GradedPolynomial p = pontryagin(k, e);
        if (permute_variables(p, perm) != p)
          fail(rep, "k=" + std::to_string(k), p.to_string());
      }
    } while (std::next_permutation(roots3.begin(), roots3.end()));
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.line_summand_invariance",
                           {{"roots", "<=2"}, {"k", range_string(0, 4)}});
    for (const auto& roots : root_multisets({"a", "b"}, 2))
      for (long lines = 0; lines <= 2; ++lines) {
        FormalBundle e(ambient, roots, lines);
        FormalBundle e1(ambient, roots, lines + 1);
        for (int k = 0; k <= 4; ++k)
          if (pontryagin(k, e) != pontryagin(k, e1))
            fail(rep, "E=" + e.to_string() + " k=" + std::to_string(k));
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.dual_is_involutive_identity", {});
    for (const auto& roots : root_multisets({"a", "b"}, 2))
      for (long lines = 0; lines <= 2; ++lines) {
        FormalBundle e(ambient, roots, lines);
        if (dual(e) != e || dual(dual(e)) != e)
          fail(rep, "E=" + e.to_string());
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.f_recursion",
                           {{"roots", "<=3"}, {"r", range_string(0, 5)}});
    for (const auto& roots : root_multisets({"a", "b", "c"}, 3))
      for (long lines = 0; lines <= 1; ++lines) {
        FormalBundle e(ambient, roots, lines);
        GradedPolynomial u = GradedPolynomial::variable(ambient, e.u_index());
        for (int r = 0; r <= 5; ++r) {
          GradedPolynomial lhs = pontryagin(r, e) - f_poly(r, e).poly -
                                 u * f_poly(r - 1, e).poly;
          if (!lhs.is_zero())
            fail(rep, "E=" + e.to_string() + " r=" + std::to_string(r),
                 lhs.to_string());
        }
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.f_identities",
                           {{"r", range_string(0, 5)}});
    const std::vector<std::pair<FormalBundle, FormalBundle>> cases = {
        {FormalBundle(ambient, {"a", "b"}, 0), FormalBundle(ambient, {"a"}, 0)},
        {FormalBundle(ambient, {"a"}, 0), FormalBundle(ambient, {"a"}, 0)},
        {FormalBundle(ambient, {"a", "b", "c"}, 1),
         FormalBundle(ambient, {"b"}, 0)},
        {FormalBundle(ambient, {"a", "a"}, 2), FormalBundle(ambient, {"a"}, 0)},
    };
    for (const auto& [e, d] : cases)
      for (const auto& check : verify_f_identities(e, d, 5))
        if (!check.holds)
          fail(rep, "E=" + e.to_string() + " D=" + d.to_string() + ": " +
                        check.identity + " at r=" +
                        std::to_string(*check.failing_r));
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("bundle.top_class_multiplicative",
                           {{"ranks", "even, <=2 roots each"}});
    for (const auto& re : root_multisets({"a", "b"}, 2))
      for (const auto& rf : root_multisets({"c", "d"}, 2)) {
        for (long le = 0; le <= 2; le += 2)
          for (long lf = 0; lf <= 2; lf += 2) {
            FormalBundle e(ambient, re, le), f(ambient, rf, lf);
            if (top_class(direct_sum(e, f)) != top_class(e) * top_class(f))
              fail(rep, "E=" + e.to_string() + " F=" + f.to_string());
          }
      }
    out.push_back(std::move(rep));
  }

  return out;
}

std::vector<LemmaReport> verify_ring_suite(int max_weight) {
  std::vector<LemmaReport> out;

  {
    auto rep = make_report("ring.gr2_matches_gr", {{"s", range_string(2, 13)}});
    for (int s = 2; s <= 13 && rep.verdict; ++s) {
      Gr2Presentation g2 = gr2_ring(s);
      GrassmannPresentation g = gr_ring(2, s);
      for (int w = 0; w <= g2.d() + 1; ++w)
        if (g2.free_rank(w) != g.free_rank(w))
          fail(rep, "s=" + std::to_string(s) + " weight=" + std::to_string(w));
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.gr2_nilpotency_degree",
                           {{"s", range_string(0, 13)}});
    for (int s = 0; s <= 13 && rep.verdict; ++s) {
      Gr2Presentation g2 = gr2_ring(s);
      const int d = g2.d();
      if (!g2.power_vanishes(d)) fail(rep, "s=" + std::to_string(s) + ": u^d");
      if (d >= 1 && g2.power_vanishes(d - 1))
        fail(rep, "s=" + std::to_string(s) + ": u^(d-1)");
      if (static_cast<int>(g2.basis_strings().size()) != d)
        fail(rep, "s=" + std::to_string(s) + ": basis size");
      if (s >= 2) {
        // cross-check against the relation-ideal reduction
        GrassmannPresentation g = gr_ring(2, s);
        GradedPolynomial p1 = GradedPolynomial::variable(g.vars(), 0);
        if (!g.normal_form(pow(p1, d)).is_zero())
          fail(rep, "s=" + std::to_string(s) + ": p1^d not reduced to 0");
        if (d >= 1 && g.normal_form(pow(p1, d - 1)).is_zero())
          fail(rep, "s=" + std::to_string(s) + ": p1^(d-1) reduced to 0");
      }
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.gr46_presentation",
                           {{"n", "4"}, {"s", "6"}});
    GrassmannPresentation g = gr_ring(4, 6);
    RingRank rr = ring_rank(g);
    if (rr.total != 3) fail(rep, "total rank");
    if (rr.torsion_observed) fail(rep, "torsion");
    const std::vector<std::string> expect = {"1", "p1", "p1^2"};
    for (int w = 0; w <= 2; ++w) {
      auto basis = g.basis_at(w);
      if (basis.size() != 1 ||
          GradedPolynomial::term(g.vars(), basis[0], Int(1)).to_string() !=
              expect[static_cast<std::size_t>(w)])
        fail(rep, "basis at weight " + std::to_string(w));
    }
    GradedPolynomial p1 = GradedPolynomial::variable(g.vars(), 0);
    GradedPolynomial p2 = GradedPolynomial::variable(g.vars(), 1);
    if (g.normal_form(p2) != pow(p1, 2)) fail(rep, "p2 reduction");
    if (!g.normal_form(pow(p1, 3)).is_zero()) fail(rep, "p1^3 reduction");
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.rank_pattern_binomial",
                           {{"r", range_string(0, 3)}, {"d", range_string(0, 6)},
                            {"n_s", "all valid parities"}});
    for (int r = 0; r <= 3 && rep.verdict; ++r)
      for (int d = r; d <= 6 && rep.verdict; ++d)
        for (int n : {2 * r, 2 * r + 1})
          for (int s : {2 * d, 2 * d + 1}) {
            if (n % 2 == 1 && s % 2 == 0) continue;
            if (n > s) continue;
            GrassmannPresentation g = gr_ring(n, s);
            RingRank rr = ring_rank(g);
            if (Int(rr.total) != binomial(d, r))
              fail(rep, "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                            ": total " + std::to_string(rr.total));
            if (rr.torsion_observed)
              fail(rep, "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                            ": torsion observed");
          }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.parity_hypothesis_enforced",
                           {{"cases", "(1,2) (3,4) (5,8)"}});
    for (auto [n, s] : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 8}}) {
      bool threw = false;
      try {
        gr_ring(n, s);
      } catch (const ParityError&) {
        threw = true;
      }
      if (!threw)
        fail(rep, "gr(" + std::to_string(n) + "," + std::to_string(s) +
                      ") accepted");
    }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.quotient_class_vanishing",
                           {{"r", range_string(1, 3)}, {"d", range_string(1, 5)}});
    for (int r = 1; r <= 3 && rep.verdict; ++r)
      for (int d = r; d <= 5 && rep.verdict; ++d) {
        GrassmannPresentation g = gr_ring(2 * r, 2 * d);
        for (int k = g.relation_level(); k <= g.relation_level() + 3; ++k) {
          GradedPolynomial q = tautological_quotient_class(g, k);
          if (!q.is_zero())
            fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d) +
                          " k=" + std::to_string(k),
                 q.to_string());
        }
      }
    out.push_back(std::move(rep));
  }

  {
    auto rep = make_report("ring.odd_even_collapse",
                           {{"r", range_string(0, 3)}, {"d", range_string(0, 6)}});
    for (int r = 0; r <= 3 && rep.verdict; ++r)
      for (int d = r; d <= 6 && rep.verdict; ++d) {
        RingRank odd = ring_rank(gr_ring(2 * r + 1, 2 * d + 1));
        RingRank even = ring_rank(gr_ring(2 * r, 2 * d));
        if (odd.per_weight != even.per_weight)
          fail(rep, "r=" + std::to_string(r) + " d=" + std::to_string(d));
      }
    out.push_back(std::move(rep));
  }

  {
    const int cutoff = std::min(max_weight, 6);
    auto rep = make_report("ring.bgl_stabilization",
                           {{"r", range_string(0, 2)},
                            {"cutoff", range_string(0, cutoff)}},
                           range_string(0, cutoff));
    for (int r = 0; r <= 2 && rep.verdict; ++r)
      for (int n = 0; n <= cutoff && rep.verdict; ++n) {
        TruncatedSeriesRing ring(r, n);
        StabilizationReport stab = stabilization_check(r, n, 1, n + 2);
        if (!stab.least_agreeing_d)
          fail(rep, "r=" + std::to_string(r) + " cutoff=" + std::to_string(n) +
                        ": no agreement");
        else if (*stab.least_agreeing_d != ring.stabilization_certificate())
          fail(rep, "r=" + std::to_string(r) + " cutoff=" + std::to_string(n) +
                        ": certificate " +
                        std::to_string(ring.stabilization_certificate()) +
                        " vs observed " +
                        std::to_string(*stab.least_agreeing_d));
      }
    out.push_back(std::move(rep));
  }

  {
    const int cutoff = std::min(max_weight, 6);
    auto rep = make_report("ring.bgl_pair_rank_convolution",
                           {{"r", range_string(0, 2)},
                            {"cutoff", std::to_string(cutoff)}},
                           range_string(0, cutoff));
    for (int r = 0; r <= 2 && rep.verdict; ++r) {
      auto single = TruncatedSeriesRing(r, cutoff).per_weight_ranks();
      auto pair = DoubleSeriesRing(r, cutoff).per_weight_ranks();
      for (int w = 0; w <= cutoff; ++w) {
        Eigen::Index conv = 0;
        for (int i = 0; i <= w; ++i)
          conv += single[static_cast<std::size_t>(i)] *
                  single[static_cast<std::size_t>(w - i)];
        if (pair[static_cast<std::size_t>(w)] != conv)
          fail(rep, "r=" + std::to_string(r) + " weight=" + std::to_string(w));
      }
    }
    out.push_back(std::move(rep));
  }

  {
    const int cutoff = std::min(max_weight, 6);
    auto rep = make_report("ring.truncated_product_associative",
                           {{"r", range_string(1, 2)},
                            {"cutoff", std::to_string(cutoff)},
                            {"samples", "20"}});
    std::mt19937 rng(20240811);
    for (int r = 1; r <= 2 && rep.verdict; ++r) {
      TruncatedSeriesRing ring(r, cutoff);
      const VarSet& vars = ring.vars();
      auto random_poly = [&]() {
        GradedPolynomial p(vars);
        for (int w = 0; w <= cutoff; ++w) {
          for (const Monomial& m : monomials_of_weight(vars, w)) {
            int c = static_cast<int>(rng() % 7) - 3;
            p.add_term(m, Int(c));
          }
        }
        return p;
      };
      for (int t = 0; t < 20; ++t) {
        GradedPolynomial a = random_poly(), b = random_poly(), c = random_poly();
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
          fail(rep, "r=" + std::to_string(r) + " sample=" + std::to_string(t));
        if (ring.mul(a, b) != ring.mul(b, a))
          fail(rep, "r=" + std::to_string(r) + " commutativity sample=" +
                        std::to_string(t));
      }
    }
    out.push_back(std::move(rep));
  }

  return out;
}

std::vector<LemmaReport> verify_all(int max_weight) {
  std::vector<LemmaReport> all;
  for (auto* suite : {&verify_segre_suite, &verify_bundle_suite}) {
    auto part = (*suite)();
    all.insert(all.end(), part.begin(), part.end());
  }
  auto ideals = verify_ideal_suite(max_weight);
  all.insert(all.end(), ideals.begin(), ideals.end());
  auto rings = verify_ring_suite(max_weight);
  all.insert(all.end(), rings.begin(), rings.end());
  return all;
}

}  // namespace pontcalc
