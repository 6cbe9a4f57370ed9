#pragma once

#include <pontcalc/ideal.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace pontcalc {

// Presentation Z[u]/(u^d) with d = floor(s/2), the positive-weight part freely
// spanned by 1, u, ..., u^{d-1}. For d = 0 the relation u^0 = 1 collapses the
// whole ring to zero.
class Gr2Presentation {
public:
  explicit Gr2Presentation(int s);

  int s() const { return s_; }
  int d() const { return d_; }
  const VarSet& vars() const { return vars_; }

  Eigen::Index free_rank(int w) const {
    return (w >= 0 && w < d_) ? 1 : 0;
  }
  Eigen::Index total_rank() const { return d_; }
  // u^k is nonzero in the quotient exactly when k < d.
  bool power_vanishes(int k) const { return k >= d_; }
  std::string relation() const {
    return d_ == 0 ? "1" : (d_ == 1 ? "u" : "u^" + std::to_string(d_));
  }
  std::vector<std::string> basis_strings() const;

private:
  int s_, d_;
  VarSet vars_;
};

Gr2Presentation gr2_ring(int s);

// Presentation Z[p_1..p_r]/J(d-r+1) for the grassmannian of n-planes in
// s-space, n in {2r, 2r+1}, s in {2d, 2d+1}, with the parity hypothesis that
// an odd n forces an odd s.
class GrassmannPresentation {
public:
  GrassmannPresentation(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  int r() const { return r_; }
  int d() const { return d_; }
  const VarSet& vars() const { return vars_; }
  int relation_level() const { return d_ - r_ + 1; }
  // largest weight with a nonzero component
  int top_weight() const { return r_ == 0 ? 0 : r_ * (d_ - r_); }
  std::vector<GradedPolynomial> relation_generators() const {
    return segre_generators(r_, relation_level());
  }

  // Monomials whose images form a basis of the free part of the weight-w
  // component. Elimination greedily pivots on order-latest monomials with
  // unit coefficients, so early monomials (powers of p_1) are kept whenever
  // the relations allow it.
  std::vector<Monomial> basis_at(int w) const;
  Eigen::Index free_rank(int w) const;
  // Invariant factors > 1 of the weight-w relation lattice.
  std::vector<Int> torsion_at(int w) const;

  // Canonical representative of f modulo the relation ideal; zero exactly
  // when f lies in the ideal (integer lattice reduction).
  GradedPolynomial normal_form(const GradedPolynomial& f) const;

  // Coordinates of a homogeneous f on basis_at(its weight).
  IntVector coordinates(const GradedPolynomial& f) const;

private:
  struct WeightData {
    std::vector<Monomial> monomials;
    // relation rows with a +1 pivot and zeros at every other pivot column
    IntMatrix unit_rows;
    std::vector<Eigen::Index> unit_cols;  // pivot column per unit row
    // relation rows without a unit coefficient anywhere, Hermite-reduced over
    // reversed columns; empty in all torsion-free coordinate-basis cases
    IntMatrix leftover;
    std::vector<Eigen::Index> leftover_pivots;  // reversed column indices
    std::vector<Monomial> basis;
    std::vector<Int> torsion;  // Smith invariant factors > 1
  };

  const WeightData& data_at(int w) const;

  int n_, s_, r_, d_;
  VarSet vars_;
  mutable std::mutex mu_;
  mutable std::map<int, WeightData> cache_;  // write-once per weight
};

GrassmannPresentation gr_ring(int n, int s);

struct RingRank {
  std::map<int, Eigen::Index> per_weight;  // weights 0..top_weight
  Eigen::Index total = 0;
  bool torsion_observed = false;
};

RingRank ring_rank(const GrassmannPresentation& p);

// Normal form of s_k(p_1..p_r) in the presentation; zero for every k at or
// above the relation level.
GradedPolynomial tautological_quotient_class(const GrassmannPresentation& p,
                                             int k);

// Homogeneous power-series ring truncated at a weight cutoff, together with
// the stabilization certificate: the least d0 such that J(d) has empty slices
// at all weights <= cutoff for every d >= d0.
class TruncatedSeriesRing {
public:
  TruncatedSeriesRing(int r, int cutoff);

  int r() const { return r_; }
  int cutoff() const { return cutoff_; }
  const VarSet& vars() const { return vars_; }
  int stabilization_certificate() const { return d0_; }

  GradedPolynomial truncate(const GradedPolynomial& f) const;
  GradedPolynomial mul(const GradedPolynomial& a,
                       const GradedPolynomial& b) const;
  std::vector<Eigen::Index> per_weight_ranks() const;  // weights 0..cutoff

private:
  int r_, cutoff_, d0_;
  VarSet vars_;
};

TruncatedSeriesRing bgl_ring(int n, int cutoff);

// The same truncation over the doubled variable set p_1..p_r, p_1'..p_r'.
class DoubleSeriesRing {
public:
  DoubleSeriesRing(int r, int cutoff);

  int r() const { return r_; }
  int cutoff() const { return cutoff_; }
  const VarSet& vars() const { return vars_; }

  GradedPolynomial truncate(const GradedPolynomial& f) const;
  GradedPolynomial mul(const GradedPolynomial& a,
                       const GradedPolynomial& b) const;
  std::vector<Eigen::Index> per_weight_ranks() const;

private:
  int r_, cutoff_;
  VarSet vars_;
};

DoubleSeriesRing bgl_pair_ring(int n, int cutoff);

struct StabilizationRow {
  int d = 0;
  bool agrees = false;
  std::optional<int> first_mismatch_weight;
};

struct StabilizationReport {
  int r = 0, cutoff = 0, d_lo = 0, d_hi = 0;
  std::optional<int> least_agreeing_d;
  std::vector<StabilizationRow> rows;
};

// Compares per-weight ranks of B[p]/J(d) with the free polynomial ring at all
// weights <= cutoff, for each d in [d_lo, d_hi].
StabilizationReport stabilization_check(int r, int cutoff, int d_lo, int d_hi);

}  // namespace pontcalc
