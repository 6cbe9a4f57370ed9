#pragma once

#include <pontcalc/intlinalg.hpp>
#include <pontcalc/segre.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pontcalc {

enum class MembershipMode { integer_lattice, rational_span };

inline const char* to_string(MembershipMode m) {
  return m == MembershipMode::integer_lattice ? "integer" : "rational";
}

// Symbolic ideal of B[p_1..p_r] built from the leaves J(d) (generated by the
// s_j with j >= d; the whole ring for d <= 0) and L = (p_1, ..., p_r), closed
// under power, product and sum. Evaluated degreewise to integer lattices.
class IdealExpr {
public:
  static IdealExpr J(int r, int d);
  static IdealExpr L(int r);
  static IdealExpr full(int r) { return J(r, 0); }

  friend IdealExpr pow(const IdealExpr& base, int k);  // k >= 1
  friend IdealExpr operator*(const IdealExpr& a, const IdealExpr& b);
  friend IdealExpr operator+(const IdealExpr& a, const IdealExpr& b);

  int ambient_r() const { return r_; }
  const VarSet& vars() const { return vars_; }
  std::string to_string() const;

  // Canonical spanning rows (Hermite basis) of the weight-w component, for
  // every weight 0..max_weight. Columns follow monomials_of_weight.
  std::vector<IntMatrix> slice_family(int max_weight) const;

  struct Node;  // defined in ideal.cpp
  using NodePtr = std::shared_ptr<const Node>;

private:
  IdealExpr(int r, NodePtr node);

  int r_;
  VarSet vars_;
  NodePtr node_;
};

struct DegreeSlice {
  int weight = 0;
  IntMatrix spanning;  // canonical Hermite rows over the weight-w monomials
};

DegreeSlice ideal_degree_slice(const IdealExpr& ideal, int weight);

// Degreewise slice of J(d) built from the generators s_d .. s_{d+r-1+extra};
// exposes the finite-generation check (extra generators add nothing).
DegreeSlice j_slice_with_extra_generators(int r, int d, int extra, int weight);

bool ideal_contains_poly(
    const IdealExpr& ideal, const GradedPolynomial& f,
    MembershipMode mode = MembershipMode::integer_lattice);

struct WeightCheck {
  int weight = 0;
  bool holds = true;
  std::optional<std::string> witness;  // offending polynomial, canonical text
};

struct ContainmentReport {
  int max_weight = 0;
  MembershipMode mode = MembershipMode::integer_lattice;
  bool holds = true;  // conjunction over all checked weights
  std::vector<WeightCheck> weights;
  std::optional<int> first_failure;
};

ContainmentReport ideal_contains_ideal(
    const IdealExpr& a, const IdealExpr& b, int max_weight,
    MembershipMode mode = MembershipMode::integer_lattice);

// Smallest k <= search_bound with L^k inside J(n) at all weights
// <= weight_bound (k = 0 meaning the unit ideal), or absent.
std::optional<int> minimal_k_for_Lk_in_Jn(int n, int r, int search_bound = 12,
                                          int weight_bound = 10);

// Smallest s <= search_bound with L^s * J(d) inside J(d+1) at all weights
// <= weight_bound, or absent.
std::optional<int> minimal_s_for_LsJd_in_Jd1(int d, int r,
                                             int search_bound = 12,
                                             int weight_bound = 10);

// Degreewise exactness of
//   B[p_1..p_r]/J(d-1) --*p_r--> B[p_1..p_r]/J(d) --p_r->0--> B[p_1..p_{r-1}]/J(d) --> 0
// checked through the given weight: well-definedness of the first map,
// kernel = image in the middle, and surjectivity on the right.
struct ExactnessWeight {
  int weight = 0;
  bool well_defined = true;
  bool middle_exact = true;
  bool surjective = true;
  bool ok() const { return well_defined && middle_exact && surjective; }
};

struct ExactnessReport {
  int r = 0, d = 0, max_weight = 0;
  bool exact = true;
  std::vector<ExactnessWeight> weights;
  std::optional<int> first_failure;
};

ExactnessReport verify_exact_sequence(int r, int d, int max_weight);

// The weight-w component of B[p_1..p_r]/J(d) as a finitely generated abelian
// group: free rank plus torsion invariant factors.
struct QuotientRank {
  Eigen::Index free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

QuotientRank quotient_rank_by_weight(int r, int d, int w);

}  // namespace pontcalc
