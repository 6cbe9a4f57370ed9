#pragma once

#include <pontcalc/polynomial.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace pontcalc {

inline std::string root_variable_name(const std::string& symbol) {
  return "x_" + symbol;
}

// Ambient ring for bundle calculus: one weight-one variable x_<symbol> per
// distinct root symbol (sorted), plus the distinguished weight-one variable u
// in last position.
inline VarSet root_varset(std::vector<std::string> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  std::vector<std::string> names;
  names.reserve(symbols.size() + 1);
  for (const auto& s : symbols) names.push_back(root_variable_name(s));
  names.push_back("u");
  return VarSet(std::move(names), std::vector<int>(symbols.size() + 1, 1));
}

// Splitting-form vector bundle: a sorted multiset of rank-two summands named
// by root symbols, plus a count of trivial line summands. The root symbol a
// stands for the top class of its summand, realized as the variable x_a.
class FormalBundle {
public:
  FormalBundle(VarSet ambient, std::vector<std::string> roots, long lines)
      : ambient_(std::move(ambient)), roots_(std::move(roots)), lines_(lines) {
    if (lines_ < 0) throw ShapeError("negative number of line summands");
    std::sort(roots_.begin(), roots_.end());
    for (const auto& s : roots_)
      if (!ambient_.index_of(root_variable_name(s)))
        throw VarSetError("root symbol " + s + " missing from the ambient ring");
  }

  static FormalBundle zero(VarSet ambient) {
    return FormalBundle(std::move(ambient), {}, 0);
  }

  const VarSet& ambient() const { return ambient_; }
  const std::vector<std::string>& roots() const { return roots_; }
  long lines() const { return lines_; }
  long rank() const { return 2 * static_cast<long>(roots_.size()) + lines_; }

  std::size_t u_index() const { return ambient_.size() - 1; }

  std::vector<std::size_t> root_indices() const {
    std::vector<std::size_t> idx;
    idx.reserve(roots_.size());
    for (const auto& s : roots_)
      idx.push_back(*ambient_.index_of(root_variable_name(s)));
    return idx;
  }

  // Canonical serialized form, e.g. "U(a)+U(b)+2*1"; "0" for the zero bundle.
  std::string to_string() const {
    std::string out;
    for (const auto& s : roots_) {
      if (!out.empty()) out += "+";
      out += "U(" + s + ")";
    }
    if (lines_ > 0) {
      if (!out.empty()) out += "+";
      if (lines_ > 1) out += std::to_string(lines_) + "*";
      out += "1";
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const FormalBundle& a, const FormalBundle& b) {
    return a.ambient_ == b.ambient_ && a.roots_ == b.roots_ &&
           a.lines_ == b.lines_;
  }
  friend bool operator!=(const FormalBundle& a, const FormalBundle& b) {
    return !(a == b);
  }

private:
  VarSet ambient_;
  std::vector<std::string> roots_;  // sorted, with multiplicity
  long lines_;
};

inline FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f) {
  if (e.ambient() != f.ambient())
    throw VarSetError("direct sum: bundles over different ambient rings");
  std::vector<std::string> roots = e.roots();
  roots.insert(roots.end(), f.roots().begin(), f.roots().end());
  return FormalBundle(e.ambient(), std::move(roots), e.lines() + f.lines());
}

// Duals are represented identically: every class in scope agrees on a bundle
// and its dual.
inline FormalBundle dual(const FormalBundle& e) { return e; }

// Product of 1 + x_i over the root multiset; the weight-k piece is p_k.
class TotalClass {
public:
  explicit TotalClass(GradedPolynomial poly) : poly_(std::move(poly)) {}
  const GradedPolynomial& poly() const { return poly_; }
  GradedPolynomial piece(int k) const { return poly_.graded_piece(k); }

private:
  GradedPolynomial poly_;
};

inline TotalClass total_class(const FormalBundle& e) {
  GradedPolynomial prod = GradedPolynomial::one(e.ambient());
  for (std::size_t i : e.root_indices()) {
    GradedPolynomial factor = GradedPolynomial::one(e.ambient());
    factor += GradedPolynomial::variable(e.ambient(), i);
    prod = prod * factor;
  }
  return TotalClass(std::move(prod));
}

// p_k(E): the k-th elementary symmetric polynomial of the roots. Zero outside
// 0..#roots; line summands contribute nothing.
inline GradedPolynomial pontryagin(int k, const FormalBundle& e) {
  if (k < 0 || k > static_cast<int>(e.roots().size()))
    return GradedPolynomial::zero(e.ambient());
  if (k == 0) return GradedPolynomial::one(e.ambient());
  return total_class(e).piece(k);
}

// Top class of an even-rank bundle: p_{rank/2}. Zero as soon as there is a
// line summand. Odd-rank bundles are rejected; the model pins the top class
// down only in even rank.
inline GradedPolynomial top_class(const FormalBundle& e) {
  if (e.rank() % 2 != 0)
    throw OddRankError("top class of a bundle of odd rank " +
                       std::to_string(e.rank()));
  return pontryagin(static_cast<int>(e.rank() / 2), e);
}

// f_{r,E} = sum_{k=0}^r (-1)^k p_{r-k}(E) u^k; zero for r < 0 and 1 for r = 0.
struct FPolynomial {
  int r = 0;
  GradedPolynomial poly;
};

inline FPolynomial f_poly(int r, const FormalBundle& e) {
  if (r < 0) return {r, GradedPolynomial::zero(e.ambient())};
  GradedPolynomial u = GradedPolynomial::variable(e.ambient(), e.u_index());
  GradedPolynomial acc(e.ambient());
  Int sign(1);
  GradedPolynomial upow = GradedPolynomial::one(e.ambient());
  for (int k = 0; k <= r; ++k) {
    acc += sign * (pontryagin(r - k, e) * upow);
    upow = upow * u;
    sign = -sign;
  }
  return {r, std::move(acc)};
}

struct FIdentityCheck {
  std::string identity;
  int r_max = 0;
  bool holds = true;
  std::optional<int> failing_r;
};

// Checks the defining identities of the f-polynomials against the chosen
// rank-two summand D of E (Q = E minus one copy of D's root):
//   p_r(E) = f_{r,E} + u f_{r-1,E}
//   f_{r,E} = f_{r,E+1}
//   f_{r,E} = f_{r,Q} + pi(D) f_{r-1,Q}
//   f_{r,E}(pi(D)) = p_r(Q)
std::vector<FIdentityCheck> verify_f_identities(const FormalBundle& e,
                                                const FormalBundle& d,
                                                int r_max);

}  // namespace pontcalc
