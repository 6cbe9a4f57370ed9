#pragma once

#include <pontcalc/bigint.hpp>
#include <pontcalc/errors.hpp>
#include <pontcalc/varset.hpp>

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pontcalc {

// Exponent vector aligned with a VarSet; entry i is the exponent of
// variable i. All exponents are nonnegative.
using Monomial = std::vector<int>;

inline int monomial_weight(const VarSet& vars, const Monomial& m) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * vars.weight(i);
  return w;
}

// Term order: ascending total weight; within one weight, exponent vectors in
// descending lexicographic order relative to the declared variable order.
// monomials_of_weight enumerates in this order and terms print in it.
struct TermOrder {
  std::vector<int> weights;

  bool operator()(const Monomial& a, const Monomial& b) const {
    int wa = 0, wb = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      wa += a[i] * weights[i];
      wb += b[i] * weights[i];
    }
    if (wa != wb) return wa < wb;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

// Sparse polynomial with exact integer coefficients over a weighted variable
// set. Zero coefficients are never stored. Not required to be homogeneous.
class GradedPolynomial {
public:
  using TermMap = std::map<Monomial, Int, TermOrder>;

  explicit GradedPolynomial(VarSet vars)
      : vars_(std::move(vars)), terms_(TermOrder{vars_.weights()}) {}

  static GradedPolynomial zero(const VarSet& vars) {
    return GradedPolynomial(vars);
  }

  static GradedPolynomial constant(const VarSet& vars, Int c) {
    GradedPolynomial p(vars);
    p.add_term(Monomial(vars.size(), 0), c);
    return p;
  }

  static GradedPolynomial one(const VarSet& vars) {
    return constant(vars, Int(1));
  }

  static GradedPolynomial variable(const VarSet& vars, std::size_t i) {
    Monomial m(vars.size(), 0);
    m[i] = 1;
    return term(vars, std::move(m), Int(1));
  }

  static GradedPolynomial term(const VarSet& vars, Monomial m, Int c) {
    GradedPolynomial p(vars);
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int constant_coeff() const { return coeff(Monomial(vars_.size(), 0)); }

  void add_term(Monomial m, Int c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // True also for the zero polynomial.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int w = monomial_weight(vars_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (monomial_weight(vars_, m) != w) return false;
    return true;
  }

  // Weight of a nonzero homogeneous polynomial.
  int homogeneous_weight() const {
    if (terms_.empty())
      throw HomogeneityError("the zero polynomial has no distinguished weight");
    if (!is_homogeneous())
      throw HomogeneityError("polynomial is not homogeneous: " + to_string());
    return monomial_weight(vars_, terms_.begin()->first);
  }

  // Largest term weight; -1 for the zero polynomial.
  int top_weight() const {
    if (terms_.empty()) return -1;
    return monomial_weight(vars_, terms_.rbegin()->first);
  }

  GradedPolynomial graded_piece(int w) const {
    GradedPolynomial out(vars_);
    for (const auto& [m, c] : terms_)
      if (monomial_weight(vars_, m) == w) out.add_term(m, c);
    return out;
  }

  friend GradedPolynomial operator+(const GradedPolynomial& a,
                                    const GradedPolynomial& b) {
    require_same_vars(a, b);
    GradedPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend GradedPolynomial operator-(const GradedPolynomial& a,
                                    const GradedPolynomial& b) {
    require_same_vars(a, b);
    GradedPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial out(vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
  }

  friend GradedPolynomial operator*(const GradedPolynomial& a,
                                    const GradedPolynomial& b) {
    require_same_vars(a, b);
    GradedPolynomial out(a.vars_);
    const std::size_t n = a.vars_.size();
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }

  friend GradedPolynomial operator*(const Int& c, const GradedPolynomial& a) {
    GradedPolynomial out(a.vars_);
    for (const auto& [m, k] : a.terms_) out.add_term(m, c * k);
    return out;
  }

  GradedPolynomial& operator+=(const GradedPolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  GradedPolynomial& operator-=(const GradedPolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.vars_ == b.vars_ &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      b.terms_.end());
  }
  friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) {
    return !(a == b);
  }

  // Replaces variable i by `value` (same variable set).
  GradedPolynomial substitute(std::size_t i,
                              const GradedPolynomial& value) const {
    require_same_vars(*this, value);
    GradedPolynomial out(vars_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const int e = rest[i];
      rest[i] = 0;
      GradedPolynomial piece = term(vars_, std::move(rest), c);
      for (int k = 0; k < e; ++k) piece = piece * value;
      out += piece;
    }
    return out;
  }

  // Canonical text form: terms in the term order, explicit signs, `^` for
  // exponents and `*` for products, e.g. "p1^2 - p2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const Int mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const std::string mono = monomial_string(m);
      if (mono.empty()) {
        os << mag;
      } else {
        if (mag != Int(1)) os << mag << "*";
        os << mono;
      }
    }
    return os.str();
  }

private:
  static void require_same_vars(const GradedPolynomial& a,
                                const GradedPolynomial& b) {
    if (a.vars_ != b.vars_)
      throw VarSetError("polynomials built over different variable sets");
  }

  std::string monomial_string(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_.name(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  VarSet vars_;
  TermMap terms_;
};

inline GradedPolynomial pow(const GradedPolynomial& p, int e) {
  GradedPolynomial out = GradedPolynomial::one(p.vars());
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

namespace detail {

inline void enumerate_monomials(const VarSet& vars, std::size_t i, int left,
                                Monomial& cur, std::vector<Monomial>& out) {
  if (i == vars.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  const int w = vars.weight(i);
  for (int e = left / w; e >= 0; --e) {
    cur[i] = e;
    enumerate_monomials(vars, i + 1, left - e * w, cur, out);
  }
  cur[i] = 0;
}

}  // namespace detail

// All monomials of exact weight w, complete and duplicate-free, in the term
// order's within-weight order (descending lexicographic).
inline std::vector<Monomial> monomials_of_weight(const VarSet& vars, int w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial cur(vars.size(), 0);
  detail::enumerate_monomials(vars, 0, w, cur, out);
  return out;
}

// sigma_k of the indicated variables; sigma_0 = 1 and sigma_k = 0 for
// k > #roots or k < 0. Repeated indices are treated as a multiset.
inline GradedPolynomial elementary_symmetric(
    const VarSet& vars, const std::vector<std::size_t>& roots, int k) {
  if (k < 0) return GradedPolynomial::zero(vars);
  GradedPolynomial prod = GradedPolynomial::one(vars);
  for (std::size_t i : roots) {
    GradedPolynomial factor = GradedPolynomial::one(vars);
    factor += GradedPolynomial::variable(vars, i);
    prod = prod * factor;
  }
  // With weight-one roots the degree-k part is exactly sigma_k.
  return prod.graded_piece(k);
}

// Weight-graded inverse of f through weight N: returns g_0..g_N with
// (sum_j g_j) * f = 1 modulo weight > N. Requires constant coefficient 1.
inline std::vector<GradedPolynomial> series_inverse_truncated(
    const GradedPolynomial& f, int N) {
  if (f.constant_coeff() != Int(1))
    throw NotAUnitError("series inversion requires constant coefficient 1");
  const VarSet& vars = f.vars();
  std::vector<GradedPolynomial> g;
  g.reserve(static_cast<std::size_t>(N) + 1);
  g.push_back(GradedPolynomial::one(vars));
  for (int w = 1; w <= N; ++w) {
    GradedPolynomial acc(vars);
    for (int i = 1; i <= w; ++i) acc += f.graded_piece(i) * g[w - i];
    g.push_back(-acc);
  }
  return g;
}

// Coordinates of a polynomial supported on the given monomial basis.
inline IntVector coordinate_vector(const GradedPolynomial& f,
                                   const std::vector<Monomial>& basis) {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(basis.size()));
  std::map<Monomial, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    index.emplace(basis[i], static_cast<Eigen::Index>(i));
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw HomogeneityError("polynomial has support outside the basis: " +
                             f.to_string());
    v(it->second) = c;
  }
  return v;
}

inline GradedPolynomial from_coordinates(const VarSet& vars,
                                         const std::vector<Monomial>& basis,
                                         const IntVector& row) {
  GradedPolynomial p(vars);
  for (std::size_t i = 0; i < basis.size(); ++i)
    p.add_term(basis[i], row(static_cast<Eigen::Index>(i)));
  return p;
}

}  // namespace pontcalc
