#pragma once

#include <pontcalc/bigint.hpp>
#include <pontcalc/errors.hpp>

#include <Eigen/Core>
#include <vector>

namespace pontcalc {

// Exact integer lattice algebra on row spans. All routines are fraction-free;
// the scalar must be an exact signed integer type (Int, or a built-in integer
// for small cases).

template <typename S>
using MatrixOf = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using RowOf = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <typename S>
struct HermiteResult {
  MatrixOf<S> h;  // row echelon; rows rank.. are zero; pivots positive,
                  // entries above each pivot reduced into [0, pivot)
  MatrixOf<S> u;  // unimodular, u * input = h
  std::vector<Eigen::Index> pivot_cols;  // one per nonzero row
  Eigen::Index rank = 0;
};

namespace detail {

template <typename S>
S floor_div_generic(const S& a, const S& b) {
  S q = a / b;
  if (a % b != S(0) && ((a < S(0)) != (b < S(0)))) q -= S(1);
  return q;
}

// g = a*x + b*y with g = gcd(a, b) >= 0.
template <typename S>
void ext_gcd_generic(S a, S b, S& g, S& x, S& y) {
  S x0 = S(1), y0 = S(0), x1 = S(0), y1 = S(1);
  while (b != S(0)) {
    S q = a / b;
    S t = a - q * b;
    a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < S(0)) { a = -a; x0 = -x0; y0 = -y0; }
  g = a; x = x0; y = y0;
}

}  // namespace detail

// Row Hermite normal form with transform. The nonzero rows form the canonical
// basis of the integer row span: two matrices span the same lattice iff those
// blocks are identical.
template <typename S>
HermiteResult<S> hermite_normal_form(MatrixOf<S> a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  HermiteResult<S> res;
  res.u = MatrixOf<S>::Identity(m, m);
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < n && r < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, col) != S(0)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) {
      a.row(piv).swap(a.row(r));
      res.u.row(piv).swap(res.u.row(r));
    }
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (a(i, col) == S(0)) continue;
      const S p = a(r, col), q = a(i, col);
      S g, x, y;
      detail::ext_gcd_generic<S>(p, q, g, x, y);
      const S pg = p / g, qg = q / g;
      RowOf<S> ar = x * a.row(r) + y * a.row(i);
      RowOf<S> ai = pg * a.row(i) - qg * a.row(r);
      a.row(r) = ar;
      a.row(i) = ai;
      RowOf<S> ur = x * res.u.row(r) + y * res.u.row(i);
      RowOf<S> ui = pg * res.u.row(i) - qg * res.u.row(r);
      res.u.row(r) = ur;
      res.u.row(i) = ui;
    }
    if (a(r, col) < S(0)) {
      a.row(r) = -a.row(r);
      res.u.row(r) = -res.u.row(r);
    }
    for (Eigen::Index j = 0; j < r; ++j) {
      const S q = detail::floor_div_generic(a(j, col), a(r, col));
      if (q == S(0)) continue;
      a.row(j) -= q * a.row(r);
      res.u.row(j) -= q * res.u.row(r);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  res.h = std::move(a);
  return res;
}

// Canonical lattice basis: the nonzero HNF rows.
template <typename S>
MatrixOf<S> hermite_basis(const MatrixOf<S>& a) {
  HermiteResult<S> res = hermite_normal_form<S>(a);
  return res.h.topRows(res.rank);
}

template <typename S>
bool lattice_equal(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  MatrixOf<S> ha = hermite_basis<S>(a), hb = hermite_basis<S>(b);
  if (ha.rows() != hb.rows() || ha.cols() != hb.cols()) return false;
  for (Eigen::Index i = 0; i < ha.rows(); ++i)
    for (Eigen::Index j = 0; j < ha.cols(); ++j)
      if (ha(i, j) != hb(i, j)) return false;
  return true;
}

template <typename S>
MatrixOf<S> vstack(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw DimensionError("vstack: column counts differ");
  const Eigen::Index cols = a.rows() != 0 ? a.cols() : b.cols();
  MatrixOf<S> out(a.rows() + b.rows(), cols);
  if (a.rows() != 0) out.topRows(a.rows()) = a;
  if (b.rows() != 0) out.bottomRows(b.rows()) = b;
  return out;
}

// Exact rank over the rationals by fraction-free (Bareiss) elimination.
template <typename S>
Eigen::Index rational_rank(MatrixOf<S> a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  Eigen::Index r = 0;
  S prev = S(1);
  for (Eigen::Index col = 0; col < n && r < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, col) != S(0)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < m; ++i) {
      for (Eigen::Index j = col + 1; j < n; ++j)
        a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
      a(i, col) = S(0);
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

struct MembershipResult {
  bool member = false;
  IntVector coeffs;  // coeffs * M = v when member
};

// Decides v in the integer row span of m; on success the certificate
// coefficients re-multiply exactly to v.
inline MembershipResult lattice_membership(const IntMatrix& m,
                                           const IntVector& v) {
  if (v.cols() != m.cols())
    throw DimensionError("membership: vector length differs from column count");
  HermiteResult<Int> res = hermite_normal_form<Int>(m);
  IntVector residue = v;
  IntVector q = IntVector::Zero(m.rows());
  for (Eigen::Index k = 0; k < res.rank; ++k) {
    const Eigen::Index c = res.pivot_cols[static_cast<std::size_t>(k)];
    if (residue(c).is_zero()) continue;
    if (!divides(res.h(k, c), residue(c))) return {false, {}};
    const Int f = residue(c) / res.h(k, c);
    residue -= f * res.h.row(k);
    q(k) = f;
  }
  for (Eigen::Index j = 0; j < residue.cols(); ++j)
    if (!residue(j).is_zero()) return {false, {}};
  return {true, q * res.u};
}

inline bool in_rational_span(const IntMatrix& m, const IntVector& v) {
  if (v.cols() != m.cols())
    throw DimensionError("membership: vector length differs from column count");
  IntMatrix stacked = vstack<Int>(m, v);
  return rational_rank<Int>(m) == rational_rank<Int>(stacked);
}

// Basis of the left kernel lattice {z : z * a = 0}.
inline IntMatrix left_kernel(const IntMatrix& a) {
  HermiteResult<Int> res = hermite_normal_form<Int>(a);
  return res.u.bottomRows(a.rows() - res.rank);
}

// Nonzero invariant factors d_1 | d_2 | ... of the integer matrix. The
// cokernel of the row span in Z^cols is Z^(cols - #factors) plus Z/d_i for
// each factor d_i > 1.
inline std::vector<Int> smith_invariant_factors(IntMatrix a) {
  std::vector<Int> factors;
  Eigen::Index t = 0;
  const Eigen::Index m = a.rows(), n = a.cols();
  while (true) {
    // locate a nonzero entry of smallest magnitude in the working submatrix
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (!a(i, j).is_zero() &&
            (bi < 0 || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i; bj = j;
        }
    if (bi < 0) break;
    if (bi != t) a.row(bi).swap(a.row(t));
    if (bj != t) a.col(bj).swap(a.col(t));
    if (a(t, t) < 0) a.row(t) = -a.row(t);

    bool clean = true;
    for (Eigen::Index i = t + 1; i < m; ++i) {
      if (a(i, t).is_zero()) continue;
      const Int q = floor_div(a(i, t), a(t, t));
      a.row(i) -= (q * a.row(t)).eval();
      if (!a(i, t).is_zero()) clean = false;  // remainder became new minimum
    }
    for (Eigen::Index j = t + 1; j < n; ++j) {
      if (a(t, j).is_zero()) continue;
      const Int q = floor_div(a(t, j), a(t, t));
      a.col(j) -= (q * a.col(t)).eval();
      if (!a(t, j).is_zero()) clean = false;
    }
    if (!clean) continue;  // rerun with the smaller pivot candidates

    // pivot must divide the remaining submatrix
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < m && divides_all; ++i)
      for (Eigen::Index j = t + 1; j < n && divides_all; ++j)
        if (!divides(a(t, t), a(i, j))) {
          a.row(t) += a.row(i);
          divides_all = false;
        }
    if (!divides_all) continue;

    factors.push_back(a(t, t));
    ++t;
    if (t >= m || t >= n) break;
  }
  return factors;
}

}  // namespace pontcalc
