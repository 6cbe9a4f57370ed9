#include <pontcalc/grassmann.hpp>

namespace pontcalc {

Gr2Presentation::Gr2Presentation(int s) : s_(s), d_(s / 2) {
  if (s < 0) throw RangeError("gr2 requires s >= 0");
  vars_ = VarSet({"u"}, {1});
}

std::vector<std::string> Gr2Presentation::basis_strings() const {
  std::vector<std::string> out;
  for (int k = 0; k < d_; ++k)
    out.push_back(k == 0 ? "1" : (k == 1 ? "u" : "u^" + std::to_string(k)));
  return out;
}

Gr2Presentation gr2_ring(int s) { return Gr2Presentation(s); }

GrassmannPresentation::GrassmannPresentation(int n, int s)
    : n_(n), s_(s), r_(n / 2), d_(s / 2), vars_(VarSet::pontryagin(n / 2)) {
  if (n < 0 || s < 0 || n > s)
    throw RangeError("gr(" + std::to_string(n) + ", " + std::to_string(s) +
                     "): need 0 <= n <= s");
  if (n % 2 == 1 && s % 2 == 0)
    throw ParityError("gr(" + std::to_string(n) + ", " + std::to_string(s) +
                      "): odd n requires odd s");
}

GrassmannPresentation gr_ring(int n, int s) {
  return GrassmannPresentation(n, s);
}

const GrassmannPresentation::WeightData& GrassmannPresentation::data_at(
    int w) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;

  WeightData data;
  data.monomials = monomials_of_weight(vars_, w);
  const auto nm = static_cast<Eigen::Index>(data.monomials.size());

  DegreeSlice slice = ideal_degree_slice(IdealExpr::J(r_, relation_level()), w);
  for (const Int& f : smith_invariant_factors(slice.spanning))
    if (f > Int(1)) data.torsion.push_back(f);

  // Greedy unit-pivot elimination, scanning columns from the order-latest
  // monomial backwards. Pivot rows end up with a lone +1 among the pivot
  // columns, so the eliminated minor is unimodular and the kept monomials are
  // an honest basis of the quotient by the pivoted rows.
  IntMatrix work = slice.spanning;
  std::vector<bool> row_used(static_cast<std::size_t>(work.rows()), false);
  std::vector<bool> col_eliminated(static_cast<std::size_t>(nm), false);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;  // (row, col)
  for (Eigen::Index c = nm - 1; c >= 0; --c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = 0; i < work.rows(); ++i) {
      if (row_used[static_cast<std::size_t>(i)]) continue;
      if (abs(work(i, c)) == Int(1)) { pivot_row = i; break; }
    }
    if (pivot_row < 0) continue;
    if (work(pivot_row, c) < 0) work.row(pivot_row) = -work.row(pivot_row);
    for (Eigen::Index j = 0; j < work.rows(); ++j) {
      if (j == pivot_row || work(j, c).is_zero()) continue;
      const Int f = work(j, c);
      work.row(j) -= (f * work.row(pivot_row)).eval();
    }
    row_used[static_cast<std::size_t>(pivot_row)] = true;
    col_eliminated[static_cast<std::size_t>(c)] = true;
    pivots.emplace_back(pivot_row, c);
  }

  data.unit_rows = IntMatrix(static_cast<Eigen::Index>(pivots.size()), nm);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    data.unit_rows.row(static_cast<Eigen::Index>(k)) = work.row(pivots[k].first);
    data.unit_cols.push_back(pivots[k].second);
  }

  // Rows with no unit coefficient anywhere are supported on the kept columns
  // only (their pivot-column entries were cleared). Hermite-reduce them over
  // reversed columns so reduction keeps the order-earliest monomials.
  std::vector<Eigen::Index> leftover_rows;
  for (Eigen::Index i = 0; i < work.rows(); ++i) {
    if (row_used[static_cast<std::size_t>(i)]) continue;
    bool zero = true;
    for (Eigen::Index j = 0; j < nm && zero; ++j) zero = work(i, j).is_zero();
    if (!zero) leftover_rows.push_back(i);
  }
  IntMatrix rev(static_cast<Eigen::Index>(leftover_rows.size()), nm);
  for (std::size_t k = 0; k < leftover_rows.size(); ++k)
    for (Eigen::Index j = 0; j < nm; ++j)
      rev(static_cast<Eigen::Index>(k), j) = work(leftover_rows[k], nm - 1 - j);
  HermiteResult<Int> hr = hermite_normal_form<Int>(rev);
  data.leftover = hr.h.topRows(hr.rank);
  data.leftover_pivots.assign(hr.pivot_cols.begin(),
                              hr.pivot_cols.begin() + hr.rank);

  std::vector<bool> in_basis(static_cast<std::size_t>(nm), true);
  for (Eigen::Index c = 0; c < nm; ++c)
    if (col_eliminated[static_cast<std::size_t>(c)])
      in_basis[static_cast<std::size_t>(c)] = false;
  for (Eigen::Index k = 0; k < hr.rank; ++k)
    in_basis[static_cast<std::size_t>(
        nm - 1 - data.leftover_pivots[static_cast<std::size_t>(k)])] = false;
  for (Eigen::Index j = 0; j < nm; ++j)
    if (in_basis[static_cast<std::size_t>(j)])
      data.basis.push_back(data.monomials[static_cast<std::size_t>(j)]);

  auto [pos, inserted] = cache_.emplace(w, std::move(data));
  return pos->second;
}

std::vector<Monomial> GrassmannPresentation::basis_at(int w) const {
  if (w < 0) return {};
  return data_at(w).basis;
}

Eigen::Index GrassmannPresentation::free_rank(int w) const {
  if (w < 0) return 0;
  return static_cast<Eigen::Index>(data_at(w).basis.size());
}

std::vector<Int> GrassmannPresentation::torsion_at(int w) const {
  if (w < 0) return {};
  return data_at(w).torsion;
}

GradedPolynomial GrassmannPresentation::normal_form(
    const GradedPolynomial& f) const {
  if (f.vars() != vars_)
    throw VarSetError("normal form: polynomial over different variables");
  if (f.is_zero()) return f;
  if (!f.is_homogeneous())
    throw HomogeneityError("normal form requires a homogeneous polynomial: " +
                           f.to_string());
  const int w = f.homogeneous_weight();
  const WeightData& data = data_at(w);
  const auto nm = static_cast<Eigen::Index>(data.monomials.size());

  IntVector v = coordinate_vector(f, data.monomials);
  for (Eigen::Index k = 0; k < data.unit_rows.rows(); ++k) {
    const Int q = v(data.unit_cols[static_cast<std::size_t>(k)]);
    if (!q.is_zero()) v -= q * data.unit_rows.row(k);
  }
  if (data.leftover.rows() > 0) {
    IntVector rv(nm);
    for (Eigen::Index j = 0; j < nm; ++j) rv(j) = v(nm - 1 - j);
    for (Eigen::Index k = 0; k < data.leftover.rows(); ++k) {
      const Eigen::Index c = data.leftover_pivots[static_cast<std::size_t>(k)];
      const Int q = floor_div(rv(c), data.leftover(k, c));
      if (!q.is_zero()) rv -= q * data.leftover.row(k);
    }
    for (Eigen::Index j = 0; j < nm; ++j) v(j) = rv(nm - 1 - j);
  }
  return from_coordinates(vars_, data.monomials, v);
}

IntVector GrassmannPresentation::coordinates(const GradedPolynomial& f) const {
  GradedPolynomial nf = normal_form(f);
  if (nf.is_zero()) {
    const int w = f.is_zero() ? 0 : f.homogeneous_weight();
    return IntVector::Zero(free_rank(w));
  }
  const int w = nf.homogeneous_weight();
  return coordinate_vector(nf, data_at(w).basis);
}

RingRank ring_rank(const GrassmannPresentation& p) {
  RingRank out;
  for (int w = 0; w <= p.top_weight(); ++w) {
    out.per_weight[w] = p.free_rank(w);
    out.total += p.free_rank(w);
    if (!p.torsion_at(w).empty()) out.torsion_observed = true;
  }
  return out;
}

GradedPolynomial tautological_quotient_class(const GrassmannPresentation& p,
                                             int k) {
  if (k < 0) throw RangeError("quotient class requires k >= 0");
  return p.normal_form(segre(p.r(), k));
}

namespace {

// Least d0 >= 1 such that every J(d) with d >= d0 has empty slices at all
// weights <= cutoff. Slices of J(d) vanish below weight d and s_d is nonzero,
// so for r >= 1 this is cutoff + 1; for r = 0 all positive-level ideals are
// zero. Verified degreewise rather than assumed.
int compute_certificate(int r, int cutoff) {
  int d0 = cutoff + 1;
  while (d0 > 1) {
    bool empty = true;
    for (int w = 0; w <= cutoff && empty; ++w)
      empty = ideal_degree_slice(IdealExpr::J(r, d0 - 1), w).spanning.rows() == 0;
    if (!empty) break;
    --d0;
  }
  for (int d = d0; d <= d0 + 1; ++d)
    for (int w = 0; w <= cutoff; ++w)
      if (ideal_degree_slice(IdealExpr::J(r, d), w).spanning.rows() != 0)
        throw Error("stabilization certificate failed verification");
  return d0;
}

}  // namespace

TruncatedSeriesRing::TruncatedSeriesRing(int r, int cutoff)
    : r_(r),
      cutoff_(cutoff),
      d0_(compute_certificate(r, cutoff)),
      vars_(VarSet::pontryagin(r)) {
  if (r < 0 || cutoff < 0)
    throw RangeError("truncated series ring: negative parameter");
}

GradedPolynomial TruncatedSeriesRing::truncate(
    const GradedPolynomial& f) const {
  GradedPolynomial out(vars_);
  for (int w = 0; w <= cutoff_; ++w) out += f.graded_piece(w);
  return out;
}

GradedPolynomial TruncatedSeriesRing::mul(const GradedPolynomial& a,
                                          const GradedPolynomial& b) const {
  return truncate(a * b);
}

std::vector<Eigen::Index> TruncatedSeriesRing::per_weight_ranks() const {
  std::vector<Eigen::Index> out;
  for (int w = 0; w <= cutoff_; ++w)
    out.push_back(
        static_cast<Eigen::Index>(monomials_of_weight(vars_, w).size()));
  return out;
}

TruncatedSeriesRing bgl_ring(int n, int cutoff) {
  if (n < 0) throw RangeError("bgl requires n >= 0");
  return TruncatedSeriesRing(n / 2, cutoff);
}

DoubleSeriesRing::DoubleSeriesRing(int r, int cutoff)
    : r_(r), cutoff_(cutoff), vars_(VarSet::pontryagin_pair(r)) {
  if (r < 0 || cutoff < 0)
    throw RangeError("truncated series ring: negative parameter");
}

GradedPolynomial DoubleSeriesRing::truncate(const GradedPolynomial& f) const {
  GradedPolynomial out(vars_);
  for (int w = 0; w <= cutoff_; ++w) out += f.graded_piece(w);
  return out;
}

GradedPolynomial DoubleSeriesRing::mul(const GradedPolynomial& a,
                                       const GradedPolynomial& b) const {
  return truncate(a * b);
}

std::vector<Eigen::Index> DoubleSeriesRing::per_weight_ranks() const {
  std::vector<Eigen::Index> out;
  for (int w = 0; w <= cutoff_; ++w)
    out.push_back(
        static_cast<Eigen::Index>(monomials_of_weight(vars_, w).size()));
  return out;
}

DoubleSeriesRing bgl_pair_ring(int n, int cutoff) {
  if (n < 0) throw RangeError("bglpair requires n >= 0");
  return DoubleSeriesRing(n / 2, cutoff);
}

StabilizationReport stabilization_check(int r, int cutoff, int d_lo, int d_hi) {
  StabilizationReport report;
  report.r = r;
  report.cutoff = cutoff;
  report.d_lo = d_lo;
  report.d_hi = d_hi;
  const VarSet vars = VarSet::pontryagin(r);
  for (int d = d_lo; d <= d_hi; ++d) {
    StabilizationRow row;
    row.d = d;
    row.agrees = true;
    for (int w = 0; w <= cutoff; ++w) {
      const auto free_rank =
          static_cast<Eigen::Index>(monomials_of_weight(vars, w).size());
      QuotientRank q = quotient_rank_by_weight(r, d, w);
      if (q.free_rank != free_rank || !q.torsion.empty()) {
        row.agrees = false;
        row.first_mismatch_weight = w;
        break;
      }
    }
    if (row.agrees && !report.least_agreeing_d) report.least_agreeing_d = d;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace pontcalc
