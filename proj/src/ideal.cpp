#include <pontcalc/ideal.hpp>

#include <algorithm>

namespace pontcalc {

struct IdealExpr::Node {
  enum class Kind { j, l, power, product, sum };
  Kind kind;
  int param = 0;  // d for J, exponent for power
  NodePtr a, b;
};

IdealExpr::IdealExpr(int r, NodePtr node)
    : r_(r), vars_(VarSet::pontryagin(r)), node_(std::move(node)) {
  if (r < 0) throw RangeError("ideal: negative number of variables");
}

IdealExpr IdealExpr::J(int r, int d) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::j;
  n->param = d;
  return IdealExpr(r, std::move(n));
}

IdealExpr IdealExpr::L(int r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::l;
  return IdealExpr(r, std::move(n));
}

IdealExpr pow(const IdealExpr& base, int k) {
  if (k < 1) throw RangeError("ideal power requires a positive exponent");
  auto n = std::make_shared<IdealExpr::Node>();
  n->kind = IdealExpr::Node::Kind::power;
  n->param = k;
  n->a = base.node_;
  return IdealExpr(base.r_, std::move(n));
}

IdealExpr operator*(const IdealExpr& a, const IdealExpr& b) {
  if (a.r_ != b.r_) throw VarSetError("ideal product: ambient rings differ");
  auto n = std::make_shared<IdealExpr::Node>();
  n->kind = IdealExpr::Node::Kind::product;
  n->a = a.node_;
  n->b = b.node_;
  return IdealExpr(a.r_, std::move(n));
}

IdealExpr operator+(const IdealExpr& a, const IdealExpr& b) {
  if (a.r_ != b.r_) throw VarSetError("ideal sum: ambient rings differ");
  auto n = std::make_shared<IdealExpr::Node>();
  n->kind = IdealExpr::Node::Kind::sum;
  n->a = a.node_;
  n->b = b.node_;
  return IdealExpr(a.r_, std::move(n));
}

namespace {

std::string node_string(const IdealExpr::Node&);

std::string wrapped(const IdealExpr::Node& n) {
  using Kind = IdealExpr::Node::Kind;
  std::string s = node_string(n);
  if (n.kind == Kind::product || n.kind == Kind::sum) return "(" + s + ")";
  return s;
}

std::string node_string(const IdealExpr::Node& n) {
  using Kind = IdealExpr::Node::Kind;
  switch (n.kind) {
    case Kind::j:
      return "J(" + std::to_string(n.param) + ")";
    case Kind::l:
      return "L";
    case Kind::power:
      return wrapped(*n.a) + "^" + std::to_string(n.param);
    case Kind::product:
      return wrapped(*n.a) + "*" + wrapped(*n.b);
    case Kind::sum:
      return node_string(*n.a) + " + " + node_string(*n.b);
  }
  return "";
}

using Family = std::vector<IntMatrix>;  // index = weight

Family product_family(const VarSet& vars,
                      const std::vector<std::vector<Monomial>>& bases,
                      const Family& fa, const Family& fb) {
  const int top = static_cast<int>(fa.size()) - 1;
  Family out(static_cast<std::size_t>(top) + 1);
  for (int w = 0; w <= top; ++w) {
    std::vector<IntVector> rows;
    for (int w1 = 0; w1 <= w; ++w1) {
      const IntMatrix& ma = fa[static_cast<std::size_t>(w1)];
      const IntMatrix& mb = fb[static_cast<std::size_t>(w - w1)];
      if (ma.rows() == 0 || mb.rows() == 0) continue;
      for (Eigen::Index i = 0; i < ma.rows(); ++i) {
        GradedPolynomial pa =
            from_coordinates(vars, bases[static_cast<std::size_t>(w1)], ma.row(i));
        for (Eigen::Index j = 0; j < mb.rows(); ++j) {
          GradedPolynomial pb = from_coordinates(
              vars, bases[static_cast<std::size_t>(w - w1)], mb.row(j));
          rows.push_back(coordinate_vector(
              pa * pb, bases[static_cast<std::size_t>(w)]));
        }
      }
    }
    const Eigen::Index cols =
        static_cast<Eigen::Index>(bases[static_cast<std::size_t>(w)].size());
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.row(static_cast<Eigen::Index>(i)) = rows[i];
    out[static_cast<std::size_t>(w)] = hermite_basis<Int>(m);
  }
  return out;
}

Family eval_family(const IdealExpr::Node& node, const VarSet& vars, int r,
                   const std::vector<std::vector<Monomial>>& bases,
                   int max_weight) {
  using Kind = IdealExpr::Node::Kind;
  Family out(static_cast<std::size_t>(max_weight) + 1);
  switch (node.kind) {
    case Kind::j: {
      const int d = node.param;
      if (d <= 0) {
        for (int w = 0; w <= max_weight; ++w) {
          const auto n = static_cast<Eigen::Index>(
              bases[static_cast<std::size_t>(w)].size());
          out[static_cast<std::size_t>(w)] = IntMatrix::Identity(n, n);
        }
        return out;
      }
      SegreTable table(r);
      for (int w = 0; w <= max_weight; ++w) {
        const auto& basis = bases[static_cast<std::size_t>(w)];
        std::vector<IntVector> rows;
        for (int j = d; j < d + r; ++j) {
          if (j > w) continue;
          const GradedPolynomial& sj = table.at(j);
          for (const Monomial& m : monomials_of_weight(vars, w - j)) {
            GradedPolynomial g =
                GradedPolynomial::term(vars, m, Int(1)) * sj;
            rows.push_back(coordinate_vector(g, basis));
          }
        }
        IntMatrix mat(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(basis.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
          mat.row(static_cast<Eigen::Index>(i)) = rows[i];
        out[static_cast<std::size_t>(w)] = hermite_basis<Int>(mat);
      }
      return out;
    }
    case Kind::l: {
      for (int w = 0; w <= max_weight; ++w) {
        const auto& basis = bases[static_cast<std::size_t>(w)];
        std::vector<IntVector> rows;
        for (int i = 0; i < r; ++i) {
          const int wt = vars.weight(static_cast<std::size_t>(i));
          if (wt > w) continue;
          for (Monomial m : monomials_of_weight(vars, w - wt)) {
            m[static_cast<std::size_t>(i)] += 1;
            rows.push_back(coordinate_vector(
                GradedPolynomial::term(vars, std::move(m), Int(1)), basis));
          }
        }
        IntMatrix mat(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(basis.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
          mat.row(static_cast<Eigen::Index>(i)) = rows[i];
        out[static_cast<std::size_t>(w)] = hermite_basis<Int>(mat);
      }
      return out;
    }
    case Kind::power: {
      Family base = eval_family(*node.a, vars, r, bases, max_weight);
      Family acc = base;
      for (int i = 1; i < node.param; ++i)
        acc = product_family(vars, bases, acc, base);
      return acc;
    }
    case Kind::product: {
      Family fa = eval_family(*node.a, vars, r, bases, max_weight);
      Family fb = eval_family(*node.b, vars, r, bases, max_weight);
      return product_family(vars, bases, fa, fb);
    }
    case Kind::sum: {
      Family fa = eval_family(*node.a, vars, r, bases, max_weight);
      Family fb = eval_family(*node.b, vars, r, bases, max_weight);
      for (int w = 0; w <= max_weight; ++w)
        out[static_cast<std::size_t>(w)] = hermite_basis<Int>(vstack<Int>(
            fa[static_cast<std::size_t>(w)], fb[static_cast<std::size_t>(w)]));
      return out;
    }
  }
  return out;
}

std::vector<std::vector<Monomial>> weight_bases(const VarSet& vars,
                                                int max_weight) {
  std::vector<std::vector<Monomial>> bases;
  bases.reserve(static_cast<std::size_t>(max_weight) + 1);
  for (int w = 0; w <= max_weight; ++w)
    bases.push_back(monomials_of_weight(vars, w));
  return bases;
}

}  // namespace

std::string IdealExpr::to_string() const { return node_string(*node_); }

std::vector<IntMatrix> IdealExpr::slice_family(int max_weight) const {
  return eval_family(*node_, vars_, r_, weight_bases(vars_, max_weight),
                     max_weight);
}

DegreeSlice ideal_degree_slice(const IdealExpr& ideal, int weight) {
  Family fam = ideal.slice_family(weight);
  return {weight, fam[static_cast<std::size_t>(weight)]};
}

DegreeSlice j_slice_with_extra_generators(int r, int d, int extra, int weight) {
  if (d <= 0) {
    const auto n = static_cast<Eigen::Index>(
        monomials_of_weight(VarSet::pontryagin(r), weight).size());
    return {weight, IntMatrix::Identity(n, n)};
  }
  SegreTable table(r);
  const VarSet& vars = table.vars();
  const auto basis = monomials_of_weight(vars, weight);
  std::vector<IntVector> rows;
  for (int j = d; j < d + r + extra; ++j) {
    if (j > weight) continue;
    const GradedPolynomial& sj = table.at(j);
    for (const Monomial& m : monomials_of_weight(vars, weight - j)) {
      rows.push_back(coordinate_vector(
          GradedPolynomial::term(vars, m, Int(1)) * sj, basis));
    }
  }
  IntMatrix mat(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    mat.row(static_cast<Eigen::Index>(i)) = rows[i];
  return {weight, hermite_basis<Int>(mat)};
}

bool ideal_contains_poly(const IdealExpr& ideal, const GradedPolynomial& f,
                         MembershipMode mode) {
  if (f.vars() != ideal.vars())
    throw VarSetError("containment: polynomial over a different variable set");
  if (f.is_zero()) return true;
  if (!f.is_homogeneous())
    throw HomogeneityError("containment requires a homogeneous polynomial: " +
                           f.to_string());
  const int w = f.homogeneous_weight();
  DegreeSlice slice = ideal_degree_slice(ideal, w);
  IntVector v = coordinate_vector(f, monomials_of_weight(ideal.vars(), w));
  if (mode == MembershipMode::integer_lattice)
    return lattice_membership(slice.spanning, v).member;
  return in_rational_span(slice.spanning, v);
}

ContainmentReport ideal_contains_ideal(const IdealExpr& a, const IdealExpr& b,
                                       int max_weight, MembershipMode mode) {
  if (a.ambient_r() != b.ambient_r())
    throw VarSetError("containment: ambient rings differ");
  ContainmentReport report;
  report.max_weight = max_weight;
  report.mode = mode;
  const auto bases = weight_bases(a.vars(), max_weight);
  Family fa = a.slice_family(max_weight);
  Family fb = b.slice_family(max_weight);
  for (int w = 0; w <= max_weight; ++w) {
    const IntMatrix& ma = fa[static_cast<std::size_t>(w)];
    const IntMatrix& mb = fb[static_cast<std::size_t>(w)];
    WeightCheck check;
    check.weight = w;
    for (Eigen::Index i = 0; i < ma.rows(); ++i) {
      const bool in = mode == MembershipMode::integer_lattice
                          ? lattice_membership(mb, ma.row(i)).member
                          : in_rational_span(mb, ma.row(i));
      if (!in) {
        check.holds = false;
        check.witness =
            from_coordinates(a.vars(), bases[static_cast<std::size_t>(w)],
                             ma.row(i))
                .to_string();
        break;
      }
    }
    if (!check.holds && !report.first_failure) report.first_failure = w;
    report.holds = report.holds && check.holds;
    report.weights.push_back(std::move(check));
  }
  return report;
}

std::optional<int> minimal_k_for_Lk_in_Jn(int n, int r, int search_bound,
                                          int weight_bound) {
  const IdealExpr jn = IdealExpr::J(r, n);
  for (int k = 0; k <= search_bound; ++k) {
    const IdealExpr lk = k == 0 ? IdealExpr::full(r) : pow(IdealExpr::L(r), k);
    if (ideal_contains_ideal(lk, jn, weight_bound).holds) return k;
  }
  return std::nullopt;
}

std::optional<int> minimal_s_for_LsJd_in_Jd1(int d, int r, int search_bound,
                                             int weight_bound) {
  const IdealExpr jd = IdealExpr::J(r, d);
  const IdealExpr jd1 = IdealExpr::J(r, d + 1);
  for (int s = 0; s <= search_bound; ++s) {
    const IdealExpr lhs = s == 0 ? jd : pow(IdealExpr::L(r), s) * jd;
    if (ideal_contains_ideal(lhs, jd1, weight_bound).holds) return s;
  }
  return std::nullopt;
}

namespace {

// Monomial image matrix of the substitution p_r -> 0, from the weight-w
// monomials in r variables to those in r-1 variables.
IntMatrix pr_to_zero_matrix(const std::vector<Monomial>& mon_r,
                            const std::vector<Monomial>& mon_rm1) {
  IntMatrix g = IntMatrix::Zero(static_cast<Eigen::Index>(mon_r.size()),
                                static_cast<Eigen::Index>(mon_rm1.size()));
  std::map<Monomial, Eigen::Index> index;
  for (std::size_t j = 0; j < mon_rm1.size(); ++j)
    index.emplace(mon_rm1[j], static_cast<Eigen::Index>(j));
  for (std::size_t i = 0; i < mon_r.size(); ++i) {
    const Monomial& m = mon_r[i];
    if (m.back() != 0) continue;
    Monomial dropped(m.begin(), m.end() - 1);
    g(static_cast<Eigen::Index>(i), index.at(dropped)) = Int(1);
  }
  return g;
}

// Monomial image matrix of multiplication by p_r, from weight w-r monomials
// to weight-w monomials (r variables).
IntMatrix times_pr_matrix(const std::vector<Monomial>& mon_lo,
                          const std::vector<Monomial>& mon_hi) {
  IntMatrix p = IntMatrix::Zero(static_cast<Eigen::Index>(mon_lo.size()),
                                static_cast<Eigen::Index>(mon_hi.size()));
  std::map<Monomial, Eigen::Index> index;
  for (std::size_t j = 0; j < mon_hi.size(); ++j)
    index.emplace(mon_hi[j], static_cast<Eigen::Index>(j));
  for (std::size_t i = 0; i < mon_lo.size(); ++i) {
    Monomial m = mon_lo[i];
    m.back() += 1;
    p(static_cast<Eigen::Index>(i), index.at(m)) = Int(1);
  }
  return p;
}

}  // namespace

ExactnessReport verify_exact_sequence(int r, int d, int max_weight) {
  if (r < 1) throw RangeError("exact sequence requires r >= 1");
  ExactnessReport report;
  report.r = r;
  report.d = d;
  report.max_weight = max_weight;

  const VarSet vars_r = VarSet::pontryagin(r);
  const VarSet vars_rm1 = VarSet::pontryagin(r - 1);
  Family jd_r = IdealExpr::J(r, d).slice_family(max_weight);
  Family jdm1_r = IdealExpr::J(r, d - 1).slice_family(max_weight);
  Family jd_rm1 = IdealExpr::J(r - 1, d).slice_family(max_weight);

  for (int w = 0; w <= max_weight; ++w) {
    const auto mon_r = monomials_of_weight(vars_r, w);
    const auto mon_rm1 = monomials_of_weight(vars_rm1, w);
    const IntMatrix& lam_d = jd_r[static_cast<std::size_t>(w)];
    const IntMatrix& lam_d_rm1 = jd_rm1[static_cast<std::size_t>(w)];

    ExactnessWeight ew;
    ew.weight = w;

    IntMatrix g = pr_to_zero_matrix(mon_r, mon_rm1);

    // image of multiplication by p_r from weight w-r, as a lattice in the
    // weight-w monomial space
    IntMatrix p(0, static_cast<Eigen::Index>(mon_r.size()));
    IntMatrix lam_dm1_lo(0, 0);
    if (w - r >= 0) {
      const auto mon_lo = monomials_of_weight(vars_r, w - r);
      p = times_pr_matrix(mon_lo, mon_r);
      lam_dm1_lo = jdm1_r[static_cast<std::size_t>(w - r)];
    }

    // (a) well-definedness: p_r * J(d-1) lies in J(d)
    if (lam_dm1_lo.rows() > 0) {
      IntMatrix mapped = lam_dm1_lo * p;
      for (Eigen::Index i = 0; i < mapped.rows() && ew.well_defined; ++i)
        ew.well_defined = lattice_membership(lam_d, mapped.row(i)).member;
    }

    // (b) middle exactness: the preimage of J(d) in r-1 variables under
    // p_r -> 0 equals image(*p_r) + J(d) as lattices
    IntMatrix pre;
    {
      IntMatrix stacked = vstack<Int>(g, lam_d_rm1);
      IntMatrix kern = left_kernel(stacked);
      pre = kern.leftCols(g.rows());
    }
    IntMatrix image = vstack<Int>(p, lam_d);
    ew.middle_exact = lattice_equal<Int>(pre, image);

    // (c) surjectivity onto B[p_1..p_{r-1}]/J(d): the image of the monomial
    // map plus the target relations is the full lattice
    IntMatrix onto = hermite_basis<Int>(vstack<Int>(g, lam_d_rm1));
    ew.surjective =
        lattice_equal<Int>(onto, IntMatrix(IntMatrix::Identity(
                                     static_cast<Eigen::Index>(mon_rm1.size()),
                                     static_cast<Eigen::Index>(mon_rm1.size()))));

    if (!ew.ok() && !report.first_failure) report.first_failure = w;
    report.exact = report.exact && ew.ok();
    report.weights.push_back(ew);
  }
  return report;
}

QuotientRank quotient_rank_by_weight(int r, int d, int w) {
  const VarSet vars = VarSet::pontryagin(r);
  const auto n =
      static_cast<Eigen::Index>(monomials_of_weight(vars, w).size());
  DegreeSlice slice = ideal_degree_slice(IdealExpr::J(r, d), w);
  std::vector<Int> factors = smith_invariant_factors(slice.spanning);
  QuotientRank out;
  out.free_rank = n - static_cast<Eigen::Index>(factors.size());
  for (const Int& f : factors)
    if (f > Int(1)) out.torsion.push_back(f);
  return out;
}

}  // namespace pontcalc
