#pragma once

#include <pontcalc/polynomial.hpp>

#include <mutex>
#include <vector>

namespace pontcalc {

// Coefficients s_j of the inverse of 1 + p_1 + ... + p_r, graded so that s_j
// is homogeneous of weight j. They satisfy s_0 = 1, s_j = 0 for j < 0 and
// the recursion s_j = -p_1 s_{j-1} - ... - p_r s_{j-r}.
class SegreTable {
public:
  explicit SegreTable(int r)
      : r_(r),
        vars_(VarSet::pontryagin(r)),
        zero_(GradedPolynomial::zero(vars_)) {
    if (r < 0) throw RangeError("segre: negative number of variables");
    cache_.push_back(GradedPolynomial::one(vars_));
  }

  int r() const { return r_; }
  const VarSet& vars() const { return vars_; }

  // Memoized and idempotent; safe under concurrent use.
  const GradedPolynomial& at(int j) const {
    if (j < 0) return zero_;
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(cache_.size()) <= j) {
      const int n = static_cast<int>(cache_.size());
      GradedPolynomial acc(vars_);
      for (int i = 1; i <= r_ && i <= n; ++i)
        acc += GradedPolynomial::variable(vars_, static_cast<std::size_t>(i - 1)) *
               cache_[static_cast<std::size_t>(n - i)];
      cache_.push_back(-acc);
    }
    return cache_[static_cast<std::size_t>(j)];
  }

private:
  int r_;
  VarSet vars_;
  mutable std::mutex mu_;
  mutable std::vector<GradedPolynomial> cache_;
  GradedPolynomial zero_;
};

inline GradedPolynomial segre(int r, int j) {
  SegreTable table(r);
  return table.at(j);
}

// The r generators s_d, ..., s_{d+r-1}; together with the recursion they
// generate every s_j with j >= d.
inline std::vector<GradedPolynomial> segre_generators(int r, int d) {
  SegreTable table(r);
  std::vector<GradedPolynomial> gens;
  gens.reserve(static_cast<std::size_t>(r));
  for (int j = d; j < d + r; ++j) gens.push_back(table.at(j));
  return gens;
}

}  // namespace pontcalc
