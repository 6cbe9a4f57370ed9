#pragma once

#include <pontcalc/errors.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pontcalc {

// Ordered set of graded variables. The declared order is total and fixed; it
// drives the term order, the slice bases and every piece of printed output.
// An empty set is allowed and denotes the base ring.
class VarSet {
public:
  VarSet() = default;

  VarSet(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
      throw VarSetError("names and weights differ in length");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (weights_[i] <= 0)
        throw VarSetError("variable " + names_[i] + " has nonpositive weight");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw VarSetError("duplicate variable name " + names_[i]);
    }
  }

  // p1, ..., pr with weight(p_i) = i.
  static VarSet pontryagin(int r) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= r; ++i) {
      names.push_back("p" + std::to_string(i));
      weights.push_back(i);
    }
    return VarSet(std::move(names), std::move(weights));
  }

  // p1, ..., pr, p1', ..., pr', each p_i and p_i' of weight i.
  static VarSet pontryagin_pair(int r) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= r; ++i) {
      names.push_back("p" + std::to_string(i));
      weights.push_back(i);
    }
    for (int i = 1; i <= r; ++i) {
      names.push_back("p" + std::to_string(i) + "'");
      weights.push_back(i);
    }
    return VarSet(std::move(names), std::move(weights));
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

// Weight w displays as the bidegree (8w, 4w).
inline std::pair<int, int> display_bidegree(int w) { return {8 * w, 4 * w}; }

}  // namespace pontcalc
