#pragma once

#include <pontcalc/bundle.hpp>
#include <pontcalc/grassmann.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pontcalc {

// One machine-checked statement: the identifier, the parameter ranges it was
// checked over, the weights covered, and the verdict. Universal statements
// are verified degreewise up to a bound, never proved.
struct LemmaReport {
  std::string lemma_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string weights_checked;  // e.g. "0..10", or "-" for weight-free checks
  bool verdict = true;
  std::optional<std::string> first_failure;
  std::optional<std::string> witness;  // canonical polynomial text
};

std::vector<LemmaReport> verify_segre_suite();
std::vector<LemmaReport> verify_ideal_suite(int max_weight);
std::vector<LemmaReport> verify_bundle_suite();
std::vector<LemmaReport> verify_ring_suite(int max_weight);
std::vector<LemmaReport> verify_all(int max_weight);

inline bool all_pass(const std::vector<LemmaReport>& reports) {
  for (const auto& r : reports)
    if (!r.verdict) return false;
  return true;
}

}  // namespace pontcalc
