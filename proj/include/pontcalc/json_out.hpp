#pragma once

#include <pontcalc/bundle.hpp>
#include <pontcalc/grassmann.hpp>
#include <pontcalc/verify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace pontcalc {

// Every CLI invocation produces one JSON document; csv and table renderings
// are derived from it. All mathematical numbers are emitted as decimal
// strings so no integer width is ever lost.
using Document = nlohmann::ordered_json;

Document poly_document(const std::string& command,
                       const std::vector<std::pair<std::string, std::string>>& params,
                       const GradedPolynomial& result);

Document containment_document(const std::string& lhs, const std::string& rhs,
                              const ContainmentReport& report);

Document gr2_document(const Gr2Presentation& p);
Document gr_document(const GrassmannPresentation& p);
Document bgl_document(const TruncatedSeriesRing& ring, int n);
Document bgl_pair_document(const DoubleSeriesRing& ring, int n);

Document verify_document(const std::string& suite, int max_weight,
                         const std::vector<LemmaReport>& reports);

std::string render_json(const Document& doc);
std::string render_csv(const Document& doc);
std::string render_table(const Document& doc);

}  // namespace pontcalc
