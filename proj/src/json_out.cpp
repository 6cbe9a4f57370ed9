#include <pontcalc/json_out.hpp>

#include <sstream>

namespace pontcalc {

namespace {

std::string istr(long v) { return std::to_string(v); }

Document params_object(
    const std::vector<std::pair<std::string, std::string>>& params) {
  Document obj = Document::object();
  for (const auto& [k, v] : params) obj[k] = v;
  return obj;
}

Document generator_entry(const std::string& name, int weight) {
  auto [p, q] = display_bidegree(weight);
  Document g = Document::object();
  g["name"] = name;
  g["weight"] = istr(weight);
  g["bidegree"] = Document::array({istr(p), istr(q)});
  return g;
}

}  // namespace

Document poly_document(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& params,
    const GradedPolynomial& result) {
  Document doc = Document::object();
  doc["command"] = command;
  doc["parameters"] = params_object(params);
  doc["result"] = result.to_string();
  return doc;
}

Document containment_document(const std::string& lhs, const std::string& rhs,
                              const ContainmentReport& report) {
  Document doc = Document::object();
  doc["command"] = "ideal";
  doc["lhs"] = lhs;
  doc["rhs"] = rhs;
  doc["mode"] = to_string(report.mode);
  doc["max_weight"] = istr(report.max_weight);
  doc["holds"] = report.holds;
  if (report.first_failure)
    doc["first_failure_weight"] = istr(*report.first_failure);
  Document weights = Document::array();
  for (const auto& w : report.weights) {
    Document entry = Document::object();
    entry["weight"] = istr(w.weight);
    entry["holds"] = w.holds;
    if (w.witness) entry["witness"] = *w.witness;
    weights.push_back(std::move(entry));
  }
  doc["weights"] = std::move(weights);
  return doc;
}

Document gr2_document(const Gr2Presentation& p) {
  Document doc = Document::object();
  doc["command"] = "gr2";
  doc["n"] = "2";
  doc["s"] = istr(p.s());
  doc["r"] = "1";
  doc["d"] = istr(p.d());
  Document gens = Document::array();
  gens.push_back(generator_entry("u", 1));
  doc["generators"] = std::move(gens);
  doc["relations"] = Document::array({p.relation()});
  Document ranks = Document::array();
  for (int w = 0; w < std::max(p.d(), 1); ++w)
    ranks.push_back(istr(p.free_rank(w)));
  doc["per_weight_ranks"] = std::move(ranks);
  doc["total_rank"] = istr(p.total_rank());
  doc["torsion_observed"] = false;
  Document basis = Document::object();
  const auto strings = p.basis_strings();
  for (int w = 0; w < p.d(); ++w)
    basis[istr(w)] = Document::array({strings[static_cast<std::size_t>(w)]});
  doc["basis_per_weight"] = std::move(basis);
  return doc;
}

Document gr_document(const GrassmannPresentation& p) {
  Document doc = Document::object();
  doc["command"] = "gr";
  doc["n"] = istr(p.n());
  doc["s"] = istr(p.s());
  doc["r"] = istr(p.r());
  doc["d"] = istr(p.d());
  Document gens = Document::array();
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    gens.push_back(generator_entry(p.vars().name(i), p.vars().weight(i)));
  doc["generators"] = std::move(gens);
  Document rels = Document::array();
  for (const auto& g : p.relation_generators()) rels.push_back(g.to_string());
  doc["relations"] = std::move(rels);
  RingRank rr = ring_rank(p);
  Document ranks = Document::array();
  for (const auto& [w, k] : rr.per_weight) ranks.push_back(istr(k));
  doc["per_weight_ranks"] = std::move(ranks);
  doc["total_rank"] = istr(rr.total);
  doc["torsion_observed"] = rr.torsion_observed;
  Document basis = Document::object();
  for (int w = 0; w <= p.top_weight(); ++w) {
    Document list = Document::array();
    for (const Monomial& m : p.basis_at(w))
      list.push_back(GradedPolynomial::term(p.vars(), m, Int(1)).to_string());
    basis[istr(w)] = std::move(list);
  }
  doc["basis_per_weight"] = std::move(basis);
  return doc;
}

namespace {

Document series_document(const char* command, int n, int r, int cutoff,
                         const VarSet& vars,
                         const std::vector<Eigen::Index>& ranks,
                         std::optional<int> certificate) {
  Document doc = Document::object();
  doc["command"] = command;
  doc["n"] = istr(n);
  doc["cutoff"] = istr(cutoff);
  doc["r"] = istr(r);
  if (certificate) doc["stabilization_certificate"] = istr(*certificate);
  Document gens = Document::array();
  for (std::size_t i = 0; i < vars.size(); ++i)
    gens.push_back(generator_entry(vars.name(i), vars.weight(i)));
  doc["generators"] = std::move(gens);
  Document out = Document::array();
  for (Eigen::Index k : ranks) out.push_back(istr(k));
  doc["per_weight_ranks"] = std::move(out);
  return doc;
}

}  // namespace

Document bgl_document(const TruncatedSeriesRing& ring, int n) {
  return series_document("bgl", n, ring.r(), ring.cutoff(), ring.vars(),
                         ring.per_weight_ranks(),
                         ring.stabilization_certificate());
}

Document bgl_pair_document(const DoubleSeriesRing& ring, int n) {
  return series_document("bglpair", n, ring.r(), ring.cutoff(), ring.vars(),
                         ring.per_weight_ranks(), std::nullopt);
}

Document verify_document(const std::string& suite, int max_weight,
                         const std::vector<LemmaReport>& reports) {
  Document doc = Document::object();
  doc["command"] = "verify";
  doc["suite"] = suite;
  doc["max_weight"] = istr(max_weight);
  doc["all_passed"] = all_pass(reports);
  Document lemmas = Document::array();
  for (const auto& r : reports) {
    Document entry = Document::object();
    entry["lemma_id"] = r.lemma_id;
    entry["parameters"] = params_object(r.parameters);
    entry["weights_checked"] = r.weights_checked;
    entry["verdict"] = r.verdict;
    if (r.first_failure) entry["first_failure"] = *r.first_failure;
    if (r.witness) entry["witness"] = *r.witness;
    lemmas.push_back(std::move(entry));
  }
  doc["lemmas"] = std::move(lemmas);
  return doc;
}

std::string render_json(const Document& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string scalar_string(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void flatten(const Document& v, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items())
      flatten(child, path.empty() ? k : path + "." + k, rows);
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const auto& child : v) {
      flatten(child, path + "[" + std::to_string(i) + "]", rows);
      ++i;
    }
  } else {
    rows.emplace_back(path, scalar_string(v));
  }
}

}  // namespace

std::string render_csv(const Document& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::string out;
  for (const auto& [k, v] : rows)
    out += csv_quote(k) + "," + csv_quote(v) + "\n";
  return out;
}

namespace {

std::string table_ring(const Document& doc) {
  std::ostringstream os;
  os << doc["command"].get<std::string>() << " presentation";
  if (doc.contains("n")) os << "  n=" << doc["n"].get<std::string>();
  if (doc.contains("s")) os << " s=" << doc["s"].get<std::string>();
  if (doc.contains("cutoff")) os << " cutoff=" << doc["cutoff"].get<std::string>();
  os << " r=" << doc["r"].get<std::string>();
  if (doc.contains("d")) os << " d=" << doc["d"].get<std::string>();
  os << "\n";
  if (doc.contains("stabilization_certificate"))
    os << "stabilization certificate: "
       << doc["stabilization_certificate"].get<std::string>() << "\n";
  os << "generators:";
  if (doc["generators"].empty()) os << " (none)";
  for (const auto& g : doc["generators"])
    os << " " << g["name"].get<std::string>() << " (weight "
       << g["weight"].get<std::string>() << ", bidegree ("
       << g["bidegree"][0].get<std::string>() << ","
       << g["bidegree"][1].get<std::string>() << "))";
  os << "\n";
  if (doc.contains("relations")) {
    os << "relations:";
    if (doc["relations"].empty()) os << " (none)";
    for (const auto& rel : doc["relations"])
      os << " " << rel.get<std::string>() << ";";
    os << "\n";
  }
  os << "per-weight ranks:";
  for (const auto& k : doc["per_weight_ranks"])
    os << " " << k.get<std::string>();
  os << "\n";
  if (doc.contains("total_rank"))
    os << "total rank: " << doc["total_rank"].get<std::string>() << "\n";
  if (doc.contains("torsion_observed"))
    os << "torsion observed: "
       << (doc["torsion_observed"].get<bool>() ? "yes" : "no") << "\n";
  if (doc.contains("basis_per_weight")) {
    for (const auto& [w, list] : doc["basis_per_weight"].items()) {
      os << "basis weight " << w << ":";
      for (const auto& b : list) os << " " << b.get<std::string>();
      os << "\n";
    }
  }
  return os.str();
}

std::string table_ideal(const Document& doc) {
  std::ostringstream os;
  os << "check: " << doc["lhs"].get<std::string>() << " subset "
     << doc["rhs"].get<std::string>() << "  (mode " << doc["mode"].get<std::string>()
     << ", weights 0.." << doc["max_weight"].get<std::string>() << ")\n";
  for (const auto& w : doc["weights"]) {
    os << "weight " << w["weight"].get<std::string>() << ": "
       << (w["holds"].get<bool>() ? "ok" : "FAIL");
    if (w.contains("witness"))
      os << "  witness " << w["witness"].get<std::string>();
    os << "\n";
  }
  os << "holds: " << (doc["holds"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

std::string table_verify(const Document& doc) {
  std::ostringstream os;
  for (const auto& lemma : doc["lemmas"]) {
    os << (lemma["verdict"].get<bool>() ? "[PASS] " : "[FAIL] ")
       << lemma["lemma_id"].get<std::string>();
    const auto& params = lemma["parameters"];
    if (!params.empty()) {
      os << " (";
      bool first = true;
      for (const auto& [k, v] : params.items()) {
        if (!first) os << ", ";
        os << k << "=" << v.get<std::string>();
        first = false;
      }
      os << ")";
    }
    if (lemma["weights_checked"].get<std::string>() != "-")
      os << " weights " << lemma["weights_checked"].get<std::string>();
    if (lemma.contains("first_failure"))
      os << "  at " << lemma["first_failure"].get<std::string>();
    if (lemma.contains("witness"))
      os << "  witness " << lemma["witness"].get<std::string>();
    os << "\n";
  }
  os << "suite " << doc["suite"].get<std::string>() << ": "
     << (doc["all_passed"].get<bool>() ? "all lemmas pass" : "FAILURES") << "\n";
  return os.str();
}

}  // namespace

std::string render_table(const Document& doc) {
  const std::string command = doc["command"].get<std::string>();
  if (command == "segre" || command == "pont" || command == "fpoly")
    return doc["result"].get<std::string>() + "\n";
  if (command == "ideal") return table_ideal(doc);
  if (command == "verify") return table_verify(doc);
  return table_ring(doc);
}

}  // namespace pontcalc
