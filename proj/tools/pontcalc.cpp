#include <pontcalc/bundle_parse.hpp>
#include <pontcalc/ideal_parse.hpp>
#include <pontcalc/json_out.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace pontcalc;

int default_max_weight() {
  if (const char* env = std::getenv("PONTCALC_MAX_WEIGHT")) {
    try {
      const int w = std::stoi(env);
      if (w >= 0) return w;
    } catch (...) {
      // ignore malformed values and fall through to the default
    }
  }
  return 10;
}

void emit(const Document& doc, const std::string& format) {
  if (format == "json")
    std::cout << render_json(doc);
  else if (format == "csv")
    std::cout << render_csv(doc);
  else
    std::cout << render_table(doc);
}

FormalBundle bundle_from_text(const std::string& text) {
  return elaborate(*parse_bundle_expr(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pontryagin-class calculus: Segre classes, graded ideals, "
               "formal bundles, grassmannian ring presentations and a lemma "
               "verifier"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.failure_message(CLI::FailureMessage::simple);

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->transform(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  int segre_r = 1, segre_j = 0;
  auto* cmd_segre = app.add_subcommand("segre", "Segre-type class s_j");
  cmd_segre->add_option("--r", segre_r, "Number of variables")->required();
  cmd_segre->add_option("--j", segre_j, "Index j")->required();

  int ideal_r = 1;
  std::string ideal_check, ideal_mode = "integer";
  int ideal_max_weight = -1;
  auto* cmd_ideal =
      app.add_subcommand("ideal", "Degreewise ideal containment check");
  cmd_ideal->add_option("--r", ideal_r, "Number of variables")->required();
  cmd_ideal->add_option("--check", ideal_check, "e.g. \"J(4) subset L^2\"")
      ->required();
  cmd_ideal->add_option("--max-weight", ideal_max_weight,
                        "Weight bound (default: PONTCALC_MAX_WEIGHT or 10)");
  cmd_ideal->add_option("--mode", ideal_mode, "Membership mode")
      ->transform(CLI::IsMember({"integer", "rational"}));

  int pont_k = 0;
  std::string pont_bundle;
  auto* cmd_pont = app.add_subcommand("pont", "Pontryagin class p_k of a bundle");
  cmd_pont->add_option("--k", pont_k, "Class index")->required();
  cmd_pont->add_option("--bundle", pont_bundle, "Bundle expression")->required();

  int fpoly_r = 0;
  std::string fpoly_bundle;
  auto* cmd_fpoly = app.add_subcommand("fpoly", "Polynomial f_{r,E}");
  cmd_fpoly->add_option("--r", fpoly_r, "Index r")->required();
  cmd_fpoly->add_option("--bundle", fpoly_bundle, "Bundle expression")
      ->required();

  int gr2_s = 0;
  auto* cmd_gr2 = app.add_subcommand("gr2", "Ring presentation for Gr(2, s)");
  cmd_gr2->add_option("--s", gr2_s, "Ambient dimension")->required();

  int gr_n = 0, gr_s = 0;
  auto* cmd_gr = app.add_subcommand("gr", "Ring presentation for Gr(n, s)");
  cmd_gr->add_option("--n", gr_n, "Plane dimension")->required();
  cmd_gr->add_option("--s", gr_s, "Ambient dimension")->required();

  int bgl_n = 0, bgl_cutoff = 0;
  auto* cmd_bgl = app.add_subcommand("bgl", "Truncated series ring for BGL_n");
  cmd_bgl->add_option("--n", bgl_n, "Group rank")->required();
  cmd_bgl->add_option("--cutoff", bgl_cutoff, "Weight cutoff")->required();

  int pair_n = 0, pair_cutoff = 0;
  auto* cmd_pair =
      app.add_subcommand("bglpair", "Truncated series ring for BGL_n x BGL_n");
  cmd_pair->add_option("--n", pair_n, "Group rank")->required();
  cmd_pair->add_option("--cutoff", pair_cutoff, "Weight cutoff")->required();

  std::string verify_suite = "all";
  int verify_max_weight = -1;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the lemma verification suites");
  cmd_verify->add_option("--suite", verify_suite, "Suite to run")
      ->transform(CLI::IsMember({"segre", "ideals", "bundles", "rings", "all"}));
  cmd_verify->add_option("--max-weight", verify_max_weight,
                         "Weight bound (default: PONTCALC_MAX_WEIGHT or 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*cmd_segre) {
      if (segre_r < 1) throw RangeError("segre requires r >= 1");
      emit(poly_document("segre",
                         {{"r", std::to_string(segre_r)},
                          {"j", std::to_string(segre_j)}},
                         segre(segre_r, segre_j)),
           format);
      return 0;
    }
    if (*cmd_ideal) {
      if (ideal_r < 1) throw RangeError("ideal requires r >= 1");
      const int w = ideal_max_weight >= 0 ? ideal_max_weight : default_max_weight();
      auto [lhs, rhs] = parse_ideal_check(ideal_check, ideal_r);
      const MembershipMode mode = ideal_mode == "rational"
                                      ? MembershipMode::rational_span
                                      : MembershipMode::integer_lattice;
      ContainmentReport report = ideal_contains_ideal(lhs, rhs, w, mode);
      emit(containment_document(lhs.to_string(), rhs.to_string(), report),
           format);
      return report.holds ? 0 : 1;
    }
    if (*cmd_pont) {
      FormalBundle e = bundle_from_text(pont_bundle);
      emit(poly_document("pont",
                         {{"k", std::to_string(pont_k)},
                          {"bundle", e.to_string()}},
                         pontryagin(pont_k, e)),
           format);
      return 0;
    }
    if (*cmd_fpoly) {
      FormalBundle e = bundle_from_text(fpoly_bundle);
      emit(poly_document("fpoly",
                         {{"r", std::to_string(fpoly_r)},
                          {"bundle", e.to_string()}},
                         f_poly(fpoly_r, e).poly),
           format);
      return 0;
    }
    if (*cmd_gr2) {
      emit(gr2_document(gr2_ring(gr2_s)), format);
      return 0;
    }
    if (*cmd_gr) {
      emit(gr_document(gr_ring(gr_n, gr_s)), format);
      return 0;
    }
    if (*cmd_bgl) {
      emit(bgl_document(bgl_ring(bgl_n, bgl_cutoff), bgl_n), format);
      return 0;
    }
    if (*cmd_pair) {
      emit(bgl_pair_document(bgl_pair_ring(pair_n, pair_cutoff), pair_n),
           format);
      return 0;
    }
    if (*cmd_verify) {
      const int w =
          verify_max_weight >= 0 ? verify_max_weight : default_max_weight();
      std::vector<LemmaReport> reports;
      if (verify_suite == "segre") reports = verify_segre_suite();
      else if (verify_suite == "ideals") reports = verify_ideal_suite(w);
      else if (verify_suite == "bundles") reports = verify_bundle_suite();
      else if (verify_suite == "rings") reports = verify_ring_suite(w);
      else reports = verify_all(w);
      emit(verify_document(verify_suite, w, reports), format);
      return all_pass(reports) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
