#include <pontcalc/bundle.hpp>

namespace pontcalc {

std::vector<FIdentityCheck> verify_f_identities(const FormalBundle& e,
                                                const FormalBundle& d,
                                                int r_max) {
  if (d.roots().size() != 1 || d.lines() != 0)
    throw ShapeError("D must be a single rank-two summand, got " +
                     d.to_string());
  if (e.ambient() != d.ambient())
    throw VarSetError("E and D live over different ambient rings");

  const std::string& root = d.roots().front();
  std::vector<std::string> q_roots = e.roots();
  auto it = std::find(q_roots.begin(), q_roots.end(), root);
  if (it == q_roots.end())
    throw ShapeError("D = " + d.to_string() + " is not a summand of E = " +
                     e.to_string());
  q_roots.erase(it);
  const FormalBundle q(e.ambient(), std::move(q_roots), e.lines());

  const VarSet& vars = e.ambient();
  const std::size_t u = e.u_index();
  const GradedPolynomial u_poly = GradedPolynomial::variable(vars, u);
  const GradedPolynomial pi_d =
      GradedPolynomial::variable(vars, *vars.index_of(root_variable_name(root)));
  const FormalBundle e_plus_line(vars, e.roots(), e.lines() + 1);

  std::vector<FIdentityCheck> checks = {
      {"p_r(E) = f_{r,E} + u*f_{r-1,E}", r_max, true, std::nullopt},
      {"f_{r,E} = f_{r,E+1}", r_max, true, std::nullopt},
      {"f_{r,E} = f_{r,Q} + pi(D)*f_{r-1,Q}", r_max, true, std::nullopt},
      {"f_{r,E}(pi(D)) = p_r(Q)", r_max, true, std::nullopt},
  };

  for (int r = 0; r <= r_max; ++r) {
    const GradedPolynomial fe = f_poly(r, e).poly;
    const GradedPolynomial fe_prev = f_poly(r - 1, e).poly;

    if (pontryagin(r, e) != fe + u_poly * fe_prev && checks[0].holds) {
      checks[0].holds = false;
      checks[0].failing_r = r;
    }
    if (fe != f_poly(r, e_plus_line).poly && checks[1].holds) {
      checks[1].holds = false;
      checks[1].failing_r = r;
    }
    const GradedPolynomial fq = f_poly(r, q).poly;
    const GradedPolynomial fq_prev = f_poly(r - 1, q).poly;
    if (fe != fq + pi_d * fq_prev && checks[2].holds) {
      checks[2].holds = false;
      checks[2].failing_r = r;
    }
    if (fe.substitute(u, pi_d) != pontryagin(r, q) && checks[3].holds) {
      checks[3].holds = false;
      checks[3].failing_r = r;
    }
  }
  return checks;
}

}  // namespace pontcalc
