// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "hq/report.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hq;

namespace {

// Runtime limits in seconds.
constexpr double kKacPalyutkinLimit = 1.0;   // per job
constexpr double kDualGroupLimit = 2.0;      // per n
constexpr double kDownUpLimit = 5.0;
constexpr double kHdetLimit = 1.0;           // per case
constexpr double kAuslanderSuiteLimit = 60.0;
constexpr size_t kAuslanderDmax = 40;
constexpr size_t kOracleDmax = 5;
constexpr size_t kBasisDmax = 6;
constexpr int kBasisTrials = 3;
constexpr uint64_t kBasisSeed = 20240611;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void within(double seconds, double limit, const std::string& what) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s took %.3fs (limit %.1fs)", what.c_str(), seconds, limit);
    expect(seconds < limit, buf);
  }
};

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

Session session_of(const std::string& name) { return build_session(parse_job(example_job(name))); }

std::string relation_text(const QuiverAlgebra& a) {
  std::string s;
  for (const auto& r : relation_strings(a)) s += r + "; ";
  return s;
}

void kac_palyutkin(Check& c) {
  struct Case {
    std::string job, phi;
    std::vector<std::string> relations;
  };
  const std::vector<Case> cases = {
      {"kac_palyutkin_A", "2*aA + 2*bB + 2*cC + 2*dD + Aa + Bb + Cc + Dd", {"aA", "bB", "cC", "dD", "Aa + Bb + Cc + Dd"}},
      {"kac_palyutkin_B", "2*aB + 2*bA - 2*cD - 2*dC + Aa + Bb - Cc - Dd", {"aB", "bA", "cD", "dC", "Aa + Bb - Cc - Dd"}}};
  for (const auto& k : cases) {
    Timer t;
    LambdaResult l = run_lambda(session_of(k.job));
    double secs = t.seconds();
    std::string phi = path_poly_str(l.qp.quiver, l.qp.phi);
    c.expect(phi == k.phi, k.job + ": Phi = " + phi);
    QuiverAlgebra want = hqtest::algebra_from(l.algebra.quiver, k.relations, make_context(4));
    c.expect(hqtest::same_relations(l.algebra, want), k.job + ": relation row spaces differ");
    c.within(secs, kKacPalyutkinLimit, k.job);
    c.note << k.job << " " << fixed3(secs) << "s ";
  }
}

void dual_dihedral(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    std::string name = "dual_D" + std::to_string(n);
    Timer t;
    LambdaResult l = run_lambda(session_of(name));
    double secs = t.seconds();
    // Atilde(2n-1): x_i : i -> i+1 (lower case), X_i : i+1 -> i (upper case);
    // at vertex i the relation (-1)^i x_i X_i + (-1)^(i-1) X_(i-1) x_(i-1).
    size_t v = static_cast<size_t>(2 * n);
    std::vector<std::string> want;
    for (size_t i = 0; i < v; ++i) {
      size_t p = (i + v - 1) % v;
      std::string lo(1, static_cast<char>('a' + i)), up(1, static_cast<char>('A' + i));
      std::string plo(1, static_cast<char>('a' + p)), pup(1, static_cast<char>('A' + p));
      want.push_back(std::string(i % 2 ? "-" : "") + lo + up + (i % 2 ? " + " : " - ") + pup + plo);
    }
    QuiverAlgebra expected;
    try {
      expected = canonicalize(hqtest::algebra_from(l.algebra.quiver, want, make_context(1)));
    } catch (const std::exception& e) {
      c.expect(false, name + ": " + e.what());
      continue;
    }
    c.expect(relation_text(l.algebra) == relation_text(expected),
             name + ": relations " + relation_text(l.algebra) + "expected " + relation_text(expected));
    c.expect(l.mesh.kind == MeshVerdict::Kind::Preprojective && l.mesh.type == "Atilde" + std::to_string(2 * n - 1),
             name + ": recognition " + l.mesh.str());
    c.within(secs, kDualGroupLimit, name);
    c.note << "n=" << n << " " << fixed3(secs) << "s ";
  }
}

void down_up(Check& c) {
  Timer t;
  Session s = session_of("downup_dualD4");
  LambdaResult l = run_lambda(s);
  double secs = t.seconds();
  const std::vector<std::string> want = {"bBf - fDd", "bLl - fFc", "BbL - LeE", "BfF - LlC", "cCk - kEe", "cJj - kKb",
                                         "CcJ - JdD", "CkK - JjB", "dDj - jBb", "dFk - jLe", "DdF - FcC", "DjL - FkE",
                                         "eEl - lCc", "eKf - lJd", "EeK - KbB", "ElJ - KfD"};
  c.expect(s.pres.ell == 4 && s.pres.m == 3, "expected ell = 4, m = 3");
  c.expect(l.algebra.relations.size() == 16, "relation count " + std::to_string(l.algebra.relations.size()));
  c.expect(hqtest::same_relations(l.algebra, hqtest::algebra_from(l.algebra.quiver, want, make_context(1))),
           "relation row spaces differ: " + relation_text(l.algebra));
  c.within(secs, kDownUpLimit, "downup_dualD4");
  c.note << fixed3(secs) << "s";
}

// chi is an algebra map H -> k: chi(b_i b_j) = chi(b_i) chi(b_j) and chi(1) = 1.
bool multiplicative(const HopfAlgebra& h, const Character& chi) {
  auto eval = [&](const Element& x) {
    Scalar s;
    for (size_t k = 0; k < h.dim; ++k)
      if (!x[k].is_zero()) s += x[k] * chi.values[k];
    return s;
  };
  if (eval(h.unit) != Scalar(1)) return false;
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j)
      if (eval(h.multiply(h.basis(i), h.basis(j))) != chi.values[i] * chi.values[j]) return false;
  return true;
}

void hdet_cases(Check& c) {
  std::vector<std::string> trivial = {"kac_palyutkin_A", "dual_D3", "dual_D4", "dual_D5", "dual_D6", "cyclic_q"};
  auto run = [&](const std::string& name, const std::function<bool(const Session&, const HdetResult&)>& want) {
    Timer t;
    Session s = session_of(name);
    HdetResult r = run_hdet(s);
    double secs = t.seconds();
    c.expect(want(s, r), name + ": unexpected hdet");
    c.expect(r.homomorphism && multiplicative(*s.hopf, r.chi), name + ": hdet is not an algebra map");
    c.within(secs, kHdetLimit, name);
  };
  for (const auto& name : trivial) run(name, [](const Session&, const HdetResult& r) { return r.trivial; });
  run("downup_dualD4", [](const Session& s, const HdetResult& r) {
    // evaluation at g^2: f_x -> 1 exactly when x = g^2
    const FiniteGroup& g = *s.hopf->group;
    size_t g2 = g.evaluate("g^2");
    for (size_t x = 0; x < g.size(); ++x)
      if (r.chi.values[x] != Scalar(x == g2 ? 1 : 0)) return false;
    return !r.trivial && r.matches == "chi_g^2";
  });
  run("kac_palyutkin_B", [](const Session& s, const HdetResult& r) {
    const HopfAlgebra& h = *s.hopf;
    for (const auto& rep : h.irreps)
      if (rep.name == "V1") return !r.trivial && r.chi == character_of_one_dim_rep(rep);
    return false;
  });
  c.note << trivial.size() + 2 << " cases";
}

void auslander_suite(Check& c) {
  std::vector<std::string> names;
  for (int n = 3; n <= 6; ++n)
    for (const char* q : {"1", "2", "m1"}) names.push_back("cyclic_q_n" + std::to_string(n) + "_q" + q);
  for (const char* x : {"L1_case_c", "dihedral_case_d_n4", "dihedral_case_d_n6", "jordan_case_h"}) names.push_back(x);
  for (int n = 3; n <= 6; ++n) names.push_back("dual_D" + std::to_string(n));
  Timer t;
  for (const auto& name : names) {
    Session s = session_of(name);
    LambdaResult l = run_lambda(s);
    AuslanderVerdict v = auslander_check(l.algebra, s.pres.gkdim, kAuslanderDmax);
    c.expect(v.str() == "isomorphism (certified)", name + ": " + v.str());
    c.expect(v.profile.zero_degree && *v.profile.zero_degree <= kAuslanderDmax, name + ": no zero degree");
  }
  double secs = t.seconds();
  c.within(secs, kAuslanderSuiteLimit, "suite");
  c.note << names.size() << " jobs in " << fixed3(secs) << "s";
}

void quotient_dimensions(Check& c) {
  for (const auto& [name, want] : std::vector<std::pair<std::string, size_t>>{{"L1_case_c", 2}, {"jordan_case_h", 1}}) {
    LambdaResult l = run_lambda(session_of(name));
    HilbertProfile p = graded_dims(quotient_by_vertex(l.algebra, 0), kAuslanderDmax);
    c.expect(p.zero_degree.has_value() && p.total_dimension() == want,
             name + ": total dimension " + std::to_string(p.total_dimension()));
    c.note << name << " " << p.total_dimension() << " ";
  }
}

void oracle_equivalence(Check& c) {
  for (const auto& name : example_names()) {
    Session s = session_of(name);
    LambdaResult l = run_lambda(s);
    auto got = graded_dims(l.algebra, kOracleDmax).dims;
    auto hom = oracle::hom_space_dims(*s.hopf, s.pres.v.action, s.pres.w, s.pres.ell, s.pres.m, kOracleDmax);
    got.resize(kOracleDmax + 1);
    c.expect(got == hom, name + ": graded dimensions differ from dim Hom_H(V_i, A_d (x) V_j)");
  }
  c.note << example_names().size() << " examples, d <= " << kOracleDmax;
}

void basis_independence(Check& c) {
  hqtest::Gen gen(kBasisSeed);
  size_t runs = 0;
  for (const char* name : {"kac_palyutkin_A", "kac_palyutkin_B", "dual_D3"}) {
    Session s = session_of(name);
    auto want = graded_dims(run_lambda(s).algebra, kBasisDmax).dims;
    for (int trial = 0; trial < kBasisTrials; ++trial) {
      const Quiver q = build_phi(s.pres).quiver;
      ArrowOptions opt;
      for (size_t i = 0; i < q.num_vertices; ++i)
        for (size_t j = 0; j < q.num_vertices; ++j)
          if (size_t m = q.multiplicity(i, j)) opt.basis_change[{i, j}] = gen.invertible(m, *s.ctx);
      for (size_t i = 0; i < q.num_vertices; ++i) opt.theta_scale.push_back(gen.nonzero_cyclotomic(*s.ctx));
      QuiverPotential qp = build_phi(s.pres, opt);
      auto got = graded_dims(derive_quiver_relations(qp), kBasisDmax).dims;
      c.expect(got == want, std::string(name) + ": trial " + std::to_string(trial) + " changed the dimensions");
      ++runs;
    }
  }
  c.note << runs << " randomized bases, seed " << kBasisSeed << ", d <= " << kBasisDmax;
}

void route_agreement(Check& c) {
  size_t compared = 0, agreed = 0;
  for (const auto& name : example_names()) {
    LambdaResult l = run_lambda(session_of(name), {"general", {}});
    const RouteCheck& r = l.qp.route_check;
    c.expect(r.compared > 0, name + ": no paths compared");
    c.expect(r.ok(), name + ": " + std::to_string(r.agreed) + "/" + std::to_string(r.compared) + " agree");
    compared += r.compared;
    agreed += r.agreed;
  }
  c.note << agreed << "/" << compared << " paths agree";
}

void screening(Check& c) {
  const std::vector<std::pair<std::string, std::string>> controls = {{"control_relations_unstable", "relations_stable"},
                                                                     {"control_line_unstable", "line_stable"},
                                                                     {"control_not_inner_faithful", "inner_faithful"}};
  for (const auto& [name, check] : controls) {
    ValidationResult v = run_validate(session_of(name));
    const CheckLine* line = v.find(check);
    c.expect(line && !line->ok, name + ": " + check + " not flagged");
    c.expect(run_stage(parse_job(example_job(name)), "validate", 10).exit_code == 2, name + ": exit code is not 2");
    c.note << check << " ";
  }
  for (const auto& name : example_names())
    c.expect(run_validate(session_of(name)).ok(), name + ": a positive example fails validation");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Kac-Palyutkin Phi and relations", kac_palyutkin},
      {"dual dihedral preprojective relations", dual_dihedral},
      {"down-up sixteen relations", down_up},
      {"homological determinants", hdet_cases},
      {"certified Auslander verdicts", auslander_suite},
      {"dimensions of Lambda/<e0>", quotient_dimensions},
      {"oracle equivalence", oracle_equivalence},
      {"basis independence", basis_independence},
      {"route agreement", route_agreement},
      {"hypothesis screening", screening}};
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::string note = c.note.str();
    while (!note.empty() && note.back() == ' ') note.pop_back();
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << " (" << note << ")\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  return failed ? 1 : 0;
}
