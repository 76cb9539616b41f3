#include "hq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "hq/pipeline.hpp"

namespace hq {

using nlohmann::json;

namespace {

json quiver_record(const Quiver& q) {
  json v = json::array(), a = json::array();
  for (size_t i = 0; i < q.num_vertices; ++i) v.push_back({{"index", i}, {"name", q.vertex_names[i]}});
  for (const auto& ar : q.arrows)
    a.push_back({{"name", ar.name}, {"tail", ar.tail}, {"head", ar.head}, {"local", ar.local}});
  return {{"vertices", v}, {"arrows", a}};
}

json path_poly_record(const Quiver& q, const PathPoly& p) {
  json terms = json::array();
  for (const auto& [path, c] : p.terms) {
    json arrows = json::array();
    for (size_t x : path) arrows.push_back(q.arrows[x].name);
    terms.push_back({{"path", arrows}, {"coefficient", c.canonical()}});
  }
  return terms;
}

std::string table_row(const std::vector<std::string>& cells, size_t width) {
  std::ostringstream o;
  for (size_t k = 0; k < cells.size(); ++k) o << (k ? "  " : "") << std::setw(static_cast<int>(width)) << cells[k];
  return o.str() + "\n";
}

json profile_record(const HilbertProfile& p) {
  json dims = json::array();
  for (const auto& d : p.dims) dims.push_back(d);
  return {{"dmax", p.dmax},
          {"total", p.total},
          {"per_pair", dims},
          {"zero_degree", p.zero_degree ? json(*p.zero_degree) : json(nullptr)},
          {"truncated", p.truncated},
          {"total_dimension", p.total_dimension()}};
}

json growth_record(const GrowthVerdict& g) {
  static const char* kinds[] = {"finite_dimensional", "polynomial_growth", "growth_at_least", "inconclusive"};
  return {{"kind", kinds[static_cast<int>(g.kind)]},
          {"gk", g.gk},
          {"exponential", g.exponential},
          {"heuristic", g.heuristic},
          {"summary", g.str()}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string error_record(const std::string& kind, const std::string& message, size_t line, size_t column) {
  json j = {{"version", kRecordsVersion},
            {"error", {{"kind", kind}, {"message", message}, {"line", line}, {"column", column}}}};
  return j.dump(2) + "\n";
}

StageOutput run_stage(const JobSpec& job, const std::string& stage, size_t dmax) {
  static const std::vector<std::string> stages = {"validate", "hdet", "mckay", "lambda", "hilbert", "auslander", "mcm"};
  if (std::find(stages.begin(), stages.end(), stage) == stages.end())
    throw JobError("unknown stage '" + stage + "' (expected validate, hdet, mckay, lambda, hilbert, auslander or mcm)",
                   {});
  Session s = build_session(job);
  const HopfAlgebra& h = *s.hopf;
  StageOutput out;
  std::ostringstream t;
  json rec = {{"version", kRecordsVersion}, {"job", job.name}, {"stage", stage}};
  t << "job " << job.name << "\n";

  if (stage == "validate") {
    ValidationResult v = run_validate(s);
    json checks = json::array();
    for (const auto& c : v.checks) {
      t << std::left << std::setw(24) << c.name << (c.ok ? "PASS  " : "FAIL  ") << c.detail << "\n";
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    size_t failed = 0;
    for (const auto& c : v.checks) failed += !c.ok;
    t << (failed ? std::to_string(failed) + " hypothesis check(s) failed" : std::string("all hypotheses hold")) << "\n";
    rec["checks"] = checks;
    rec["ok"] = v.ok();
    out.exit_code = v.ok() ? 0 : 2;
  } else if (stage == "hdet") {
    HdetResult r = run_hdet(s);
    json vals = json::object();
    t << "hdet:";
    for (size_t i = 0; i < h.dim; ++i) {
      t << (i ? ", " : " ") << h.basis_names[i] << " -> " << r.chi.values[i].pretty();
      vals[h.basis_names[i]] = r.chi.values[i].canonical();
    }
    t << "\ntrivial: " << yes(r.trivial) << "\nalgebra map: " << yes(r.homomorphism) << "\n";
    if (!r.matches.empty()) t << "one-dimensional irrep: " << r.matches << "\n";
    rec["values"] = vals;
    rec["trivial"] = r.trivial;
    rec["homomorphism"] = r.homomorphism;
    rec["irrep"] = r.matches;
  } else if (stage == "mckay") {
    MckayResult r = run_mckay(s);
    t << "vertices:\n";
    json mult = json::array();
    for (size_t i = 0; i < r.quiver.num_vertices; ++i) {
      t << "  " << i << " " << r.quiver.vertex_names[i] << " dim " << h.irreps[i].dim << ", multiplicity in V "
        << r.multiplicities[i] << "\n";
      mult.push_back(r.multiplicities[i]);
    }
    t << "arrows:\n";
    for (const auto& a : r.quiver.arrows) t << "  " << a.name << ": " << a.tail << " -> " << a.head << "\n";
    t << "loops: " << std::count_if(r.quiver.arrows.begin(), r.quiver.arrows.end(),
                                     [](const Arrow& a) { return a.tail == a.head; })
      << "\ninner_faithful: " << yes(r.inner_faithful) << "\n";
    rec["quiver"] = quiver_record(r.quiver);
    rec["multiplicities"] = mult;
    rec["inner_faithful"] = r.inner_faithful;
    out.dot = quiver_dot(r.quiver);
  } else {
    LambdaResult l = run_lambda(s);
    const Quiver& q = l.qp.quiver;
    if (stage == "lambda") {
      t << "route: " << l.route;
      if (l.qp.route_check.compared)
        t << " (xi and psi routes agree on " << l.qp.route_check.agreed << "/" << l.qp.route_check.compared
          << " paths)";
      t << "\n";
      bool triv = is_trivial_character(h, l.hdet);
      t << "hdet: " << (triv ? "trivial" : "nontrivial") << "\ntau:";
      json tau = json::array();
      for (size_t i = 0; i < l.qp.tau.size(); ++i) {
        t << " " << q.vertex_names[i] << "->" << q.vertex_names[l.qp.tau[i]];
        tau.push_back(l.qp.tau[i]);
      }
      t << "\nPhi = " << path_poly_str(q, l.qp.phi) << "\n";
      auto rels = relation_strings(l.algebra);
      t << "relations (" << rels.size() << "):\n";
      for (const auto& r : rels) t << "  " << r << "\n";
      t << "recognition: " << l.mesh.str();
      if (!l.mesh.reason.empty()) t << " (" << l.mesh.reason << ")";
      t << "\n";
      json relrec = json::array();
      for (const auto& r : l.algebra.relations)
        relrec.push_back({{"tail", r.tail}, {"head", r.head}, {"terms", path_poly_record(q, r.poly)}});
      rec["route"] = l.route;
      rec["route_check"] = {{"compared", l.qp.route_check.compared}, {"agreed", l.qp.route_check.agreed}};
      rec["hdet_trivial"] = triv;
      rec["tau"] = tau;
      rec["quiver"] = quiver_record(q);
      rec["phi"] = path_poly_record(q, l.qp.phi);
      rec["phi_text"] = path_poly_str(q, l.qp.phi);
      rec["relations"] = relrec;
      rec["relation_text"] = rels;
      rec["recognition"] = l.mesh.str();
      out.dot = quiver_dot(q);
    } else if (stage == "hilbert") {
      HilbertResult r = run_hilbert(l, dmax);
      t << table_row({"d", "Lambda", "Lambda/<e0>"}, 12);
      size_t n = std::max(r.lambda.total.size(), r.quotient.total.size());
      for (size_t d = 0; d < n; ++d) {
        auto cell = [&](const HilbertProfile& p) {
          if (d < p.total.size()) return std::to_string(p.total[d]);
          return std::string(p.zero_degree ? "0" : "-");
        };
        t << table_row({std::to_string(d), cell(r.lambda), cell(r.quotient)}, 12);
      }
      t << "Lambda: " << r.lambda_growth.str() << (r.lambda.truncated ? " [truncated]" : "") << "\n";
      t << "Lambda/<e0>: " << r.quotient_growth.str() << (r.quotient.truncated ? " [truncated]" : "")
        << ", total dimension " << r.quotient.total_dimension() << "\n";
      rec["lambda"] = profile_record(r.lambda);
      rec["lambda_growth"] = growth_record(r.lambda_growth);
      rec["quotient"] = profile_record(r.quotient);
      rec["quotient_growth"] = growth_record(r.quotient_growth);
    } else if (stage == "auslander") {
      AuslanderVerdict v = run_auslander(s, l, dmax);
      t << "Lambda/<e0>:";
      for (size_t x : v.profile.total) t << " " << x;
      t << "\ngrowth: " << v.growth.str() << "\nauslander: " << v.str() << "\n";
      rec["verdict"] = v.str();
      rec["certified"] = v.certified;
      rec["gkdim"] = v.gkdim;
      rec["growth"] = growth_record(v.growth);
      rec["quotient"] = profile_record(v.profile);
    } else {
      auto table = mcm_dimension_vectors(l.algebra, dmax);
      std::vector<std::string> head{"d"};
      for (size_t i = 0; i < q.num_vertices; ++i) head.push_back(q.vertex_names[i]);
      size_t width = 4;
      for (const auto& x : head) width = std::max(width, x.size());
      t << "dim e0 Lambda_d e_i\n" << table_row(head, width);
      for (size_t d = 0; d < table.size(); ++d) {
        std::vector<std::string> row{std::to_string(d)};
        for (size_t x : table[d]) row.push_back(std::to_string(x));
        t << table_row(row, width);
      }
      rec["vertices"] = quiver_record(q)["vertices"];
      rec["table"] = table;
    }
  }
  out.text = t.str();
  out.records = rec.dump(2) + "\n";
  return out;
}

}  // namespace hq
