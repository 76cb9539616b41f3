#include "hq/pipeline.hpp"

#include <algorithm>

#include "hq/parse.hpp"

namespace hq {

namespace {

size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  return static_cast<size_t>(std::find(names.begin(), names.end(), n) - names.begin());
}

// Rethrows library errors about the input as JobErrors at pos.
template <class F>
auto at_pos(SourcePos pos, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JobError&) {
    throw;
  } catch (const HypothesisViolation&) {
    throw;
  } catch (const HopfError& e) {
    throw JobError(e.what(), pos);
  } catch (const GroupError& e) {
    throw JobError(e.what(), pos);
  } catch (const ShapeError& e) {
    throw JobError(e.what(), pos);
  } catch (const ScalarError& e) {
    throw JobError(e.what(), pos);
  }
}

FiniteGroup build_group(const JobSpec& job, const CycContext& ctx) {
  std::vector<std::string> names;
  for (const auto& g : job.generators) names.push_back(g.name);
  bool perms = job.generators.front().is_perm;
  for (const auto& g : job.generators)
    if (g.is_perm != perms) throw JobError("generators must be all permutations or all matrices", g.value.pos);
  SourcePos pos = job.generators.front().value.pos;
  if (perms) {
    std::vector<std::vector<int>> p;
    for (const auto& g : job.generators) p.push_back(job_permutation(g.value));
    for (const auto& x : p)
      if (x.size() != p.front().size())
        throw JobError("permutation generators act on sets of different sizes", pos);
    return at_pos(pos, [&] { return group_from_permutations(names, p, job.elements); });
  }
  std::vector<Matrix> m;
  for (const auto& g : job.generators) m.push_back(job_matrix(g.value, ctx));
  return at_pos(pos, [&] { return group_from_matrices(names, m, job.elements); });
}

std::shared_ptr<HopfAlgebra> build_tables(const JobSpec& job, const CycContext& ctx) {
  const auto& tb = job.tables;
  auto h = std::make_shared<HopfAlgebra>();
  h->name = job.name;
  h->kind = HopfAlgebra::Kind::Tables;
  size_t n = tb.basis.size();
  h->dim = n;
  h->basis_names = tb.basis;
  auto element = [&](const JobText& t) {
    Element e(n, Scalar(0));
    if (t.text == "0") return e;
    for (const auto& [word, c] : job_combination(t, tb.basis, ctx)) {
      if (word.size() != 1) throw JobError("expected a linear combination of basis elements", t.pos);
      e[word[0]] += c;
    }
    return e;
  };
  h->unit = element(*tb.unit);
  h->mult.assign(n * n, {});
  std::vector<bool> have(n * n, false);
  for (const auto& [bb, t] : tb.mult) {
    size_t i = index_of(tb.basis, bb.first), j = index_of(tb.basis, bb.second);
    if (have[i * n + j]) throw JobError("duplicate mult entry for " + bb.first + " " + bb.second, t.pos);
    have[i * n + j] = true;
    Element e = element(t);
    for (size_t k = 0; k < n; ++k)
      if (!e[k].is_zero()) h->mult[i * n + j].push_back({k, e[k]});
  }
  h->coproduct.assign(n, {});
  for (const auto& [b, t] : tb.coproduct)
    for (const auto& [l, r, c] : job_coproduct(t, tb.basis, ctx)) h->coproduct[index_of(tb.basis, b)].push_back({l, r, c});
  h->counit.assign(n, Scalar(0));
  for (const auto& [b, t] : tb.counit) h->counit[index_of(tb.basis, b)] = job_scalar(t, ctx);
  h->antipode = Matrix(n, n);
  for (const auto& [b, t] : tb.antipode) {
    Element e = element(t);
    size_t col = index_of(tb.basis, b);
    for (size_t k = 0; k < n; ++k) h->antipode(k, col) = e[k];
  }
  for (const auto& g : tb.generators) h->generators.push_back(index_of(tb.basis, g));
  for (const auto& ir : job.irreps) {
    std::vector<Matrix> imgs;
    for (const auto& [g, t] : ir.images) imgs.push_back(job_matrix(t, ctx));
    Rep r = at_pos(ir.pos, [&] { return rep_from_generator_images(*h, ir.name, imgs); });
    h->irreps.push_back(std::move(r));
  }
  return h;
}

Rep build_action(const Session& s) {
  const JobSpec& job = s.job;
  const HopfAlgebra& h = *s.hopf;
  size_t r = job.variables.size();
  if (job.hopf == "dual_group") {
    Rep v;
    v.name = "V";
    v.dim = r;
    for (size_t a = 0; a < h.dim; ++a) {
      Matrix m(r, r);
      for (size_t t = 0; t < r; ++t)
        if (s.degrees[t] == a) m(t, t) = Scalar(1);
      v.action.push_back(m);
    }
    return v;
  }
  if (job.action_kind == "trivial") {
    Rep v;
    v.name = "V";
    v.dim = r;
    for (size_t b = 0; b < h.dim; ++b) v.action.push_back(Matrix::identity(r) * h.counit[b]);
    return v;
  }
  if (job.action_kind == "irrep") {
    for (const auto& ir : h.irreps)
      if (ir.name == job.action_irrep) {
        if (ir.dim != r)
          throw JobError("action irrep " + ir.name + " has dimension " + std::to_string(ir.dim) + ", expected " +
                             std::to_string(r) + " (" + std::to_string(r) + " variables)",
                         job.action_pos);
        Rep v = ir;
        v.name = "V";
        return v;
      }
    std::string known;
    for (const auto& ir : h.irreps) known += " " + ir.name;
    throw JobError("undeclared irrep '" + job.action_irrep + "' (known:" + known + ")", job.action_pos);
  }
  std::vector<Matrix> gen_images;
  for (const auto& [g, t] : job.action) gen_images.push_back(job_matrix(t, *s.ctx));
  std::vector<Matrix> per_h_generator;
  if (job.hopf == "group_algebra") {
    const FiniteGroup& g = *h.group;
    for (size_t e : h.generators) {
      size_t k = static_cast<size_t>(std::find(g.generators.begin(), g.generators.end(), e) - g.generators.begin());
      per_h_generator.push_back(gen_images[k]);
    }
  } else {
    per_h_generator = gen_images;
  }
  return at_pos(job.action_pos, [&] { return rep_from_generator_images(h, "V", per_h_generator); });
}

}  // namespace

Session build_session(const JobSpec& job) {
  Session s;
  s.job = job;
  s.ctx = &make_context(job.order);
  const CycContext& ctx = *s.ctx;
  if (job.hopf == "trivial") {
    s.hopf = std::make_shared<HopfAlgebra>(build_trivial_hopf(ctx));
  } else if (job.hopf == "kac_palyutkin") {
    s.hopf = at_pos(job.hopf_pos, [&] { return std::make_shared<HopfAlgebra>(build_kac_palyutkin(ctx)); });
  } else if (job.hopf == "group_algebra") {
    FiniteGroup g = build_group(job, ctx);
    std::vector<GroupIrrepData> irreps;
    if (job.character_irreps) {
      irreps = at_pos(job.hopf_pos, [&] { return abelian_characters(g, ctx); });
    } else {
      for (const auto& ir : job.irreps) {
        GroupIrrepData d{ir.name, {}};
        for (const auto& [gen, t] : ir.images) d.images.push_back(job_matrix(t, ctx));
        irreps.push_back(std::move(d));
      }
    }
    s.hopf = at_pos(job.hopf_pos, [&] { return std::make_shared<HopfAlgebra>(build_group_algebra(g, irreps, ctx)); });
  } else if (job.hopf == "dual_group") {
    FiniteGroup g = build_group(job, ctx);
    for (const auto& [v, word] : job.degrees)
      s.degrees.push_back(at_pos(job.degrees_pos, [&] { return g.evaluate(word); }));
    s.hopf = std::make_shared<HopfAlgebra>(build_dual_group_algebra(g, ctx));
  } else {
    s.hopf = build_tables(job, ctx);
  }

  Presentation& p = s.pres;
  p.hopf = s.hopf;
  p.var_names = job.variables;
  p.v = build_action(s);
  p.ell = job.ell;
  p.m = job.m;
  p.gkdim = job.gkdim;
  p.w = TensorElement(job.ell);
  for (const auto& [word, c] : job_combination(*job.superpotential, job.variables, ctx))
    p.w.add(Word(word.begin(), word.end()), c);
  if (p.w.is_zero()) throw JobError("the superpotential is zero", job.superpotential->pos);
  if (job.sigma) {
    p.sigma = job_matrix(*job.sigma, ctx);
    s.sigma_found = true;
  } else if (auto t = find_twist(p.w, p.rank())) {
    p.sigma = *t;
    s.sigma_found = true;
  }
  return s;
}

bool ValidationResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.ok; });
}

const CheckLine* ValidationResult::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationResult run_validate(const Session& s) {
  ValidationResult out;
  const HopfAlgebra& h = *s.hopf;
  const Presentation& p = s.pres;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    out.checks.push_back({name, ok, detail});
    return ok;
  };

  ValidationReport hr = validate_hopf(h);
  std::string hd;
  for (const auto& f : hr.failures) hd += (hd.empty() ? "" : "; ") + f;
  add("hopf_axioms", hr.ok(), hr.ok() ? "dim " + std::to_string(h.dim) + ", " + std::to_string(h.irreps.size()) +
                                            " irreducible representations" : hd);
  std::string why;
  bool vrep = is_representation(h, p.v, &why);
  add("module_V", vrep, vrep ? "dim " + std::to_string(p.v.dim) : why);
  if (!hr.ok() || !vrep) return out;

  if (s.sigma_found) {
    bool tw = check_twisted(p.w, p.sigma);
    add("twisted_superpotential", tw, tw ? "sigma = " + p.sigma.str() : "w is not fixed by the sigma-twisted cyclic shift");
  } else {
    add("twisted_superpotential", false, "no twist sigma makes w a twisted superpotential");
  }

  StabilityResult line = line_stable(p);
  add("line_stable", line.stable, line.stable ? "kw is an H-submodule" : line.witness);
  StabilityResult rel = relation_space_stable(p);
  add("relations_stable", rel.stable,
      rel.stable ? std::to_string(p.relations().size()) + " relations span an H-submodule" : rel.witness);
  bool inner = is_inner_faithful(h, p.v);
  add("inner_faithful", inner, inner ? "McKay quiver is strongly connected" : "McKay quiver is not strongly connected");

  if (line.stable) {
    try {
      Character chi = hdet(p);
      add("hdet_character", true, "hdet is an algebra map H -> k");
      SmashCheck sm = verify_twisted_weak_potential_smash(p, chi);
      add("smash_potential", sm.ok,
          sm.ok ? "w (x) 1 is a twisted weak potential for A # H"
                : "fails at basis element " + h.basis_names[sm.witness.value_or(0)]);
    } catch (const HypothesisViolation& e) {
      add("hdet_character", false, e.what());
    }
  }
  return out;
}

HdetResult run_hdet(const Session& s) {
  HdetResult r;
  const HopfAlgebra& h = *s.hopf;
  r.chi = hdet(s.pres);
  r.trivial = is_trivial_character(h, r.chi);
  r.homomorphism = is_character(h, r.chi);
  for (const auto& ir : h.irreps)
    if (ir.dim == 1 && character_of_one_dim_rep(ir) == r.chi) {
      r.matches = ir.name;
      break;
    }
  return r;
}

namespace {

std::map<size_t, std::string> arrow_names(const Session& s, const Quiver& q) {
  std::map<size_t, std::string> names;
  for (const auto& a : s.job.arrows) {
    bool found = false;
    if (a.tail < q.num_vertices && a.head < q.num_vertices) {
      auto between = q.arrows_between(a.tail, a.head);
      if (a.local < between.size()) {
        names[between[a.local]] = a.name;
        found = true;
      }
    }
    if (!found)
      throw JobError("the McKay quiver has no arrow " + std::to_string(a.tail) + " -> " + std::to_string(a.head) +
                         " [" + std::to_string(a.local) + "]",
                     a.pos);
  }
  return names;
}

void name_arrows(const Session& s, Quiver& q) {
  auto names = arrow_names(s, q);
  at_pos(s.job.arrows.empty() ? SourcePos{} : s.job.arrows.front().pos, [&] {
    rename_arrows(q, names);
    return 0;
  });
}

void screen(const Session& s) {
  StabilityResult line = line_stable(s.pres);
  if (!line.stable) throw HypothesisViolation(line.witness);
  StabilityResult rel = relation_space_stable(s.pres);
  if (!rel.stable) throw HypothesisViolation("the relation space is not H-stable: " + rel.witness);
}

}  // namespace

MckayResult run_mckay(const Session& s) {
  MckayResult r;
  r.quiver = mckay_quiver(*s.hopf, s.pres.v);
  name_arrows(s, r.quiver);
  r.inner_faithful = r.quiver.strongly_connected();
  r.multiplicities = decompose(*s.hopf, s.pres.v);
  return r;
}

std::string resolve_route(const Session& s) {
  const JobSpec& job = s.job;
  if (job.route != "auto") return job.route;
  if (job.hopf == "dual_group") return "dual_group";
  const HopfAlgebra& h = *s.hopf;
  if (job.hopf == "group_algebra" && job.character_irreps && h.group->is_abelian() && job.xi.empty()) return "abelian";
  return "general";
}

LambdaResult run_lambda(const Session& s, const LambdaOptions& opt) {
  screen(s);
  const JobSpec& job = s.job;
  const HopfAlgebra& h = *s.hopf;
  LambdaResult r;
  r.route = opt.route.empty() ? resolve_route(s) : opt.route;
  bool custom = !job.xi.empty() || !opt.arrows.basis_change.empty() || !opt.arrows.theta_scale.empty() ||
                !opt.arrows.xi_overrides.empty();
  if (r.route != "general" && custom)
    throw JobError("xi tables and basis changes need route general (the " + r.route + " route fixes its own bases)", {});
  if (r.route == "dual_group") {
    if (job.hopf != "dual_group") throw JobError("route dual_group needs hopf dual_group", job.hopf_pos);
    r.qp = dual_group_fast_path(*h.group, s.degrees, s.pres.w, job.ell, job.m);
    r.hdet = hdet(s.pres);
  } else if (r.route == "abelian") {
    if (job.hopf != "group_algebra" || !job.character_irreps)
      throw JobError("route abelian needs a group algebra with 'irreps characters'", job.hopf_pos);
    r.qp = at_pos(job.hopf_pos, [&] { return abelian_fast_path(h, s.pres.v, s.pres.w, job.ell, job.m); });
    r.hdet = hdet(s.pres);
  } else {
    ArrowOptions ao = opt.arrows;
    if (!job.xi.empty()) {
      Quiver q = mckay_quiver(h, s.pres.v);
      name_arrows(s, q);
      for (const auto& x : job.xi) {
        auto idx = q.arrow_index(x.arrow);
        if (!idx) throw JobError("xi for undeclared arrow '" + x.arrow + "'", x.matrix.pos);
        ao.xi_overrides.push_back({*idx, job_matrix(x.matrix, *s.ctx)});
      }
    }
    SourcePos pos = job.xi.empty() ? SourcePos{} : job.xi.front().matrix.pos;
    try {
      r.qp = build_phi(s.pres, ao);
    } catch (const std::invalid_argument& e) {
      throw JobError(e.what(), pos);
    }
    r.hdet = hdet(s.pres);
  }
  name_arrows(s, r.qp.quiver);
  r.algebra = derive_quiver_relations(r.qp);
  r.mesh = recognize_preprojective(r.algebra, r.qp.tau);
  r.inner_faithful = r.qp.quiver.strongly_connected();
  return r;
}

HilbertResult run_hilbert(const LambdaResult& l, size_t dmax) {
  HilbertResult r;
  r.lambda = graded_dims(l.algebra, dmax);
  r.lambda_growth = growth_verdict(r.lambda);
  r.quotient = graded_dims(quotient_by_vertex(l.algebra, 0), dmax);
  r.quotient_growth = growth_verdict(r.quotient);
  return r;
}

AuslanderVerdict run_auslander(const Session& s, const LambdaResult& l, size_t dmax) {
  if (!l.inner_faithful)
    throw HypothesisViolation("the action is not inner-faithful (the McKay quiver is not strongly connected)");
  if (s.job.gkdim <= 0) throw JobError("auslander needs 'gkdim' (the GK dimension of A)", {});
  return auslander_check(l.algebra, s.job.gkdim, dmax);
}

}  // namespace hq
