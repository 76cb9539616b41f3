#pragma once

// From a job to the computed objects: the Hopf algebra and its module V, the
// homological determinant, the McKay quiver, the quiver superpotential with
// its relations, Hilbert profiles and the Auslander verdict.

#include <memory>
#include <string>
#include <vector>

#include "hq/growth.hpp"
#include "hq/job.hpp"
#include "hq/quiverpot.hpp"

namespace hq {

struct Session {
  JobSpec job;
  const CycContext* ctx = nullptr;
  std::shared_ptr<const HopfAlgebra> hopf;
  Presentation pres;
  std::vector<size_t> degrees;  // group element of each variable (dual group only)
  bool sigma_found = false;     // sigma given or found by the twist solver
};

// Builds the Hopf algebra, V and w. Malformed input raises JobError.
Session build_session(const JobSpec& job);

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationResult {
  std::vector<CheckLine> checks;
  bool ok() const;
  const CheckLine* find(const std::string& name) const;
};

// Runs every check and reports each one; never throws for a failed hypothesis.
ValidationResult run_validate(const Session& s);

struct HdetResult {
  Character chi;
  bool trivial = false;
  bool homomorphism = false;
  std::string matches;  // name of the one-dimensional irrep with this character, if any
};

HdetResult run_hdet(const Session& s);

struct MckayResult {
  Quiver quiver;  // arrows named by the job's arrow statements
  bool inner_faithful = false;
  std::vector<size_t> multiplicities;  // of each irrep in V
};

MckayResult run_mckay(const Session& s);

struct LambdaOptions {
  std::string route;  // empty: the job's route
  ArrowOptions arrows;
};

struct LambdaResult {
  std::string route;
  Character hdet;
  QuiverPotential qp;
  QuiverAlgebra algebra;  // canonicalized relations
  MeshVerdict mesh;
  bool inner_faithful = false;
};

// Screens line and relation-space stability first (HypothesisViolation).
LambdaResult run_lambda(const Session& s, const LambdaOptions& opt = {});
// The route "auto" resolves to for this session.
std::string resolve_route(const Session& s);

struct HilbertResult {
  HilbertProfile lambda, quotient;  // quotient is Lambda/<e_0>
  GrowthVerdict lambda_growth, quotient_growth;
};

HilbertResult run_hilbert(const LambdaResult& l, size_t dmax);
AuslanderVerdict run_auslander(const Session& s, const LambdaResult& l, size_t dmax);

}  // namespace hq
