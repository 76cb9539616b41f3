#pragma once

// The job file format: one statement per line, '#' starts a comment.
//
//   name <id>                      order <N>               hopf <kind>
//   generator <g> perm [..]        generator <g> matrix [[..]]
//   elements <word> ...            irreps characters       irrep <name> <gen>=[[..]] ...
//   basis <b> ...                  unit <combination>      mult <b> <b> = <combination>
//   coproduct <b> = <c*b@b + ...>  counit <b> = <scalar>   antipode <b> = <combination>
//   hopf_generators <b> ...
//   variables <v> ...              action trivial | action irrep <k> | action <gen>=[[..]] ...
//   degrees <v>=<word> ...         superpotential <combination>        sigma [[..]]
//   ell <n>   m <n>   gkdim <n>    dmax <n>   route auto|general|dual_group|abelian
//   arrow <name> <i> -> <j> [<k>]  xi <arrow> [[..]]
//
// Texts holding scalars are kept verbatim and parsed when the session is built,
// so that errors point at the offending line and column.

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

struct SourcePos {
  size_t line = 0, column = 0;  // 1-based; 0 when unknown
};

class JobError : public std::runtime_error {
 public:
  JobError(const std::string& msg, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct JobText {
  std::string text;
  SourcePos pos;
};

struct GeneratorSpec {
  std::string name;
  bool is_perm = true;
  JobText value;  // "[1, 2, 0]" or "[[..]]"
};

struct IrrepSpec {
  std::string name;
  std::vector<std::pair<std::string, JobText>> images;  // generator -> matrix
  SourcePos pos;
};

struct ArrowSpec {
  std::string name;
  size_t tail = 0, head = 0, local = 0;
  SourcePos pos;
};

struct XiSpec {
  std::string arrow;
  JobText matrix;
};

struct TablesSpec {
  std::vector<std::string> basis;
  std::optional<JobText> unit;
  std::vector<std::pair<std::pair<std::string, std::string>, JobText>> mult;
  std::vector<std::pair<std::string, JobText>> coproduct, counit, antipode;
  std::vector<std::string> generators;
  SourcePos pos;
};

struct JobSpec {
  std::string name = "job";
  int order = 1;
  std::string hopf;  // trivial | kac_palyutkin | group_algebra | dual_group | tables
  SourcePos hopf_pos;
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> elements;
  bool character_irreps = false;
  std::vector<IrrepSpec> irreps;
  TablesSpec tables;
  std::vector<std::string> variables;
  std::string action_kind;  // "" | trivial | irrep | matrices
  std::string action_irrep;
  std::vector<std::pair<std::string, JobText>> action;
  SourcePos action_pos;
  std::vector<std::pair<std::string, std::string>> degrees;
  SourcePos degrees_pos;
  std::optional<JobText> superpotential;
  std::optional<JobText> sigma;
  size_t ell = 0, m = 0;
  int gkdim = 0;
  std::vector<ArrowSpec> arrows;
  std::vector<XiSpec> xi;
  size_t dmax = 40;
  std::string route = "auto";
};

JobSpec parse_job(const std::string& text);
// Parses only "arrow" and "xi" statements (an intertwiner file) into job.
void merge_intertwiners(JobSpec& job, const std::string& text);
// Canonical text: statements in a fixed order, one per line.
std::string print_job(const JobSpec& job);

// Parsers for the verbatim texts of a job; errors carry the text's position.
Scalar job_scalar(const JobText& t, const CycContext& ctx);
Matrix job_matrix(const JobText& t, const CycContext& ctx);
std::vector<int> job_permutation(const JobText& t);
std::vector<std::pair<std::vector<size_t>, Scalar>> job_combination(const JobText& t,
                                                                     const std::vector<std::string>& names,
                                                                     const CycContext& ctx);
// "c*b@b + ..." as (left index, right index, coefficient) triples.
std::vector<std::tuple<size_t, size_t, Scalar>> job_coproduct(const JobText& t, const std::vector<std::string>& names,
                                                              const CycContext& ctx);

}  // namespace hq
