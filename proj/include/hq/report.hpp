#pragma once

// Runs one command of the command-line tool on a job and renders the result
// as text, DOT, or structured records (JSON with a format version).

#include <string>

#include "hq/job.hpp"

namespace hq {

inline constexpr int kRecordsVersion = 1;

struct StageOutput {
  std::string text;
  std::string records;  // JSON document
  std::string dot;      // empty when the stage has no graph
  int exit_code = 0;    // 0 success, 2 when validation flags a hypothesis
};

// Stages: validate, hdet, mckay, lambda, hilbert, auslander, mcm. Throws
// JobError for bad input and HypothesisViolation when a stage cannot run.
StageOutput run_stage(const JobSpec& job, const std::string& stage, size_t dmax);

// Renders an error as a records document.
std::string error_record(const std::string& kind, const std::string& message, size_t line, size_t column);

}  // namespace hq
