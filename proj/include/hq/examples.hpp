#pragma once

// Built-in example jobs, as job-file text.

#include <string>
#include <vector>

namespace hq {

// Names of the bundled examples (parameterized families list their defaults).
std::vector<std::string> example_names();
// Negative controls for hypothesis screening.
std::vector<std::string> control_names();

// Job text for a bundled example, a control, or a member of a family:
//   dual_D<n> (n >= 3), cyclic_q_n<n>_q<q> (q an integer, "m" for minus),
//   dihedral_case_d_n<n> (n even, n >= 4).
// Throws JobError for an unknown name.
std::string example_job(const std::string& name);

}  // namespace hq
