#pragma once

#include <string>
#include <vector>

#include "revsched/model.hpp"

namespace revsched {

// A broken rule found by a validator. Violations are data, not failures;
// an empty list means the artifact checks out.
struct Violation {
	std::string rule;      // stable machine-readable rule name
	std::string message;   // human detail

	bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

// Checks a trace against an instance under the trace's abort model:
//  - at most one job processing at any instant (half-open intervals, so a
//    completion may share its timestamp with the next start)
//  - every start lies in [r, r+s]
//  - every completion happens exactly p after its start, uninterrupted
//  - in the revoke model no job starts twice
//  - restarts (restart model) obey the latest-start bound like any start
// Events must be time-ordered; jobs referenced must exist in the instance.
std::vector<Violation> validate_trace(const Trace& tr, const Instance& inst);

// Checks a claimed schedule: every assigned start lies in [r, r+s] and the
// processing intervals are pairwise disjoint. Unknown job ids are input
// errors, not violations.
std::vector<Violation> validate_witness(const Instance& inst, const Witness& w);

} // namespace revsched
