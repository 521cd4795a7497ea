#pragma once

#include <optional>
#include <string>

#include "revsched/model.hpp"

namespace revsched {

// Offline optimum: maximum number of jobs completable non-preemptively
// under release and latest-start constraints, with a schedule certifying
// the count.
struct OptResult {
	int count = 0;
	Witness witness;
	std::string method;   // "dp" or "brute"
};

inline constexpr int kOptDpCap = 20;
inline constexpr int kOptBruteCap = 8;

// Exact maximum throughput by subset dynamic programming over earliest
// finish times: f(S) = min over last jobs j of max(f(S\{j}), r_j) + p_j,
// feasible only while that start meets j's latest-start bound; the empty
// set leaves the machine free from the beginning. Exponential but exact
// (the offline problem is NP-hard), so capped at `cap` jobs. Ties between
// last jobs are broken by ascending id to keep witnesses canonical.
OptResult opt_dp(const Instance& inst, int cap = kOptDpCap);

// Independent oracle: maximum over all subsets and orderings, placing each
// job at max(previous finish, r) and rejecting starts past r + s.
// Deliberately separate from the DP so the two can check each other.
int opt_brute(const Instance& inst, int cap = kOptBruteCap);

// Earliest instant by which ALL jobs of the instance can be completed
// feasibly, by the same recurrence the dp uses; empty when the full set
// cannot be scheduled. Exposed so the recurrence can be checked against
// plain enumeration of orderings.
std::optional<Time> earliest_finish_all(const Instance& inst, int cap = kOptDpCap);

} // namespace revsched
