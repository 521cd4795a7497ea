#pragma once

#include <cstdint>

#include "revsched/engine.hpp"

namespace revsched {

// Starts the feasible job with the earliest release (ties: lowest id) the
// moment the machine is idle, and never revokes.
PolicyHandle policy_greedy_commit();

// Never starts anything; every job expires.
PolicyHandle policy_lazy();

// Shortest processing time first: when idle, starts the feasible job with
// the least p (ties: lowest id); on a release while busy, revokes for the
// newcomer exactly when it would finish strictly earlier than the job on
// the machine.
PolicyHandle policy_srpt();

// Deterministic pseudo-random policy: at each consultation it enumerates
// the canonical action list (Continue, then StartJob over feasible ids
// ascending when idle, or RevokeAndStart over feasible ids ascending when
// busy) and picks index hash64(seed ^ counter) mod list size. The counter
// advances once per consultation. Stands in for "any deterministic
// algorithm" in property runs.
PolicyHandle policy_seeded(std::uint64_t seed);

// Accepts "greedy-commit", "lazy", "srpt", "seeded:<u64>".
PolicyHandle make_policy(const std::string& name);

} // namespace revsched
