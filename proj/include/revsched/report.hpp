#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsched/adversary.hpp"
#include "revsched/engine.hpp"
#include "revsched/json_io.hpp"
#include "revsched/opt.hpp"

namespace revsched {

// One adaptive run of a named policy against the depth-k source, with the
// offline optimum of the realized instance attached.
struct DuelReport {
	std::string policy;
	Model model = Model::Revoke;
	int depth = 0;
	Instance realized;
	Trace trace;
	int completed_count = 0;
	int opt_count = 0;
	Time ratio;                       // completed / opt, exact; 0/1 when nothing completed
	std::vector<BranchRecord> branches;
	Witness opt_schedule;             // the dp solver's certifying schedule
};

struct DuelOptions {
	std::string policy = "srpt";
	int depth = 3;
	Model model = Model::Revoke;
	Time eps_frac = Time(1, 10);
	Job base{0, Time(0), Time(1), Time(2)};
};

// Runs the duel and cross-checks itself: the emitted trace must pass the
// trace validator and the optimum's schedule the witness validator.
DuelReport run_duel(const DuelOptions& opts);

json to_json(const DuelReport& rep);

struct SweepRow {
	int depth = 0;
	std::string policy;
	int completed = 0;
	int opt = 0;
	Time ratio;
};

// One duel per (depth, policy), rows sorted by (depth, policy).
std::vector<SweepRow> run_sweep(const std::vector<std::string>& policies,
                                int depth_lo, int depth_hi,
                                Model model, const Time& eps_frac, const Job& base);

// header k,policy,completed,opt,ratio; exact rational ratio strings
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct FuzzViolation {
	std::uint64_t seed = 0;
	int completed = 0;
	int opt = 0;
};

struct FuzzSummary {
	std::uint64_t total = 0;
	std::uint64_t passed = 0;
	int depth = 0;
	std::vector<FuzzViolation> violations;
};

// One seeded-policy duel per seed in [lo, hi]; a run fails when it
// completes more than one job or the realized optimum is not exactly the
// depth. Any failure signals a bug in the engine or the source, not a
// property of the policy.
FuzzSummary run_fuzz(std::uint64_t seed_lo, std::uint64_t seed_hi, int depth, Model model);

std::string fuzz_text(const FuzzSummary& s);

} // namespace revsched
