#pragma once

#include <optional>
#include <vector>

#include "revsched/engine.hpp"
#include "revsched/model.hpp"

namespace revsched {

// Configuration of the adaptive lower-bound source. Starting from the base
// job it nests one job per level, each strictly inside the previous level's
// critical window, until depth jobs have been released.
struct AdversaryConfig {
	int depth = 3;                 // number of jobs to release, >= 1
	Time eps_frac = Time(1, 10);   // per-level offset as a fraction of p, in (0, 1/3)
	Job base{0, Time(0), Time(1), Time(2)};   // must satisfy s >= 2p

	void validate() const;
};

// Which way one nesting level went: either the watched job was started at
// some instant a (and the next window hides inside its processing
// interval), or it never started and the next window sits past its latest
// start. Levels are 1-based; the level-i record describes job id i-1 and
// the job it spawned.
struct BranchRecord {
	int level = 0;
	std::optional<Time> run_start;   // engaged: run branch at that start; empty: ignore branch
	Job emitted;

	bool is_run() const { return run_start.has_value(); }
};

// Feasible start for job j avoiding the blocked interval `inner`.
// Requires s >= 2p, inner inside [r, d), and |inner| <= p; then one side
// gap always fits the whole job: the right gap if starting at inner.hi
// still meets the latest-start bound, otherwise the left gap at r.
Time side_gap_start(const Job& j, const Interval& inner);

// The job filling `available` up to an offset of eps: released at
// available.lo + eps, window closed at available.hi, p one third of the
// remaining span and s = 2p. Requires 0 < eps < |available|.
Job nested_job(const Interval& available, const Time& eps, int next_id);

// Adaptive source implementing the nesting game. Per level i (job J with
// processing time p_i), eps_i = eps_frac * p_i; the source releases the
// next job either right after observing a start of J (run branch) or right
// after J's latest start passed unused (ignore branch, detected by a
// trigger at latest_start + eps_i/2 and released at latest_start + eps_i).
// Stops once depth jobs are out.
class AdaptiveAdversary final : public JobSource {
public:
	explicit AdaptiveAdversary(AdversaryConfig cfg);

	std::vector<Job> initial() override;
	SourceReaction observe(const Event& ev) override;
	SourceReaction on_trigger(const Time& now) override;

	const std::vector<BranchRecord>& branches() const { return branches_; }

private:
	SourceReaction branch_run(const Time& start);
	SourceReaction branch_ignore();
	Job emit(const Interval& available, const Time& release_floor_eps);

	AdversaryConfig cfg_;
	Job watched_;            // innermost released job, the one branching is about
	int level_ = 0;          // 1-based level of watched_; 0 before the base is out
	int emitted_ = 0;
	bool branched_ = false;  // current level already resolved
	std::vector<BranchRecord> branches_;
};

// Explicit optimal schedule for an instance the adversary realized, built
// from its branch history: the innermost job at its own release, then
// outward level by level -- run-branch jobs into a side gap of the next
// window, ignore-branch jobs at their own release (they finish before the
// next release since s >= 2p). Covers all jobs; innermost first.
Witness opt_witness(const Instance& realized, const std::vector<BranchRecord>& branches);

} // namespace revsched
