#include "revsched/adversary.hpp"

namespace revsched {

void AdversaryConfig::validate() const {
	if (depth < 1)
		throw input_error("adversary depth must be >= 1");
	if (!(eps_frac > Time(0)) || !(eps_frac < Time(1, 3)))
		throw input_error("eps fraction must lie in (0, 1/3), got " + eps_frac.str());
	base.validate();
	if (base.s < Time(2) * base.p)
		throw input_error("base job needs slack >= twice its processing time");
}

Time side_gap_start(const Job& j, const Interval& inner) {
	j.validate();
	if (j.s < Time(2) * j.p)
		throw input_error("side gap placement needs s >= 2p");
	if (inner.lo < j.r || inner.hi > j.deadline())
		throw input_error("blocked interval [" + inner.lo.str() + ", " + inner.hi.str() +
		                  ") not inside the job window");
	if (inner.length() > j.p)
		throw input_error("blocked interval longer than the processing time");
	// right gap whenever it still meets the latest-start bound; the
	// preconditions force the left gap to hold the job otherwise
	if (inner.hi <= j.latest_start())
		return inner.hi;
	return j.r;
}

Job nested_job(const Interval& available, const Time& eps, int next_id) {
	if (!eps.is_positive())
		throw construction_error("nested job offset must be > 0");
	if (!(eps < available.length()))
		throw construction_error("nested job offset " + eps.str() +
		                         " leaves no room in [" + available.lo.str() + ", " +
		                         available.hi.str() + ")");
	const Time release = available.lo + eps;
	const Time p = (available.hi - release) / Time(3);
	return Job{next_id, release, p, Time(2) * p};
}

AdaptiveAdversary::AdaptiveAdversary(AdversaryConfig cfg) : cfg_(std::move(cfg)) {
	cfg_.validate();
}

std::vector<Job> AdaptiveAdversary::initial() {
	Job base = cfg_.base;
	base.id = 0;
	emitted_ = 1;
	return {base};
}

SourceReaction AdaptiveAdversary::observe(const Event& ev) {
	switch (ev.kind) {
	case EventKind::Release: {
		if (ev.job != emitted_ - 1)
			return {};   // not ours (cannot happen when paired with this source)
		level_ += 1;
		watched_ = ev.job == 0 ? cfg_.base : branches_.back().emitted;
		watched_.id = ev.job;
		branched_ = false;
		if (emitted_ < cfg_.depth) {
			// ignore-branch lookout: strictly between the watched job's
			// latest start and the release that would follow it
			const Time eps = cfg_.eps_frac * watched_.p;
			SourceReaction r;
			r.set_trigger = watched_.latest_start() + eps / Time(2);
			return r;
		}
		return {};
	}
	case EventKind::Start:
		if (!branched_ && emitted_ < cfg_.depth && ev.job == watched_.id)
			return branch_run(ev.t);
		return {};
	default:
		return {};
	}
}

SourceReaction AdaptiveAdversary::on_trigger(const Time&) {
	if (branched_ || emitted_ >= cfg_.depth)
		return {};
	return branch_ignore();
}

// the watched job started at `start`: hide the next window inside its
// processing interval, offset by eps
SourceReaction AdaptiveAdversary::branch_run(const Time& start) {
	branched_ = true;
	const Time eps = cfg_.eps_frac * watched_.p;
	const Job next = nested_job(Interval(start, start + watched_.p), eps, emitted_);
	branches_.push_back({level_, start, next});
	emitted_ += 1;
	SourceReaction r;
	r.releases = {next};
	r.clear_trigger = true;
	return r;
}

// the watched job's latest start passed unused: put the next window just
// past it, inside what is left of the watched window
SourceReaction AdaptiveAdversary::branch_ignore() {
	branched_ = true;
	const Time eps = cfg_.eps_frac * watched_.p;
	const Job next =
	    nested_job(Interval(watched_.latest_start(), watched_.deadline()), eps, emitted_);
	branches_.push_back({level_, std::nullopt, next});
	emitted_ += 1;
	SourceReaction r;
	r.releases = {next};
	return r;
}

Witness opt_witness(const Instance& realized, const std::vector<BranchRecord>& branches) {
	const std::size_t n = realized.size();
	if (n == 0)
		throw input_error("cannot build a schedule for an empty instance");
	if (branches.size() + 1 != n)
		throw input_error("branch history length does not match the instance");
	for (std::size_t i = 0; i < n; ++i)
		if (realized.jobs[i].id != static_cast<int>(i))
			throw input_error("realized instance must list jobs in emission order");
	for (std::size_t i = 0; i + 1 < n; ++i) {
		Job recorded = branches[i].emitted;
		if (branches[i].level != static_cast<int>(i) + 1 || !(recorded == realized.jobs[i + 1]))
			throw input_error("branch history does not match the instance");
	}

	Witness w;
	const Job& innermost = realized.jobs[n - 1];
	w.assignments.push_back({innermost.id, innermost.r});
	for (std::size_t i = n - 1; i-- > 0;) {
		const Job& j = realized.jobs[i];
		const Job& inner = realized.jobs[i + 1];
		const Time start = branches[i].is_run()
		                       ? side_gap_start(j, Interval(inner.r, inner.deadline()))
		                       : j.r;   // done before the next release since s >= 2p
		w.assignments.push_back({j.id, start});
	}
	return w;
}

} // namespace revsched
