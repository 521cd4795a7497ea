#include "revsched/validate.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace revsched {

std::string to_string(const Violation& v) {
	return v.rule + ": " + v.message;
}

namespace {

// a maximal stretch of uninterrupted processing of one job
struct Segment {
	int job;
	Time start;
	Time end;
};

void check_overlaps(const std::vector<Segment>& segs, std::vector<Violation>& out) {
	// zero-length segments (a job revoked the instant it started) occupy nothing
	std::vector<Segment> sorted;
	for (const Segment& s : segs)
		if (s.start < s.end)
			sorted.push_back(s);
	std::stable_sort(sorted.begin(), sorted.end(),
	                 [](const Segment& a, const Segment& b) { return a.start < b.start; });
	const Segment* reach = nullptr;   // segment extending furthest so far
	for (const Segment& s : sorted) {
		// half-open: touching at the boundary is fine
		if (reach && s.start < reach->end)
			out.push_back({"overlap",
			               "jobs " + std::to_string(reach->job) + " and " + std::to_string(s.job) +
			                   " both processing at " + s.start.str()});
		if (!reach || reach->end < s.end)
			reach = &s;
	}
}

} // namespace

std::vector<Violation> validate_trace(const Trace& tr, const Instance& inst) {
	std::vector<Violation> out;

	std::map<int, const Job*> by_id;
	for (const Job& j : inst.jobs)
		by_id[j.id] = &j;

	struct RunState {
		std::optional<Time> open_start;   // start of the run still on the machine
		int starts = 0;
	};
	std::map<int, RunState> runs;
	std::vector<Segment> segments;

	const Time* prev_t = nullptr;
	for (const Event& ev : tr.events) {
		if (prev_t && ev.t < *prev_t) {
			out.push_back({"time-order", "event at " + ev.t.str() + " after " + prev_t->str()});
		}
		prev_t = &ev.t;

		auto it = by_id.find(ev.job);
		if (it == by_id.end()) {
			out.push_back({"unknown-job",
			               to_string(ev.kind) + " references job " + std::to_string(ev.job) +
			                   " absent from the instance"});
			continue;
		}
		const Job& job = *it->second;
		RunState& rs = runs[ev.job];

		switch (ev.kind) {
		case EventKind::Release:
			if (ev.t != job.r)
				out.push_back({"release-time",
				               "job " + std::to_string(ev.job) + " released at " + ev.t.str() +
				                   " but its release time is " + job.r.str()});
			break;

		case EventKind::Start:
			if (ev.t < job.r || ev.t > job.latest_start())
				out.push_back({"start-window",
				               "job " + std::to_string(ev.job) + " started at " + ev.t.str() +
				                   " outside [" + job.r.str() + ", " + job.latest_start().str() + "]"});
			if (rs.open_start)
				out.push_back({"concurrent-start",
				               "job " + std::to_string(ev.job) +
				                   " started again with its previous run still open"});
			rs.starts += 1;
			if (tr.model == Model::Revoke && rs.starts > 1)
				out.push_back({"no-restart",
				               "job " + std::to_string(ev.job) + " started twice in the revoke model"});
			rs.open_start = ev.t;
			break;

		case EventKind::Revoke:
			if (!rs.open_start) {
				out.push_back({"non-running-revoke",
				               "job " + std::to_string(ev.job) + " revoked while not processing"});
			} else {
				segments.push_back({ev.job, *rs.open_start, ev.t});
				rs.open_start.reset();
			}
			break;

		case EventKind::Complete:
			if (!rs.open_start) {
				out.push_back({"bad-complete",
				               "job " + std::to_string(ev.job) + " completed without an open run"});
			} else {
				if (ev.t != *rs.open_start + job.p)
					out.push_back({"bad-complete",
					               "job " + std::to_string(ev.job) + " completed at " + ev.t.str() +
					                   ", expected " + (*rs.open_start + job.p).str()});
				segments.push_back({ev.job, *rs.open_start, *rs.open_start + job.p});
				rs.open_start.reset();
			}
			break;

		case EventKind::Expire:
			break;   // informational
		}
	}

	// a run the trace never closed occupies its full processing interval
	for (auto& [id, rs] : runs)
		if (rs.open_start)
			segments.push_back({id, *rs.open_start, *rs.open_start + by_id.at(id)->p});

	check_overlaps(segments, out);
	return out;
}

std::vector<Violation> validate_witness(const Instance& inst, const Witness& w) {
	std::vector<Violation> out;
	std::vector<Segment> segments;
	std::map<int, int> uses;

	for (const auto& a : w.assignments) {
		const Job& job = inst.job(a.job);   // throws input_error on unknown id
		if (++uses[a.job] > 1) {
			out.push_back({"duplicate-assignment",
			               "job " + std::to_string(a.job) + " assigned more than once"});
			continue;
		}
		if (a.start < job.r)
			out.push_back({"release",
			               "job " + std::to_string(a.job) + " starts at " + a.start.str() +
			                   " before its release " + job.r.str()});
		if (a.start > job.latest_start())
			out.push_back({"latest-start",
			               "job " + std::to_string(a.job) + " starts at " + a.start.str() +
			                   " after its latest start " + job.latest_start().str()});
		segments.push_back({a.job, a.start, a.start + job.p});
	}

	check_overlaps(segments, out);
	return out;
}

} // namespace revsched
