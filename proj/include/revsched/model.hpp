#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revsched/errors.hpp"
#include "revsched/time.hpp"

namespace revsched {

// What happens to work in progress when the machine aborts a job:
// Revoke loses the job forever, Restart allows running it again from
// scratch while its latest start has not passed.
enum class Model { Revoke, Restart };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

// A job (release, processing, slack). It occupies the machine for p,
// may not start before r, and must start no later than r + s.
struct Job {
	int id = 0;
	Time r;   // release
	Time p;   // processing time, > 0
	Time s;   // slack, >= 0

	Time deadline() const { return r + p + s; }      // end of the window [r, d)
	Time latest_start() const { return r + s; }      // last feasible start

	// p > 0 and s >= 0; violations are input errors
	void validate() const {
		if (!p.is_positive())
			throw input_error("job " + std::to_string(id) + ": processing time must be > 0");
		if (s.is_negative())
			throw input_error("job " + std::to_string(id) + ": slack must be >= 0");
	}

	bool operator==(const Job&) const = default;
};

// Half-open interval [lo, hi); lo < hi.
struct Interval {
	Time lo;
	Time hi;

	Interval(Time lo_, Time hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
		if (!(lo < hi))
			throw input_error("degenerate interval [" + lo.str() + ", " + hi.str() + ")");
	}

	Time length() const { return hi - lo; }
	bool contains(const Time& t) const { return lo <= t && t < hi; }
	bool overlaps(const Interval& o) const { return lo < o.hi && o.lo < hi; }
	bool operator==(const Interval&) const = default;
};

// Job set in release order. Ids are unique and dense from 0; release
// times never decrease in list order (real-time arrival).
struct Instance {
	std::vector<Job> jobs;

	Instance() = default;
	explicit Instance(std::vector<Job> js) : jobs(std::move(js)) { validate(); }

	std::size_t size() const { return jobs.size(); }
	const Job& job(int id) const;
	void validate() const;

	bool operator==(const Instance&) const = default;
};

enum class EventKind { Release, Start, Revoke, Complete, Expire };

std::string to_string(EventKind k);
EventKind event_kind_from_string(const std::string& s);

// One observable happening in a run. Start carries the instant the job
// began processing; Complete the instant it finished.
struct Event {
	Time t;
	EventKind kind = EventKind::Release;
	int job = 0;

	bool operator==(const Event&) const = default;
};

// Ordered event record of one run under a given abort model.
struct Trace {
	Model model = Model::Revoke;
	std::vector<Event> events;

	bool operator==(const Trace&) const = default;
};

// Claimed non-preemptive schedule: each listed job starts at the given
// instant and runs to completion.
struct Witness {
	struct Assignment {
		int job = 0;
		Time start;
		bool operator==(const Assignment&) const = default;
	};
	std::vector<Assignment> assignments;

	bool operator==(const Witness&) const = default;
};

} // namespace revsched
