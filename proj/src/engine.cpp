#include "revsched/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace revsched {

std::string to_string(JobOutcome o) {
	switch (o) {
	case JobOutcome::Completed: return "completed";
	case JobOutcome::Revoked: return "revoked";
	case JobOutcome::Expired: return "expired";
	}
	throw internal_error("bad outcome");
}

std::set<int> feasible_set(const MachineState& st) {
	std::set<int> out;
	for (const auto& [id, job] : st.released) {
		if (st.completed.count(id) || st.lost.count(id))
			continue;
		if (st.now > job.latest_start())
			continue;
		out.insert(id);
	}
	return out;
}

namespace {

void start_job_on(MachineState& st, std::vector<Event>& evs, int id) {
	if (!feasible_set(st).count(id))
		throw policy_error("start of infeasible job " + std::to_string(id) +
		                   " at " + st.now.str());
	st.running = MachineState::Running{id, st.now};
	evs.push_back({st.now, EventKind::Start, id});
}

void revoke_current(MachineState& st, std::vector<Event>& evs) {
	const int id = st.running->id;
	evs.push_back({st.now, EventKind::Revoke, id});
	st.running.reset();
	if (st.model == Model::Revoke)
		st.lost.insert(id);
	else if (st.now > st.released.at(id).latest_start())
		st.lost.insert(id);   // no restart possible any more
}

} // namespace

ActionEffect apply_action(const MachineState& st, const Action& a) {
	ActionEffect eff{st, {}};
	switch (a.kind) {
	case ActionKind::Continue:
		break;
	case ActionKind::SetAlarm:
		if (!(a.alarm > st.now))
			throw policy_error("alarm at " + a.alarm.str() + " not after " + st.now.str());
		break;
	case ActionKind::StartJob:
		if (eff.state.running)
			throw policy_error("StartJob while running; use RevokeAndStart");
		start_job_on(eff.state, eff.events, a.job);
		break;
	case ActionKind::RevokeAndStart:
		if (!eff.state.running)
			throw policy_error("RevokeAndStart while idle");
		revoke_current(eff.state, eff.events);
		start_job_on(eff.state, eff.events, a.job);
		break;
	case ActionKind::RevokeAndIdle:
		if (!eff.state.running)
			throw policy_error("RevokeAndIdle while idle");
		revoke_current(eff.state, eff.events);
		break;
	}
	return eff;
}

namespace {

// queue classes in tie order at equal instants; job id breaks ties within
// a class, an insertion counter keeps the order total
enum QueueClass : int {
	kComplete = 0,
	kRelease = 1,
	kSourceTick = 2,
	kAlarm = 3,
	kExpire = 4,
};

struct QueueKey {
	Time t;
	int klass;
	int job;
	std::uint64_t seq;

	bool operator<(const QueueKey& o) const {
		if (t != o.t) return t < o.t;
		if (klass != o.klass) return klass < o.klass;
		if (job != o.job) return job < o.job;
		return seq < o.seq;
	}
};

constexpr std::uint64_t kMaxProcessedEvents = 1000000;

class Simulation {
public:
	Simulation(Policy& policy, JobSource& source, Model model)
		: policy_(policy), source_(source) {
		state_.model = model;
		trace_.model = model;
	}

	SimulationResult run() {
		for (const Job& j : source_.initial())
			schedule_release(j);

		while (!queue_.empty()) {
			const QueueKey key = *queue_.begin();
			queue_.erase(queue_.begin());
			if (clock_started_ && key.t < state_.now)
				throw internal_error("event queue went backwards in time");
			state_.now = key.t;
			clock_started_ = true;
			if (process(key))
				consult(key);
		}

		if (consultations_ != processed_)
			throw internal_error("policy consultation count diverged from processed events");

		SimulationResult res;
		res.trace = std::move(trace_);
		res.realized = std::move(realized_);
		try {
			res.realized.validate();
		} catch (const input_error& e) {
			throw source_error(std::string("source produced an invalid instance: ") + e.what());
		}
		res.completed_count = static_cast<int>(state_.completed.size());
		for (const Job& j : res.realized.jobs) {
			JobOutcome o = JobOutcome::Revoked;
			if (state_.completed.count(j.id))
				o = JobOutcome::Completed;
			else if (expired_.count(j.id))
				o = JobOutcome::Expired;
			res.outcomes[j.id] = o;
		}
		return res;
	}

private:
	// returns false when the event evaporated (stale expire); no
	// consultation happens then
	bool process(const QueueKey& key) {
		if (++processed_total_ > kMaxProcessedEvents)
			throw policy_error("run exceeded the event budget (alarm livelock?)");
		switch (key.klass) {
		case kComplete: {
			state_.completed.insert(key.job);
			state_.running.reset();
			complete_key_.reset();
			drop_expire(key.job);
			record({key.t, EventKind::Complete, key.job});
			break;
		}
		case kRelease: {
			Job j = pending_jobs_.at(key.job);
			pending_jobs_.erase(key.job);
			state_.released.emplace(j.id, j);
			realized_.jobs.push_back(j);
			schedule_expire(j);
			record({key.t, EventKind::Release, j.id});
			break;
		}
		case kSourceTick: {
			trigger_key_.reset();
			apply_reaction(source_.on_trigger(state_.now));
			break;
		}
		case kAlarm: {
			alarm_times_.erase(key.t);
			break;
		}
		case kExpire: {
			expire_keys_.erase(key.job);
			if (!is_expired_now(key.job))
				return false;
			state_.lost.insert(key.job);
			expired_.insert(key.job);
			record({key.t, EventKind::Expire, key.job});
			break;
		}
		default:
			throw internal_error("bad queue class");
		}
		++processed_;
		return true;
	}

	// latest start has passed and the job will never run (to completion)
	bool is_expired_now(int id) const {
		if (state_.completed.count(id) || state_.lost.count(id))
			return false;
		if (state_.running && state_.running->id == id)
			return false;   // restart model: running through its latest start
		if (state_.model == Model::Revoke && start_counts_.count(id))
			return false;   // started once; revoke bookkeeping owns it
		return true;
	}

	void consult(const QueueKey& key) {
		Wake wake;
		wake.t = key.t;
		switch (key.klass) {
		case kComplete: wake = {WakeKind::Complete, key.t, key.job}; break;
		case kRelease: wake = {WakeKind::Release, key.t, key.job}; break;
		case kSourceTick: wake = {WakeKind::SourceTick, key.t, -1}; break;
		case kAlarm: wake = {WakeKind::Alarm, key.t, -1}; break;
		case kExpire: wake = {WakeKind::Expire, key.t, key.job}; break;
		default: throw internal_error("bad queue class");
		}
		++consultations_;

		const Action action = policy_.decide(state_, wake);
		ActionEffect eff = apply_action(state_, action);
		state_ = std::move(eff.state);
		for (const Event& ev : eff.events) {
			if (ev.kind == EventKind::Revoke) {
				if (complete_key_) {
					queue_.erase(*complete_key_);
					complete_key_.reset();
				}
			} else if (ev.kind == EventKind::Start) {
				start_counts_[ev.job] += 1;
				const Job& j = state_.released.at(ev.job);
				QueueKey ck{ev.t + j.p, kComplete, ev.job, seq_++};
				queue_.insert(ck);
				complete_key_ = ck;
				if (state_.model == Model::Revoke)
					drop_expire(ev.job);
			}
			record(ev);
		}
		if (action.kind == ActionKind::SetAlarm && !alarm_times_.count(action.alarm)) {
			alarm_times_.insert(action.alarm);
			queue_.insert(QueueKey{action.alarm, kAlarm, -1, seq_++});
		}
	}

	// every trace event is also shown to the source, in trace order
	void record(const Event& ev) {
		trace_.events.push_back(ev);
		apply_reaction(source_.observe(ev));
	}

	void apply_reaction(const SourceReaction& r) {
		for (const Job& j : r.releases)
			schedule_release(j);
		if (r.clear_trigger && trigger_key_) {
			queue_.erase(*trigger_key_);
			trigger_key_.reset();
		}
		if (r.set_trigger) {
			if (trigger_key_) {
				queue_.erase(*trigger_key_);
				trigger_key_.reset();
			}
			if (*r.set_trigger < state_.now)
				throw source_error("source trigger set in the past");
			QueueKey tk{*r.set_trigger, kSourceTick, -1, seq_++};
			queue_.insert(tk);
			trigger_key_ = tk;
		}
	}

	void schedule_release(const Job& j) {
		j.validate();
		if (clock_started_ && j.r < state_.now)
			throw source_error("job " + std::to_string(j.id) + " released in the past");
		if (last_release_ && j.r < *last_release_)
			throw source_error("release times must be non-decreasing");
		if (pending_jobs_.count(j.id) || state_.released.count(j.id))
			throw source_error("duplicate job id " + std::to_string(j.id));
		last_release_ = j.r;
		pending_jobs_.emplace(j.id, j);
		queue_.insert(QueueKey{j.r, kRelease, j.id, seq_++});
	}

	void schedule_expire(const Job& j) {
		QueueKey key{j.latest_start(), kExpire, j.id, seq_++};
		queue_.insert(key);
		expire_keys_.emplace(j.id, key);
	}

	void drop_expire(int id) {
		auto it = expire_keys_.find(id);
		if (it != expire_keys_.end()) {
			queue_.erase(it->second);
			expire_keys_.erase(it);
		}
	}

	Policy& policy_;
	JobSource& source_;
	MachineState state_;
	Trace trace_;
	Instance realized_;

	std::set<QueueKey> queue_;
	std::uint64_t seq_ = 0;
	std::map<int, Job> pending_jobs_;
	std::map<int, QueueKey> expire_keys_;
	std::optional<QueueKey> complete_key_;
	std::optional<QueueKey> trigger_key_;
	std::set<Time> alarm_times_;
	std::map<int, int> start_counts_;
	std::set<int> expired_;
	std::optional<Time> last_release_;

	bool clock_started_ = false;
	std::uint64_t processed_ = 0;
	std::uint64_t processed_total_ = 0;
	std::uint64_t consultations_ = 0;
};

} // namespace

SimulationResult simulate(Policy& policy, JobSource& source, Model model) {
	return Simulation(policy, source, model).run();
}

} // namespace revsched
