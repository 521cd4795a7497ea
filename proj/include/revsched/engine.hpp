#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revsched/model.hpp"

namespace revsched {

// Machine state as the policy may observe it. Everything here is public
// information: released jobs, what is running, what is gone. Policies
// never see the source's future plans.
struct MachineState {
	struct Running {
		int id = 0;
		Time start;
		bool operator==(const Running&) const = default;
	};

	Model model = Model::Revoke;
	Time now;
	std::optional<Running> running;
	std::map<int, Job> released;
	std::set<int> lost;        // revoked (revoke model) or latest start elapsed
	std::set<int> completed;
};

// Ids that could be started right now: released, not completed, not lost,
// and now <= latest start. In the restart model a revoked job stays here
// until its latest start passes. The running job is not excluded; starting
// it is governed by the action rules below.
std::set<int> feasible_set(const MachineState& st);

enum class ActionKind { Continue, StartJob, RevokeAndStart, RevokeAndIdle, SetAlarm };

// One policy decision. StartJob requires an idle machine; replacing the
// running job goes through RevokeAndStart. SetAlarm asks to be woken at a
// strictly future instant.
struct Action {
	ActionKind kind = ActionKind::Continue;
	int job = -1;
	Time alarm;

	static Action cont() { return {}; }
	static Action start_job(int id) { return {ActionKind::StartJob, id, Time()}; }
	static Action revoke_and_start(int id) { return {ActionKind::RevokeAndStart, id, Time()}; }
	static Action revoke_and_idle() { return {ActionKind::RevokeAndIdle, -1, Time()}; }
	static Action set_alarm(Time t) { return {ActionKind::SetAlarm, -1, std::move(t)}; }
};

// Result of taking an action: the successor state plus the trace events
// the action produced (Start / Revoke entries, timestamped at st.now).
struct ActionEffect {
	MachineState state;
	std::vector<Event> events;
};

// Applies a policy action to a machine state. Infeasible actions (starting
// a job outside its window, starting while busy, revoking while idle,
// alarms not in the future) raise policy_error: silently ignoring them
// would mask policy bugs and contaminate lower-bound experiments.
ActionEffect apply_action(const MachineState& st, const Action& a);

// What the policy is reacting to when consulted.
enum class WakeKind { Release, Complete, Expire, Alarm, SourceTick };

struct Wake {
	WakeKind kind = WakeKind::Release;
	Time t;
	int job = -1;   // -1 for Alarm / SourceTick
};

// Deterministic online policy: same observation sequence, same actions.
class Policy {
public:
	virtual ~Policy() = default;
	virtual std::string name() const = 0;
	virtual Action decide(const MachineState& st, const Wake& wake) = 0;
};

using PolicyHandle = std::unique_ptr<Policy>;

// What a job source hands back when it reacts: jobs to release at their
// own release times, and/or a change to its single wake-up trigger.
struct SourceReaction {
	std::vector<Job> releases;
	std::optional<Time> set_trigger;
	bool clear_trigger = false;
};

// Supplies jobs to a run. A static source knows everything up front; an
// adaptive one reacts to the events it observes. Release times must never
// decrease (real-time arrival order).
class JobSource {
public:
	virtual ~JobSource() = default;
	virtual std::vector<Job> initial() = 0;
	virtual SourceReaction observe(const Event& ev) { (void)ev; return {}; }
	virtual SourceReaction on_trigger(const Time& now) { (void)now; return {}; }
};

class StaticSource final : public JobSource {
public:
	explicit StaticSource(Instance inst) : inst_(std::move(inst)) {}
	std::vector<Job> initial() override { return inst_.jobs; }

private:
	Instance inst_;
};

enum class JobOutcome { Completed, Revoked, Expired };

std::string to_string(JobOutcome o);

struct SimulationResult {
	Trace trace;
	Instance realized;              // every job that was released, in order
	int completed_count = 0;
	std::map<int, JobOutcome> outcomes;
};

// Runs one policy against one source under the given model. Event-driven:
// ties are broken Complete < Release < SourceTick < Alarm < Expire, then by
// ascending job id; after each processed event the policy is consulted
// exactly once. Expire events are synthesized when a job that is not
// running (and never will be, under the model) sees its latest start pass.
// The run ends when nothing is running and no event is pending.
SimulationResult simulate(Policy& policy, JobSource& source, Model model);

} // namespace revsched
