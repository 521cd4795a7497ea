#include "revsched/policies.hpp"

#include <limits>
#include <vector>

#include "revsched/util.hpp"

namespace revsched {

namespace {

class GreedyCommit final : public Policy {
public:
	std::string name() const override { return "greedy-commit"; }

	Action decide(const MachineState& st, const Wake&) override {
		if (st.running)
			return Action::cont();
		const Job* pick = nullptr;
		for (int id : feasible_set(st)) {
			const Job& j = st.released.at(id);
			if (!pick || j.r < pick->r)   // ids ascend, so ties keep the lowest id
				pick = &j;
		}
		return pick ? Action::start_job(pick->id) : Action::cont();
	}
};

class Lazy final : public Policy {
public:
	std::string name() const override { return "lazy"; }
	Action decide(const MachineState&, const Wake&) override { return Action::cont(); }
};

// Shortest processing time, preempting only for a newcomer that would
// finish strictly earlier than the job on the machine.
class Srpt final : public Policy {
public:
	std::string name() const override { return "srpt"; }

	Action decide(const MachineState& st, const Wake& wake) override {
		if (!st.running) {
			const Job* pick = nullptr;
			for (int id : feasible_set(st)) {
				const Job& j = st.released.at(id);
				if (!pick || j.p < pick->p)
					pick = &j;
			}
			return pick ? Action::start_job(pick->id) : Action::cont();
		}
		if (wake.kind == WakeKind::Release) {
			const Job& incoming = st.released.at(wake.job);
			const Job& current = st.released.at(st.running->id);
			if (st.now + incoming.p < st.running->start + current.p)
				return Action::revoke_and_start(incoming.id);
		}
		return Action::cont();
	}
};

class Seeded final : public Policy {
public:
	explicit Seeded(std::uint64_t seed) : seed_(seed) {}

	std::string name() const override { return "seeded:" + std::to_string(seed_); }

	Action decide(const MachineState& st, const Wake&) override {
		std::vector<Action> menu;
		menu.push_back(Action::cont());
		for (int id : feasible_set(st)) {
			if (!st.running)
				menu.push_back(Action::start_job(id));
			else if (id != st.running->id)
				menu.push_back(Action::revoke_and_start(id));
		}
		const std::uint64_t pick = hash64(seed_ ^ counter_) % menu.size();
		counter_ += 1;
		return menu[pick];
	}

private:
	std::uint64_t seed_;
	std::uint64_t counter_ = 0;
};

} // namespace

PolicyHandle policy_greedy_commit() { return std::make_unique<GreedyCommit>(); }
PolicyHandle policy_lazy() { return std::make_unique<Lazy>(); }
PolicyHandle policy_srpt() { return std::make_unique<Srpt>(); }
PolicyHandle policy_seeded(std::uint64_t seed) { return std::make_unique<Seeded>(seed); }

PolicyHandle make_policy(const std::string& name) {
	if (name == "greedy-commit") return policy_greedy_commit();
	if (name == "lazy") return policy_lazy();
	if (name == "srpt") return policy_srpt();
	const std::string prefix = "seeded:";
	if (name.rfind(prefix, 0) == 0) {
		const std::string digits = name.substr(prefix.size());
		const bool all_digits = !digits.empty() &&
		                        digits.find_first_not_of("0123456789") == std::string::npos;
		if (all_digits) {
			try {
				return policy_seeded(std::stoull(digits));
			} catch (const std::exception&) {
			}
		}
		throw input_error("bad seed in policy name '" + name + "'");
	}
	throw input_error("unknown policy '" + name +
	                  "' (expected greedy-commit|lazy|srpt|seeded:<u64>)");
}

} // namespace revsched
