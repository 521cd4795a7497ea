#include <doctest.h>

#include "revsched/adversary.hpp"
#include "revsched/json_io.hpp"
#include "revsched/policies.hpp"
#include "revsched/report.hpp"
#include "testutil.hpp"

using namespace revsched;
using testutil::T;

namespace {

SimulationResult duel_sim(const std::string& policy_name, int depth, Model model) {
	auto policy = make_policy(policy_name);
	AdversaryConfig cfg;
	cfg.depth = depth;
	AdaptiveAdversary source(cfg);
	return simulate(*policy, source, model);
}

std::vector<Event> starts_of(const Trace& tr) {
	std::vector<Event> out;
	for (const Event& ev : tr.events)
		if (ev.kind == EventKind::Start)
			out.push_back(ev);
	return out;
}

} // namespace

TEST_CASE("greedy-commit completes only the outermost job at depth 3") {
	const auto res = duel_sim("greedy-commit", 3, Model::Revoke);
	CHECK(res.completed_count == 1);
	CHECK(res.outcomes.at(0) == JobOutcome::Completed);
	CHECK(res.outcomes.at(1) == JobOutcome::Expired);
	CHECK(res.outcomes.at(2) == JobOutcome::Expired);
	CHECK(res.realized.size() == 3);
}

TEST_CASE("greedy-commit on a static instance never revokes") {
	StaticSource src{Instance({{0, T(0), T(1), T(0)}, {1, T(0), T(1), T(0)}})};
	auto policy = policy_greedy_commit();
	const auto res = simulate(*policy, src, Model::Revoke);
	CHECK(res.completed_count == 1);
	for (const Event& ev : res.trace.events)
		CHECK(ev.kind != EventKind::Revoke);
}

TEST_CASE("greedy-commit picks the earliest release, then the lowest id") {
	StaticSource src{Instance({{0, T(0), T(5), T(10)},
	                           {1, T(1), T(1), T(10)},
	                           {2, T(1), T(1), T(10)}})};
	auto policy = policy_greedy_commit();
	const auto res = simulate(*policy, src, Model::Revoke);
	const auto starts = starts_of(res.trace);
	REQUIRE(starts.size() == 3);
	CHECK(starts[0].job == 0);
	CHECK(starts[1].job == 1);   // ids 1 and 2 tie on release; lowest id first
	CHECK(starts[2].job == 2);
	CHECK(res.completed_count == 3);
}

TEST_CASE("lazy completes nothing anywhere") {
	const auto d3 = duel_sim("lazy", 3, Model::Revoke);
	CHECK(d3.completed_count == 0);
	CHECK(d3.realized.size() == 3);

	const auto d1 = duel_sim("lazy", 1, Model::Revoke);
	CHECK(d1.completed_count == 0);
	CHECK(d1.realized.size() == 1);

	StaticSource src{Instance({{0, T(0), T(1), T(2)}})};
	auto policy = policy_lazy();
	const auto st = simulate(*policy, src, Model::Revoke);
	CHECK(st.completed_count == 0);
	CHECK(st.outcomes.at(0) == JobOutcome::Expired);
}

TEST_CASE("srpt at depth 3 under revoke completes only the innermost job") {
	const auto res = duel_sim("srpt", 3, Model::Revoke);
	CHECK(res.completed_count == 1);
	CHECK(res.outcomes.at(0) == JobOutcome::Revoked);
	CHECK(res.outcomes.at(1) == JobOutcome::Revoked);
	CHECK(res.outcomes.at(2) == JobOutcome::Completed);
}

TEST_CASE("srpt at depth 3 under restart completes all three") {
	const auto res = duel_sim("srpt", 3, Model::Restart);
	CHECK(res.completed_count == 3);
	const auto starts = starts_of(res.trace);
	REQUIRE(starts.size() == 5);
	CHECK(starts[0] == Event{T(0), EventKind::Start, 0});
	CHECK(starts[1] == Event{T(1, 10), EventKind::Start, 1});
	CHECK(starts[2] == Event{T(13, 100), EventKind::Start, 2});
	// recoveries, innermost outward; both restarts inside their windows
	CHECK(starts[3] == Event{T(22, 100), EventKind::Start, 1});
	CHECK(starts[4] == Event{T(52, 100), EventKind::Start, 0});
}

TEST_CASE("srpt preempts only for strictly earlier completion") {
	// newcomer would finish exactly when the current job does: no revoke
	StaticSource src{Instance({{0, T(0), T(2), T(2)}, {1, T(1), T(1), T(3)}})};
	auto policy = policy_srpt();
	const auto res = simulate(*policy, src, Model::Revoke);
	CHECK(res.completed_count == 2);   // job 0 finishes at 2, job 1 runs [2,3)
	for (const Event& ev : res.trace.events)
		CHECK(ev.kind != EventKind::Revoke);
}

TEST_CASE("srpt picks the shortest feasible job when idle") {
	// machine goes idle at 1 with two jobs waiting; the short one goes first
	StaticSource src{Instance({{0, T(0), T(1), T(0)},
	                           {1, T(1, 2), T(3), T(10)},
	                           {2, T(1, 2), T(1), T(10)}})};
	auto policy = policy_srpt();
	const auto res = simulate(*policy, src, Model::Revoke);
	const auto starts = starts_of(res.trace);
	REQUIRE(starts.size() == 3);
	CHECK(starts[0].job == 0);
	CHECK(starts[1] == Event{T(1), EventKind::Start, 2});
	CHECK(starts[2] == Event{T(2), EventKind::Start, 1});
	CHECK(res.completed_count == 3);
}

TEST_CASE("simultaneous releases are offered one at a time") {
	// srpt sees job 0 first, starts it, then trades it for the shorter job 1
	StaticSource src{Instance({{0, T(0), T(3), T(10)}, {1, T(0), T(1), T(10)}})};
	auto policy = policy_srpt();
	const auto res = simulate(*policy, src, Model::Revoke);
	const auto starts = starts_of(res.trace);
	REQUIRE(starts.size() == 2);
	CHECK(starts[0].job == 0);
	CHECK(starts[1].job == 1);
	CHECK(res.completed_count == 1);   // the zero-length run of job 0 is lost
	CHECK(res.outcomes.at(0) == JobOutcome::Revoked);
}

TEST_CASE("seeded policies are reproducible and bounded in duels") {
	for (std::uint64_t seed : {0ull, 1ull, 7ull, 42ull, 1234567ull}) {
		const std::string name = "seeded:" + std::to_string(seed);
		const auto a = duel_sim(name, 4, Model::Revoke);
		const auto b = duel_sim(name, 4, Model::Revoke);
		CHECK(dump_json(to_json(a.trace)) == dump_json(to_json(b.trace)));
		CHECK(a.completed_count <= 1);
		CHECK(a.realized.size() == 4);
	}
}

TEST_CASE("seeded policies never emit infeasible actions on static runs") {
	SplitMix64 rng(0xFEED);
	for (int i = 0; i < 60; ++i) {
		const Instance inst = testutil::random_instance(rng, 6);
		auto policy = policy_seeded(rng.next());
		StaticSource src(inst);
		CHECK_NOTHROW(simulate(*policy, src, Model::Revoke));
	}
}

TEST_CASE("policy names parse and reject garbage") {
	CHECK(make_policy("greedy-commit")->name() == "greedy-commit");
	CHECK(make_policy("lazy")->name() == "lazy");
	CHECK(make_policy("srpt")->name() == "srpt");
	CHECK(make_policy("seeded:42")->name() == "seeded:42");
	CHECK_THROWS_AS(make_policy("edf"), input_error);
	CHECK_THROWS_AS(make_policy("seeded:"), input_error);
	CHECK_THROWS_AS(make_policy("seeded:abc"), input_error);
	CHECK_THROWS_AS(make_policy("seeded:-3"), input_error);
}
