#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "revsched/adversary.hpp"
#include "revsched/opt.hpp"
#include "revsched/policies.hpp"
#include "revsched/validate.hpp"
#include "testutil.hpp"

using namespace revsched;
using testutil::T;

namespace {

// enumeration oracle for the minimum completion time of scheduling ALL
// jobs: try every ordering, greedy left-shifted placement
std::optional<Time> min_finish_by_enumeration(const Instance& inst) {
	const int n = static_cast<int>(inst.size());
	if (n == 0)
		return std::nullopt;
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::optional<Time> best;
	do {
		Time clock;
		bool ok = true, first = true;
		for (int idx : perm) {
			const Job& j = inst.jobs[idx];
			const Time start = (first || clock < j.r) ? j.r : clock;
			if (start > j.latest_start()) {
				ok = false;
				break;
			}
			clock = start + j.p;
			first = false;
		}
		if (ok && (!best || clock < *best))
			best = clock;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return best;
}

Instance realized_against(const std::string& policy_name, int depth) {
	auto policy = make_policy(policy_name);
	AdversaryConfig cfg;
	cfg.depth = depth;
	AdaptiveAdversary source(cfg);
	return simulate(*policy, source, Model::Revoke).realized;
}

} // namespace

TEST_CASE("empty instance has optimum zero") {
	const auto res = opt_dp(Instance{});
	CHECK(res.count == 0);
	CHECK(res.witness.assignments.empty());
	CHECK(opt_brute(Instance{}) == 0);
}

TEST_CASE("single job is scheduled at its release") {
	const Instance inst({{0, T(0), T(1), T(2)}});
	const auto res = opt_dp(inst);
	CHECK(res.count == 1);
	REQUIRE(res.witness.assignments.size() == 1);
	CHECK(res.witness.assignments[0] == Witness::Assignment{0, T(0)});
	CHECK(opt_brute(inst) == 1);
}

TEST_CASE("identical zero-slack jobs collide") {
	const Instance two({{0, T(0), T(1), T(0)}, {1, T(0), T(1), T(0)}});
	CHECK(opt_dp(two).count == 1);
	CHECK(opt_brute(two) == 1);

	const Instance three(
	    {{0, T(0), T(1), T(0)}, {1, T(0), T(1), T(0)}, {2, T(0), T(1), T(0)}});
	CHECK(opt_dp(three).count == 1);
	CHECK(opt_brute(three) == 1);
}

TEST_CASE("adversarial instances admit all their jobs offline") {
	for (const char* name : {"srpt", "greedy-commit", "lazy", "seeded:17"}) {
		for (int depth : {1, 2, 3, 5, 8}) {
			const Instance inst = realized_against(name, depth);
			const auto res = opt_dp(inst);
			CHECK(res.count == depth);
			if (depth <= kOptBruteCap)
				CHECK(opt_brute(inst) == depth);
			CHECK(validate_witness(inst, res.witness).empty());
		}
	}
}

TEST_CASE("dp and brute force agree on randomized instances") {
	SplitMix64 rng(0xD0);
	for (int i = 0; i < 200; ++i) {
		const Instance inst = testutil::random_instance(rng, 8);
		const auto res = opt_dp(inst);
		const int brute = opt_brute(inst);
		if (res.count != brute) {
			CAPTURE(i);
			CAPTURE(inst.size());
		}
		CHECK(res.count == brute);
		CHECK(static_cast<int>(res.witness.assignments.size()) == res.count);
		CHECK(validate_witness(inst, res.witness).empty());
	}
}

TEST_CASE("adding a job never lowers the optimum") {
	SplitMix64 rng(0xD1);
	for (int i = 0; i < 80; ++i) {
		const Instance inst = testutil::random_instance(rng, 7);
		int prev = 0;
		for (std::size_t k = 0; k <= inst.size(); ++k) {
			const Instance prefix(
			    std::vector<Job>(inst.jobs.begin(), inst.jobs.begin() + k));
			const int cur = opt_dp(prefix).count;
			CHECK(cur >= prev);
			CHECK(cur <= static_cast<int>(k));
			prev = cur;
		}
	}
}

TEST_CASE("the recurrence reaches the enumerated minimum finish") {
	SplitMix64 rng(0xD2);
	for (int i = 0; i < 150; ++i) {
		const Instance inst = testutil::random_instance(rng, 6);
		const auto dp = earliest_finish_all(inst);
		const auto enumerated = min_finish_by_enumeration(inst);
		CHECK(dp.has_value() == enumerated.has_value());
		if (dp && enumerated)
			CHECK(*dp == *enumerated);
	}
}

TEST_CASE("solver caps reject oversized instances") {
	std::vector<Job> jobs;
	for (int i = 0; i < 9; ++i)
		jobs.push_back({i, T(i), T(1), T(0)});
	const Instance nine(jobs);
	CHECK_THROWS_AS(opt_brute(nine), capacity_error);
	CHECK(opt_dp(nine).count >= 1);

	for (int i = 9; i < 21; ++i)
		jobs.push_back({i, T(i), T(1), T(0)});
	const Instance twentyone(jobs);
	CHECK_THROWS_AS(opt_dp(twentyone), capacity_error);
	CHECK(opt_dp(twentyone, 21).count == 21);
}

TEST_CASE("witness tie-breaking is canonical") {
	// interchangeable jobs: the recurrence keeps the lowest id as the
	// last job of the set, so ids descend chronologically
	const Instance inst({{0, T(0), T(1), T(5)}, {1, T(0), T(1), T(5)}});
	const auto a = opt_dp(inst);
	const auto b = opt_dp(inst);
	REQUIRE(a.count == 2);
	CHECK(a.witness.assignments == b.witness.assignments);
	CHECK(a.witness.assignments[0] == Witness::Assignment{1, T(0)});
	CHECK(a.witness.assignments[1] == Witness::Assignment{0, T(1)});
}
