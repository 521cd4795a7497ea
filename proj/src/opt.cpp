#include "revsched/opt.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace revsched {

namespace {

struct DpTables {
	std::vector<char> feasible;
	std::vector<Time> finish;
	std::vector<int> last;
};

// earliest-finish subset recurrence: f(S) = min over last jobs j in S of
// max(f(S \ {j}), r_j) + p_j, dropping choices whose start would pass the
// latest-start bound; the empty set leaves the machine free from the
// beginning. Candidates scan in ascending job id so ties are canonical.
DpTables run_dp(const Instance& inst) {
	const int n = static_cast<int>(inst.size());
	std::vector<int> by_id(n);
	std::iota(by_id.begin(), by_id.end(), 0);
	std::sort(by_id.begin(), by_id.end(),
	          [&](int a, int b) { return inst.jobs[a].id < inst.jobs[b].id; });

	const std::size_t size = std::size_t{1} << n;
	DpTables t{std::vector<char>(size, 0), std::vector<Time>(size), std::vector<int>(size, -1)};
	t.feasible[0] = 1;

	for (std::size_t mask = 1; mask < size; ++mask) {
		for (int idx : by_id) {
			if (!(mask & (std::size_t{1} << idx)))
				continue;
			const std::size_t rest = mask ^ (std::size_t{1} << idx);
			if (!t.feasible[rest])
				continue;
			const Job& j = inst.jobs[idx];
			const Time start = (rest == 0 || t.finish[rest] < j.r) ? j.r : t.finish[rest];
			if (start > j.latest_start())
				continue;
			const Time fin = start + j.p;
			if (!t.feasible[mask] || fin < t.finish[mask]) {
				t.feasible[mask] = 1;
				t.finish[mask] = fin;
				t.last[mask] = idx;
			}
		}
	}
	return t;
}

void check_cap(const Instance& inst, int cap, const char* which) {
	const int n = static_cast<int>(inst.size());
	if (n > cap)
		throw capacity_error("instance has " + std::to_string(n) + " jobs, " + which +
		                     " solver capped at " + std::to_string(cap));
}

} // namespace

OptResult opt_dp(const Instance& inst, int cap) {
	check_cap(inst, cap, "dp");
	OptResult res;
	res.method = "dp";
	const int n = static_cast<int>(inst.size());
	if (n == 0)
		return res;

	const DpTables t = run_dp(inst);
	const std::size_t size = std::size_t{1} << n;
	std::size_t best_mask = 0;
	int best_count = 0;
	for (std::size_t mask = 1; mask < size; ++mask) {
		const int c = std::popcount(mask);
		if (t.feasible[mask] && c > best_count) {
			best_count = c;
			best_mask = mask;
		}
	}

	std::vector<int> order;
	for (std::size_t m = best_mask; m != 0; m ^= std::size_t{1} << t.last[m])
		order.push_back(t.last[m]);
	std::reverse(order.begin(), order.end());

	Time clock;
	bool first = true;
	for (int idx : order) {
		const Job& j = inst.jobs[idx];
		const Time start = (first || clock < j.r) ? j.r : clock;
		res.witness.assignments.push_back({j.id, start});
		clock = start + j.p;
		first = false;
	}
	res.count = best_count;
	return res;
}

std::optional<Time> earliest_finish_all(const Instance& inst, int cap) {
	check_cap(inst, cap, "dp");
	if (inst.size() == 0)
		return std::nullopt;
	const DpTables t = run_dp(inst);
	const std::size_t full = (std::size_t{1} << inst.size()) - 1;
	if (!t.feasible[full])
		return std::nullopt;
	return t.finish[full];
}

namespace {

// depth-first over all orderings of all subsets, placing each job at
// max(previous finish, release); kept naive on purpose as the cross-check
// for the dp
void brute_rec(const Instance& inst, std::vector<char>& used, int placed,
               const Time& finish, bool any_placed, int& best) {
	best = std::max(best, placed);
	const int n = static_cast<int>(inst.size());
	if (best == n)
		return;
	for (int i = 0; i < n; ++i) {
		if (used[i])
			continue;
		const Job& j = inst.jobs[i];
		const Time start = (!any_placed || finish < j.r) ? j.r : finish;
		if (start > j.latest_start())
			continue;
		used[i] = 1;
		brute_rec(inst, used, placed + 1, start + j.p, true, best);
		used[i] = 0;
	}
}

} // namespace

int opt_brute(const Instance& inst, int cap) {
	check_cap(inst, cap, "brute");
	int best = 0;
	std::vector<char> used(inst.size(), 0);
	brute_rec(inst, used, 0, Time(), false, best);
	return best;
}

} // namespace revsched
