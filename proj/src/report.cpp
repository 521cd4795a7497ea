#include "revsched/report.hpp"

#include <algorithm>
#include <sstream>

#include "revsched/policies.hpp"
#include "revsched/validate.hpp"

namespace revsched {

DuelReport run_duel(const DuelOptions& opts) {
	PolicyHandle policy = make_policy(opts.policy);
	AdversaryConfig cfg;
	cfg.depth = opts.depth;
	cfg.eps_frac = opts.eps_frac;
	cfg.base = opts.base;
	AdaptiveAdversary source(cfg);

	SimulationResult sim = simulate(*policy, source, opts.model);

	const auto trace_violations = validate_trace(sim.trace, sim.realized);
	if (!trace_violations.empty())
		throw internal_error("engine emitted an invalid trace: " +
		                     to_string(trace_violations.front()));

	OptResult opt = opt_dp(sim.realized);
	const auto witness_violations = validate_witness(sim.realized, opt.witness);
	if (!witness_violations.empty())
		throw internal_error("optimum schedule does not verify: " +
		                     to_string(witness_violations.front()));
	if (static_cast<int>(opt.witness.assignments.size()) != opt.count)
		throw internal_error("optimum schedule size disagrees with its count");

	DuelReport rep;
	rep.policy = opts.policy;
	rep.model = opts.model;
	rep.depth = opts.depth;
	rep.realized = std::move(sim.realized);
	rep.trace = std::move(sim.trace);
	rep.completed_count = sim.completed_count;
	rep.opt_count = opt.count;
	rep.ratio = opt.count == 0 ? Time(0) : Time(sim.completed_count) / Time(opt.count);
	rep.branches = source.branches();
	rep.opt_schedule = std::move(opt.witness);
	return rep;
}

json to_json(const DuelReport& rep) {
	json branches = json::array();
	for (const BranchRecord& b : rep.branches)
		branches.push_back(to_json(b));
	json o;
	o["policy"] = rep.policy;
	o["model"] = to_string(rep.model);
	o["depth"] = rep.depth;
	o["realized"] = to_json(rep.realized);
	o["trace"] = to_json(rep.trace);
	o["completed_count"] = rep.completed_count;
	o["opt_count"] = rep.opt_count;
	o["ratio"] = rep.ratio.str();
	o["branches"] = std::move(branches);
	o["opt_witness"] = to_json(rep.opt_schedule);
	return o;
}

std::vector<SweepRow> run_sweep(const std::vector<std::string>& policies,
                                int depth_lo, int depth_hi,
                                Model model, const Time& eps_frac, const Job& base) {
	if (policies.empty())
		throw input_error("sweep needs at least one policy");
	if (depth_lo < 1 || depth_lo > depth_hi)
		throw input_error("bad depth range " + std::to_string(depth_lo) + ":" +
		                  std::to_string(depth_hi));

	std::vector<std::string> names = policies;
	std::sort(names.begin(), names.end());
	names.erase(std::unique(names.begin(), names.end()), names.end());

	std::vector<SweepRow> rows;
	for (int k = depth_lo; k <= depth_hi; ++k) {
		for (const std::string& name : names) {
			DuelOptions opts;
			opts.policy = name;
			opts.depth = k;
			opts.model = model;
			opts.eps_frac = eps_frac;
			opts.base = base;
			const DuelReport rep = run_duel(opts);
			rows.push_back({k, name, rep.completed_count, rep.opt_count, rep.ratio});
		}
	}
	return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
	std::ostringstream out;
	out << "k,policy,completed,opt,ratio\n";
	for (const SweepRow& r : rows)
		out << r.depth << ',' << r.policy << ',' << r.completed << ',' << r.opt << ','
		    << r.ratio.str() << '\n';
	return out.str();
}

FuzzSummary run_fuzz(std::uint64_t seed_lo, std::uint64_t seed_hi, int depth, Model model) {
	if (seed_lo > seed_hi)
		throw input_error("bad seed range " + std::to_string(seed_lo) + ":" +
		                  std::to_string(seed_hi));
	FuzzSummary sum;
	sum.depth = depth;
	for (std::uint64_t seed = seed_lo;; ++seed) {
		DuelOptions opts;
		opts.policy = "seeded:" + std::to_string(seed);
		opts.depth = depth;
		opts.model = model;
		const DuelReport rep = run_duel(opts);
		sum.total += 1;
		if (rep.completed_count <= 1 && rep.opt_count == depth)
			sum.passed += 1;
		else
			sum.violations.push_back({seed, rep.completed_count, rep.opt_count});
		if (seed == seed_hi)
			break;
	}
	return sum;
}

std::string fuzz_text(const FuzzSummary& s) {
	std::ostringstream out;
	out << s.passed << "/" << s.total << " pass (depth " << s.depth << ")\n";
	for (const FuzzViolation& v : s.violations)
		out << "violation: seed=" << v.seed << " completed=" << v.completed
		    << " opt=" << v.opt << " (expected completed <= 1 and opt = " << s.depth << ")\n";
	return out.str();
}

} // namespace revsched
