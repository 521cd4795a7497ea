#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "revsched/json_io.hpp"
#include "revsched/opt.hpp"
#include "revsched/policies.hpp"
#include "revsched/report.hpp"
#include "revsched/validate.hpp"

namespace {

using namespace revsched;

// exit codes: 0 ok, 1 property violation, 2 usage or bad input,
// 3 policy error, 4 internal bug
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kPolicyError = 3;
constexpr int kInternal = 4;

std::pair<long long, long long> parse_range(const std::string& text, const char* what) {
	const auto colon = text.find(':');
	if (colon == std::string::npos)
		throw input_error(std::string(what) + " range must be lo:hi, got '" + text + "'");
	try {
		const long long lo = std::stoll(text.substr(0, colon));
		const long long hi = std::stoll(text.substr(colon + 1));
		if (lo > hi || lo < 0)
			throw input_error(std::string(what) + " range " + text + " is inverted or negative");
		return {lo, hi};
	} catch (const input_error&) {
		throw;
	} catch (const std::exception&) {
		throw input_error(std::string("bad ") + what + " range '" + text + "'");
	}
}

Job parse_base(const std::string& text) {
	std::vector<std::string> parts;
	std::string cur;
	for (char c : text) {
		if (c == ',') {
			parts.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	parts.push_back(cur);
	if (parts.size() != 3)
		throw input_error("base job must be r,p,s (three rationals), got '" + text + "'");
	Job base{0, Time::parse(parts[0]), Time::parse(parts[1]), Time::parse(parts[2])};
	base.validate();
	return base;
}

std::vector<std::string> split_csv_list(const std::string& text) {
	std::vector<std::string> out;
	std::string cur;
	for (char c : text) {
		if (c == ',') {
			if (!cur.empty())
				out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty())
		out.push_back(cur);
	return out;
}

struct CommonArgs {
	std::string model = "revoke";
	std::string eps_frac = "1/10";
	std::string base = "0,1,2";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
	cmd->add_option("--model", args.model, "abort model: revoke|restart")
	    ->default_val("revoke");
	cmd->add_option("--eps-frac", args.eps_frac,
	                "per-level release offset as a fraction of p, rational in (0,1/3)")
	    ->default_val("1/10");
	cmd->add_option("--base", args.base, "outermost job as r,p,s")->default_val("0,1,2");
}

DuelOptions duel_options(const std::string& policy, int depth, const CommonArgs& c) {
	DuelOptions o;
	o.policy = policy;
	o.depth = depth;
	o.model = model_from_string(c.model);
	o.eps_frac = Time::parse(c.eps_frac);
	o.base = parse_base(c.base);
	return o;
}

void emit(const std::string& text, const std::string& out_path) {
	std::cout << text;
	if (!out_path.empty())
		write_file(out_path, text);
}

int cmd_duel(const std::string& policy, int depth, const CommonArgs& common,
             const std::string& out_path, const std::string& trace_path) {
	const DuelReport rep = run_duel(duel_options(policy, depth, common));
	emit(dump_json(to_json(rep)), out_path);
	if (!trace_path.empty())
		write_file(trace_path, dump_json(to_json(rep.trace)));
	return kOk;
}

int cmd_sweep(const std::string& policies, const std::string& depths,
              const CommonArgs& common, const std::string& csv_path) {
	const auto [lo, hi] = parse_range(depths, "depth");
	const auto names = split_csv_list(policies);
	const auto rows = run_sweep(names, static_cast<int>(lo), static_cast<int>(hi),
	                            model_from_string(common.model),
	                            Time::parse(common.eps_frac), parse_base(common.base));
	emit(sweep_csv(rows), csv_path);
	return kOk;
}

int cmd_fuzz(const std::string& seeds, int depth, const CommonArgs& common) {
	const auto [lo, hi] = parse_range(seeds, "seed");
	const FuzzSummary sum =
	    run_fuzz(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi), depth,
	             model_from_string(common.model));
	std::cout << fuzz_text(sum);
	return sum.violations.empty() ? kOk : kViolation;
}

int cmd_opt(const std::string& instance_path, const std::string& method,
            const std::string& out_path) {
	const Instance inst = load_instance(instance_path);
	if (method == "dp") {
		emit(dump_json(to_json(opt_dp(inst))), out_path);
		return kOk;
	}
	if (method == "brute") {
		OptResult res;
		res.count = opt_brute(inst);
		res.method = "brute";
		json o;
		o["count"] = res.count;
		o["witness"] = nullptr;
		o["method"] = res.method;
		emit(dump_json(o), out_path);
		return kOk;
	}
	if (method == "both") {
		const OptResult dp = opt_dp(inst);
		const int brute = opt_brute(inst);
		if (dp.count != brute) {
			std::cerr << "solver mismatch: dp=" << dp.count << " brute=" << brute << "\n";
			return kViolation;
		}
		json o = to_json(dp);
		o["method"] = "both";
		emit(dump_json(o), out_path);
		return kOk;
	}
	throw input_error("unknown method '" + method + "' (expected dp|brute|both)");
}

int cmd_verify(const std::string& instance_path, const std::string& witness_path,
               const std::string& trace_path) {
	if (witness_path.empty() == trace_path.empty())
		throw input_error("verify needs exactly one of --witness or --trace");
	const Instance inst = load_instance(instance_path);
	std::vector<Violation> violations;
	if (!witness_path.empty())
		violations = validate_witness(inst, load_witness(witness_path));
	else
		violations = validate_trace(load_trace(trace_path), inst);
	for (const Violation& v : violations)
		std::cout << to_string(v) << "\n";
	if (violations.empty()) {
		std::cout << "ok\n";
		return kOk;
	}
	return kViolation;
}

int cmd_simulate(const std::string& instance_path, const std::string& policy,
                 const CommonArgs& common, const std::string& out_path,
                 const std::string& trace_path) {
	const Instance inst = load_instance(instance_path);
	PolicyHandle pol = make_policy(policy);
	StaticSource source(inst);
	const SimulationResult res = simulate(*pol, source, model_from_string(common.model));

	json outcomes;
	for (const auto& [id, outcome] : res.outcomes)
		outcomes[std::to_string(id)] = to_string(outcome);
	json o;
	o["policy"] = policy;
	o["model"] = common.model;
	o["completed_count"] = res.completed_count;
	o["outcomes"] = std::move(outcomes);
	o["trace"] = to_json(res.trace);
	emit(dump_json(o), out_path);
	if (!trace_path.empty())
		write_file(trace_path, dump_json(to_json(res.trace)));
	return kOk;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"online throughput scheduling testbed: revoke-model duels, "
	             "adaptive lower-bound source, exact offline optimum"};
	app.require_subcommand(1);

	std::string policy = "srpt";
	int depth = 3;
	std::string out_path, trace_path, csv_path;
	std::string policies, depths, seeds;
	std::string instance_path, witness_path, verify_trace_path;
	std::string method = "dp";
	CommonArgs common;

	CLI::App* duel = app.add_subcommand("duel", "one policy against the adaptive source");
	duel->add_option("--policy", policy, "greedy-commit|lazy|srpt|seeded:<u64>")
	    ->default_val("srpt");
	duel->add_option("--depth", depth, "number of adversarial jobs, >= 1")->default_val(3);
	add_common(duel, common);
	duel->add_option("--out", out_path, "also write the report JSON here");
	duel->add_option("--trace", trace_path, "also write the trace JSON here");

	CLI::App* sweep = app.add_subcommand("sweep", "duels over a depth range, CSV out");
	sweep->add_option("--policies", policies, "comma-separated policy names")->required();
	sweep->add_option("--depths", depths, "depth range lo:hi")->required();
	add_common(sweep, common);
	sweep->add_option("--csv", csv_path, "also write the CSV here");

	CLI::App* fuzz = app.add_subcommand(
	    "fuzz", "seeded-policy duels; fails when any run beats the impossibility bound");
	fuzz->add_option("--seeds", seeds, "seed range lo:hi")->required();
	fuzz->add_option("--depth", depth, "number of adversarial jobs")->default_val(5);
	add_common(fuzz, common);

	CLI::App* opt = app.add_subcommand("opt", "exact offline optimum of an instance file");
	opt->add_option("--instance", instance_path, "instance JSON path")->required();
	opt->add_option("--method", method, "dp|brute|both")->default_val("dp");
	opt->add_option("--out", out_path, "also write the result JSON here");

	CLI::App* verify = app.add_subcommand("verify", "check a witness or trace file");
	verify->add_option("--instance", instance_path, "instance JSON path")->required();
	verify->add_option("--witness", witness_path, "witness JSON path");
	verify->add_option("--trace", verify_trace_path, "trace JSON path");

	CLI::App* sim = app.add_subcommand("simulate", "replay a static instance under a policy");
	sim->add_option("--instance", instance_path, "instance JSON path")->required();
	sim->add_option("--policy", policy, "greedy-commit|lazy|srpt|seeded:<u64>")
	    ->default_val("srpt");
	add_common(sim, common);
	sim->add_option("--out", out_path, "also write the result JSON here");
	sim->add_option("--trace", trace_path, "also write the trace JSON here");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return kUsage;
	}

	try {
		if (app.got_subcommand(duel))
			return cmd_duel(policy, depth, common, out_path, trace_path);
		if (app.got_subcommand(sweep))
			return cmd_sweep(policies, depths, common, csv_path);
		if (app.got_subcommand(fuzz))
			return cmd_fuzz(seeds, depth, common);
		if (app.got_subcommand(opt))
			return cmd_opt(instance_path, method, out_path);
		if (app.got_subcommand(verify))
			return cmd_verify(instance_path, witness_path, verify_trace_path);
		if (app.got_subcommand(sim))
			return cmd_simulate(instance_path, policy, common, out_path, trace_path);
	} catch (const policy_error& e) {
		std::cerr << "policy error: " << e.what() << "\n";
		return kPolicyError;
	} catch (const input_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const capacity_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const construction_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return kInternal;
	}
	return kUsage;
}
