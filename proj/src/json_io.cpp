#include "revsched/json_io.hpp"

#include <fstream>
#include <sstream>

namespace revsched {

namespace {

[[noreturn]] void shape_error(const std::string& what) {
	throw input_error("malformed JSON: " + what);
}

const json& field(const json& j, const char* key) {
	if (!j.is_object() || !j.contains(key))
		shape_error(std::string("missing field '") + key + "'");
	return j.at(key);
}

int int_field(const json& j, const char* key) {
	const json& v = field(j, key);
	if (!v.is_number_integer())
		shape_error(std::string("field '") + key + "' must be an integer");
	return v.get<int>();
}

std::string str_field(const json& j, const char* key) {
	const json& v = field(j, key);
	if (!v.is_string())
		shape_error(std::string("field '") + key + "' must be a string");
	return v.get<std::string>();
}

Time time_field(const json& j, const char* key) {
	return Time::parse(str_field(j, key));
}

} // namespace

json to_json(const Time& t) { return t.str(); }

json to_json(const Job& j) {
	json o;
	o["id"] = j.id;
	o["r"] = j.r.str();
	o["p"] = j.p.str();
	o["s"] = j.s.str();
	return o;
}

json to_json(const Instance& inst) {
	json arr = json::array();
	for (const Job& j : inst.jobs)
		arr.push_back(to_json(j));
	json o;
	o["jobs"] = std::move(arr);
	return o;
}

json to_json(const Event& ev) {
	json o;
	o["t"] = ev.t.str();
	o["kind"] = to_string(ev.kind);
	o["job"] = ev.job;
	return o;
}

json to_json(const Trace& tr) {
	json evs = json::array();
	for (const Event& ev : tr.events)
		evs.push_back(to_json(ev));
	json o;
	o["model"] = to_string(tr.model);
	o["events"] = std::move(evs);
	return o;
}

json to_json(const Witness& w) {
	json arr = json::array();
	for (const auto& a : w.assignments) {
		json e;
		e["job"] = a.job;
		e["start"] = a.start.str();
		arr.push_back(std::move(e));
	}
	json o;
	o["assignments"] = std::move(arr);
	return o;
}

json to_json(const OptResult& r) {
	json o;
	o["count"] = r.count;
	o["witness"] = to_json(r.witness);
	o["method"] = r.method;
	return o;
}

json to_json(const BranchRecord& b) {
	json o;
	o["level"] = b.level;
	o["branch"] = b.is_run() ? "run" : "ignore";
	o["a"] = b.is_run() ? json(b.run_start->str()) : json(nullptr);
	return o;
}

Time time_from_json(const json& j) {
	if (!j.is_string())
		shape_error("time values must be \"num/den\" strings");
	return Time::parse(j.get<std::string>());
}

Job job_from_json(const json& j) {
	Job out;
	out.id = int_field(j, "id");
	out.r = time_field(j, "r");
	out.p = time_field(j, "p");
	out.s = time_field(j, "s");
	out.validate();
	return out;
}

Instance instance_from_json(const json& j) {
	const json& jobs = field(j, "jobs");
	if (!jobs.is_array())
		shape_error("'jobs' must be an array");
	Instance inst;
	for (const json& e : jobs)
		inst.jobs.push_back(job_from_json(e));
	inst.validate();
	return inst;
}

Event event_from_json(const json& j) {
	Event ev;
	ev.t = time_field(j, "t");
	ev.kind = event_kind_from_string(str_field(j, "kind"));
	ev.job = int_field(j, "job");
	return ev;
}

Trace trace_from_json(const json& j) {
	Trace tr;
	tr.model = model_from_string(str_field(j, "model"));
	const json& evs = field(j, "events");
	if (!evs.is_array())
		shape_error("'events' must be an array");
	for (const json& e : evs)
		tr.events.push_back(event_from_json(e));
	return tr;
}

Witness witness_from_json(const json& j) {
	const json& arr = field(j, "assignments");
	if (!arr.is_array())
		shape_error("'assignments' must be an array");
	Witness w;
	for (const json& e : arr)
		w.assignments.push_back({int_field(e, "job"), time_field(e, "start")});
	return w;
}

json parse_json(const std::string& text) {
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded())
		throw input_error("malformed JSON text");
	return j;
}

namespace {

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw input_error("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

} // namespace

Instance load_instance(const std::string& path) {
	return instance_from_json(parse_json(read_file(path)));
}

Trace load_trace(const std::string& path) {
	return trace_from_json(parse_json(read_file(path)));
}

Witness load_witness(const std::string& path) {
	return witness_from_json(parse_json(read_file(path)));
}

std::string dump_json(const json& j) {
	return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw input_error("cannot write '" + path + "'");
	out << content;
	if (!out)
		throw input_error("write to '" + path + "' failed");
}

} // namespace revsched
