#pragma once

#include <json.hpp>

#include "revsched/adversary.hpp"
#include "revsched/engine.hpp"
#include "revsched/model.hpp"
#include "revsched/opt.hpp"

namespace revsched {

// All emission goes through ordered_json so key order (and therefore the
// byte stream) is fixed; parsers accept keys in any order. Times travel as
// canonical "num/den" strings.
using json = nlohmann::ordered_json;

json to_json(const Time& t);
json to_json(const Job& j);
json to_json(const Instance& inst);
json to_json(const Event& ev);
json to_json(const Trace& tr);
json to_json(const Witness& w);
json to_json(const OptResult& r);
json to_json(const BranchRecord& b);

Time time_from_json(const json& j);
Job job_from_json(const json& j);
Instance instance_from_json(const json& j);
Event event_from_json(const json& j);
Trace trace_from_json(const json& j);
Witness witness_from_json(const json& j);

// parse with input_error on malformed text / wrong shape
json parse_json(const std::string& text);
Instance load_instance(const std::string& path);
Trace load_trace(const std::string& path);
Witness load_witness(const std::string& path);

std::string dump_json(const json& j);   // 2-space indent, trailing newline
void write_file(const std::string& path, const std::string& content);

} // namespace revsched
