#include "revsched/model.hpp"

#include <algorithm>

namespace revsched {

std::string to_string(Model m) {
	return m == Model::Revoke ? "revoke" : "restart";
}

Model model_from_string(const std::string& s) {
	if (s == "revoke") return Model::Revoke;
	if (s == "restart") return Model::Restart;
	throw input_error("unknown model '" + s + "' (expected revoke|restart)");
}

std::string to_string(EventKind k) {
	switch (k) {
	case EventKind::Release: return "release";
	case EventKind::Start: return "start";
	case EventKind::Revoke: return "revoke";
	case EventKind::Complete: return "complete";
	case EventKind::Expire: return "expire";
	}
	throw internal_error("bad event kind");
}

EventKind event_kind_from_string(const std::string& s) {
	if (s == "release") return EventKind::Release;
	if (s == "start") return EventKind::Start;
	if (s == "revoke") return EventKind::Revoke;
	if (s == "complete") return EventKind::Complete;
	if (s == "expire") return EventKind::Expire;
	throw input_error("unknown event kind '" + s + "'");
}

const Job& Instance::job(int id) const {
	for (const auto& j : jobs)
		if (j.id == id)
			return j;
	throw input_error("unknown job id " + std::to_string(id));
}

void Instance::validate() const {
	std::vector<bool> seen(jobs.size(), false);
	for (std::size_t i = 0; i < jobs.size(); ++i) {
		const Job& j = jobs[i];
		j.validate();
		if (j.id < 0 || static_cast<std::size_t>(j.id) >= jobs.size() || seen[j.id])
			throw input_error("instance ids must be unique and dense from 0");
		seen[j.id] = true;
		if (i > 0 && jobs[i].r < jobs[i - 1].r)
			throw input_error("instance releases must be non-decreasing in list order");
	}
}

} // namespace revsched
