#pragma once

#include <stdexcept>
#include <string>

namespace revsched {

// malformed data handed to a library entry point (bad JSON, bad rational,
// precondition failures on public operations)
struct input_error : std::runtime_error {
	explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// a policy returned an action the machine cannot take; aborts the run
struct policy_error : std::runtime_error {
	explicit policy_error(const std::string& what) : std::runtime_error(what) {}
};

// a job source misbehaved (releases went backwards in time)
struct source_error : std::runtime_error {
	explicit source_error(const std::string& what) : std::runtime_error(what) {}
};

// degenerate geometry handed to the job-nesting constructions
struct construction_error : std::runtime_error {
	explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// instance too large for an exact solver
struct capacity_error : std::runtime_error {
	explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// broken internal invariant; always a bug in this library
struct internal_error : std::logic_error {
	explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace revsched
