#pragma once

#include <cstdint>

namespace revsched {

// splitmix64 step: the standard finalizer over x plus the golden-gamma
// increment. Platform-independent; used wherever the artifact needs
// reproducible pseudo-randomness.
inline std::uint64_t hash64(std::uint64_t x) {
	std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
	return z ^ (z >> 31);
}

// tiny deterministic generator for tests and fuzzing
struct SplitMix64 {
	std::uint64_t state = 0;

	explicit SplitMix64(std::uint64_t seed) : state(seed) {}

	std::uint64_t next() {
		state += 0x9E3779B97F4A7C15ull;
		std::uint64_t z = state;
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
		return z ^ (z >> 31);
	}

	// uniform in [lo, hi], inclusive
	std::int64_t range(std::int64_t lo, std::int64_t hi) {
		return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
	}
};

} // namespace revsched
