#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "revsched/errors.hpp"

namespace revsched {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational instant (also used for durations; both live on the same
// axis and are freely added). Canonical form: denominator > 0 and
// gcd(|num|, den) == 1, maintained by every operation. No floating point
// anywhere: nested constructions shrink durations geometrically and
// fixed-width fractions overflow after a dozen levels.
class Time {
public:
	Time() : v_(0) {}
	Time(int n) : v_(n) {}                // NOLINT: implicit by design
	Time(long long n) : v_(n) {}          // NOLINT

	// reduces num/den to canonical form; den == 0 is an input_error
	Time(const BigInt& num, const BigInt& den) {
		if (den == 0)
			throw input_error("invalid time: zero denominator");
		if (den < 0)
			v_ = Rational(-num, -den);
		else
			v_ = Rational(num, den);
	}
	Time(long long num, long long den) : Time(BigInt(num), BigInt(den)) {}

	BigInt num() const { return boost::multiprecision::numerator(v_); }
	BigInt den() const { return boost::multiprecision::denominator(v_); }

	Time operator+(const Time& o) const { return Time(v_ + o.v_); }
	Time operator-(const Time& o) const { return Time(v_ - o.v_); }
	Time operator*(const Time& o) const { return Time(v_ * o.v_); }
	Time operator-() const { return Time(-v_); }

	Time operator/(const Time& o) const {
		if (o.v_ == 0)
			throw input_error("invalid time: division by zero");
		return Time(v_ / o.v_);
	}

	Time& operator+=(const Time& o) { v_ += o.v_; return *this; }
	Time& operator-=(const Time& o) { v_ -= o.v_; return *this; }

	bool operator==(const Time& o) const { return v_ == o.v_; }
	std::strong_ordering operator<=>(const Time& o) const {
		if (v_ < o.v_) return std::strong_ordering::less;
		if (v_ > o.v_) return std::strong_ordering::greater;
		return std::strong_ordering::equal;
	}

	bool is_zero() const { return v_ == 0; }
	bool is_negative() const { return v_ < 0; }
	bool is_positive() const { return v_ > 0; }

	// canonical "num/den" spelling, e.g. "3/10", "-1/2", "0/1"
	std::string str() const { return num().str() + "/" + den().str(); }

	// accepts "num/den" or a bare integer "num"
	static Time parse(const std::string& text);

private:
	using Rational = boost::multiprecision::cpp_rational;
	explicit Time(Rational v) : v_(std::move(v)) {}
	Rational v_;
};

inline Time Time::parse(const std::string& text) {
	const auto slash = text.find('/');
	const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
	const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
	if (num.empty() || den.empty())
		throw input_error("invalid time literal: '" + text + "'");
	try {
		return Time(BigInt(num), BigInt(den));
	} catch (const input_error&) {
		throw;
	} catch (const std::exception&) {
		throw input_error("invalid time literal: '" + text + "'");
	}
}

inline std::ostream& operator<<(std::ostream& os, const Time& t) { return os << t.str(); }

} // namespace revsched
