#include <doctest.h>

#include <algorithm>
#include <vector>

#include "revsched/time.hpp"
#include "revsched/util.hpp"
#include "testutil.hpp"

using namespace revsched;
using testutil::T;

TEST_CASE("fractions reduce to canonical form") {
	CHECK(Time(2, 4) == Time(1, 2));
	CHECK(Time(2, 4).num() == 1);
	CHECK(Time(2, 4).den() == 2);

	CHECK(Time(3, -6) == Time(-1, 2));
	CHECK(Time(3, -6).num() == -1);
	CHECK(Time(3, -6).den() == 2);

	CHECK(Time(0, 7).num() == 0);
	CHECK(Time(0, 7).den() == 1);
	CHECK(Time(0, 7).str() == "0/1");
}

TEST_CASE("zero denominator is rejected") {
	CHECK_THROWS_AS(Time(1, 0), input_error);
	CHECK_THROWS_AS(Time::parse("3/0"), input_error);
}

TEST_CASE("division by zero is rejected") {
	CHECK_THROWS_AS(Time(1) / Time(0), input_error);
}

TEST_CASE("string form is always num/den") {
	CHECK(Time(3, 10).str() == "3/10");
	CHECK(Time(-1, 2).str() == "-1/2");
	CHECK(Time(5).str() == "5/1");
	CHECK(Time(18, 100).str() == "9/50");
}

TEST_CASE("parse accepts fractions and bare integers") {
	CHECK(Time::parse("3/10") == Time(3, 10));
	CHECK(Time::parse("-1/2") == Time(-1, 2));
	CHECK(Time::parse("6/4") == Time(3, 2));
	CHECK(Time::parse("7") == Time(7));
	CHECK(Time::parse("-7") == Time(-7));
	CHECK_THROWS_AS(Time::parse("x"), input_error);
	CHECK_THROWS_AS(Time::parse("1/2/3"), input_error);
	CHECK_THROWS_AS(Time::parse(""), input_error);
	CHECK_THROWS_AS(Time::parse("1.5"), input_error);
}

TEST_CASE("arithmetic is exact and stays canonical") {
	SplitMix64 rng(0xA11CE);
	for (int i = 0; i < 500; ++i) {
		const Time a = testutil::random_rational(rng, -50, 50, 97);
		const Time b = testutil::random_rational(rng, -50, 50, 89);
		CHECK((a + b) - b == a);
		CHECK(a + b == b + a);
		if (!b.is_zero())
			CHECK((a / b) * b == a);
		const Time c = a + b;
		using boost::multiprecision::gcd;
		const BigInt n = c.num() < 0 ? BigInt(-c.num()) : c.num();
		CHECK(c.den() > 0);
		CHECK((n == 0 ? c.den() == 1 : gcd(n, c.den()) == 1));
	}
}

TEST_CASE("comparison is a total order consistent with cross-multiplication") {
	SplitMix64 rng(0xB0B);
	std::vector<Time> xs;
	for (int i = 0; i < 200; ++i)
		xs.push_back(testutil::random_rational(rng, -20, 20, 40));
	for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
		const Time& a = xs[i];
		const Time& b = xs[i + 1];
		// independent oracle: compare by cross products (denominators > 0)
		const bool less = a.num() * b.den() < b.num() * a.den();
		CHECK((a < b) == less);
		CHECK((a == b) == (a.num() == b.num() && a.den() == b.den()));
	}
	std::sort(xs.begin(), xs.end());
	CHECK(std::is_sorted(xs.begin(), xs.end()));
}

TEST_CASE("deep nesting keeps exactness far beyond fixed-width range") {
	Time p(1);
	for (int i = 0; i < 40; ++i)
		p = p * Time(3, 10);
	Time q = p;
	for (int i = 0; i < 40; ++i)
		q = q / Time(3, 10);
	CHECK(q == Time(1));
	CHECK(p.is_positive());
}

TEST_CASE("splitmix64 finalizer matches the reference stream") {
	// first two outputs of the reference generator seeded with 0
	CHECK(hash64(0) == 0xE220A8397B1DCDAFull);
	CHECK(hash64(0x9E3779B97F4A7C15ull) == 0x6E789E6AA1B965F4ull);
	SplitMix64 rng(0);
	CHECK(rng.next() == 0xE220A8397B1DCDAFull);
	CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
	CHECK(rng.next() == 0x06C45D188009454Full);
}
