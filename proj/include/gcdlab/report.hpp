#pragma once

#include "gcdlab/formula.hpp"
#include "gcdlab/modular.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace gcdlab {

enum class VerifyMode {
	Term,   // evaluate the formula by materializing every power
	Fast,   // mod-mod variant goes through modular exponentiation
};

std::optional<VerifyMode> parse_mode(std::string_view name);

struct Mismatch {
	unsigned long a;
	unsigned long b;
	Natural got;
	Natural expected;

	friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
	GcdFormula formula;
	unsigned long range_max = 0;
	VerifyMode mode = VerifyMode::Fast;
	std::vector<Mismatch> mismatches;   // sorted by (a, b)
	std::chrono::milliseconds elapsed{};

	// Documented exceptions that fall inside the grid.
	std::vector<GridPoint> expected_exceptions() const;
	// True when the mismatch set equals the documented exception set, or
	// when the base has no documented set.
	bool matches_documentation() const;
};

// Checks every 1 <= a, b <= range_max against euclid_gcd. jobs = 0 picks the
// hardware concurrency.
VerificationReport run_verify(const GcdFormula& f, unsigned long range_max, VerifyMode mode,
                              const EvalOptions& opts = {}, unsigned jobs = 0);

// Value of the formula at one grid point under the given mode.
Natural verify_point(const GcdFormula& f, unsigned long a, unsigned long b, VerifyMode mode,
                     const EvalOptions& opts);

nlohmann::json to_json(const VerificationReport& r);
std::string render_table(const VerificationReport& r);

std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& r);
nlohmann::json to_json(const BenchRecord& r);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json json_integer(const Integer& x);

} // namespace gcdlab
