#include "gcdlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace gcdlab {

std::optional<VerifyMode> parse_mode(std::string_view name)
{
	if (name == "term")
		return VerifyMode::Term;
	if (name == "fast")
		return VerifyMode::Fast;
	return std::nullopt;
}

std::vector<GridPoint> VerificationReport::expected_exceptions() const
{
	std::vector<GridPoint> out;
	for (const auto& p : formula.exceptions)
		if (p.first <= range_max && p.second <= range_max)
			out.push_back(p);
	return out;
}

bool VerificationReport::matches_documentation() const
{
	if (!formula.exceptions_known)
		return true;
	std::vector<GridPoint> got;
	for (const auto& m : mismatches)
		got.emplace_back(m.a, m.b);
	return got == expected_exceptions();
}

Natural verify_point(const GcdFormula& f, unsigned long a, unsigned long b, VerifyMode mode, const EvalOptions& opts)
{
	if (f.variant == Variant::ModMod) {
		if (mode == VerifyMode::Term)
			return modmod_direct_value(a, b, f.base, opts);
		// truncated like the div-mod "- 1" so exception points report 0
		Natural residue = modmod_fast_residue(a, b, f.base);
		return residue > 2 ? Natural(residue - 2) : Natural(0);
	}
	return gcd_via_formula(f, a, b, opts);
}

VerificationReport run_verify(const GcdFormula& f, unsigned long range_max, VerifyMode mode, const EvalOptions& opts,
                              unsigned jobs)
{
	if (range_max < 1)
		throw InvalidInput("range_max must be at least 1");
	auto start = std::chrono::steady_clock::now();

	if (jobs == 0)
		jobs = std::max(1u, std::thread::hardware_concurrency());
	jobs = static_cast<unsigned>(std::min<unsigned long>(jobs, range_max));

	std::atomic<unsigned long> next_row{1};
	std::mutex lock;
	std::vector<Mismatch> found;
	std::exception_ptr failure;

	auto worker = [&] {
		try {
			for (unsigned long a = next_row++; a <= range_max; a = next_row++) {
				for (unsigned long b = 1; b <= range_max; ++b) {
					Natural got = verify_point(f, a, b, mode, opts);
					Natural expected = euclid_gcd(a, b);
					if (got != expected) {
						std::lock_guard g(lock);
						found.push_back({a, b, std::move(got), std::move(expected)});
					}
				}
			}
		} catch (...) {
			std::lock_guard g(lock);
			if (!failure)
				failure = std::current_exception();
			next_row = range_max + 1;
		}
	};

	if (jobs <= 1) {
		worker();
	} else {
		std::vector<std::jthread> pool;
		for (unsigned i = 0; i < jobs; ++i)
			pool.emplace_back(worker);
	}
	if (failure)
		std::rethrow_exception(failure);

	std::sort(found.begin(), found.end(),
	          [](const Mismatch& x, const Mismatch& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

	VerificationReport r;
	r.formula = f;
	r.range_max = range_max;
	r.mode = mode;
	r.mismatches = std::move(found);
	r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
	return r;
}

nlohmann::json json_integer(const Integer& x)
{
	if (x.fits_slong_p())
		return x.get_si();
	if (sgn(x) > 0 && x.fits_ulong_p())
		return x.get_ui();
	return x.get_str();
}

nlohmann::json to_json(const VerificationReport& r)
{
	nlohmann::json mismatches = nlohmann::json::array();
	for (const auto& m : r.mismatches)
		mismatches.push_back({{"a", m.a}, {"b", m.b}, {"got", json_integer(m.got)}, {"expected", json_integer(m.expected)}});
	return {
	    {"variant", variant_name(r.formula.variant)},
	    {"base", json_integer(r.formula.base)},
	    {"range_max", r.range_max},
	    {"mismatches", std::move(mismatches)},
	    {"elapsed_ms", r.elapsed.count()},
	};
}

std::string render_table(const VerificationReport& r)
{
	std::ostringstream os;
	os << "variant  " << variant_name(r.formula.variant) << "\n"
	   << "base     " << r.formula.base.get_str() << "\n"
	   << "grid     1.." << r.range_max << " x 1.." << r.range_max << " (" << r.range_max * r.range_max
	   << " pairs)\n"
	   << "mode     " << (r.mode == VerifyMode::Fast ? "fast" : "term") << "\n"
	   << "elapsed  " << r.elapsed.count() << " ms\n";
	if (r.mismatches.empty()) {
		os << "mismatches: none\n";
	} else {
		os << "mismatches: " << r.mismatches.size() << "\n"
		   << "     a      b            got       expected  documented\n";
		for (const auto& m : r.mismatches) {
			char line[128];
			std::snprintf(line, sizeof line, "%6lu %6lu %14s %14s  %s\n", m.a, m.b, m.got.get_str().c_str(),
			              m.expected.get_str().c_str(), r.formula.is_exception(m.a, m.b) ? "yes" : "no");
			os << line;
		}
	}
	if (!r.formula.exceptions_known)
		os << "exception set for this base is undocumented; mismatches are empirical\n";
	os << "result: " << (r.matches_documentation() ? "OK" : "IDENTITY VIOLATED") << "\n";
	return os.str();
}

std::string bench_csv_header() { return "a,b,c,bits_A,divmod_ns,modmod_ns,equal"; }

std::string to_csv_row(const BenchRecord& r)
{
	std::ostringstream os;
	os << r.a.get_str() << ',' << r.b.get_str() << ',' << r.c.get_str() << ',' << r.bit_length_of_A << ','
	   << r.divmod_duration.count() << ',' << r.modmod_duration.count() << ',' << (r.values_equal ? "true" : "false");
	return os.str();
}

nlohmann::json to_json(const BenchRecord& r)
{
	return {
	    {"a", json_integer(r.a)},
	    {"b", json_integer(r.b)},
	    {"c", json_integer(r.c)},
	    {"bits_A", r.bit_length_of_A},
	    {"divmod_ns", r.divmod_duration.count()},
	    {"modmod_ns", r.modmod_duration.count()},
	    {"equal", r.values_equal},
	};
}

} // namespace gcdlab
