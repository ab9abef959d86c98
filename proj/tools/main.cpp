// gcdlab: evaluate arithmetic terms, compute gcd through closed formulas,
// verify formulas over grids, extract series coefficients and benchmark the
// div-mod path against the mod-mod fast path.

#include "gcdlab/formula.hpp"
#include "gcdlab/modular.hpp"
#include "gcdlab/parser.hpp"
#include "gcdlab/report.hpp"
#include "gcdlab/series.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace gcdlab;

namespace {

enum Exit : int {
	ok = 0,
	syntax_error = 1,
	eval_error = 2,
	identity_violated = 3,
};

Natural natural_arg(const std::string& text, const char* what)
{
	Integer v;
	if (!parse_decimal(text, v) || sgn(v) < 0)
		throw InvalidInput(std::string(what) + " must be a decimal natural number, got '" + text + "'");
	return v;
}

unsigned long small_arg(const std::string& text, const char* what)
{
	Natural v = natural_arg(text, what);
	if (!v.fits_ulong_p())
		throw InvalidInput(std::string(what) + " is out of range");
	return v.get_ui();
}

void report_syntax_error(const std::string& text, const SyntaxError& e)
{
	std::cerr << "error: " << e.message << "\n  " << text << "\n  " << std::string(e.span.start, ' ')
	          << std::string(std::max<std::size_t>(1, e.span.end - e.span.start), '^') << "\n";
}

struct EvalCmd {
	std::string expr;
	std::vector<std::string> bindings;

	int run(const EvalOptions& opts) const
	{
		Term t = parse_term(expr);
		Env env;
		for (const auto& b : bindings) {
			auto eq = b.find('=');
			if (eq == std::string::npos || eq == 0)
				throw InvalidInput("binding '" + b + "' is not of the form name=value");
			env[b.substr(0, eq)] = natural_arg(b.substr(eq + 1), "binding value");
		}
		std::cout << eval(t, env, opts).get_str() << "\n";
		return ok;
	}
};

struct GcdCmd {
	std::string a, b, variant = "divmod", base = "5";

	int run(const EvalOptions& opts) const
	{
		auto v = parse_variant(variant);
		if (!v)
			throw InvalidInput("unknown variant '" + variant + "'");
		GcdFormula f = GcdFormula::make(*v, natural_arg(base, "base"));
		unsigned long x = small_arg(a, "a"), y = small_arg(b, "b");
		if (f.is_exception(x, y))
			std::cerr << "warning: (" << x << "," << y << ") is a documented exception of " << variant_name(f.variant)
			          << " base " << f.base.get_str() << "; the value is not gcd(a,b)\n";
		else if (!f.exceptions_known)
			std::cerr << "note: base " << f.base.get_str() << " has no documented exception set\n";
		std::cout << gcd_via_formula(f, x, y, opts).get_str() << "\n";
		return ok;
	}
};

struct VerifyCmd {
	std::string max = "10", variant = "divmod", base = "5", mode = "fast", out;
	bool json = false;
	unsigned jobs = 0;

	int run(const EvalOptions& opts) const
	{
		auto v = parse_variant(variant);
		if (!v)
			throw InvalidInput("unknown variant '" + variant + "'");
		auto m = parse_mode(mode);
		if (!m)
			throw InvalidInput("unknown mode '" + mode + "'");
		GcdFormula f = GcdFormula::make(*v, natural_arg(base, "base"));
		VerificationReport r = run_verify(f, small_arg(max, "max"), *m, opts, jobs);

		for (const auto& [a, b] : r.expected_exceptions())
			std::cerr << "warning: (" << a << "," << b << ") is a documented exception of " << variant_name(f.variant)
			          << " base " << f.base.get_str() << "\n";

		auto doc = to_json(r);
		if (json)
			std::cout << doc.dump(2) << "\n";
		else
			std::cout << render_table(r);
		if (!out.empty()) {
			std::ofstream file(out);
			file << doc.dump(2) << "\n";
			if (!file)
				throw Error("cannot write " + out);
		}
		return r.matches_documentation() ? ok : identity_violated;
	}
};

struct ExtractCmd {
	std::string num = "1", den, base = "5", n, check_to = "60";

	int run() const
	{
		RationalFunction f(Polynomial::parse(num), Polynomial::parse(den));
		Natural c = natural_arg(base, "base");
		unsigned long index = small_arg(n, "n");
		unsigned long limit = std::max(small_arg(check_to, "check-to"), index);
		ExtractionParams p = check_extraction_conditions(f, c, limit);
		Natural s = extract_coefficient(f, c, index);
		std::cout << s.get_str() << "\n"
		          << "rank m = " << p.m << " (growth checked to n = " << p.growth_margin_checked_to << ", radius "
		          << (p.radius == RadiusStatus::Proven ? "proven" : "empirically validated") << ")\n";
		if (index < p.m)
			std::cerr << "warning: n = " << index << " is below the rank m = " << p.m
			          << "; the extracted value may differ from s(n)\n";
		return ok;
	}
};

struct BenchCmd {
	std::vector<std::string> pairs;
	std::string base = "5", out;
	unsigned reps = 3;
	bool json = false;

	int run() const
	{
		Natural c = natural_arg(base, "base");
		std::vector<BenchRecord> records;
		for (const auto& p : pairs) {
			auto comma = p.find_first_of(",x");
			if (comma == std::string::npos)
				throw InvalidInput("pair '" + p + "' is not of the form a,b");
			Natural a = small_arg(p.substr(0, comma), "a");
			Natural b = small_arg(p.substr(comma + 1), "b");
			records.push_back(bench_compare(a, b, c, reps));
		}

		if (!out.empty()) {
			std::ofstream file(out);
			if (out.size() >= 5 && out.compare(out.size() - 5, 5, ".json") == 0) {
				nlohmann::json arr = nlohmann::json::array();
				for (const auto& r : records)
					arr.push_back(to_json(r));
				file << arr.dump(2) << "\n";
			} else {
				file << bench_csv_header() << "\n";
				for (const auto& r : records)
					file << to_csv_row(r) << "\n";
			}
			file.flush();
			if (!file) {
				std::cerr << "error: cannot write " << out << "\n";
				return eval_error;
			}
		}

		if (json) {
			nlohmann::json arr = nlohmann::json::array();
			for (const auto& r : records)
				arr.push_back(to_json(r));
			std::cout << arr.dump(2) << "\n";
		} else {
			std::printf("%6s %6s %10s %12s %12s %9s  %s\n", "a", "b", "bits_A", "divmod_ms", "modmod_ms", "speedup",
			            "equal");
			for (const auto& r : records) {
				double dm = r.divmod_duration.count() / 1e6, mm = r.modmod_duration.count() / 1e6;
				std::printf("%6s %6s %10zu %12.3f %12.3f %8.1fx  %s\n", r.a.get_str().c_str(), r.b.get_str().c_str(),
				            r.bit_length_of_A, dm, mm, mm > 0 ? dm / mm : 0.0, r.values_equal ? "yes" : "NO");
			}
		}
		for (const auto& r : records)
			if (!r.values_equal)
				return identity_violated;
		return ok;
	}
};

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact big-integer laboratory for arithmetic-term gcd formulas"};
	app.require_subcommand(1);
	app.fallthrough();

	unsigned max_exponent_bits = 26;
	app.add_option("--max-exponent-bits", max_exponent_bits, "refuse powers whose exponent is wider than this")
	    ->capture_default_str();

	EvalCmd eval_cmd;
	auto* eval_app = app.add_subcommand("eval", "evaluate a term over the naturals");
	eval_app->add_option("expr", eval_cmd.expr, "term text, e.g. \"a*b + 1\"")->required();
	eval_app->add_option("bindings", eval_cmd.bindings, "variable bindings name=value");

	GcdCmd gcd_cmd;
	auto* gcd_app = app.add_subcommand("gcd", "compute gcd(a,b) through a formula");
	gcd_app->add_option("a", gcd_cmd.a)->required();
	gcd_app->add_option("b", gcd_cmd.b)->required();
	gcd_app->add_option("--variant", gcd_cmd.variant, "mazzanti | divmod | modmod")->capture_default_str();
	gcd_app->add_option("--base", gcd_cmd.base)->capture_default_str();

	VerifyCmd verify_cmd;
	auto* verify_app = app.add_subcommand("verify", "check a formula against Euclid on 1..max x 1..max");
	verify_app->add_option("--max", verify_cmd.max)->capture_default_str();
	verify_app->add_option("--variant", verify_cmd.variant, "mazzanti | divmod | modmod")->capture_default_str();
	verify_app->add_option("--base", verify_cmd.base)->capture_default_str();
	verify_app->add_option("--mode", verify_cmd.mode, "term | fast")->capture_default_str();
	verify_app->add_flag("--json", verify_cmd.json, "print the report as JSON");
	verify_app->add_option("--out", verify_cmd.out, "also write the JSON report here");
	verify_app->add_option("--jobs", verify_cmd.jobs, "worker threads (0 = all cores)")->capture_default_str();

	ExtractCmd extract_cmd;
	auto* extract_app = app.add_subcommand("extract", "extract s(n) from a rational generating function");
	extract_app->add_option("--num", extract_cmd.num, "numerator coefficients, lowest degree first")
	    ->capture_default_str();
	extract_app->add_option("--den", extract_cmd.den, "denominator coefficients, e.g. --den=1,-2,1")->required();
	extract_app->add_option("--base,-c", extract_cmd.base)->capture_default_str();
	extract_app->add_option("--n", extract_cmd.n)->required();
	extract_app->add_option("--check-to", extract_cmd.check_to, "growth condition checked up to this n")
	    ->capture_default_str();

	BenchCmd bench_cmd;
	auto* bench_app = app.add_subcommand("bench", "time div-mod evaluation against the mod-mod fast path");
	bench_app->add_option("pairs", bench_cmd.pairs, "pairs a,b");
	bench_app->add_option("--base", bench_cmd.base)->capture_default_str();
	bench_app->add_option("--reps", bench_cmd.reps)->capture_default_str()->check(CLI::PositiveNumber);
	bench_app->add_option("--out", bench_cmd.out, "CSV file, or JSON when the name ends in .json");
	bench_app->add_flag("--json", bench_cmd.json, "print records as JSON");

	std::string dump_variant = "divmod", dump_base = "5";
	auto* dump_app = app.add_subcommand("dump", "print a formula in term syntax");
	dump_app->add_option("--variant", dump_variant)->capture_default_str();
	dump_app->add_option("--base", dump_base)->capture_default_str();

	CLI11_PARSE(app, argc, argv);

	EvalOptions opts;
	opts.max_exponent_bits = max_exponent_bits;

	try {
		if (*eval_app)
			return eval_cmd.run(opts);
		if (*gcd_app)
			return gcd_cmd.run(opts);
		if (*verify_app)
			return verify_cmd.run(opts);
		if (*extract_app)
			return extract_cmd.run();
		if (*bench_app)
			return bench_cmd.run();
		if (*dump_app) {
			auto v = parse_variant(dump_variant);
			if (!v)
				throw InvalidInput("unknown variant '" + dump_variant + "'");
			std::cout << formula_dump(GcdFormula::make(*v, natural_arg(dump_base, "base")));
			if (*v != Variant::ModMod)
				std::cout << "\n";
			return ok;
		}
	} catch (const SyntaxError& e) {
		report_syntax_error(eval_cmd.expr, e);
		return syntax_error;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return eval_error;
	}
	return ok;
}
