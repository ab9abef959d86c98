#include "gcdlab/modular.hpp"

#include "gcdlab/formula.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace gcdlab {

Integer mod_euclidean(const Integer& x, const Integer& y)
{
	if (sgn(y) <= 0)
		throw InvalidModulus();
	Integer r;
	mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
	return r;
}

Natural fast_pow_mod(const Natural& base, const Natural& exp, const Natural& modulus)
{
	if (sgn(modulus) <= 0)
		throw InvalidModulus();
	if (modulus == 1)
		return 0;
	Natural b = mod_euclidean(base, modulus);
	Natural result = 1;
	for (std::size_t i = bit_length(exp); i-- > 0;) {
		result = result * result % modulus;
		if (mpz_tstbit(exp.get_mpz_t(), i))
			result = result * b % modulus;
	}
	return result;
}

const char* describe(ModPrecondition p)
{
	switch (p) {
	case ModPrecondition::APositive: return "A > 0";
	case ModPrecondition::BPositive: return "B > 0";
	case ModPrecondition::CAtLeastTwo: return "C >= 2";
	case ModPrecondition::CDividesA: return "C divides A";
	case ModPrecondition::BDoesNotDivideA: return "B does not divide A";
	case ModPrecondition::BModCIsOne: return "B mod C = 1";
	case ModPrecondition::QuotientNotCMinusOne: return "floor(A/B) mod C != C - 1";
	}
	return "?";
}

void check_preconditions(const ModIdentityInstance& inst)
{
	auto require = [](bool ok, ModPrecondition p) {
		if (!ok)
			throw PreconditionViolated(p);
	};
	require(sgn(inst.A) > 0, ModPrecondition::APositive);
	require(sgn(inst.B) > 0, ModPrecondition::BPositive);
	require(inst.C >= 2, ModPrecondition::CAtLeastTwo);
	require(mpz_divisible_p(inst.A.get_mpz_t(), inst.C.get_mpz_t()), ModPrecondition::CDividesA);
	require(!mpz_divisible_p(inst.A.get_mpz_t(), inst.B.get_mpz_t()), ModPrecondition::BDoesNotDivideA);
	require(mod_euclidean(inst.B, inst.C) == 1, ModPrecondition::BModCIsOne);
	Integer q = inst.A / inst.B;
	require(mod_euclidean(q, inst.C) != inst.C - 1, ModPrecondition::QuotientNotCMinusOne);
}

ModIdentityResult check_mod_identity(const ModIdentityInstance& inst)
{
	check_preconditions(inst);
	Integer lhs = mod_euclidean(mod_euclidean(-inst.A, inst.B), inst.C);
	Integer q;
	mpz_fdiv_q(q.get_mpz_t(), inst.A.get_mpz_t(), inst.B.get_mpz_t());
	Integer rhs = 1 + mod_euclidean(q, inst.C);
	bool holds = lhs == rhs;
	return {std::move(lhs), std::move(rhs), holds};
}

ModIdentityInstance random_identity_instance(std::uint64_t seed, unsigned max_attempts)
{
	std::mt19937_64 rng(seed);
	auto pick = [&rng](unsigned long lo, unsigned long hi) {
		return std::uniform_int_distribution<unsigned long>(lo, hi)(rng);
	};
	for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
		// Mix small and multi-limb operands.
		bool wide = pick(0, 3) == 0;
		Integer C = wide ? Integer(pick(2, 1ul << 40)) : Integer(pick(2, 60));
		Integer k = wide ? Integer(pick(1, 1ul << 40)) : Integer(pick(1, 60));
		Integer B = k * C + 1;
		Integer j = Integer(pick(1, 1ul << 20));
		if (wide)
			j = j * Integer(pick(1, 1ul << 50)) + pick(0, 1000);
		Integer A = C * j;
		if (mpz_divisible_p(A.get_mpz_t(), B.get_mpz_t()))
			continue;
		if ((A / B) % C == C - 1)
			continue;
		return {std::move(A), std::move(B), std::move(C)};
	}
	return {50, 6, 5};
}

Natural modmod_fast_residue(const Natural& a, const Natural& b, const Natural& c)
{
	if (a < 1 || b < 1)
		throw InvalidInput("a and b must be at least 1");
	if (c < 2)
		throw BaseTooSmall();
	Natural ab = a * b;
	if (!ab.fits_ulong_p() || !Natural(ab * a).fits_ulong_p() || !Natural(ab * b).fits_ulong_p())
		throw InvalidInput("a and b are too large");
	Natural p1, p2, outer;
	mpz_pow_ui(p1.get_mpz_t(), c.get_mpz_t(), Natural(ab * a).get_ui());
	mpz_pow_ui(p2.get_mpz_t(), c.get_mpz_t(), Natural(ab * b).get_ui());
	mpz_pow_ui(outer.get_mpz_t(), c.get_mpz_t(), ab.get_ui());
	Natural modulus = (p1 - 1) * (p2 - 1);
	Natural r = fast_pow_mod(c, ab * (ab + a + b), modulus);
	return mod_euclidean(mod_euclidean(-r, modulus), outer);
}

Natural modmod_fast_value(const Natural& a, const Natural& b, const Natural& c)
{
	Natural residue = modmod_fast_residue(a, b, c);
	if (residue < 2)
		throw Underflow("mod-mod residue " + residue.get_str() + " is below 2 at (a,b) = (" + a.get_str() +
		                "," + b.get_str() + "), base " + c.get_str());
	return residue - 2;
}

namespace {

std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> samples)
{
	std::sort(samples.begin(), samples.end());
	std::size_t n = samples.size();
	if (n % 2 == 1)
		return samples[n / 2];
	return (samples[n / 2 - 1] + samples[n / 2]) / 2;
}

} // namespace

BenchRecord bench_compare(const Natural& a, const Natural& b, const Natural& c, unsigned repetitions)
{
	if (repetitions < 1)
		throw InvalidInput("repetitions must be at least 1");
	using clock = std::chrono::steady_clock;

	BenchRecord rec;
	rec.a = a;
	rec.b = b;
	rec.c = c;
	Natural ab = a * b;
	Natural exponent = ab * (ab + a + b);
	Term divmod = substitute(divmod_gcd_term(c), Env{{"a", a}, {"b", b}});
	EvalOptions opts;
	opts.max_exponent_bits = 62;

	std::vector<std::chrono::nanoseconds> dm, mm;
	for (unsigned i = 0; i < repetitions; ++i) {
		auto t0 = clock::now();
		rec.divmod_value = eval(divmod, {}, opts);
		auto t1 = clock::now();
		rec.modmod_value = modmod_fast_value(a, b, c);
		auto t2 = clock::now();
		dm.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0));
		mm.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1));
	}
	rec.divmod_duration = median(std::move(dm));
	rec.modmod_duration = median(std::move(mm));
	rec.values_equal = rec.divmod_value == rec.modmod_value;

	Natural A;
	mpz_pow_ui(A.get_mpz_t(), c.get_mpz_t(), exponent.get_ui());
	rec.bit_length_of_A = bit_length(A);
	return rec;
}

} // namespace gcdlab
