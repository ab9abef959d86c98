#include "gcdlab/errors.hpp"
#include "gcdlab/formula.hpp"
#include "gcdlab/modular.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gcdlab;

TEST(ModEuclidean, Examples)
{
	EXPECT_EQ(mod_euclidean(-50, 6), 4);
	EXPECT_EQ(mod_euclidean(125, 16), 13);
	EXPECT_EQ(mod_euclidean(0, 7), 0);
	EXPECT_EQ(mod_euclidean(-6, 6), 0);
	EXPECT_THROW(mod_euclidean(5, 0), InvalidModulus);
	EXPECT_THROW(mod_euclidean(5, -3), InvalidModulus);
}

TEST(ModEuclidean, RangeAndCongruence)
{
	std::mt19937_64 rng(5);
	std::uniform_int_distribution<long> dx(-1000000, 1000000), dy(1, 5000);
	for (int i = 0; i < 5000; ++i) {
		Integer x = dx(rng), y = dy(rng);
		Integer r = mod_euclidean(x, y);
		ASSERT_GE(r, 0);
		ASSERT_LT(r, y);
		ASSERT_EQ(Integer(x - r) % y, 0);
		ASSERT_EQ(r, oracle::residue(x, y));
	}
}

TEST(FastPowMod, Examples)
{
	EXPECT_EQ(fast_pow_mod(5, 3, 7), 6);
	EXPECT_EQ(fast_pow_mod(2, 10, 1000), 24);
	EXPECT_EQ(fast_pow_mod(0, 0, 7), 1);
	EXPECT_EQ(fast_pow_mod(9, 0, 2), 1);
	EXPECT_EQ(fast_pow_mod(9, 5, 1), 0);
	EXPECT_THROW(fast_pow_mod(2, 3, 0), InvalidModulus);
}

TEST(FastPowMod, MatchesNaiveMultiplication)
{
	std::mt19937_64 rng(6);
	std::uniform_int_distribution<unsigned long> dm(1, 1000000);
	for (unsigned long base = 0; base <= 20; ++base)
		for (unsigned long exp = 0; exp <= 64; ++exp)
			for (int k = 0; k < 4; ++k) {
				unsigned long m = dm(rng);
				ASSERT_EQ(fast_pow_mod(base, exp, m), oracle::naive_pow_mod(base, exp, m))
				    << base << "^" << exp << " mod " << m;
			}
}

TEST(FastPowMod, LargeOperands)
{
	Natural m = oracle::naive_pow(7, 300) - 4;
	Natural expected = oracle::naive_pow(3, 777) % m;
	EXPECT_EQ(fast_pow_mod(3, 777, m), expected);
}

TEST(ModIdentity, Examples)
{
	auto r = check_mod_identity({50, 6, 5});
	EXPECT_EQ(r.lhs, 4);
	EXPECT_EQ(r.rhs, 4);
	EXPECT_TRUE(r.holds);

	r = check_mod_identity({125, 16, 5});
	EXPECT_EQ(r.lhs, 3);
	EXPECT_EQ(r.rhs, 3);
	EXPECT_TRUE(r.holds);
}

TEST(ModIdentity, PreconditionViolationsAreErrors)
{
	struct Case {
		ModIdentityInstance inst;
		ModPrecondition which;
	};
	const Case cases[] = {
	    {{50, 7, 5}, ModPrecondition::BModCIsOne},
	    {{51, 6, 5}, ModPrecondition::CDividesA},
	    {{60, 6, 5}, ModPrecondition::BDoesNotDivideA},
	    {{25, 6, 5}, ModPrecondition::QuotientNotCMinusOne},
	    {{0, 6, 5}, ModPrecondition::APositive},
	    {{50, -6, 5}, ModPrecondition::BPositive},
	    {{50, 7, 1}, ModPrecondition::CAtLeastTwo},
	};
	for (const auto& c : cases) {
		try {
			check_mod_identity(c.inst);
			ADD_FAILURE() << "no error for " << describe(c.which);
		} catch (const PreconditionViolated& e) {
			EXPECT_EQ(e.which, c.which) << e.what();
		}
	}
}

TEST(ModIdentity, LawOnGeneratedInstances)
{
	for (std::uint64_t seed = 0; seed < 2000; ++seed) {
		ModIdentityInstance inst = random_identity_instance(seed);
		ASSERT_NO_THROW(check_preconditions(inst)) << seed;
		auto r = check_mod_identity(inst);
		ASSERT_TRUE(r.holds) << "seed " << seed << ": " << r.lhs.get_str() << " vs " << r.rhs.get_str();
	}
}

TEST(RandomInstance, DeterministicAndFallback)
{
	auto x = random_identity_instance(42);
	auto y = random_identity_instance(42);
	EXPECT_EQ(x.A, y.A);
	EXPECT_EQ(x.B, y.B);
	EXPECT_EQ(x.C, y.C);
	auto fb = random_identity_instance(42, 0);
	EXPECT_EQ(fb.A, 50);
	EXPECT_EQ(fb.B, 6);
	EXPECT_EQ(fb.C, 5);
	EXPECT_TRUE(check_mod_identity(fb).holds);
}

TEST(ModIdentity, NegatedFloorStep)
{
	// -floor(-A/B) = floor(A/B) + 1 whenever B does not divide A
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<long> d(1, 1000000);
	int checked = 0;
	for (int i = 0; i < 5000; ++i) {
		Integer A = d(rng), B = d(rng) % 1000 + 1;
		if (A % B == 0)
			continue;
		Integer neg_floor, pos_floor;
		Integer minus_a = -A;
		mpz_fdiv_q(neg_floor.get_mpz_t(), minus_a.get_mpz_t(), B.get_mpz_t());
		pos_floor = A / B;
		ASSERT_EQ(-neg_floor, pos_floor + 1);
		++checked;
	}
	EXPECT_GT(checked, 4000);
}

TEST(ModModFast, Examples)
{
	EXPECT_EQ(modmod_fast_value(1, 1, 5), 1);
	EXPECT_EQ(modmod_fast_value(9, 12, 5), 3);
	EXPECT_EQ(modmod_fast_value(10, 10, 5), 10);
	EXPECT_THROW(modmod_fast_value(1, 1, 3), Underflow);
	EXPECT_THROW(modmod_fast_value(1, 1, 1), BaseTooSmall);
}

TEST(ModModFast, PathEquality)
{
	for (unsigned long a = 1; a <= 12; ++a)
		for (unsigned long b = 1; b <= 12; ++b) {
			Natural fast = modmod_fast_value(a, b, 5);
			EXPECT_EQ(fast, modmod_gcd_value(a, b, 5));
			EXPECT_EQ(fast, euclid_gcd(a, b));
		}
}

TEST(ModModFast, ResidueMatchesClosedForm)
{
	for (unsigned long c : {2ul, 3ul, 4ul, 5ul, 9ul})
		for (unsigned long a = 1; a <= 4; ++a)
			for (unsigned long b = 1; b <= 4; ++b)
				EXPECT_EQ(modmod_fast_residue(a, b, c), oracle::modmod_residue(a, b, c));
}

TEST(Bench, SmallPairsAgree)
{
	auto r = bench_compare(4, 6, 5, 3);
	EXPECT_TRUE(r.values_equal);
	EXPECT_EQ(r.divmod_value, 2);
	EXPECT_EQ(r.modmod_value, 2);
	EXPECT_EQ(r.bit_length_of_A, bit_length(oracle::naive_pow(5, 24 * 34)));

	r = bench_compare(1, 1, 5, 1);
	EXPECT_TRUE(r.values_equal);
	EXPECT_EQ(r.divmod_value, 1);
	EXPECT_EQ(r.bit_length_of_A, 7u);   // 125
	EXPECT_THROW(bench_compare(1, 1, 5, 0), InvalidInput);
}
