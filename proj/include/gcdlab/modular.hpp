#pragma once

#include "gcdlab/bigint.hpp"
#include "gcdlab/errors.hpp"

#include <chrono>
#include <cstdint>
#include <string>

namespace gcdlab {

// Least nonnegative residue of x modulo y, for any sign of x. Requires y >= 1.
Integer mod_euclidean(const Integer& x, const Integer& y);

// base^exp mod modulus by left-to-right square-and-multiply. One squaring
// per bit of exp.
Natural fast_pow_mod(const Natural& base, const Natural& exp, const Natural& modulus);

/*
 * Instance of the identity
 *
 *     ((-A) mod B) mod C = 1 + (floor(A/B) mod C)
 *
 * which holds when A, B > 0, C >= 2, C | A, B does not divide A,
 * B mod C = 1 and floor(A/B) mod C != C - 1.
 */
struct ModIdentityInstance {
	Integer A;
	Integer B;
	Integer C;
};

enum class ModPrecondition {
	APositive,
	BPositive,
	CAtLeastTwo,
	CDividesA,
	BDoesNotDivideA,
	BModCIsOne,
	QuotientNotCMinusOne,
};

const char* describe(ModPrecondition p);

struct PreconditionViolated : Error {
	explicit PreconditionViolated(ModPrecondition p)
	    : Error(std::string("precondition violated: ") + describe(p)), which(p)
	{
	}
	ModPrecondition which;
};

// Throws PreconditionViolated naming the first failed hypothesis.
void check_preconditions(const ModIdentityInstance& inst);

struct ModIdentityResult {
	Integer lhs;
	Integer rhs;
	bool holds;
};

ModIdentityResult check_mod_identity(const ModIdentityInstance& inst);

// Deterministic generator of instances satisfying every precondition. After
// max_attempts rejections it falls back to (50, 6, 5).
ModIdentityInstance random_identity_instance(std::uint64_t seed, unsigned max_attempts = 64);

// ((-c^(ab(ab+a+b))) mod B) mod c^(ab) with B = (c^(a^2 b) - 1)(c^(a b^2) - 1),
// never materializing the large power.
Natural modmod_fast_residue(const Natural& a, const Natural& b, const Natural& c);

// modmod_fast_residue - 2; throws Underflow when the residue is below 2.
Natural modmod_fast_value(const Natural& a, const Natural& b, const Natural& c);

struct BenchRecord {
	Natural a;
	Natural b;
	Natural c;
	std::chrono::nanoseconds divmod_duration{};
	std::chrono::nanoseconds modmod_duration{};
	bool values_equal = false;
	std::size_t bit_length_of_A = 0;
	Natural divmod_value;
	Natural modmod_value;
};

// Median-of-repetitions timing of the div-mod term evaluation against the
// fast mod-mod path. Single-threaded.
BenchRecord bench_compare(const Natural& a, const Natural& b, const Natural& c, unsigned repetitions);

} // namespace gcdlab
