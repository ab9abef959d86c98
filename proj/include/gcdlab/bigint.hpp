#pragma once

#include <gmpxx.h>

#include <string>

namespace gcdlab {

// Exact integers backed by GMP. Natural is a semantic alias: values produced
// under that name are never negative.
using Integer = mpz_class;
using Natural = mpz_class;

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

inline std::size_t bit_length(const Integer& x)
{
	return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Parses an optionally signed decimal literal. Returns false on malformed input.
bool parse_decimal(std::string_view text, Integer& out);

} // namespace gcdlab
