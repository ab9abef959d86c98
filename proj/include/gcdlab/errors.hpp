#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcdlab {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
	using Error::Error;
};

// term evaluation

struct UnboundVariable : Error {
	explicit UnboundVariable(std::string var)
	    : Error("unbound variable '" + var + "'"), name(std::move(var))
	{
	}
	std::string name;
};

struct DivisionByZero : Error {
	DivisionByZero() : Error("division by zero") {}
};

struct ExponentGuardExceeded : Error {
	ExponentGuardExceeded(std::size_t bits, unsigned limit)
	    : Error("exponent has " + std::to_string(bits) + " bits, guard allows at most " +
	            std::to_string(limit) + " (raise --max-exponent-bits)"),
	      exponent_bits(bits), max_bits(limit)
	{
	}
	std::size_t exponent_bits;
	unsigned max_bits;
};

// formulas

struct BaseTooSmall : Error {
	BaseTooSmall() : Error("formula base must be at least 2") {}
};

// series

struct ZeroDenominator : Error {
	ZeroDenominator() : Error("denominator vanishes at c^-n") {}
};

struct NegativeCoefficient : Error {
	explicit NegativeCoefficient(std::size_t at)
	    : Error("series coefficient s(" + std::to_string(at) + ") is negative"), index(at)
	{
	}
	std::size_t index;
};

struct NoValidRank : Error {
	explicit NoValidRank(std::size_t checked)
	    : Error("no rank m <= " + std::to_string(checked) + " satisfies s(n) < c^(n-2)"),
	      checked_to(checked)
	{
	}
	std::size_t checked_to;
};

// modular arithmetic

struct InvalidModulus : Error {
	InvalidModulus() : Error("modulus must be positive") {}
};

struct Underflow : Error {
	using Error::Error;
};

} // namespace gcdlab
