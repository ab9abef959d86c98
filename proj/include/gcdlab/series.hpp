#pragma once

#include "gcdlab/bigint.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcdlab {

// Integer polynomial in z, coefficients lowest degree first. Trailing zeros
// are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
	Polynomial() = default;
	explicit Polynomial(std::vector<Integer> coefficients);

	// "1,-2,1" is 1 - 2z + z^2.
	static Polynomial parse(std::string_view text);
	std::string to_string() const;

	bool is_zero() const { return coeffs_.empty(); }
	// -1 for the zero polynomial.
	long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
	const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
	Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
	const std::vector<Integer>& coefficients() const { return coeffs_; }

	friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
	friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
	std::vector<Integer> coeffs_;
};

enum class RadiusStatus {
	Proven,      // poles known to lie on the unit circle
	Empirical,   // only the finite growth check backs the extraction
};

// Proper rational generating function A(z)/B(z) with B(0) != 0.
class RationalFunction {
public:
	RationalFunction(Polynomial numerator, Polynomial denominator);

	const Polynomial& numerator() const { return num_; }
	const Polynomial& denominator() const { return den_; }

	// Set for members of the 1/((z^a - 1)(z^b - 1)) family.
	std::optional<std::pair<unsigned long, unsigned long>> family;

private:
	Polynomial num_;
	Polynomial den_;
};

// 1 / ((z^a - 1)(z^b - 1))
RationalFunction f_ab(unsigned long a, unsigned long b);

// Taylor coefficients s(0..count-1) from the recurrence B * S = A. Throws
// InvalidInput if a coefficient is not integral.
std::vector<Integer> series_coefficients(const RationalFunction& f, std::size_t count);

// Number of (x, y) in N x N with ax + by = n.
Natural count_solutions(unsigned long a, unsigned long b, unsigned long n);

// floor(c^(n^2) f(c^-n)) mod c^n, in exact integer arithmetic.
Natural extract_coefficient(const RationalFunction& f, const Natural& c, unsigned long n);

struct ExtractionParams {
	Natural c;
	unsigned long m = 0;
	unsigned long growth_margin_checked_to = 0;
	RadiusStatus radius = RadiusStatus::Empirical;
};

// Finds the least m <= n_max with s(n) < c^(n-2) for every m <= n <= n_max.
ExtractionParams check_extraction_conditions(const RationalFunction& f, const Natural& c,
                                             unsigned long n_max);

} // namespace gcdlab
