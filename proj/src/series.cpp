#include "gcdlab/series.hpp"

#include "gcdlab/errors.hpp"

namespace gcdlab {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
	while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
		coeffs_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text)
{
	std::vector<Integer> out;
	std::size_t pos = 0;
	while (true) {
		std::size_t comma = text.find(',', pos);
		std::string_view field = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
		while (!field.empty() && field.front() == ' ')
			field.remove_prefix(1);
		while (!field.empty() && field.back() == ' ')
			field.remove_suffix(1);
		Integer v;
		if (!parse_decimal(field, v))
			throw InvalidInput("bad polynomial coefficient '" + std::string(field) + "'");
		out.push_back(std::move(v));
		if (comma == std::string_view::npos)
			break;
		pos = comma + 1;
	}
	return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string s;
	for (std::size_t i = 0; i < coeffs_.size(); ++i) {
		if (i)
			s += ',';
		s += coeffs_[i].get_str();
	}
	return s;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
	if (p.is_zero() || q.is_zero())
		return {};
	std::vector<Integer> r(p.coeffs_.size() + q.coeffs_.size() - 1);
	for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
		for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
			r[i + j] += p.coeffs_[i] * q.coeffs_[j];
	return Polynomial(std::move(r));
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
	if (den_.is_zero())
		throw InvalidInput("denominator is the zero polynomial");
	if (sgn(den_[0]) == 0)
		throw InvalidInput("denominator vanishes at z = 0; no power series expansion");
	if (num_.degree() >= den_.degree())
		throw InvalidInput("improper fraction: deg(A) must be below deg(B)");
}

RationalFunction f_ab(unsigned long a, unsigned long b)
{
	if (a == 0 || b == 0)
		throw InvalidInput("a and b must be at least 1");
	auto binomial = [](unsigned long k) {
		std::vector<Integer> c(k + 1);
		c[0] = -1;
		c[k] = 1;
		return Polynomial(std::move(c));
	};
	RationalFunction f(Polynomial({1}), binomial(a) * binomial(b));
	f.family = {a, b};
	return f;
}

std::vector<Integer> series_coefficients(const RationalFunction& f, std::size_t count)
{
	const Polynomial& A = f.numerator();
	const Polynomial& B = f.denominator();
	std::size_t D = static_cast<std::size_t>(B.degree());
	std::vector<Integer> s(count);
	for (std::size_t n = 0; n < count; ++n) {
		Integer acc = A.coefficient(n);
		for (std::size_t i = 1; i <= D && i <= n; ++i)
			acc -= B[i] * s[n - i];
		if (!mpz_divisible_p(acc.get_mpz_t(), B[0].get_mpz_t()))
			throw InvalidInput("series coefficient s(" + std::to_string(n) + ") is not an integer");
		mpz_divexact(s[n].get_mpz_t(), acc.get_mpz_t(), B[0].get_mpz_t());
	}
	return s;
}

Natural count_solutions(unsigned long a, unsigned long b, unsigned long n)
{
	if (a == 0 || b == 0)
		throw InvalidInput("a and b must be at least 1");
	unsigned long count = 0;
	for (unsigned long x = 0; x <= n / a; ++x)
		if ((n - a * x) % b == 0)
			++count;
	return count;
}

namespace {

// c^(nD) * P(c^-n) = sum_i p_i c^(n(D - i))
Integer scaled_at_inverse_power(const Polynomial& p, const Natural& cn, std::size_t D)
{
	Integer acc = 0;
	// Horner from the constant term: acc = (..(p_0 * cn + p_1) * cn + ..) + p_D
	for (std::size_t i = 0; i <= D; ++i)
		acc = acc * cn + p.coefficient(i);
	return acc;
}

} // namespace

Natural extract_coefficient(const RationalFunction& f, const Natural& c, unsigned long n)
{
	if (n == 0)
		throw InvalidInput("extraction index n must be at least 1");
	if (c < 2)
		throw InvalidInput("base c must be at least 2");
	std::size_t D = static_cast<std::size_t>(f.denominator().degree());
	Natural cn;
	mpz_pow_ui(cn.get_mpz_t(), c.get_mpz_t(), n);
	Integer a_hat = scaled_at_inverse_power(f.numerator(), cn, D);
	Integer b_hat = scaled_at_inverse_power(f.denominator(), cn, D);
	if (sgn(b_hat) == 0)
		throw ZeroDenominator();
	Natural cn2;
	mpz_pow_ui(cn2.get_mpz_t(), cn.get_mpz_t(), n);
	Integer q;
	Integer scaled = cn2 * a_hat;
	mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), b_hat.get_mpz_t());
	Natural r;
	mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), cn.get_mpz_t());
	return r;
}

ExtractionParams check_extraction_conditions(const RationalFunction& f, const Natural& c, unsigned long n_max)
{
	if (c < 2)
		throw InvalidInput("base c must be at least 2");
	std::vector<Integer> s = series_coefficients(f, n_max + 1);
	for (std::size_t n = 0; n < s.size(); ++n)
		if (sgn(s[n]) < 0)
			throw NegativeCoefficient(n);

	// s(n) < c^(n-2)  <=>  s(n) * c^2 < c^n, valid also for n < 2.
	Natural c2 = c * c;
	Natural cn = 1;
	std::vector<bool> ok(s.size());
	for (std::size_t n = 0; n < s.size(); ++n) {
		ok[n] = s[n] * c2 < cn;
		cn *= c;
	}
	if (!ok[n_max])
		throw NoValidRank(n_max);
	unsigned long m = n_max;
	while (m > 0 && ok[m - 1])
		--m;

	ExtractionParams params;
	params.c = c;
	params.m = m;
	params.growth_margin_checked_to = n_max;
	params.radius = f.family ? RadiusStatus::Proven : RadiusStatus::Empirical;
	return params;
}

} // namespace gcdlab
