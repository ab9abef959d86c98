#include "gcdlab/formula.hpp"

#include "gcdlab/errors.hpp"
#include "gcdlab/modular.hpp"
#include "gcdlab/parser.hpp"

namespace gcdlab {

const char* variant_name(Variant v)
{
	switch (v) {
	case Variant::Mazzanti: return "mazzanti";
	case Variant::DivMod: return "divmod";
	case Variant::ModMod: return "modmod";
	}
	return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
	if (name == "mazzanti")
		return Variant::Mazzanti;
	if (name == "divmod")
		return Variant::DivMod;
	if (name == "modmod")
		return Variant::ModMod;
	return std::nullopt;
}

namespace {

GcdFormula base_family(Variant v, const Natural& c)
{
	if (c < 2)
		throw BaseTooSmall();
	GcdFormula f;
	f.variant = v;
	f.base = c;
	if (c == 2 || c == 3 || c == 4)
		f.exceptions = {{1, 1}};
	else if (c != 5)
		f.exceptions_known = false;
	return f;
}

} // namespace

GcdFormula GcdFormula::mazzanti()
{
	GcdFormula f;
	f.variant = Variant::Mazzanti;
	f.base = 2;
	return f;
}

GcdFormula GcdFormula::divmod(const Natural& c) { return base_family(Variant::DivMod, c); }
GcdFormula GcdFormula::modmod(const Natural& c) { return base_family(Variant::ModMod, c); }

GcdFormula GcdFormula::make(Variant v, const Natural& c)
{
	switch (v) {
	case Variant::Mazzanti: return mazzanti();
	case Variant::DivMod: return divmod(c);
	case Variant::ModMod: return modmod(c);
	}
	throw InvalidInput("unknown variant");
}

Term mazzanti_gcd_term()
{
	Term a = var("a"), b = var("b"), two = num(2ul), one = num(1ul);
	Term a2b = mul(pow(a, two), b);                       // a^2*b
	Term a2b2 = mul(pow(a, two), pow(b, two));             // a^2*b^2
	Term ab2 = mul(a, pow(b, two));                        // a*b^2
	Term top_left = monus(pow(two, mul(a2b, add(b, one))), pow(two, a2b));
	Term top_right = monus(pow(two, a2b2), one);
	Term bottom = mul(mul(monus(pow(two, a2b), one), monus(pow(two, ab2), one)), pow(two, a2b2));
	return mod(fdiv(mul(top_left, top_right), bottom), pow(two, mul(a, b)));
}

Term divmod_inner_term(const Natural& c)
{
	if (c < 2)
		throw BaseTooSmall();
	Term a = var("a"), b = var("b"), base = num(c), one = num(1ul), two = num(2ul);
	Term ab = mul(a, b);
	Term numerator = pow(base, mul(ab, add(add(ab, a), b)));
	Term denominator = mul(monus(pow(base, mul(pow(a, two), b)), one), monus(pow(base, mul(a, pow(b, two))), one));
	return mod(fdiv(numerator, denominator), pow(base, ab));
}

Term divmod_gcd_term(const Natural& c) { return monus(divmod_inner_term(c), num(1ul)); }

namespace {

struct ModModParts {
	Natural exponent;   // ab(ab+a+b)
	Natural modulus;    // (c^(a^2 b) - 1)(c^(a b^2) - 1)
	Natural outer;      // c^(ab)
};

unsigned long small(const Natural& x, const char* what)
{
	if (!x.fits_ulong_p())
		throw InvalidInput(std::string(what) + " is too large");
	return x.get_ui();
}

ModModParts modmod_parts(const Natural& a, const Natural& b, const Natural& c)
{
	if (a < 1 || b < 1)
		throw InvalidInput("a and b must be at least 1");
	if (c < 2)
		throw BaseTooSmall();
	Natural ab = a * b;
	Natural p1, p2, outer;
	mpz_pow_ui(p1.get_mpz_t(), c.get_mpz_t(), small(a * ab, "a^2 b"));
	mpz_pow_ui(p2.get_mpz_t(), c.get_mpz_t(), small(ab * b, "a b^2"));
	mpz_pow_ui(outer.get_mpz_t(), c.get_mpz_t(), small(ab, "ab"));
	return {ab * (ab + a + b), (p1 - 1) * (p2 - 1), outer};
}

Natural minus_two(const Natural& residue) { return residue > 2 ? Natural(residue - 2) : Natural(0); }

} // namespace

Natural modmod_gcd_value(const Natural& a, const Natural& b, const Natural& c)
{
	ModModParts p = modmod_parts(a, b, c);
	Natural power = fast_pow_mod(c, p.exponent, p.modulus);
	Natural residue = mod_euclidean(mod_euclidean(-power, p.modulus), p.outer);
	return minus_two(residue);
}

Natural modmod_direct_value(const Natural& a, const Natural& b, const Natural& c, const EvalOptions& opts)
{
	ModModParts p = modmod_parts(a, b, c);
	std::size_t bits = bit_length(p.exponent);
	if (bits > opts.max_exponent_bits)
		throw ExponentGuardExceeded(bits, opts.max_exponent_bits);
	Natural full;
	mpz_pow_ui(full.get_mpz_t(), c.get_mpz_t(), p.exponent.get_ui());
	Natural residue = mod_euclidean(mod_euclidean(-full, p.modulus), p.outer);
	return minus_two(residue);
}

Natural euclid_gcd(Natural a, Natural b)
{
	if (sgn(a) <= 0 || sgn(b) <= 0)
		throw InvalidInput("gcd arguments must be at least 1");
	while (sgn(b) != 0) {
		Natural r = a % b;
		a = std::move(b);
		b = std::move(r);
	}
	return a;
}

Natural gcd_via_formula(const GcdFormula& f, const Natural& a, const Natural& b, const EvalOptions& opts)
{
	if (a < 1 || b < 1)
		throw InvalidInput("a and b must be at least 1");
	switch (f.variant) {
	case Variant::ModMod:
		return modmod_gcd_value(a, b, f.base);
	case Variant::Mazzanti:
		return eval(mazzanti_gcd_term(), Env{{"a", a}, {"b", b}}, opts);
	case Variant::DivMod:
		return eval(divmod_gcd_term(f.base), Env{{"a", a}, {"b", b}}, opts);
	}
	throw InvalidInput("unknown variant");
}

std::string formula_dump(const GcdFormula& f)
{
	switch (f.variant) {
	case Variant::Mazzanti:
		return pretty_print(mazzanti_gcd_term());
	case Variant::DivMod:
		return pretty_print(divmod_gcd_term(f.base));
	case Variant::ModMod: {
		std::string c = f.base.get_str();
		return "# not a term: the first stage reduces a negated power\n"
		       "A = " + c + "^(a*b*(a*b + a + b))\n"
		       "B = (" + c + "^(a^2*b) - 1)*(" + c + "^(a*b^2) - 1)\n"
		       "C = " + c + "^(a*b)\n"
		       "gcd = (((-A) mod B) mod C) - 2\n";
	}
	}
	return {};
}

} // namespace gcdlab
