#pragma once

#include "gcdlab/bigint.hpp"
#include "gcdlab/term.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>

namespace gcdlab {

enum class Variant { Mazzanti, DivMod, ModMod };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

using GridPoint = std::pair<unsigned long, unsigned long>;

/*
 * A gcd formula together with the set of (a, b) where it is known to fail.
 * Bases 2..5 carry proven exception sets; for any other base of the
 * div-mod/mod-mod families the set is unknown and `exceptions` is empty.
 */
struct GcdFormula {
	Variant variant = Variant::DivMod;
	Natural base = 5;
	std::set<GridPoint> exceptions;
	bool exceptions_known = true;

	static GcdFormula mazzanti();
	static GcdFormula divmod(const Natural& c);
	static GcdFormula modmod(const Natural& c);
	static GcdFormula make(Variant v, const Natural& c);

	bool is_exception(unsigned long a, unsigned long b) const { return exceptions.count({a, b}) != 0; }
};

// floor((2^(a^2 b(b+1)) - 2^(a^2 b))(2^(a^2 b^2) - 1) /
//       ((2^(a^2 b) - 1)(2^(a b^2) - 1) 2^(a^2 b^2))) mod 2^(ab)
Term mazzanti_gcd_term();

// floor(c^(ab(ab+a+b)) / ((c^(a^2 b) - 1)(c^(a b^2) - 1))) mod c^(ab)
Term divmod_inner_term(const Natural& c);

// divmod_inner_term(c) - 1, truncated at zero.
Term divmod_gcd_term(const Natural& c);

// (((-c^(ab(ab+a+b))) mod B) mod c^(ab)) - 2, truncated at zero. Evaluated via
// modular exponentiation since the negated power has no term form.
Natural modmod_gcd_value(const Natural& a, const Natural& b, const Natural& c);

// Same quantity computed by materializing c^(ab(ab+a+b)) in full.
Natural modmod_direct_value(const Natural& a, const Natural& b, const Natural& c,
                            const EvalOptions& opts = {});

Natural euclid_gcd(Natural a, Natural b);

Natural gcd_via_formula(const GcdFormula& f, const Natural& a, const Natural& b,
                        const EvalOptions& opts = {});

// Parser-grammar text for term variants; an annotated recipe for mod-mod.
std::string formula_dump(const GcdFormula& f);

} // namespace gcdlab
