#pragma once

#include "gcdlab/bigint.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>

namespace gcdlab {

class Term;

enum class BinaryOp {
	Add,
	Monus,    // truncated difference: max(l - r, 0)
	Mul,
	FloorDiv,
	Pow,
	Mod,      // sugar for l - r*(l/r); not part of the core language
};

const char* op_symbol(BinaryOp op);

struct Const {
	Natural value;
};

struct Var {
	std::string name;
};

struct Binary {
	BinaryOp op;
	std::shared_ptr<const Term> lhs;
	std::shared_ptr<const Term> rhs;
};

/*
 * Immutable arithmetic term over the naturals. Copies share structure, so
 * passing a Term by value is cheap and concurrent reads are safe.
 */
class Term {
public:
	using Node = std::variant<Const, Var, Binary>;

	Term(Const c);
	Term(Var v);
	Term(BinaryOp op, Term lhs, Term rhs);

	const Node& node() const { return *node_; }

	const Const* as_const() const { return std::get_if<Const>(node_.get()); }
	const Var* as_var() const { return std::get_if<Var>(node_.get()); }
	const Binary* as_binary() const { return std::get_if<Binary>(node_.get()); }

	bool is_closed() const;
	bool is_pure() const;   // contains no Mod nodes
	std::size_t depth() const;

	friend bool operator==(const Term& a, const Term& b);

private:
	std::shared_ptr<const Node> node_;
};

using Env = std::map<std::string, Natural, std::less<>>;

struct EvalOptions {
	// Pow with an exponent wider than this many bits is refused. Bases 0
	// and 1 are exempt since their powers stay small.
	unsigned max_exponent_bits = 26;
};

Natural eval(const Term& t, const Env& env = {}, const EvalOptions& opts = {});

Term substitute(const Term& t, const Env& env);

// Rewrites every Mod node as l - r*(l/r).
Term desugar_mod(const Term& t);

// Builders.
Term num(Natural v);
Term num(unsigned long v);
Term var(std::string name);
Term add(Term l, Term r);
Term monus(Term l, Term r);
Term mul(Term l, Term r);
Term fdiv(Term l, Term r);
Term pow(Term base, Term exp);
Term mod(Term l, Term r);

} // namespace gcdlab
