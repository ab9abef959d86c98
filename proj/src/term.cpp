#include "gcdlab/term.hpp"

#include "gcdlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace gcdlab {

bool parse_decimal(std::string_view text, Integer& out)
{
	std::size_t i = 0;
	bool negative = false;
	if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
		negative = text[0] == '-';
		i = 1;
	}
	if (i == text.size())
		return false;
	for (std::size_t k = i; k < text.size(); ++k)
		if (!std::isdigit(static_cast<unsigned char>(text[k])))
			return false;
	out.set_str(std::string(text.substr(i)), 10);
	if (negative)
		out = -out;
	return true;
}

const char* op_symbol(BinaryOp op)
{
	switch (op) {
	case BinaryOp::Add: return "+";
	case BinaryOp::Monus: return "-";
	case BinaryOp::Mul: return "*";
	case BinaryOp::FloorDiv: return "/";
	case BinaryOp::Pow: return "^";
	case BinaryOp::Mod: return "%";
	}
	return "?";
}

Term::Term(Const c) : node_(std::make_shared<const Node>(std::move(c)))
{
	if (sgn(std::get<Const>(*node_).value) < 0)
		throw InvalidInput("term constants must be natural numbers");
}

Term::Term(Var v)
{
	if (v.name.empty())
		throw InvalidInput("variable name must be nonempty");
	node_ = std::make_shared<const Node>(std::move(v));
}

Term::Term(BinaryOp op, Term lhs, Term rhs)
    : node_(std::make_shared<const Node>(Binary{op, std::make_shared<const Term>(std::move(lhs)),
                                                std::make_shared<const Term>(std::move(rhs))}))
{
}

bool Term::is_closed() const
{
	if (as_var())
		return false;
	if (auto b = as_binary())
		return b->lhs->is_closed() && b->rhs->is_closed();
	return true;
}

bool Term::is_pure() const
{
	if (auto b = as_binary())
		return b->op != BinaryOp::Mod && b->lhs->is_pure() && b->rhs->is_pure();
	return true;
}

std::size_t Term::depth() const
{
	if (auto b = as_binary())
		return 1 + std::max(b->lhs->depth(), b->rhs->depth());
	return 1;
}

bool operator==(const Term& a, const Term& b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.node_->index() != b.node_->index())
		return false;
	if (auto ca = a.as_const())
		return ca->value == b.as_const()->value;
	if (auto va = a.as_var())
		return va->name == b.as_var()->name;
	auto ba = a.as_binary();
	auto bb = b.as_binary();
	return ba->op == bb->op && *ba->lhs == *bb->lhs && *ba->rhs == *bb->rhs;
}

namespace {

Natural power(const Natural& base, const Natural& exp, const EvalOptions& opts)
{
	if (sgn(exp) == 0)
		return 1;   // includes 0^0
	if (base == 0 || base == 1)
		return base;
	std::size_t bits = bit_length(exp);
	unsigned limit = std::min<unsigned>(opts.max_exponent_bits, sizeof(unsigned long) * CHAR_BIT - 1);
	if (bits > limit)
		throw ExponentGuardExceeded(bits, opts.max_exponent_bits);
	Natural r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
	return r;
}

Natural apply(BinaryOp op, const Natural& l, const Natural& r, const EvalOptions& opts)
{
	switch (op) {
	case BinaryOp::Add:
		return l + r;
	case BinaryOp::Monus:
		return l > r ? Natural(l - r) : Natural(0);
	case BinaryOp::Mul:
		return l * r;
	case BinaryOp::FloorDiv:
	case BinaryOp::Mod: {
		if (sgn(r) == 0)
			throw DivisionByZero();
		Natural out;
		if (op == BinaryOp::FloorDiv)
			mpz_fdiv_q(out.get_mpz_t(), l.get_mpz_t(), r.get_mpz_t());
		else
			mpz_fdiv_r(out.get_mpz_t(), l.get_mpz_t(), r.get_mpz_t());
		return out;
	}
	case BinaryOp::Pow:
		return power(l, r, opts);
	}
	throw Error("unknown operator");
}

} // namespace

Natural eval(const Term& t, const Env& env, const EvalOptions& opts)
{
	if (auto c = t.as_const())
		return c->value;
	if (auto v = t.as_var()) {
		auto it = env.find(v->name);
		if (it == env.end())
			throw UnboundVariable(v->name);
		return it->second;
	}
	auto b = t.as_binary();
	Natural l = eval(*b->lhs, env, opts);
	Natural r = eval(*b->rhs, env, opts);
	return apply(b->op, l, r, opts);
}

Term substitute(const Term& t, const Env& env)
{
	if (auto v = t.as_var()) {
		auto it = env.find(v->name);
		return it == env.end() ? t : Term(Const{it->second});
	}
	if (auto b = t.as_binary())
		return Term(b->op, substitute(*b->lhs, env), substitute(*b->rhs, env));
	return t;
}

Term desugar_mod(const Term& t)
{
	auto b = t.as_binary();
	if (!b)
		return t;
	Term l = desugar_mod(*b->lhs);
	Term r = desugar_mod(*b->rhs);
	if (b->op == BinaryOp::Mod)
		return monus(l, mul(r, fdiv(l, r)));
	return Term(b->op, std::move(l), std::move(r));
}

Term num(Natural v) { return Term(Const{std::move(v)}); }
Term num(unsigned long v) { return Term(Const{Natural(v)}); }
Term var(std::string name) { return Term(Var{std::move(name)}); }
Term add(Term l, Term r) { return Term(BinaryOp::Add, std::move(l), std::move(r)); }
Term monus(Term l, Term r) { return Term(BinaryOp::Monus, std::move(l), std::move(r)); }
Term mul(Term l, Term r) { return Term(BinaryOp::Mul, std::move(l), std::move(r)); }
Term fdiv(Term l, Term r) { return Term(BinaryOp::FloorDiv, std::move(l), std::move(r)); }
Term pow(Term base, Term exp) { return Term(BinaryOp::Pow, std::move(base), std::move(exp)); }
Term mod(Term l, Term r) { return Term(BinaryOp::Mod, std::move(l), std::move(r)); }

} // namespace gcdlab
