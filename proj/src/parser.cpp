#include "gcdlab/parser.hpp"

#include <cctype>
#include <optional>

namespace gcdlab {

SyntaxError::SyntaxError(std::string msg, SourceSpan where)
    : Error("syntax error at " + std::to_string(where.start) + ".." + std::to_string(where.end) + ": " +
            msg),
      message(std::move(msg)), span(where)
{
}

namespace {

enum class Tok { Number, Ident, Op, LParen, RParen, End };

struct Token {
	Tok kind;
	std::string_view text;
	SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
	explicit Lexer(std::string_view text) : text_(text) {}

	Token next()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		std::size_t start = pos_;
		if (pos_ == text_.size())
			return {Tok::End, {}, {start, start}};
		char c = text_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c))) {
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
				++pos_;
			return make(Tok::Number, start);
		}
		if (ident_start(c)) {
			while (pos_ < text_.size() && ident_char(text_[pos_]))
				++pos_;
			return make(Tok::Ident, start);
		}
		++pos_;
		switch (c) {
		case '+': case '-': case '*': case '/': case '%': case '^':
			return make(Tok::Op, start);
		case '(':
			return make(Tok::LParen, start);
		case ')':
			return make(Tok::RParen, start);
		}
		throw SyntaxError(std::string("unexpected character '") + c + "'", {start, pos_});
	}

private:
	Token make(Tok kind, std::size_t start)
	{
		return {kind, text_.substr(start, pos_ - start), {start, pos_}};
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

class Parser {
public:
	explicit Parser(std::string_view text) : lex_(text), size_(text.size()) { advance(); }

	Term parse()
	{
		if (cur_.kind == Tok::End)
			throw SyntaxError("empty input", {0, size_});
		Term t = sum();
		if (cur_.kind == Tok::RParen)
			throw SyntaxError("unbalanced ')'", cur_.span);
		if (cur_.kind != Tok::End)
			throw SyntaxError("unexpected token '" + std::string(cur_.text) + "'", cur_.span);
		return t;
	}

private:
	void advance() { cur_ = lex_.next(); }

	std::optional<BinaryOp> peek_op(std::string_view ops)
	{
		if (cur_.kind != Tok::Op || ops.find(cur_.text[0]) == std::string_view::npos)
			return std::nullopt;
		switch (cur_.text[0]) {
		case '+': return BinaryOp::Add;
		case '-': return BinaryOp::Monus;
		case '*': return BinaryOp::Mul;
		case '/': return BinaryOp::FloorDiv;
		case '%': return BinaryOp::Mod;
		default: return BinaryOp::Pow;
		}
	}

	Term sum()
	{
		Term t = product();
		while (auto op = peek_op("+-")) {
			advance();
			t = Term(*op, std::move(t), product());
		}
		return t;
	}

	Term product()
	{
		Term t = power();
		while (auto op = peek_op("*/%")) {
			advance();
			t = Term(*op, std::move(t), power());
		}
		return t;
	}

	Term power()
	{
		Term base = atom();
		if (peek_op("^")) {
			advance();
			return pow(std::move(base), power());
		}
		return base;
	}

	Term atom()
	{
		Token t = cur_;
		switch (t.kind) {
		case Tok::Number: {
			advance();
			return num(Natural(std::string(t.text), 10));
		}
		case Tok::Ident:
			advance();
			return var(std::string(t.text));
		case Tok::LParen: {
			advance();
			if (cur_.kind == Tok::RParen)
				throw SyntaxError("empty parentheses", {t.span.start, cur_.span.end});
			Term inner = sum();
			if (cur_.kind != Tok::RParen)
				throw SyntaxError("unbalanced '(': missing ')'", {t.span.start, cur_.span.end});
			advance();
			return inner;
		}
		case Tok::RParen:
			throw SyntaxError("unbalanced ')'", t.span);
		case Tok::End:
			throw SyntaxError("unexpected end of input", t.span);
		case Tok::Op:
			break;
		}
		throw SyntaxError("unexpected operator '" + std::string(t.text) + "'", t.span);
	}

	Lexer lex_;
	std::size_t size_;
	Token cur_{};
};

int precedence(BinaryOp op)
{
	switch (op) {
	case BinaryOp::Add:
	case BinaryOp::Monus:
		return 1;
	case BinaryOp::Mul:
	case BinaryOp::FloorDiv:
	case BinaryOp::Mod:
		return 2;
	case BinaryOp::Pow:
		return 3;
	}
	return 0;
}

constexpr int atom_precedence = 4;

int precedence(const Term& t)
{
	auto b = t.as_binary();
	return b ? precedence(b->op) : atom_precedence;
}

void print(const Term& t, std::string& out)
{
	if (auto c = t.as_const()) {
		out += c->value.get_str();
		return;
	}
	if (auto v = t.as_var()) {
		out += v->name;
		return;
	}
	auto b = t.as_binary();
	int p = precedence(b->op);
	bool right_assoc = b->op == BinaryOp::Pow;
	bool paren_l = right_assoc ? precedence(*b->lhs) <= p : precedence(*b->lhs) < p;
	bool paren_r = right_assoc ? precedence(*b->rhs) < p : precedence(*b->rhs) <= p;

	auto sub = [&](const Term& child, bool paren) {
		if (paren)
			out += '(';
		print(child, out);
		if (paren)
			out += ')';
	};
	sub(*b->lhs, paren_l);
	if (p == 1) {
		out += ' ';
		out += op_symbol(b->op);
		out += ' ';
	} else {
		out += op_symbol(b->op);
	}
	sub(*b->rhs, paren_r);
}

} // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

std::string pretty_print(const Term& t)
{
	std::string out;
	print(t, out);
	return out;
}

} // namespace gcdlab
