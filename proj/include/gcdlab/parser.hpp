#pragma once

#include "gcdlab/errors.hpp"
#include "gcdlab/term.hpp"

#include <string>
#include <string_view>

namespace gcdlab {

// Half-open byte range [start, end) into the parsed text.
struct SourceSpan {
	std::size_t start = 0;
	std::size_t end = 0;
};

struct SyntaxError : Error {
	SyntaxError(std::string msg, SourceSpan where);
	std::string message;
	SourceSpan span;
};

/*
 * Grammar, lowest to highest precedence:
 *
 *   sum     := product (('+' | '-') product)*
 *   product := power (('*' | '/' | '%') power)*
 *   power   := atom ('^' power)?
 *   atom    := DIGITS | IDENT | '(' sum ')'
 *
 * '-' is truncated subtraction. There are no unary operators.
 */
Term parse_term(std::string_view text);

// Minimal parentheses; parse_term(pretty_print(t)) == t.
std::string pretty_print(const Term& t);

} // namespace gcdlab
