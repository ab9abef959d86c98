#include "gcdlab/errors.hpp"
#include "gcdlab/parser.hpp"
#include "gcdlab/term.hpp"

#include "term_gen.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gcdlab;

TEST(Eval, Monus)
{
	EXPECT_EQ(eval(monus(num(5ul), num(7ul))), 0);
	EXPECT_EQ(eval(monus(num(7ul), num(5ul))), 2);
	EXPECT_EQ(eval(monus(num(7ul), num(7ul))), 0);
}

TEST(Eval, FloorDivAndMod)
{
	EXPECT_EQ(eval(fdiv(num(10ul), num(3ul))), 3);
	EXPECT_EQ(eval(mod(num(125ul), num(16ul))), 13);
	EXPECT_EQ(eval(fdiv(num(0ul), num(3ul))), 0);
}

TEST(Eval, ZeroToTheZeroIsOne)
{
	EXPECT_EQ(eval(pow(num(0ul), num(0ul))), 1);
	EXPECT_EQ(eval(pow(num(0ul), num(3ul))), 0);
}

TEST(Eval, DivisionByZeroIsAnError)
{
	EXPECT_THROW(eval(fdiv(num(1ul), num(0ul))), DivisionByZero);
	EXPECT_THROW(eval(mod(num(1ul), num(0ul))), DivisionByZero);
	EXPECT_THROW(eval(fdiv(num(1ul), monus(num(2ul), num(3ul)))), DivisionByZero);
}

TEST(Eval, UnboundVariable)
{
	try {
		eval(add(var("a"), var("b")), Env{{"a", 1}});
		FAIL() << "expected UnboundVariable";
	} catch (const UnboundVariable& e) {
		EXPECT_EQ(e.name, "b");
	}
}

TEST(Eval, NoOverflowOnLargeValues)
{
	Natural big = eval(pow(num(7ul), num(1000ul)));
	EXPECT_EQ(bit_length(big), 2808u);
	EXPECT_EQ(eval(monus(pow(num(2ul), num(200ul)), pow(num(2ul), num(199ul)))), eval(pow(num(2ul), num(199ul))));
}

TEST(Eval, ExponentGuard)
{
	EvalOptions opts;
	opts.max_exponent_bits = 10;
	EXPECT_EQ(eval(pow(num(2ul), num(1023ul)), {}, opts), eval(pow(num(2ul), num(1023ul))));
	EXPECT_THROW(eval(pow(num(2ul), num(1024ul)), {}, opts), ExponentGuardExceeded);
	// 0 and 1 stay small under any exponent
	EXPECT_EQ(eval(pow(num(1ul), num(Natural(1) << 100)), {}, opts), 1);
	EXPECT_EQ(eval(pow(num(0ul), num(Natural(1) << 100)), {}, opts), 0);
}

TEST(Term, ClosedAndPure)
{
	Term t = add(var("a"), mod(num(3ul), num(2ul)));
	EXPECT_FALSE(t.is_closed());
	EXPECT_FALSE(t.is_pure());
	EXPECT_TRUE(num(3ul).is_closed());
	EXPECT_TRUE(desugar_mod(t).is_pure());
	EXPECT_THROW(var(""), InvalidInput);
	EXPECT_THROW(num(Natural(-1)), InvalidInput);
}

TEST(Substitute, Examples)
{
	EXPECT_EQ(substitute(var("a"), {{"a", 3}}), num(3ul));
	EXPECT_EQ(substitute(add(var("a"), var("b")), {{"a", 1}}), add(num(1ul), var("b")));
	EXPECT_EQ(substitute(num(7ul), {}), num(7ul));
}

TEST(DesugarMod, Examples)
{
	Term x = var("x"), y = var("y");
	EXPECT_EQ(desugar_mod(mod(x, y)), monus(x, mul(y, fdiv(x, y))));
	Term pure = mul(add(x, num(1ul)), pow(y, num(2ul)));
	EXPECT_EQ(desugar_mod(pure), pure);
	EXPECT_EQ(eval(desugar_mod(mod(num(125ul), num(16ul)))), 13);
}

TEST(TermProperties, MonusClamp)
{
	std::mt19937_64 rng(11);
	std::uniform_int_distribution<unsigned long> d(0, 1000);
	for (int i = 0; i < 2000; ++i) {
		unsigned long x = d(rng), y = d(rng);
		Natural r = eval(monus(num(x), num(y)));
		EXPECT_EQ(r, x >= y ? x - y : 0);
		if (x >= y)
			EXPECT_EQ(r + y, x);
	}
}

TEST(TermProperties, ModRange)
{
	std::mt19937_64 rng(12);
	std::uniform_int_distribution<unsigned long> dx(0, 1ul << 40), dy(1, 5000);
	for (int i = 0; i < 2000; ++i) {
		unsigned long x = dx(rng), y = dy(rng);
		Natural r = eval(mod(num(x), num(y)));
		EXPECT_GE(r, 0);
		EXPECT_LT(r, y);
		EXPECT_EQ(r, x % y);
	}
}

TEST(TermProperties, DesugarSoundness)
{
	test::TermGenerator gen(13, /*max_depth=*/6, /*closed=*/true);
	int evaluated = 0;
	for (int i = 0; i < 3000; ++i) {
		Term t = gen.next();
		Natural expected;
		try {
			expected = eval(t);
		} catch (const DivisionByZero&) {
			EXPECT_THROW(eval(desugar_mod(t)), DivisionByZero) << pretty_print(t);
			continue;
		} catch (const ExponentGuardExceeded&) {
			continue;
		}
		++evaluated;
		EXPECT_EQ(eval(desugar_mod(t)), expected) << pretty_print(t);
	}
	EXPECT_GT(evaluated, 1000);
}

TEST(TermProperties, SubstitutionCommutesWithEval)
{
	test::TermGenerator gen(14, 6, /*closed=*/false);
	std::mt19937_64 rng(15);
	std::uniform_int_distribution<unsigned long> d(0, 9);
	for (int i = 0; i < 2000; ++i) {
		Term t = gen.next();
		Env env;
		for (const auto& name : test::TermGenerator::names())
			env[name] = d(rng);
		Natural direct;
		try {
			direct = eval(t, env);
		} catch (const Error&) {
			continue;
		}
		Term closed = substitute(t, env);
		EXPECT_TRUE(closed.is_closed());
		EXPECT_EQ(eval(closed), direct) << pretty_print(t);
	}
}
