#include "stardef/cochain.hpp"
#include "stardef/errors.hpp"
#include "stardef/parse.hpp"
#include "stardef/sampling.hpp"
#include "stardef/verify.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace stardef;

namespace {

std::shared_ptr<Coresolution const> moyal(int n)
{
	auto g = std::make_shared<MatrixGroup const>(close_group(n, {}));
	return std::make_shared<Coresolution const>(g, ProductKind::moyal());
}

std::shared_ptr<Coresolution const> smash_z2()
{
	auto g = std::make_shared<MatrixGroup const>(
	    close_group(2, {RatMatrix::identity(2) * Rational(-1)}));
	return std::make_shared<Coresolution const>(g, ProductKind::moyal());
}

Element E(char const *src, int group = 0, std::uint32_t wedge = 0)
{
	return Element::from_polynomial(parse_polynomial(src, 2), group, wedge);
}

} // namespace

TEST(Cochain, MultiplicationSign)
{
	auto ctx = moyal(2);
	auto m = mult_cochain(ctx);
	EXPECT_EQ(m({E("x1"), E("p1")}), E("x1*p1 + 1"));
	// A 1-form on the left flips the sign.
	EXPECT_EQ(m({E("1", 0, 1), E("x1")}), -E("x1", 0, 1));
}

TEST(Cochain, ArityIsChecked)
{
	auto m = mult_cochain(moyal(2));
	EXPECT_THROW(m({E("x1")}), ValidationError);
}

TEST(Cochain, DeltaOfMultiplicationVanishes)
{
	auto ctx = moyal(2);
	auto dm = delta(mult_cochain(ctx));
	Sampler rng(5);
	for (int t = 0; t < 10; ++t)
	{
		Arguments a;
		for (int i = 0; i < 3; ++i)
			a.push_back(rng.element(2, 1, 2, 2, rng.uniform(0, 2)));
		EXPECT_TRUE(dm(a).is_zero()) << to_string(a[0]);
	}
}

TEST(Cochain, CentralElementsAreDeltaClosed)
{
	auto ctx = moyal(2);
	auto w = element_cochain(ctx, E("1", 0, 3));
	auto dw = delta(w);
	EXPECT_TRUE(dw({E("x1*p2")}).is_zero());
	EXPECT_TRUE(dw({E("x2^2", 0, 1)}).is_zero());
	// x1 is not central: [m, x1](p1) = x1 . p1 - p1 . x1.
	auto dx = delta(element_cochain(ctx, E("x1")));
	EXPECT_EQ(dx({E("p1")}), E("1"));
}

TEST(Cochain, DOfElementCochain)
{
	auto ctx = moyal(2);
	auto f = cochain_d(element_cochain(ctx, E("p1")));
	EXPECT_EQ(f.internal_degree(), 1);
	EXPECT_EQ(f(Arguments{}), E("1", 0, 1));
}

TEST(Cochain, LiteralDSignFailsOnMultiplication)
{
	// With the sign written in front of the sum, d m does not vanish; with
	// the opposite sign (the implemented one) it does.
	auto ctx = moyal(2);
	auto m = mult_cochain(ctx);
	Arguments a{E("p1"), E("x1")};
	EXPECT_TRUE(cochain_d(m)(a).is_zero());
	EXPECT_FALSE(cochain_d_opposite_sign(m)(a).is_zero());
}

TEST(Cochain, CircleWithElement)
{
	auto ctx = moyal(2);
	auto m = mult_cochain(ctx);
	auto w = element_cochain(ctx, E("x2"));
	// m o w = m(w, a) + (-1)^{(|w|+1)(|a|+1)} m(a, w) for a 0-form a: x2 a - a x2.
	auto c = circle(m, w);
	EXPECT_EQ(c.arity(), 1);
	EXPECT_EQ(c({E("p2")}), E("x2*p2 + 1") - E("x2*p2"));
	// w o f has no insertion slot.
	EXPECT_TRUE(circle(w, m)({E("x1")}).is_zero());
}

TEST(Cochain, BracketOfMultiplicationWithItselfVanishes)
{
	auto ctx = smash_z2();
	auto mm = bracket(mult_cochain(ctx), mult_cochain(ctx));
	Sampler rng(9);
	for (int t = 0; t < 10; ++t)
	{
		Arguments a;
		for (int i = 0; i < 3; ++i)
			a.push_back(rng.element(2, 2, 2, 2, rng.uniform(0, 1)));
		EXPECT_TRUE(mm(a).is_zero());
	}
}

TEST(Cochain, HPostcompose)
{
	auto ctx = moyal(2);
	auto f = h_postcompose(element_cochain(ctx, E("1", 0, 1)));
	EXPECT_EQ(f.internal_degree(), 0);
	EXPECT_EQ(f(Arguments{}), E("p1"));
	auto hh = h_postcompose(h_postcompose(element_cochain(ctx, E("x1", 0, 3))));
	EXPECT_TRUE(hh(Arguments{}).is_zero());
}

TEST(Cochain, ExpandedDeltaMatchesBracketOnSmash)
{
	auto ctx = smash_z2();
	Sampler rng(11);
	for (int t = 0; t < 20; ++t)
	{
		auto f = random_cochain(ctx, rng, rng.uniform(1, 2), rng.uniform(-1, 2));
		Arguments a;
		for (int i = 0; i <= f.arity(); ++i)
			a.push_back(rng.element(2, 2, 2, 2, rng.uniform(0, 2)));
		EXPECT_TRUE((delta(f)(a) - delta_explicit(f)(a)).is_zero()) << f.name();
	}
}

TEST(Cochain, ExpandedDeltaNeedsArguments)
{
	EXPECT_THROW(delta_explicit(element_cochain(moyal(2), E("x1"))), ValidationError);
}

TEST(Cochain, MemoizationIsInvisible)
{
	auto ctx = smash_z2();
	Sampler rng(2);
	auto f = random_cochain(ctx, rng, 2, 0);
	auto cached = delta(f).memoized();
	auto plain = delta(f).uncached();
	for (int t = 0; t < 10; ++t)
	{
		Arguments a;
		for (int i = 0; i < 3; ++i)
			a.push_back(rng.element(2, 2, 2, 2, rng.uniform(0, 2)));
		auto first = cached(a);
		EXPECT_EQ(first, plain(a));
		EXPECT_EQ(cached(a), first);
	}
	EXPECT_GT(cached.memo_size(), 0u);
	EXPECT_EQ(plain.memo_size(), 0u);
}

TEST(Cochain, ConcurrentMemoizedEvaluation)
{
	auto ctx = moyal(2);
	auto m = mult_cochain(ctx).memoized();
	Arguments a{E("x1^2*x2"), E("p1^2*p2")};
	auto expected = m.uncached()(a);
	std::vector<std::thread> threads;
	std::vector<int> ok(4, 0);
	for (int i = 0; i < 4; ++i)
		threads.emplace_back([&, i] { ok[i] = m(a) == expected; });
	for (auto &t : threads)
		t.join();
	for (int v : ok)
		EXPECT_TRUE(v);
}

TEST(Cochain, ShapesMustMatchForSums)
{
	auto ctx = moyal(2);
	EXPECT_THROW(mult_cochain(ctx) + zero_cochain(ctx, 1, 0), ValidationError);
}

TEST(Suites, CochainIdentitiesOnMoyal)
{
	auto s = cochain_suite(moyal(2), 30, 1);
	for (auto const &c : s.checks)
		EXPECT_TRUE(c.ok()) << c.name << ": " << c.counterexample;
}

TEST(Suites, WrongJacobiSignIsDetected)
{
	// Flipping the sign of the last Jacobi term must produce residuals.
	auto ctx = moyal(2);
	Sampler rng(4);
	int detected = 0;
	for (int t = 0; t < 20; ++t)
	{
		auto f = random_cochain(ctx, rng, 1, 0), g = random_cochain(ctx, rng, 1, 0),
		     k = random_cochain(ctx, rng, 1, 1);
		Arguments a{rng.element(2, 1, 2, 2, 0)};
		Element r = bracket(f, bracket(g, k))(a) - bracket(bracket(f, g), k)(a) +
		            bracket(g, bracket(f, k))(a);
		detected += !r.is_zero();
	}
	EXPECT_GT(detected, 0);
}
