#include "stardef/deformation.hpp"
#include "stardef/errors.hpp"
#include "stardef/parse.hpp"
#include "stardef/presets.hpp"
#include "stardef/reference.hpp"
#include "stardef/sampling.hpp"

#include <gtest/gtest.h>

using namespace stardef;

namespace {

RatMatrix standard_pi(int n)
{
	RatMatrix pi(n);
	for (int i = 0; i + 1 < n; i += 2)
	{
		pi(i, i + 1) = 1;
		pi(i + 1, i) = -1;
	}
	return pi;
}

PresetConfig config(PresetKind kind, Rational c = Rational(2, 3))
{
	PresetConfig cfg;
	cfg.preset = kind;
	cfg.dim = 2;
	cfg.pi = standard_pi(2);
	cfg.order = 1;
	if (kind != PresetKind::moyal)
	{
		cfg.group_generators = {RatMatrix::identity(2) * Rational(-1)};
		cfg.c = {{1, c}};
	}
	return cfg;
}

PresetConfig z4_config()
{
	PresetConfig cfg = config(PresetKind::weyl_smash);
	cfg.group_generators = {RatMatrix::from_rows({{0, -1}, {1, 0}})};
	// Every non-identity rotation is a reflection in dim 2, each its own class.
	cfg.c = {{1, Rational(1, 3)}, {2, Rational(-2)}, {3, Rational(5, 7)}};
	return cfg;
}

PresetConfig block_swap_config(PresetKind kind)
{
	PresetConfig cfg;
	cfg.preset = kind;
	cfg.dim = 4;
	cfg.pi = standard_pi(4);
	cfg.order = 1;
	cfg.group_generators = {
	    RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})};
	cfg.c = {{1, Rational(2, 3)}};
	return cfg;
}

Polynomial P(char const *src, int dim = 2) { return parse_polynomial(src, dim); }

Element A(char const *src, int dim = 2, int group = 0)
{
	return Element::from_polynomial(parse_polynomial(src, dim), group);
}

Element engine_mu1(Preset const &p, Polynomial const &a, Polynomial const &b)
{
	StarEngine engine(p.ctx, p.lambda_at, 1);
	return engine.coefficient(1, Element::from_polynomial(a), Element::from_polynomial(b));
}

} // namespace

TEST(Presets, KindNames)
{
	EXPECT_EQ(parse_preset_kind("weyl-smash"), PresetKind::weyl_smash);
	EXPECT_EQ(to_string(PresetKind::smash), "smash");
	EXPECT_THROW(parse_preset_kind("weyl"), ValidationError);
}

TEST(Presets, MoyalSeedIsTheBivector)
{
	auto p = build_preset(config(PresetKind::moyal));
	auto expected = Element::from_polynomial(Polynomial::constant(2, seed_sign()), 0, 3);
	EXPECT_EQ(p.lambda_at(4), expected);
	EXPECT_EQ(bivector_form(standard_pi(2)), Element::from_polynomial(P("1"), 0, 3));
}

TEST(Presets, SmashSeedHasIdentityAndReflectionParts)
{
	auto p = build_preset(config(PresetKind::smash, Rational(1, 2)));
	auto lambda = p.lambda_at(2);
	EXPECT_EQ(lambda.part({0, 3}), Polynomial::constant(2, seed_sign()));
	// c E_g 4 pi(dp, dp) g with E_g = 1 - 2<p, x> + ... and c = 1/2.
	auto g = lambda.part({1, 3});
	Monomial x1p1;
	x1p1.set_x(0, 1);
	x1p1.set_p(0, 1);
	EXPECT_EQ(g.coefficient(Monomial()), seed_sign() * 2);
	EXPECT_EQ(g.coefficient(x1p1), seed_sign() * -4);
}

TEST(Presets, WeylSmashSeedHasNoIdentityPart)
{
	auto p = build_preset(config(PresetKind::weyl_smash));
	auto lambda = p.lambda_at(4);
	EXPECT_TRUE(lambda.group_part(0).is_zero());
	EXPECT_FALSE(lambda.group_part(1).is_zero());
}

TEST(Presets, SeedsValidate)
{
	for (auto cfg : {config(PresetKind::moyal), config(PresetKind::smash),
	                 config(PresetKind::weyl_smash), z4_config(),
	                 block_swap_config(PresetKind::smash)})
	{
		auto p = build_preset(cfg);
		EXPECT_TRUE(validate_seed(*p.ctx, p.lambda_at, 6).ok) << to_string(cfg.preset);
	}
}

TEST(Presets, InvalidConfigurations)
{
	auto cfg = config(PresetKind::smash);
	cfg.group_generators.clear();
	EXPECT_THROW(build_preset(cfg), ValidationError);

	cfg = config(PresetKind::moyal);
	cfg.pi(0, 1) = 2; // no longer antisymmetric
	EXPECT_THROW(build_preset(cfg), ValidationError);

	cfg = config(PresetKind::weyl_smash);
	cfg.pi = RatMatrix(2);
	EXPECT_THROW(build_preset(cfg), ValidationError);

	cfg = config(PresetKind::smash);
	cfg.c = {{0, Rational(1)}}; // identity is not a reflection
	EXPECT_THROW(build_preset(cfg), ValidationError);
}

TEST(Presets, CostLimits)
{
	EXPECT_EQ(max_cheap_order(PresetKind::moyal), 4);
	EXPECT_EQ(max_cheap_order(PresetKind::weyl_smash), 2);
	auto cfg = config(PresetKind::smash);
	cfg.order = 3;
	EXPECT_THROW(check_cost(cfg, false), CostLimitError);
	EXPECT_NO_THROW(check_cost(cfg, true));
	cfg.order = 2;
	EXPECT_NO_THROW(check_cost(cfg, false));
}

TEST(Reference, MoyalGenerators)
{
	auto p = build_preset(config(PresetKind::moyal));
	EXPECT_EQ(reference_mu1(p, P("x1"), P("x2")), A("1/2"));
	EXPECT_EQ(reference_mu1(p, P("x2"), P("x1")), A("-1/2"));
	EXPECT_EQ(reference_mu1(p, P("x1^2"), P("x2^3")), A("3*x1*x2^2"));
}

TEST(Reference, SmashGeneratorsUseTheSimplexMeasure)
{
	// Constant integrand over the simplex (measure 1/2), pi_g^{12} = 4:
	// 1/2 + 2 c g.
	auto p = build_preset(config(PresetKind::smash, Rational(3, 5)));
	EXPECT_EQ(reference_mu1(p, P("x1"), P("x2")), A("1/2") + A("6/5", 2, 1));
	EXPECT_EQ(engine_mu1(p, P("x1"), P("x2")), reference_mu1(p, P("x1"), P("x2")));
}

TEST(Reference, WeylSmashGenerators)
{
	auto p = build_preset(config(PresetKind::weyl_smash, Rational(3, 5)));
	auto r = reference_mu1(p, P("x1"), P("x2"));
	EXPECT_TRUE(r.group_part(0).is_zero());
	EXPECT_EQ(r, engine_mu1(p, P("x1"), P("x2")));
}

TEST(Reference, AgreesWithEngineOnRandomPairs)
{
	for (auto cfg : {config(PresetKind::moyal), config(PresetKind::smash),
	                 config(PresetKind::weyl_smash), z4_config()})
	{
		auto p = build_preset(cfg);
		Sampler rng(17);
		for (int t = 0; t < 3; ++t)
		{
			auto a = rng.polynomial(cfg.dim, 3, 2, true);
			auto b = rng.polynomial(cfg.dim, 3, 2, true);
			EXPECT_EQ(engine_mu1(p, a, b), reference_mu1(p, a, b))
			    << to_string(cfg.preset) << " " << to_string(a) << " , " << to_string(b);
		}
	}
}

TEST(Reference, BlockSwapGenerators)
{
	// Dim-4 kernels are large; generator pairs keep this quick.
	auto p = build_preset(block_swap_config(PresetKind::weyl_smash));
	for (auto [a, b] : {std::pair{"x1", "x3"}, std::pair{"x1", "x2"}, std::pair{"x4", "x2"}})
		EXPECT_EQ(engine_mu1(p, P(a, 4), P(b, 4)), reference_mu1(p, P(a, 4), P(b, 4)))
		    << a << " , " << b;
}

TEST(Reference, LiteralArgumentOrderDiffersFromEngine)
{
	// The closed form as printed has the second argument acting from the
	// left; it matches the engine only after exchanging arguments and sign.
	auto p = build_preset(config(PresetKind::smash));
	// The gamma part of L is symmetric on this pair.
	auto a = P("x1^2"), b = P("x2");
	auto literal = reference_mu1_literal(p, a, b);
	EXPECT_EQ(reference_mu1(p, a, b), -reference_mu1_literal(p, b, a));
	EXPECT_NE(literal, engine_mu1(p, a, b));
	EXPECT_EQ(-reference_mu1_literal(p, b, a), engine_mu1(p, a, b));
}

TEST(Reference, RejectsMomentumTerms)
{
	auto p = build_preset(config(PresetKind::moyal));
	EXPECT_THROW(reference_mu1(p, P("p1"), P("x1")), ValidationError);
}
