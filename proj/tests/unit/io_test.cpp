#include "stardef/errors.hpp"
#include "stardef/io.hpp"
#include "stardef/parse.hpp"

#include <gtest/gtest.h>

using namespace stardef;

namespace {

char const *const kSmash = R"({
  "preset": "smash", "dim": 2, "pi": [["0", "1"], ["-1", "0"]],
  "group_generators": [[["-1", "0"], ["0", "-1"]]], "c": {"1": "2/3"},
  "order": 1, "p_cutoff": "auto", "seed": 7
})";

} // namespace

TEST(Config, RoundTrip)
{
	auto cfg = parse_config_text(kSmash);
	EXPECT_EQ(cfg.preset, PresetKind::smash);
	EXPECT_EQ(cfg.c.at(1), Rational(2, 3));
	EXPECT_EQ(cfg.seed, 7u);
	EXPECT_FALSE(cfg.p_cutoff);
	auto again = parse_config(config_to_json(cfg));
	EXPECT_EQ(config_to_json(again), config_to_json(cfg));
}

TEST(Config, Errors)
{
	EXPECT_THROW(parse_config_text("{\"preset\": "), ParseError);
	auto doc = Json::parse(kSmash);
	doc["colour"] = 1;
	EXPECT_THROW(parse_config(doc), ValidationError);
	doc = Json::parse(kSmash);
	doc.erase("pi");
	EXPECT_THROW(parse_config(doc), ValidationError);
	doc = Json::parse(kSmash);
	doc["pi"] = {{"0", "1"}};
	EXPECT_THROW(parse_config(doc), ValidationError);
	doc = Json::parse(kSmash);
	doc["p_cutoff"] = "never";
	EXPECT_THROW(parse_config(doc), ValidationError);
	doc = Json::parse(kSmash);
	doc["c"] = {{"one", "1"}};
	EXPECT_THROW(parse_config(doc), ValidationError);
}

TEST(GroupAlgebraParser, Suffixes)
{
	auto e = parse_group_algebra_element("x1^2 - 3/2*x2#g1 + 1#g0", 2, 2);
	Element expected = Element::from_polynomial(parse_polynomial("x1^2 + 1", 2)) +
	                   Element::from_polynomial(parse_polynomial("-3/2*x2", 2), 1);
	EXPECT_EQ(e, expected);
	EXPECT_THROW(parse_group_algebra_element("x1#g2", 2, 2), ParseError);
	EXPECT_THROW(parse_group_algebra_element("x1#", 2, 2), ParseError);
}

TEST(Documents, ComputeRoundTrip)
{
	auto p = build_preset(parse_config_text(kSmash));
	StarEngine engine(p.ctx, p.lambda_at, 1);
	auto a = parse_group_algebra_element("x1^2 + x2#g1", 2, 2);
	auto b = parse_group_algebra_element("x2", 2, 2);
	auto r = engine.star(a, b);
	auto doc = compute_document(p, r);
	EXPECT_EQ(doc["order"], 1);
	EXPECT_EQ(doc["group_elements"].size(), 2u);
	auto back = coefficients_from_document(Json::parse(doc.dump()), 2, 2);
	ASSERT_EQ(back.size(), r.coefficients.size());
	for (std::size_t k = 0; k < back.size(); ++k)
		EXPECT_EQ(back[k], r.coefficients[k]);
}

TEST(Documents, TableIsAntisymmetric)
{
	auto p = build_preset(parse_config_text(kSmash));
	StarEngine engine(p.ctx, p.lambda_at, 1);
	auto doc = table_document(p, engine);
	ASSERT_EQ(doc["table"].size(), 4u);
	auto c12 = element_from_terms_json(doc["table"][1]["coefficients"][1]["terms"], 2, 2);
	auto c21 = element_from_terms_json(doc["table"][2]["coefficients"][1]["terms"], 2, 2);
	EXPECT_EQ(c12, -c21);
	// 2 (1/2 + 4/3 g) from the table entry x1 x2 - x2 x1.
	EXPECT_EQ(c12, Element::from_polynomial(Polynomial::constant(2, 1)) +
	                   Element::from_polynomial(Polynomial::constant(2, Rational(8, 3)), 1));
}

TEST(Documents, RejectsMomentumTerms)
{
	EXPECT_THROW(element_terms_json(Element::from_polynomial(parse_polynomial("p1", 2))),
	             ValidationError);
}
