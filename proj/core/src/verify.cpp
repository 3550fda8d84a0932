#include "stardef/verify.hpp"

#include "stardef/errors.hpp"
#include "stardef/reference.hpp"

#include <algorithm>
#include <sstream>

namespace stardef {

bool SuiteResult::ok() const
{
	return !checks.empty() &&
	       std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.ok(); });
}

namespace {

std::string show(Arguments const &args)
{
	std::string s = "[";
	for (std::size_t i = 0; i < args.size(); ++i)
		s += (i ? ", " : "") + to_string(args[i]);
	return s + "]";
}

// Runs `trial` `trials` times; a trial returns an empty string on success
// and a description of the failure otherwise. Exceptions count as failures.
CheckResult run_check(std::string name, int trials, std::function<std::string(int)> const &trial)
{
	CheckResult r;
	r.name = std::move(name);
	for (int t = 0; t < trials; ++t)
	{
		std::string failure;
		try
		{
			failure = trial(t);
		}
		catch (Error const &e)
		{
			failure = std::string("error: ") + e.what();
		}
		++r.trials;
		if (!failure.empty())
		{
			++r.failures;
			if (r.counterexample.empty())
				r.counterexample = failure;
		}
	}
	return r;
}

std::string expect_zero(Element const &residual, std::string const &context)
{
	std::string why;
	if (vanishes(residual, &why))
		return {};
	return context + ": " + why;
}

int parity(long e) { return e % 2 ? -1 : 1; }

Element random_form(Sampler &rng, Coresolution const &ctx, int degree, int max_poly)
{
	return rng.element(ctx.dim(), ctx.group().order(), max_poly, ctx.dim(), degree, 2);
}

} // namespace

bool vanishes(Element const &e, std::string *why)
{
	if (!e.parts().empty())
	{
		if (why)
			*why = "residual " + to_string(e);
		return false;
	}
	if (e.precision() < 0)
	{
		if (why)
			*why = "truncation window is empty; raise the p-cutoff";
		return false;
	}
	return true;
}

Cochain random_cochain(std::shared_ptr<Coresolution const> const &ctx, Sampler &rng,
                       int arity, int internal_degree)
{
	int n = ctx->dim();
	auto one_form = [&]() -> Cochain {
		// Choose degrees of u_0..u_n and operators T_1..T_n summing to the
		// internal degree; retry until they do.
		std::vector<int> u(arity + 1), t(arity);
		for (int attempt = 0;; ++attempt)
		{
			int total = 0;
			for (auto &x : u)
				total += x = rng.uniform(0, 2);
			for (auto &x : t)
				total += x = rng.uniform(-1, 1);
			if (total == internal_degree)
				break;
			if (attempt > 1000)
				throw ValidationError("no product cochain of arity " + std::to_string(arity) +
				                      " and internal degree " +
				                      std::to_string(internal_degree));
		}
		std::vector<Element> factors;
		for (int deg : u)
			factors.push_back(rng.element(n, ctx->group().order(), 1, n, deg, 1));
		auto c = ctx;
		return Cochain(ctx, arity, internal_degree, "rand",
		               [c, factors, t](Arguments const &a) {
			               Element r = factors[0];
			               for (std::size_t i = 0; i < a.size(); ++i)
			               {
				               // h is eps sigma on 0-forms; dropping them keeps the
				               // operator homogeneous of degree -1.
				               Element x = t[i] > 0   ? c->d(a[i])
				                           : t[i] < 0 ? c->h(a[i] - a[i].degree_part(0))
				                                      : a[i];
				               r = c->bullet(c->bullet(r, x), factors[i + 1]);
			               }
			               return r;
		               });
	};
	auto f = one_form() + one_form();
	return Cochain(ctx, arity, internal_degree, "f" + std::to_string(arity) + "," +
	                                               std::to_string(internal_degree),
	               [f](Arguments const &a) { return f(a); });
}

Element random_A_element(Sampler &rng, int dim, int group_order, int max_degree, int terms)
{
	Element e(dim);
	for (int k = 0; k < terms; ++k)
	{
		int g = group_order > 1 ? rng.uniform(0, group_order - 1) : 0;
		e.add({g, 0}, rng.polynomial(dim, max_degree, 1, true));
	}
	return e;
}

SuiteResult cochain_suite(std::shared_ptr<Coresolution const> const &ctx, int trials,
                          std::uint64_t seed)
{
	SuiteResult s;
	s.suite = "cochain";
	Sampler rng(seed);
	auto cochain = [&](int min_arity) {
		int arity = rng.uniform(min_arity, 2);
		return random_cochain(ctx, rng, arity, rng.uniform(arity == 0 ? 0 : -1, 2));
	};
	// A pair whose bracket has arity >= 0.
	auto pair = [&]() {
		auto f = cochain(0);
		auto g = cochain(f.arity() == 0 ? 1 : 0);
		return std::pair{f, g};
	};
	auto args = [&](int k) {
		Arguments a;
		for (int i = 0; i < k; ++i)
			a.push_back(random_form(rng, *ctx, rng.uniform(0, 2), 3));
		return a;
	};
	auto describe = [](Cochain const &f, Arguments const &a) {
		return "cochain " + f.name() + " (arity " + std::to_string(f.arity()) +
		       ", degree " + std::to_string(f.internal_degree()) + ") on " + show(a);
	};

	s.checks.push_back(run_check("delta^2 = 0", trials, [&](int) {
		auto f = cochain(0);
		auto a = args(f.arity() + 2);
		return expect_zero(delta(delta(f))(a), describe(f, a));
	}));
	s.checks.push_back(run_check("d^2 = 0", trials, [&](int) {
		auto f = cochain(0);
		auto a = args(f.arity());
		return expect_zero(cochain_d(cochain_d(f))(a), describe(f, a));
	}));
	s.checks.push_back(run_check("d delta + delta d = 0", trials, [&](int) {
		auto f = cochain(0);
		auto a = args(f.arity() + 1);
		return expect_zero(cochain_d(delta(f))(a) + delta(cochain_d(f))(a), describe(f, a));
	}));
	s.checks.push_back(run_check("delta f = [m, f]", trials, [&](int) {
		auto f = cochain(1);
		auto a = args(f.arity() + 1);
		return expect_zero(delta(f)(a) - delta_explicit(f)(a), describe(f, a));
	}));
	s.checks.push_back(run_check("bracket antisymmetry", trials, [&](int) {
		auto [f, g] = pair();
		int sign = parity(long(f.total_degree() + 1) * (g.total_degree() + 1));
		auto a = args(std::max(f.arity() + g.arity() - 1, 0));
		Element r = bracket(f, g)(a) + bracket(g, f)(a) * Rational(sign);
		return expect_zero(r, describe(f, a) + " with " + g.name());
	}));
	s.checks.push_back(run_check("graded Jacobi", trials, [&](int) {
		// At most one arity-0 cochain, so every inner bracket exists.
		int zero = rng.uniform(0, 3);
		auto f = cochain(zero == 0 ? 0 : 1), g = cochain(zero == 1 ? 0 : 1),
		     k = cochain(zero == 2 ? 0 : 1);
		int sign = parity(long(f.total_degree() + 1) * (g.total_degree() + 1));
		auto a = args(f.arity() + g.arity() + k.arity() - 2);
		Element r = bracket(f, bracket(g, k))(a) - bracket(bracket(f, g), k)(a) -
		            bracket(g, bracket(f, k))(a) * Rational(sign);
		return expect_zero(r, describe(f, a) + " with " + g.name() + ", " + k.name());
	}));
	s.checks.push_back(run_check("delta Leibniz", trials, [&](int) {
		auto [f, g] = pair();
		int sign = parity(f.total_degree() + 1);
		auto a = args(std::max(f.arity() + g.arity(), 0));
		Element r = delta(bracket(f, g))(a) - bracket(delta(f), g)(a) -
		            bracket(f, delta(g))(a) * Rational(sign);
		return expect_zero(r, describe(f, a) + " with " + g.name());
	}));
	s.checks.push_back(run_check("d Leibniz", trials, [&](int) {
		auto [f, g] = pair();
		int sign = parity(f.total_degree() + 1);
		auto a = args(std::max(f.arity() + g.arity() - 1, 0));
		Element r = cochain_d(bracket(f, g))(a) - bracket(cochain_d(f), g)(a) -
		            bracket(f, cochain_d(g))(a) * Rational(sign);
		return expect_zero(r, describe(f, a) + " with " + g.name());
	}));
	return s;
}

SuiteResult homotopy_suite(std::shared_ptr<Coresolution const> const &ctx, int trials,
                           std::uint64_t seed)
{
	SuiteResult s;
	s.suite = "homotopy";
	Sampler rng(seed);
	auto const &c = *ctx;
	s.checks.push_back(run_check("hd + dh = 1 - eps sigma on 0-forms", trials, [&](int) {
		auto a = random_form(rng, c, 0, 3);
		return expect_zero(c.h(c.d(a)) + c.d(c.h(a)) - a + c.sigma(a), to_string(a));
	}));
	s.checks.push_back(run_check("hd + dh = 1 on forms of degree > 0", trials, [&](int) {
		auto a = random_form(rng, c, rng.uniform(1, c.dim()), 3);
		return expect_zero(c.h(c.d(a)) + c.d(c.h(a)) - a, to_string(a));
	}));
	s.checks.push_back(run_check("h^2 = 0 on forms of degree >= 1", trials, [&](int) {
		auto a = random_form(rng, c, rng.uniform(1, c.dim()), 3);
		return expect_zero(c.h(c.h(a)), to_string(a));
	}));
	s.checks.push_back(run_check("h eps = id on A", trials, [&](int) {
		auto a = random_A_element(rng, c.dim(), c.group().order(), 3);
		return expect_zero(c.h(a) - a, to_string(a));
	}));
	return s;
}

SuiteResult assoc_suite(Preset const &preset, CoefficientFn const &mu, int order, int trials,
                        std::uint64_t seed, std::string const &label)
{
	SuiteResult s;
	s.suite = label;
	Sampler rng(seed);
	int dim = preset.config.dim, G = preset.group->order();
	std::vector<std::array<Element, 3>> triples;
	for (int t = 0; t < trials; ++t)
		triples.push_back({random_A_element(rng, dim, G, 3), random_A_element(rng, dim, G, 3),
		                   random_A_element(rng, dim, G, 3)});
	for (int n = 0; n <= order; ++n)
		s.checks.push_back(
		    run_check("associator order " + std::to_string(n), trials, [&](int t) {
			    auto const &[a, b, c] = triples[t];
			    return expect_zero(associator(mu, n, a, b, c),
			                       "triple " + show({a, b, c}));
		    }));
	return s;
}

SuiteResult assoc_suite(Preset const &preset, StarEngine const &engine, int trials,
                        std::uint64_t seed)
{
	return assoc_suite(
	    preset,
	    [&](int k, Element const &x, Element const &y) { return engine.coefficient(k, x, y); },
	    engine.order(), trials, seed);
}

CheckResult negative_control(Preset const &preset, StarEngine const &engine, int trials,
                             std::uint64_t seed)
{
	int top = engine.order();
	int dim = preset.config.dim;
	auto corrupted = [&](int k, Element const &x, Element const &y) {
		Element v = engine.coefficient(k, x, y);
		if (k != top || top == 0)
			return v;
		// (d a / d x^1) b on the identity components.
		Element extra(dim);
		for (auto const &[sx, fx] : x.parts())
			for (auto const &[sy, fy] : y.parts())
				if (sx.group == 0 && sy.group == 0)
					extra.add({0, 0}, fx.partial_x(0) * fy);
		return v + extra;
	};
	auto s = assoc_suite(preset, corrupted, top, trials, seed, "negative control");
	CheckResult r;
	r.name = "corrupted mu_" + std::to_string(top) + " is detected";
	r.trials = 1;
	bool detected = !s.checks.back().ok();
	r.failures = detected ? 0 : 1;
	if (!detected)
		r.counterexample = "associativity suite accepted a corrupted coefficient";
	return r;
}

SuiteResult reference_suite(Preset const &preset, StarEngine const &engine, int trials,
                            std::uint64_t seed)
{
	SuiteResult s;
	s.suite = "reference";
	int dim = preset.config.dim;
	std::vector<std::pair<Polynomial, Polynomial>> pairs;
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			pairs.emplace_back(Polynomial::x(dim, i), Polynomial::x(dim, j));
	int generator_pairs = static_cast<int>(pairs.size());
	Sampler rng(seed);
	for (int t = 0; t < trials; ++t)
		pairs.emplace_back(rng.polynomial(dim, 3, 2, true), rng.polynomial(dim, 3, 2, true));
	auto compare = [&](int k) {
		auto const &[a, b] = pairs[k];
		auto engine_value =
		    engine.coefficient(1, Element::from_polynomial(a), Element::from_polynomial(b));
		auto expected = reference_mu1(preset, a, b);
		if (engine_value == expected)
			return std::string();
		return "a = " + to_string(a) + ", b = " + to_string(b) + ": engine " +
		       to_string(engine_value) + ", closed form " + to_string(expected);
	};
	s.checks.push_back(run_check("mu_1 = closed form on generator pairs", generator_pairs,
	                             [&](int t) { return compare(t); }));
	s.checks.push_back(run_check("mu_1 = closed form on random pairs", trials,
	                             [&](int t) { return compare(generator_pairs + t); }));
	return s;
}

SuiteResult seed_suite(Preset const &preset, StarEngine const &engine, int trials,
                       std::uint64_t seed)
{
	SuiteResult s;
	s.suite = "seed";
	auto const &ctx = *preset.ctx;
	int dim = preset.config.dim, G = preset.group->order();
	int order = engine.order();
	// A cutoff wide enough for arguments of degree <= 2.
	int D = 2 + 2 * order + 4;
	auto const &state = engine.state(D);
	Sampler rng(seed);

	s.checks.push_back(run_check("seed is a central closed 2-form", 1, [&](int) {
		auto report = validate_seed(ctx, preset.lambda_at, D);
		return report.ok ? std::string() : report.diagnostics;
	}));
	s.checks.push_back(run_check("h Psi_n = 0", order, [&](int t) {
		int n = t + 1;
		return expect_zero(ctx.h(state.psi(n)), "n = " + std::to_string(n));
	}));
	s.checks.push_back(run_check("h Phi_n = 0", trials, [&](int t) {
		int n = 1 + t % order;
		auto a = random_form(rng, ctx, 2, 1);
		return expect_zero(ctx.h(state.phi(n)(a)),
		                   "n = " + std::to_string(n) + ", argument " + to_string(a));
	}));
	s.checks.push_back(run_check("d mu_n = 0", trials, [&](int t) {
		int n = 1 + t % order;
		Arguments a{random_form(rng, ctx, 0, 2), random_form(rng, ctx, 0, 2)};
		return expect_zero(cochain_d(state.mu(n))(a),
		                   "n = " + std::to_string(n) + ", arguments " + show(a));
	}));
	s.checks.push_back(run_check("Maurer-Cartan residual", trials, [&](int t) {
		int n = 1 + t % order;
		Arguments a{random_A_element(rng, dim, G, 2), random_A_element(rng, dim, G, 2),
		            random_A_element(rng, dim, G, 2)};
		return expect_zero(mc_residual(state, n)(a),
		                   "n = " + std::to_string(n) + ", arguments " + show(a));
	}));
	int top = std::min(order, 2);
	s.checks.push_back(run_check("d Lambda_n = 0", top, [&](int t) {
		int n = t + 1;
		return expect_zero(deformed_closedness_form(state, n), "n = " + std::to_string(n));
	}));
	s.checks.push_back(run_check("delta Lambda_n + sum [mu_k, Lambda_{n-k}] = 0", trials,
	                             [&](int t) {
		                             int n = 1 + t % std::max(top, 1);
		                             auto a = random_A_element(rng, dim, G, 2);
		                             return expect_zero(
		                                 deformed_closedness_cochain(state, n)(a),
		                                 "n = " + std::to_string(n) + ", argument " +
		                                     to_string(a));
	                             }));
	return s;
}

SuiteResult mu2_suite(Preset const &preset, StarEngine const &engine, int trials,
                      std::uint64_t seed)
{
	SuiteResult s;
	s.suite = "mu2";
	int dim = preset.config.dim, G = preset.group->order();
	Sampler rng(seed);
	s.checks.push_back(run_check("recurrence mu_2 = closed composite", trials, [&](int) {
		auto a = random_A_element(rng, dim, G, 3), b = random_A_element(rng, dim, G, 3);
		auto engine_value = engine.coefficient(2, a, b);
		// The composite, certified the same way: two cutoffs, equal p-free values.
		int D = engine.default_cutoff(a, b);
		std::optional<Element> previous;
		for (int cut : {D, D + 2})
		{
			auto composite = mu2_composite(preset.ctx, preset.lambda_at(cut))(a, b);
			if (composite.precision(0) < 0 || !composite.is_p_free())
				return "composite not certified at cutoff " + std::to_string(cut) + " for " +
				       show({a, b});
			Element exact(dim);
			for (auto const &[sec, f] : composite.parts())
				exact.add(sec, f);
			if (previous && !(*previous == exact))
				return "composite changes between cutoffs for " + show({a, b});
			previous = exact;
		}
		if (*previous == engine_value)
			return std::string();
		return show({a, b}) + ": recurrence " + to_string(engine_value) + ", composite " +
		       to_string(*previous);
	}));
	return s;
}

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names{"cochain", "homotopy", "assoc",
	                                            "reference", "seed", "mu2"};
	return names;
}

std::vector<SuiteResult> run_suites(Preset const &preset, StarEngine const &engine,
                                    std::string const &which, int trials, std::uint64_t seed)
{
	auto const &names = suite_names();
	if (which != "all" && std::find(names.begin(), names.end(), which) == names.end())
		throw ValidationError("unknown suite '" + which + "'");
	std::vector<SuiteResult> out;
	auto want = [&](char const *name) { return which == "all" || which == name; };
	if (want("cochain"))
		out.push_back(cochain_suite(preset.ctx, trials, seed));
	if (want("homotopy"))
		out.push_back(homotopy_suite(preset.ctx, trials, seed + 1));
	if (want("assoc"))
	{
		out.push_back(assoc_suite(preset, engine, trials, seed + 2));
		if (engine.order() > 0)
			out.back().checks.push_back(negative_control(preset, engine, trials, seed + 2));
	}
	if (want("reference") && engine.order() >= 1)
		out.push_back(reference_suite(preset, engine, trials, seed + 3));
	if (want("seed") && engine.order() >= 1)
		out.push_back(seed_suite(preset, engine, trials, seed + 4));
	if (want("mu2") && engine.order() >= 2)
		out.push_back(mu2_suite(preset, engine, trials, seed + 5));
	return out;
}

} // namespace stardef
