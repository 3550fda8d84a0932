#include "stardef/deformation.hpp"

#include "stardef/errors.hpp"

#include <algorithm>

namespace stardef {

SeedReport validate_seed(Coresolution const &ctx, std::function<Element(int)> const &make,
                         int D)
{
	SeedReport r;
	auto lambda = make(D);
	r.has_degree_two = lambda.degree() == 2;
	if (!r.has_degree_two)
	{
		r.diagnostics = "seed is not a homogeneous 2-form";
		return r;
	}
	r.invariance = check_invariant_central(ctx, make, D);
	if (!r.invariance.is_central)
		r.diagnostics = "seed is not central: " + r.invariance.detail;
	else if (!r.invariance.is_d_closed)
		r.diagnostics = "seed is not d-closed: " + r.invariance.detail;
	r.ok = r.invariance.is_central && r.invariance.is_d_closed;
	return r;
}

SeedReport validate_seed(Coresolution const &ctx, Element const &lambda)
{
	return validate_seed(ctx, [&](int) { return lambda; }, 0);
}

DeformationState::DeformationState(std::shared_ptr<Coresolution const> ctx, Element lambda,
                                   int order)
    : ctx_(std::move(ctx)), order_(order)
{
	if (order < 0)
		throw ValidationError("deformation order must be non-negative");
	if (lambda.degree() != 2 && !lambda.is_exact_zero())
		throw ValidationError("seed must be a homogeneous 2-form");
	auto c = ctx_;
	mu_.push_back(Cochain(ctx_, 2, 0, "bullet", [c](Arguments const &a) {
		return c->bullet(a[0], a[1]);
	}));
	phi_.push_back(zero_cochain(ctx_, 1, 0));
	psi_.push_back(ctx_->zero());
	lambda_.resize(order + 1);
	lambda_[0] = std::move(lambda);

	for (int n = 1; n <= order; ++n)
	{
		psi_.push_back(ctx_->h(this->lambda(n - 1)));

		Cochain inner = delta(psi_cochain(n));
		for (int k = 1; k < n; ++k)
			inner = inner + bracket(mu_[k], psi_cochain(n - k));
		auto phi = Rational(-1) * h_postcompose(inner);
		phi_.push_back(Cochain(ctx_, 1, 0, "Phi" + std::to_string(n),
		                       [phi](Arguments const &a) { return phi(a); }, true));

		Cochain outer = delta(phi_[n]);
		for (int k = 1; k < n; ++k)
			outer = outer + bracket(mu_[k], phi_[n - k]);
		auto mu = Rational(-1, n) * outer;
		mu_.push_back(Cochain(ctx_, 2, 0, "mu" + std::to_string(n),
		                      [mu](Arguments const &a) { return mu(a); }, true));
	}
}

Element const &DeformationState::lambda(int n) const
{
	std::lock_guard lock(lambda_mutex_);
	if (n < 0 || n > order_)
		throw ValidationError("Lambda index out of range");
	if (!lambda_[n])
	{
		Element sum = ctx_->zero();
		for (int k = 1; k <= n; ++k)
			sum += bracket(phi_[k], lambda_cochain(n - k))();
		lambda_[n] = sum * Rational(1, n);
	}
	return *lambda_[n];
}

Cochain DeformationState::lambda_cochain(int n) const
{
	return element_cochain(ctx_, lambda(n), 2);
}

Cochain DeformationState::psi_cochain(int n) const
{
	return element_cochain(ctx_, psi_.at(n), 1);
}

Cochain mc_residual(DeformationState const &state, int n)
{
	Cochain r = delta(state.mu(n));
	for (int k = 1; k < n; ++k)
		r = r + Rational(1, 2) * bracket(state.mu(k), state.mu(n - k));
	return r;
}

Element deformed_closedness_form(DeformationState const &state, int n)
{
	return state.context().d(state.lambda(n));
}

Cochain deformed_closedness_cochain(DeformationState const &state, int n)
{
	Cochain r = delta(state.lambda_cochain(n));
	for (int k = 1; k <= n; ++k)
		r = r + bracket(state.mu(k), state.lambda_cochain(n - k));
	return r;
}

Cochain mu1_composite(std::shared_ptr<Coresolution const> ctx, Element const &lambda)
{
	auto l = element_cochain(ctx, lambda, 2);
	return delta(h_postcompose(delta(h_postcompose(l))));
}

Cochain mu2_composite(std::shared_ptr<Coresolution const> ctx, Element const &lambda)
{
	auto h = [](Cochain const &f) { return h_postcompose(f); };
	auto l = element_cochain(ctx, lambda, 2);
	auto hl = h(l);
	auto dhl = delta(hl);
	auto hdhl = h(dhl).memoized();
	auto dhdhl = delta(hdhl).memoized();
	auto first = bracket(dhdhl, hdhl);
	auto second = delta(h(bracket(dhdhl, hl)));
	auto third = delta(h(delta(h(bracket(hdhl, l)))));
	return Rational(1, 2) * (first + second - third);
}

void require_in_A(Element const &a, char const *what)
{
	if (!a.is_exact())
		throw ValidationError(std::string(what) + " must be an exact element");
	if (!a.is_p_free())
		throw ValidationError(std::string(what) +
		                      " must be a p-independent 0-form (an element of A)");
}

StarEngine::StarEngine(std::shared_ptr<Coresolution const> ctx,
                       std::function<Element(int)> lambda_at, int order)
    : ctx_(std::move(ctx)), lambda_at_(std::move(lambda_at)), order_(order)
{
	if (order < 0)
		throw ValidationError("order must be non-negative");
	seed_exact_ = lambda_at_(0).is_exact();
}

DeformationState const &StarEngine::state(int D) const
{
	int key = seed_exact_ ? 0 : D;
	std::lock_guard lock(states_mutex_);
	auto it = states_.find(key);
	if (it == states_.end())
		it = states_
		         .emplace(key, std::make_unique<DeformationState>(ctx_, lambda_at_(D), order_))
		         .first;
	return *it->second;
}

int StarEngine::default_cutoff(Element const &a, Element const &b) const
{
	return std::max(a.max_x_degree(), b.max_x_degree()) + 2 * order_ + 2;
}

int StarEngine::start_cutoff(Element const &a, Element const &b) const
{
	return fixed_cutoff_ ? *fixed_cutoff_ : default_cutoff(a, b) + margin_;
}

std::optional<Element> StarEngine::certified(int n, Element const &a, Element const &b,
                                             int D) const
{
	auto value = state(D).mu(n)(a, b);
	for (int l : value.degrees())
		if (l != 0)
			throw Error("mu_" + std::to_string(n) + " produced a form of degree " +
			            std::to_string(l) + " on A");
	if (value.precision(0) < 0)
	{
		ctx_->require_precision(value, 0, "star coefficient");
		return std::nullopt;
	}
	if (!value.is_p_free())
		throw Error("mu_" + std::to_string(n) + " is not p-independent on A: " +
		            to_string(value));
	Element exact(ctx_->dim());
	for (auto const &[s, f] : value.parts())
		exact.add(s, f);
	return exact;
}

Element StarEngine::coefficient(int n, Element const &a, Element const &b,
                                int *cutoff_used) const
{
	if (n < 0 || n > order_)
		throw ValidationError("coefficient order out of range");
	int D = start_cutoff(a, b);
	if (cutoff_used)
		*cutoff_used = D;
	if (n == 0)
		return ctx_->bullet(a, b);
	bool may_raise = !fixed_cutoff_ || ctx_->policy() == TruncationPolicy::flag;
	for (int attempt = 0; attempt <= (may_raise ? max_raises_ : 0); ++attempt, D += 2)
	{
		auto lo = certified(n, a, b, D);
		auto hi = certified(n, a, b, D + 2);
		if (lo && hi)
		{
			if (!(*lo == *hi))
				throw TruncationError("mu_" + std::to_string(n) +
				                      " changes between p-cutoff " + std::to_string(D) +
				                      " and " + std::to_string(D + 2));
			if (cutoff_used)
				*cutoff_used = D;
			return *hi;
		}
	}
	throw TruncationError("p-cutoff " + std::to_string(D - 2) +
	                      " cannot certify mu_" + std::to_string(n));
}

StarResult StarEngine::star(Element const &a, Element const &b) const
{
	require_in_A(a, "left factor");
	require_in_A(b, "right factor");
	StarResult r;
	r.p_cutoff = start_cutoff(a, b);
	for (int n = 0; n <= order_; ++n)
	{
		int used = r.p_cutoff;
		r.coefficients.push_back(coefficient(n, a, b, &used));
		r.p_cutoff = std::max(r.p_cutoff, used);
	}
	return r;
}

Element associator(CoefficientFn const &mu, int n, Element const &a, Element const &b,
                   Element const &c)
{
	Element r(a.dim());
	for (int l = 0; l <= n; ++l)
	{
		int k = n - l;
		r += mu(k, mu(l, a, b), c);
		r -= mu(k, a, mu(l, b, c));
	}
	return r;
}

Element associator(StarEngine const &engine, int n, Element const &a, Element const &b,
                   Element const &c)
{
	return associator(
	    [&](int k, Element const &x, Element const &y) { return engine.coefficient(k, x, y); },
	    n, a, b, c);
}

} // namespace stardef
