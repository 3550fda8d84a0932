#pragma once

#include "stardef/cochain.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace stardef {

struct SeedReport
{
	bool ok = false;
	bool has_degree_two = false;
	InvarianceReport invariance;
	std::string diagnostics;
};

// A seed must be a homogeneous 2-form that is central (in particular
// A-invariant) and d-closed. `make` builds it at a given p-cutoff.
SeedReport validate_seed(Coresolution const &ctx, std::function<Element(int)> const &make,
                         int D);
SeedReport validate_seed(Coresolution const &ctx, Element const &lambda);

// mu_n, Phi_n, Psi_n and Lambda_n from
//   Psi_n    = h Lambda_{n-1}
//   Phi_n    = -h (delta Psi_n + sum_{k=1}^{n-1} [mu_k, Psi_{n-k}])
//   mu_n     = -(1/n) (delta Phi_n + sum_{k=1}^{n-1} [mu_k, Phi_{n-k}])
//   Lambda_n = (1/n) sum_{k=1}^{n} [Phi_k, Lambda_{n-k}]
// with Lambda_0 = lambda. Index 0 of psi/phi is unused (zero); mu[0] is the
// undeformed product a . b.
class DeformationState
{
  public:
	DeformationState(std::shared_ptr<Coresolution const> ctx, Element lambda, int order);

	int order() const { return order_; }
	Coresolution const &context() const { return *ctx_; }
	std::shared_ptr<Coresolution const> const &context_ptr() const { return ctx_; }

	Cochain const &mu(int n) const { return mu_.at(n); }
	Cochain const &phi(int n) const { return phi_.at(n); }
	Element const &psi(int n) const { return psi_.at(n); }
	// Lambda_n for 0 <= n <= order, materialized on first use.
	Element const &lambda(int n) const;
	Cochain lambda_cochain(int n) const;
	Cochain psi_cochain(int n) const;

  private:
	std::shared_ptr<Coresolution const> ctx_;
	int order_;
	std::vector<Cochain> mu_, phi_;
	std::vector<Element> psi_;
	mutable std::vector<std::optional<Element>> lambda_;
	mutable std::recursive_mutex lambda_mutex_;
};

// The order-n Maurer-Cartan residual delta mu_n + 1/2 sum [mu_k, mu_{n-k}],
// an arity-3 cochain.
Cochain mc_residual(DeformationState const &state, int n);
// Order-n components of the deformed closedness condition:
//   element part  d Lambda_n  (a 3-form),
//   cochain part  delta Lambda_n + sum_{k=1}^{n} [mu_k, Lambda_{n-k}]  (arity 1).
Element deformed_closedness_form(DeformationState const &state, int n);
Cochain deformed_closedness_cochain(DeformationState const &state, int n);

// The closed-form second-order term
//   1/2 ([dh dh l, h dh l] + dh [dh dh l, h l] - dh dh [h dh l, l])
// written with delta for d-of-cochains and h postcomposition.
Cochain mu2_composite(std::shared_ptr<Coresolution const> ctx, Element const &lambda);
// delta h delta h lambda, the first-order bracket.
Cochain mu1_composite(std::shared_ptr<Coresolution const> ctx, Element const &lambda);

struct StarResult
{
	// c_0 = a . b, c_n = mu_n(a, b), each an exact p-free element of A_Gamma.
	std::vector<Element> coefficients;
	// Largest cutoff used to certify a coefficient.
	int p_cutoff = 0;
};

// Star products with certified truncation. Each request is evaluated with
// the seed built at cutoff D and again at D + 2; the results must be
// p-independent on their windows and agree. When a window is too narrow the
// cutoff is raised by 2, at most `max_raises` times.
class StarEngine
{
  public:
	StarEngine(std::shared_ptr<Coresolution const> ctx,
	           std::function<Element(int)> lambda_at, int order);

	int order() const { return order_; }
	Coresolution const &context() const { return *ctx_; }

	// Fixes the starting cutoff instead of the input-dependent default
	// (max x-degree of the inputs + 2 order + 2).
	void set_cutoff(std::optional<int> D) { fixed_cutoff_ = D; }
	// Added to the default cutoff; a margin of 2 re-runs everything at D + 2.
	void set_cutoff_margin(int m) { margin_ = m; }
	void set_max_raises(int k) { max_raises_ = k; }

	StarResult star(Element const &a, Element const &b) const;
	// mu_n(a, b) for 0 <= n <= order, certified as above. The cutoff that
	// certified the value is stored in *cutoff_used when given.
	Element coefficient(int n, Element const &a, Element const &b,
	                    int *cutoff_used = nullptr) const;

	// The state at cutoff D (shared between calls).
	DeformationState const &state(int D) const;
	int default_cutoff(Element const &a, Element const &b) const;

  private:
	// Certified value of mu_n(a, b) at cutoff D, or nullopt when the window
	// cannot certify it.
	std::optional<Element> certified(int n, Element const &a, Element const &b, int D) const;
	int start_cutoff(Element const &a, Element const &b) const;

	std::shared_ptr<Coresolution const> ctx_;
	std::function<Element(int)> lambda_at_;
	int order_;
	std::optional<int> fixed_cutoff_;
	int margin_ = 0;
	int max_raises_ = 4;
	bool seed_exact_ = false;
	mutable std::map<int, std::unique_ptr<DeformationState>> states_;
	mutable std::mutex states_mutex_;
};

// Requires a to be a p-free 0-form (an element of A_Gamma).
void require_in_A(Element const &a, char const *what);

// Order-n associator of the star product on (a, b, c):
//   sum_{k+l=n} mu_k(mu_l(a, b), c) - mu_k(a, mu_l(b, c)).
Element associator(StarEngine const &engine, int n, Element const &a, Element const &b,
                   Element const &c);
// The same for any family of coefficients mu(k, x, y).
using CoefficientFn = std::function<Element(int, Element const &, Element const &)>;
Element associator(CoefficientFn const &mu, int n, Element const &a, Element const &b,
                   Element const &c);

} // namespace stardef
