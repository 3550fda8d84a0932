#pragma once

#include "stardef/element.hpp"
#include "stardef/group.hpp"
#include "stardef/matrix.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <vector>

namespace stardef {

struct ProductKind
{
	enum class Tag { moyal, weyl };
	Tag tag = Tag::moyal;
	// Required for weyl; ignored for moyal.
	RatMatrix pi = RatMatrix(0);

	static ProductKind moyal() { return ProductKind{}; }
	static ProductKind weyl(RatMatrix pi);
};

enum class TruncationPolicy {
	error, // throw TruncationError when a window cannot certify a result
	flag,  // count the event and continue
};

// The differential graded algebra (B (x) Lambda(V)) x| Gamma: bullet product,
// differential d, contracting homotopy h and the augmentation data.
//
// x-variables transform as g.x = g^{-1} x (so that ^g f(v) = f(g^{-1} v)),
// p and dp transform contragrediently as row vectors, p -> p g, which keeps
// <p, x> invariant.
class Coresolution
{
  public:
	Coresolution(std::shared_ptr<MatrixGroup const> group, ProductKind kind,
	             TruncationPolicy policy = TruncationPolicy::error);

	int dim() const { return group_->dim(); }
	MatrixGroup const &group() const { return *group_; }
	std::shared_ptr<MatrixGroup const> group_ptr() const { return group_; }
	ProductKind const &kind() const { return kind_; }
	TruncationPolicy policy() const { return policy_; }

	Element zero() const { return Element(dim()); }
	Element one() const { return Element::constant(dim(), 1); }

	Element bullet(Element const &a, Element const &b) const;
	// u.v - (-1)^{|u||v|} v.u for homogeneous u, v.
	Element graded_commutator(Element const &u, Element const &v) const;

	Element d(Element const &a) const;
	// Degree l >= 1: the Poincare homotopy. Degree 0: epsilon sigma, i.e.
	// evaluation at p = 0 embedded back into degree 0.
	Element h(Element const &a) const;
	// epsilon sigma on the degree-0 part; other degrees map to zero.
	Element sigma(Element const &a) const;

	// ^g acting on coefficients (x, p, dp), leaving group labels alone.
	Element act(int g, Element const &a) const;
	Polynomial act(int g, Polynomial const &f) const;
	// g a g^{-1} in the smash algebra.
	Element conjugate_by(int g, Element const &a) const;

	// Taylor jet of the kernel E_g through p-degree D: exp(-<p, x - g.x>)
	// for moyal, with the extra pi(p, g.p) term for weyl.
	Polynomial kernel_jet(int g, int D) const;
	Element kernel(int g, int D) const;

	// Throws (policy error) or records (policy flag) when a degree of e is
	// known only below p-degree `needed`.
	void require_precision(Element const &e, int needed, char const *what) const;
	long truncation_events() const { return events_.load(); }

  private:
	Polynomial poly_bullet(Polynomial const &a, Polynomial const &b, int cap) const;

	std::shared_ptr<MatrixGroup const> group_;
	ProductKind kind_;
	TruncationPolicy policy_;
	// Per group element: images of x^i, p_i, dp_i under the action.
	struct Action
	{
		std::vector<std::vector<std::pair<int, Rational>>> x, p;
		bool monomial = true;
	};
	std::vector<Action> actions_;
	mutable std::atomic<long> events_{0};
};

struct InvarianceReport
{
	bool is_A_invariant = false;
	bool is_central = false;
	bool is_d_closed = false;
	int window = 0; // smallest certified p-degree across the checks
	std::string detail;
};

// Probes: x^i and the group generators (A-invariance), plus p_i and dp_i
// (centrality). `make` builds the element at a given p-cutoff; the check runs
// at D and again at D + 2 and both must agree. Throws TruncationError when
// a commutator's window is empty.
InvarianceReport check_invariant_central(Coresolution const &ctx,
                                         std::function<Element(int)> const &make,
                                         int D);
InvarianceReport check_invariant_central(Coresolution const &ctx,
                                         Element const &lambda);

} // namespace stardef
