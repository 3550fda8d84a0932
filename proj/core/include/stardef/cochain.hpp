#pragma once

#include "stardef/coresolution.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace stardef {

using Arguments = std::vector<Element>;

struct ArgumentsHash
{
	std::size_t operator()(Arguments const &args) const;
};

// A multilinear operator A^{(x)n} -> A of internal degree m, evaluated
// lazily. The evaluator only ever sees homogeneous arguments; the framework
// splits sums into homogeneous components and adds the results.
//
// Cochains are cheap handles: copies share the evaluator and the memo.
class Cochain
{
  public:
	using Evaluator = std::function<Element(Arguments const &)>;

	Cochain(std::shared_ptr<Coresolution const> ctx, int arity, int internal_degree,
	        std::string name, Evaluator eval, bool memoize = false);

	int arity() const { return impl_->arity; }
	int internal_degree() const { return impl_->internal_degree; }
	// |f| = arity + internal degree.
	int total_degree() const { return impl_->arity + impl_->internal_degree; }
	std::string const &name() const { return impl_->name; }
	Coresolution const &context() const { return *impl_->ctx; }
	std::shared_ptr<Coresolution const> const &context_ptr() const { return impl_->ctx; }

	Element operator()(Arguments const &args) const;
	Element operator()() const { return (*this)(Arguments{}); }
	Element operator()(Element const &a) const { return (*this)(Arguments{a}); }
	Element operator()(Element const &a, Element const &b) const
	{
		return (*this)(Arguments{a, b});
	}

	// Same operator with a fresh, enabled memo.
	Cochain memoized() const;
	// Same operator without a memo (for checking that caching is invisible).
	Cochain uncached() const;
	std::size_t memo_size() const;

  private:
	struct Impl
	{
		std::shared_ptr<Coresolution const> ctx;
		int arity = 0;
		int internal_degree = 0;
		std::string name;
		Evaluator eval;
		bool memoize = false;
		mutable std::mutex mutex;
		mutable std::unordered_map<Arguments, Element, ArgumentsHash> memo;
	};

	Element evaluate_homogeneous(Arguments const &args) const;

	std::shared_ptr<Impl> impl_;
};

// The 0-cochain with value w; w must be homogeneous (its form degree is the
// internal degree). An exact zero gets internal degree `degree_if_zero`.
Cochain element_cochain(std::shared_ptr<Coresolution const> ctx, Element w,
                        int degree_if_zero = 0);
// The zero cochain of the given shape.
Cochain zero_cochain(std::shared_ptr<Coresolution const> ctx, int arity,
                     int internal_degree);
// m(a1, a2) = (-1)^{|a1|} a1 . a2
Cochain mult_cochain(std::shared_ptr<Coresolution const> ctx);

// f o g = sum_{i=0}^{n_f - 1} (-1)^{(|g|+1) sum_{j<=i}(|a_j|+1)}
//         f(a_1, .., a_i, g(a_{i+1}, ..), ..); zero when f has arity 0.
Cochain circle(Cochain const &f, Cochain const &g);
// [f, g] = f o g - (-1)^{(|f|+1)(|g|+1)} g o f
Cochain bracket(Cochain const &f, Cochain const &g);
// delta f = [m, f]
Cochain delta(Cochain const &f);
// The expanded coboundary formula, for n >= 1:
//   (delta f)(a_1..a_{n+1}) = -(-1)^{(|a_1|+1)|f|} a_1 f(a_2..)
//       - sum_{i=2}^{n+1} (-1)^{e_i} f(.., a_{i-1} a_i, ..)
//       + (-1)^{e_{n+1}} f(a_1..a_n) a_{n+1},
// with e_i = |f| + |a_1| + .. + |a_{i-1}| - i + 1.
Cochain delta_explicit(Cochain const &f);
// (df)(a_1..a_n) = d f(a_1..a_n) + sum_i (-1)^{e_i} f(.., d a_i, ..),
// with e_i as above. This is the sign for which d anticommutes with delta
// and d m = 0.
Cochain cochain_d(Cochain const &f);
// The same formula with the opposite sign on the sum; kept only so tests can
// demonstrate that it fails d m = 0.
Cochain cochain_d_opposite_sign(Cochain const &f);
// (hf)(a..) = h(f(a..))
Cochain h_postcompose(Cochain const &f);

Cochain operator+(Cochain const &f, Cochain const &g);
Cochain operator-(Cochain const &f, Cochain const &g);
Cochain operator*(Rational const &c, Cochain const &f);

} // namespace stardef
