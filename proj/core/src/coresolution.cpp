#include "stardef/coresolution.hpp"

#include "stardef/errors.hpp"

#include <algorithm>
#include <map>

namespace stardef {

namespace {

using Linear = std::vector<std::pair<int, Rational>>;

// Multi-index over x-variables, used as a cache key for D^alpha b.
using MultiIndex = std::array<std::uint8_t, kMaxDim>;

// Wedge of linear forms: image of dp_I when each dp_i maps to images[i].
std::vector<std::pair<std::uint32_t, Rational>>
wedge_image(std::uint32_t I, std::vector<Linear> const &images)
{
	std::vector<std::pair<std::uint32_t, Rational>> acc{{0u, Rational(1)}};
	for (int i = 0; I >> i; ++i)
	{
		if (!(I >> i & 1u))
			continue;
		std::map<std::uint32_t, Rational> next;
		for (auto const &[w, c] : acc)
			for (auto const &[j, cj] : images[i])
			{
				int s = wedge_sign(w, 1u << j);
				if (s == 0)
					continue;
				next[w | 1u << j] += s * c * cj;
			}
		acc.clear();
		for (auto &[w, c] : next)
			if (c != 0)
				acc.emplace_back(w, c);
	}
	return acc;
}

int precision_floor(int a, int b) { return std::min(std::min(a, b), kExact); }

} // namespace

ProductKind ProductKind::weyl(RatMatrix pi)
{
	if (!pi.is_antisymmetric())
		throw ValidationError("weyl product needs an antisymmetric pi");
	ProductKind k;
	k.tag = Tag::weyl;
	k.pi = std::move(pi);
	return k;
}

Coresolution::Coresolution(std::shared_ptr<MatrixGroup const> group, ProductKind kind,
                           TruncationPolicy policy)
    : group_(std::move(group)), kind_(std::move(kind)), policy_(policy)
{
	if (!group_)
		throw ValidationError("coresolution needs a group");
	int n = dim();
	if (kind_.tag == ProductKind::Tag::weyl)
	{
		if (kind_.pi.size() != n)
			throw DimensionMismatch("pi size does not match the group dimension");
		for (auto const &g : group_->elements())
			if (!(g * kind_.pi * g.transpose() == kind_.pi))
				throw ValidationError("weyl product needs a group preserving pi");
	}
	for (int g = 0; g < group_->order(); ++g)
	{
		auto const &m = group_->element(g);
		auto inv = m.inverse();
		Action a;
		a.x.resize(n);
		a.p.resize(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				if (inv(i, j) != 0)
					a.x[i].emplace_back(j, inv(i, j));
				if (m(j, i) != 0)
					a.p[i].emplace_back(j, m(j, i));
			}
		for (int i = 0; i < n; ++i)
			if (a.x[i].size() != 1 || a.p[i].size() != 1)
				a.monomial = false;
		actions_.push_back(std::move(a));
	}
}

Polynomial Coresolution::act(int g, Polynomial const &f) const
{
	if (g == 0 || f.is_zero())
		return f;
	auto const &a = actions_.at(g);
	int n = dim();
	if (a.monomial)
	{
		std::vector<Polynomial::Term> terms;
		terms.reserve(f.size());
		for (auto const &[m, c] : f.terms())
		{
			Monomial out;
			Rational coeff = c;
			for (int i = 0; i < n; ++i)
			{
				auto const &[jx, cx] = a.x[i].front();
				auto const &[jp, cp] = a.p[i].front();
				out.set_x(jx, m.x(i));
				out.set_p(jp, m.p(i));
				for (int e = 0; e < m.x(i); ++e)
					coeff *= cx;
				for (int e = 0; e < m.p(i); ++e)
					coeff *= cp;
			}
			terms.emplace_back(out, coeff);
		}
		return Polynomial::from_canonical_terms(n, std::move(terms));
	}

	// General linear substitution with per-variable power caches.
	std::vector<std::vector<Polynomial>> xpow(n), ppow(n);
	auto image = [&](Linear const &lin, bool is_x) {
		Polynomial r(n);
		for (auto const &[j, c] : lin)
			r += (is_x ? Polynomial::x(n, j) : Polynomial::p(n, j)) * c;
		return r;
	};
	auto power = [&](std::vector<Polynomial> &cache, Linear const &lin, bool is_x,
	                 int e) -> Polynomial const & {
		if (cache.empty())
			cache.push_back(Polynomial::constant(n, 1));
		while (static_cast<int>(cache.size()) <= e)
			cache.push_back(cache.back() * image(lin, is_x));
		return cache[e];
	};
	Polynomial result(n);
	for (auto const &[m, c] : f.terms())
	{
		Polynomial t = Polynomial::constant(n, c);
		for (int i = 0; i < n; ++i)
		{
			if (m.x(i))
				t = t * power(xpow[i], a.x[i], true, m.x(i));
			if (m.p(i))
				t = t * power(ppow[i], a.p[i], false, m.p(i));
		}
		result += t;
	}
	return result;
}

Element Coresolution::act(int g, Element const &e) const
{
	if (g == 0)
		return e;
	Element r(dim());
	for (int l = 0; l <= dim(); ++l)
		r.set_precision(l, e.precision(l));
	auto const &a = actions_.at(g);
	for (auto const &[s, f] : e.parts())
	{
		auto af = act(g, f);
		if (s.wedge == 0)
		{
			r.add(s, af);
			continue;
		}
		for (auto const &[w, c] : wedge_image(s.wedge, a.p))
			r.add({s.group, w}, af * c);
	}
	return r;
}

Element Coresolution::conjugate_by(int g, Element const &a) const
{
	auto lhs = Element::group_element(dim(), g);
	auto rhs = Element::group_element(dim(), group_->inverse(g));
	return bullet(bullet(lhs, a), rhs);
}

Polynomial Coresolution::poly_bullet(Polynomial const &a, Polynomial const &b,
                                     int cap) const
{
	int n = dim();
	bool weyl = kind_.tag == ProductKind::Tag::weyl;
	// D^alpha b for every alpha reached so far. Derivatives lower p-degree, so
	// b must not be truncated before differentiating; terms above the cap are
	// skipped when the product is assembled.
	std::map<MultiIndex, Polynomial> derivs;
	MultiIndex zero{};
	derivs.emplace(zero, b);

	auto apply_D = [&](Polynomial const &f, int i) {
		Polynomial r = f.partial_p(i);
		if (weyl)
			for (int j = 0; j < n; ++j)
				if (kind_.pi(i, j) != 0)
					r += f.partial_x(j) * kind_.pi(i, j);
		return r;
	};
	std::function<Polynomial const &(MultiIndex const &)> deriv =
	    [&](MultiIndex const &alpha) -> Polynomial const & {
		auto it = derivs.find(alpha);
		if (it != derivs.end())
			return it->second;
		int i = 0;
		while (alpha[i] == 0)
			++i;
		MultiIndex prev = alpha;
		--prev[i];
		Polynomial next = apply_D(deriv(prev), i);
		return derivs.emplace(alpha, std::move(next)).first->second;
	};

	std::vector<Polynomial::Term> out;
	for (auto const &[m, c] : a.terms())
	{
		int q = m.p_degree();
		if (cap < kExact && q > cap)
			continue;
		MultiIndex alpha{};
		// Odometer over 0 <= alpha <= x-exponents of m.
		while (true)
		{
			auto const &db = deriv(alpha);
			if (!db.is_zero())
			{
				Rational coeff = c;
				Monomial left;
				for (int i = 0; i < n; ++i)
				{
					coeff *= Rational(binomial(m.x(i), alpha[i]));
					left.set_x(i, m.x(i) - alpha[i]);
					left.set_p(i, m.p(i));
				}
				for (auto const &[mb, cb] : db.terms())
				{
					if (cap < kExact && q + mb.p_degree() > cap)
						continue;
					out.emplace_back(left * mb, coeff * cb);
				}
			}
			int i = 0;
			while (i < n && alpha[i] == m.x(i))
				alpha[i++] = 0;
			if (i == n)
				break;
			++alpha[i];
		}
	}
	return Polynomial::from_canonical_terms(n, std::move(out));
}

Element Coresolution::bullet(Element const &a, Element const &b) const
{
	if (a.dim() != dim() || b.dim() != dim())
		throw DimensionMismatch("bullet operands do not match the algebra dimension");
	int n = dim();

	// Lowest p-degree reachable from the known terms of a, per form degree:
	// a left term x^m p^q can absorb at most |m| p-derivatives from b.
	std::vector<int> low(n + 1, kExact);
	for (auto const &[s, f] : a.parts())
		for (auto const &[m, c] : f.terms())
			low[s.form_degree()] =
			    std::min(low[s.form_degree()], m.p_degree() - m.x_degree());

	auto adeg = a.degrees();
	auto bdeg = b.degrees();
	Element r(n);
	std::vector<int> prec(n + 1, kExact);
	for (int la : adeg)
		for (int lb : bdeg)
		{
			if (la + lb > n)
				continue;
			int p = a.precision(la);
			if (b.precision(lb) < kExact && low[la] < kExact)
				p = std::min(p, b.precision(lb) + low[la]);
			prec[la + lb] = precision_floor(prec[la + lb], p);
		}
	for (int l = 0; l <= n; ++l)
		r.set_precision(l, prec[l]);

	std::map<int, Element> acted;
	for (auto const &[sa, fa] : a.parts())
	{
		auto it = acted.find(sa.group);
		if (it == acted.end())
			it = acted.emplace(sa.group, act(sa.group, b)).first;
		for (auto const &[sb, fb] : it->second.parts())
		{
			int sign = wedge_sign(sa.wedge, sb.wedge);
			if (sign == 0)
				continue;
			int l = sa.form_degree() + sb.form_degree();
			auto f = poly_bullet(fa, fb, prec[l]);
			if (f.is_zero())
				continue;
			r.add({group_->multiply(sa.group, sb.group), sa.wedge | sb.wedge},
			      sign > 0 ? f : -f);
		}
	}
	return r;
}

Element Coresolution::graded_commutator(Element const &u, Element const &v) const
{
	Element r(dim());
	for (auto const &uc : u.homogeneous_components())
		for (auto const &vc : v.homogeneous_components())
		{
			int s = (uc.degree() * vc.degree()) % 2 ? -1 : 1;
			r += bullet(uc, vc);
			auto back = bullet(vc, uc);
			r += s > 0 ? -back : back;
		}
	return r;
}

Element Coresolution::d(Element const &a) const
{
	int n = dim();
	Element r(n);
	for (int l : a.degrees())
		if (l < n)
			r.set_precision(l + 1, shift_precision(a.precision(l), -1));
	for (auto const &[s, f] : a.parts())
		for (int j = 0; j < n; ++j)
		{
			if (s.wedge >> j & 1u)
				continue;
			auto df = f.partial_p(j);
			if (df.is_zero())
				continue;
			int sign = wedge_sign(1u << j, s.wedge);
			r.add({s.group, s.wedge | 1u << j}, sign > 0 ? df : -df);
		}
	return r;
}

Element Coresolution::sigma(Element const &a) const
{
	int n = dim();
	Element r(n);
	auto ds = a.degrees();
	if (std::find(ds.begin(), ds.end(), 0) == ds.end())
		return r;
	if (a.precision(0) < 0)
	{
		r.set_precision(0, -1);
		return r;
	}
	for (auto const &[s, f] : a.parts())
		if (s.wedge == 0)
			r.add(s, f.p_free_part());
	return r;
}

Element Coresolution::h(Element const &a) const
{
	int n = dim();
	Element r = sigma(a);
	for (int l : a.degrees())
		if (l >= 1)
			r.set_precision(l - 1, std::min(r.precision(l - 1),
			                                shift_precision(a.precision(l), 1)));
	for (auto const &[s, f] : a.parts())
	{
		int l = s.form_degree();
		if (l == 0)
			continue;
		// Euler-weighted contraction with p_i dp_i: each monomial of p-degree
		// k in an l-form is divided by k + l.
		std::vector<Polynomial::Term> scaled;
		scaled.reserve(f.size());
		for (auto const &[m, c] : f.terms())
			scaled.emplace_back(m, c / Rational(m.p_degree() + l));
		auto g = Polynomial::from_canonical_terms(n, std::move(scaled));
		int r_index = 0;
		for (int i = 0; i < n; ++i)
		{
			if (!(s.wedge >> i & 1u))
				continue;
			Monomial pi;
			pi.set_p(i, 1);
			auto term = g.times_monomial(pi, r_index % 2 ? Rational(-1) : Rational(1));
			r.add({s.group, s.wedge & ~(1u << i)}, term);
			++r_index;
		}
	}
	return r;
}

Polynomial Coresolution::kernel_jet(int g, int D) const
{
	int n = dim();
	if (D < 0)
		throw ValidationError("kernel cutoff must be non-negative");
	auto const &m = group_->element(g);
	auto inv = m.inverse();
	// Q = -<p, x - g.x> (+ pi(p, g.p) for weyl)
	Polynomial Q(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			Rational c = (i == j ? Rational(1) : Rational(0)) - inv(i, j);
			if (c != 0)
				Q -= Polynomial::p(n, i) * Polynomial::x(n, j) * c;
		}
	if (kind_.tag == ProductKind::Tag::weyl)
	{
		// pi(p, p g) = sum_{i,j,k} pi^{ij} p_i p_k g_{kj}
		auto piT = kind_.pi * m.transpose();
		for (int i = 0; i < n; ++i)
			for (int k = 0; k < n; ++k)
				if (piT(i, k) != 0)
					Q += Polynomial::p(n, i) * Polynomial::p(n, k) * piT(i, k);
	}
	Polynomial result = Polynomial::constant(n, 1);
	Polynomial power = Polynomial::constant(n, 1);
	for (int k = 1; k <= D && !Q.is_zero(); ++k)
	{
		power = (power * Q).truncated_p(D) * (Rational(1) / Rational(k));
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

Element Coresolution::kernel(int g, int D) const
{
	auto jet = kernel_jet(g, D);
	// The identity kernel, and the moyal kernel of elements acting trivially,
	// are exactly 1; everything else is a genuine series. The exponent has
	// p-degree 1 and 2 parts, so it vanishes iff the jet through p^2 is 1.
	bool exact = kernel_jet(g, 2) == Polynomial::constant(dim(), 1);
	return Element::from_polynomial(jet, 0, 0, exact ? kExact : D);
}

void Coresolution::require_precision(Element const &e, int needed, char const *what) const
{
	for (int l : e.degrees())
		if (e.precision(l) < needed)
		{
			if (policy_ == TruncationPolicy::error)
				throw TruncationError(std::string(what) + ": form degree " +
				                      std::to_string(l) + " is known only through p-degree " +
				                      std::to_string(e.precision(l)) + ", need " +
				                      std::to_string(needed));
			++events_;
			return;
		}
}

namespace {

struct ProbeOutcome
{
	bool invariant = true, central = true, closed = true;
	int window = kExact;
	std::string detail;
};

ProbeOutcome probe(Coresolution const &ctx, Element const &lambda)
{
	ProbeOutcome out;
	int n = ctx.dim();
	auto record = [&](Element const &res, bool &flag, std::string const &name) {
		out.window = std::min(out.window, res.precision());
		if (!res.is_zero())
		{
			flag = false;
			if (out.detail.empty())
				out.detail = name + " = " + to_string(res);
		}
		else if (res.precision() < 0)
			throw TruncationError("cannot certify " + name + ": empty p-window");
	};
	for (int i = 0; i < n; ++i)
		record(ctx.graded_commutator(Element::x(n, i), lambda), out.invariant,
		       "[x" + std::to_string(i + 1) + ", lambda]");
	for (int g = 1; g < ctx.group().order(); ++g)
		record(ctx.graded_commutator(Element::group_element(n, g), lambda),
		       out.invariant, "[g" + std::to_string(g) + ", lambda]");
	out.central = out.invariant;
	for (int i = 0; i < n; ++i)
	{
		record(ctx.graded_commutator(Element::p(n, i), lambda), out.central,
		       "[p" + std::to_string(i + 1) + ", lambda]");
		record(ctx.graded_commutator(Element::dp(n, i), lambda), out.central,
		       "[dp" + std::to_string(i + 1) + ", lambda]");
	}
	record(ctx.d(lambda), out.closed, "d lambda");
	return out;
}

} // namespace

InvarianceReport check_invariant_central(Coresolution const &ctx,
                                         std::function<Element(int)> const &make, int D)
{
	auto first = probe(ctx, make(D));
	auto second = probe(ctx, make(D + 2));
	if (first.invariant != second.invariant || first.central != second.central ||
	    first.closed != second.closed)
		throw TruncationError("invariance checks change between p-cutoff " +
		                      std::to_string(D) + " and " + std::to_string(D + 2));
	InvarianceReport r;
	r.is_A_invariant = second.invariant;
	r.is_central = second.central;
	r.is_d_closed = second.closed;
	r.window = std::min(first.window, second.window);
	r.detail = second.detail;
	return r;
}

InvarianceReport check_invariant_central(Coresolution const &ctx, Element const &lambda)
{
	return check_invariant_central(ctx, [&](int) { return lambda; }, 0);
}

} // namespace stardef
