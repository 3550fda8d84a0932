#include "stardef/cochain.hpp"

#include "stardef/errors.hpp"

namespace stardef {

namespace {

int parity_sign(long e) { return e % 2 ? -1 : 1; }

Element signed_element(int sign, Element e) { return sign > 0 ? e : -e; }

} // namespace

std::size_t ArgumentsHash::operator()(Arguments const &args) const
{
	std::size_t h = args.size();
	for (auto const &a : args)
		h = h * 1000003u ^ a.hash();
	return h;
}

Cochain::Cochain(std::shared_ptr<Coresolution const> ctx, int arity, int internal_degree,
                 std::string name, Evaluator eval, bool memoize)
    : impl_(std::make_shared<Impl>())
{
	if (!ctx)
		throw ValidationError("cochain needs a coresolution");
	if (arity < 0)
		throw ValidationError("cochain arity must be non-negative");
	impl_->ctx = std::move(ctx);
	impl_->arity = arity;
	impl_->internal_degree = internal_degree;
	impl_->name = std::move(name);
	impl_->eval = std::move(eval);
	impl_->memoize = memoize;
}

Cochain Cochain::memoized() const
{
	return Cochain(impl_->ctx, impl_->arity, impl_->internal_degree, impl_->name,
	               impl_->eval, true);
}

Cochain Cochain::uncached() const
{
	return Cochain(impl_->ctx, impl_->arity, impl_->internal_degree, impl_->name,
	               impl_->eval, false);
}

std::size_t Cochain::memo_size() const
{
	std::lock_guard lock(impl_->mutex);
	return impl_->memo.size();
}

Element Cochain::evaluate_homogeneous(Arguments const &args) const
{
	if (!impl_->memoize)
		return impl_->eval(args);
	{
		std::lock_guard lock(impl_->mutex);
		auto it = impl_->memo.find(args);
		if (it != impl_->memo.end())
			return it->second;
	}
	// Evaluated outside the lock: evaluators recurse into other cochains, and
	// a duplicate computation by a concurrent caller yields the same value.
	Element value = impl_->eval(args);
	std::lock_guard lock(impl_->mutex);
	impl_->memo.emplace(args, value);
	return value;
}

Element Cochain::operator()(Arguments const &args) const
{
	if (static_cast<int>(args.size()) != impl_->arity)
		throw ValidationError("cochain " + impl_->name + " expects " +
		                      std::to_string(impl_->arity) + " arguments, got " +
		                      std::to_string(args.size()));
	std::vector<std::vector<Element>> parts;
	parts.reserve(args.size());
	for (auto const &a : args)
	{
		if (a.dim() != context().dim())
			throw DimensionMismatch("cochain argument has the wrong dimension");
		auto comps = a.homogeneous_components();
		if (comps.empty())
			return context().zero();
		parts.push_back(std::move(comps));
	}

	Element total = context().zero();
	std::vector<std::size_t> pick(args.size(), 0);
	Arguments current(args.size());
	while (true)
	{
		for (std::size_t i = 0; i < args.size(); ++i)
			current[i] = parts[i][pick[i]];
		total += evaluate_homogeneous(current);
		std::size_t i = 0;
		while (i < args.size() && ++pick[i] == parts[i].size())
			pick[i++] = 0;
		if (i == args.size())
			break;
	}
	return total;
}

Cochain element_cochain(std::shared_ptr<Coresolution const> ctx, Element w,
                        int degree_if_zero)
{
	int deg = w.degrees().empty() ? degree_if_zero : w.degree();
	if (deg < 0)
		throw ValidationError("0-cochains need a homogeneous value");
	return Cochain(std::move(ctx), 0, deg, "w" + std::to_string(deg),
	               [w = std::move(w)](Arguments const &) { return w; });
}

Cochain zero_cochain(std::shared_ptr<Coresolution const> ctx, int arity, int internal_degree)
{
	auto c = ctx;
	return Cochain(std::move(ctx), arity, internal_degree, "0",
	               [c](Arguments const &) { return c->zero(); });
}

Cochain mult_cochain(std::shared_ptr<Coresolution const> ctx)
{
	auto c = ctx;
	return Cochain(std::move(ctx), 2, 0, "m", [c](Arguments const &a) {
		return signed_element(parity_sign(a[0].degree()), c->bullet(a[0], a[1]));
	});
}

Cochain circle(Cochain const &f, Cochain const &g)
{
	int nf = f.arity(), ng = g.arity();
	int arity = nf + ng - 1;
	int deg = f.internal_degree() + g.internal_degree();
	if (nf == 0)
		return zero_cochain(f.context_ptr(), std::max(arity, 0), deg);
	int gt = g.total_degree();
	return Cochain(f.context_ptr(), arity, deg, "(" + f.name() + " o " + g.name() + ")",
	               [f, g, nf, ng, gt](Arguments const &a) {
		               Element total = f.context().zero();
		               long prefix = 0; // sum_{j <= i} (|a_j| + 1)
		               for (int i = 0; i < nf; ++i)
		               {
			               if (i > 0)
				               prefix += a[i - 1].degree() + 1;
			               Arguments inner(a.begin() + i, a.begin() + i + ng);
			               Arguments outer(a.begin(), a.begin() + i);
			               outer.push_back(g(inner));
			               outer.insert(outer.end(), a.begin() + i + ng, a.end());
			               total += signed_element(parity_sign((gt + 1) * prefix), f(outer));
		               }
		               return total;
	               });
}

Cochain bracket(Cochain const &f, Cochain const &g)
{
	int s = parity_sign((f.total_degree() + 1) * (g.total_degree() + 1));
	auto fg = circle(f, g);
	auto gf = circle(g, f);
	return Cochain(f.context_ptr(), fg.arity(), fg.internal_degree(),
	               "[" + f.name() + ", " + g.name() + "]",
	               [fg, gf, s, nf = f.arity(), ng = g.arity()](Arguments const &a) {
		               Element r = nf > 0 ? fg(a) : fg.context().zero();
		               if (ng > 0)
			               r += signed_element(-s, gf(a));
		               return r;
	               });
}

Cochain delta(Cochain const &f)
{
	auto d = bracket(mult_cochain(f.context_ptr()), f);
	return Cochain(f.context_ptr(), d.arity(), d.internal_degree(), "delta " + f.name(),
	               [d](Arguments const &a) { return d(a); });
}

Cochain delta_explicit(Cochain const &f)
{
	if (f.arity() < 1)
		throw ValidationError("the expanded coboundary formula needs arity >= 1");
	int n = f.arity();
	int ft = f.total_degree();
	return Cochain(f.context_ptr(), n + 1, f.internal_degree(), "delta' " + f.name(),
	               [f, n, ft](Arguments const &a) {
		               auto const &ctx = f.context();
		               auto e = [&](int i) { // 1-based
			               long s = ft - i + 1;
			               for (int j = 0; j < i - 1; ++j)
				               s += a[j].degree();
			               return s;
		               };
		               Arguments tail(a.begin() + 1, a.end());
		               Element total = signed_element(
		                   -parity_sign(static_cast<long>(a[0].degree() + 1) * ft),
		                   ctx.bullet(a[0], f(tail)));
		               for (int i = 2; i <= n + 1; ++i)
		               {
			               Arguments merged(a.begin(), a.begin() + i - 2);
			               merged.push_back(ctx.bullet(a[i - 2], a[i - 1]));
			               merged.insert(merged.end(), a.begin() + i, a.end());
			               total += signed_element(-parity_sign(e(i)), f(merged));
		               }
		               Arguments head(a.begin(), a.begin() + n);
		               total += signed_element(parity_sign(e(n + 1)),
		                                       ctx.bullet(f(head), a[n]));
		               return total;
	               });
}

namespace {

Cochain cochain_d_with_sign(Cochain const &f, int sum_sign, std::string const &label)
{
	int ft = f.total_degree();
	return Cochain(f.context_ptr(), f.arity(), f.internal_degree() + 1,
	               label + " " + f.name(), [f, ft, sum_sign](Arguments const &a) {
		               auto const &ctx = f.context();
		               Element total = ctx.d(f(a));
		               long s = ft;
		               for (std::size_t i = 0; i < a.size(); ++i)
		               {
			               // e_i = |f| + |a_1| + .. + |a_{i-1}| - i + 1 (1-based i)
			               long e = s - static_cast<long>(i);
			               Arguments b = a;
			               b[i] = ctx.d(a[i]);
			               total += signed_element(sum_sign * parity_sign(e), f(b));
			               s += a[i].degree();
		               }
		               return total;
	               });
}

} // namespace

Cochain cochain_d(Cochain const &f) { return cochain_d_with_sign(f, 1, "d"); }

Cochain cochain_d_opposite_sign(Cochain const &f)
{
	return cochain_d_with_sign(f, -1, "d'");
}

Cochain h_postcompose(Cochain const &f)
{
	return Cochain(f.context_ptr(), f.arity(), f.internal_degree() - 1, "h " + f.name(),
	               [f](Arguments const &a) { return f.context().h(f(a)); });
}

Cochain operator+(Cochain const &f, Cochain const &g)
{
	if (f.arity() != g.arity() || f.internal_degree() != g.internal_degree())
		throw ValidationError("cannot add cochains of different shapes");
	return Cochain(f.context_ptr(), f.arity(), f.internal_degree(),
	               "(" + f.name() + " + " + g.name() + ")",
	               [f, g](Arguments const &a) { return f(a) + g(a); });
}

Cochain operator-(Cochain const &f, Cochain const &g)
{
	if (f.arity() != g.arity() || f.internal_degree() != g.internal_degree())
		throw ValidationError("cannot subtract cochains of different shapes");
	return Cochain(f.context_ptr(), f.arity(), f.internal_degree(),
	               "(" + f.name() + " - " + g.name() + ")",
	               [f, g](Arguments const &a) { return f(a) - g(a); });
}

Cochain operator*(Rational const &c, Cochain const &f)
{
	return Cochain(f.context_ptr(), f.arity(), f.internal_degree(),
	               to_string(c) + "*" + f.name(),
	               [f, c](Arguments const &a) { return f(a) * c; });
}

} // namespace stardef
