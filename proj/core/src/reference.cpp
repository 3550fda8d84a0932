#include "stardef/reference.hpp"

#include "stardef/errors.hpp"

#include <map>
#include <vector>

namespace stardef {

namespace {

// Sparse polynomial over an arbitrary number of variables, kept deliberately
// separate from Polynomial so the reference shares no code with the engine
// beyond Rational.
struct Poly
{
	using Exps = std::vector<int>;
	int nvars = 0;
	std::map<Exps, Rational> terms;

	explicit Poly(int n) : nvars(n) {}

	static Poly constant(int n, Rational const &c)
	{
		Poly p(n);
		if (c != 0)
			p.terms[Exps(n, 0)] = c;
		return p;
	}
	static Poly variable(int n, int v)
	{
		Poly p(n);
		Exps e(n, 0);
		e[v] = 1;
		p.terms[e] = 1;
		return p;
	}

	void add_term(Exps const &e, Rational const &c)
	{
		auto &slot = terms[e];
		slot += c;
		if (slot == 0)
			terms.erase(e);
	}
	Poly &operator+=(Poly const &o)
	{
		for (auto const &[e, c] : o.terms)
			add_term(e, c);
		return *this;
	}
	Poly operator*(Poly const &o) const
	{
		Poly r(nvars);
		for (auto const &[e1, c1] : terms)
			for (auto const &[e2, c2] : o.terms)
			{
				Exps e(nvars);
				for (int i = 0; i < nvars; ++i)
					e[i] = e1[i] + e2[i];
				r.add_term(e, c1 * c2);
			}
		return r;
	}
	Poly scaled(Rational const &c) const
	{
		Poly r(nvars);
		if (c == 0)
			return r;
		for (auto const &[e, v] : terms)
			r.terms[e] = v * c;
		return r;
	}
	Poly derivative(int v) const
	{
		Poly r(nvars);
		for (auto const &[e, c] : terms)
			if (e[v] > 0)
			{
				Exps d = e;
				--d[v];
				r.add_term(d, c * e[v]);
			}
		return r;
	}
	bool empty() const { return terms.empty(); }
};

// Substitutes variable i of p (an nvars-variable polynomial) by images[i],
// for the first images.size() variables; the remaining variables of p are
// mapped to variables offset + (j - images.size()) of the target ring.
Poly substitute(Poly const &p, std::vector<Poly> const &images, int target_vars,
                int offset)
{
	Poly r(target_vars);
	int k = static_cast<int>(images.size());
	std::map<std::pair<int, int>, Poly> powers;
	auto power = [&](int i, int e) -> Poly const & {
		auto it = powers.find({i, e});
		if (it != powers.end())
			return it->second;
		Poly v = Poly::constant(target_vars, 1);
		for (int k = 0; k < e; ++k)
			v = v * images[i];
		return powers.emplace(std::make_pair(i, e), std::move(v)).first->second;
	};
	for (auto const &[e, c] : p.terms)
	{
		Poly t = Poly::constant(target_vars, c);
		Poly::Exps rest(target_vars, 0);
		for (int i = 0; i < p.nvars; ++i)
		{
			if (e[i] == 0)
				continue;
			if (i < k)
				t = t * power(i, e[i]);
			else
				rest[offset + i - k] += e[i];
		}
		Poly mono(target_vars);
		mono.terms[rest] = 1;
		r += t * mono;
	}
	return r;
}

Poly from_polynomial(Polynomial const &f, int nvars, int offset)
{
	Poly r(nvars);
	for (auto const &[m, c] : f.terms())
	{
		Poly::Exps e(nvars, 0);
		for (int i = 0; i < f.dim(); ++i)
		{
			if (m.p(i) != 0)
				throw ValidationError("reference bracket inputs must be p-free");
			e[offset + i] = m.x(i);
		}
		r.add_term(e, c);
	}
	return r;
}

Polynomial to_polynomial(Poly const &p, int dim)
{
	std::vector<Polynomial::Term> out;
	for (auto const &[e, c] : p.terms)
	{
		Monomial m;
		for (int i = 0; i < dim; ++i)
			m.set_x(i, e[i]);
		out.emplace_back(m, c);
	}
	return Polynomial::from_terms(dim, std::move(out));
}

using Vec = std::vector<Rational>;

// Bilinear pairing pi(q, r) of two covectors.
Rational pairing(RatMatrix const &pi, Vec const &q, Vec const &r)
{
	Rational s = 0;
	for (int i = 0; i < pi.size(); ++i)
		for (int j = 0; j < pi.size(); ++j)
			s += pi(i, j) * q[i] * r[j];
	return s;
}

// Covector q transformed as a row vector: (q g)_j = sum_k q_k g_{kj}.
Vec row_times(Vec const &q, RatMatrix const &g)
{
	int n = g.size();
	Vec r(n, Rational(0));
	for (int j = 0; j < n; ++j)
		for (int k = 0; k < n; ++k)
			r[j] += q[k] * g(k, j);
	return r;
}

Vec unit(int n, int i)
{
	Vec v(n, Rational(0));
	v[i] = 1;
	return v;
}

// pi_g^{ij} = pi(e_i - e_i g, e_j - e_j g).
RatMatrix twisted_pi(RatMatrix const &pi, RatMatrix const &g)
{
	int n = pi.size();
	RatMatrix r(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			auto qi = unit(n, i), qj = unit(n, j);
			auto gi = row_times(qi, g), gj = row_times(qj, g);
			for (int k = 0; k < n; ++k)
			{
				qi[k] -= gi[k];
				qj[k] -= gj[k];
			}
			r(i, j) = pairing(pi, qi, qj);
		}
	return r;
}

// The point x -> (1 - t) x + t g^{-1} x, as images of x^1..x^n in the ring
// (x^1..x^n, s, w); t is variable `tvar`.
std::vector<Poly> interpolated_point(RatMatrix const &ginv, int n, int tvar)
{
	int nv = n + 2;
	std::vector<Poly> images;
	for (int i = 0; i < n; ++i)
	{
		Poly img = Poly::variable(nv, i);
		Poly t = Poly::variable(nv, tvar);
		for (int j = 0; j < n; ++j)
		{
			Rational c = ginv(i, j) - (i == j ? Rational(1) : Rational(0));
			if (c != 0)
				img += (t * Poly::variable(nv, j)).scaled(c);
		}
		images.push_back(std::move(img));
	}
	return images;
}

// int_{0<w<s<1} over variables s = n, w = n + 1 of a polynomial in
// (x^1..x^n, s, w), returning a polynomial in x.
Poly simplex_integral(Poly const &f, int n)
{
	Poly r(n);
	for (auto const &[e, c] : f.terms)
	{
		int a = e[n], b = e[n + 1];
		Poly::Exps ex(e.begin(), e.begin() + n);
		r.add_term(ex, c / Rational((b + 1) * (a + b + 2)));
	}
	return r;
}

Element add_group_part(Element e, Polynomial const &f, int g)
{
	e.add({g, 0}, f);
	return e;
}

Polynomial moyal_part(RatMatrix const &pi, Polynomial const &a, Polynomial const &b)
{
	int n = pi.size();
	Poly pa = from_polynomial(a, n, 0), pb = from_polynomial(b, n, 0);
	Poly r(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (pi(i, j) != 0)
				r += (pa.derivative(i) * pb.derivative(j)).scaled(pi(i, j) / 2);
	return to_polynomial(r, n);
}

Polynomial smash_part(RatMatrix const &pi, RatMatrix const &g, Polynomial const &a,
                      Polynomial const &b)
{
	int n = pi.size();
	auto ginv = g.inverse();
	auto pig = twisted_pi(pi, g);
	Poly pa = from_polynomial(a, n, 0), pb = from_polynomial(b, n, 0);
	auto ys = interpolated_point(ginv, n, n);
	auto yw = interpolated_point(ginv, n, n + 1);
	Poly integrand(n + 2);
	for (int i = 0; i < n; ++i)
	{
		auto da = substitute(pa.derivative(i), ys, n + 2, 0);
		for (int j = 0; j < n; ++j)
		{
			if (pig(i, j) == 0)
				continue;
			auto db = substitute(pb.derivative(j), yw, n + 2, 0);
			integrand += (da * db).scaled(pig(i, j));
		}
	}
	return to_polynomial(simplex_integral(integrand, n), n);
}

Polynomial weyl_part(RatMatrix const &pi, RatMatrix const &g, Polynomial const &a,
                     Polynomial const &b)
{
	int n = pi.size();
	// Ring for the operator stage: x1 (n), x2 (n), s, w.
	int nv = 2 * n + 2;
	int s_var = 2 * n, w_var = 2 * n + 1;
	Poly G = from_polynomial(a, nv, 0) * from_polynomial(b, nv, n);

	// Covectors are represented componentwise: comp[i] is a vector over the
	// 2n derivative slots giving the i-th component of the covector.
	using Cov = std::vector<Vec>;
	auto p_of = [&](int which) {
		Cov c(n, Vec(2 * n, Rational(0)));
		for (int i = 0; i < n; ++i)
			c[i][which * n + i] = 1;
		return c;
	};
	auto act = [&](Cov const &q) { // (q g)_j = sum_k q_k g_{kj}
		Cov r(n, Vec(2 * n, Rational(0)));
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				if (g(k, j) != 0)
					for (int t = 0; t < 2 * n; ++t)
						r[j][t] += q[k][t] * g(k, j);
		return r;
	};
	auto lin = [&](std::vector<std::pair<Rational, Cov>> const &parts) {
		Cov r(n, Vec(2 * n, Rational(0)));
		for (auto const &[c, q] : parts)
			for (int i = 0; i < n; ++i)
				for (int t = 0; t < 2 * n; ++t)
					r[i][t] += c * q[i][t];
		return r;
	};
	struct Entry
	{
		int a, b;
		Poly coeff;
	};
	std::vector<Entry> Q, twisted;
	auto add = [&](std::vector<Entry> &op, Cov const &u, Cov const &v, Poly const &factor) {
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				if (pi(i, j) == 0)
					continue;
				for (int sa = 0; sa < 2 * n; ++sa)
				{
					if (u[i][sa] == 0)
						continue;
					for (int sb = 0; sb < 2 * n; ++sb)
						if (v[j][sb] != 0)
							op.push_back({sa, sb, factor.scaled(pi(i, j) * u[i][sa] * v[j][sb])});
				}
			}
	};

	auto p1 = p_of(0), p2 = p_of(1);
	auto gp1 = act(p1), gp2 = act(p2);
	Poly one = Poly::constant(nv, 1);
	Poly s = Poly::variable(nv, s_var), w = Poly::variable(nv, w_var);
	add(Q, p2, p1, one);
	add(Q, p1, lin({{1, p2}, {-1, gp2}, {-1, gp1}}), s);
	add(Q, p2, lin({{1, p1}, {-1, gp1}, {-1, gp2}}), w);
	add(Q, p1, gp1, s * s);
	add(Q, p1, gp2, s * w);
	add(Q, p2, gp1, s * w);
	add(Q, p2, gp2, w * w);
	// pi_g(p1, p2) = pi(p1 - p1 g, p2 - p2 g)
	add(twisted, lin({{1, p1}, {-1, gp1}}), lin({{1, p2}, {-1, gp2}}), one);

	auto apply = [&](std::vector<Entry> const &op, Poly const &f) {
		Poly r(nv);
		for (auto const &e : op)
		{
			auto d = f.derivative(e.a).derivative(e.b);
			if (!d.empty())
				r += e.coeff * d;
		}
		return r;
	};

	// exp(Q) pi_g(p1, p2) G, summed until the derivatives run out.
	Poly term = apply(twisted, G);
	Poly total = term;
	for (int k = 1; !term.empty(); ++k)
	{
		term = apply(Q, term).scaled(Rational(1, k));
		total += term;
	}

	// exp(<p1, y1> + <p2, y2>) at x1 = x2 = 0 evaluates at x1 = y1, x2 = y2.
	auto ginv = g.inverse();
	int out_vars = n + 2; // x, s, w
	std::vector<Poly> images;
	auto y1 = interpolated_point(ginv, n, n);
	auto y2 = interpolated_point(ginv, n, n + 1);
	images.insert(images.end(), y1.begin(), y1.end());
	images.insert(images.end(), y2.begin(), y2.end());
	// s and w of the operator ring map to s and w of the output ring.
	auto evaluated = substitute(total, images, out_vars, n);
	return to_polynomial(simplex_integral(evaluated, n), n);
}

Element closed_form(Preset const &preset, Polynomial const &a, Polynomial const &b)
{
	auto const &cfg = preset.config;
	int n = cfg.dim;
	if (a.dim() != n || b.dim() != n)
		throw DimensionMismatch("reference bracket inputs have the wrong dimension");
	Element r(n);
	auto const &pi = cfg.pi;
	if (cfg.preset != PresetKind::weyl_smash)
		r = add_group_part(r, moyal_part(pi, a, b), 0);
	if (cfg.preset == PresetKind::moyal)
		return r;
	auto const &G = *preset.group;
	for (int g = 0; g < G.order(); ++g)
	{
		auto const &m = G.element(g);
		auto one_minus = RatMatrix::identity(n) - m;
		if (one_minus.rank() != 2 || preset.c(g) == 0)
			continue;
		auto part = cfg.preset == PresetKind::smash ? smash_part(pi, m, a, b)
		                                            : weyl_part(pi, m, a, b);
		r = add_group_part(r, part * preset.c(g), g);
	}
	return r;
}

} // namespace

Element reference_mu1_literal(Preset const &preset, Polynomial const &a, Polynomial const &b)
{
	return closed_form(preset, a, b);
}

Element reference_mu1(Preset const &preset, Polynomial const &a, Polynomial const &b)
{
	return -closed_form(preset, b, a);
}

} // namespace stardef
