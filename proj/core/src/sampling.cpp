#include "stardef/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace stardef {

int Sampler::uniform(int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::small_rational()
{
	int num = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
	Rational q(num, uniform(1, 3));
	q.canonicalize();
	return q;
}

Monomial Sampler::monomial(int dim, int max_degree, bool p_free)
{
	Monomial m;
	int deg = uniform(0, max_degree);
	int slots = p_free ? dim : 2 * dim;
	for (int k = 0; k < deg; ++k)
	{
		int v = uniform(0, slots - 1);
		if (v < dim)
			m.set_x(v, m.x(v) + 1);
		else
			m.set_p(v - dim, m.p(v - dim) + 1);
	}
	return m;
}

Polynomial Sampler::polynomial(int dim, int max_degree, int terms, bool p_free)
{
	std::vector<Polynomial::Term> out;
	for (int k = 0; k < terms; ++k)
		out.emplace_back(monomial(dim, max_degree, p_free), small_rational());
	return Polynomial::from_terms(dim, std::move(out));
}

Element Sampler::element(int dim, int group_order, int max_degree, int max_wedge,
                         int form_degree, int terms)
{
	Element e(dim);
	for (int k = 0; k < terms; ++k)
	{
		int l = form_degree >= 0 ? form_degree : uniform(0, std::min(max_wedge, dim));
		std::vector<int> idx(dim);
		std::iota(idx.begin(), idx.end(), 0);
		std::shuffle(idx.begin(), idx.end(), rng_);
		std::uint32_t wedge = 0;
		for (int i = 0; i < l; ++i)
			wedge |= 1u << idx[i];
		int g = group_order > 1 ? uniform(0, group_order - 1) : 0;
		e.add({g, wedge}, Polynomial::monomial(dim, monomial(dim, max_degree, false),
		                                       small_rational()));
	}
	return e;
}

} // namespace stardef
