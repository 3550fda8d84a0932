#include "stardef/group.hpp"

#include "stardef/errors.hpp"

#include <algorithm>
#include <string>

namespace stardef {

int MatrixGroup::index_of(RatMatrix const &m) const
{
	auto it = lookup_.find(m);
	return it == lookup_.end() ? -1 : it->second;
}

MatrixGroup close_group(int dim, std::vector<RatMatrix> const &generators,
                        int max_order)
{
	auto id = RatMatrix::identity(dim);
	for (auto const &g : generators)
	{
		if (g.size() != dim)
			throw DimensionMismatch("generator size " + std::to_string(g.size()) +
			                        " does not match dimension " +
			                        std::to_string(dim));
		(void)g.inverse();
	}

	std::vector<RatMatrix> found{id};
	std::map<RatMatrix, int> seen{{id, 0}};
	for (std::size_t next = 0; next < found.size(); ++next)
		for (auto const &g : generators)
		{
			auto prod = found[next] * g;
			if (seen.count(prod))
				continue;
			if (static_cast<int>(found.size()) >= max_order)
				throw ValidationError("group closure exceeds " +
				                      std::to_string(max_order) +
				                      " elements (infinite or too large)");
			seen.emplace(prod, static_cast<int>(found.size()));
			found.push_back(std::move(prod));
		}

	std::sort(found.begin() + 1, found.end());

	MatrixGroup G;
	G.dim_ = dim;
	G.elements_ = std::move(found);
	int n = G.order();
	for (int i = 0; i < n; ++i)
		G.lookup_.emplace(G.elements_[i], i);

	G.table_.assign(n, std::vector<int>(n));
	G.inverse_.assign(n, -1);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
		{
			int c = G.index_of(G.elements_[a] * G.elements_[b]);
			if (c < 0)
				throw ValidationError("generated set is not closed");
			G.table_[a][b] = c;
			if (c == 0)
				G.inverse_[a] = b;
		}

	G.class_of_.assign(n, -1);
	for (int g = 0; g < n; ++g)
	{
		if (G.class_of_[g] >= 0)
			continue;
		std::vector<int> cls;
		for (int a = 0; a < n; ++a)
		{
			int c = G.conjugate(a, g);
			if (G.class_of_[c] < 0)
			{
				G.class_of_[c] = static_cast<int>(G.classes_.size());
				cls.push_back(c);
			}
		}
		std::sort(cls.begin(), cls.end());
		G.classes_.push_back(std::move(cls));
	}

	G.codim_.resize(n);
	for (int g = 0; g < n; ++g)
		G.codim_[g] = (id - G.elements_[g]).rank();
	return G;
}

std::string check_group_table(MatrixGroup const &G)
{
	int n = G.order();
	for (int a = 0; a < n; ++a)
	{
		std::vector<bool> row(n), col(n);
		for (int b = 0; b < n; ++b)
		{
			row[G.multiply(a, b)] = true;
			col[G.multiply(b, a)] = true;
		}
		if (std::count(row.begin(), row.end(), false) ||
		    std::count(col.begin(), col.end(), false))
			return "table is not a latin square at element " + std::to_string(a);
		if (G.multiply(0, a) != a || G.multiply(a, 0) != a)
			return "identity law fails at element " + std::to_string(a);
		if (G.multiply(a, G.inverse(a)) != 0 || G.multiply(G.inverse(a), a) != 0)
			return "inverse law fails at element " + std::to_string(a);
	}
	if (n <= 128)
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b)
				for (int c = 0; c < n; ++c)
					if (G.multiply(G.multiply(a, b), c) !=
					    G.multiply(a, G.multiply(b, c)))
						return "associativity fails";
	return {};
}

std::vector<int> ReflectionData::reflections() const
{
	std::vector<int> out;
	for (std::size_t g = 0; g < is_reflection.size(); ++g)
		if (is_reflection[g])
			out.push_back(static_cast<int>(g));
	return out;
}

ReflectionData reflection_scan(MatrixGroup const &G, RatMatrix const &pi)
{
	if (pi.size() != G.dim())
		throw DimensionMismatch("pi has the wrong size");
	if (!pi.is_antisymmetric())
		throw ValidationError("pi is not antisymmetric");
	if (pi.rank() != pi.size())
		throw ValidationError("pi is degenerate");

	ReflectionData R;
	R.pi = pi;
	auto id = RatMatrix::identity(G.dim());
	for (int g = 0; g < G.order(); ++g)
	{
		auto const &m = G.element(g);
		if (!(m * pi * m.transpose() == pi))
			throw ValidationError("group element " + std::to_string(g) +
			                      " does not preserve pi");
		auto one_minus = id - m;
		R.l.push_back(G.fixed_codim(g));
		R.is_reflection.push_back(G.fixed_codim(g) == 2);
		R.pi_gamma.push_back(one_minus * pi * one_minus.transpose());
	}
	return R;
}

ClassFunction validate_class_function(MatrixGroup const &G,
                                      std::map<int, Rational> const &raw)
{
	std::map<int, Rational> by_class;
	for (auto const &[g, raw_value] : raw)
	{
		Rational v = canonical(raw_value);
		if (g < 0 || g >= G.order())
			throw ValidationError("class function key " + std::to_string(g) +
			                      " is not a group element index");
		if (G.fixed_codim(g) != 2)
			throw ValidationError("element " + std::to_string(g) +
			                      " is not a symplectic reflection (l = " +
			                      std::to_string(G.fixed_codim(g)) + ")");
		int cls = G.class_of(g);
		auto [it, inserted] = by_class.emplace(cls, v);
		if (!inserted && it->second != v)
			throw ValidationError("conjugate elements " + std::to_string(g) +
			                      " and " + std::to_string(G.classes()[cls].front()) +
			                      " have different values");
	}
	ClassFunction c;
	c.values_.assign(G.order(), Rational(0));
	for (int g = 0; g < G.order(); ++g)
	{
		if (G.fixed_codim(g) != 2)
			continue;
		auto it = by_class.find(G.class_of(g));
		c.values_[g] = it == by_class.end() ? Rational(0) : it->second;
		c.by_rep_[G.representative(g)] = c.values_[g];
	}
	return c;
}

} // namespace stardef
