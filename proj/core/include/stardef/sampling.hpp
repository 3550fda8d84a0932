#pragma once

#include "stardef/element.hpp"

#include <cstdint>
#include <random>

namespace stardef {

// Deterministic generators for randomized checks. Everything is driven by a
// std::mt19937_64 so a seed reproduces a whole run.
class Sampler
{
  public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	int uniform(int lo, int hi); // inclusive
	Rational small_rational();  // numerators in [-3, 3], denominators in 1..3, nonzero

	// A monomial in x only (p_free) or in x and p, of total degree <= max_degree.
	Monomial monomial(int dim, int max_degree, bool p_free);
	Polynomial polynomial(int dim, int max_degree, int terms, bool p_free);

	// Random element of the pool used by identity suites: a few terms, each a
	// monomial of degree <= max_degree times a dp-factor of degree <= max_wedge,
	// optionally tagged by a random group element. Homogeneous when
	// form_degree >= 0.
	Element element(int dim, int group_order, int max_degree, int max_wedge,
	                int form_degree = -1, int terms = 2);

	std::mt19937_64 &engine() { return rng_; }

  private:
	std::mt19937_64 rng_;
};

} // namespace stardef
