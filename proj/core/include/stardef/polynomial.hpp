#pragma once

#include "stardef/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace stardef {

// Ambient dimensions above this are rejected; exponents are stored in bytes.
inline constexpr int kMaxDim = 8;
inline constexpr int kMaxExponent = 255;

struct Variable
{
	enum class Kind { x, p };
	Kind kind;
	int index; // 0-based
};

// Exponent vector over x^1..x^n followed by p_1..p_n. Slots beyond the
// ambient dimension stay zero, so comparisons ignore the dimension.
class Monomial
{
  public:
	Monomial() = default;

	int x(int i) const { return exps_[i]; }
	int p(int i) const { return exps_[kMaxDim + i]; }
	int get(Variable v) const;
	void set_x(int i, int e);
	void set_p(int i, int e);
	void set(Variable v, int e);

	int x_degree() const;
	int p_degree() const;
	int degree() const { return x_degree() + p_degree(); }

	// Throws ValidationError when an exponent would overflow.
	Monomial operator*(Monomial const &o) const;
	bool divides(Monomial const &o) const;

	std::array<std::uint8_t, 2 * kMaxDim> const &raw() const { return exps_; }
	std::size_t hash() const;

	friend bool operator==(Monomial const &, Monomial const &) = default;

  private:
	std::array<std::uint8_t, 2 * kMaxDim> exps_{};
};

// Canonical order: higher total degree first, ties broken lexicographically
// on (x exponents, p exponents) with larger exponents first.
struct MonomialOrder
{
	bool operator()(Monomial const &a, Monomial const &b) const;
};

class Polynomial
{
  public:
	using Term = std::pair<Monomial, Rational>;

	explicit Polynomial(int dim = 1);

	static Polynomial constant(int dim, Rational const &c);
	static Polynomial x(int dim, int i);
	static Polynomial p(int dim, int i);
	static Polynomial monomial(int dim, Monomial const &m,
	                           Rational const &c = 1);
	// Sorts, merges equal monomials and drops zeros.
	static Polynomial from_terms(int dim, std::vector<Term> terms);
	// Same, for coefficients already in canonical form (skips the gcds).
	static Polynomial from_canonical_terms(int dim, std::vector<Term> terms);

	int dim() const { return dim_; }
	std::vector<Term> const &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	Rational coefficient(Monomial const &m) const;

	Polynomial &operator+=(Polynomial const &o);
	Polynomial &operator-=(Polynomial const &o);
	Polynomial &operator*=(Polynomial const &o);
	Polynomial &operator*=(Rational const &c);

	friend Polynomial operator+(Polynomial a, Polynomial const &b)
	{
		return a += b;
	}
	friend Polynomial operator-(Polynomial a, Polynomial const &b)
	{
		return a -= b;
	}
	friend Polynomial operator*(Polynomial const &a, Polynomial const &b);
	friend Polynomial operator*(Polynomial a, Rational const &c)
	{
		return a *= c;
	}
	friend Polynomial operator*(Rational const &c, Polynomial a)
	{
		return a *= c;
	}
	Polynomial operator-() const;

	// Multiplies every term by the monomial m and the scalar c.
	Polynomial times_monomial(Monomial const &m, Rational const &c) const;

	Polynomial partial(Variable v) const;
	Polynomial partial_x(int i) const { return partial({Variable::Kind::x, i}); }
	Polynomial partial_p(int i) const { return partial({Variable::Kind::p, i}); }

	int x_degree() const;
	int p_degree() const;
	int degree() const;

	// Drops every term of p-degree above max_p.
	Polynomial truncated_p(int max_p) const;
	// Substitutes p = 0.
	Polynomial p_free_part() const;
	bool is_p_free() const;

	std::size_t hash() const;
	friend bool operator==(Polynomial const &a, Polynomial const &b);

  private:
	void check_dim(Polynomial const &o) const;

	int dim_;
	std::vector<Term> terms_;
};

// Canonical text form, e.g. "x1^2*x2 - 3/2*p1 + 1".
std::string to_string(Polynomial const &f);
inline std::ostream &operator<<(std::ostream &os, Polynomial const &v)
{
	return os << to_string(v);
}

} // namespace stardef
