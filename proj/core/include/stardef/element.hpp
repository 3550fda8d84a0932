#pragma once

#include "stardef/polynomial.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace stardef {

// Precision value meaning "no truncation": the element is an exact
// polynomial in x and p.
inline constexpr int kExact = 1 << 28;

// Adds an offset to a precision, keeping kExact absorbing.
inline int shift_precision(int prec, int offset)
{
	return prec >= kExact ? kExact : prec + offset;
}

// A basis sector of the smash algebra: group element index and the set of
// dp-factors (bit i set <=> dp_{i+1} present, wedged in increasing order).
struct Sector
{
	int group = 0;
	std::uint32_t wedge = 0;

	int form_degree() const { return __builtin_popcount(wedge); }
	friend auto operator<=>(Sector const &, Sector const &) = default;
};

// Sign of dp_I ^ dp_J relative to dp_{I u J} in increasing order; 0 when
// I and J overlap.
int wedge_sign(std::uint32_t I, std::uint32_t J);

// An element sum_g sum_I f_{g,I}(x,p) dp_I g of the coresolution algebra.
//
// Coefficients are p-jets: for each form degree l the element carries a
// precision P_l, and every term of degree l with p-degree <= P_l is exact
// while higher p-degrees are unknown (and not stored). Exact elements have
// P_l = kExact for every l. A degree whose precision is finite is "present"
// even when no terms are stored, so a truncated zero still propagates its
// uncertainty through later operations.
class Element
{
  public:
	explicit Element(int dim = 1);

	static Element from_polynomial(Polynomial const &f, int group = 0,
	                               std::uint32_t wedge = 0, int precision = kExact);
	static Element constant(int dim, Rational const &c, int group = 0);
	static Element x(int dim, int i);
	static Element p(int dim, int i);
	static Element dp(int dim, int i);
	static Element group_element(int dim, int g);
	// A zero of form degree l with the given precision.
	static Element unknown(int dim, int l, int precision);

	int dim() const { return dim_; }
	std::map<Sector, Polynomial> const &parts() const { return parts_; }
	int precision(int l) const { return precision_[l]; }
	// Smallest precision over all form degrees.
	int precision() const;
	void set_precision(int l, int prec);

	bool is_zero() const { return parts_.empty(); }
	// Zero and exact in every degree.
	bool is_exact_zero() const;
	bool is_exact() const { return precision() >= kExact; }

	// Form degrees with stored terms or finite precision.
	std::vector<int> degrees() const;
	bool is_homogeneous() const { return degrees().size() <= 1; }
	// Form degree of a homogeneous nonzero element, else -1.
	int degree() const;
	Element degree_part(int l) const;
	std::vector<Element> homogeneous_components() const;

	Element group_part(int g) const;
	// x/p polynomial in the given sector (zero if absent).
	Polynomial part(Sector s) const;
	std::vector<int> group_support() const;

	// Adds f to sector s. The sum is truncated to the sector's precision.
	void add(Sector s, Polynomial const &f);

	Element &operator+=(Element const &o);
	Element &operator-=(Element const &o);
	Element &operator*=(Rational const &c);
	friend Element operator+(Element a, Element const &b) { return a += b; }
	friend Element operator-(Element a, Element const &b) { return a -= b; }
	friend Element operator*(Element a, Rational const &c) { return a *= c; }
	friend Element operator*(Rational const &c, Element a) { return a *= c; }
	Element operator-() const;

	// Lowers every degree's precision to at most prec.
	Element truncated(int prec) const;

	// True when every term of degree l with p-degree >= 1 vanishes and
	// no dp-factors are present.
	bool is_p_free() const;
	int max_x_degree() const;

	std::size_t hash() const;
	friend bool operator==(Element const &a, Element const &b);

  private:
	void check_dim(Element const &o) const;
	void trim(int l);

	int dim_;
	std::map<Sector, Polynomial> parts_;
	std::array<int, kMaxDim + 1> precision_;
};

// Compares two jets on their common window: equal when a - b vanishes for
// every degree through min(P_a, P_b).
bool agree_within_window(Element const &a, Element const &b);

// "(x1*p1 + 1)*dp[1,2]#g1 + ..." with an "O(p^k)" marker for truncated degrees.
std::string to_string(Element const &e);
inline std::ostream &operator<<(std::ostream &os, Element const &v)
{
	return os << to_string(v);
}

struct ElementHash
{
	std::size_t operator()(Element const &e) const { return e.hash(); }
};

} // namespace stardef
