#pragma once

#include "stardef/rational.hpp"

#include <compare>
#include <vector>

namespace stardef {

// Dense square matrix over the rationals, row-major.
class RatMatrix
{
  public:
	explicit RatMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
	static RatMatrix identity(int n);
	static RatMatrix from_rows(std::vector<std::vector<Rational>> const &rows);

	int size() const { return n_; }
	Rational &operator()(int i, int j) { return a_[i * n_ + j]; }
	Rational const &operator()(int i, int j) const { return a_[i * n_ + j]; }

	RatMatrix operator*(RatMatrix const &o) const;
	RatMatrix operator+(RatMatrix const &o) const;
	RatMatrix operator-(RatMatrix const &o) const;
	RatMatrix operator*(Rational const &c) const;
	RatMatrix transpose() const;
	// Throws ValidationError when singular.
	RatMatrix inverse() const;
	int rank() const;
	bool is_antisymmetric() const;
	bool is_zero() const;

	std::vector<Rational> const &entries() const { return a_; }

	friend bool operator==(RatMatrix const &, RatMatrix const &) = default;
	// Lexicographic on row-major entries.
	friend bool operator<(RatMatrix const &a, RatMatrix const &b);

  private:
	int n_;
	std::vector<Rational> a_;
};

} // namespace stardef
