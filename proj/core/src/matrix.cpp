#include "stardef/matrix.hpp"

#include "stardef/errors.hpp"

#include <algorithm>
#include <utility>

namespace stardef {

RatMatrix RatMatrix::identity(int n)
{
	RatMatrix m(n);
	for (int i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

RatMatrix RatMatrix::from_rows(std::vector<std::vector<Rational>> const &rows)
{
	int n = static_cast<int>(rows.size());
	RatMatrix m(n);
	for (int i = 0; i < n; ++i)
	{
		if (static_cast<int>(rows[i].size()) != n)
			throw DimensionMismatch("matrix is not square");
		for (int j = 0; j < n; ++j)
			m(i, j) = canonical(rows[i][j]);
	}
	return m;
}

RatMatrix RatMatrix::operator*(RatMatrix const &o) const
{
	if (o.n_ != n_)
		throw DimensionMismatch("matrix sizes differ");
	RatMatrix r(n_);
	for (int i = 0; i < n_; ++i)
		for (int k = 0; k < n_; ++k)
		{
			if ((*this)(i, k) == 0)
				continue;
			for (int j = 0; j < n_; ++j)
				r(i, j) += (*this)(i, k) * o(k, j);
		}
	return r;
}

RatMatrix RatMatrix::operator+(RatMatrix const &o) const
{
	if (o.n_ != n_)
		throw DimensionMismatch("matrix sizes differ");
	RatMatrix r(n_);
	for (std::size_t i = 0; i < a_.size(); ++i)
		r.a_[i] = a_[i] + o.a_[i];
	return r;
}

RatMatrix RatMatrix::operator-(RatMatrix const &o) const
{
	if (o.n_ != n_)
		throw DimensionMismatch("matrix sizes differ");
	RatMatrix r(n_);
	for (std::size_t i = 0; i < a_.size(); ++i)
		r.a_[i] = a_[i] - o.a_[i];
	return r;
}

RatMatrix RatMatrix::operator*(Rational const &c) const
{
	RatMatrix r = *this;
	Rational k = canonical(c);
	for (auto &v : r.a_)
		v *= k;
	return r;
}

RatMatrix RatMatrix::transpose() const
{
	RatMatrix r(n_);
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			r(j, i) = (*this)(i, j);
	return r;
}

RatMatrix RatMatrix::inverse() const
{
	RatMatrix a = *this;
	RatMatrix inv = identity(n_);
	for (int col = 0; col < n_; ++col)
	{
		int pivot = col;
		while (pivot < n_ && a(pivot, col) == 0)
			++pivot;
		if (pivot == n_)
			throw ValidationError("matrix is not invertible over the rationals");
		for (int j = 0; j < n_; ++j)
		{
			std::swap(a(col, j), a(pivot, j));
			std::swap(inv(col, j), inv(pivot, j));
		}
		Rational s = 1 / a(col, col);
		for (int j = 0; j < n_; ++j)
		{
			a(col, j) *= s;
			inv(col, j) *= s;
		}
		for (int i = 0; i < n_; ++i)
		{
			if (i == col || a(i, col) == 0)
				continue;
			Rational f = a(i, col);
			for (int j = 0; j < n_; ++j)
			{
				a(i, j) -= f * a(col, j);
				inv(i, j) -= f * inv(col, j);
			}
		}
	}
	return inv;
}

int RatMatrix::rank() const
{
	RatMatrix a = *this;
	int rank = 0;
	for (int col = 0; col < n_ && rank < n_; ++col)
	{
		int pivot = rank;
		while (pivot < n_ && a(pivot, col) == 0)
			++pivot;
		if (pivot == n_)
			continue;
		for (int j = 0; j < n_; ++j)
			std::swap(a(rank, j), a(pivot, j));
		for (int i = rank + 1; i < n_; ++i)
		{
			if (a(i, col) == 0)
				continue;
			Rational f = a(i, col) / a(rank, col);
			for (int j = col; j < n_; ++j)
				a(i, j) -= f * a(rank, j);
		}
		++rank;
	}
	return rank;
}

bool RatMatrix::is_antisymmetric() const
{
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			if ((*this)(i, j) != -(*this)(j, i))
				return false;
	return true;
}

bool RatMatrix::is_zero() const
{
	return std::all_of(a_.begin(), a_.end(), [](Rational const &v) { return v == 0; });
}

bool operator<(RatMatrix const &a, RatMatrix const &b)
{
	if (a.n_ != b.n_)
		return a.n_ < b.n_;
	for (std::size_t i = 0; i < a.a_.size(); ++i)
	{
		if (a.a_[i] < b.a_[i])
			return true;
		if (b.a_[i] < a.a_[i])
			return false;
	}
	return false;
}

} // namespace stardef
