#include "stardef/polynomial.hpp"

#include "stardef/errors.hpp"

#include <algorithm>
#include <numeric>

namespace stardef {

int Monomial::get(Variable v) const
{
	return v.kind == Variable::Kind::x ? x(v.index) : p(v.index);
}

void Monomial::set_x(int i, int e)
{
	if (e < 0 || e > kMaxExponent)
		throw ValidationError("exponent out of range");
	exps_[i] = static_cast<std::uint8_t>(e);
}

void Monomial::set_p(int i, int e)
{
	if (e < 0 || e > kMaxExponent)
		throw ValidationError("exponent out of range");
	exps_[kMaxDim + i] = static_cast<std::uint8_t>(e);
}

void Monomial::set(Variable v, int e)
{
	if (v.kind == Variable::Kind::x)
		set_x(v.index, e);
	else
		set_p(v.index, e);
}

int Monomial::x_degree() const
{
	return std::accumulate(exps_.begin(), exps_.begin() + kMaxDim, 0);
}

int Monomial::p_degree() const
{
	return std::accumulate(exps_.begin() + kMaxDim, exps_.end(), 0);
}

Monomial Monomial::operator*(Monomial const &o) const
{
	Monomial r;
	for (std::size_t i = 0; i < exps_.size(); ++i)
	{
		int e = exps_[i] + o.exps_[i];
		if (e > kMaxExponent)
			throw ValidationError("monomial exponent overflow");
		r.exps_[i] = static_cast<std::uint8_t>(e);
	}
	return r;
}

bool Monomial::divides(Monomial const &o) const
{
	for (std::size_t i = 0; i < exps_.size(); ++i)
		if (exps_[i] > o.exps_[i])
			return false;
	return true;
}

std::size_t Monomial::hash() const
{
	std::uint64_t lo = 0, hi = 0;
	for (int i = 0; i < kMaxDim; ++i)
	{
		lo = (lo << 8) | exps_[i];
		hi = (hi << 8) | exps_[kMaxDim + i];
	}
	std::uint64_t h = lo * 0x9e3779b97f4a7c15ull ^ (hi + 0x7f4a7c159e3779b9ull);
	return static_cast<std::size_t>(h ^ (h >> 29));
}

bool MonomialOrder::operator()(Monomial const &a, Monomial const &b) const
{
	int da = a.degree(), db = b.degree();
	if (da != db)
		return da > db;
	return a.raw() > b.raw();
}

Polynomial::Polynomial(int dim) : dim_(dim)
{
	if (dim < 1 || dim > kMaxDim)
		throw ValidationError("ambient dimension must be in 1.." +
		                      std::to_string(kMaxDim));
}

Polynomial Polynomial::constant(int dim, Rational const &c)
{
	return monomial(dim, Monomial{}, c);
}

Polynomial Polynomial::x(int dim, int i)
{
	if (i < 0 || i >= dim)
		throw ValidationError("x-variable index out of range");
	Monomial m;
	m.set_x(i, 1);
	return monomial(dim, m);
}

Polynomial Polynomial::p(int dim, int i)
{
	if (i < 0 || i >= dim)
		throw ValidationError("p-variable index out of range");
	Monomial m;
	m.set_p(i, 1);
	return monomial(dim, m);
}

Polynomial Polynomial::monomial(int dim, Monomial const &m, Rational const &c)
{
	Polynomial f(dim);
	if (c != 0)
		f.terms_.emplace_back(m, canonical(c));
	return f;
}

Polynomial Polynomial::from_terms(int dim, std::vector<Term> terms)
{
	for (auto &t : terms)
		t.second.canonicalize();
	return from_canonical_terms(dim, std::move(terms));
}

Polynomial Polynomial::from_canonical_terms(int dim, std::vector<Term> terms)
{
	Polynomial f(dim);
	// Sorting packed keys is much cheaper than comparing monomials through
	// MonomialOrder; the key orders exactly the same way.
	using Key = std::array<std::uint8_t, 2 * kMaxDim + 1>;
	std::vector<std::pair<Key, std::uint32_t>> order(terms.size());
	for (std::size_t k = 0; k < terms.size(); ++k)
	{
		auto const &raw = terms[k].first.raw();
		Key &key = order[k].first;
		key[0] = static_cast<std::uint8_t>(255 - terms[k].first.degree());
		for (std::size_t i = 0; i < raw.size(); ++i)
			key[i + 1] = static_cast<std::uint8_t>(255 - raw[i]);
		order[k].second = static_cast<std::uint32_t>(k);
	}
	std::sort(order.begin(), order.end());
	f.terms_.reserve(terms.size());
	for (auto const &[key, k] : order)
	{
		auto &t = terms[k];
		if (!f.terms_.empty() && f.terms_.back().first == t.first)
			f.terms_.back().second += t.second;
		else
		{
			if (!f.terms_.empty() && f.terms_.back().second == 0)
				f.terms_.pop_back();
			f.terms_.push_back(std::move(t));
		}
	}
	if (!f.terms_.empty() && f.terms_.back().second == 0)
		f.terms_.pop_back();
	return f;
}

Rational Polynomial::coefficient(Monomial const &m) const
{
	MonomialOrder less;
	auto it = std::lower_bound(
	    terms_.begin(), terms_.end(), m,
	    [&](Term const &t, Monomial const &k) { return less(t.first, k); });
	if (it != terms_.end() && it->first == m)
		return it->second;
	return 0;
}

void Polynomial::check_dim(Polynomial const &o) const
{
	if (o.dim_ != dim_)
		throw DimensionMismatch("polynomial dimensions differ: " +
		                        std::to_string(dim_) + " vs " +
		                        std::to_string(o.dim_));
}

namespace {

template <class Combine>
std::vector<Polynomial::Term> merge_terms(std::vector<Polynomial::Term> const &a,
                                          std::vector<Polynomial::Term> const &b,
                                          Combine combine, bool negate_b)
{
	MonomialOrder less;
	std::vector<Polynomial::Term> out;
	out.reserve(a.size() + b.size());
	auto i = a.begin(), j = b.begin();
	while (i != a.end() || j != b.end())
	{
		if (j == b.end() || (i != a.end() && less(i->first, j->first)))
			out.push_back(*i++);
		else if (i == a.end() || less(j->first, i->first))
		{
			out.emplace_back(j->first, negate_b ? Rational(-j->second) : j->second);
			++j;
		}
		else
		{
			Rational c = combine(i->second, j->second);
			if (c != 0)
				out.emplace_back(i->first, std::move(c));
			++i;
			++j;
		}
	}
	return out;
}

} // namespace

Polynomial &Polynomial::operator+=(Polynomial const &o)
{
	check_dim(o);
	if (o.terms_.empty())
		return *this;
	terms_ = merge_terms(
	    terms_, o.terms_,
	    [](Rational const &a, Rational const &b) { return Rational(a + b); },
	    false);
	return *this;
}

Polynomial &Polynomial::operator-=(Polynomial const &o)
{
	check_dim(o);
	if (o.terms_.empty())
		return *this;
	terms_ = merge_terms(
	    terms_, o.terms_,
	    [](Rational const &a, Rational const &b) { return Rational(a - b); },
	    true);
	return *this;
}

Polynomial operator*(Polynomial const &a, Polynomial const &b)
{
	a.check_dim(b);
	std::vector<Polynomial::Term> raw;
	raw.reserve(a.terms_.size() * b.terms_.size());
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_)
			raw.emplace_back(ma * mb, ca * cb);
	return Polynomial::from_canonical_terms(a.dim_, std::move(raw));
}

Polynomial &Polynomial::operator*=(Polynomial const &o)
{
	*this = *this * o;
	return *this;
}

Polynomial &Polynomial::operator*=(Rational const &c)
{
	if (c == 0)
		terms_.clear();
	else
	{
		Rational k = canonical(c);
		for (auto &t : terms_)
			t.second *= k;
	}
	return *this;
}

Polynomial Polynomial::operator-() const
{
	Polynomial r = *this;
	for (auto &t : r.terms_)
		t.second = -t.second;
	return r;
}

Polynomial Polynomial::times_monomial(Monomial const &m, Rational const &c) const
{
	// Multiplying by a monomial preserves the grlex order.
	Polynomial r(dim_);
	if (c == 0)
		return r;
	r.terms_.reserve(terms_.size());
	for (auto const &[mt, ct] : terms_)
		r.terms_.emplace_back(mt * m, ct * c);
	return r;
}

Polynomial Polynomial::partial(Variable v) const
{
	if (v.index < 0 || v.index >= dim_)
		throw ValidationError("derivative index out of range");
	std::vector<Term> raw;
	raw.reserve(terms_.size());
	for (auto const &[m, c] : terms_)
	{
		int e = m.get(v);
		if (e == 0)
			continue;
		Monomial d = m;
		d.set(v, e - 1);
		raw.emplace_back(d, c * e);
	}
	return from_canonical_terms(dim_, std::move(raw));
}

int Polynomial::x_degree() const
{
	int d = 0;
	for (auto const &t : terms_)
		d = std::max(d, t.first.x_degree());
	return d;
}

int Polynomial::p_degree() const
{
	int d = 0;
	for (auto const &t : terms_)
		d = std::max(d, t.first.p_degree());
	return d;
}

int Polynomial::degree() const
{
	return terms_.empty() ? 0 : terms_.front().first.degree();
}

Polynomial Polynomial::truncated_p(int max_p) const
{
	Polynomial r(dim_);
	for (auto const &t : terms_)
		if (t.first.p_degree() <= max_p)
			r.terms_.push_back(t);
	return r;
}

Polynomial Polynomial::p_free_part() const { return truncated_p(0); }

bool Polynomial::is_p_free() const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [](Term const &t) { return t.first.p_degree() == 0; });
}

std::size_t Polynomial::hash() const
{
	std::size_t h = static_cast<std::size_t>(dim_);
	for (auto const &[m, c] : terms_)
		h = h * 1099511628211ull ^ (m.hash() + 31 * hash_value(c));
	return h;
}

bool operator==(Polynomial const &a, Polynomial const &b)
{
	return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string to_string(Polynomial const &f)
{
	if (f.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &[m, c] : f.terms())
	{
		std::string factors;
		auto append = [&](char name, int i, int e) {
			if (e == 0)
				return;
			if (!factors.empty())
				factors += '*';
			factors += name + std::to_string(i + 1);
			if (e > 1)
				factors += '^' + std::to_string(e);
		};
		for (int i = 0; i < f.dim(); ++i)
			append('x', i, m.x(i));
		for (int i = 0; i < f.dim(); ++i)
			append('p', i, m.p(i));

		Rational mag = abs(c);
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		if (factors.empty())
			out += to_string(mag);
		else if (mag == 1)
			out += factors;
		else
			out += to_string(mag) + "*" + factors;
	}
	return out;
}

} // namespace stardef
