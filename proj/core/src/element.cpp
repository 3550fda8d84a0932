#include "stardef/element.hpp"

#include "stardef/errors.hpp"

#include <algorithm>

namespace stardef {

int wedge_sign(std::uint32_t I, std::uint32_t J)
{
	if (I & J)
		return 0;
	// Moving each factor of J left past the larger factors of I.
	int swaps = 0;
	for (std::uint32_t rest = J; rest; rest &= rest - 1)
	{
		std::uint32_t bit = rest & (~rest + 1);
		swaps += __builtin_popcount(I & ~(bit | (bit - 1)));
	}
	return swaps % 2 ? -1 : 1;
}

Element::Element(int dim) : dim_(dim)
{
	if (dim < 1 || dim > kMaxDim)
		throw ValidationError("ambient dimension must be in 1.." +
		                      std::to_string(kMaxDim));
	precision_.fill(kExact);
}

Element Element::from_polynomial(Polynomial const &f, int group, std::uint32_t wedge,
                                 int precision)
{
	Element e(f.dim());
	if (wedge >> f.dim())
		throw ValidationError("dp index out of range");
	Sector s{group, wedge};
	e.precision_[s.form_degree()] = precision;
	e.add(s, f);
	return e;
}

Element Element::constant(int dim, Rational const &c, int group)
{
	return from_polynomial(Polynomial::constant(dim, c), group);
}

Element Element::x(int dim, int i) { return from_polynomial(Polynomial::x(dim, i)); }

Element Element::p(int dim, int i) { return from_polynomial(Polynomial::p(dim, i)); }

Element Element::dp(int dim, int i)
{
	if (i < 0 || i >= dim)
		throw ValidationError("dp index out of range");
	return from_polynomial(Polynomial::constant(dim, 1), 0, 1u << i);
}

Element Element::group_element(int dim, int g)
{
	return constant(dim, 1, g);
}

Element Element::unknown(int dim, int l, int precision)
{
	Element e(dim);
	e.set_precision(l, precision);
	return e;
}

int Element::precision() const
{
	return *std::min_element(precision_.begin(), precision_.begin() + dim_ + 1);
}

void Element::set_precision(int l, int prec)
{
	if (l < 0 || l > dim_)
		throw ValidationError("form degree out of range");
	precision_[l] = std::min(prec, kExact);
	trim(l);
}

bool Element::is_exact_zero() const { return parts_.empty() && is_exact(); }

std::vector<int> Element::degrees() const
{
	std::vector<bool> present(dim_ + 1, false);
	for (auto const &[s, f] : parts_)
		present[s.form_degree()] = true;
	std::vector<int> out;
	for (int l = 0; l <= dim_; ++l)
		if (present[l] || precision_[l] < kExact)
			out.push_back(l);
	return out;
}

int Element::degree() const
{
	auto ds = degrees();
	return ds.size() == 1 ? ds.front() : -1;
}

Element Element::degree_part(int l) const
{
	Element r(dim_);
	r.precision_[l] = precision_[l];
	for (auto const &[s, f] : parts_)
		if (s.form_degree() == l)
			r.parts_.emplace(s, f);
	return r;
}

std::vector<Element> Element::homogeneous_components() const
{
	std::vector<Element> out;
	for (int l : degrees())
		out.push_back(degree_part(l));
	return out;
}

Element Element::group_part(int g) const
{
	Element r(dim_);
	r.precision_ = precision_;
	for (auto const &[s, f] : parts_)
		if (s.group == g)
			r.parts_.emplace(s, f);
	return r;
}

Polynomial Element::part(Sector s) const
{
	auto it = parts_.find(s);
	return it == parts_.end() ? Polynomial(dim_) : it->second;
}

std::vector<int> Element::group_support() const
{
	std::vector<int> out;
	for (auto const &[s, f] : parts_)
		if (out.empty() || out.back() != s.group)
			out.push_back(s.group);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

void Element::add(Sector s, Polynomial const &f)
{
	if (f.dim() != dim_)
		throw DimensionMismatch("element and polynomial dimensions differ");
	if (f.is_zero())
		return;
	int prec = precision_[s.form_degree()];
	auto it = parts_.find(s);
	if (it == parts_.end())
	{
		auto g = prec >= kExact ? f : f.truncated_p(prec);
		if (!g.is_zero())
			parts_.emplace(s, std::move(g));
		return;
	}
	it->second += prec >= kExact ? f : f.truncated_p(prec);
	if (it->second.is_zero())
		parts_.erase(it);
}

void Element::check_dim(Element const &o) const
{
	if (o.dim_ != dim_)
		throw DimensionMismatch("element dimensions differ");
}

void Element::trim(int l)
{
	int prec = precision_[l];
	if (prec >= kExact)
		return;
	for (auto it = parts_.begin(); it != parts_.end();)
	{
		if (it->first.form_degree() == l && it->second.p_degree() > prec)
		{
			it->second = it->second.truncated_p(prec);
			if (it->second.is_zero())
			{
				it = parts_.erase(it);
				continue;
			}
		}
		++it;
	}
}

Element &Element::operator+=(Element const &o)
{
	check_dim(o);
	for (int l = 0; l <= dim_; ++l)
		if (o.precision_[l] < precision_[l])
			set_precision(l, o.precision_[l]);
	for (auto const &[s, f] : o.parts_)
		add(s, f);
	return *this;
}

Element &Element::operator-=(Element const &o)
{
	check_dim(o);
	for (int l = 0; l <= dim_; ++l)
		if (o.precision_[l] < precision_[l])
			set_precision(l, o.precision_[l]);
	for (auto const &[s, f] : o.parts_)
		add(s, -f);
	return *this;
}

Element &Element::operator*=(Rational const &c)
{
	if (c == 0)
	{
		parts_.clear();
		return *this;
	}
	for (auto &[s, f] : parts_)
		f *= c;
	return *this;
}

Element Element::operator-() const
{
	Element r = *this;
	for (auto &[s, f] : r.parts_)
		f = -f;
	return r;
}

Element Element::truncated(int prec) const
{
	Element r = *this;
	for (int l = 0; l <= dim_; ++l)
		if (prec < r.precision_[l])
			r.set_precision(l, prec);
	return r;
}

bool Element::is_p_free() const
{
	for (auto const &[s, f] : parts_)
		if (s.wedge != 0 || !f.is_p_free())
			return false;
	return true;
}

int Element::max_x_degree() const
{
	int d = 0;
	for (auto const &[s, f] : parts_)
		d = std::max(d, f.x_degree());
	return d;
}

std::size_t Element::hash() const
{
	std::size_t h = static_cast<std::size_t>(dim_);
	for (int l = 0; l <= dim_; ++l)
		h = h * 31 + static_cast<std::size_t>(precision_[l]);
	for (auto const &[s, f] : parts_)
		h = h * 1000003u ^ (f.hash() + static_cast<std::size_t>(s.group) * 7919u +
		                    s.wedge * 104729u);
	return h;
}

bool operator==(Element const &a, Element const &b)
{
	return a.dim_ == b.dim_ && a.precision_ == b.precision_ && a.parts_ == b.parts_;
}

bool agree_within_window(Element const &a, Element const &b)
{
	auto diff = a - b;
	return diff.is_zero();
}

std::string to_string(Element const &e)
{
	std::string out;
	auto append = [&](std::string const &piece) {
		if (!out.empty())
			out += " + ";
		out += piece;
	};
	for (auto const &[s, f] : e.parts())
	{
		std::string piece = to_string(f);
		bool decorated = s.wedge != 0 || s.group != 0;
		if (decorated && f.size() > 1)
			piece = "(" + piece + ")";
		if (s.wedge != 0)
		{
			std::string idx;
			for (int i = 0; i < e.dim(); ++i)
				if (s.wedge >> i & 1u)
					idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
			piece += "*dp[" + idx + "]";
		}
		if (s.group != 0)
			piece += "#g" + std::to_string(s.group);
		append(piece);
	}
	for (int l = 0; l <= e.dim(); ++l)
		if (e.precision(l) < kExact)
			append("O(p^" + std::to_string(e.precision(l) + 1) + ")@deg" +
			       std::to_string(l));
	return out.empty() ? "0" : out;
}

} // namespace stardef
