#include "stardef/rational.hpp"

#include "stardef/errors.hpp"

#include <cctype>
#include <functional>

namespace stardef {

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+'))
	{
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	auto num_text = body.substr(0, slash);
	auto den_text = slash == std::string_view::npos ? std::string_view("1")
	                                                : body.substr(slash + 1);
	if (!all_digits(num_text))
		throw ParseError("malformed rational '" + std::string(text) + "'", 0);
	if (!all_digits(den_text))
		throw ParseError("malformed rational '" + std::string(text) + "'",
		                 slash + 1);
	Integer num(std::string(num_text), 10);
	Integer den(std::string(den_text), 10);
	if (den == 0)
		throw ParseError("zero denominator in '" + std::string(text) + "'",
		                 slash + 1);
	Rational q(num, den);
	q.canonicalize();
	return negative ? Rational(-q) : q;
}

std::string to_string(Rational const &q)
{
	if (q.get_den() == 1)
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_value(Rational const &q)
{
	auto limb_hash = [](mpz_srcptr z) {
		std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 31u +
		                (mpz_sgn(z) < 0 ? 17u : 0u);
		if (mpz_size(z) > 0)
			h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, 0)) + 0x9e3779b97f4a7c15ull +
			     (h << 6) + (h >> 2);
		return h;
	};
	auto h = limb_hash(q.get_num_mpz_t());
	return h * 1000003u ^ limb_hash(q.get_den_mpz_t());
}

} // namespace stardef
