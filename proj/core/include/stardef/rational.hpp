#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace stardef {

// gmpxx operators keep canonical inputs canonical, but mpq_class(num, den)
// does not reduce; values arriving from callers go through canonical().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational canonical(Rational q)
{
	q.canonicalize();
	return q;
}

// Accepts "a", "-a", "a/b" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

// "num/den", with the denominator omitted when it is 1.
std::string to_string(Rational const &q);

std::size_t hash_value(Rational const &q);

inline Rational factorial(unsigned n)
{
	Integer f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(f);
}

inline Integer binomial(unsigned n, unsigned k)
{
	Integer b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return b;
}

} // namespace stardef
