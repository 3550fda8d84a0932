#include "stardef/parse.hpp"

#include "stardef/errors.hpp"

#include <cctype>
#include <map>
#include <string>

namespace stardef {

namespace {

class Parser
{
  public:
	Parser(std::string_view src, int dim) : src_(src), dim_(dim) {}

	Polynomial run()
	{
		skip_ws();
		if (at_end())
			throw ParseError("empty expression", pos_);
		auto f = expr();
		skip_ws();
		if (!at_end())
			throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
		return f;
	}

	std::map<int, Polynomial> run_group(int group_order)
	{
		skip_ws();
		if (at_end())
			throw ParseError("empty expression", pos_);
		std::map<int, Polynomial> parts;
		auto add = [&](int sign) {
			auto f = term();
			int g = group_suffix(group_order);
			auto &slot = parts.try_emplace(g, dim_).first->second;
			if (sign > 0)
				slot += f;
			else
				slot -= f;
		};
		add(1);
		while (true)
		{
			if (accept('+'))
				add(1);
			else if (accept('-'))
				add(-1);
			else
				break;
		}
		skip_ws();
		if (!at_end())
			throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
		return parts;
	}

  private:
	int group_suffix(int group_order)
	{
		if (!accept('#'))
			return 0;
		std::size_t at = pos_;
		if (peek() != 'g')
			throw ParseError("expected 'g' after '#'", at);
		++pos_;
		if (!std::isdigit(static_cast<unsigned char>(peek())))
			throw ParseError("expected group element index", pos_);
		auto digits = integer_literal();
		int g = digits.size() > 6 ? group_order : std::stoi(digits);
		if (g >= group_order)
			throw ParseError("group element index " + digits +
			                     " out of range for a group of order " +
			                     std::to_string(group_order),
			                 at);
		return g;
	}

	bool at_end() const { return pos_ >= src_.size(); }
	char peek() const { return at_end() ? '\0' : src_[pos_]; }

	void skip_ws()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip_ws();
		if (peek() == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	Polynomial expr()
	{
		auto f = term();
		while (true)
		{
			if (accept('+'))
				f += term();
			else if (accept('-'))
				f -= term();
			else
				return f;
		}
	}

	Polynomial term()
	{
		auto f = unary();
		while (accept('*'))
			f *= unary();
		return f;
	}

	Polynomial unary()
	{
		if (accept('-'))
			return -unary();
		if (accept('+'))
			return unary();
		return power();
	}

	Polynomial power()
	{
		auto base = primary();
		if (!accept('^'))
			return base;
		skip_ws();
		std::size_t at = pos_;
		if (peek() == '-')
			throw ParseError("exponent must be a non-negative integer", at);
		if (!std::isdigit(static_cast<unsigned char>(peek())))
			throw ParseError("exponent must be a non-negative integer", at);
		auto digits = integer_literal();
		if (digits.size() > 3 || std::stoi(digits) > kMaxExponent)
			throw ParseError("exponent too large", at);
		int e = std::stoi(digits);
		skip_ws();
		if (peek() == '/' || peek() == '.')
			throw ParseError("exponent must be a non-negative integer", at);
		Polynomial r = Polynomial::constant(dim_, 1);
		for (int k = 0; k < e; ++k)
			r *= base;
		return r;
	}

	std::string integer_literal()
	{
		std::size_t start = pos_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		return std::string(src_.substr(start, pos_ - start));
	}

	Polynomial primary()
	{
		skip_ws();
		std::size_t at = pos_;
		char c = peek();
		if (c == '(')
		{
			++pos_;
			auto f = expr();
			if (!accept(')'))
				throw ParseError("expected ')'", pos_);
			return f;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			Integer num(integer_literal(), 10);
			Integer den = 1;
			skip_ws();
			if (peek() == '/')
			{
				++pos_;
				skip_ws();
				std::size_t den_at = pos_;
				if (!std::isdigit(static_cast<unsigned char>(peek())))
					throw ParseError("division is only allowed between integer "
					                 "literals",
					                 den_at);
				den = Integer(integer_literal(), 10);
				if (den == 0)
					throw ParseError("zero denominator", den_at);
			}
			Rational q(num, den);
			q.canonicalize();
			return Polynomial::constant(dim_, q);
		}
		if (c == 'x' || c == 'p')
		{
			++pos_;
			if (!std::isdigit(static_cast<unsigned char>(peek())))
				throw ParseError(std::string("expected index after '") + c + "'",
				                 pos_);
			auto digits = integer_literal();
			int index = digits.size() > 3 ? 1000 : std::stoi(digits);
			if (index < 1 || index > dim_)
				throw ParseError("unknown variable '" + std::string(1, c) + digits +
				                     "' for dimension " + std::to_string(dim_),
				                 at);
			return c == 'x' ? Polynomial::x(dim_, index - 1)
			                : Polynomial::p(dim_, index - 1);
		}
		if (at_end())
			throw ParseError("unexpected end of expression", at);
		if (std::isalpha(static_cast<unsigned char>(c)))
			throw ParseError(std::string("unknown variable starting with '") + c +
			                     "'",
			                 at);
		throw ParseError(std::string("unexpected '") + c + "'", at);
	}

	std::string_view src_;
	int dim_;
	std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view src, int dim)
{
	return Parser(src, dim).run();
}

Element parse_group_algebra_element(std::string_view src, int dim, int group_order)
{
	Element e(dim);
	for (auto const &[g, f] : Parser(src, dim).run_group(group_order))
		e.add({g, 0}, f);
	return e;
}

} // namespace stardef
