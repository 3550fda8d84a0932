#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stardef {

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// Malformed text input. position is a 0-based byte offset into the source.
class ParseError : public Error
{
  public:
	ParseError(std::string const &what, std::size_t position)
	    : Error(what + " at position " + std::to_string(position)),
	      position_(position)
	{}
	std::size_t position() const { return position_; }

  private:
	std::size_t position_;
};

// Input that parses but violates a mathematical precondition.
class ValidationError : public Error
{
  public:
	using Error::Error;
};

class DimensionMismatch : public ValidationError
{
  public:
	using ValidationError::ValidationError;
};

// Raised when a p-jet window is too narrow to certify a result.
class TruncationError : public Error
{
  public:
	using Error::Error;
};

class CostLimitError : public Error
{
  public:
	using Error::Error;
};

} // namespace stardef
