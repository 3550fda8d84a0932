#pragma once

#include "stardef/matrix.hpp"
#include "stardef/rational.hpp"

#include <map>
#include <vector>

namespace stardef {

inline constexpr int kDefaultMaxGroupOrder = 1024;

// A finite group of invertible rational matrices acting on V. Elements are
// indexed canonically: the identity is 0 and the rest follow in
// lexicographic order of their row-major entries.
class MatrixGroup
{
  public:
	int dim() const { return dim_; }
	int order() const { return static_cast<int>(elements_.size()); }
	static constexpr int identity() { return 0; }

	RatMatrix const &element(int g) const { return elements_[g]; }
	std::vector<RatMatrix> const &elements() const { return elements_; }
	int multiply(int a, int b) const { return table_[a][b]; }
	int inverse(int g) const { return inverse_[g]; }
	// a g a^{-1}
	int conjugate(int a, int g) const { return multiply(multiply(a, g), inverse(a)); }
	// Index of the matrix, or -1 when it is not an element.
	int index_of(RatMatrix const &m) const;

	std::vector<std::vector<int>> const &classes() const { return classes_; }
	int class_of(int g) const { return class_of_[g]; }
	// Lowest element index in the conjugacy class of g.
	int representative(int g) const { return classes_[class_of_[g]].front(); }

	// l(g) = dim im(1 - g).
	int fixed_codim(int g) const { return codim_[g]; }

	friend MatrixGroup close_group(int dim, std::vector<RatMatrix> const &generators,
	                               int max_order);

  private:
	MatrixGroup() = default;

	int dim_ = 0;
	std::vector<RatMatrix> elements_;
	std::map<RatMatrix, int> lookup_;
	std::vector<std::vector<int>> table_;
	std::vector<int> inverse_;
	std::vector<std::vector<int>> classes_;
	std::vector<int> class_of_;
	std::vector<int> codim_;
};

// Closes the generators under multiplication and builds the multiplication
// table and conjugacy classes. Throws ValidationError on a singular generator
// or when the closure exceeds max_order elements.
MatrixGroup close_group(int dim, std::vector<RatMatrix> const &generators,
                        int max_order = kDefaultMaxGroupOrder);

// Table checks: latin square, identity, inverses and (for small groups)
// exhaustive associativity. Returns an empty string when consistent.
std::string check_group_table(MatrixGroup const &g);

struct ReflectionData
{
	RatMatrix pi;
	std::vector<int> l;
	std::vector<bool> is_reflection;
	// pi_g = (1 - g) pi (1 - g)^T as a bilinear form on p-covectors
	// (p transforms as a row vector p -> p g).
	std::vector<RatMatrix> pi_gamma;

	std::vector<int> reflections() const;
};

// Throws ValidationError when pi is not antisymmetric, is degenerate, or some
// element fails g pi g^T = pi.
ReflectionData reflection_scan(MatrixGroup const &group, RatMatrix const &pi);

class ClassFunction
{
  public:
	Rational operator()(int g) const { return values_[g]; }
	// Class representative -> value, for every reflection class.
	std::map<int, Rational> const &by_representative() const { return by_rep_; }

	friend ClassFunction validate_class_function(MatrixGroup const &group,
	                                             std::map<int, Rational> const &raw);

  private:
	std::vector<Rational> values_;
	std::map<int, Rational> by_rep_;
};

// Keys are element indices. Classes of reflections with no assigned value
// get 0. Throws ValidationError when a key is out of range or names an
// element with l != 2, or when two conjugate elements disagree.
ClassFunction validate_class_function(MatrixGroup const &group,
                                      std::map<int, Rational> const &raw);

} // namespace stardef
