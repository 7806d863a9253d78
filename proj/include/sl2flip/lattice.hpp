#pragma once

// Exact integer linear algebra: Smith normal form, cokernels of relation
// matrices, primitive vectors and bounded nonnegative integer solutions.
//
// Matrices carry arbitrary-precision entries (GMP). Lattice points are
// 64-bit vectors; all arithmetic on them goes through the checked helpers
// below and throws std::overflow_error instead of wrapping.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl2flip::lattice {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t to_int64(const Integer& value);

std::int64_t gcd(std::int64_t x, std::int64_t y);
std::int64_t lcm(std::int64_t x, std::int64_t y);
/// Nonnegative representative of x modulo m (m >= 1).
std::int64_t mod(std::int64_t x, std::int64_t m);

/// Extended gcd: returns g = gcd(x, y) >= 0 and sets u, v with u*x + v*y = g.
std::int64_t extended_gcd(std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& v);

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

/// num/den in lowest terms with positive denominator (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; `rows` fixes the shape when
  /// `columns` is empty.
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  friend bool operator==(const IntMatrix& x, const IntMatrix& y);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
std::string to_string(const IntMatrix& m);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

struct SmithDecomposition {
  /// min(rows, cols) entries, each >= 0, with diag[i] | diag[i+1].
  std::vector<Integer> diag;
  /// Unimodular, with left * A * right == diagonal_matrix().
  IntMatrix left;
  IntMatrix right;

  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Pivots on the smallest nonzero absolute value, ties broken by the
/// lowest (row, col), so transforms are reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Coordinates of a group element in the normal form Z^r + (+) Z/d_i.
struct GroupElement {
  std::vector<Integer> free;
  std::vector<Integer> torsion;  // each reduced into [0, d_i)

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_s in
/// normal form: every d_i >= 2 and d_i | d_{i+1}.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion,
             std::vector<GroupElement> generator_images = {});

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  /// Image of the i-th presentation generator.
  const std::vector<GroupElement>& generator_images() const { return images_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Group order, or nullopt when the group is infinite.
  std::optional<Integer> order() const;
  /// Same abstract group (free rank and torsion coefficients agree).
  bool isomorphic_to(const FinAbGroup& other) const;

  /// Element for the integer combination sum_i coeffs[i] * generator_i.
  GroupElement combine(std::span<const std::int64_t> coeffs) const;
  GroupElement reduce(GroupElement e) const;
  bool is_zero(const GroupElement& e) const;

  /// Applies the automorphism x -> -x on free coordinate `index`.
  FinAbGroup negate_free_coordinate(std::size_t index) const;

  std::string to_string() const;  // "Z + Z/4", "0", ...

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  std::vector<GroupElement> images_;
};

/// Z^rows modulo the span of the columns of `relations`.
FinAbGroup cokernel(const IntMatrix& relations);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
std::vector<IntVec> kernel_basis(const IntMatrix& a);

/// Echelon basis of the lattice spanned by `generators` (all of one length).
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& generators);

/// v divided by the gcd of its entries. Throws std::invalid_argument on 0.
IntVec primitive(std::span<const std::int64_t> v);
bool is_primitive(std::span<const std::int64_t> v);

/// Linear congruence sum coefficients[i]*x[i] = residue (mod modulus).
/// Empty coefficients with modulus 1 is the vacuous constraint.
struct Congruence {
  IntVec coefficients;
  std::int64_t residue = 0;
  std::int64_t modulus = 1;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// All x with 0 <= x[i] <= box[i], weights.x == target and the congruence,
/// in lexicographic order. Stops after `limit` solutions.
std::vector<IntVec> solve_bounded_diophantine(std::span<const std::int64_t> weights,
                                              std::int64_t target,
                                              const Congruence& congruence,
                                              std::span<const std::int64_t> box,
                                              std::size_t limit = kNoLimit);

}  // namespace sl2flip::lattice
