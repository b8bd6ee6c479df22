#pragma once

// Exact integer linear algebra: dense matrices over Z, Hermite and Smith
// normal forms, saturated kernels and canonical sublattices of Z^d.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtoric {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Raised when operands live in incompatible ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix. Entries never overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stacks `rows` (each of length `cols`) into a matrix; `cols` is needed
  /// so an empty list still has a width.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t k);
  /// row_i += factor * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Integer& factor);
  /// col_j += factor * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const Integer& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix form;       // H
  IntMatrix transform;  // U, unimodular, U * input == H
};

/// Row-style Hermite normal form. Pivots are positive, entries above a pivot
/// lie in [0, pivot), zero rows are collected at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntVector diagonal;  // min(rows, cols) entries, d_i >= 0, d_i | d_{i+1}
  IntMatrix left;
  IntMatrix right;     // left * input * right == diag(diagonal)
};

SmithForm smith_normal_form(const IntMatrix& m);

/// A sublattice of Z^d stored as the nonzero rows of its Hermite normal form,
/// so two bases of the same lattice compare equal entry by entry.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim = 0);

  /// Lattice spanned by `generators` (each of length `ambient_dim`).
  static LatticeBasis span_of(std::size_t ambient_dim, std::span<const IntVector> generators);
  static LatticeBasis span_of(const IntMatrix& generator_rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> vectors() const;

  /// True iff `other` is a sublattice of this lattice.
  bool includes(const LatticeBasis& other) const;

  friend bool operator==(const LatticeBasis& lhs, const LatticeBasis& rhs) = default;

 private:
  std::size_t ambient_dim_;
  IntMatrix basis_;
};

/// Saturated integer kernel {v in Z^cols : m v = 0}.
LatticeBasis kernel_basis(const IntMatrix& m);

/// Throws DimensionMismatch when the ambient dimensions differ.
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

/// True iff the vectors extend to a basis of Z^d, i.e. every Smith invariant
/// of the matrix they form equals 1. The empty family is extendable.
bool is_basis_extendable(std::span<const IntVector> vectors);

/// Floor division for Integer (cpp_int's `/` truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace qtoric
