#include "qtoric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qtoric {

namespace {

struct ExtendedGcd {
  Integer gcd;
  Integer x;
  Integer y;  // x * a + y * b == gcd, gcd >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Replaces (row_i, row_k) by (x row_i + y row_k, u row_i + v row_k).
void combine_rows(IntMatrix& m, std::size_t i, std::size_t k, const Integer& x,
                  const Integer& y, const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer top = x * m(i, j) + y * m(k, j);
    Integer bottom = u * m(i, j) + v * m(k, j);
    m(i, j) = std::move(top);
    m(k, j) = std::move(bottom);
  }
}

}  // namespace

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return IntVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(i, j) != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += factor * (*this)(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += factor * (*this)(i, k);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Integer& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (std::size_t k = pivot_row + 1; k < h.rows(); ++k) {
      if (h(k, col) == 0) continue;
      if (h(pivot_row, col) == 0) {
        h.swap_rows(pivot_row, k);
        u.swap_rows(pivot_row, k);
        continue;
      }
      const Integer a = h(pivot_row, col);
      const Integer b = h(k, col);
      const auto [g, x, y] = extended_gcd(a, b);
      const Integer minus_b_over_g = -(b / g);
      const Integer a_over_g = a / g;
      combine_rows(h, pivot_row, k, x, y, minus_b_over_g, a_over_g);
      combine_rows(u, pivot_row, k, x, y, minus_b_over_g, a_over_g);
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Integer q = floor_div(h(i, col), pivot);
      h.add_row_multiple(i, pivot_row, -q);
      u.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      Integer best;
      for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          Integer mag = abs(d(i, j));
          if (!found || mag < best) {
            best = std::move(mag);
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pi);
      left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.diagonal.reserve(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(d(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

LatticeBasis::LatticeBasis(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

LatticeBasis LatticeBasis::span_of(std::size_t ambient_dim, std::span<const IntVector> generators) {
  return span_of(IntMatrix::from_rows(generators, ambient_dim));
}

LatticeBasis LatticeBasis::span_of(const IntMatrix& generator_rows) {
  LatticeBasis lattice(generator_rows.cols());
  const IntMatrix h = hermite_normal_form(generator_rows).form;
  std::size_t rank = 0;
  while (rank < h.rows() && !h.row_is_zero(rank)) ++rank;
  IntMatrix basis(rank, h.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) basis(i, j) = h(i, j);
  }
  lattice.basis_ = std::move(basis);
  return lattice;
}

std::vector<IntVector> LatticeBasis::vectors() const {
  std::vector<IntVector> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool LatticeBasis::includes(const LatticeBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("lattices in different ambient spaces");
  std::vector<IntVector> rows = vectors();
  for (auto& v : other.vectors()) rows.push_back(std::move(v));
  return span_of(ambient_dim_, rows) == *this;
}

LatticeBasis kernel_basis(const IntMatrix& m) {
  const HermiteForm hnf = hermite_normal_form(m.transpose());
  std::vector<IntVector> generators;
  for (std::size_t i = 0; i < hnf.form.rows(); ++i) {
    if (hnf.form.row_is_zero(i)) generators.push_back(hnf.transform.row(i));
  }
  return LatticeBasis::span_of(m.cols(), generators);
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("cannot compare lattices of ambient dimension " +
                            std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
  }
  return a == b;
}

bool is_basis_extendable(std::span<const IntVector> vectors) {
  if (vectors.empty()) return true;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("vectors of differing length");
  }
  if (vectors.size() > dim) return false;
  const SmithForm snf = smith_normal_form(IntMatrix::from_rows(vectors, dim));
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(),
                     [](const Integer& d) { return d == 1; });
}

}  // namespace qtoric
