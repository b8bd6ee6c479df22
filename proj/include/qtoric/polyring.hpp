#pragma once

// Homogeneous polynomials in two variables x1, x2 over Z, and truncated
// univariate polynomials Z[x]/x^(l+1).
//
// Coefficient convention, used everywhere in this library: index i of a
// degree-d HomogPoly holds the coefficient of x1^(d-i) * x2^i.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qtoric/lattice.hpp"

namespace qtoric {

/// c * x1 + d * x2
struct LinearForm {
  Integer x1;
  Integer x2;
};

class HomogPoly {
 public:
  /// The zero polynomial of the given degree.
  explicit HomogPoly(std::size_t degree = 0);
  /// Degree is coeffs.size() - 1; coeffs must be nonempty.
  explicit HomogPoly(IntVector coeffs);

  static HomogPoly one() { return HomogPoly(IntVector{1}); }
  static HomogPoly linear(const LinearForm& form);
  /// x1^(degree - x2_power) * x2^x2_power
  static HomogPoly monomial(std::size_t degree, std::size_t x2_power);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& coefficient(std::size_t x2_power) const { return coeffs_.at(x2_power); }
  bool is_zero() const;

  HomogPoly operator-() const;
  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  std::string to_string() const;

 private:
  IntVector coeffs_;
};

HomogPoly homog_mul(const HomogPoly& p, const HomogPoly& q);

/// lead * prod(factors), each a linear form.
HomogPoly linear_product(const LinearForm& lead, std::span<const LinearForm> factors);

/// p(g11 y1 + g12 y2, g21 y1 + g22 y2); g must be 2x2.
/// Composition law: substitute_linear(substitute_linear(p, h), g) == substitute_linear(p, h * g).
HomogPoly substitute_linear(const HomogPoly& p, const IntMatrix& g);

/// Element of Z[x]/x^(trunc+1).
class TruncPoly {
 public:
  explicit TruncPoly(std::size_t trunc);
  TruncPoly(std::size_t trunc, IntVector coeffs);

  static TruncPoly one(std::size_t trunc);
  /// 1 + c x
  static TruncPoly one_plus(std::size_t trunc, const Integer& c);

  std::size_t trunc() const { return trunc_; }
  const IntVector& coeffs() const { return coeffs_; }

  TruncPoly& operator*=(const TruncPoly& other);
  friend TruncPoly operator*(TruncPoly lhs, const TruncPoly& rhs) { return lhs *= rhs; }
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  std::size_t trunc_;
  IntVector coeffs_;
};

/// prod_{i}(1 + u_i x)  ==  (1 + eps w x) * prod_{i}(1 + eps (u'_i + w) x)  in Z[x]/x^(ell+1).
/// Throws std::invalid_argument when the lengths differ, are zero, or ell < 1.
bool trunc_product_identity(std::span<const Integer> u, std::span<const Integer> u_prime, int eps,
                            const Integer& w, std::size_t ell);

/// Degree-d piece of the ideal generated by `gens`, as a sublattice of the
/// coefficient space Z^(d+1).
LatticeBasis ideal_degree_lattice(std::span<const HomogPoly> gens, std::size_t d);

}  // namespace qtoric
