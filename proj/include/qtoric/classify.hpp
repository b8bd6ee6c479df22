#pragma once

// Homeomorphism classification of quasitoric manifolds over Delta^n x Delta^m.
//
// Every valid CharPair maps to a HomeoClass label. Two manifolds are
// homeomorphic exactly when their labels are the same class (same_class);
// for two-stage Bott families this needs the twist equivalence ~_l rather
// than plain equality of the stored vectors.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtoric/quasitoric.hpp"

namespace qtoric {

enum class Family {
  Product,       // CP^n x CP^m
  BottBaseN,     // CP^m-bundle over CP^n, twist vector a (length m, ~_n)
  BottBaseM,     // CP^n-bundle over CP^m, twist vector b (length n, ~_m)
  NonBott,       // M_{s,r}; s on the m-side, r on the n-side
  ConnSumPlus,   // CP^{n+1} # CP^{n+1}           (m = 1)
  ConnSumMinus,  // CP^{n+1} # conj CP^{n+1}      (m = 1), also M_{1,0}
  SpecialM21,    // class of M_{2,(1,0,..,0)}     (m = 1, n odd > 1)
};

const char* family_name(Family f);

struct HomeoClass {
  Family family = Family::Product;
  int n = 1;
  int m = 1;
  /// Twist vector for BottBaseN (a) / BottBaseM (b); empty otherwise.
  std::vector<std::int64_t> twist;
  /// NonBott only: counts in the folded fundamental domain.
  int s = 0;
  int r = 0;
  Orientation orientation = Orientation::Bott;
  /// A normalized member of the class.
  CharPair representative;

  /// Truncation order of the twist equivalence for the Bott families.
  int twist_order() const;
};

/// u ~_ell u': there are eps = +-1 and an integer w with
///   prod(1 + u_i x) = (1 + eps w x) prod(1 + eps (u'_i + w) x)  mod x^(ell+1).
/// Decided exactly: comparing x-coefficients forces (k+1) w = eps sum(u) - sum(u').
bool tilde_equiv(std::span<const Integer> u, std::span<const Integer> u_prime, int ell);
bool tilde_equiv(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& u_prime, int ell);

HomeoClass canonical_class(const CharPair& cp);

/// Label equality, with Bott twist vectors compared up to ~_l.
bool same_class(const HomeoClass& lhs, const HomeoClass& rhs);

struct HomeoVerdict {
  bool homeomorphic = false;
  std::string rule;         // identifier of the deciding rule
  std::string explanation;  // human-readable reason
};

HomeoVerdict homeomorphic(const CharPair& cp1, const CharPair& cp2);

/// All homeomorphism classes met by valid CharPairs over Delta^n x Delta^m with
/// |entries| <= bound, one entry per class, sorted deterministically. The
/// non-Bott part is complete once bound >= 2; Bott classes only within the bound.
std::vector<HomeoClass> enumerate_classes(int n, int m, int bound);

/// Number of classes over Delta^n x Delta^m not homeomorphic to a generalized Bott manifold.
long count_nonbott(int n, int m);

/// Sort key used for class listings and representative choice.
bool class_less(const HomeoClass& lhs, const HomeoClass& rhs);

}  // namespace qtoric
