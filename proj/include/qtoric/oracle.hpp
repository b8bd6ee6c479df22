#pragma once

// Independent verification machinery.
//
//  * ring_iso_search: brute-force search for a graded ring isomorphism
//    Z[x1,x2]/I -> Z[y1,y2]/J induced by a linear substitution g in GL_2(Z).
//  * witness_check / builtin_witness: exponent-level check that a
//    coordinate permutation with conjugations of S^{2n+1} x S^{2m+1}
//    intertwines two free 2-torus actions. Only monomial maps are expressible;
//    maps mixing coordinates (quaternionic ones) are out of reach.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qtoric/lattice.hpp"
#include "qtoric/quasitoric.hpp"

namespace qtoric {

struct IsoFound {
  IntMatrix substitution;  // x_i -> g_i1 y1 + g_i2 y2
};

struct IsoNoneWithinBound {
  int bound = 0;
};

using IsoVerdict = std::variant<IsoFound, IsoNoneWithinBound>;

inline bool iso_found(const IsoVerdict& v) { return std::holds_alternative<IsoFound>(v); }

/// True iff substituting g into p's generators yields an ideal whose degree-d
/// pieces agree with q's for every d <= max_degree.
bool maps_ideal_onto(const Presentation& p, const Presentation& q, const IntMatrix& g, std::size_t max_degree);

/// All 2x2 integer matrices with |entries| <= bound and det = +-1, in the
/// search order: l1-norm, then off-diagonal l1-norm, then lexicographic on
/// (g11, g12, g21, g22) with 0 < 1 < -1 < 2 < -2 < ...
std::vector<IntMatrix> unimodular_candidates(int bound);

/// First isomorphism in search order, or NoneWithinBound. A negative answer
/// says nothing about substitutions with larger entries. Throws
/// DimensionMismatch when the generator degrees differ.
IsoVerdict ring_iso_search(const Presentation& p, const Presentation& q, int bound = 3);

class MonomialWitness {
 public:
  /// Throws std::invalid_argument unless `signed_permutation` has exactly one
  /// +-1 per row and column and |det reparametrization| = 1.
  MonomialWitness(IntMatrix signed_permutation, IntMatrix reparametrization);

  const IntMatrix& signed_permutation() const { return signed_permutation_; }
  const IntMatrix& reparametrization() const { return reparametrization_; }

 private:
  IntMatrix signed_permutation_;
  IntMatrix reparametrization_;
};

/// s * u == u' * t: the map (coordinate permutation, -1 marking conjugation)
/// carries the u-action to the u'-action reparametrized by t, whose rows are
/// the exponent pairs of the new torus coordinates in (t1, t2).
bool witness_check(const IntMatrix& u, const IntMatrix& u_prime, const MonomialWitness& w);

enum class WitnessFamily {
  Spread,  // M_{a,(b,0,..,0)} -> M_{a,(b,..,b)} over Delta^n x Delta^1, ab = 2
  FoldR,   // M_{s,r} -> M_{s,n+1-r}
  FoldS,   // M_{s,r} -> M_{m+1-s,r}
};

const char* witness_family_name(WitnessFamily f);
std::optional<WitnessFamily> parse_witness_family(const std::string& name);

struct WitnessParams {
  int n = 2;
  int m = 1;
  int s = 1;  // FoldR / FoldS
  int r = 1;  // FoldR / FoldS
  int a = 1;  // Spread
  int b = 2;  // Spread
};

struct WitnessTriple {
  CharPair source;
  CharPair target;
  IntMatrix source_weights;
  IntMatrix target_weights;
  MonomialWitness witness;
};

/// The explicit equivariant maps behind the homeomorphisms of the spread
/// (m = 1) and fold families. Throws InvalidInput outside their range.
WitnessTriple builtin_witness(WitnessFamily family, const WitnessParams& params);

}  // namespace qtoric
