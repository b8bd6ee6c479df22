#pragma once

// Characteristic data of quasitoric manifolds over a product of two simplices
// Delta^n x Delta^m, i.e. the manifolds with second Betti number 2.
//
// Facet orders used here:
//  * characteristic matrix:  F_1..F_n, G_1..G_m, F_{n+1}, G_{m+1}
//  * moment-angle coordinates (kernel lattice, subtorus weights):
//      w_1..w_{n+1}, z_1..z_{m+1}
// where F_i are the facets of Delta^n and G_j those of Delta^m.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qtoric/lattice.hpp"
#include "qtoric/polyring.hpp"

namespace qtoric {

/// Input that violates a mathematical precondition (malformed or non-singular data).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The manifold M_{a,b} over Delta^n x Delta^m: a has length m, b length n.
struct CharPair {
  int n = 1;
  int m = 1;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  friend bool operator==(const CharPair&, const CharPair&) = default;
  friend auto operator<=>(const CharPair&, const CharPair&) = default;
};

/// Throws InvalidInput unless n, m >= 1 and the vector lengths match.
void check_shape(const CharPair& cp);

enum class Orientation {
  Bott,      // a = 0 or b = 0
  TwoOnA,    // nonzero a_j are 2, nonzero b_i are 1
  TwoOnB,    // nonzero a_j are 1, nonzero b_i are 2
};

struct NormalForm {
  int n = 1;
  int m = 1;
  std::vector<std::int64_t> a;  // sorted descending
  std::vector<std::int64_t> b;  // sorted descending
  Orientation orientation = Orientation::Bott;
  bool swap_applied = false;

  CharPair char_pair() const { return {n, m, a, b}; }
  int nonzero_a() const;
  int nonzero_b() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// The ring Z[x1,x2] / <gen1, gen2>, deg gen1 = n+1, deg gen2 = m+1.
struct Presentation {
  int n = 1;
  int m = 1;
  HomogPoly gen1;
  HomogPoly gen2;
};

struct GradedRanks {
  std::vector<long> ranks;               // degree 0 .. n+m
  std::vector<IntVector> torsion;        // invariant factors > 1 per degree
  bool torsion_free() const;
  long total() const;
};

/// Non-singularity in closed form: every a_j * b_i is 0 or 2.
bool validate(const CharPair& cp);

/// The (n+m) x (n+m+2) characteristic matrix (E | Lambda_*).
IntMatrix characteristic_matrix(const CharPair& cp);

/// Non-singularity checked vertex by vertex: for each choice of one omitted
/// facet per simplex factor, the remaining n+m columns must be a Z-basis.
bool validate_bruteforce(const CharPair& cp);

/// Sign flip, facet relabelling and factor swap down to a canonical
/// representative. Throws InvalidInput for invalid data.
NormalForm normalize(const CharPair& cp);

bool is_generalized_bott(const NormalForm& nf);

Presentation cohomology_presentation(const CharPair& cp);

GradedRanks graded_ranks(const Presentation& p);

/// Rank of degree d in Z[x1,x2]/<f,g> for Delta^n x Delta^m: #{(i,j): i<=n, j<=m, i+j=d}.
long h_vector_entry(int n, int m, int d);

/// The (n+m) x (n+m+2) matrix whose null space is the moment-angle subtorus,
/// columns in moment-angle coordinate order.
IntMatrix kernel_relation_matrix(const CharPair& cp);

/// (1,..,1, a_1..a_m, 0) and (b_1..b_n, 0, 1,..,1) in moment-angle order.
std::vector<IntVector> subtorus_generators(const CharPair& cp);

/// The (n+m+2) x 2 weight matrix of the free 2-torus acting on
/// S^{2n+1} x S^{2m+1}; row k is the exponent pair of (t1, t2) on coordinate k.
IntMatrix subtorus_weights(const CharPair& cp);

LatticeBasis kernel_lattice(const CharPair& cp);

IntVector to_integers(const std::vector<std::int64_t>& v);

}  // namespace qtoric
