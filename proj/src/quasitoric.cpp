#include "qtoric/quasitoric.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace qtoric {

namespace {

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

void sort_descending(std::vector<std::int64_t>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Of v and -v (both sorted descending), the lexicographically larger one.
std::vector<std::int64_t> sign_canonical(std::vector<std::int64_t> v) {
  std::vector<std::int64_t> negated(v.size());
  std::transform(v.begin(), v.end(), negated.begin(), [](std::int64_t x) { return -x; });
  sort_descending(v);
  sort_descending(negated);
  return std::max(v, negated);
}

int count_nonzero(const std::vector<std::int64_t>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }));
}

}  // namespace

IntVector to_integers(const std::vector<std::int64_t>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

void check_shape(const CharPair& cp) {
  if (cp.n < 1 || cp.m < 1) throw InvalidInput("simplex dimensions n and m must be at least 1");
  if (cp.a.size() != static_cast<std::size_t>(cp.m)) {
    throw InvalidInput("vector a must have length m = " + std::to_string(cp.m));
  }
  if (cp.b.size() != static_cast<std::size_t>(cp.n)) {
    throw InvalidInput("vector b must have length n = " + std::to_string(cp.n));
  }
}

int NormalForm::nonzero_a() const { return count_nonzero(a); }
int NormalForm::nonzero_b() const { return count_nonzero(b); }

bool GradedRanks::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const IntVector& t) { return t.empty(); });
}

long GradedRanks::total() const {
  long sum = 0;
  for (long r : ranks) sum += r;
  return sum;
}

bool validate(const CharPair& cp) {
  check_shape(cp);
  for (auto aj : cp.a) {
    for (auto bi : cp.b) {
      const __int128 product = static_cast<__int128>(aj) * bi;
      if (product != 0 && product != 2) return false;
    }
  }
  return true;
}

IntMatrix characteristic_matrix(const CharPair& cp) {
  check_shape(cp);
  const std::size_t n = cp.n, m = cp.m;
  IntMatrix lambda(n + m, n + m + 2);
  for (std::size_t i = 0; i < n + m; ++i) lambda(i, i) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lambda(i, n + m) = -1;
    lambda(i, n + m + 1) = -cp.b[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    lambda(n + j, n + m) = -cp.a[j];
    lambda(n + j, n + m + 1) = -1;
  }
  return lambda;
}

bool validate_bruteforce(const CharPair& cp) {
  const IntMatrix lambda = characteristic_matrix(cp);
  const std::size_t n = cp.n, m = cp.m;
  const IntMatrix columns = lambda.transpose();

  // Column index of F_{i+1} (i = 0..n) and G_{j+1} (j = 0..m).
  auto f_column = [&](std::size_t i) { return i < n ? i : n + m; };
  auto g_column = [&](std::size_t j) { return j < m ? n + j : n + m + 1; };

  for (std::size_t omit_f = 0; omit_f <= n; ++omit_f) {
    for (std::size_t omit_g = 0; omit_g <= m; ++omit_g) {
      std::vector<IntVector> vertex;
      vertex.reserve(n + m);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i != omit_f) vertex.push_back(columns.row(f_column(i)));
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (j != omit_g) vertex.push_back(columns.row(g_column(j)));
      }
      if (!is_basis_extendable(vertex)) return false;
    }
  }
  return true;
}

NormalForm normalize(const CharPair& cp) {
  if (!validate(cp)) throw InvalidInput("characteristic data violates non-singularity (some a_j*b_i not in {0,2})");

  NormalForm nf{cp.n, cp.m, cp.a, cp.b, Orientation::Bott, false};
  auto swap_factors = [&nf] {
    std::swap(nf.n, nf.m);
    std::swap(nf.a, nf.b);
    nf.swap_applied = !nf.swap_applied;
  };

  if (all_zero(nf.a) || all_zero(nf.b)) {
    if (nf.n < nf.m || (nf.n == nf.m && all_zero(nf.a) && !all_zero(nf.b))) swap_factors();
    if (!all_zero(nf.a)) nf.a = sign_canonical(nf.a);
    if (!all_zero(nf.b)) nf.b = sign_canonical(nf.b);
    return nf;
  }

  // Non-Bott: all nonzero entries of a share one value, those of b share the
  // reciprocal value, and the signs agree.
  const auto first_a = *std::find_if(nf.a.begin(), nf.a.end(), [](std::int64_t x) { return x != 0; });
  if (first_a < 0) {
    for (auto& x : nf.a) x = -x;
    for (auto& x : nf.b) x = -x;
  }
  if (nf.n < nf.m) swap_factors();
  nf.orientation = *std::max_element(nf.a.begin(), nf.a.end()) == 2 ? Orientation::TwoOnA : Orientation::TwoOnB;
  if (nf.n == nf.m && nf.orientation == Orientation::TwoOnB) {
    swap_factors();
    nf.orientation = Orientation::TwoOnA;
  }
  sort_descending(nf.a);
  sort_descending(nf.b);
  return nf;
}

bool is_generalized_bott(const NormalForm& nf) { return all_zero(nf.a) || all_zero(nf.b); }

Presentation cohomology_presentation(const CharPair& cp) {
  if (!validate(cp)) throw InvalidInput("cohomology presentation requires valid characteristic data");
  std::vector<LinearForm> b_factors, a_factors;
  for (auto bi : cp.b) b_factors.push_back({1, bi});
  for (auto aj : cp.a) a_factors.push_back({aj, 1});
  return {cp.n, cp.m, linear_product({1, 0}, b_factors), linear_product({0, 1}, a_factors)};
}

GradedRanks graded_ranks(const Presentation& p) {
  GradedRanks out;
  const std::vector<HomogPoly> gens{p.gen1, p.gen2};
  const auto top = static_cast<std::size_t>(p.n + p.m);
  for (std::size_t d = 0; d <= top; ++d) {
    const LatticeBasis piece = ideal_degree_lattice(gens, d);
    out.ranks.push_back(static_cast<long>(d + 1 - piece.rank()));
    IntVector torsion;
    if (piece.rank() > 0) {
      for (const auto& inv : smith_normal_form(piece.basis()).diagonal) {
        if (inv > 1) torsion.push_back(inv);
      }
    }
    out.torsion.push_back(std::move(torsion));
  }
  return out;
}

long h_vector_entry(int n, int m, int d) {
  long count = 0;
  for (int i = 0; i <= n; ++i) {
    const int j = d - i;
    if (j >= 0 && j <= m) ++count;
  }
  return count;
}

IntMatrix kernel_relation_matrix(const CharPair& cp) {
  check_shape(cp);
  const std::size_t n = cp.n, m = cp.m;
  const std::size_t z_last = n + m + 1;
  IntMatrix rel(n + m, n + m + 2);
  for (std::size_t i = 0; i < n; ++i) {
    rel(i, i) = 1;
    rel(i, n) = -1;
    rel(i, z_last) = -cp.b[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    rel(n + j, n) = -cp.a[j];
    rel(n + j, n + 1 + j) = 1;
    rel(n + j, z_last) = -1;
  }
  return rel;
}

std::vector<IntVector> subtorus_generators(const CharPair& cp) {
  const IntMatrix weights = subtorus_weights(cp);
  const IntMatrix t = weights.transpose();
  return {t.row(0), t.row(1)};
}

IntMatrix subtorus_weights(const CharPair& cp) {
  check_shape(cp);
  const std::size_t n = cp.n, m = cp.m;
  IntMatrix u(n + m + 2, 2);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, 0) = 1;
    u(i, 1) = cp.b[i];
  }
  u(n, 0) = 1;
  for (std::size_t j = 0; j < m; ++j) {
    u(n + 1 + j, 0) = cp.a[j];
    u(n + 1 + j, 1) = 1;
  }
  u(n + m + 1, 1) = 1;
  return u;
}

LatticeBasis kernel_lattice(const CharPair& cp) {
  if (!validate(cp)) throw InvalidInput("kernel lattice requires valid characteristic data");
  return kernel_basis(kernel_relation_matrix(cp));
}

}  // namespace qtoric
