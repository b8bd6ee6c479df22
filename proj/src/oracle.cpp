#include "qtoric/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <tuple>

#include "qtoric/polyring.hpp"

namespace qtoric {

namespace {

int value_rank(int v) { return v == 0 ? 0 : (v > 0 ? 2 * v - 1 : -2 * v); }

IntMatrix matrix_2x2(int g11, int g12, int g21, int g22) { return IntMatrix{{g11, g12}, {g21, g22}}; }

std::pair<std::size_t, std::size_t> degree_range(const Presentation& p) {
  const std::size_t d1 = p.gen1.degree(), d2 = p.gen2.degree();
  return {std::min(d1, d2), std::max(d1, d2)};
}

bool is_signed_permutation(const IntMatrix& s) {
  if (s.rows() != s.cols()) return false;
  std::vector<int> col_hits(s.cols(), 0);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const Integer& e = s(i, j);
      if (e == 0) continue;
      if (e != 1 && e != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

// Signed permutation with row k selecting coordinate source[k], negated where conj[k].
IntMatrix coordinate_map(const std::vector<std::size_t>& source, const std::vector<bool>& conj) {
  IntMatrix s(source.size(), source.size());
  for (std::size_t k = 0; k < source.size(); ++k) s(k, source[k]) = conj[k] ? -1 : 1;
  return s;
}

std::vector<std::int64_t> leading(std::size_t length, int count, std::int64_t value) {
  std::vector<std::int64_t> v(length, 0);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = value;
  return v;
}

WitnessTriple make_triple(CharPair source, CharPair target, IntMatrix s, IntMatrix t) {
  IntMatrix u = subtorus_weights(source);
  IntMatrix u_prime = subtorus_weights(target);
  return {std::move(source), std::move(target), std::move(u), std::move(u_prime),
          MonomialWitness(std::move(s), std::move(t))};
}

// Swap w_1 <-> w_{n+1}, conjugate z_2; theta(t1, t2) = (t1 t2^b, t2^-1).
WitnessTriple spread_witness(const WitnessParams& p) {
  if (p.n < 2) throw InvalidInput("spread witness needs n >= 2");
  if (p.a * p.b != 2) throw InvalidInput("spread witness needs a * b = 2");
  const auto n = static_cast<std::size_t>(p.n);
  CharPair source{p.n, 1, {p.a}, leading(n, 1, p.b)};
  CharPair target{p.n, 1, {p.a}, leading(n, p.n, p.b)};

  std::vector<std::size_t> from(n + 3);
  std::vector<bool> conj(n + 3, false);
  for (std::size_t k = 0; k < n + 3; ++k) from[k] = k;
  std::swap(from[0], from[n]);
  conj[n + 2] = true;
  return make_triple(std::move(source), std::move(target), coordinate_map(from, conj),
                     matrix_2x2(1, p.b, 0, -1));
}

// Cyclic shift of w by r, conjugate z_{s+1..m+1}; theta(t1, t2) = (t1 t2, t2^-1).
WitnessTriple fold_r_witness(const WitnessParams& p) {
  if (p.n < 2 || p.m < 2) throw InvalidInput("fold witnesses need n, m >= 2");
  if (p.s < 1 || p.s > p.m) throw InvalidInput("fold-r witness needs 1 <= s <= m");
  if (p.r < 1 || p.r > (p.n + 1) / 2) throw InvalidInput("fold-r witness needs 1 <= r <= floor((n+1)/2)");
  const auto n = static_cast<std::size_t>(p.n), m = static_cast<std::size_t>(p.m);
  const auto s = static_cast<std::size_t>(p.s), r = static_cast<std::size_t>(p.r);
  CharPair source{p.n, p.m, leading(m, p.s, 2), leading(n, p.r, 1)};
  CharPair target{p.n, p.m, leading(m, p.s, 2), leading(n, p.n + 1 - p.r, 1)};

  std::vector<std::size_t> from(n + m + 2);
  std::vector<bool> conj(n + m + 2, false);
  for (std::size_t k = 0; k <= n; ++k) from[k] = (k + r) % (n + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    from[n + 1 + j] = n + 1 + j;
    conj[n + 1 + j] = j >= s;
  }
  return make_triple(std::move(source), std::move(target), coordinate_map(from, conj), matrix_2x2(1, 1, 0, -1));
}

// Conjugate w_{r+1..n+1}, cyclic shift of z by s; theta(t1, t2) = (t1^-1, t1^2 t2).
WitnessTriple fold_s_witness(const WitnessParams& p) {
  if (p.n < 2 || p.m < 2) throw InvalidInput("fold witnesses need n, m >= 2");
  if (p.r < 1 || p.r > p.n) throw InvalidInput("fold-s witness needs 1 <= r <= n");
  if (p.s < 1 || p.s > (p.m + 1) / 2) throw InvalidInput("fold-s witness needs 1 <= s <= floor((m+1)/2)");
  const auto n = static_cast<std::size_t>(p.n), m = static_cast<std::size_t>(p.m);
  const auto s = static_cast<std::size_t>(p.s), r = static_cast<std::size_t>(p.r);
  CharPair source{p.n, p.m, leading(m, p.s, 2), leading(n, p.r, 1)};
  CharPair target{p.n, p.m, leading(m, p.m + 1 - p.s, 2), leading(n, p.r, 1)};

  std::vector<std::size_t> from(n + m + 2);
  std::vector<bool> conj(n + m + 2, false);
  for (std::size_t k = 0; k <= n; ++k) {
    from[k] = k;
    conj[k] = k >= r;
  }
  for (std::size_t j = 0; j <= m; ++j) from[n + 1 + j] = n + 1 + (j + s) % (m + 1);
  return make_triple(std::move(source), std::move(target), coordinate_map(from, conj), matrix_2x2(-1, 0, 2, 1));
}

}  // namespace

bool maps_ideal_onto(const Presentation& p, const Presentation& q, const IntMatrix& g, std::size_t max_degree) {
  const std::vector<HomogPoly> images{substitute_linear(p.gen1, g), substitute_linear(p.gen2, g)};
  const std::vector<HomogPoly> targets{q.gen1, q.gen2};
  const std::size_t lowest = std::min(degree_range(p).first, degree_range(q).first);
  for (std::size_t d = lowest; d <= max_degree; ++d) {
    if (!lattice_equal(ideal_degree_lattice(images, d), ideal_degree_lattice(targets, d))) return false;
  }
  return true;
}

std::vector<IntMatrix> unimodular_candidates(int bound) {
  using Entries = std::array<int, 4>;
  std::vector<Entries> found;
  for (int g11 = -bound; g11 <= bound; ++g11) {
    for (int g12 = -bound; g12 <= bound; ++g12) {
      for (int g21 = -bound; g21 <= bound; ++g21) {
        for (int g22 = -bound; g22 <= bound; ++g22) {
          const int det = g11 * g22 - g12 * g21;
          if (det == 1 || det == -1) found.push_back({g11, g12, g21, g22});
        }
      }
    }
  }
  auto key = [](const Entries& e) {
    return std::make_tuple(std::abs(e[0]) + std::abs(e[1]) + std::abs(e[2]) + std::abs(e[3]),
                           std::abs(e[1]) + std::abs(e[2]), value_rank(e[0]), value_rank(e[1]),
                           value_rank(e[2]), value_rank(e[3]));
  };
  std::sort(found.begin(), found.end(), [&](const Entries& x, const Entries& y) { return key(x) < key(y); });

  std::vector<IntMatrix> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back(matrix_2x2(e[0], e[1], e[2], e[3]));
  return out;
}

IsoVerdict ring_iso_search(const Presentation& p, const Presentation& q, int bound) {
  if (degree_range(p) != degree_range(q)) {
    throw DimensionMismatch("presentations have different generator degrees");
  }
  if (bound < 0) throw std::invalid_argument("search bound must be nonnegative");
  const auto [lowest, highest] = degree_range(q);

  // Target pieces are fixed across candidates.
  const std::vector<HomogPoly> targets{q.gen1, q.gen2};
  std::vector<LatticeBasis> target_pieces;
  for (std::size_t d = lowest; d <= highest; ++d) target_pieces.push_back(ideal_degree_lattice(targets, d));

  for (const auto& g : unimodular_candidates(bound)) {
    const std::vector<HomogPoly> images{substitute_linear(p.gen1, g), substitute_linear(p.gen2, g)};
    bool matches = true;
    for (std::size_t d = lowest; d <= highest && matches; ++d) {
      matches = ideal_degree_lattice(images, d) == target_pieces[d - lowest];
    }
    if (matches) return IsoFound{g};
  }
  return IsoNoneWithinBound{bound};
}

MonomialWitness::MonomialWitness(IntMatrix signed_permutation, IntMatrix reparametrization)
    : signed_permutation_(std::move(signed_permutation)), reparametrization_(std::move(reparametrization)) {
  if (!is_signed_permutation(signed_permutation_)) {
    throw std::invalid_argument("coordinate map must be a signed permutation matrix");
  }
  if (reparametrization_.rows() != 2 || reparametrization_.cols() != 2) {
    throw std::invalid_argument("torus reparametrization must be 2x2");
  }
  const Integer det = determinant(reparametrization_);
  if (det != 1 && det != -1) throw std::invalid_argument("torus reparametrization must be unimodular");
}

bool witness_check(const IntMatrix& u, const IntMatrix& u_prime, const MonomialWitness& w) {
  const IntMatrix& s = w.signed_permutation();
  if (u.cols() != 2 || u_prime.cols() != 2 || u.rows() != u_prime.rows() || s.rows() != u.rows()) {
    throw DimensionMismatch("weight matrices and coordinate map must share the torus dimension");
  }
  return s * u == u_prime * w.reparametrization();
}

const char* witness_family_name(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::Spread: return "spread";
    case WitnessFamily::FoldR: return "fold-r";
    case WitnessFamily::FoldS: return "fold-s";
  }
  return "unknown";
}

std::optional<WitnessFamily> parse_witness_family(const std::string& name) {
  for (auto f : {WitnessFamily::Spread, WitnessFamily::FoldR, WitnessFamily::FoldS}) {
    if (name == witness_family_name(f)) return f;
  }
  return std::nullopt;
}

WitnessTriple builtin_witness(WitnessFamily family, const WitnessParams& params) {
  switch (family) {
    case WitnessFamily::Spread: return spread_witness(params);
    case WitnessFamily::FoldR: return fold_r_witness(params);
    case WitnessFamily::FoldS: return fold_s_witness(params);
  }
  throw InvalidInput("unknown witness family");
}

}  // namespace qtoric
