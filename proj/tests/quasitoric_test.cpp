#include "qtoric/quasitoric.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace qtoric {
namespace {

using Vec = std::vector<std::int64_t>;

HomogPoly poly(std::initializer_list<int> coeffs) {
  IntVector v;
  for (int c : coeffs) v.emplace_back(c);
  return HomogPoly(std::move(v));
}

HomogPoly power_product(std::size_t p1, const LinearForm& f, std::size_t k) {
  HomogPoly out = HomogPoly::monomial(p1, 0);
  for (std::size_t i = 0; i < k; ++i) out = homog_mul(out, HomogPoly::linear(f));
  return out;
}

// #{(i, j) : 0 <= i <= n, 0 <= j <= m, i + j = d}
long lattice_points(int n, int m, int d) {
  long count = 0;
  for (int i = 0; i <= n; ++i) count += (d - i >= 0 && d - i <= m) ? 1 : 0;
  return count;
}

CharPair random_valid(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(1, max_dim), coin(0, 1), kind(0, 2), wide(-4, 4);
  const int n = dim(rng), m = dim(rng);
  CharPair cp{n, m, Vec(static_cast<std::size_t>(m), 0), Vec(static_cast<std::size_t>(n), 0)};
  const int k = kind(rng);
  if (k == 0) {
    for (auto& x : cp.a) x = wide(rng);
  } else if (k == 1) {
    for (auto& x : cp.b) x = wide(rng);
  } else {
    const std::int64_t sign = coin(rng) ? 1 : -1;
    const bool two_on_a = coin(rng);
    const std::int64_t va = sign * (two_on_a ? 2 : 1), vb = sign * (two_on_a ? 1 : 2);
    for (auto& x : cp.a) x = coin(rng) ? va : 0;
    for (auto& x : cp.b) x = coin(rng) ? vb : 0;
    cp.a[0] = va;
    cp.b[0] = vb;
    std::shuffle(cp.a.begin(), cp.a.end(), rng);
    std::shuffle(cp.b.begin(), cp.b.end(), rng);
  }
  return cp;
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate({2, 1, {2}, {1, 0}}));
  EXPECT_FALSE(validate({1, 1, {3}, {1}}));
  EXPECT_TRUE(validate({2, 2, {0, 0}, {5, -7}}));
  EXPECT_FALSE(validate({1, 1, {1}, {1}}));
  EXPECT_FALSE(validate_bruteforce({1, 1, {1}, {1}}));
  EXPECT_TRUE(validate({1, 1, {-2}, {-1}}));
}

TEST(Validate, ShapeErrors) {
  EXPECT_THROW(check_shape({0, 1, {0}, {}}), InvalidInput);
  EXPECT_THROW(check_shape({2, 1, {0}, {0}}), InvalidInput);
  EXPECT_THROW(validate({1, 2, {0}, {0}}), InvalidInput);
}

TEST(Validate, IdentityBlockIsUnimodular) {
  for (const CharPair& cp : {CharPair{2, 1, {2}, {1, 0}}, CharPair{3, 2, {1, 0}, {4, -1, 0}}}) {
    const IntMatrix lambda = characteristic_matrix(cp);
    const std::size_t d = static_cast<std::size_t>(cp.n + cp.m);
    IntMatrix block(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) block(i, j) = lambda(i, j);
    }
    EXPECT_EQ(block, IntMatrix::identity(d));
  }
}

TEST(Validate, ClosedFormMatchesVertexOracle) {
  long valid = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      Vec entries(static_cast<std::size_t>(n + m), -3);
      while (true) {
        const CharPair cp{n, m, Vec(entries.begin(), entries.begin() + m), Vec(entries.begin() + m, entries.end())};
        EXPECT_EQ(validate(cp), validate_bruteforce(cp));
        valid += validate(cp) ? 1 : 0;
        std::size_t i = 0;
        while (i < entries.size() && entries[i] == 3) entries[i++] = -3;
        if (i == entries.size()) break;
        ++entries[i];
      }
    }
  }
  EXPECT_GT(valid, 0);
}

TEST(Normalize, Examples) {
  const NormalForm flipped = normalize({3, 1, {-2}, {-1, 0, -1}});
  EXPECT_EQ(flipped.char_pair(), (CharPair{3, 1, {2}, {1, 1, 0}}));
  EXPECT_EQ(flipped.orientation, Orientation::TwoOnA);
  EXPECT_FALSE(flipped.swap_applied);

  const NormalForm swapped = normalize({1, 2, {0, 2}, {1}});
  EXPECT_EQ(swapped.char_pair(), (CharPair{2, 1, {1}, {2, 0}}));
  EXPECT_EQ(swapped.orientation, Orientation::TwoOnB);
  EXPECT_TRUE(swapped.swap_applied);

  const NormalForm bott = normalize({2, 1, {0}, {3, -1}});
  EXPECT_EQ(bott.char_pair(), (CharPair{2, 1, {0}, {3, -1}}));
  EXPECT_EQ(bott.orientation, Orientation::Bott);
  EXPECT_EQ(normalize({2, 1, {0}, {1, -3}}), bott);

  EXPECT_THROW(normalize({1, 1, {3}, {1}}), InvalidInput);
}

TEST(Normalize, SquareOrientationPutsTwosOnA) {
  const NormalForm nf = normalize({2, 2, {1, 0}, {2, 2}});
  EXPECT_EQ(nf.orientation, Orientation::TwoOnA);
  EXPECT_EQ(nf.char_pair(), (CharPair{2, 2, {2, 2}, {1, 0}}));
}

TEST(Normalize, IdempotentAndInvariant) {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 400; ++trial) {
    const CharPair cp = random_valid(rng, 4);
    const NormalForm nf = normalize(cp);
    EXPECT_GE(nf.n, nf.m);
    EXPECT_TRUE(std::is_sorted(nf.a.rbegin(), nf.a.rend()));
    EXPECT_TRUE(std::is_sorted(nf.b.rbegin(), nf.b.rend()));
    const NormalForm again = normalize(nf.char_pair());
    EXPECT_EQ(again.char_pair(), nf.char_pair());
    EXPECT_EQ(again.orientation, nf.orientation);

    CharPair shuffled = cp;
    std::shuffle(shuffled.a.begin(), shuffled.a.end(), rng);
    std::shuffle(shuffled.b.begin(), shuffled.b.end(), rng);
    EXPECT_EQ(normalize(shuffled).char_pair(), nf.char_pair());

    CharPair negated = cp;
    for (auto& x : negated.a) x = -x;
    for (auto& x : negated.b) x = -x;
    EXPECT_EQ(normalize(negated).char_pair(), nf.char_pair());
  }
}

TEST(GeneralizedBott, Examples) {
  EXPECT_FALSE(is_generalized_bott(normalize({2, 1, {2}, {1, 0}})));
  EXPECT_TRUE(is_generalized_bott(normalize({2, 2, {5, -3}, {0, 0}})));
  EXPECT_TRUE(is_generalized_bott(normalize({2, 2, {0, 0}, {0, 0}})));
}

TEST(CohomologyPresentation, Examples) {
  const Presentation product = cohomology_presentation({1, 1, {0}, {0}});
  EXPECT_EQ(product.gen1, poly({1, 0, 0}));
  EXPECT_EQ(product.gen2, poly({0, 0, 1}));

  // x1^3 (x1 + 2 x2) and x2 (x1 + x2)
  const Presentation circle = cohomology_presentation({3, 1, {1}, {2, 0, 0}});
  EXPECT_EQ(circle.gen1, poly({1, 2, 0, 0, 0}));
  EXPECT_EQ(circle.gen2, poly({0, 1, 1}));
}

TEST(CohomologyPresentation, FoldedForm) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int s = 1; s <= m; ++s) {
        for (int r = 1; r <= n; ++r) {
          CharPair cp{n, m, Vec(static_cast<std::size_t>(m), 0), Vec(static_cast<std::size_t>(n), 0)};
          std::fill(cp.a.begin(), cp.a.begin() + s, 2);
          std::fill(cp.b.begin(), cp.b.begin() + r, 1);
          const Presentation p = cohomology_presentation(cp);
          EXPECT_EQ(p.gen1, power_product(static_cast<std::size_t>(n + 1 - r), {1, 1}, static_cast<std::size_t>(r)));
          const HomogPoly x2_part = HomogPoly::monomial(static_cast<std::size_t>(m + 1 - s),
                                                        static_cast<std::size_t>(m + 1 - s));
          HomogPoly gen2 = x2_part;
          for (int k = 0; k < s; ++k) gen2 = homog_mul(gen2, HomogPoly::linear({2, 1}));
          EXPECT_EQ(p.gen2, gen2);
        }
      }
    }
  }
}

TEST(GradedRanks, Examples) {
  const GradedRanks product = graded_ranks(cohomology_presentation({1, 1, {0}, {0}}));
  EXPECT_EQ(product.ranks, (std::vector<long>{1, 2, 1}));
  EXPECT_TRUE(product.torsion_free());
  const GradedRanks hirzebruch = graded_ranks(cohomology_presentation({1, 1, {2}, {1}}));
  EXPECT_EQ(hirzebruch.ranks, (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(hirzebruch.total(), 4);
}

TEST(GradedRanks, MatchLatticePointCount) {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 200; ++trial) {
    const CharPair cp = random_valid(rng, 5);
    const GradedRanks ranks = graded_ranks(cohomology_presentation(cp));
    ASSERT_EQ(ranks.ranks.size(), static_cast<std::size_t>(cp.n + cp.m + 1));
    EXPECT_EQ(ranks.ranks[0], 1);
    for (int d = 0; d <= cp.n + cp.m; ++d) {
      EXPECT_EQ(ranks.ranks[static_cast<std::size_t>(d)], lattice_points(cp.n, cp.m, d));
      EXPECT_EQ(h_vector_entry(cp.n, cp.m, d), lattice_points(cp.n, cp.m, d));
    }
    EXPECT_TRUE(ranks.torsion_free());
    EXPECT_EQ(ranks.total(), (cp.n + 1) * (cp.m + 1));
  }
}

TEST(KernelLattice, Examples) {
  const std::vector<IntVector> expected{{1, 1, 1, 2, 0}, {1, 0, 0, 1, 1}};
  EXPECT_EQ(kernel_lattice({2, 1, {2}, {1, 0}}), LatticeBasis::span_of(5, expected));

  const std::vector<IntVector> blocks{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}};
  EXPECT_EQ(kernel_lattice({2, 2, {0, 0}, {0, 0}}), LatticeBasis::span_of(6, blocks));
}

TEST(KernelLattice, SpanOfSubtorusGenerators) {
  std::mt19937 rng(227);
  for (int trial = 0; trial < 200; ++trial) {
    const CharPair cp = random_valid(rng, 5);
    const LatticeBasis kernel = kernel_lattice(cp);
    const auto gens = subtorus_generators(cp);
    EXPECT_EQ(kernel.rank(), 2u);
    EXPECT_EQ(kernel, LatticeBasis::span_of(kernel.ambient_dim(), gens));
    EXPECT_TRUE(is_basis_extendable(kernel.vectors()));
    const IntMatrix relations = kernel_relation_matrix(cp);
    for (const auto& v : gens) {
      for (std::size_t i = 0; i < relations.rows(); ++i) {
        Integer dot = 0;
        for (std::size_t j = 0; j < relations.cols(); ++j) dot += relations(i, j) * v[j];
        EXPECT_EQ(dot, 0);
      }
    }
  }
}

TEST(SubtorusWeights, RowsAreCoordinateExponents) {
  const IntMatrix u = subtorus_weights({2, 1, {2}, {1, 0}});
  EXPECT_EQ(u, (IntMatrix{{1, 1}, {1, 0}, {1, 0}, {2, 1}, {0, 1}}));
}

}  // namespace
}  // namespace qtoric
