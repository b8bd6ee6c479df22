#include "qtoric/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "qtoric/classify.hpp"

namespace qtoric {
namespace {

using Vec = std::vector<std::int64_t>;

Vec leading(int length, int count, std::int64_t value) {
  Vec v(static_cast<std::size_t>(length), 0);
  std::fill(v.begin(), v.begin() + count, value);
  return v;
}

CharPair folded(int n, int m, int s, int r, bool twos_on_a = true) {
  return twos_on_a ? CharPair{n, m, leading(m, s, 2), leading(n, r, 1)}
                   : CharPair{n, m, leading(m, s, 1), leading(n, r, 2)};
}

IntMatrix coordinate_map(const std::vector<std::size_t>& from, const std::vector<bool>& conj) {
  IntMatrix s(from.size(), from.size());
  for (std::size_t k = 0; k < from.size(); ++k) s(k, from[k]) = conj[k] ? -1 : 1;
  return s;
}

TEST(UnimodularCandidates, OrderedAndComplete) {
  const auto candidates = unimodular_candidates(3);
  ASSERT_FALSE(candidates.empty());
  EXPECT_EQ(candidates.front(), IntMatrix::identity(2));
  long expected = 0;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        for (int d = -3; d <= 3; ++d) expected += std::abs(a * d - b * c) == 1 ? 1 : 0;
      }
    }
  }
  EXPECT_EQ(static_cast<long>(candidates.size()), expected);
  for (const auto& g : candidates) EXPECT_TRUE(abs(determinant(g)) == 1);
}

TEST(RingIsoSearch, Examples) {
  const Presentation p = cohomology_presentation(folded(3, 2, 1, 2));
  const IsoVerdict self = ring_iso_search(p, p, 3);
  ASSERT_TRUE(iso_found(self));
  EXPECT_EQ(std::get<IsoFound>(self).substitution, IntMatrix::identity(2));

  // s' = m + 1 - s with the same r.
  const Presentation x = cohomology_presentation(folded(3, 3, 1, 1));
  const Presentation y = cohomology_presentation(folded(3, 3, 3, 1));
  const IsoVerdict fold = ring_iso_search(x, y, 3);
  ASSERT_TRUE(iso_found(fold));
  EXPECT_TRUE(maps_ideal_onto(x, y, IntMatrix{{-1, 0}, {2, 1}}, 4));

  const IsoVerdict circle = ring_iso_search(cohomology_presentation({3, 1, {1}, {2, 0, 0}}),
                                            cohomology_presentation({3, 1, {2}, {1, 0, 0}}), 3);
  ASSERT_FALSE(iso_found(circle));
  EXPECT_EQ(std::get<IsoNoneWithinBound>(circle).bound, 3);

  EXPECT_THROW(ring_iso_search(cohomology_presentation(folded(3, 2, 1, 1)),
                               cohomology_presentation(folded(4, 1, 1, 1)), 3),
               DimensionMismatch);
}

TEST(RingIsoSearch, FoundIsSoundBeyondGeneratorDegrees) {
  std::mt19937 rng(401);
  std::uniform_int_distribution<int> dim(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = dim(rng), m = dim(rng);
    std::uniform_int_distribution<int> pick_s(1, m), pick_r(1, n);
    const CharPair x = folded(n, m, pick_s(rng), pick_r(rng));
    const CharPair y = folded(n, m, pick_s(rng), pick_r(rng));
    const Presentation p = cohomology_presentation(x), q = cohomology_presentation(y);
    const IsoVerdict v = ring_iso_search(p, q, 3);
    if (!iso_found(v)) continue;
    EXPECT_TRUE(maps_ideal_onto(p, q, std::get<IsoFound>(v).substitution, static_cast<std::size_t>(n + m)));
  }
}

TEST(RingIsoSearch, AgreesWithClassifierOnNonBott) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= n; ++m) {
      std::vector<CharPair> reps;
      for (int s = 1; s <= (m + 1) / 2; ++s) {
        for (int r = 1; r <= (n + 1) / 2; ++r) {
          reps.push_back(folded(n, m, s, r));
          if (n != m) reps.push_back(folded(n, m, s, r, false));
        }
      }
      for (const auto& x : reps) {
        for (const auto& y : reps) {
          const bool found = iso_found(
              ring_iso_search(cohomology_presentation(x), cohomology_presentation(y), 3));
          EXPECT_EQ(found, homeomorphic(x, y).homeomorphic);
        }
      }
    }
  }
}

TEST(RingIsoSearch, BottAgainstNonBottHasNoIsomorphism) {
  std::mt19937 rng(409);
  std::uniform_int_distribution<int> dim(2, 4), entry(-2, 2), coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = dim(rng), m = dim(rng);
    std::uniform_int_distribution<int> pick_s(1, m), pick_r(1, n);
    const CharPair nonbott = folded(n, m, pick_s(rng), pick_r(rng), coin(rng));
    CharPair bott{n, m, Vec(static_cast<std::size_t>(m), 0), Vec(static_cast<std::size_t>(n), 0)};
    for (auto& x : coin(rng) ? bott.a : bott.b) x = entry(rng);
    EXPECT_FALSE(iso_found(
        ring_iso_search(cohomology_presentation(bott), cohomology_presentation(nonbott), 3)));
    EXPECT_FALSE(homeomorphic(bott, nonbott).homeomorphic);
  }
}

TEST(RingIsoSearch, FoundImpliesHomeomorphic) {
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= n; ++m) {
      std::vector<CharPair> pairs;
      for (const auto& c : enumerate_classes(n, m, 2)) pairs.push_back(c.representative);
      for (const auto& x : pairs) {
        for (const auto& y : pairs) {
          if (iso_found(ring_iso_search(cohomology_presentation(x), cohomology_presentation(y), 3))) {
            EXPECT_TRUE(homeomorphic(x, y).homeomorphic);
          }
        }
      }
    }
  }
}

TEST(MonomialWitness, RejectsBadMaps) {
  EXPECT_THROW(MonomialWitness(IntMatrix{{1, 1}, {0, 1}}, IntMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(MonomialWitness(IntMatrix{{2, 0}, {0, 1}}, IntMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(MonomialWitness(IntMatrix::identity(3), IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(MonomialWitness(IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 2}, {0, -1}}));
}

TEST(WitnessCheck, Examples) {
  // Swap w1 <-> w3 and conjugate z2; theta(t1, t2) = (t1 t2^2, t2^-1).
  const IntMatrix u = subtorus_weights({2, 1, {1}, {2, 0}});
  const IntMatrix u_prime = subtorus_weights({2, 1, {1}, {2, 2}});
  const MonomialWitness spread(coordinate_map({2, 1, 0, 3, 4}, {false, false, false, false, true}),
                               IntMatrix{{1, 2}, {0, -1}});
  EXPECT_TRUE(witness_check(u, u_prime, spread));

  // Cyclic w-shift by r = 1 and conjugation of z_{s+1..m+1}; theta(t1, t2) = (t1 t2, t2^-1).
  const IntMatrix v = subtorus_weights(folded(2, 2, 1, 1));
  const IntMatrix v_prime = subtorus_weights(folded(2, 2, 1, 2));
  const MonomialWitness fold(coordinate_map({1, 2, 0, 3, 4, 5}, {false, false, false, false, true, true}),
                             IntMatrix{{1, 1}, {0, -1}});
  EXPECT_TRUE(witness_check(v, v_prime, fold));

  EXPECT_TRUE(witness_check(v, v, MonomialWitness(IntMatrix::identity(6), IntMatrix::identity(2))));
  EXPECT_FALSE(witness_check(v, v_prime, MonomialWitness(IntMatrix::identity(6), IntMatrix::identity(2))));
  EXPECT_THROW(witness_check(u, v, MonomialWitness(IntMatrix::identity(5), IntMatrix::identity(2))),
               DimensionMismatch);
}

TEST(BuiltinWitness, Examples) {
  const WitnessTriple case1 = builtin_witness(WitnessFamily::FoldR, {3, 2, 1, 1, 0, 0});
  EXPECT_EQ(case1.target, folded(3, 2, 1, 3));
  EXPECT_TRUE(witness_check(case1.source_weights, case1.target_weights, case1.witness));

  const WitnessTriple case2 = builtin_witness(WitnessFamily::FoldS, {2, 3, 1, 1, 0, 0});
  EXPECT_EQ(case2.target, folded(2, 3, 3, 1));
  EXPECT_EQ(case2.witness.reparametrization(), (IntMatrix{{-1, 0}, {2, 1}}));
  EXPECT_TRUE(witness_check(case2.source_weights, case2.target_weights, case2.witness));

  const WitnessTriple spread = builtin_witness(WitnessFamily::Spread, {2, 1, 0, 0, 2, 1});
  EXPECT_EQ(spread.target, (CharPair{2, 1, {2}, {1, 1}}));
  EXPECT_TRUE(witness_check(spread.source_weights, spread.target_weights, spread.witness));

  EXPECT_THROW(builtin_witness(WitnessFamily::Spread, {2, 1, 0, 0, 3, 1}), InvalidInput);
  EXPECT_THROW(builtin_witness(WitnessFamily::FoldR, {3, 2, 1, 3, 0, 0}), InvalidInput);
}

TEST(BuiltinWitness, TargetsAreHomeomorphicToSources) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      for (int s = 1; s <= m; ++s) {
        for (int r = 1; r <= (n + 1) / 2; ++r) {
          const WitnessTriple t = builtin_witness(WitnessFamily::FoldR, {n, m, s, r, 0, 0});
          EXPECT_TRUE(witness_check(t.source_weights, t.target_weights, t.witness));
          EXPECT_TRUE(homeomorphic(t.source, t.target).homeomorphic);
        }
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const WitnessTriple t = builtin_witness(WitnessFamily::Spread, {n, 1, 0, 0, 1, 2});
    EXPECT_TRUE(witness_check(t.source_weights, t.target_weights, t.witness));
    EXPECT_TRUE(homeomorphic(t.source, t.target).homeomorphic);
  }
}

TEST(WitnessFamily, Names) {
  for (auto f : {WitnessFamily::Spread, WitnessFamily::FoldR, WitnessFamily::FoldS}) {
    EXPECT_EQ(parse_witness_family(witness_family_name(f)), f);
  }
  EXPECT_FALSE(parse_witness_family("lemma").has_value());
}

}  // namespace
}  // namespace qtoric
