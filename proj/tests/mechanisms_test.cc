//
// Copyright 2026 The Staircase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "staircase/mechanism.h"
#include "staircase/mechanisms.h"
#include "staircase/privacy.h"
#include "staircase/random.h"
#include "test_util.h"

namespace staircase {
namespace {

using ::staircase::testing::Dist;
using ::staircase::testing::Mech;
using ::staircase::testing::Vec;
using ::testing::DoubleNear;
using ::testing::ElementsAre;

void ExpectRowStochastic(const Mechanism& q) {
  for (int x = 0; x < q.inputs(); ++x) {
    double sum = 0.0;
    for (int y = 0; y < q.outputs(); ++y) {
      EXPECT_GE(q(x, y), 0.0);
      sum += q(x, y);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(BinaryHypothesisTestingTest, Examples) {
  const double eps = std::log(3.0);
  auto q = BinaryHypothesisTesting(Dist({0.7, 0.3}), Dist({0.3, 0.7}), eps);
  ASSERT_OK(q);
  EXPECT_LT(MaxAbsDifference(*q, Mech({{0.75, 0.25}, {0.25, 0.75}}), false),
            1e-15);

  auto same = BinaryHypothesisTesting(Dist({0.2, 0.8}), Dist({0.2, 0.8}), eps);
  ASSERT_OK(same);
  EXPECT_NEAR((*same)(0, 0), 0.75, 1e-15);
  EXPECT_NEAR((*same)(1, 0), 0.75, 1e-15);

  auto flat = BinaryHypothesisTesting(Dist({0.2, 0.8}), Dist({0.6, 0.4}), 0.0);
  ASSERT_OK(flat);
  for (int x = 0; x < 2; ++x) {
    EXPECT_THAT(Vec(flat->row(x)), ElementsAre(0.5, 0.5));
  }
  EXPECT_FALSE(
      BinaryHypothesisTesting(Dist({0.5, 0.5}), Dist({0.2, 0.3, 0.5}), 1.0)
          .ok());
}

TEST(BinaryHypothesisTestingTest, MatchesRandomizedResponseAtTwoSymbols) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Distribution p0 = SampleUniformSimplex(2, rng);
    Distribution p1 = SampleUniformSimplex(2, rng);
    const double eps = 5.0 * rng.Uniform();
    auto bin = BinaryHypothesisTesting(p0, p1, eps);
    auto rr = RandomizedResponse(2, eps);
    EXPECT_LT(MaxAbsDifference(*bin, *rr, /*up_to_column_order=*/true), 1e-15);
  }
}

TEST(BinaryMutualInformationTest, TieBreaking) {
  auto uniform = InformationPartition(Dist({0.5, 0.5}));
  ASSERT_OK(uniform);
  EXPECT_THAT(uniform->members, ElementsAre(0));

  auto exact = InformationPartition(Dist({0.2, 0.3, 0.5}));
  ASSERT_OK(exact);
  EXPECT_THAT(exact->members, ElementsAre(2));
  EXPECT_NEAR(exact->mass, 0.5, 1e-15);

  auto skewed = InformationPartition(Dist({0.7, 0.2, 0.1}));
  ASSERT_OK(skewed);
  EXPECT_THAT(skewed->members, ElementsAre(0));

  auto q = BinaryMutualInformation(Dist({0.5, 0.5}), 1.3);
  EXPECT_LT(MaxAbsDifference(*q, *RandomizedResponse(2, 1.3), true), 1e-15);
}

TEST(BinaryMutualInformationTest, AlphabetCap) {
  std::vector<double> big(kMaxSubsetSearchInputs + 1, 1.0);
  EXPECT_FALSE(BinaryMutualInformation(Dist(big), 1.0).ok());
}

TEST(RandomizedResponseTest, Examples) {
  auto rr3 = RandomizedResponse(3, std::log(2.0));
  ASSERT_OK(rr3);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      EXPECT_NEAR((*rr3)(x, y), x == y ? 0.5 : 0.25, 1e-15);
    }
  }
  EXPECT_LT(MaxAbsDifference(*RandomizedResponse(2, std::log(3.0)),
                             Mech({{0.75, 0.25}, {0.25, 0.75}}), false),
            1e-15);
  auto flat = RandomizedResponse(4, 0.0);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) EXPECT_DOUBLE_EQ((*flat)(x, y), 0.25);
  }
}

TEST(GeometricTest, RowsAndStructure) {
  for (int k = 2; k <= 8; ++k) {
    auto g = Geometric(k, 2.0);
    ASSERT_OK(g);
    ExpectRowStochastic(*g);
    EXPECT_NEAR(EffectiveEpsilon(*g), 2.0, 1e-12);
    if (k >= 3) {
      EXPECT_FALSE(IsStaircase(*g, 2.0));
    }
  }
  EXPECT_FALSE(Geometric(3, 0.0).ok());
}

TEST(QuaternaryTest, Examples) {
  auto q0 = Quaternary(0.0, 0.3);
  ASSERT_OK(q0);
  EXPECT_LT(MaxAbsDifference(*q0, Mech({{0.3, 0, 0.35, 0.35},
                                        {0, 0.3, 0.35, 0.35}}),
                             false),
            1e-15);
  auto q = Quaternary(std::log(3.0), 0.2);
  ASSERT_OK(q);
  EXPECT_LT(MaxAbsDifference(*q, Mech({{0.2, 0, 0.2, 0.6},
                                       {0, 0.2, 0.6, 0.2}}),
                             false),
            1e-15);
  auto pure = Quaternary(1.0, 0.0);
  ASSERT_OK(pure);
  EXPECT_EQ((*pure)(0, 0), 0.0);
  EXPECT_EQ((*pure)(1, 1), 0.0);
  const std::vector<int> tail = {2, 3};
  auto restricted = pure->RestrictOutputs(tail);
  ASSERT_OK(restricted);
  EXPECT_LT(MaxAbsDifference(*restricted, *RandomizedResponse(2, 1.0), true),
            1e-15);
}

TEST(QuaternaryTest, RestrictionIsBinaryMechanism) {
  for (double delta : {0.05, 0.2, 0.6}) {
    auto q = Quaternary(1.5, delta);
    const std::vector<int> tail = {2, 3};
    auto r = q->RestrictOutputs(tail);
    ASSERT_OK(r);
    EXPECT_LT(MaxAbsDifference(*r, *RandomizedResponse(2, 1.5), true), 1e-15);
  }
}

TEST(ConstructorsTest, SaturateTheirPrivacyLevel) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 6;
    const double eps = 0.1 + 4.0 * rng.Uniform();
    Distribution p0 = SampleUniformSimplex(k, rng);
    Distribution p1 = SampleUniformSimplex(k, rng);
    std::vector<Mechanism> staircases = {
        *BinaryHypothesisTesting(p0, p1, eps),
        *BinaryMutualInformation(p0, eps),
        *RandomizedResponse(k, eps),
    };
    for (const Mechanism& q : staircases) {
      ExpectRowStochastic(q);
      EXPECT_TRUE(IsLocallyPrivate(q, eps));
      EXPECT_TRUE(IsStaircase(q, eps));
      EXPECT_FALSE(IsLocallyPrivate(q, eps - 1e-3));
    }
    auto g = Geometric(k, eps);
    ExpectRowStochastic(*g);
    EXPECT_TRUE(IsLocallyPrivate(*g, eps));
    const double delta = 0.5 * rng.Uniform();
    auto quat = Quaternary(eps, delta);
    ExpectRowStochastic(*quat);
    EXPECT_TRUE(IsApproxPrivate(*quat, eps, delta));
    EXPECT_FALSE(IsApproxPrivate(*quat, eps - 1e-3, delta));
  }
}

}  // namespace
}  // namespace staircase
