// Copyright 2026 The hgcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hgcode/geometry.hpp"
#include "hgcode/oracle.hpp"
#include "test_util.hpp"

namespace {

using namespace hgcode;
using hgcode::testing::random_vec;
using hgcode::testing::unit;
using hgcode::testing::V;

TEST(Eta, UnitVectorExamples) {
  const Field f(2, 1);
  EXPECT_EQ(eta(f, unit(5, 0), unit(5, 0), 5), Elem{1});
  EXPECT_EQ(eta(f, unit(5, 1), unit(5, 2), 5), Elem{1});
  EXPECT_EQ(eta(f, unit(5, 1), unit(5, 3), 5), Elem{0});
  EXPECT_THROW(eta(f, unit(5, 1), unit(5, 3), 6), std::invalid_argument);
}

TEST(Eta, PartialFormDropsIncompletePair) {
  const Field f(2, 1);
  // Coordinates 1 and 2 form a pair; with t = 2 only coordinate 0 counts.
  EXPECT_EQ(eta(f, V({0, 1, 0}), V({0, 0, 1}), 2), Elem{0});
  EXPECT_EQ(eta(f, V({0, 1, 0}), V({0, 0, 1}), 3), Elem{1});
}

TEST(Eta, HermitianSymmetry) {
  std::mt19937_64 rng(7);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const Field f(p, e);
    for (int k = 0; k < 200; ++k) {
      const Vec x = random_vec(f, 7, rng), y = random_vec(f, 7, rng);
      ASSERT_EQ(eta(f, x, y), f.conj(eta(f, y, x)));
    }
  }
}

TEST(Isotropy, Examples) {
  const Field f(2, 1);
  EXPECT_TRUE(is_isotropic_point(f, unit(5, 1)));
  EXPECT_FALSE(is_isotropic_point(f, unit(5, 0)));
  EXPECT_TRUE(is_isotropic_line(f, LineRREF{unit(5, 1), unit(5, 3)}));
  EXPECT_FALSE(is_isotropic_line(f, LineRREF{unit(5, 1), unit(5, 2)}));
}

TEST(Counts, Examples) {
  EXPECT_EQ(mu(2, 5), 165);
  EXPECT_EQ(mu(2, 2), 3);
  EXPECT_EQ(mu(2, 0), 0);
  EXPECT_EQ(mu(2, 1), 0);
  EXPECT_EQ(capN(2, 5), 297);
  EXPECT_EQ(capN(2, 2), 0);
  EXPECT_EQ(capN(2, 3), 0);
  EXPECT_THROW(mu(2, -1), std::invalid_argument);
  EXPECT_THROW(capN(2, -1), std::invalid_argument);
}

TEST(Counts, MatchExhaustivePointScan) {
  const Field f2(2, 1), f3(3, 1);
  for (int m = 2; m <= 7; ++m)
    EXPECT_EQ(Count(oracle::enum_points_bf(f2, m).size()), mu(2, m)) << "m=" << m;
  for (int m = 2; m <= 5; ++m)
    EXPECT_EQ(Count(oracle::enum_points_bf(f3, m).size()), mu(3, m)) << "m=" << m;
}

TEST(Counts, MatchExhaustiveLineScan) {
  const Field f(2, 1);
  for (int m = 3; m <= 6; ++m) EXPECT_EQ(Count(oracle::enum_lines_bf(f, m).size()), capN(2, m)) << "m=" << m;
}

TEST(Counts, FrozenSmallValues) {
  // Exhaustive scans: q = 2, m = 2..7 and q = 3, m = 2..5.
  const std::vector<Count> mu2{3, 9, 45, 165, 693, 2709}, mu3{4, 28, 280, 2440};
  for (int m = 2; m <= 7; ++m) EXPECT_EQ(mu(2, m), mu2[m - 2]);
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(mu(3, m), mu3[m - 2]);
  EXPECT_EQ(capN(2, 4), 27);
  EXPECT_EQ(capN(2, 6), 6237);
  EXPECT_EQ(capN(2, 7), 89397);
  EXPECT_EQ(capN(3, 5), 6832);
}

TEST(Rref, Examples) {
  const Field f(2, 1), g(3, 1);
  auto [l1, d1] = rref_of_pair(f, unit(5, 1), unit(5, 3));
  EXPECT_EQ(l1, (LineRREF{unit(5, 1), unit(5, 3)}));
  EXPECT_EQ(d1, Field::one());
  // Swapping rows negates the determinant (visible in odd characteristic).
  auto [l2, d2] = rref_of_pair(g, unit(5, 3), unit(5, 1));
  EXPECT_EQ(l2, (LineRREF{unit(5, 1), unit(5, 3)}));
  EXPECT_EQ(d2, g.neg(Field::one()));
  Vec w = unit(5, 3);
  w[3] = Elem{2};
  auto [l3, d3] = rref_of_pair(f, unit(5, 1), w);
  EXPECT_EQ(l3, (LineRREF{unit(5, 1), unit(5, 3)}));
  EXPECT_EQ(d3, Elem{2});
  EXPECT_THROW(rref_of_pair(f, unit(5, 1), unit(5, 1)), std::invalid_argument);
  EXPECT_THROW(rref_of_pair(f, unit(5, 1), Vec(5, Field::zero())), std::invalid_argument);
}

TEST(Rref, DeterminantReconstructsForm) {
  // For random independent u, v: (u; v) = M (A; B), and det(M) is the
  // factor relating the 2x2 minors of (u; v) and (A; B).
  std::mt19937_64 rng(11);
  const Field f(3, 1);
  for (int k = 0; k < 300; ++k) {
    Vec u = random_vec(f, 6, rng), v = random_vec(f, 6, rng);
    LineRREF l;
    Elem det;
    try {
      std::tie(l, det) = rref_of_pair(f, u, v);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ASSERT_TRUE(is_rref(l));
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        const Elem uv = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
        const Elem ab = f.sub(f.mul(l.a[i], l.b[j]), f.mul(l.a[j], l.b[i]));
        ASSERT_EQ(uv, f.mul(det, ab));
      }
    auto [again, one] = rref_of_pair(f, l.a, l.b);
    ASSERT_EQ(again, l);
    ASSERT_EQ(one, Field::one());
  }
}

TEST(Lift, PrependsZero) {
  const Vec x = V({1, 2, 3, 0});
  EXPECT_EQ(lift_even(x, 4), V({0, 1, 2, 3, 0}));
  const LineRREF l{V({1, 0, 0, 0}), V({0, 0, 1, 0})};
  EXPECT_EQ(lift_even(l, 4), (LineRREF{V({0, 1, 0, 0, 0}), V({0, 0, 0, 1, 0})}));
  EXPECT_THROW(lift_even(V({1, 0, 0}), 3), std::invalid_argument);
}

TEST(PolarSpace, EvenFormIsHyperplaneSection) {
  const Field f(2, 1);
  const PolarSpace ps(f, 4);
  EXPECT_TRUE(ps.lifted());
  EXPECT_EQ(ps.ambient(), 5);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Vec x = random_vec(f, 4, rng), y = random_vec(f, 4, rng);
    ASSERT_EQ(ps.form(x, y), oracle::form_bf(f, x, y));
  }
  EXPECT_EQ(ps.num_points(), 45);
  EXPECT_EQ(ps.num_lines(), 27);
}

TEST(PolarSpace, DimensionGuard) {
  const Field f(2, 1);
  EXPECT_EQ(PolarSpace::max_supported_dimension(2), 29);
  EXPECT_NO_THROW(PolarSpace(f, 29));
  EXPECT_NO_THROW(PolarSpace(f, 28));
  EXPECT_THROW(PolarSpace(f, 30), std::domain_error);
  EXPECT_THROW(PolarSpace(f, 1), std::invalid_argument);
}

}  // namespace
