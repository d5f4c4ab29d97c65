// Copyright 2026 The CICI Authors.
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

#include "cici/bounds.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cici/independence.h"
#include "cici/inference.h"
#include "test_oracle.h"

namespace cici {
namespace {

// 20 points per axis over [0.05, 0.95].
std::vector<double> Grid() {
  std::vector<double> g;
  for (int i = 0; i < 20; ++i) g.push_back(0.05 + 0.9 * i / 19.0);
  return g;
}

double OracleCorner(const FactoredSymmetric& p, double a, double b, double f) {
  const double k = p.k, w = p.w;
  // e+ table is one minus [[k^2 w, kw], [kw, w]].
  return testing::EnumerateJoint(a, b, f, 1 - k * k * w, 1 - k * w, 1 - k * w,
                                 1 - w)
      .b;
}

TEST(FactoredSymmetricTest, Examples) {
  const auto m = factored_symmetric_matrix({0.5, 0.9});
  EXPECT_EQ(m.state(), EvidenceState::kNeg);
  EXPECT_NEAR(m.r(), 0.225, 1e-15);
  EXPECT_NEAR(m.s(), 0.45, 1e-15);
  EXPECT_NEAR(m.t(), 0.45, 1e-15);
  EXPECT_NEAR(m.u(), 0.9, 1e-15);
  const auto near_one = factored_symmetric_matrix({1 - 1e-12, 0.7});
  EXPECT_NEAR(near_one.r(), 0.7, 1e-11);
  EXPECT_NEAR(near_one.s(), 0.7, 1e-11);
}

TEST(FactoredSymmetricTest, MatchesNoisyOrAndIsCici) {
  for (double k : Grid()) {
    for (double w : Grid()) {
      const auto m = factored_symmetric_matrix({k, w});
      EXPECT_TRUE(is_cici(m));
      EXPECT_NEAR(m.det(), 0, 1e-15);
      const auto reference = noisy_or_matrix({w, k, k}).complement();
      EXPECT_NEAR(m.r(), reference.r(), 1e-15);
      EXPECT_NEAR(m.u(), reference.u(), 1e-15);
    }
  }
}

TEST(PriorBoundCheckTest, NoisyOrExample) {
  const std::vector<double> a_grid{0, 0.25, 0.5, 0.75, 1};
  EXPECT_TRUE(prop7_lower_bound_check(NoisyOrParams(0.9, 0.5, 0.5),
                                      Probability(0.6), a_grid));
  EXPECT_TRUE(prop7_lower_bound_check(FactoredSymmetric(0.5, 0.9),
                                      Probability(0.6), a_grid));
  const auto m_pos = noisy_or_matrix({0.9, 0.5, 0.5});
  EXPECT_NEAR(belief_B(BeliefQuery(1, 0.6, 1), m_pos), 0.678832116788, 1e-12);
  EXPECT_NEAR(belief_B(BeliefQuery(0, 0.6, 1), m_pos), 0.891891891892, 1e-12);
  EXPECT_NEAR(belief_B(BeliefQuery(0, 0.6, 0), m_pos), 3.0 / 7, 1e-12);
  EXPECT_NEAR(belief_B(BeliefQuery(0.3, 0.5, 0.5), m_pos), 0.5, 1e-12);
}

TEST(PriorBoundCheckTest, RequiresBothArcs) {
  const std::vector<double> a_grid{0, 1};
  EXPECT_THROW(prop7_lower_bound_check(NoisyOrParams(0.9, 1, 0.5),
                                       Probability(0.5), a_grid),
               Error);
}

TEST(PriorBoundCheckTest, HoldsOnGrid) {
  const auto grid = Grid();
  std::vector<double> a_grid = grid;
  a_grid.insert(a_grid.begin(), 0.0);
  a_grid.push_back(1.0);
  for (double q1 : grid) {
    for (double b : grid) {
      EXPECT_TRUE(prop7_lower_bound_check(NoisyOrParams(0.8, q1, 0.4),
                                          Probability(b), a_grid));
    }
  }
}

TEST(IndependentEdgeTest, Examples) {
  EXPECT_NEAR(independent_edge({0.5, 0.9}, Probability(0.5)), 1.0 / 3, 1e-15);
  EXPECT_NEAR(independent_edge({0.5, 0.9}, Probability(0.6)), 0.3 / 0.7,
              1e-15);
  EXPECT_NEAR(independent_edge({0.5, 0.9}, Probability(1e-9)), 0, 1e-8);
}

TEST(IndependentEdgeTest, IndependentOfWAndMatchesOracle) {
  for (double k : Grid()) {
    for (double b : Grid()) {
      const double edge = independent_edge({k, 0.3}, Probability(b));
      EXPECT_EQ(edge, independent_edge({k, 0.8}, Probability(b)).value());
      EXPECT_NEAR(edge, OracleCorner({k, 0.8}, 0.6, b, 0), 1e-12);
      if (b <= 0.5) EXPECT_LT(edge, k);
    }
    EXPECT_NEAR(independent_edge({k, 0.5}, Probability(0.5)), k / (1 + k),
                1e-12);
  }
}

TEST(IndependentEdgeTest, UnrestrictedBoundFailsForLargePrior) {
  // bk / (1 + b(k - 1)) < k only while b < 1 / (2 - k).
  EXPECT_GT(independent_edge({0.5, 0.9}, Probability(0.9)), 0.5);
}

TEST(ConfirmedCornerTest, Example) {
  const auto c = confirmed_corner({0.1, 0.9}, Probability(0.5));
  EXPECT_NEAR(c.exact, 0.4955 / 0.9505, 1e-15);
  EXPECT_NEAR(c.exact, 0.521304576539, 1e-12);
  EXPECT_NEAR(c.exact, OracleCorner({0.1, 0.9}, 1, 0.5, 1), 1e-12);
  EXPECT_NEAR(c.approx, 0.5225, 1e-15);
  EXPECT_LT(std::abs(c.exact - c.approx), 0.1 * 0.1);
}

TEST(ConfirmedCornerTest, ApproachesPriorLinearly) {
  const auto tiny = confirmed_corner({1e-8, 0.9}, Probability(0.4));
  EXPECT_NEAR(tiny.exact, 0.4, 1e-8);
  // Slope in k at 0 is b(1 - b)w.
  EXPECT_NEAR((tiny.exact - 0.4) / 1e-8, 0.4 * 0.6 * 0.9, 1e-6);
}

TEST(ConfirmedCornerTest, SecondOrderError) {
  auto err = [](double k) {
    const auto c = confirmed_corner({k, 0.9}, Probability(0.5));
    return std::abs(c.exact - c.approx);
  };
  const double ratio = err(0.2) / err(0.1);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(ConfirmedCornerTest, OrderingOnGrid) {
  for (double k : Grid()) {
    for (double w : Grid()) {
      for (double b : Grid()) {
        const auto c = confirmed_corner({k, w}, Probability(b));
        EXPECT_GE(c.exact, b);
        EXPECT_GE(c.exact, c.approx - k * k);
        EXPECT_NEAR(c.exact, OracleCorner({k, w}, 1, b, 1), 1e-12);
      }
    }
  }
}

TEST(PositiveExclusionTest, Example) {
  const auto p = positive_exclusion({0.05, 0.95}, Probability(0.5));
  EXPECT_NEAR(p.exact, 0.9525 / 1.0025, 1e-15);
  EXPECT_NEAR(p.exact, 0.950124688279, 1e-12);
  EXPECT_NEAR(p.exact, 0.95, 1e-3);
  EXPECT_NEAR(p.exact, OracleCorner({0.05, 0.95}, 0, 0.5, 1), 1e-12);
  EXPECT_LT(p.approx, p.exact);
  EXPECT_NEAR(p.approx, 0.95, 5e-3);
}

TEST(PositiveExclusionTest, LimitAndGrid) {
  EXPECT_NEAR(positive_exclusion({0.3, 1 - 1e-12}, Probability(0.5)).exact, 1,
              1e-11);
  for (double k : Grid()) {
    for (double w : Grid()) {
      for (double b : Grid()) {
        const auto p = positive_exclusion({k, w}, Probability(b));
        EXPECT_GT(p.exact, p.approx);
        EXPECT_NEAR(p.exact, OracleCorner({k, w}, 0, b, 1), 1e-12);
      }
    }
  }
}

TEST(PositiveExclusionTest, SecondOrderErrorInOneMinusW) {
  for (double k : {0.05, 0.1}) {
    for (double b : Grid()) {
      if (b < 0.3 || b > 0.7) continue;
      auto err = [&](double w) {
        const auto p = positive_exclusion({k, w}, Probability(b));
        return p.exact - p.approx;
      };
      const double ratio = err(0.98) / err(0.99);
      EXPECT_GT(ratio, 3.5) << "k=" << k << " b=" << b;
      EXPECT_LT(ratio, 4.5) << "k=" << k << " b=" << b;
    }
  }
}

TEST(ExpansionLemmaTest, Examples) {
  const auto zero = expansion_lemma(0);
  EXPECT_EQ(zero.approx, 1);
  EXPECT_EQ(zero.residual, 0);
  const auto tenth = expansion_lemma(0.1);
  EXPECT_NEAR(tenth.approx, 1.1, 1e-15);
  EXPECT_NEAR(tenth.residual, 0.01 / 0.9, 1e-15);
  EXPECT_NEAR(tenth.approx + tenth.residual, 1 / 0.9, 1e-15);
  const auto half = expansion_lemma(0.5);
  EXPECT_GE(1 / (1 - 0.5), half.approx);
  EXPECT_NEAR(half.approx + half.residual, 2, 1e-15);
}

TEST(ExpansionLemmaTest, IdentityAndDomain) {
  for (double z = -0.95; z < 0.96; z += 0.05) {
    const auto e = expansion_lemma(z);
    EXPECT_NEAR(e.approx + e.residual, 1 / (1 - z), 1e-12);
    if (z >= 0) EXPECT_GE(1 / (1 - z), e.approx);
  }
  EXPECT_THROW(expansion_lemma(1), Error);
  EXPECT_THROW(expansion_lemma(-1.5), Error);
}

TEST(EstimateParametersTest, InvertsReferenceExample) {
  const double edge = independent_edge({0.5, 0.9}, Probability(0.5));
  const double excl = positive_exclusion({0.5, 0.9}, Probability(0.5)).exact;
  const auto p =
      estimate_parameters(Probability(1.0 / 3), Probability(excl),
                          Probability(0.5));
  EXPECT_NEAR(edge, 1.0 / 3, 1e-15);
  EXPECT_NEAR(p.k, 0.5, 1e-12);
  EXPECT_NEAR(p.w, 0.9, 1e-9);
}

TEST(EstimateParametersTest, RoundTripsOnGrid) {
  for (double k : Grid()) {
    for (double w : Grid()) {
      for (double b : {0.2, 0.5, 0.8}) {
        const FactoredSymmetric truth(k, w);
        const double edge = independent_edge(truth, Probability(b));
        const double excl = positive_exclusion(truth, Probability(b)).exact;
        const auto est = estimate_parameters(Probability(edge),
                                             Probability(excl), Probability(b));
        EXPECT_NEAR(independent_edge(est, Probability(b)), edge, 1e-9);
        EXPECT_NEAR(positive_exclusion(est, Probability(b)).exact, excl, 1e-9);
        EXPECT_NEAR(est.k, k, 1e-9);
        EXPECT_NEAR(est.w, w, 1e-7);
      }
    }
  }
}

TEST(EstimateParametersTest, Infeasible) {
  auto code = [](double edge, double excl, double b) {
    try {
      estimate_parameters(Probability(edge), Probability(excl),
                          Probability(b));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kDomainError;
  };
  // Edge at or above the prior needs k >= 1.
  EXPECT_EQ(code(0.5, 0.9, 0.5), ErrorCode::kInfeasible);
  EXPECT_EQ(code(0.0, 0.9, 0.5), ErrorCode::kInfeasible);
  // Positive exclusion below the prior cannot come from w in (0, 1).
  EXPECT_EQ(code(0.2, 0.3, 0.5), ErrorCode::kInfeasible);
}

}  // namespace
}  // namespace cici
