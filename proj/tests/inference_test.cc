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

#include "cici/inference.h"

#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "cici/independence.h"
#include "test_oracle.h"

namespace cici {
namespace {

constexpr ParentState kP = ParentState::kPlus;
constexpr ParentState kM = ParentState::kMinus;
constexpr EvidenceState kPos = EvidenceState::kPos;
constexpr EvidenceState kNeg = EvidenceState::kNeg;

const LikelihoodMatrix& NoisyOr() {
  static const LikelihoodMatrix m = noisy_or_matrix({0.9, 0.5, 0.5});
  return m;
}

double Oracle_B(double a, double b, double f, const LikelihoodMatrix& m) {
  return testing::EnumerateJoint(a, b, f, m.r(), m.s(), m.t(), m.u()).b;
}

double Oracle_A(double a, double b, double f, const LikelihoodMatrix& m) {
  return testing::EnumerateJoint(a, b, f, m.r(), m.s(), m.t(), m.u()).a;
}

TEST(JointPotentialTest, DeterministicMessagesLeaveOneCell) {
  const auto psi = joint_potential(BeliefQuery(1, 1, 1), NoisyOr());
  EXPECT_NEAR(psi.at(kP, kP, kPos), 0.775, 1e-15);
  EXPECT_NEAR(psi.total(), 0.775, 1e-15);
}

TEST(JointPotentialTest, UniformMessagesOnConstantMatrix) {
  const auto psi = joint_potential(BeliefQuery(0.5, 0.5, 0.5),
                                   LikelihoodMatrix(kPos, 0.5, 0.5, 0.5, 0.5));
  for (auto a : {kP, kM}) {
    for (auto b : {kP, kM}) {
      for (auto e : {kPos, kNeg}) EXPECT_EQ(psi.at(a, b, e), 0.0625);
    }
  }
}

TEST(JointPotentialTest, ProductOfFactors) {
  const auto psi = joint_potential(BeliefQuery(0.3, 0.6, 1), NoisyOr());
  EXPECT_NEAR(psi.at(kP, kP, kPos), 0.1395, 1e-15);
  EXPECT_EQ(psi.at(kP, kP, kNeg), 0.0);
}

TEST(JointPotentialTest, MarginalizesToBelief) {
  testing::Sampler sampler(17);
  for (int i = 0; i < 200; ++i) {
    const LikelihoodMatrix m(kPos, sampler.Draw(), sampler.Draw(),
                             sampler.Draw(), sampler.Draw());
    const BeliefQuery q(sampler.Draw(), sampler.Draw(), sampler.Draw());
    const auto psi = joint_potential(q, m);
    double b_plus = 0;
    for (auto a : {kP, kM}) {
      for (auto e : {kPos, kNeg}) b_plus += psi.at(a, kP, e);
    }
    EXPECT_NEAR(b_plus / psi.total(), belief_B(q, m), 1e-12);
  }
}

TEST(BeliefBTest, Examples) {
  const double confirmed = belief_B(BeliefQuery(1, 0.6, 1), NoisyOr());
  EXPECT_NEAR(confirmed, 0.465 / 0.685, 1e-12);
  EXPECT_NEAR(confirmed, Oracle_B(1, 0.6, 1, NoisyOr()), 1e-12);
  EXPECT_NEAR(confirmed, 0.678832116788, 1e-12);

  for (double a : {0.0, 0.5, 1.0}) {
    const double edge = belief_B(BeliefQuery(a, 0.6, 0), NoisyOr());
    EXPECT_NEAR(edge, 3.0 / 7, 1e-12);
    EXPECT_NEAR(edge, Oracle_B(a, 0.6, 0, NoisyOr()), 1e-12);
  }

  testing::Sampler sampler(23);
  for (int i = 0; i < 500; ++i) {
    const LikelihoodMatrix m(kPos, sampler.Draw(), sampler.Draw(),
                             sampler.Draw(), sampler.Draw());
    const double a = sampler.Draw(), b = sampler.Draw();
    EXPECT_NEAR(belief_B(BeliefQuery(a, b, 0.5), m), b, 1e-12);
    EXPECT_NEAR(belief_A(BeliefQuery(a, b, 0.5), m), a, 1e-12);
  }
}

TEST(BeliefBTest, ImpossibleEvidence) {
  const LikelihoodMatrix never(kPos, 0, 0, 0, 0);
  try {
    belief_B(BeliefQuery(0.5, 0.5, 1), never);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImpossibleEvidence);
  }
  EXPECT_THROW(brute_force_oracle(BeliefQuery(0.5, 0.5, 1), never), Error);
}

TEST(BeliefBTest, RequiresPositiveTable) {
  EXPECT_THROW(belief_B(BeliefQuery(0.5, 0.5, 1), NoisyOr().complement()),
               Error);
}

TEST(BeliefATest, Examples) {
  const LikelihoodMatrix sym(kPos, 0.8, 0.4, 0.4, 0.2);
  EXPECT_NEAR(belief_A(BeliefQuery(0.3, 0.3, 0.7), sym),
              belief_B(BeliefQuery(0.3, 0.3, 0.7), sym), 1e-15);

  const double pa = belief_A(BeliefQuery(0.3, 1, 1), NoisyOr());
  EXPECT_NEAR(pa, 0.2325 / 0.6175, 1e-12);
  EXPECT_NEAR(pa, Oracle_A(0.3, 1, 1, NoisyOr()), 1e-12);

  const auto cici = noisy_or_matrix({0.7, 0.2, 0.6});
  const double at0 = belief_A(BeliefQuery(0.4, 0.0, 0), cici);
  for (double b : {0.25, 0.5, 1.0}) {
    EXPECT_NEAR(belief_A(BeliefQuery(0.4, b, 0), cici), at0, 1e-12);
  }
}

TEST(OracleTest, MatchesIndependentEnumeration) {
  testing::Sampler sampler(31);
  for (int i = 0; i < 1000; ++i) {
    const LikelihoodMatrix m(kPos, sampler.Draw(), sampler.Draw(),
                             sampler.Draw(), sampler.Draw());
    const double a = sampler.Draw(), b = sampler.Draw(), f = sampler.Draw();
    const auto got = brute_force_oracle(BeliefQuery(a, b, f), m);
    const auto want =
        testing::EnumerateJoint(a, b, f, m.r(), m.s(), m.t(), m.u());
    EXPECT_NEAR(got.a, want.a, 1e-12);
    EXPECT_NEAR(got.b, want.b, 1e-12);
    EXPECT_NEAR(got.e, want.e, 1e-12);
    EXPECT_NEAR(belief_B(BeliefQuery(a, b, f), m), got.b, 1e-12);
    EXPECT_NEAR(belief_A(BeliefQuery(a, b, f), m), got.a, 1e-12);
  }
}

TEST(OracleTest, TrivialQueries) {
  EXPECT_EQ(brute_force_oracle(BeliefQuery(1, 1, 1), NoisyOr()).b, 1.0);
  const auto half = brute_force_oracle(BeliefQuery(0.2, 0.7, 0.5), NoisyOr());
  EXPECT_NEAR(half.a, 0.2, 1e-12);
  EXPECT_NEAR(half.b, 0.7, 1e-12);
}

TEST(InferencePropertyTest, CiciIndependenceAndConverse) {
  testing::Sampler sampler(37);
  for (int i = 0; i < 500; ++i) {
    const double a = sampler.Draw(), b = sampler.Draw();
    const auto m_neg =
        outer_product_matrix(Probability(a), Probability(b), 1, kNeg);
    const auto m_pos = m_neg.complement();
    for (double pb : {0.1, 0.5, 0.9}) {
      EXPECT_LT(std::abs(belief_B(BeliefQuery(0, pb, 0), m_pos) -
                         belief_B(BeliefQuery(1, pb, 0), m_pos)),
                1e-9);
      const double dependence =
          std::abs(belief_B(BeliefQuery(0, pb, 1), m_pos) -
                   belief_B(BeliefQuery(1, pb, 1), m_pos));
      if (is_degenerate_double_cici(m_neg)) {
        EXPECT_LT(dependence, 1e-9);
      } else {
        EXPECT_GT(dependence, 0);
      }
    }
  }
}

TEST(InferencePropertyTest, OneParentWithoutArcIsIndependentEverywhere) {
  // Equal rows: B does not influence E.
  const LikelihoodMatrix m_pos(kPos, 0.7, 0.3, 0.7, 0.3);
  for (double f : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(belief_B(BeliefQuery(0, 0.4, f), m_pos),
                belief_B(BeliefQuery(1, 0.4, f), m_pos), 1e-12);
  }
}

TEST(BeliefSurfaceTest, CiciRowsConstantAndExclusionEdgeDecreasing) {
  const auto surface = belief_surface(NoisyOr(), Probability(0.5), 21);
  ASSERT_EQ(surface.values.size(), 21u * 21u);
  EXPECT_EQ(surface.a_axis.front(), 0.0);
  EXPECT_EQ(surface.a_axis.back(), 1.0);
  for (std::size_t j = 1; j < 21; ++j) {
    EXPECT_NEAR(surface.at(0, j), surface.at(0, 0), 1e-12);    // f = 0
    EXPECT_NEAR(surface.at(10, j), surface.at(10, 0), 1e-12);  // f = 1/2
    EXPECT_LT(surface.at(20, j), surface.at(20, j - 1));       // f = 1
  }
}

TEST(BeliefSurfaceTest, ConstantMatrixIsFlat) {
  const auto surface = belief_surface(LikelihoodMatrix(kPos, 0.4, 0.4, 0.4, 0.4),
                                      Probability(0.3), 5);
  for (double v : surface.values) EXPECT_NEAR(v, 0.3, 1e-12);
}

TEST(BeliefSurfaceTest, RejectsTinyGrid) {
  EXPECT_THROW(belief_surface(NoisyOr(), Probability(0.5), 1), Error);
}

TEST(BeliefSurfaceTest, CsvLayout) {
  const auto surface = belief_surface(NoisyOr(), Probability(0.5), 2);
  std::ostringstream csv;
  WriteSurfaceCsv(csv, surface);
  std::ostringstream want;
  want << "f\\a,0,1\n"
       << "0," << fmt::format("{:.12g}", surface.at(0, 0)) << ','
       << fmt::format("{:.12g}", surface.at(0, 1)) << '\n'
       << "1," << fmt::format("{:.12g}", surface.at(1, 0)) << ','
       << fmt::format("{:.12g}", surface.at(1, 1)) << '\n';
  EXPECT_EQ(csv.str(), want.str());
  // f=1, a=0: 0.5*0.55 / (0.5*0.55 + 0.5*0.1).
  EXPECT_NEAR(surface.at(1, 0), 0.55 / 0.65, 1e-12);
}

TEST(ExclusionCurveTest, BoundedBelowByPrior) {
  const auto curve = exclusion_curve(NoisyOr(), Probability(0.5), 11);
  ASSERT_EQ(curve.size(), 11u);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    EXPECT_GT(curve[i].belief_b, 0.5);
    EXPECT_NEAR(curve[i].complete_exclusion_b, 1 - curve[i].belief_a, 1e-15);
    if (i > 0) {
      EXPECT_GT(curve[i].belief_a, curve[i - 1].belief_a);
      EXPECT_LT(curve[i].belief_b, curve[i - 1].belief_b);
    }
  }
}

TEST(ScalingInvarianceTest, Examples) {
  const auto neg = NoisyOr().complement();
  const BeliefQuery q(0.3, 0.6, 0);
  EXPECT_TRUE(scaling_invariance_check(neg, 2.0, q));
  EXPECT_TRUE(scaling_invariance_check(neg, 1.0, q));
  const Grid2x2 scaled{2 * neg.r(), 2 * neg.s(), 2 * neg.t(), 2 * neg.u()};
  EXPECT_NEAR(scaled.det(), 4 * neg.det(), 1e-15);

  const auto pos = NoisyOr();
  EXPECT_TRUE(scaling_invariance_check(pos, 1.2, q));
  const Grid2x2 pos_scaled{1.2 * pos.r(), 1.2 * pos.s(), 1.2 * pos.t(),
                           1.2 * pos.u()};
  EXPECT_NEAR(pos_scaled.det(), 1.44 * pos.det(), 1e-15);
  EXPECT_NE(pos_scaled.det(), pos.det());
  EXPECT_NEAR(conditioned_belief_B(pos.grid(), q.a, q.b),
              belief_B(BeliefQuery(0.3, 0.6, 1), pos), 1e-12);
}

TEST(ScalingInvarianceTest, RejectsNonPositiveScale) {
  EXPECT_THROW(scaling_invariance_check(NoisyOr(), 0, BeliefQuery(0.5, 0.5, 1)),
               Error);
}

}  // namespace
}  // namespace cici
