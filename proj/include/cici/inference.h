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

#ifndef CICI_INFERENCE_H_
#define CICI_INFERENCE_H_

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "cici/core.h"

namespace cici {

// Psi(A, B, E) = pi(A) pi(B) lambda(E) p{E|AB} over the eight joint states.
class JointPotential {
 public:
  double at(ParentState a, ParentState b, EvidenceState e) const {
    return psi_[Index(a, b, e)];
  }
  double& at(ParentState a, ParentState b, EvidenceState e) {
    return psi_[Index(a, b, e)];
  }
  double total() const;

 private:
  static std::size_t Index(ParentState a, ParentState b, EvidenceState e) {
    return (a == ParentState::kPlus ? 0 : 4) +
           (b == ParentState::kPlus ? 0 : 2) +
           (e == EvidenceState::kPos ? 0 : 1);
  }

  std::array<double, 8> psi_{};
};

// Every function below takes the e+ table; the e- table is its complement.
// They throw kDomainError if m_pos is not an e+ table.
JointPotential joint_potential(const BeliefQuery& q,
                               const LikelihoodMatrix& m_pos);

// Posterior p{B = b+ | pi(a), pi(b), lambda(e)} in closed form:
//   b[a(fr + (1-f)(1-r)) + (1-a)(fs + (1-f)(1-s))]
// normalized against the matching b- term. Throws kImpossibleEvidence when
// the potential sums to zero.
Probability belief_B(const BeliefQuery& q, const LikelihoodMatrix& m_pos);

// Same with the roles of A and B exchanged.
Probability belief_A(const BeliefQuery& q, const LikelihoodMatrix& m_pos);

struct Marginals {
  Probability a;
  Probability b;
  Probability e;
};

// Enumerates the eight joint states directly and normalizes. Shares no code
// with joint_potential or the closed forms, so it can check them.
Marginals brute_force_oracle(const BeliefQuery& q,
                             const LikelihoodMatrix& m_pos);

// belief_B over a uniform n x n grid of (f, a) in [0, 1]^2, endpoints
// included. values is row-major with one row per f.
struct BeliefSurface {
  std::vector<double> a_axis;
  std::vector<double> f_axis;
  std::vector<double> values;

  double at(std::size_t f_index, std::size_t a_index) const {
    return values[f_index * a_axis.size() + a_index];
  }
};

BeliefSurface belief_surface(const LikelihoodMatrix& m_pos, Probability b,
                             std::size_t n);

// First cell "f\a", first row the a axis, first column the f axis, body at
// 12 significant digits.
void WriteSurfaceCsv(std::ostream& out, const BeliefSurface& surface);

// The f = 1 edge of the surface: both parents' beliefs as pi(a) sweeps
// [0, 1], alongside the complete-exclusion reference 1 - belief_A.
struct ExclusionPoint {
  double a;
  double belief_a;
  double belief_b;
  double complete_exclusion_b;
};

std::vector<ExclusionPoint> exclusion_curve(const LikelihoodMatrix& m_pos,
                                            Probability b, std::size_t n);

void WriteExclusionCsv(std::ostream& out,
                       const std::vector<ExclusionPoint>& curve);

// Posterior on B (or A) given hard evidence at the table's own state, for an
// arbitrary non-negative table. Homogeneous of degree zero in the table.
double conditioned_belief_B(const Grid2x2& table, Probability a,
                            Probability b);
double conditioned_belief_A(const Grid2x2& table, Probability a,
                            Probability b);

// Scales the conditioned table m by c and confirms both parents'
// conditioned beliefs are unchanged within 1e-12. Only q.a and q.b are
// used; the evidence is fixed at m.state().
bool scaling_invariance_check(const LikelihoodMatrix& m, double c,
                              const BeliefQuery& q);

}  // namespace cici

#endif  // CICI_INFERENCE_H_
