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

#ifndef CICI_CORE_H_
#define CICI_CORE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cici/error.h"

namespace cici {

// A scalar probability. Construction rejects non-finite values and values
// outside [0, 1].
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

 private:
  double value_ = 0.0;
};

// Observed state of the evidence node: e+ (E = true) or e- (E = false).
enum class EvidenceState { kPos, kNeg };

constexpr EvidenceState Opposite(EvidenceState s) {
  return s == EvidenceState::kPos ? EvidenceState::kNeg : EvidenceState::kPos;
}

const char* EvidenceStateName(EvidenceState s);  // "pos" / "neg"

// State of a binary parent (A or B).
enum class ParentState { kPlus, kMinus };

// Unconstrained 2x2 real grid in the likelihood layout: rows are B (b+, b-),
// columns are A (a+, a-). Used for intermediate tables (scaled likelihoods,
// posteriors) whose entries need not be probabilities.
struct Grid2x2 {
  double r = 0.0;  // (b+, a+)
  double s = 0.0;  // (b+, a-)
  double t = 0.0;  // (b-, a+)
  double u = 0.0;  // (b-, a-)

  double at(ParentState b, ParentState a) const;
  double det() const { return r * u - s * t; }

  friend bool operator==(const Grid2x2&, const Grid2x2&) = default;
};

// p{E = state | A, B} for binary A, B. Layout as in Grid2x2:
//   r = p{e|a+b+}, s = p{e|a-b+}, t = p{e|a+b-}, u = p{e|a-b-}.
class LikelihoodMatrix {
 public:
  LikelihoodMatrix(EvidenceState state, double r, double s, double t,
                   double u);
  LikelihoodMatrix(EvidenceState state, const Grid2x2& grid);

  EvidenceState state() const { return state_; }
  double r() const { return grid_.r; }
  double s() const { return grid_.s; }
  double t() const { return grid_.t; }
  double u() const { return grid_.u; }
  const Grid2x2& grid() const { return grid_; }

  double at(ParentState b, ParentState a) const { return grid_.at(b, a); }
  double det() const { return grid_.det(); }

  // Entry-wise 1 - x with the state flipped.
  LikelihoodMatrix complement() const;

  // Same table relabelled for the other parent ordering (s <-> t).
  LikelihoodMatrix transposed() const;

  friend bool operator==(const LikelihoodMatrix&,
                         const LikelihoodMatrix&) = default;

 private:
  EvidenceState state_;
  Grid2x2 grid_;
};

LikelihoodMatrix complement(const LikelihoodMatrix& m);

// n x m likelihood grid for multi-state parents: rows index states of B,
// columns index states of A. Only the rank-one test applies to it.
class GeneralLikelihoodMatrix {
 public:
  GeneralLikelihoodMatrix(EvidenceState state,
                          std::vector<std::vector<double>> rows);
  explicit GeneralLikelihoodMatrix(const LikelihoodMatrix& m);

  EvidenceState state() const { return state_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  std::span<const double> entries() const { return entries_; }

 private:
  EvidenceState state_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// Noisy-or complement reliabilities q_i = 1 - p_i; q0 is the leak
// complement, q1 belongs to parent B and q2 to parent A (see
// noisy_or_matrix). Each must lie in (0, 1]; q_i = 1 means no arc.
struct NoisyOrParams {
  NoisyOrParams(double q0, double q1, double q2);

  double q0;
  double q1;
  double q2;
};

// Parameters of the rank-one ("singular matrix") model
//   r = abc, s = (1-a)bc, t = a(1-b)c, u = (1-a)(1-b)c.
struct SingularFactorization {
  // Validates a, b in [0,1], c > 0 and every reconstructed entry in [0,1].
  SingularFactorization(double a, double b, double c);

  Probability a;
  Probability b;
  double c;
};

// Symmetric two-parameter CICI model p{e-|AB} = [[k^2 w, kw], [kw, w]].
struct FactoredSymmetric {
  FactoredSymmetric(double k, double w);

  double k;
  double w;
};

// Messages driving a single-clique belief: a = pi(a+), b = pi(b+),
// f = lambda(e+) with lambda(e-) = 1 - f.
struct BeliefQuery {
  BeliefQuery(double a, double b, double f) : a(a), b(b), f(f) {}

  Probability a;
  Probability b;
  Probability f;
};

enum class Relation { kExclusionary, kCollaborative, kIndependencePreserving };

const char* RelationName(Relation r);

struct SynergyReport {
  double det_pos = 0.0;
  double det_neg = 0.0;
  double y_pos = 0.0;
  double y_neg = 0.0;
  Relation classification = Relation::kIndependencePreserving;
};

}  // namespace cici

#endif  // CICI_CORE_H_
