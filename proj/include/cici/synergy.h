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

#ifndef CICI_SYNERGY_H_
#define CICI_SYNERGY_H_

#include "cici/core.h"

namespace cici {

inline constexpr double kDefaultSynergyTieBand = 1e-9;

// det = ru - st of the matrix at its own evidence state.
double multiplicative_synergy(const LikelihoodMatrix& m);

// Y = r + u - s - t of the matrix at its own evidence state.
double additive_synergy(const LikelihoodMatrix& m);

// Synergy measures at both evidence states of an e+ table. The e- table is
// its complement; y_pos = det_pos - det_neg holds identically. Relations with
// |y_pos| <= tie_band are reported as independence preserving. Throws
// kDomainError unless m_pos.state() is kPos.
SynergyReport synergy_report(const LikelihoodMatrix& m_pos,
                             double tie_band = kDefaultSynergyTieBand);

struct WeightPair {
  double first;   // b+ row / a+ column
  double second;  // b- row / a- column
};

enum class ScaleAxis { kRows, kCols };

// Multiplies each row (or column) by its weight, diag(v) * L or L * diag(v).
// The sign of the determinant is unchanged. Throws kNonPositiveWeight.
Grid2x2 scale_axis(const Grid2x2& m, WeightPair v, ScaleAxis axis);
Grid2x2 scale_axis(const LikelihoodMatrix& m, WeightPair v, ScaleAxis axis);

// The parent a Bayes reversal solves for.
enum class ReverseAxis { kA, kB };

struct PosteriorTable {
  // Determinants are only comparable between tables with the same axis.
  ReverseAxis axis;
  // axis kA: entry (B=j, A=i) = p{A=i | B=j, e}; each row sums to 1.
  // axis kB: entry (B=j, A=i) = p{B=j | A=i, e}; each column sums to 1.
  Grid2x2 table;
};

// Bayes' rule over one parent: multiply by the prior on that parent and
// divide by the pre-posteriors. The prior must be strictly positive
// (kNonPositiveWeight); a vanishing normalizer raises kZeroPreposterior.
PosteriorTable bayes_reverse(const LikelihoodMatrix& m, WeightPair prior,
                             ReverseAxis axis);

}  // namespace cici

#endif  // CICI_SYNERGY_H_
