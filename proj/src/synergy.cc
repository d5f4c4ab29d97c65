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

#include "cici/synergy.h"

#include <cmath>

#include <fmt/format.h>

namespace cici {
namespace {

void CheckPositive(WeightPair v, const char* what) {
  if (!(v.first > 0) || !(v.second > 0) || !std::isfinite(v.first) ||
      !std::isfinite(v.second)) {
    throw Error(ErrorCode::kNonPositiveWeight,
                fmt::format("{} ({}, {}) must be strictly positive", what,
                            v.first, v.second));
  }
}

}  // namespace

double multiplicative_synergy(const LikelihoodMatrix& m) { return m.det(); }

double additive_synergy(const LikelihoodMatrix& m) {
  return m.r() + m.u() - m.s() - m.t();
}

SynergyReport synergy_report(const LikelihoodMatrix& m_pos, double tie_band) {
  if (m_pos.state() != EvidenceState::kPos) {
    throw Error(ErrorCode::kDomainError,
                "synergy_report expects the e+ likelihood table");
  }
  const LikelihoodMatrix m_neg = m_pos.complement();
  SynergyReport report;
  report.det_pos = multiplicative_synergy(m_pos);
  report.det_neg = multiplicative_synergy(m_neg);
  report.y_pos = additive_synergy(m_pos);
  report.y_neg = -report.y_pos;
  if (report.y_pos < -tie_band) {
    report.classification = Relation::kExclusionary;
  } else if (report.y_pos > tie_band) {
    report.classification = Relation::kCollaborative;
  } else {
    report.classification = Relation::kIndependencePreserving;
  }
  return report;
}

Grid2x2 scale_axis(const Grid2x2& m, WeightPair v, ScaleAxis axis) {
  CheckPositive(v, "scale weights");
  if (axis == ScaleAxis::kRows) {
    return {m.r * v.first, m.s * v.first, m.t * v.second, m.u * v.second};
  }
  return {m.r * v.first, m.s * v.second, m.t * v.first, m.u * v.second};
}

Grid2x2 scale_axis(const LikelihoodMatrix& m, WeightPair v, ScaleAxis axis) {
  return scale_axis(m.grid(), v, axis);
}

PosteriorTable bayes_reverse(const LikelihoodMatrix& m, WeightPair prior,
                             ReverseAxis axis) {
  CheckPositive(prior, "prior");
  if (axis == ReverseAxis::kA) {
    // Prior on A weights the columns; normalize within each B row.
    const Grid2x2 joint = scale_axis(m, prior, ScaleAxis::kCols);
    const double row_plus = joint.r + joint.s;
    const double row_minus = joint.t + joint.u;
    if (!(row_plus > 0) || !(row_minus > 0)) {
      throw Error(ErrorCode::kZeroPreposterior,
                  "evidence is impossible for one state of B under the prior");
    }
    return {axis, scale_axis(joint, {1 / row_plus, 1 / row_minus},
                             ScaleAxis::kRows)};
  }
  const Grid2x2 joint = scale_axis(m, prior, ScaleAxis::kRows);
  const double col_plus = joint.r + joint.t;
  const double col_minus = joint.s + joint.u;
  if (!(col_plus > 0) || !(col_minus > 0)) {
    throw Error(ErrorCode::kZeroPreposterior,
                "evidence is impossible for one state of A under the prior");
  }
  return {axis,
          scale_axis(joint, {1 / col_plus, 1 / col_minus}, ScaleAxis::kCols)};
}

}  // namespace cici
