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

#include "cici/core.h"

#include <cmath>

#include <fmt/format.h>

namespace cici {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotCici: return "NotCICI";
    case ErrorCode::kDegenerateEntries: return "DegenerateEntries";
    case ErrorCode::kOutOfNoisyOrRange: return "OutOfNoisyOrRange";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kZeroPreposterior: return "ZeroPreposterior";
    case ErrorCode::kImpossibleEvidence: return "ImpossibleEvidence";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Probability::Probability(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw Error(ErrorCode::kInvalidProbability,
                fmt::format("probability {} outside [0, 1]", value));
  }
}

const char* EvidenceStateName(EvidenceState s) {
  return s == EvidenceState::kPos ? "pos" : "neg";
}

const char* RelationName(Relation r) {
  switch (r) {
    case Relation::kExclusionary: return "EXCLUSIONARY";
    case Relation::kCollaborative: return "COLLABORATIVE";
    case Relation::kIndependencePreserving: return "INDEPENDENCE_PRESERVING";
  }
  return "UNKNOWN";
}

double Grid2x2::at(ParentState b, ParentState a) const {
  if (b == ParentState::kPlus) return a == ParentState::kPlus ? r : s;
  return a == ParentState::kPlus ? t : u;
}

LikelihoodMatrix::LikelihoodMatrix(EvidenceState state, double r, double s,
                                   double t, double u)
    : LikelihoodMatrix(state, Grid2x2{r, s, t, u}) {}

LikelihoodMatrix::LikelihoodMatrix(EvidenceState state, const Grid2x2& grid)
    : state_(state),
      grid_{Probability(grid.r), Probability(grid.s), Probability(grid.t),
            Probability(grid.u)} {}

LikelihoodMatrix LikelihoodMatrix::complement() const {
  return LikelihoodMatrix(Opposite(state_), 1.0 - grid_.r, 1.0 - grid_.s,
                          1.0 - grid_.t, 1.0 - grid_.u);
}

LikelihoodMatrix LikelihoodMatrix::transposed() const {
  return LikelihoodMatrix(state_, grid_.r, grid_.t, grid_.s, grid_.u);
}

LikelihoodMatrix complement(const LikelihoodMatrix& m) {
  return m.complement();
}

GeneralLikelihoodMatrix::GeneralLikelihoodMatrix(
    EvidenceState state, std::vector<std::vector<double>> rows)
    : state_(state), rows_(rows.size()), cols_(0) {
  if (rows_ == 0 || rows.front().empty()) {
    throw Error(ErrorCode::kDomainError, "likelihood grid must be non-empty");
  }
  cols_ = rows.front().size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDomainError, "likelihood grid rows are ragged");
    }
    for (double x : row) entries_.push_back(Probability(x).value());
  }
}

GeneralLikelihoodMatrix::GeneralLikelihoodMatrix(const LikelihoodMatrix& m)
    : GeneralLikelihoodMatrix(m.state(),
                              {{m.r(), m.s()}, {m.t(), m.u()}}) {}

namespace {

double CheckReliability(double q, const char* name) {
  if (!std::isfinite(q) || q <= 0.0 || q > 1.0) {
    throw Error(ErrorCode::kInvalidProbability,
                fmt::format("noisy-or {} = {} outside (0, 1]", name, q));
  }
  return q;
}

double CheckOpenUnit(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0 || x >= 1.0) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("{} = {} outside (0, 1)", name, x));
  }
  return x;
}

}  // namespace

NoisyOrParams::NoisyOrParams(double q0, double q1, double q2)
    : q0(CheckReliability(q0, "q0")),
      q1(CheckReliability(q1, "q1")),
      q2(CheckReliability(q2, "q2")) {}

SingularFactorization::SingularFactorization(double a, double b, double c)
    : a(a), b(b), c(c) {
  if (!std::isfinite(c) || c <= 0.0) {
    throw Error(ErrorCode::kOutOfRange,
                fmt::format("scale c = {} must be positive", c));
  }
  const double entries[] = {a * b * c, (1 - a) * b * c, a * (1 - b) * c,
                            (1 - a) * (1 - b) * c};
  for (double e : entries) {
    if (e > 1.0 + 1e-12) {
      throw Error(ErrorCode::kOutOfRange,
                  fmt::format("singular model (a={}, b={}, c={}) has entry {} "
                              "> 1",
                              a, b, c, e));
    }
  }
}

FactoredSymmetric::FactoredSymmetric(double k, double w)
    : k(CheckOpenUnit(k, "k")), w(CheckOpenUnit(w, "w")) {}

}  // namespace cici
