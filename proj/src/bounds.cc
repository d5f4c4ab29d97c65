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

#include <fmt/format.h>

#include "cici/independence.h"
#include "cici/inference.h"

namespace cici {
namespace {

void RequireOpen(Probability b) {
  if (b <= 0 || b >= 1) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("prior b = {} must lie in (0, 1)", b.value()));
  }
}

NoisyOrParams ToNoisyOr(const NoisyOrForm& model) {
  if (const auto* sym = std::get_if<FactoredSymmetric>(&model)) {
    return symmetric_to_noisy_or(*sym);
  }
  return std::get<NoisyOrParams>(model);
}

}  // namespace

LikelihoodMatrix factored_symmetric_matrix(const FactoredSymmetric& p) {
  const double kw = p.k * p.w;
  return LikelihoodMatrix(EvidenceState::kNeg, p.k * kw, kw, kw, p.w);
}

bool prop7_lower_bound_check(const NoisyOrForm& model, Probability b,
                             std::span<const double> a_grid) {
  RequireOpen(b);
  const NoisyOrParams params = ToNoisyOr(model);
  if (params.q1 >= 1 || params.q2 >= 1) {
    throw Error(ErrorCode::kDomainError,
                "lower bound needs both arcs present (q1, q2 < 1)");
  }
  const LikelihoodMatrix m_pos = noisy_or_matrix(params);
  for (double a : a_grid) {
    const Probability pa(a);
    if (!(belief_B(BeliefQuery(pa, b, 1.0), m_pos) > b)) return false;
    if (!(belief_B(BeliefQuery(pa, b, 0.0), m_pos) < b)) return false;
    if (std::abs(belief_B(BeliefQuery(pa, b, 0.5), m_pos) - b) >= 1e-12) {
      return false;
    }
  }
  return true;
}

Probability independent_edge(const FactoredSymmetric& p, Probability b) {
  RequireOpen(b);
  return Probability(b * p.k / (1 + b * (p.k - 1)));
}

CornerApproximation confirmed_corner(const FactoredSymmetric& p,
                                     Probability b) {
  RequireOpen(b);
  const double kw = p.k * p.w;
  const double plus = b * (1 - p.k * kw);
  const double minus = (1 - b) * (1 - kw);
  return {plus / (plus + minus), b * (1 + kw * (1 - b))};
}

CornerApproximation positive_exclusion(const FactoredSymmetric& p,
                                       Probability b) {
  RequireOpen(b);
  const double kw = p.k * p.w;
  const double plus = b * (1 - kw);
  const double minus = (1 - b) * (1 - p.w);
  return {plus / (plus + minus), 1 - minus / plus};
}

Expansion expansion_lemma(double z) {
  if (!std::isfinite(z) || std::abs(z) >= 1) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("expansion needs |z| < 1, got {}", z));
  }
  return {1 + z, z * z / (1 - z)};
}

FactoredSymmetric estimate_parameters(Probability independent_edge_target,
                                      Probability positive_exclusion_target,
                                      Probability b) {
  RequireOpen(b);
  const double edge = independent_edge_target;
  const double excl = positive_exclusion_target;
  if (edge <= 0 || edge >= 1 || excl <= 0 || excl >= 1) {
    throw Error(ErrorCode::kInfeasible, "targets must lie in (0, 1)");
  }
  const double k = edge * (1 - b) / (b * (1 - edge));
  if (!(k > 0 && k < 1)) {
    throw Error(ErrorCode::kInfeasible,
                fmt::format("independent edge {} at b = {} implies k = {}",
                            edge, b.value(), k));
  }
  // excl (b(1 - kw) + (1 - b)(1 - w)) = b(1 - kw), solved for w.
  const double num = excl * (1 - b) - (1 - excl) * b;
  const double den = excl * (1 - b) - (1 - excl) * b * k;
  const double w = num / den;
  if (!(den != 0 && w > 0 && w < 1)) {
    throw Error(ErrorCode::kInfeasible,
                fmt::format("positive exclusion {} at b = {}, k = {} implies "
                            "w = {}",
                            excl, b.value(), k, w));
  }
  return FactoredSymmetric(k, w);
}

}  // namespace cici
