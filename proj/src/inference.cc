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

#include <fmt/format.h>

namespace cici {
namespace {

constexpr ParentState kParentStates[] = {ParentState::kPlus,
                                         ParentState::kMinus};
constexpr EvidenceState kEvidenceStates[] = {EvidenceState::kPos,
                                             EvidenceState::kNeg};

void RequirePos(const LikelihoodMatrix& m) {
  if (m.state() != EvidenceState::kPos) {
    throw Error(ErrorCode::kDomainError, "expected the e+ likelihood table");
  }
}

[[noreturn]] void Impossible() {
  throw Error(ErrorCode::kImpossibleEvidence,
              "messages assign zero probability to every joint state");
}

// Mixes the e+ likelihood p with its complement under lambda.
double Evidence(double f, double p) { return f * p + (1 - f) * (1 - p); }

// Posterior of the "self" parent with entries ordered
// (self+, other+), (self+, other-), (self-, other+), (self-, other-).
double ClosedFormBelief(double self, double other, double f, double pp,
                        double pm, double mp, double mm) {
  const double plus =
      self * (other * Evidence(f, pp) + (1 - other) * Evidence(f, pm));
  const double minus =
      (1 - self) * (other * Evidence(f, mp) + (1 - other) * Evidence(f, mm));
  const double total = plus + minus;
  if (!(total > 0)) Impossible();
  return plus / total;
}

double Clamp01(double x) { return x < 0 ? 0 : (x > 1 ? 1 : x); }

double PriorOf(ParentState s, double p) {
  return s == ParentState::kPlus ? p : 1 - p;
}

}  // namespace

double JointPotential::total() const {
  double sum = 0;
  for (double x : psi_) sum += x;
  return sum;
}

JointPotential joint_potential(const BeliefQuery& q,
                               const LikelihoodMatrix& m_pos) {
  RequirePos(m_pos);
  JointPotential psi;
  for (ParentState a : kParentStates) {
    for (ParentState b : kParentStates) {
      const double pos = m_pos.at(b, a);
      const double prior = PriorOf(a, q.a) * PriorOf(b, q.b);
      psi.at(a, b, EvidenceState::kPos) = prior * q.f * pos;
      psi.at(a, b, EvidenceState::kNeg) = prior * (1 - q.f) * (1 - pos);
    }
  }
  return psi;
}

Probability belief_B(const BeliefQuery& q, const LikelihoodMatrix& m_pos) {
  RequirePos(m_pos);
  return Probability(Clamp01(ClosedFormBelief(
      q.b, q.a, q.f, m_pos.r(), m_pos.s(), m_pos.t(), m_pos.u())));
}

Probability belief_A(const BeliefQuery& q, const LikelihoodMatrix& m_pos) {
  RequirePos(m_pos);
  return Probability(Clamp01(ClosedFormBelief(
      q.a, q.b, q.f, m_pos.r(), m_pos.t(), m_pos.s(), m_pos.u())));
}

Marginals brute_force_oracle(const BeliefQuery& q,
                             const LikelihoodMatrix& m_pos) {
  RequirePos(m_pos);
  double total = 0, a_plus = 0, b_plus = 0, e_pos = 0;
  for (ParentState a : kParentStates) {
    for (ParentState b : kParentStates) {
      for (EvidenceState e : kEvidenceStates) {
        const double pa = a == ParentState::kPlus ? q.a.value() : 1 - q.a;
        const double pb = b == ParentState::kPlus ? q.b.value() : 1 - q.b;
        const double lambda =
            e == EvidenceState::kPos ? q.f.value() : 1 - q.f;
        const double like = e == EvidenceState::kPos ? m_pos.at(b, a)
                                                     : 1 - m_pos.at(b, a);
        const double w = pa * pb * lambda * like;
        total += w;
        if (a == ParentState::kPlus) a_plus += w;
        if (b == ParentState::kPlus) b_plus += w;
        if (e == EvidenceState::kPos) e_pos += w;
      }
    }
  }
  if (!(total > 0)) Impossible();
  return {Probability(Clamp01(a_plus / total)),
          Probability(Clamp01(b_plus / total)),
          Probability(Clamp01(e_pos / total))};
}

namespace {

std::vector<double> UnitAxis(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kDomainError, "grid size must be at least 2");
  }
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) {
    axis[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return axis;
}

std::string Fmt12(double x) { return fmt::format("{:.12g}", x); }

}  // namespace

BeliefSurface belief_surface(const LikelihoodMatrix& m_pos, Probability b,
                             std::size_t n) {
  RequirePos(m_pos);
  BeliefSurface surface;
  surface.a_axis = UnitAxis(n);
  surface.f_axis = surface.a_axis;
  surface.values.reserve(n * n);
  for (double f : surface.f_axis) {
    for (double a : surface.a_axis) {
      surface.values.push_back(belief_B(BeliefQuery(a, b, f), m_pos));
    }
  }
  return surface;
}

void WriteSurfaceCsv(std::ostream& out, const BeliefSurface& surface) {
  out << "f\\a";
  for (double a : surface.a_axis) out << ',' << Fmt12(a);
  out << '\n';
  for (std::size_t i = 0; i < surface.f_axis.size(); ++i) {
    out << Fmt12(surface.f_axis[i]);
    for (std::size_t j = 0; j < surface.a_axis.size(); ++j) {
      out << ',' << Fmt12(surface.at(i, j));
    }
    out << '\n';
  }
}

std::vector<ExclusionPoint> exclusion_curve(const LikelihoodMatrix& m_pos,
                                            Probability b, std::size_t n) {
  std::vector<ExclusionPoint> curve;
  for (double a : UnitAxis(n)) {
    const BeliefQuery q(a, b, 1.0);
    const double pa = belief_A(q, m_pos);
    curve.push_back({a, pa, belief_B(q, m_pos), 1 - pa});
  }
  return curve;
}

void WriteExclusionCsv(std::ostream& out,
                       const std::vector<ExclusionPoint>& curve) {
  out << "a,belief_a,belief_b,complete_exclusion_b\n";
  for (const auto& p : curve) {
    out << Fmt12(p.a) << ',' << Fmt12(p.belief_a) << ',' << Fmt12(p.belief_b)
        << ',' << Fmt12(p.complete_exclusion_b) << '\n';
  }
}

double conditioned_belief_B(const Grid2x2& table, Probability a,
                            Probability b) {
  const double plus = b * (a * table.r + (1 - a) * table.s);
  const double minus = (1 - b) * (a * table.t + (1 - a) * table.u);
  if (!(plus + minus > 0)) Impossible();
  return plus / (plus + minus);
}

double conditioned_belief_A(const Grid2x2& table, Probability a,
                            Probability b) {
  const double plus = a * (b * table.r + (1 - b) * table.t);
  const double minus = (1 - a) * (b * table.s + (1 - b) * table.u);
  if (!(plus + minus > 0)) Impossible();
  return plus / (plus + minus);
}

bool scaling_invariance_check(const LikelihoodMatrix& m, double c,
                              const BeliefQuery& q) {
  if (!std::isfinite(c) || c <= 0) {
    throw Error(ErrorCode::kNonPositiveWeight,
                fmt::format("scale {} must be positive", c));
  }
  const Grid2x2& base = m.grid();
  const Grid2x2 scaled{c * base.r, c * base.s, c * base.t, c * base.u};
  constexpr double kTol = 1e-12;
  return std::abs(conditioned_belief_B(scaled, q.a, q.b) -
                  conditioned_belief_B(base, q.a, q.b)) <= kTol &&
         std::abs(conditioned_belief_A(scaled, q.a, q.b) -
                  conditioned_belief_A(base, q.a, q.b)) <= kTol;
}

}  // namespace cici
