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

#ifndef CICI_BOUNDS_H_
#define CICI_BOUNDS_H_

#include <span>
#include <variant>

#include "cici/core.h"

namespace cici {

// Corners of the belief surface of the symmetric model, named by their
// (pi(a), lambda(e+)) coordinates:
//   independent edge    f = 0 (any a)
//   positive exclusion  a = 0, f = 1
//   confirmed corner    a = 1, f = 1
// All take b = pi(b+) in (0, 1) and throw kDomainError otherwise.

// p{e-|AB} = [[k^2 w, kw], [kw, w]], the complement of noisy-or(w, k, k).
LikelihoodMatrix factored_symmetric_matrix(const FactoredSymmetric& p);

using NoisyOrForm = std::variant<FactoredSymmetric, NoisyOrParams>;

// Checks, for every a in a_grid, that belief_B lies strictly above b at
// f = 1, strictly below b at f = 0, and within 1e-12 of b at f = 1/2.
// Requires q1, q2 < 1 (kDomainError otherwise).
bool prop7_lower_bound_check(const NoisyOrForm& model, Probability b,
                             std::span<const double> a_grid);

// bk / (1 + b(k - 1)); independent of w, equal to k/(1+k) at b = 1/2.
Probability independent_edge(const FactoredSymmetric& p, Probability b);

struct CornerApproximation {
  double exact;
  double approx;  // first-order value or bound, see each function
};

// exact  = b(1 - k^2 w) / (b(1 - k^2 w) + (1 - b)(1 - kw))
// approx = b[1 + kw(1 - b)], the first-order expansion in k. The two differ
// at second order in k and exact -> b as k -> 0.
CornerApproximation confirmed_corner(const FactoredSymmetric& p,
                                     Probability b);

// exact  = b(1 - kw) / (b(1 - kw) + (1 - b)(1 - w))
// approx = 1 - (1 - b)(1 - w) / (b(1 - kw)), a strict lower bound on exact
// that is close to w for small k and b near 1/2. It may be negative.
CornerApproximation positive_exclusion(const FactoredSymmetric& p,
                                       Probability b);

struct Expansion {
  double approx;    // 1 + z
  double residual;  // z^2 / (1 - z); approx + residual == 1 / (1 - z)
};

// 1/(1 - z) = 1 + z + z^2/(1 - z). Throws kDomainError for |z| >= 1.
Expansion expansion_lemma(double z);

// Inverts the exact corner formulas: k from the independent-edge value,
// then w from the positive-exclusion value. Throws kInfeasible when the
// implied k or w falls outside (0, 1).
FactoredSymmetric estimate_parameters(Probability independent_edge_target,
                                      Probability positive_exclusion_target,
                                      Probability b);

}  // namespace cici

#endif  // CICI_BOUNDS_H_
