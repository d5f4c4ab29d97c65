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

#ifndef CICI_INDEPENDENCE_H_
#define CICI_INDEPENDENCE_H_

#include "cici/core.h"

namespace cici {

inline constexpr double kDefaultDetTolerance = 1e-9;

// Rank-one ("singular matrix") likelihood with entries
//   r = abc, s = (1-a)bc, t = a(1-b)c, u = (1-a)(1-b)c,
// so the row odds r/s equal a/(1-a) and the column odds r/t equal b/(1-b).
// Throws kOutOfRange if c <= 0 or any entry exceeds 1.
LikelihoodMatrix outer_product_matrix(Probability a, Probability b, double c,
                                      EvidenceState state);
LikelihoodMatrix outer_product_matrix(const SingularFactorization& f,
                                      EvidenceState state);

// p{e+|AB} = [[1 - q0 q1 q2, 1 - q0 q1], [1 - q0 q2, 1 - q0]].
// Its complement, the e- table, has rank one.
LikelihoodMatrix noisy_or_matrix(const NoisyOrParams& p);

// True iff every 2x2 minor satisfies |minor| <= tol * max(1, max_entry^2),
// i.e. the grid has rank at most one. Single-row or single-column grids are
// trivially rank one.
bool is_cici(const GeneralLikelihoodMatrix& m,
             double tol = kDefaultDetTolerance);
bool is_cici(const LikelihoodMatrix& m, double tol = kDefaultDetTolerance);

// Inverts outer_product_matrix with a = r/(r+s), b = r/(r+t),
// c = (r+s)(r+t)/r. Throws kNotCici if the determinant test fails and
// kDegenerateEntries if any entry is zero.
SingularFactorization factorize(const LikelihoodMatrix& m,
                                double tol = kDefaultDetTolerance);

// The four (a, b) cells of binary CICI matrices. kNoisyOr is the cell the
// noisy-or covers (a, b <= 1/2); the others are reached from it by swapping
// rows, columns, or both.
enum class SwapClass { kNoisyOr = 1, kRowSwap = 2, kColumnSwap = 3, kBothSwap = 4 };

const char* SwapClassName(SwapClass c);

// Classifies (a, b) into its swap cell. The boundary 1/2 belongs to the
// noisy-or cell.
SwapClass classify_swap(double a, double b);

// Thrown by singular_to_noisy_or when (a, b) lies outside the noisy-or cell.
class OutOfNoisyOrRange : public Error {
 public:
  OutOfNoisyOrRange(SwapClass swap_class, const std::string& message)
      : Error(ErrorCode::kOutOfNoisyOrRange, message),
        swap_class_(swap_class) {}

  SwapClass swap_class() const { return swap_class_; }

 private:
  SwapClass swap_class_;
};

// Noisy-or parameters whose complemented matrix equals
// outer_product_matrix(f) entry for entry:
//   q2 = a/(1-a), q1 = b/(1-b), q0 = c(1-a)(1-b).
SingularFactorization noisy_or_to_singular(const NoisyOrParams& p);
NoisyOrParams singular_to_noisy_or(const SingularFactorization& f);

NoisyOrParams symmetric_to_noisy_or(const FactoredSymmetric& p);
// Requires q1 == q2 (within 1e-12) and both < 1.
FactoredSymmetric noisy_or_to_symmetric(const NoisyOrParams& p);

struct CanonicalForm {
  SwapClass swap_class;
  bool rows_swapped;
  bool cols_swapped;
  LikelihoodMatrix canonical;
};

// Undoes the row/column swaps that separate a CICI matrix from the noisy-or
// cell. The canonical matrix has its smallest entry (largest entry of its
// complement) in the upper-left corner.
CanonicalForm canonicalize(const LikelihoodMatrix& m,
                           double tol = kDefaultDetTolerance);

LikelihoodMatrix swap_rows(const LikelihoodMatrix& m);
LikelihoodMatrix swap_cols(const LikelihoodMatrix& m);

// Rank one at both evidence states. For binary tables this forces equal rows
// or equal columns, i.e. one parent has no influence on E.
bool is_degenerate_double_cici(const LikelihoodMatrix& m,
                               double tol = kDefaultDetTolerance);

// Deterministic extremes: identity (parents forced equal) and its complement
// (parents forced opposite). Neither is CICI.
LikelihoodMatrix complete_collaboration_matrix(
    EvidenceState state = EvidenceState::kPos);
LikelihoodMatrix complete_exclusion_matrix(
    EvidenceState state = EvidenceState::kPos);

}  // namespace cici

#endif  // CICI_INDEPENDENCE_H_
