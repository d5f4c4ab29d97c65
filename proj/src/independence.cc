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

#include "cici/independence.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cici {

LikelihoodMatrix outer_product_matrix(Probability a, Probability b, double c,
                                      EvidenceState state) {
  return outer_product_matrix(SingularFactorization(a, b, c), state);
}

LikelihoodMatrix outer_product_matrix(const SingularFactorization& f,
                                      EvidenceState state) {
  const double a = f.a, b = f.b, c = f.c;
  // Rounding can push an admissible entry a few ulps past 1.
  auto entry = [](double x) { return std::min(x, 1.0); };
  return LikelihoodMatrix(state, entry(a * b * c), entry((1 - a) * b * c),
                          entry(a * (1 - b) * c), entry((1 - a) * (1 - b) * c));
}

LikelihoodMatrix noisy_or_matrix(const NoisyOrParams& p) {
  return LikelihoodMatrix(EvidenceState::kPos, 1 - p.q0 * p.q1 * p.q2,
                          1 - p.q0 * p.q1, 1 - p.q0 * p.q2, 1 - p.q0);
}

bool is_cici(const GeneralLikelihoodMatrix& m, double tol) {
  if (!(tol > 0)) {
    throw Error(ErrorCode::kDomainError, "tolerance must be positive");
  }
  const auto entries = m.entries();
  const double max_entry = *std::max_element(entries.begin(), entries.end());
  const double bound = tol * std::max(1.0, max_entry * max_entry);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        for (std::size_t l = k + 1; l < m.cols(); ++l) {
          const double minor =
              m.at(i, k) * m.at(j, l) - m.at(i, l) * m.at(j, k);
          if (std::abs(minor) > bound) return false;
        }
      }
    }
  }
  return true;
}

bool is_cici(const LikelihoodMatrix& m, double tol) {
  if (!(tol > 0)) {
    throw Error(ErrorCode::kDomainError, "tolerance must be positive");
  }
  // Entries are probabilities, so the relative scale is 1.
  return std::abs(m.det()) <= tol;
}

SingularFactorization factorize(const LikelihoodMatrix& m, double tol) {
  if (!is_cici(m, tol)) {
    throw Error(ErrorCode::kNotCici,
                fmt::format("matrix is not rank one (det = {})", m.det()));
  }
  if (m.r() <= 0 || m.s() <= 0 || m.t() <= 0 || m.u() <= 0) {
    throw Error(ErrorCode::kDegenerateEntries,
                "factorize requires strictly positive entries");
  }
  const double row = m.r() + m.s();
  const double col = m.r() + m.t();
  return SingularFactorization(m.r() / row, m.r() / col, row * col / m.r());
}

const char* SwapClassName(SwapClass c) {
  switch (c) {
    case SwapClass::kNoisyOr: return "noisy-or";
    case SwapClass::kRowSwap: return "row-swap";
    case SwapClass::kColumnSwap: return "column-swap";
    case SwapClass::kBothSwap: return "both-swap";
  }
  return "unknown";
}

SwapClass classify_swap(double a, double b) {
  // a = 1/2 is a reliability of exactly 1; allow for rounding there.
  const bool a_high = a > 0.5 + 1e-12;
  const bool b_high = b > 0.5 + 1e-12;
  if (a_high && b_high) return SwapClass::kBothSwap;
  if (a_high) return SwapClass::kColumnSwap;
  if (b_high) return SwapClass::kRowSwap;
  return SwapClass::kNoisyOr;
}

SingularFactorization noisy_or_to_singular(const NoisyOrParams& p) {
  return SingularFactorization(p.q2 / (1 + p.q2), p.q1 / (1 + p.q1),
                               p.q0 * (1 + p.q1) * (1 + p.q2));
}

NoisyOrParams singular_to_noisy_or(const SingularFactorization& f) {
  const double a = f.a, b = f.b;
  const SwapClass cls = classify_swap(a, b);
  if (cls != SwapClass::kNoisyOr) {
    throw OutOfNoisyOrRange(
        cls, fmt::format("singular model (a={}, b={}) is outside the noisy-or "
                         "range a, b <= 1/2; it is the {} class",
                         a, b, SwapClassName(cls)));
  }
  if (a <= 0 || b <= 0) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("singular model (a={}, b={}) implies a zero "
                            "reliability complement",
                            a, b));
  }
  auto snap = [](double q) { return q > 1.0 && q < 1.0 + 1e-9 ? 1.0 : q; };
  return NoisyOrParams(snap(f.c * (1 - a) * (1 - b)), snap(b / (1 - b)),
                       snap(a / (1 - a)));
}

NoisyOrParams symmetric_to_noisy_or(const FactoredSymmetric& p) {
  return NoisyOrParams(p.w, p.k, p.k);
}

FactoredSymmetric noisy_or_to_symmetric(const NoisyOrParams& p) {
  if (std::abs(p.q1 - p.q2) > 1e-12) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("noisy-or is not symmetric (q1={}, q2={})", p.q1,
                            p.q2));
  }
  if (p.q0 >= 1.0) {
    throw Error(ErrorCode::kDomainError,
                "symmetric model requires leak complement q0 < 1");
  }
  return FactoredSymmetric(p.q1, p.q0);
}

LikelihoodMatrix swap_rows(const LikelihoodMatrix& m) {
  return LikelihoodMatrix(m.state(), m.t(), m.u(), m.r(), m.s());
}

LikelihoodMatrix swap_cols(const LikelihoodMatrix& m) {
  return LikelihoodMatrix(m.state(), m.s(), m.r(), m.u(), m.t());
}

CanonicalForm canonicalize(const LikelihoodMatrix& m, double tol) {
  if (!is_cici(m, tol)) {
    throw Error(ErrorCode::kNotCici,
                fmt::format("matrix is not rank one (det = {})", m.det()));
  }
  // For a rank-one table a <= 1/2 iff the a+ column mass is at most the a-
  // column mass, and likewise b against the rows. Sums avoid dividing by
  // zero entries.
  const bool cols = m.r() + m.t() > m.s() + m.u();
  const bool rows = m.r() + m.s() > m.t() + m.u();
  SwapClass cls = SwapClass::kNoisyOr;
  if (rows && cols) {
    cls = SwapClass::kBothSwap;
  } else if (cols) {
    cls = SwapClass::kColumnSwap;
  } else if (rows) {
    cls = SwapClass::kRowSwap;
  }
  LikelihoodMatrix out = m;
  if (rows) out = swap_rows(out);
  if (cols) out = swap_cols(out);
  return CanonicalForm{cls, rows, cols, out};
}

bool is_degenerate_double_cici(const LikelihoodMatrix& m, double tol) {
  const bool degenerate =
      std::abs(m.det()) <= tol && std::abs(m.complement().det()) <= tol;
  if (degenerate) {
    // Equal sums and products of the diagonals force {r,u} = {s,t}.
    const double slack = 10 * std::sqrt(tol);
    const bool rows_equal =
        std::abs(m.r() - m.s()) <= slack && std::abs(m.t() - m.u()) <= slack;
    const bool cols_equal =
        std::abs(m.r() - m.t()) <= slack && std::abs(m.s() - m.u()) <= slack;
    if (!rows_equal && !cols_equal) {
      throw std::logic_error(
          "double-CICI table has neither equal rows nor equal columns");
    }
  }
  return degenerate;
}

LikelihoodMatrix complete_collaboration_matrix(EvidenceState state) {
  return LikelihoodMatrix(state, 1, 0, 0, 1);
}

LikelihoodMatrix complete_exclusion_matrix(EvidenceState state) {
  return LikelihoodMatrix(state, 0, 1, 1, 0);
}

}  // namespace cici
