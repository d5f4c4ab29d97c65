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

#ifndef CICI_JSON_IO_H_
#define CICI_JSON_IO_H_

#include <string_view>

#include <json.hpp>

#include "cici/core.h"

namespace cici {

// Matrix files follow
//   {"state": "pos" | "neg", "rows": [[r, s], [t, u]]}
// where rows index B (b+ first) and columns index A (a+ first). Malformed
// documents raise ErrorCode::kParseError; well-formed documents with entries
// outside [0, 1] raise ErrorCode::kInvalidProbability.
GeneralLikelihoodMatrix ParseGeneralMatrix(const nlohmann::json& doc);
GeneralLikelihoodMatrix ParseGeneralMatrix(std::string_view text);
inline GeneralLikelihoodMatrix ParseGeneralMatrix(const char* text) {
  return ParseGeneralMatrix(std::string_view(text));
}

// As above, but the grid must be 2 x 2.
LikelihoodMatrix ParseMatrix(const nlohmann::json& doc);
LikelihoodMatrix ParseMatrix(std::string_view text);
inline LikelihoodMatrix ParseMatrix(const char* text) {
  return ParseMatrix(std::string_view(text));
}

LikelihoodMatrix ToLikelihoodMatrix(const GeneralLikelihoodMatrix& m);

nlohmann::json ToJson(const LikelihoodMatrix& m);
nlohmann::json ToJson(const NoisyOrParams& p);
nlohmann::json ToJson(const SingularFactorization& f);
nlohmann::json ToJson(const FactoredSymmetric& p);
nlohmann::json ToJson(const SynergyReport& r);

}  // namespace cici

#endif  // CICI_JSON_IO_H_
