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

#include "cici/json_io.h"

#include <string>
#include <vector>

namespace cici {
namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, "matrix JSON: " + what);
}

EvidenceState ParseState(const nlohmann::json& doc) {
  auto it = doc.find("state");
  if (it == doc.end() || !it->is_string()) Fail("missing string \"state\"");
  const auto& s = it->get_ref<const std::string&>();
  if (s == "pos") return EvidenceState::kPos;
  if (s == "neg") return EvidenceState::kNeg;
  Fail("\"state\" must be \"pos\" or \"neg\", got \"" + s + "\"");
}

}  // namespace

GeneralLikelihoodMatrix ParseGeneralMatrix(const nlohmann::json& doc) {
  if (!doc.is_object()) Fail("document must be an object");
  const EvidenceState state = ParseState(doc);
  auto it = doc.find("rows");
  if (it == doc.end() || !it->is_array() || it->empty()) {
    Fail("missing non-empty array \"rows\"");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : *it) {
    if (!row.is_array() || row.empty()) Fail("each row must be a non-empty array");
    auto& out = rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number()) Fail("entries must be numbers");
      out.push_back(x.get<double>());
    }
    if (out.size() != rows.front().size()) Fail("rows have unequal lengths");
  }
  return GeneralLikelihoodMatrix(state, std::move(rows));
}

GeneralLikelihoodMatrix ParseGeneralMatrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(e.what());
  }
  return ParseGeneralMatrix(doc);
}

LikelihoodMatrix ToLikelihoodMatrix(const GeneralLikelihoodMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    Fail("expected a 2 x 2 grid");
  }
  return LikelihoodMatrix(m.state(), m.at(0, 0), m.at(0, 1), m.at(1, 0),
                          m.at(1, 1));
}

LikelihoodMatrix ParseMatrix(const nlohmann::json& doc) {
  return ToLikelihoodMatrix(ParseGeneralMatrix(doc));
}

LikelihoodMatrix ParseMatrix(std::string_view text) {
  return ToLikelihoodMatrix(ParseGeneralMatrix(text));
}

nlohmann::json ToJson(const LikelihoodMatrix& m) {
  return {{"state", EvidenceStateName(m.state())},
          {"rows", {{m.r(), m.s()}, {m.t(), m.u()}}}};
}

nlohmann::json ToJson(const NoisyOrParams& p) {
  return {{"model", "noisy-or"}, {"q0", p.q0}, {"q1", p.q1}, {"q2", p.q2}};
}

nlohmann::json ToJson(const SingularFactorization& f) {
  return {{"model", "singular"},
          {"a", f.a.value()},
          {"b", f.b.value()},
          {"c", f.c}};
}

nlohmann::json ToJson(const FactoredSymmetric& p) {
  return {{"model", "symmetric"}, {"k", p.k}, {"w", p.w}};
}

nlohmann::json ToJson(const SynergyReport& r) {
  return {{"det_pos", r.det_pos},
          {"det_neg", r.det_neg},
          {"y_pos", r.y_pos},
          {"y_neg", r.y_neg},
          {"classification", RelationName(r.classification)}};
}

}  // namespace cici
