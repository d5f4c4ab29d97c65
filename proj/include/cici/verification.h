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

#ifndef CICI_VERIFICATION_H_
#define CICI_VERIFICATION_H_

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cici/core.h"

namespace cici::verify {

using BeliefFn =
    std::function<Probability(const BeliefQuery&, const LikelihoodMatrix&)>;

struct Config {
  std::uint64_t seed = 20260101;
  // Random draws per randomized suite.
  std::size_t samples = 10000;
  // Replaces belief_B in every suite that evaluates it. Left empty outside
  // of harness self-tests.
  BeliefFn belief_b;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  // First failing input, formatted for humans. Empty when passed.
  std::string counterexample;
};

std::vector<SuiteResult> RunAll(const Config& config);

// One line per suite plus a summary line. Returns true if all passed.
bool PrintSummary(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace cici::verify

#endif  // CICI_VERIFICATION_H_
