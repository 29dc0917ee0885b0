// Copyright 2026 The renner Authors
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

#ifndef RENNER_TESTS_SUPPORT_HPP_
#define RENNER_TESTS_SUPPORT_HPP_

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "renner/engine.hpp"
#include "renner/family.hpp"
#include "renner/model.hpp"
#include "renner/partial_injection.hpp"

namespace renner::support {

inline const Engine& engine(Family family, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<Engine>> cache;
  auto& slot = cache[{static_cast<char>(family), rank}];
  if (!slot) {
    slot = std::make_unique<Engine>(MonoidFamily(family, rank));
  }
  return *slot;
}

inline PartialInjection to_pi(const oracle::Map& m) {
  return PartialInjection::from_images(m);
}

inline oracle::Map to_map(const PartialInjection& x) {
  oracle::Map m(x.degree());
  for (int j = 1; j <= x.degree(); ++j) {
    m[j - 1] = x[j];
  }
  return m;
}

inline Word word(const Engine& e, const std::string& text) {
  return parse_word(text, e.family());
}

// The exhaustive desk-scale grid.
inline std::vector<MonoidFamily> desk_families() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
          {Family::B, 2}, {Family::B, 3}, {Family::D, 3}};
}

// Ranks at which the length-function suite runs exhaustively.
inline std::vector<MonoidFamily> length_families() {
  return {{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::D, 3}};
}

inline std::string label(const MonoidFamily& f) { return f.name(); }

}  // namespace renner::support

#endif  // RENNER_TESTS_SUPPORT_HPP_
