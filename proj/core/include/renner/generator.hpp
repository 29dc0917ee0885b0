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

#ifndef RENNER_GENERATOR_HPP_
#define RENNER_GENERATOR_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace renner {

// A letter of the alphabet S u Lambda_o: a Coxeter generator s_i, an
// idempotent e_j of the cross-section lattice, or (type D only) the second
// rank-l idempotent f_l.
struct GeneratorName {
  enum class Kind : unsigned char { s, e, f };

  Kind kind = Kind::s;
  int index = 0;

  static constexpr GeneratorName S(int i) noexcept { return {Kind::s, i}; }
  static constexpr GeneratorName E(int j) noexcept { return {Kind::e, j}; }
  static constexpr GeneratorName F(int l) noexcept { return {Kind::f, l}; }

  bool is_reflection() const noexcept { return kind == Kind::s; }

  // "s1", "e0", "f3".
  std::string to_string() const;

  // Inverse of to_string; nullopt on anything malformed. Does not check the
  // index against a family.
  static std::optional<GeneratorName> parse(std::string_view token);

  // Ordered by kind (s < e < f), then index.
  friend auto operator<=>(const GeneratorName&,
                          const GeneratorName&) = default;
};

// Words are read left to right as matrix products.
using Word = std::vector<GeneratorName>;

// Space-separated tokens; the empty word prints as "1".
std::string to_string(const Word& word);

}  // namespace renner

#endif  // RENNER_GENERATOR_HPP_
