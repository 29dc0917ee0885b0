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

#include "renner/generator.hpp"

#include <charconv>

namespace renner {

std::string GeneratorName::to_string() const {
  char const prefix = kind == Kind::s ? 's' : kind == Kind::e ? 'e' : 'f';
  return prefix + std::to_string(index);
}

std::optional<GeneratorName> GeneratorName::parse(std::string_view token) {
  if (token.size() < 2) {
    return std::nullopt;
  }
  Kind kind;
  switch (token[0]) {
    case 's':
      kind = Kind::s;
      break;
    case 'e':
      kind = Kind::e;
      break;
    case 'f':
      kind = Kind::f;
      break;
    default:
      return std::nullopt;
  }
  std::string_view const digits = token.substr(1);
  if (digits.size() > 1 && digits[0] == '0') {
    return std::nullopt;
  }
  int index = 0;
  auto const [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return GeneratorName{kind, index};
}

std::string to_string(const Word& word) {
  if (word.empty()) {
    return "1";
  }
  std::string out;
  for (const GeneratorName& g : word) {
    if (!out.empty()) {
      out += ' ';
    }
    out += g.to_string();
  }
  return out;
}

}  // namespace renner
