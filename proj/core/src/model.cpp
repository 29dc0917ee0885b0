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

#include "renner/model.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

#include "renner/error.hpp"

namespace renner {

namespace {

int top_idempotent(const MonoidFamily& family) {
  // Largest j with e_j in Lambda_o.
  return family.family() == Family::A ? family.rank() - 1 : family.rank();
}

}  // namespace

std::vector<GeneratorName> alphabet(const MonoidFamily& family) {
  std::vector<GeneratorName> letters;
  for (int i = 1; i <= family.num_reflections(); ++i) {
    letters.push_back(GeneratorName::S(i));
  }
  for (int j = 0; j <= top_idempotent(family); ++j) {
    letters.push_back(GeneratorName::E(j));
  }
  if (family.family() == Family::D) {
    letters.push_back(GeneratorName::F(family.rank()));
  }
  return letters;
}

bool is_letter(const MonoidFamily& family, const GeneratorName& g) {
  switch (g.kind) {
    case GeneratorName::Kind::s:
      return g.index >= 1 && g.index <= family.num_reflections();
    case GeneratorName::Kind::e:
      return g.index >= 0 && g.index <= top_idempotent(family);
    case GeneratorName::Kind::f:
      return family.family() == Family::D && g.index == family.rank();
  }
  return false;
}

GeneratorTable build_generators(const MonoidFamily& family) {
  int const n = family.degree();
  int const l = family.rank();
  GeneratorTable table;

  for (int i = 1; i <= family.num_reflections(); ++i) {
    std::vector<std::pair<int, int>> swaps;
    if (family.family() == Family::A) {
      swaps = {{i, i + 1}};
    } else if (i < l) {
      swaps = {{i, i + 1}, {n - i, n - i + 1}};
    } else if (family.family() == Family::B) {
      swaps = {{l, l + 1}};
    } else {
      swaps = {{l - 1, l + 1}, {l, l + 2}};
    }
    table.emplace(GeneratorName::S(i),
                  PartialInjection::from_transpositions(n, swaps));
  }

  for (int j = 0; j <= top_idempotent(family); ++j) {
    std::vector<int> points;
    for (int p = 1; p <= j; ++p) {
      points.push_back(p);
    }
    table.emplace(GeneratorName::E(j),
                  PartialInjection::identity_on(n, points));
  }

  if (family.family() == Family::D) {
    std::vector<int> points;
    for (int p = 1; p <= l - 1; ++p) {
      points.push_back(p);
    }
    points.push_back(l + 1);
    table.emplace(GeneratorName::F(l),
                  PartialInjection::identity_on(n, points));
  }
  return table;
}

PartialInjection evaluate(const GeneratorTable& generators, int degree,
                          const Word& word) {
  PartialInjection x = PartialInjection::identity(degree);
  for (const GeneratorName& g : word) {
    auto const it = generators.find(g);
    if (it == generators.end()) {
      throw Error("unknown generator " + g.to_string());
    }
    x = x * it->second;
  }
  return x;
}

Word parse_word(std::string_view text, const MonoidFamily& family) {
  Word word;
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t const start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(text.substr(start, i - start));
    }
  }
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    std::string_view const token = tokens[pos];
    if (token == "1") {
      continue;
    }
    auto const g = GeneratorName::parse(token);
    if (!g) {
      throw ParseError("malformed token '" + std::string(token) +
                           "' at position " + std::to_string(pos + 1),
                       pos + 1);
    }
    if (!is_letter(family, *g)) {
      throw ParseError("unknown generator " + std::string(token) +
                           " at position " + std::to_string(pos + 1),
                       pos + 1);
    }
    word.push_back(*g);
  }
  return word;
}

std::vector<PartialInjection> enumerate_monoid(const MonoidFamily& family,
                                               std::size_t cap) {
  GeneratorTable const table = build_generators(family);
  std::vector<PartialInjection> gens;
  for (const auto& [name, x] : table) {
    gens.push_back(x);
  }

  std::vector<PartialInjection> elements;
  std::unordered_set<PartialInjection, PartialInjectionHash> seen;
  auto visit = [&](const PartialInjection& x) {
    if (seen.insert(x).second) {
      if (elements.size() >= cap) {
        throw CapExceeded(cap);
      }
      elements.push_back(x);
    }
  };

  visit(PartialInjection::identity(family.degree()));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const PartialInjection& g : gens) {
      visit(elements[head] * g);
    }
  }
  return elements;
}

}  // namespace renner
