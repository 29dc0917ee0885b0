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

#ifndef RENNER_MODEL_HPP_
#define RENNER_MODEL_HPP_

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "renner/family.hpp"
#include "renner/generator.hpp"
#include "renner/partial_injection.hpp"

namespace renner {

using GeneratorTable = std::map<GeneratorName, PartialInjection>;

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// The alphabet S u Lambda_o in canonical order: s_1..s_k, e_0..e_top, f_l.
// The unit of the lattice is never a letter.
std::vector<GeneratorName> alphabet(const MonoidFamily& family);

bool is_letter(const MonoidFamily& family, const GeneratorName& g);

// The concrete generator matrices as partial injections:
//   A_n:  s_i = (i,i+1), e_j = id on {1..j} for 0 <= j < n.
//   B_l:  s_i = (i,i+1)(n-i,n-i+1) for i < l, s_l = (l,l+1), e_j for j <= l.
//   D_l:  s_i as in B for i < l, s_l = (l-1,l+1)(l,l+2), e_j for j <= l and
//         f_l = id on {1..l-1, l+1}.
GeneratorTable build_generators(const MonoidFamily& family);

// Product of the letters, left to right; the empty word is the identity.
// Throws renner::Error if a letter is missing from the table.
PartialInjection evaluate(const GeneratorTable& generators, int degree,
                          const Word& word);

// Whitespace-separated tokens "s<i>", "e<j>", "f<l>"; a lone "1" denotes the
// empty word. Throws ParseError naming the offending token and its position.
Word parse_word(std::string_view text, const MonoidFamily& family);

// Closure of {unit} u generators under right multiplication, breadth first.
// Elements are returned in discovery order. Throws CapExceeded once more than
// `cap` elements have been found.
std::vector<PartialInjection> enumerate_monoid(
    const MonoidFamily& family, std::size_t cap = kDefaultEnumerationCap);

}  // namespace renner

#endif  // RENNER_MODEL_HPP_
