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

#ifndef RENNER_PRESENTATION_HPP_
#define RENNER_PRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "renner/engine.hpp"
#include "renner/family.hpp"
#include "renner/generator.hpp"
#include "renner/partial_injection.hpp"

namespace renner {

// COX1: s^2 = 1.  COX2: braid relations.  TYM1: s e = e s for commuting,
// non-absorbing s.  TYM2: s e = e s = e for absorbing s.  TYM3: e w f = e ^_w f.
enum class RelationTag { COX1, COX2, TYM1, TYM2, TYM3 };

std::string_view to_string(RelationTag tag);

struct Relation {
  Word lhs;
  Word rhs;
  RelationTag tag = RelationTag::COX1;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// "lhs = rhs" with space-separated tokens; an empty side prints as "1".
std::string to_string(const Relation& relation);

enum class Flavor {
  full,       // TYM3 over all w in G(e) n D(f)
  reduced,    // TYM3 over w in G_up(e) n D_up(f)
  tabulated,  // the hand-written per-family tables, instantiated at the rank
};

std::string_view to_string(Flavor flavor);
// Accepts "full", "reduced", "explicit". Throws renner::Error otherwise.
Flavor parse_flavor(std::string_view name);

struct Presentation {
  MonoidFamily family;
  Flavor flavor;
  std::vector<GeneratorName> alphabet;
  std::vector<Relation> relations;
};

// One relation per line, in emission order.
std::string to_text(const Presentation& presentation);

// Relation order: COX1 by s; COX2 by (s, t); TYM1 and TYM2 by (e, s); TYM3 by
// (e, f, l(w), reduced word of w). TYM2 contributes the two relations
// "s e = e" and "e s = e".
Presentation generate_full(const Engine& engine);
Presentation generate_reduced(const Engine& engine);

// The per-family relation tables, verbatim, with "a = b = c" split into
// "a = c" and "b = c". Ranges that cannot be instantiated at the given rank are
// skipped.
Presentation generate_explicit(const MonoidFamily& family);

Presentation generate(const Engine& engine, Flavor flavor);

struct RelationFailure {
  std::size_t index;
  Relation relation;
  PartialInjection lhs_value;
  PartialInjection rhs_value;
};

struct RelationReport {
  std::size_t checked = 0;
  std::vector<RelationFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

// Evaluates both sides of every relation in the model.
RelationReport verify_relations(const Engine& engine,
                                const Presentation& presentation);

struct CompletenessReport {
  struct Row {
    std::string idempotent;
    std::size_t right_reps;  // |D_abs(e)|
    std::size_t left_reps;   // |G(e)|
  };

  std::size_t enumerated = 0;       // closure of the generators
  std::size_t triples = 0;          // sum over e of |D_abs(e)| |G(e)|
  std::size_t distinct_values = 0;  // distinct model values of the triples
  std::size_t outside = 0;          // triple values not in the closure
  std::vector<Row> rows;

  bool ok() const noexcept {
    return enumerated == triples && triples == distinct_values && outside == 0;
  }
};

// Soundness plus equal cardinality of the closure and the admissible triples
// certifies the normal form. Throws CapExceeded from the enumeration.
CompletenessReport verify_completeness(const Engine& engine,
                                       std::size_t cap = kDefaultEnumerationCap);

// The canonical word of the element the word represents.
Word rewrite_to_normal(const Engine& engine, const Word& word);

}  // namespace renner

#endif  // RENNER_PRESENTATION_HPP_
