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

#ifndef RENNER_ENGINE_HPP_
#define RENNER_ENGINE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "renner/family.hpp"
#include "renner/generator.hpp"
#include "renner/lattice.hpp"
#include "renner/model.hpp"
#include "renner/partial_injection.hpp"
#include "renner/weyl.hpp"

namespace renner {

// Canonical form of a Renner monoid element: the unique triple
// (left, idempotent, right) with left minimal in left * W_abs(idempotent),
// right minimal in W(idempotent) * right, and value left * idempotent * right.
struct NormalForm {
  WeylElement left;
  LambdaElement idempotent;
  WeylElement right;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

// Result of multiplying a normal form on the left by a Coxeter generator s.
// Either s is absorbed (s w = w, and s left = left t for an absorbing
// generator t of the idempotent), or the normal form becomes
// (s left, idempotent, right).
struct LeftMultiplication {
  NormalForm result;
  bool absorbed = false;
  int witness = 0;  // index of t when absorbed
};

// Everything needed to compute in one Renner monoid: generators, Weyl group,
// cross-section lattice, normal-form lookup tables and the e ^_w f table.
// Immutable after construction.
class Engine {
 public:
  explicit Engine(const MonoidFamily& family);

  const MonoidFamily& family() const noexcept { return family_; }
  const GeneratorTable& generators() const noexcept { return generators_; }
  const CoxeterGroup& group() const noexcept { return group_; }
  const CrossSectionLattice& lattice() const noexcept { return lattice_; }

  // Throws renner::Error on letters that are not in the alphabet.
  PartialInjection evaluate(const Word& word) const;
  PartialInjection evaluate(const NormalForm& a) const;

  // Throws OutsideMonoid if x is not in the monoid.
  NormalForm normal_decompose(const PartialInjection& x) const;
  NormalForm normal_form(const Word& word) const {
    return normal_decompose(evaluate(word));
  }

  NormalForm unit() const noexcept {
    return {group_.identity(), lattice_.unit(), group_.identity()};
  }
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;

  // l(left) + l(right): the minimal number of s-letters over all words for
  // the element.
  int length(const NormalForm& a) const;

  // l(left) - l(right): the Solomon length with its per-idempotent constant
  // set to zero. Only differences at a fixed idempotent are meaningful.
  int solomon_delta(const NormalForm& a) const;

  // The lattice element h = e w f for w minimal in W(e) w W(f). Throws
  // renner::Error when w is not such a representative.
  LambdaElement meet_under(LambdaElement e, WeylElement w,
                           LambdaElement f) const;

  // s_i * a via the descent dichotomy, without going through the model.
  LeftMultiplication left_multiply_case(int i, const NormalForm& a) const;
  NormalForm left_multiply(int i, const NormalForm& a) const {
    return left_multiply_case(i, a).result;
  }

  // The canonical word: reduced word of left, the lattice letter (omitted for
  // the unit), reduced word of right.
  Word canonical_word(const NormalForm& a) const;

  // All triples with left in D_abs(e), right in G(e), grouped by e in lattice
  // order.
  std::vector<NormalForm> admissible_triples() const;
  std::size_t admissible_triple_count() const;

  // The precomputed e ^_w f values, keyed by (e, w, f) over all e, f in
  // Lambda and w in G(e) n D(f).
  using MeetUnderKey = std::tuple<LambdaElement, WeylElement, LambdaElement>;
  const std::map<MeetUnderKey, LambdaElement>& meet_under_table() const {
    return meet_under_;
  }

 private:
  LambdaElement compute_meet_under(LambdaElement e, WeylElement w,
                                   LambdaElement f) const;

  MonoidFamily family_;
  GeneratorTable generators_;
  CoxeterGroup group_;
  CrossSectionLattice lattice_;

  // Per lattice element: domain mask of e * right -> right in G(e), and
  // left * e -> left in D_abs(e).
  std::vector<std::unordered_map<std::uint32_t, WeylElement>> right_by_domain_;
  std::vector<std::unordered_map<PartialInjection, WeylElement,
                                 PartialInjectionHash>>
      left_by_restriction_;
  std::map<MeetUnderKey, LambdaElement> meet_under_;
};

}  // namespace renner

#endif  // RENNER_ENGINE_HPP_
