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

#ifndef RENNER_LATTICE_HPP_
#define RENNER_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "renner/family.hpp"
#include "renner/generator.hpp"
#include "renner/partial_injection.hpp"
#include "renner/weyl.hpp"

namespace renner {

// Handle to an element of a CrossSectionLattice. Elements are indexed
// e_0, e_1, ..., e_top, then f_l (type D), then the unit last.
class LambdaElement {
 public:
  constexpr LambdaElement() noexcept = default;
  constexpr explicit LambdaElement(std::uint8_t index) noexcept
      : index_(index) {}

  constexpr std::uint8_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(LambdaElement, LambdaElement) = default;

 private:
  std::uint8_t index_ = 0;
};

// A subset of W materialized as a sorted list plus a membership bitmap.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t universe, std::vector<WeylElement> elements);

  bool contains(WeylElement w) const noexcept {
    return w.index() < member_.size() && member_[w.index()];
  }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<WeylElement>& elements() const noexcept {
    return elements_;
  }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<WeylElement> elements_;
  std::vector<bool> member_;
};

// lambda(e) = {s : se = es} splits into the generators that absorb e
// (se = es = e) and those that commute with e without absorbing it.
struct TypeMap {
  GeneratorSet commuting;
  GeneratorSet absorbing;
  GeneratorSet nonabsorbing;
};

// The cross-section lattice Lambda of the family together with all the
// per-element Coxeter data: type maps, the parabolic subgroups
// W(e) = W_lambda(e), W_abs(e) = W_absorbing(e), W_nonabs(e), and the sets of
// minimal coset representatives.
//
// Order, meets and type maps are computed from products in the model; nothing
// is read from tables.
class CrossSectionLattice {
 public:
  CrossSectionLattice(const MonoidFamily& family, const CoxeterGroup& group);

  const MonoidFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // All elements in index order (unit last).
  std::vector<LambdaElement> elements() const;
  // Lambda_o: every element except the unit.
  std::vector<LambdaElement> nonunit() const;

  LambdaElement unit() const noexcept {
    return LambdaElement(static_cast<std::uint8_t>(nodes_.size() - 1));
  }
  LambdaElement zero() const noexcept { return LambdaElement(0); }
  bool is_unit(LambdaElement e) const noexcept { return e == unit(); }

  // "e1", "f3", or "1" for the unit.
  std::string name(LambdaElement e) const;
  // The alphabet letter of e; nullopt for the unit.
  std::optional<GeneratorName> letter(LambdaElement e) const;

  std::optional<LambdaElement> find(const GeneratorName& g) const;
  std::optional<LambdaElement> find(const PartialInjection& idempotent) const;

  const PartialInjection& idempotent(LambdaElement e) const {
    return node(e).idempotent;
  }
  int rank(LambdaElement e) const { return node(e).idempotent.rank(); }

  // e <= f iff ef = fe = e.
  bool leq(LambdaElement e, LambdaElement f) const;
  bool less(LambdaElement e, LambdaElement f) const {
    return e != f && leq(e, f);
  }
  LambdaElement meet(LambdaElement e, LambdaElement f) const;
  std::vector<LambdaElement> strictly_above(LambdaElement e) const;

  const TypeMap& type_map(LambdaElement e) const { return node(e).type; }

  // W(e), W_abs(e), W_nonabs(e).
  const ElementSet& centralizer(LambdaElement e) const {
    return node(e).centralizer;
  }
  const ElementSet& absorbing_subgroup(LambdaElement e) const {
    return node(e).absorbing;
  }
  const ElementSet& nonabsorbing_subgroup(LambdaElement e) const {
    return node(e).nonabsorbing;
  }

  // Minimal representatives of w W(e) (right) and W(e) w (left), of the same
  // cosets of W_abs(e), and the "up" variants restricted to the intersection of
  // W(f) over all f > e.
  const ElementSet& right_min_reps(LambdaElement e) const {
    return node(e).right_reps;
  }
  const ElementSet& left_min_reps(LambdaElement e) const {
    return node(e).left_reps;
  }
  const ElementSet& right_min_reps_absorbing(LambdaElement e) const {
    return node(e).right_reps_absorbing;
  }
  const ElementSet& left_min_reps_absorbing(LambdaElement e) const {
    return node(e).left_reps_absorbing;
  }
  const ElementSet& left_min_reps_up(LambdaElement e) const {
    return node(e).left_reps_up;
  }
  const ElementSet& right_min_reps_up(LambdaElement e) const {
    return node(e).right_reps_up;
  }

  // Minimal elements of the double cosets W(e) w W(f): the intersection of
  // left_min_reps(e) and right_min_reps(f).
  std::vector<WeylElement> double_coset_reps(LambdaElement e,
                                             LambdaElement f) const;
  // left_min_reps_up(e) intersected with right_min_reps_up(f).
  std::vector<WeylElement> up_double_coset_reps(LambdaElement e,
                                                LambdaElement f) const;

 private:
  struct Node {
    std::optional<GeneratorName> letter;
    PartialInjection idempotent;
    TypeMap type;
    ElementSet centralizer;
    ElementSet absorbing;
    ElementSet nonabsorbing;
    ElementSet right_reps;
    ElementSet left_reps;
    ElementSet right_reps_absorbing;
    ElementSet left_reps_absorbing;
    ElementSet left_reps_up;
    ElementSet right_reps_up;
  };

  const Node& node(LambdaElement e) const { return nodes_.at(e.index()); }

  MonoidFamily family_;
  std::vector<Node> nodes_;
  std::vector<std::uint8_t> meet_;  // size() x size()
};

}  // namespace renner

#endif  // RENNER_LATTICE_HPP_
