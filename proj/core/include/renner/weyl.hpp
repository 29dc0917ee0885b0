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

#ifndef RENNER_WEYL_HPP_
#define RENNER_WEYL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "renner/family.hpp"
#include "renner/generator.hpp"
#include "renner/partial_injection.hpp"

namespace renner {

// A subset of the Coxeter generators {s_1, ..., s_k}, stored as a bit mask
// (bit i - 1 for s_i).
class GeneratorSet {
 public:
  constexpr GeneratorSet() noexcept = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) noexcept : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> indices) noexcept;

  // {s_1, ..., s_k}.
  static GeneratorSet all(int k) noexcept;

  bool contains(int i) const noexcept { return (bits_ >> (i - 1)) & 1u; }
  void insert(int i) noexcept { bits_ |= 1u << (i - 1); }
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool subset_of(GeneratorSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  std::uint32_t bits() const noexcept { return bits_; }

  // Generator indices in increasing order.
  std::vector<int> indices() const;

  // "{s1, s3}".
  std::string to_string() const;

  friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) noexcept {
    return GeneratorSet(a.bits_ | b.bits_);
  }
  friend GeneratorSet operator&(GeneratorSet a, GeneratorSet b) noexcept {
    return GeneratorSet(a.bits_ & b.bits_);
  }
  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Handle to an element of a CoxeterGroup; an index into its element table.
// Index 0 is always the identity.
class WeylElement {
 public:
  constexpr WeylElement() noexcept = default;
  constexpr explicit WeylElement(std::uint32_t index) noexcept
      : index_(index) {}

  constexpr std::uint32_t index() const noexcept { return index_; }
  constexpr bool is_identity() const noexcept { return index_ == 0; }

  friend constexpr auto operator<=>(WeylElement, WeylElement) = default;

 private:
  std::uint32_t index_ = 0;
};

enum class Side {
  left,   // cosets W_I w
  right,  // cosets w W_I
};

// The Weyl group W generated by the s_i inside the degree-n permutations,
// tabulated by breadth-first search over the Cayley graph. The BFS distance
// from the identity is the Coxeter length.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const MonoidFamily& family);

  const MonoidFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return perms_.size(); }
  int num_generators() const noexcept { return k_; }
  GeneratorSet generators() const noexcept { return GeneratorSet::all(k_); }

  WeylElement identity() const noexcept { return WeylElement(0); }
  WeylElement generator(int i) const;

  const PartialInjection& perm(WeylElement w) const {
    return perms_[w.index()];
  }

  std::optional<WeylElement> find(const PartialInjection& perm) const;

  // Like find, but throws renner::Error when perm is not in W.
  WeylElement element(const PartialInjection& perm) const;

  int length(WeylElement w) const { return length_[w.index()]; }
  int max_length() const noexcept { return max_length_; }

  // The unique element of maximal length.
  WeylElement longest_element() const;

  WeylElement multiply(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement w) const {
    return WeylElement(inverse_[w.index()]);
  }

  // s_i * w and w * s_i.
  WeylElement left_multiply(int i, WeylElement w) const {
    return WeylElement(left_[table_index(w, i)]);
  }
  WeylElement right_multiply(WeylElement w, int i) const {
    return WeylElement(right_[table_index(w, i)]);
  }

  // s with l(s w) < l(w), resp. l(w s) < l(w).
  GeneratorSet left_descents(WeylElement w) const;
  GeneratorSet right_descents(WeylElement w) const;

  // The fixed reduced word of w: repeatedly strip the lowest-indexed left
  // descent.
  Word reduced_word(WeylElement w) const;

  // Product of a word of s-letters. Throws renner::Error on other letters.
  WeylElement from_word(const Word& word) const;

  // Minimal-length element of w W_I (side = right) or W_I w (side = left).
  WeylElement min_coset_rep(WeylElement w, GeneratorSet I, Side side) const;

  // Minimal-length element of W_J w W_I.
  WeylElement min_double_coset_rep(WeylElement w, GeneratorSet J,
                                   GeneratorSet I) const;

  // Whether w lies in the standard parabolic subgroup W_I.
  bool in_parabolic(WeylElement w, GeneratorSet I) const;

  // Elements of W_I in increasing index order.
  std::vector<WeylElement> parabolic_subgroup(GeneratorSet I) const;

  // Order of s_i s_j computed in the model.
  int braid_order(int i, int j) const;

 private:
  std::size_t table_index(WeylElement w, int i) const {
    return static_cast<std::size_t>(w.index()) * k_ + (i - 1);
  }

  MonoidFamily family_;
  int k_;
  std::vector<PartialInjection> perms_;
  std::vector<int> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::unordered_map<PartialInjection, std::uint32_t, PartialInjectionHash>
      index_;
  int max_length_ = 0;
};

// Coxeter matrix entry m(s_i, s_j) read off the Coxeter graph of the family:
// A is a path with all labels 3; B is a path whose last edge {s_{l-1}, s_l} is
// labelled 4; D is a path s_1 .. s_{l-1} with s_l attached to s_{l-2}.
// m(s, s) = 1 and non-adjacent pairs give 2.
int coxeter_matrix_entry(const MonoidFamily& family, int i, int j);

}  // namespace renner

#endif  // RENNER_WEYL_HPP_
