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

#include "renner/weyl.hpp"

#include <algorithm>
#include <bit>

#include "renner/error.hpp"
#include "renner/model.hpp"

namespace renner {

GeneratorSet::GeneratorSet(std::initializer_list<int> indices) noexcept {
  for (int i : indices) {
    insert(i);
  }
}

GeneratorSet GeneratorSet::all(int k) noexcept {
  return GeneratorSet(k >= 32 ? ~0u : (1u << k) - 1u);
}

int GeneratorSet::size() const noexcept { return std::popcount(bits_); }

std::vector<int> GeneratorSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i) {
    if (contains(i)) {
      out.push_back(i);
    }
  }
  return out;
}

std::string GeneratorSet::to_string() const {
  std::string out = "{";
  for (int i : indices()) {
    if (out.size() > 1) {
      out += ", ";
    }
    out += "s" + std::to_string(i);
  }
  return out + "}";
}

CoxeterGroup::CoxeterGroup(const MonoidFamily& family)
    : family_(family), k_(family.num_reflections()) {
  GeneratorTable const table = build_generators(family);
  std::vector<PartialInjection> gens;
  for (int i = 1; i <= k_; ++i) {
    gens.push_back(table.at(GeneratorName::S(i)));
  }

  auto add = [this](const PartialInjection& p, int len) {
    auto const [it, inserted] =
        index_.emplace(p, static_cast<std::uint32_t>(perms_.size()));
    if (inserted) {
      perms_.push_back(p);
      length_.push_back(len);
      max_length_ = std::max(max_length_, len);
    }
    return it->second;
  };

  add(PartialInjection::identity(family.degree()), 0);
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (int i = 1; i <= k_; ++i) {
      std::uint32_t const idx =
          add(gens[i - 1] * perms_[head], length_[head] + 1);
      left_.push_back(idx);
    }
  }

  right_.resize(left_.size());
  inverse_.resize(perms_.size());
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    for (int i = 1; i <= k_; ++i) {
      right_[w * k_ + (i - 1)] = index_.at(perms_[w] * gens[i - 1]);
    }
    inverse_[w] = index_.at(perms_[w].inverse());
  }
}

WeylElement CoxeterGroup::generator(int i) const {
  if (i < 1 || i > k_) {
    throw Error("no Coxeter generator s" + std::to_string(i) + " in " +
                family_.name());
  }
  return left_multiply(i, identity());
}

std::optional<WeylElement> CoxeterGroup::find(
    const PartialInjection& perm) const {
  auto const it = index_.find(perm);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return WeylElement(it->second);
}

WeylElement CoxeterGroup::element(const PartialInjection& perm) const {
  auto const w = find(perm);
  if (!w) {
    throw Error(perm.to_string() + " is not an element of the Weyl group of " +
                family_.name());
  }
  return *w;
}

WeylElement CoxeterGroup::longest_element() const {
  auto const it = std::max_element(length_.begin(), length_.end());
  return WeylElement(static_cast<std::uint32_t>(it - length_.begin()));
}

WeylElement CoxeterGroup::multiply(WeylElement a, WeylElement b) const {
  return WeylElement(index_.at(perm(a) * perm(b)));
}

GeneratorSet CoxeterGroup::left_descents(WeylElement w) const {
  GeneratorSet out;
  for (int i = 1; i <= k_; ++i) {
    if (length(left_multiply(i, w)) < length(w)) {
      out.insert(i);
    }
  }
  return out;
}

GeneratorSet CoxeterGroup::right_descents(WeylElement w) const {
  GeneratorSet out;
  for (int i = 1; i <= k_; ++i) {
    if (length(right_multiply(w, i)) < length(w)) {
      out.insert(i);
    }
  }
  return out;
}

Word CoxeterGroup::reduced_word(WeylElement w) const {
  Word word;
  while (!w.is_identity()) {
    int const i = std::countr_zero(left_descents(w).bits()) + 1;
    word.push_back(GeneratorName::S(i));
    w = left_multiply(i, w);
  }
  return word;
}

WeylElement CoxeterGroup::from_word(const Word& word) const {
  WeylElement w = identity();
  for (const GeneratorName& g : word) {
    if (!g.is_reflection() || g.index < 1 || g.index > k_) {
      throw Error(g.to_string() + " is not a Coxeter generator of " +
                  family_.name());
    }
    w = right_multiply(w, g.index);
  }
  return w;
}

WeylElement CoxeterGroup::min_coset_rep(WeylElement w, GeneratorSet I,
                                        Side side) const {
  for (;;) {
    GeneratorSet const d =
        (side == Side::right ? right_descents(w) : left_descents(w)) & I;
    if (d.empty()) {
      return w;
    }
    int const i = std::countr_zero(d.bits()) + 1;
    w = side == Side::right ? right_multiply(w, i) : left_multiply(i, w);
  }
}

WeylElement CoxeterGroup::min_double_coset_rep(WeylElement w, GeneratorSet J,
                                               GeneratorSet I) const {
  // Each pass strictly shortens w unless it is already minimal on both sides.
  for (;;) {
    WeylElement const v =
        min_coset_rep(min_coset_rep(w, J, Side::left), I, Side::right);
    if (v == w) {
      return w;
    }
    w = v;
  }
}

bool CoxeterGroup::in_parabolic(WeylElement w, GeneratorSet I) const {
  return min_coset_rep(w, I, Side::right).is_identity();
}

std::vector<WeylElement> CoxeterGroup::parabolic_subgroup(
    GeneratorSet I) const {
  std::vector<WeylElement> out{identity()};
  std::vector<bool> seen(size(), false);
  seen[0] = true;
  std::vector<int> const gens = I.indices();
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : gens) {
      WeylElement const v = right_multiply(out[head], i);
      if (!seen[v.index()]) {
        seen[v.index()] = true;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int CoxeterGroup::braid_order(int i, int j) const {
  WeylElement const st = multiply(generator(i), generator(j));
  WeylElement w = st;
  int order = 1;
  while (!w.is_identity()) {
    w = multiply(w, st);
    ++order;
  }
  return order;
}

int coxeter_matrix_entry(const MonoidFamily& family, int i, int j) {
  if (i == j) {
    return 1;
  }
  if (i > j) {
    std::swap(i, j);
  }
  int const l = family.rank();
  switch (family.family()) {
    case Family::A:
      return j == i + 1 ? 3 : 2;
    case Family::B:
      if (j == i + 1) {
        return j == l ? 4 : 3;
      }
      return 2;
    case Family::D:
      if (j == l) {
        return i == l - 2 ? 3 : 2;
      }
      return j == i + 1 ? 3 : 2;
  }
  return 2;
}

}  // namespace renner
