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

#include "renner/engine.hpp"

#include <optional>

#include "renner/error.hpp"

namespace renner {

Engine::Engine(const MonoidFamily& family)
    : family_(family),
      generators_(build_generators(family)),
      group_(family),
      lattice_(family, group_) {
  std::size_t const n = lattice_.size();
  right_by_domain_.resize(n);
  left_by_restriction_.resize(n);
  for (LambdaElement e : lattice_.elements()) {
    PartialInjection const& idem = lattice_.idempotent(e);
    auto& by_domain = right_by_domain_[e.index()];
    for (WeylElement w : lattice_.left_min_reps(e)) {
      std::uint32_t const mask = (idem * group_.perm(w)).domain_mask();
      if (!by_domain.emplace(mask, w).second) {
        throw InvariantViolation("two elements of G(" + lattice_.name(e) +
                                 ") share a domain");
      }
    }
    auto& by_restriction = left_by_restriction_[e.index()];
    for (WeylElement w : lattice_.right_min_reps_absorbing(e)) {
      if (!by_restriction.emplace(group_.perm(w) * idem, w).second) {
        throw InvariantViolation("two elements of D_abs(" + lattice_.name(e) +
                                 ") agree on e");
      }
    }
  }

  for (LambdaElement e : lattice_.elements()) {
    for (LambdaElement f : lattice_.elements()) {
      for (WeylElement w : lattice_.double_coset_reps(e, f)) {
        meet_under_.emplace(MeetUnderKey{e, w, f},
                            compute_meet_under(e, w, f));
      }
    }
  }
}

PartialInjection Engine::evaluate(const Word& word) const {
  for (const GeneratorName& g : word) {
    if (!is_letter(family_, g)) {
      throw Error("unknown generator " + g.to_string() + " for " +
                  family_.name());
    }
  }
  return renner::evaluate(generators_, family_.degree(), word);
}

PartialInjection Engine::evaluate(const NormalForm& a) const {
  return group_.perm(a.left) * lattice_.idempotent(a.idempotent) *
         group_.perm(a.right);
}

NormalForm Engine::normal_decompose(const PartialInjection& x) const {
  if (x.degree() != family_.degree()) {
    throw Error("partial injection of degree " + std::to_string(x.degree()) +
                " given to " + family_.name() + " (degree " +
                std::to_string(family_.degree()) + ")");
  }
  std::optional<NormalForm> found;
  std::uint32_t const domain = x.domain_mask();
  for (LambdaElement e : lattice_.elements()) {
    if (lattice_.rank(e) != x.rank()) {
      continue;
    }
    auto const& by_domain = right_by_domain_[e.index()];
    auto const r = by_domain.find(domain);
    if (r == by_domain.end()) {
      continue;
    }
    // x = left e right, so x right^-1 = left e.
    PartialInjection const restricted =
        x * group_.perm(group_.inverse(r->second));
    auto const& by_restriction = left_by_restriction_[e.index()];
    auto const l = by_restriction.find(restricted);
    if (l == by_restriction.end()) {
      continue;
    }
    if (found) {
      throw InvariantViolation("two normal decompositions of " +
                               x.to_string());
    }
    found = NormalForm{l->second, e, r->second};
  }
  if (!found) {
    throw OutsideMonoid(x.to_string() + " is outside R(M) for " +
                        family_.name());
  }
  return *found;
}

NormalForm Engine::multiply(const NormalForm& a, const NormalForm& b) const {
  return normal_decompose(evaluate(a) * evaluate(b));
}

int Engine::length(const NormalForm& a) const {
  return group_.length(a.left) + group_.length(a.right);
}

int Engine::solomon_delta(const NormalForm& a) const {
  return group_.length(a.left) - group_.length(a.right);
}

LambdaElement Engine::compute_meet_under(LambdaElement e, WeylElement w,
                                         LambdaElement f) const {
  PartialInjection const& ei = lattice_.idempotent(e);
  PartialInjection const& fi = lattice_.idempotent(f);
  PartialInjection const& wp = group_.perm(w);
  PartialInjection const product = ei * wp * fi;
  auto const h = lattice_.find(product);
  if (!h) {
    throw InvariantViolation(lattice_.name(e) + " w " + lattice_.name(f) +
                             " = " + product.to_string() +
                             " is not in the cross-section lattice");
  }
  if (product * wp != product ||
      !lattice_.absorbing_subgroup(*h).contains(w) ||
      !lattice_.leq(*h, lattice_.meet(e, f))) {
    throw InvariantViolation("e ^_w f contract fails for " + lattice_.name(e) +
                             ", " + lattice_.name(f));
  }
  return *h;
}

LambdaElement Engine::meet_under(LambdaElement e, WeylElement w,
                                 LambdaElement f) const {
  auto const it = meet_under_.find(MeetUnderKey{e, w, f});
  if (it == meet_under_.end()) {
    throw Error("w not double-coset minimal for (" + lattice_.name(e) + ", " +
                lattice_.name(f) + ")");
  }
  return it->second;
}

LeftMultiplication Engine::left_multiply_case(int i,
                                              const NormalForm& a) const {
  WeylElement const sw = group_.left_multiply(i, a.left);
  if (lattice_.right_min_reps_absorbing(a.idempotent).contains(sw)) {
    return {{sw, a.idempotent, a.right}, false, 0};
  }
  // s left = left t with t = left^-1 s left an absorbing generator.
  WeylElement const t = group_.multiply(group_.inverse(a.left), sw);
  GeneratorSet const absorbing = lattice_.type_map(a.idempotent).absorbing;
  for (int j : absorbing.indices()) {
    if (group_.generator(j) == t) {
      return {a, true, j};
    }
  }
  throw InvariantViolation("left multiplication by s" + std::to_string(i) +
                           " has no absorbing witness");
}

Word Engine::canonical_word(const NormalForm& a) const {
  Word word = group_.reduced_word(a.left);
  if (auto const g = lattice_.letter(a.idempotent)) {
    word.push_back(*g);
  }
  Word const tail = group_.reduced_word(a.right);
  word.insert(word.end(), tail.begin(), tail.end());
  return word;
}

std::vector<NormalForm> Engine::admissible_triples() const {
  std::vector<NormalForm> out;
  out.reserve(admissible_triple_count());
  for (LambdaElement e : lattice_.elements()) {
    for (WeylElement l : lattice_.right_min_reps_absorbing(e)) {
      for (WeylElement r : lattice_.left_min_reps(e)) {
        out.push_back({l, e, r});
      }
    }
  }
  return out;
}

std::size_t Engine::admissible_triple_count() const {
  std::size_t count = 0;
  for (LambdaElement e : lattice_.elements()) {
    count += lattice_.right_min_reps_absorbing(e).size() *
             lattice_.left_min_reps(e).size();
  }
  return count;
}

}  // namespace renner
