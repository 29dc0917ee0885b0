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

#include "renner/lattice.hpp"

#include <algorithm>

#include "renner/error.hpp"
#include "renner/model.hpp"

namespace renner {

ElementSet::ElementSet(std::size_t universe, std::vector<WeylElement> elements)
    : elements_(std::move(elements)), member_(universe, false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (WeylElement w : elements_) {
    member_.at(w.index()) = true;
  }
}

namespace {

std::vector<WeylElement> filter(const CoxeterGroup& group, auto&& keep) {
  std::vector<WeylElement> out;
  for (std::uint32_t i = 0; i < group.size(); ++i) {
    if (keep(WeylElement(i))) {
      out.push_back(WeylElement(i));
    }
  }
  return out;
}

}  // namespace

CrossSectionLattice::CrossSectionLattice(const MonoidFamily& family,
                                         const CoxeterGroup& group)
    : family_(family) {
  GeneratorTable const table = build_generators(family);
  for (const auto& [g, x] : table) {
    if (!g.is_reflection()) {
      Node& nd = nodes_.emplace_back();
      nd.letter = g;
      nd.idempotent = x;
    }
  }
  nodes_.emplace_back().idempotent = PartialInjection::identity(family.degree());

  std::size_t const n = nodes_.size();
  meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      PartialInjection const p = nodes_[a].idempotent * nodes_[b].idempotent;
      auto const h = find(p);
      if (!h) {
        throw InvariantViolation("product " + name(LambdaElement(a)) + " " +
                                 name(LambdaElement(b)) +
                                 " is not in the cross-section lattice");
      }
      meet_[a * n + b] = h->index();
    }
  }

  std::size_t const order = group.size();
  for (Node& nd : nodes_) {
    PartialInjection const& e = nd.idempotent;
    for (int i = 1; i <= group.num_generators(); ++i) {
      PartialInjection const& s = group.perm(group.generator(i));
      PartialInjection const se = s * e;
      if (se == e * s) {
        nd.type.commuting.insert(i);
        (se == e ? nd.type.absorbing : nd.type.nonabsorbing).insert(i);
      }
    }
    nd.centralizer =
        ElementSet(order, group.parabolic_subgroup(nd.type.commuting));
    nd.absorbing =
        ElementSet(order, group.parabolic_subgroup(nd.type.absorbing));
    nd.nonabsorbing =
        ElementSet(order, group.parabolic_subgroup(nd.type.nonabsorbing));

    // W(e) is the internal direct product of the two factors.
    if (nd.centralizer.size() != nd.absorbing.size() * nd.nonabsorbing.size()) {
      throw InvariantViolation("W(e) is not the direct product of its factors");
    }
    for (int i : nd.type.absorbing.indices()) {
      for (int j : nd.type.nonabsorbing.indices()) {
        if (group.braid_order(i, j) != 2) {
          throw InvariantViolation(
              "absorbing and non-absorbing generators do not commute");
        }
      }
    }

    auto minimal = [&group](GeneratorSet I, Side side) {
      return [&group, I, side](WeylElement w) {
        return group.min_coset_rep(w, I, side) == w;
      };
    };
    nd.right_reps =
        ElementSet(order, filter(group, minimal(nd.type.commuting, Side::right)));
    nd.left_reps =
        ElementSet(order, filter(group, minimal(nd.type.commuting, Side::left)));
    nd.right_reps_absorbing =
        ElementSet(order, filter(group, minimal(nd.type.absorbing, Side::right)));
    nd.left_reps_absorbing =
        ElementSet(order, filter(group, minimal(nd.type.absorbing, Side::left)));
  }

  for (LambdaElement e : elements()) {
    GeneratorSet above = group.generators();
    for (LambdaElement f : strictly_above(e)) {
      above = above & nodes_[f.index()].type.commuting;
    }
    Node& nd = nodes_[e.index()];
    nd.left_reps_up = ElementSet(order, filter(group, [&](WeylElement w) {
                                   return nd.left_reps.contains(w) &&
                                          group.in_parabolic(w, above);
                                 }));
    nd.right_reps_up = ElementSet(order, filter(group, [&](WeylElement w) {
                                    return nd.right_reps.contains(w) &&
                                           group.in_parabolic(w, above);
                                  }));
  }
}

std::vector<LambdaElement> CrossSectionLattice::elements() const {
  std::vector<LambdaElement> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

std::vector<LambdaElement> CrossSectionLattice::nonunit() const {
  std::vector<LambdaElement> out = elements();
  out.pop_back();
  return out;
}

std::string CrossSectionLattice::name(LambdaElement e) const {
  auto const& letter = node(e).letter;
  return letter ? letter->to_string() : "1";
}

std::optional<GeneratorName> CrossSectionLattice::letter(
    LambdaElement e) const {
  return node(e).letter;
}

std::optional<LambdaElement> CrossSectionLattice::find(
    const GeneratorName& g) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].letter == g) {
      return LambdaElement(static_cast<std::uint8_t>(i));
    }
  }
  return std::nullopt;
}

std::optional<LambdaElement> CrossSectionLattice::find(
    const PartialInjection& idempotent) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].idempotent == idempotent) {
      return LambdaElement(static_cast<std::uint8_t>(i));
    }
  }
  return std::nullopt;
}

bool CrossSectionLattice::leq(LambdaElement e, LambdaElement f) const {
  PartialInjection const& x = idempotent(e);
  PartialInjection const& y = idempotent(f);
  return x * y == x && y * x == x;
}

LambdaElement CrossSectionLattice::meet(LambdaElement e,
                                        LambdaElement f) const {
  return LambdaElement(meet_.at(e.index() * nodes_.size() + f.index()));
}

std::vector<LambdaElement> CrossSectionLattice::strictly_above(
    LambdaElement e) const {
  std::vector<LambdaElement> out;
  for (LambdaElement f : elements()) {
    if (less(e, f)) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<WeylElement> CrossSectionLattice::double_coset_reps(
    LambdaElement e, LambdaElement f) const {
  std::vector<WeylElement> out;
  for (WeylElement w : left_min_reps(e)) {
    if (right_min_reps(f).contains(w)) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<WeylElement> CrossSectionLattice::up_double_coset_reps(
    LambdaElement e, LambdaElement f) const {
  std::vector<WeylElement> out;
  for (WeylElement w : left_min_reps_up(e)) {
    if (right_min_reps_up(f).contains(w)) {
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace renner
