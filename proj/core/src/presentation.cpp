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

#include "renner/presentation.hpp"

#include <algorithm>
#include <unordered_set>

#include "renner/error.hpp"
#include "renner/model.hpp"

namespace renner {

namespace {

using G = GeneratorName;

Word braid_word(int s, int t, int m) {
  Word w;
  for (int k = 0; k < m; ++k) {
    w.push_back(G::S(k % 2 == 0 ? s : t));
  }
  return w;
}

// Relations shared by the full and reduced flavors.
void add_coxeter_and_type_relations(const Engine& engine,
                                    std::vector<Relation>& out) {
  const MonoidFamily& family = engine.family();
  int const k = family.num_reflections();
  for (int i = 1; i <= k; ++i) {
    out.push_back({{G::S(i), G::S(i)}, {}, RelationTag::COX1});
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      int const m = coxeter_matrix_entry(family, i, j);
      out.push_back({braid_word(i, j, m), braid_word(j, i, m),
                     RelationTag::COX2});
    }
  }
  const CrossSectionLattice& lattice = engine.lattice();
  for (LambdaElement e : lattice.nonunit()) {
    G const eg = *lattice.letter(e);
    for (int i : lattice.type_map(e).nonabsorbing.indices()) {
      out.push_back({{G::S(i), eg}, {eg, G::S(i)}, RelationTag::TYM1});
    }
  }
  for (LambdaElement e : lattice.nonunit()) {
    G const eg = *lattice.letter(e);
    for (int i : lattice.type_map(e).absorbing.indices()) {
      out.push_back({{G::S(i), eg}, {eg}, RelationTag::TYM2});
      out.push_back({{eg, G::S(i)}, {eg}, RelationTag::TYM2});
    }
  }
}

void add_meet_relations(const Engine& engine, bool reduced,
                        std::vector<Relation>& out) {
  const CrossSectionLattice& lattice = engine.lattice();
  const CoxeterGroup& group = engine.group();
  for (LambdaElement e : lattice.nonunit()) {
    for (LambdaElement f : lattice.nonunit()) {
      std::vector<WeylElement> reps = reduced
                                          ? lattice.up_double_coset_reps(e, f)
                                          : lattice.double_coset_reps(e, f);
      std::vector<Word> words;
      for (WeylElement w : reps) {
        words.push_back(group.reduced_word(w));
      }
      std::vector<std::size_t> order(reps.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (words[a].size() != words[b].size()) {
          return words[a].size() < words[b].size();
        }
        return words[a] < words[b];
      });
      for (std::size_t idx : order) {
        Word lhs{*lattice.letter(e)};
        lhs.insert(lhs.end(), words[idx].begin(), words[idx].end());
        lhs.push_back(*lattice.letter(f));
        LambdaElement const h = engine.meet_under(e, reps[idx], f);
        out.push_back({std::move(lhs), {*lattice.letter(h)}, RelationTag::TYM3});
      }
    }
  }
}

Presentation generate_semantic(const Engine& engine, Flavor flavor) {
  Presentation p{engine.family(), flavor, alphabet(engine.family()), {}};
  add_coxeter_and_type_relations(engine, p.relations);
  add_meet_relations(engine, flavor == Flavor::reduced, p.relations);
  return p;
}

// Builders for the hand-written tables.
class TableWriter {
 public:
  explicit TableWriter(std::vector<Relation>& out) : out_(out) {}

  void equal(Word lhs, Word rhs, RelationTag tag) {
    out_.push_back({std::move(lhs), std::move(rhs), tag});
  }
  // a = b = c
  void chain(Word a, Word b, const Word& c, RelationTag tag) {
    equal(std::move(a), c, tag);
    equal(std::move(b), c, tag);
  }

  void involutions(int k) {
    for (int i = 1; i <= k; ++i) {
      equal({G::S(i), G::S(i)}, {}, RelationTag::COX1);
    }
  }
  // s_i s_j = s_j s_i for |i - j| >= 2.
  void far_commutations(int k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 2; j <= k; ++j) {
        equal({G::S(i), G::S(j)}, {G::S(j), G::S(i)}, RelationTag::COX2);
      }
    }
  }
  // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} for 1 <= i <= last.
  void braids(int last) {
    for (int i = 1; i <= last; ++i) {
      equal(braid_word(i, i + 1, 3), braid_word(i + 1, i, 3),
            RelationTag::COX2);
    }
  }
  // e_j s_i = s_i e_j for 1 <= i < j <= top.
  void commuting_idempotents(int top) {
    for (int j = 1; j <= top; ++j) {
      for (int i = 1; i < j; ++i) {
        equal({G::E(j), G::S(i)}, {G::S(i), G::E(j)}, RelationTag::TYM1);
      }
    }
  }
  // e_j s_i = s_i e_j = e_j for 0 <= j < i <= k.
  void absorbing_idempotents(int k) {
    for (int j = 0; j < k; ++j) {
      for (int i = j + 1; i <= k; ++i) {
        chain({G::E(j), G::S(i)}, {G::S(i), G::E(j)}, {G::E(j)},
              RelationTag::TYM2);
      }
    }
  }
  // e_i e_j = e_j e_i = e_min(i,j) for 0 <= i, j <= top.
  void idempotent_meets(int top) {
    for (int i = 0; i <= top; ++i) {
      equal({G::E(i), G::E(i)}, {G::E(i)}, RelationTag::TYM3);
      for (int j = i + 1; j <= top; ++j) {
        chain({G::E(i), G::E(j)}, {G::E(j), G::E(i)}, {G::E(i)},
              RelationTag::TYM3);
      }
    }
  }
  // e_i s_i e_i = e_{i-1} for 1 <= i <= last.
  void drops(int last) {
    for (int i = 1; i <= last; ++i) {
      equal({G::E(i), G::S(i), G::E(i)}, {G::E(i - 1)}, RelationTag::TYM3);
    }
  }

 private:
  std::vector<Relation>& out_;
};

void rook_table(int n, TableWriter& t) {
  t.involutions(n - 1);
  t.far_commutations(n - 1);
  t.braids(n - 2);
  t.commuting_idempotents(n - 1);
  t.absorbing_idempotents(n - 1);
  t.idempotent_meets(n - 1);
  t.drops(n - 1);
}

void symplectic_table(int l, TableWriter& t) {
  t.involutions(l);
  t.far_commutations(l);
  t.braids(l - 2);
  t.equal(braid_word(l, l - 1, 4), braid_word(l - 1, l, 4), RelationTag::COX2);
  t.commuting_idempotents(l);
  t.absorbing_idempotents(l);
  t.idempotent_meets(l);
  t.drops(l);
  t.equal({G::E(l), G::S(l), G::S(l - 1), G::S(l), G::E(l)}, {G::E(l - 2)},
          RelationTag::TYM3);
}

void orthogonal_table(int l, TableWriter& t) {
  t.involutions(l);
  t.far_commutations(l);
  t.braids(l - 2);
  t.equal(braid_word(l, l - 2, 3), braid_word(l - 2, l, 3), RelationTag::COX2);
  t.commuting_idempotents(l);
  t.absorbing_idempotents(l);
  t.idempotent_meets(l);
  t.chain({G::F(l), G::E(l)}, {G::E(l), G::F(l)}, {G::E(l - 1)},
          RelationTag::TYM3);
  t.drops(l - 1);
  t.chain({G::E(l), G::S(l), G::E(l)}, {G::F(l), G::S(l - 1), G::F(l)},
          {G::E(l - 2)}, RelationTag::TYM3);
  t.chain({G::E(l), G::S(l), G::S(l - 2), G::S(l - 1), G::F(l)},
          {G::F(l), G::S(l - 1), G::S(l - 2), G::S(l), G::E(l)},
          {G::E(l - 3)}, RelationTag::TYM3);
}

}  // namespace

std::string_view to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::COX1:
      return "COX1";
    case RelationTag::COX2:
      return "COX2";
    case RelationTag::TYM1:
      return "TYM1";
    case RelationTag::TYM2:
      return "TYM2";
    case RelationTag::TYM3:
      return "TYM3";
  }
  return "?";
}

std::string to_string(const Relation& relation) {
  return to_string(relation.lhs) + " = " + to_string(relation.rhs);
}

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::full:
      return "full";
    case Flavor::reduced:
      return "reduced";
    case Flavor::tabulated:
      return "explicit";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "full") {
    return Flavor::full;
  }
  if (name == "reduced") {
    return Flavor::reduced;
  }
  if (name == "explicit") {
    return Flavor::tabulated;
  }
  throw Error("unknown presentation flavor '" + std::string(name) +
              "' (expected full, reduced or explicit)");
}

std::string to_text(const Presentation& presentation) {
  std::string out;
  for (const Relation& r : presentation.relations) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

Presentation generate_full(const Engine& engine) {
  return generate_semantic(engine, Flavor::full);
}

Presentation generate_reduced(const Engine& engine) {
  return generate_semantic(engine, Flavor::reduced);
}

Presentation generate_explicit(const MonoidFamily& family) {
  Presentation p{family, Flavor::tabulated, alphabet(family), {}};
  TableWriter t(p.relations);
  switch (family.family()) {
    case Family::A:
      rook_table(family.rank(), t);
      break;
    case Family::B:
      symplectic_table(family.rank(), t);
      break;
    case Family::D:
      orthogonal_table(family.rank(), t);
      break;
  }
  return p;
}

Presentation generate(const Engine& engine, Flavor flavor) {
  return flavor == Flavor::tabulated ? generate_explicit(engine.family())
                                     : generate_semantic(engine, flavor);
}

RelationReport verify_relations(const Engine& engine,
                                const Presentation& presentation) {
  RelationReport report;
  for (std::size_t i = 0; i < presentation.relations.size(); ++i) {
    const Relation& r = presentation.relations[i];
    PartialInjection const lhs = engine.evaluate(r.lhs);
    PartialInjection const rhs = engine.evaluate(r.rhs);
    ++report.checked;
    if (lhs != rhs) {
      report.failures.push_back({i, r, lhs, rhs});
    }
  }
  return report;
}

CompletenessReport verify_completeness(const Engine& engine, std::size_t cap) {
  CompletenessReport report;
  std::vector<PartialInjection> const closure =
      enumerate_monoid(engine.family(), cap);
  report.enumerated = closure.size();
  std::unordered_set<PartialInjection, PartialInjectionHash> const members(
      closure.begin(), closure.end());

  const CrossSectionLattice& lattice = engine.lattice();
  for (LambdaElement e : lattice.elements()) {
    report.rows.push_back({lattice.name(e),
                           lattice.right_min_reps_absorbing(e).size(),
                           lattice.left_min_reps(e).size()});
  }

  std::unordered_set<PartialInjection, PartialInjectionHash> values;
  for (const NormalForm& a : engine.admissible_triples()) {
    ++report.triples;
    PartialInjection const x = engine.evaluate(a);
    if (!members.contains(x)) {
      ++report.outside;
    }
    values.insert(x);
  }
  report.distinct_values = values.size();
  return report;
}

Word rewrite_to_normal(const Engine& engine, const Word& word) {
  return engine.canonical_word(engine.normal_form(word));
}

}  // namespace renner
