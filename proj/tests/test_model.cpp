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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "renner/error.hpp"
#include "renner/family.hpp"
#include "support.hpp"

namespace renner {
namespace {

using support::to_map;
using support::to_pi;

std::vector<MonoidFamily> all_supported() {
  std::vector<MonoidFamily> out;
  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int r = MonoidFamily::min_rank(f); r <= MonoidFamily::max_rank(f);
         ++r) {
      out.emplace_back(f, r);
    }
  }
  return out;
}

TEST(Family, RankBounds) {
  EXPECT_EQ(MonoidFamily::min_rank(Family::A), 1);
  EXPECT_EQ(MonoidFamily::min_rank(Family::B), 2);
  EXPECT_EQ(MonoidFamily::min_rank(Family::D), 3);
  EXPECT_THROW(MonoidFamily(Family::A, 0), Error);
  EXPECT_THROW(MonoidFamily(Family::B, 1), Error);
  EXPECT_THROW(MonoidFamily(Family::D, 2), Error);
  EXPECT_THROW(MonoidFamily(Family::D, MonoidFamily::max_rank(Family::D) + 1),
               Error);
  EXPECT_THROW(MonoidFamily::parse("C", 3), Error);
  EXPECT_EQ(MonoidFamily::parse("b", 3).name(), "B3");
  EXPECT_EQ(MonoidFamily(Family::D, 4).degree(), 8);
  EXPECT_EQ(MonoidFamily(Family::A, 4).degree(), 4);
  EXPECT_EQ(MonoidFamily(Family::A, 4).num_reflections(), 3);
}

TEST(Model, Alphabets) {
  auto names = [](const MonoidFamily& f) {
    std::string out;
    for (const GeneratorName& g : alphabet(f)) {
      out += g.to_string() + " ";
    }
    return out;
  };
  EXPECT_EQ(names({Family::A, 1}), "e0 ");
  EXPECT_EQ(names({Family::A, 3}), "s1 s2 e0 e1 e2 ");
  EXPECT_EQ(names({Family::B, 2}), "s1 s2 e0 e1 e2 ");
  EXPECT_EQ(names({Family::D, 3}), "s1 s2 s3 e0 e1 e2 e3 f3 ");
}

TEST(Model, GeneratorExamples) {
  GeneratorTable const d3 = build_generators({Family::D, 3});
  EXPECT_EQ(d3.at(GeneratorName::S(3)), to_pi({1, 4, 5, 2, 3, 6}));
  EXPECT_EQ(d3.at(GeneratorName::F(3)), to_pi({1, 2, 0, 4, 0, 0}));
  EXPECT_EQ(d3.at(GeneratorName::F(3)).rank(), 3);
  GeneratorTable const b2 = build_generators({Family::B, 2});
  EXPECT_EQ(b2.at(GeneratorName::S(1)), to_pi({2, 1, 4, 3}));
  EXPECT_EQ(b2.at(GeneratorName::S(2)), to_pi({1, 3, 2, 4}));
  GeneratorTable const a3 = build_generators({Family::A, 3});
  EXPECT_EQ(a3.at(GeneratorName::E(0)), to_pi({0, 0, 0}));
  EXPECT_EQ(a3.at(GeneratorName::E(2)), to_pi({1, 2, 0}));
  EXPECT_EQ(a3.at(GeneratorName::E(2)).rank(), 2);
}

TEST(Model, GeneratorsMatchOracleAtEverySupportedRank) {
  for (const MonoidFamily& f : all_supported()) {
    GeneratorTable const table = build_generators(f);
    std::vector<oracle::Letter> const want =
        oracle::letters(f.letter(), f.rank());
    ASSERT_EQ(table.size(), want.size()) << f.name();
    for (const oracle::Letter& g : want) {
      auto parsed = GeneratorName::parse(g.name);
      ASSERT_TRUE(parsed.has_value());
      ASSERT_TRUE(is_letter(f, *parsed)) << g.name;
      EXPECT_EQ(to_map(table.at(*parsed)), g.map) << f.name() << " " << g.name;
    }
  }
}

TEST(Model, ParseWord) {
  MonoidFamily const a2(Family::A, 2);
  Word const w = parse_word("e1 s1 e1", a2);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], GeneratorName::E(1));
  EXPECT_EQ(w[1], GeneratorName::S(1));
  EXPECT_TRUE(parse_word("1", a2).empty());
  EXPECT_TRUE(parse_word("", a2).empty());
  EXPECT_EQ(parse_word("  s1\t e0 ", a2).size(), 2u);
  EXPECT_EQ(to_string(Word{}), "1");
  EXPECT_EQ(to_string(w), "e1 s1 e1");
}

TEST(Model, ParseErrorsNameTokenAndPosition) {
  MonoidFamily const a2(Family::A, 2);
  try {
    parse_word("s9", a2);
    FAIL() << "accepted s9";
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "unknown generator s9 at position 1");
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    parse_word("s1 x2", a2);
    FAIL() << "accepted x2";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'x2'"), std::string::npos);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_word("e2", a2), ParseError);
  EXPECT_THROW(parse_word("f2", a2), ParseError);
  EXPECT_THROW(parse_word("s01", a2), ParseError);
  EXPECT_THROW(parse_word("s", a2), ParseError);
  EXPECT_EQ(parse_word("s1 1", a2), Word{GeneratorName::S(1)});
  EXPECT_THROW(parse_word("f3", {Family::D, 4}), ParseError);
  EXPECT_NO_THROW(parse_word("f4", {Family::D, 4}));
}

TEST(Model, EvaluateRookRelation) {
  MonoidFamily const a2(Family::A, 2);
  GeneratorTable const g = build_generators(a2);
  EXPECT_EQ(evaluate(g, 2, parse_word("e1 s1 e1", a2)),
            g.at(GeneratorName::E(0)));
  EXPECT_EQ(evaluate(g, 2, parse_word("e1 s1", a2)), to_pi({0, 1}));
  EXPECT_EQ(evaluate(g, 2, {}), PartialInjection::identity(2));
}

TEST(Model, RookSizesMatchCountingFormula) {
  EXPECT_EQ(oracle::rook_count(2), 7u);
  EXPECT_EQ(oracle::rook_count(3), 34u);
  EXPECT_EQ(oracle::rook_count(4), 209u);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_monoid({Family::A, n}).size(), oracle::rook_count(n))
        << n;
  }
}

// The rook monoid is all partial injections.
TEST(Model, RookMonoidIsEveryPartialInjection) {
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Map> got;
    for (const auto& x : enumerate_monoid({Family::A, n})) {
      got.insert(to_map(x));
    }
    std::vector<oracle::Map> all = oracle::all_partial_injections(n);
    EXPECT_EQ(got, std::set<oracle::Map>(all.begin(), all.end())) << n;
  }
}

TEST(Model, EnumerationMatchesOracleClosure) {
  for (const MonoidFamily& f : support::desk_families()) {
    std::vector<PartialInjection> const elements = enumerate_monoid(f);
    std::set<oracle::Map> got;
    for (const auto& x : elements) {
      got.insert(to_map(x));
    }
    EXPECT_EQ(got.size(), elements.size()) << "duplicates in " << f.name();
    EXPECT_EQ(got, oracle::monoid(f.letter(), f.rank())) << f.name();
    EXPECT_EQ(elements.front(), PartialInjection::identity(f.degree()));
  }
}

TEST(Model, SmallSizes) {
  EXPECT_EQ(enumerate_monoid({Family::A, 1}).size(), 2u);
  EXPECT_EQ(enumerate_monoid({Family::B, 2}).size(), 57u);
  EXPECT_EQ(enumerate_monoid({Family::B, 3}).size(), 757u);
  EXPECT_EQ(enumerate_monoid({Family::D, 3}).size(), 541u);
}

TEST(Model, ClosedUnderInverseAndInverseLaw) {
  for (const MonoidFamily& f : support::desk_families()) {
    std::vector<PartialInjection> const elements = enumerate_monoid(f);
    std::set<PartialInjection> const set(elements.begin(), elements.end());
    for (const auto& x : elements) {
      ASSERT_TRUE(set.count(x.inverse())) << f.name() << " " << x.to_string();
      ASSERT_EQ(x * x.inverse() * x, x);
    }
  }
}

TEST(Model, AssociativeOnSmallMonoids) {
  for (const MonoidFamily& f :
       {MonoidFamily(Family::A, 2), MonoidFamily(Family::B, 2)}) {
    std::vector<PartialInjection> const m = enumerate_monoid(f);
    for (const auto& x : m) {
      for (const auto& y : m) {
        PartialInjection const xy = x * y;
        for (const auto& z : m) {
          ASSERT_EQ(xy * z, x * (y * z));
        }
      }
    }
  }
}

TEST(Model, CapExceeded) {
  try {
    enumerate_monoid({Family::A, 4}, 100);
    FAIL() << "cap ignored";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 100u);
  }
  EXPECT_EQ(enumerate_monoid({Family::A, 3}, 34).size(), 34u);
  EXPECT_THROW(enumerate_monoid({Family::A, 3}, 33), CapExceeded);
}

}  // namespace
}  // namespace renner
