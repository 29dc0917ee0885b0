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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "renner/presentation.hpp"
#include "support.hpp"

namespace renner {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_on(const MonoidFamily& f, std::vector<std::string> args) {
  std::vector<std::string> full{"--family", std::string(1, f.letter()),
                                "--rank", std::to_string(f.rank())};
  full.insert(full.end(), args.begin(), args.end());
  return run(full);
}

std::string join(const json& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += (out.empty() ? "" : " ") + t.get<std::string>();
  }
  return out.empty() ? "1" : out;
}

TEST(Cli, NormalFormText) {
  Result const r = run({"--family", "A", "--rank", "2", "nf", "e1 s1 e1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "word: e0\nnormal form: (1, e0, 1)\nlength: 0\n");
  EXPECT_TRUE(r.err.empty());
  // Unquoted tokens are joined.
  EXPECT_EQ(run({"--family", "A", "--rank", "2", "nf", "e1", "s1", "e1"}).out,
            r.out);
}

TEST(Cli, NormalFormJson) {
  Result const r =
      run({"--family", "A", "--rank", "2", "--json", "nf", "s1 e1 s1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  json const doc = json::parse(r.out);
  EXPECT_EQ(doc["family"], "A");
  EXPECT_EQ(doc["rank"], 2);
  EXPECT_EQ(doc["command"], "nf");
  const json& nf = doc["result"]["normal_form"];
  EXPECT_EQ(nf["w1"], json::array({"s1"}));
  EXPECT_EQ(nf["e"], "e1");
  EXPECT_EQ(nf["w2"], json::array({"s1"}));
  EXPECT_EQ(nf["length"], 2);
  EXPECT_EQ(doc["result"]["word"], json::array({"s1", "e1", "s1"}));

  json const unit = json::parse(
      run({"--family", "B", "--rank", "2", "--json", "nf", "1"}).out);
  EXPECT_EQ(unit["result"]["normal_form"]["e"], "1");
  EXPECT_EQ(unit["result"]["word"], json::array());
}

// Resubmitting the canonical word reproduces the response exactly.
TEST(Cli, JsonRoundTripIsAFixedPoint) {
  std::mt19937 rng(7);
  for (const MonoidFamily& f : support::desk_families()) {
    std::vector<GeneratorName> const letters = alphabet(f);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Word w;
      for (int i = 0; i < 8; ++i) w.push_back(letters[pick(rng)]);
      Result const first = run_on(f, {"--json", "nf", to_string(w)});
      ASSERT_EQ(first.code, 0) << first.err;
      std::string const canonical =
          join(json::parse(first.out)["result"]["word"]);
      Result const second = run_on(f, {"--json", "nf", canonical});
      ASSERT_EQ(second.out, first.out) << f.name() << " " << to_string(w);
    }
  }
}

TEST(Cli, MulAndLen) {
  MonoidFamily const a2(Family::A, 2);
  EXPECT_EQ(run_on(a2, {"mul", "e1 s1", "e1 s1"}).out,
            "word: e0\nnormal form: (1, e0, 1)\nlength: 0\n");
  EXPECT_EQ(run_on(a2, {"len", "s1 e1 s1"}).out, "2\n");
  json const doc = json::parse(run_on(a2, {"--json", "len", "s1 e1"}).out);
  EXPECT_EQ(doc["result"]["length"], 1);
  json const m = json::parse(run_on(a2, {"--json", "mul", "s1", "e1"}).out);
  EXPECT_EQ(m["command"], "mul");
  EXPECT_EQ(m["result"]["normal_form"]["w1"], json::array({"s1"}));
}

TEST(Cli, Enumerate) {
  MonoidFamily const a2(Family::A, 2);
  EXPECT_EQ(run_on(a2, {"enumerate"}).out, "7\n");
  Result const list = run_on(a2, {"enumerate", "--list"});
  std::istringstream in(list.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "7");
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    Result const again = run_on(a2, {"nf", line});
    EXPECT_EQ(again.out.substr(0, 6 + line.size() + 1), "word: " + line + "\n");
  }
  EXPECT_EQ(count, 7);
  json const doc =
      json::parse(run_on({Family::D, 3}, {"--json", "enumerate"}).out);
  EXPECT_EQ(doc["result"]["count"], 541);
}

TEST(Cli, Present) {
  Engine const b2(MonoidFamily(Family::B, 2));
  EXPECT_EQ(run_on(b2.family(), {"present", "--flavor", "full"}).out,
            to_text(generate_full(b2)));
  EXPECT_EQ(run_on(b2.family(), {"present"}).out,
            to_text(generate_reduced(b2)));
  EXPECT_EQ(run_on(b2.family(), {"present", "--flavor", "explicit"}).out,
            to_text(generate_explicit(b2.family())));
  json const doc = json::parse(
      run_on(b2.family(), {"--json", "present", "--flavor", "explicit"}).out);
  EXPECT_EQ(doc["result"]["relations"].size(), 22u);
  EXPECT_EQ(doc["result"]["relations"][0]["tag"], "COX1");
  EXPECT_EQ(run_on(b2.family(), {"present", "--flavor", "odd"}).code,
            cli::kUsage);
}

TEST(Cli, VerifyExitCodes) {
  for (const MonoidFamily& f : support::desk_families()) {
    Result const r = run_on(f, {"verify"});
    EXPECT_EQ(r.code, cli::kOk) << f.name() << "\n" << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
  Result const d3 = run_on({Family::D, 3}, {"verify", "--flavor", "explicit"});
  EXPECT_EQ(d3.code, cli::kVerificationFailed);
  EXPECT_NE(d3.out.find("3 failed"), std::string::npos);
  json const doc = json::parse(
      run_on({Family::B, 2}, {"--json", "verify"}).out);
  EXPECT_TRUE(doc["result"]["ok"].get<bool>());
  EXPECT_EQ(doc["result"]["completeness"]["enumerated"], 57);
  EXPECT_EQ(doc["result"]["relations"].size(), 2u);
}

TEST(Cli, Typemap) {
  json const doc =
      json::parse(run_on({Family::D, 3}, {"--json", "typemap"}).out);
  const json& types = doc["result"]["types"];
  ASSERT_EQ(types.size(), 6u);
  EXPECT_EQ(types[4]["e"], "f3");
  EXPECT_EQ(types[4]["nonabsorbing"], "{s1, s3}");
  EXPECT_EQ(doc["result"]["up_double_coset_reps"].size(), 25u);
  Result const text = run_on({Family::A, 2}, {"typemap"});
  EXPECT_NE(text.out.find("(e1, e1): {1, s1}"), std::string::npos);
}

TEST(Cli, Errors) {
  Result const bad_token =
      run({"--family", "A", "--rank", "2", "nf", "s9"});
  EXPECT_EQ(bad_token.code, cli::kUsage);
  EXPECT_TRUE(bad_token.out.empty());
  EXPECT_NE(bad_token.err.find("unknown generator s9 at position 1"),
            std::string::npos);
  EXPECT_EQ(run({"--family", "C", "--rank", "2", "enumerate"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"--family", "A", "--rank", "9", "enumerate"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"--family", "A", "--rank", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"--family", "A", "--rank", "2", "frobnicate"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"--rank", "2", "enumerate"}).code, cli::kUsage);
  Result const cap =
      run({"--family", "B", "--rank", "3", "enumerate", "--cap", "10"});
  EXPECT_EQ(cap.code, cli::kResourceCap);
  EXPECT_NE(cap.err.find("cap = 10"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

}  // namespace
}  // namespace renner
