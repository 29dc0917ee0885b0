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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "renner/engine.hpp"
#include "renner/error.hpp"
#include "renner/model.hpp"
#include "renner/presentation.hpp"

namespace renner::cli {

namespace {

using nlohmann::json;

json tokens(const Word& word) {
  json out = json::array();
  for (const GeneratorName& g : word) {
    out.push_back(g.to_string());
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) {
      out += ' ';
    }
    out += p;
  }
  return out;
}

class Command {
 public:
  Command(const Engine& engine, bool as_json, std::ostream& out)
      : engine_(engine), as_json_(as_json), out_(out) {}

  json normal_form_json(const NormalForm& a) const {
    const auto& lattice = engine_.lattice();
    return {{"w1", tokens(engine_.group().reduced_word(a.left))},
            {"e", lattice.name(a.idempotent)},
            {"w2", tokens(engine_.group().reduced_word(a.right))},
            {"length", engine_.length(a)}};
  }

  std::string normal_form_text(const NormalForm& a) const {
    return "(" + to_string(engine_.group().reduced_word(a.left)) + ", " +
           engine_.lattice().name(a.idempotent) + ", " +
           to_string(engine_.group().reduced_word(a.right)) + ")";
  }

  json element_json(const NormalForm& a) const {
    return {{"word", tokens(engine_.canonical_word(a))},
            {"normal_form", normal_form_json(a)}};
  }

  void print_element(const NormalForm& a) const {
    out_ << "word: " << to_string(engine_.canonical_word(a)) << '\n'
         << "normal form: " << normal_form_text(a) << '\n'
         << "length: " << engine_.length(a) << '\n';
  }

  int nf(const Word& word) {
    NormalForm const a = engine_.normal_form(word);
    if (as_json_) {
      emit("nf", element_json(a));
    } else {
      print_element(a);
    }
    return kOk;
  }

  int mul(const Word& lhs, const Word& rhs) {
    NormalForm const a =
        engine_.multiply(engine_.normal_form(lhs), engine_.normal_form(rhs));
    if (as_json_) {
      emit("mul", element_json(a));
    } else {
      print_element(a);
    }
    return kOk;
  }

  int len(const Word& word) {
    int const l = engine_.length(engine_.normal_form(word));
    if (as_json_) {
      emit("len", {{"length", l}});
    } else {
      out_ << l << '\n';
    }
    return kOk;
  }

  int present(Flavor flavor) {
    Presentation const p = generate(engine_, flavor);
    if (as_json_) {
      json relations = json::array();
      for (const Relation& r : p.relations) {
        relations.push_back({{"lhs", tokens(r.lhs)},
                             {"rhs", tokens(r.rhs)},
                             {"tag", std::string(to_string(r.tag))}});
      }
      emit("present", {{"flavor", std::string(to_string(flavor))},
                       {"alphabet", tokens(p.alphabet)},
                       {"relations", relations}});
    } else {
      out_ << to_text(p);
    }
    return kOk;
  }

  int verify(const std::vector<Flavor>& flavors, std::size_t cap) {
    bool ok = true;
    json reports = json::array();
    for (Flavor flavor : flavors) {
      RelationReport const report =
          verify_relations(engine_, generate(engine_, flavor));
      ok = ok && report.ok();
      json failures = json::array();
      for (const RelationFailure& f : report.failures) {
        failures.push_back({{"index", f.index},
                            {"relation", to_string(f.relation)},
                            {"tag", std::string(to_string(f.relation.tag))},
                            {"lhs_value", f.lhs_value.to_string()},
                            {"rhs_value", f.rhs_value.to_string()}});
      }
      reports.push_back({{"flavor", std::string(to_string(flavor))},
                         {"checked", report.checked},
                         {"failures", failures}});
      if (!as_json_) {
        out_ << "relations (" << to_string(flavor) << "): " << report.checked
             << " checked, " << report.failures.size() << " failed\n";
        for (const RelationFailure& f : report.failures) {
          out_ << "  FAIL [" << to_string(f.relation.tag) << "] "
               << to_string(f.relation) << "  (" << f.lhs_value.to_string()
               << " != " << f.rhs_value.to_string() << ")\n";
        }
      }
    }

    CompletenessReport const c = verify_completeness(engine_, cap);
    ok = ok && c.ok();
    if (as_json_) {
      json rows = json::array();
      for (const auto& row : c.rows) {
        rows.push_back({{"e", row.idempotent},
                        {"right_reps", row.right_reps},
                        {"left_reps", row.left_reps}});
      }
      emit("verify", {{"relations", reports},
                      {"completeness",
                       {{"enumerated", c.enumerated},
                        {"triples", c.triples},
                        {"distinct_values", c.distinct_values},
                        {"outside", c.outside},
                        {"rows", rows},
                        {"ok", c.ok()}}},
                      {"ok", ok}});
    } else {
      out_ << "completeness: enumerated " << c.enumerated << ", triples "
           << c.triples << ", distinct " << c.distinct_values << " -> "
           << (c.ok() ? "ok" : "MISMATCH") << '\n';
      for (const auto& row : c.rows) {
        out_ << "  " << row.idempotent << ": " << row.right_reps << " x "
             << row.left_reps << " = " << row.right_reps * row.left_reps
             << '\n';
      }
      out_ << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
  }

  int enumerate(bool list, std::size_t cap) {
    std::vector<PartialInjection> const elements =
        enumerate_monoid(engine_.family(), cap);
    if (as_json_) {
      json result = {{"count", elements.size()}};
      if (list) {
        json words = json::array();
        for (const PartialInjection& x : elements) {
          words.push_back(
              tokens(engine_.canonical_word(engine_.normal_decompose(x))));
        }
        result["elements"] = words;
      }
      emit("enumerate", result);
    } else {
      out_ << elements.size() << '\n';
      if (list) {
        for (const PartialInjection& x : elements) {
          out_ << to_string(engine_.canonical_word(
                      engine_.normal_decompose(x)))
               << '\n';
        }
      }
    }
    return kOk;
  }

  int typemap() {
    const auto& lattice = engine_.lattice();
    const auto& group = engine_.group();
    auto word_list = [&](const std::vector<WeylElement>& ws) {
      std::vector<std::string> out;
      for (WeylElement w : ws) {
        out.push_back(to_string(group.reduced_word(w)));
      }
      return out;
    };
    json types = json::array();
    json ups = json::array();
    for (LambdaElement e : lattice.elements()) {
      const TypeMap& t = lattice.type_map(e);
      types.push_back({{"e", lattice.name(e)},
                       {"lambda", t.commuting.to_string()},
                       {"absorbing", t.absorbing.to_string()},
                       {"nonabsorbing", t.nonabsorbing.to_string()}});
      if (!as_json_) {
        out_ << lattice.name(e) << ": lambda = " << t.commuting.to_string()
             << ", absorbing = " << t.absorbing.to_string()
             << ", nonabsorbing = " << t.nonabsorbing.to_string() << '\n';
      }
    }
    if (!as_json_) {
      out_ << "G_up(e) n D_up(f):\n";
    }
    for (LambdaElement e : lattice.nonunit()) {
      for (LambdaElement f : lattice.nonunit()) {
        std::vector<std::string> const reps =
            word_list(lattice.up_double_coset_reps(e, f));
        ups.push_back(
            {{"e", lattice.name(e)}, {"f", lattice.name(f)}, {"reps", reps}});
        if (!as_json_) {
          std::string line;
          for (const std::string& r : reps) {
            line += (line.empty() ? "" : ", ") + r;
          }
          out_ << "  (" << lattice.name(e) << ", " << lattice.name(f)
               << "): {" << line << "}\n";
        }
      }
    }
    if (as_json_) {
      emit("typemap", {{"types", types}, {"up_double_coset_reps", ups}});
    }
    return kOk;
  }

 private:
  void emit(const std::string& command, json result) {
    json doc = {{"family", std::string(1, engine_.family().letter())},
                {"rank", engine_.family().rank()},
                {"command", command},
                {"result", std::move(result)}};
    out_ << doc.dump(2) << '\n';
  }

  const Engine& engine_;
  bool as_json_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Renner monoids of types A, B and D: normal forms, lengths, "
               "presentations"};
  app.name("renner");
  app.require_subcommand(1);
  app.fallthrough();

  std::string family_name;
  int rank = 0;
  bool as_json = false;
  app.add_option("--family", family_name, "Monoid family: A, B or D")
      ->required();
  app.add_option("--rank", rank, "Rank (n for A, l for B and D)")->required();
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::vector<std::string> nf_tokens;
  auto* nf = app.add_subcommand("nf", "Normal form and length of a word");
  nf->add_option("word", nf_tokens, "Generator word, e.g. \"e1 s1 e1\"")
      ->required();

  std::string mul_lhs, mul_rhs;
  auto* mul = app.add_subcommand("mul", "Product of two words");
  mul->add_option("lhs", mul_lhs, "Left factor")->required();
  mul->add_option("rhs", mul_rhs, "Right factor")->required();

  std::vector<std::string> len_tokens;
  auto* len = app.add_subcommand("len", "Length of a word's element");
  len->add_option("word", len_tokens, "Generator word")->required();

  std::string present_flavor = "reduced";
  auto* present = app.add_subcommand("present", "Print a presentation");
  present->add_option("--flavor", present_flavor, "full, reduced or explicit")
      ->capture_default_str();

  std::vector<std::string> verify_flavors;
  std::size_t cap = kDefaultEnumerationCap;
  auto* verify = app.add_subcommand(
      "verify", "Check relations in the model and count normal forms");
  verify->add_option("--flavor", verify_flavors,
                     "Flavors to check (default: full reduced)");
  verify->add_option("--cap", cap, "Enumeration cap")->capture_default_str();

  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count monoid elements");
  enumerate->add_flag("--list", list, "Also print every canonical word");
  enumerate->add_option("--cap", cap, "Enumeration cap")->capture_default_str();

  auto* typemap =
      app.add_subcommand("typemap", "Type maps and G_up n D_up sets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    MonoidFamily const family = MonoidFamily::parse(family_name, rank);
    Engine const engine(family);
    Command cmd(engine, as_json, out);

    if (*nf) {
      return cmd.nf(parse_word(join(nf_tokens), family));
    }
    if (*mul) {
      return cmd.mul(parse_word(mul_lhs, family), parse_word(mul_rhs, family));
    }
    if (*len) {
      return cmd.len(parse_word(join(len_tokens), family));
    }
    if (*present) {
      return cmd.present(parse_flavor(present_flavor));
    }
    if (*verify) {
      std::vector<Flavor> flavors;
      for (const std::string& name : verify_flavors) {
        flavors.push_back(parse_flavor(name));
      }
      if (flavors.empty()) {
        flavors = {Flavor::full, Flavor::reduced};
      }
      return cmd.verify(flavors, cap);
    }
    if (*enumerate) {
      return cmd.enumerate(list, cap);
    }
    if (*typemap) {
      return cmd.typemap();
    }
  } catch (const CapExceeded& e) {
    err << "renner: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "renner: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "renner: internal invariant violated: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << "renner: no command given\n";
  return kUsage;
}

}  // namespace renner::cli
