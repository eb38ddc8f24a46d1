/*
   Copyright 2026 The intdiff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end for the integro-differential operator kernel.

#include <cstdint>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "intdiff/element1.hpp"
#include "intdiff/format.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/parse.hpp"
#include "intdiff/structure.hpp"
#include "intdiff/tensor.hpp"
#include "intdiff/verify.hpp"

namespace {

using namespace intdiff;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::size_t rank = 1;
  std::string format = "text";
  std::uint64_t seed = 0;

  bool json() const { return format == "json"; }
};

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

void require_rank_one(const Globals& g, const std::string& cmd) {
  if (g.rank != 1) throw UsageError(cmd + " requires --n 1");
}

std::string labels_text(const CensusLabel& l) {
  std::string s;
  for (Label x : l) s += label_char(x);
  return s;
}

void cmd_norm(const Globals& g, const std::string& expr) {
  const ElementN a = parse(expr, g.rank);
  print(g, to_json(a), to_text(a));
}

void cmd_apply(const Globals& g, const std::string& expr, const std::string& poly) {
  const PolyN img = apply_n(parse(expr, g.rank), parse_poly(poly, g.rank));
  print(g, to_json(img), to_text(img));
}

void cmd_split(const Globals& g, const std::string& expr) {
  require_rank_one(g, "split");
  const SplitTriple s = split(parse(expr, 1).as_element1());
  json weyl = json::array();
  for (const auto& [ij, c] : weyl_coordinates(s.a_part))
    weyl.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", c.pq()}});
  const json j = {{"a_part", to_json(s.a_part)},
                  {"a_weyl", weyl},
                  {"f_part", to_json(s.f_part)},
                  {"l_part", to_json(s.l_part)}};
  print(g, j,
        "A: " + weyl_text(s.a_part) + "\nF: " + to_text(s.f_part) + "\nL: " + to_text(s.l_part));
}

void cmd_socle(const Globals& g, const std::string& expr) {
  const ElementN a = parse(expr, g.rank);
  const Index level = socle_level(a);
  json labels = json::array();
  std::string text;
  for (const auto& l : census(a)) {
    labels.push_back(labels_text(l));
    text += (text.empty() ? "" : " ") + labels_text(l);
  }
  print(g, {{"level", level}, {"census", labels}},
        "level: " + std::to_string(level) + "\ncensus: " + text);
}

void cmd_fdeg(const Globals& g, const std::string& expr) {
  require_rank_one(g, "fdeg");
  const Index d = fdegree(parse(expr, 1).as_element1());
  print(g, {{"fdegree", d}}, std::to_string(d));
}

void cmd_quot(const Globals& g, const std::string& expr) {
  const BnElement q = project_bn(parse(expr, g.rank));
  print(g, to_json(q), to_text(q));
}

void cmd_matrix(const Globals& g, const std::string& expr, std::size_t size) {
  if (size == 0) throw UsageError("--size must be >= 1");
  const TruncMatrix m = to_matrix(parse(expr, g.rank), size);
  print(g, {{"size", m.size()}, {"rows", to_json(m)}}, to_text(m).substr(0, to_text(m).size() - 1));
}

// Splits on commas outside parentheses, so e(s,t) survives.
std::vector<std::string> split_generators(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    int depth = 0;
    std::string cur;
    for (char c : a) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
  }
  return out;
}

void cmd_dims(const Globals& g, const std::vector<std::string>& gens, std::size_t i_max) {
  require_rank_one(g, "dims");
  std::vector<Element1> generators;
  for (const auto& s : split_generators(gens)) generators.push_back(parse(s, 1).as_element1());
  const auto dims = bimodule_filtration_dims(generators, i_max);
  const auto rep = multiplicity_report(dims);
  json j = {{"dims", dims}, {"conclusive", rep.conclusive}};
  std::ostringstream os;
  os << "dims:";
  for (auto d : dims) os << " " << d;
  if (rep.conclusive) {
    j["degree"] = rep.degree;
    j["leading_difference"] = rep.leading_difference ? json(*rep.leading_difference) : json(nullptr);
    j["stable_from"] = rep.stable_from;
    os << "\ndegree: " << rep.degree << "\nleading difference: "
       << (rep.leading_difference ? std::to_string(*rep.leading_difference) : "-")
       << "\nstable from: " << rep.stable_from;
  } else {
    os << "\nmultiplicity: inconclusive";
  }
  print(g, j, os.str());
}

int cmd_verify(const Globals& g, const std::string& suite, std::optional<std::size_t> samples) {
  if (!verify::is_suite(suite)) throw UsageError("unknown suite: " + suite);
  verify::Options opt{g.seed, samples};
  std::vector<std::future<verify::Result>> jobs;
  for (const auto& c : verify::criteria())
    if (suite == "all" || c.suite == suite)
      jobs.push_back(std::async(std::launch::async, [&c, opt] { return verify::run_timed(c, opt); }));
  bool ok = true;
  json results = json::array();
  std::string text;
  for (auto& f : jobs) {
    const verify::Result r = f.get();
    ok = ok && r.passed;
    results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text += (text.empty() ? "" : "\n") + verify::result_line(r);
  }
  print(g, {{"suite", suite}, {"seed", g.seed}, {"passed", ok}, {"results", results}}, text);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and structure of polynomial integro-differential operators"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.rank, "Rank n of I_n")->check(CLI::Range(1, 8));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  std::string expr, poly, suite = "all";
  std::size_t size = 8, i_max = 10;
  std::vector<std::string> gens;
  std::optional<std::size_t> samples;

  auto* norm = app.add_subcommand("norm", "Print the canonical form");
  norm->add_option("expr", expr)->required();
  auto* apply_cmd = app.add_subcommand("apply", "Act on a polynomial in x1..xn");
  apply_cmd->add_option("expr", expr)->required();
  apply_cmd->add_option("poly", poly)->required();
  auto* split_cmd = app.add_subcommand("split", "Decompose along A_1 + F + L (n = 1)");
  split_cmd->add_option("expr", expr)->required();
  auto* socle = app.add_subcommand("socle", "Socle level and A/F/L census");
  socle->add_option("expr", expr)->required();
  auto* fdeg = app.add_subcommand("fdeg", "F-degree (n = 1)");
  fdeg->add_option("expr", expr)->required();
  auto* quot = app.add_subcommand("quot", "Image in the skew Laurent quotient B_n");
  quot->add_option("expr", expr)->required();
  auto* matrix = app.add_subcommand("matrix", "Truncated matrix in the divided-power basis");
  matrix->add_option("expr", expr)->required();
  matrix->add_option("--size", size, "Truncation size N");
  auto* dims = app.add_subcommand("dims", "Bernstein-filtration dimensions of a generated bimodule");
  dims->add_option("--gen", gens, "Generators")->required();
  dims->add_option("--max", i_max, "Largest filtration index");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "relations|oracle|dims|socle|kernel|holonomy|all");
  verify_cmd->add_option("--samples", samples, "Samples per randomized check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*norm) cmd_norm(g, expr);
    else if (*apply_cmd) cmd_apply(g, expr, poly);
    else if (*split_cmd) cmd_split(g, expr);
    else if (*socle) cmd_socle(g, expr);
    else if (*fdeg) cmd_fdeg(g, expr);
    else if (*quot) cmd_quot(g, expr);
    else if (*matrix) cmd_matrix(g, expr, size);
    else if (*dims) cmd_dims(g, gens, i_max);
    else if (*verify_cmd) return cmd_verify(g, suite, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
