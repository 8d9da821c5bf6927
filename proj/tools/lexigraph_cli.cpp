/*
 * Copyright 2026 The lexigraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexigraph/objective.hpp"
#include "lexigraph/reductions.hpp"
#include "lexigraph/solver.hpp"
#include "lexigraph/universal.hpp"
#include "lexigraph/verify.hpp"

namespace {

using nlohmann::json;
using namespace lexigraph;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kBudget = 2;
constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Options {
  std::string output;
  std::string format = "text";
  uint64_t seed = 0;
  size_t budget_vertices = kDefaultVertexBudget;
  size_t budget_enum = kDefaultEnumBudget;
  size_t budget_oracle = kDefaultOracleBudget;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::invalid_argument("cannot write file: " + opt.output);
  out << text;
}

void emit_report(const Options& opt, const json& j, const std::string& text) {
  emit(opt, opt.format == "json" ? j.dump(2) : text);
}

int cmd_member(const Options& opt, const std::string& obj_text, const std::string& lasso_text) {
  Objective w = Objective::parse(obj_text);
  LassoWord lasso = LassoWord::parse(lasso_text);
  MembershipVerdict verdict = member(w, lasso);
  json j{{"verdict", verdict.accepted ? "accepted" : "rejected"},
         {"witness", verdict.witness_index.str()}};
  emit_report(opt, j,
              std::string(verdict.accepted ? "accepted" : "rejected") +
                  " witness=" + verdict.witness_index.str());
  return kOk;
}

int cmd_check_satisfies(const Options& opt, const std::string& graph_file,
                        const std::string& obj_text, std::optional<size_t> bound) {
  OrderedGraph g = parse_graph(read_file(graph_file));
  Objective w = Objective::parse(obj_text);
  SatisfactionReport report = bound ? satisfies_bounded(g.graph(), w, *bound, opt.budget_enum)
                                    : satisfies_exact(g.graph(), w);
  json j{{"satisfied", report.satisfied}};
  std::string text = report.satisfied ? "satisfied" : "violated";
  if (report.witness) {
    j["witness"] = report.witness->str();
    text += " witness=" + report.witness->str();
  }
  emit_report(opt, j, text);
  return report.satisfied ? kOk : kPropertyFailure;
}

int cmd_check_universality(const Options& opt, const std::string& universal_file,
                           const std::string& obj_text, const std::string& colours_spec, size_t n,
                           bool almost, std::optional<size_t> bound,
                           const std::string& artifact_prefix) {
  OrderedGraph u = parse_graph(read_file(universal_file));
  Objective w = Objective::parse(obj_text);
  ColourFamily colours = ColourFamily::parse(colours_spec);
  UniversalityReport report =
      almost ? check_almost_universality(u, w, colours, n, bound, opt.budget_enum)
             : check_universality(u, w, colours, n, bound, opt.budget_enum);
  json j{{"checked", report.checked_count}, {"failures", report.failures.size()}};
  std::string text = (report.pass() ? "pass" : "fail");
  text += " checked=" + std::to_string(report.checked_count) +
          " failures=" + std::to_string(report.failures.size());
  if (!artifact_prefix.empty()) {
    for (size_t i = 0; i < report.failures.size(); ++i) {
      std::ofstream out(artifact_prefix + std::to_string(i) + ".graph");
      out << format_graph(OrderedGraph(report.failures[i].graph));
    }
  }
  emit_report(opt, j, text);
  return report.pass() ? kOk : kPropertyFailure;
}

int cmd_solve(const Options& opt, const std::string& game_file, const std::string& obj_text,
              const std::string& universal_file, bool auto_universal_flag, bool oracle_flag) {
  Game game = Game::parse(read_file(game_file));
  Objective w = Objective::parse(obj_text);

  json j;
  std::string text;
  std::vector<bool> winning;
  std::optional<SolveResult> solved;
  if (auto_universal_flag || !universal_file.empty()) {
    OrderedGraph u = auto_universal_flag
                         ? auto_universal(w, game.vertex_count(), opt.budget_vertices)
                         : parse_graph(read_file(universal_file));
    solved = solve(game, u);
    winning = solved->winning;
  } else if (!oracle_flag) {
    throw std::invalid_argument("solve needs --universal, --auto, or --oracle");
  }

  std::vector<bool> oracle;
  if (oracle_flag) {
    oracle = oracle_solve(game, w, opt.budget_oracle);
    if (winning.empty()) winning = oracle;
  }

  std::string names;
  json jwin = json::array();
  for (uint32_t v = 0; v < game.vertex_count(); ++v)
    if (winning[v]) {
      if (!names.empty()) names += ' ';
      names += game.name(v);
      jwin.push_back(game.name(v));
    }
  j["winning"] = jwin;
  text = "winning:";
  if (!names.empty()) text += ' ' + names;

  if (solved) {
    json jstrat = json::object();
    std::string strat;
    for (const auto& [v, e] : solved->strategy.choice) {
      jstrat[game.name(v)] = game.name(game.edges()[e].dst);
      strat += "\nstrategy " + game.name(v) + " -> " + game.name(game.edges()[e].dst);
    }
    j["strategy"] = jstrat;
    text += strat;
  }

  bool mismatch = false;
  if (oracle_flag && solved) {
    mismatch = oracle != solved->winning;
    j["oracle_match"] = !mismatch;
    text += mismatch ? "\noracle: mismatch" : "\noracle: match";
  }
  emit_report(opt, j, text);
  return mismatch ? kPropertyFailure : kOk;
}

int cmd_build(const Options& opt, const std::string& kind, uint64_t alpha, uint64_t kappa,
              uint64_t k, uint64_t beta, const std::string& class_spec,
              const std::vector<std::string>& inputs) {
  auto load = [&](const std::string& path) { return parse_graph(read_file(path)); };
  OrderedGraph result;
  if (kind == "signature") {
    result = signature_graph(alpha, kappa, opt.budget_vertices).graph;
  } else if (kind == "power") {
    std::vector<OrderedGraph> bases;
    for (const auto& path : inputs) bases.push_back(load(path));
    result = power_graph(bases, beta, opt.budget_vertices).graph;
  } else if (kind == "loop") {
    result = loop_graph(ColourFamily::parse(class_spec));
  } else if (kind == "chain") {
    result = chain_graph(ColourFamily::parse(class_spec), k);
  } else if (kind == "sum") {
    std::vector<OrderedGraph> parts;
    for (const auto& path : inputs) parts.push_back(load(path));
    result = directed_sum(parts);
  } else if (kind == "tensor") {
    result = tensor(load(inputs.at(0)), k);
  } else if (kind == "lexprod") {
    result = lex_product(load(inputs.at(0)), load(inputs.at(1)));
  }
  if (result.vertex_count() > opt.budget_vertices)
    throw BudgetExceeded("constructed graph exceeds the vertex budget");
  emit(opt, format_graph(result));
  return kOk;
}

int cmd_reduce(const Options& opt, const std::string& kind, const std::vector<std::string>& fs,
               const std::string& lasso_text, const std::string& alpha_text,
               const std::string& gammas_text) {
  if (kind == "double") {
    emit(opt, double_map(LassoWord::parse(lasso_text)).str());
    return kOk;
  }
  if (kind == "collapse") {
    std::vector<Ordinal> gammas;
    std::istringstream in(gammas_text);
    std::string item;
    while (std::getline(in, item, ',')) gammas.push_back(Ordinal::parse(item));
    emit(opt, limit_collapse(LassoWord::parse(lasso_text), Ordinal::parse(alpha_text), gammas)
                  .str());
    return kOk;
  }
  std::vector<PrefixFunction> machines;
  for (const auto& path : fs) machines.push_back(PrefixFunction::parse(read_file(path)));
  if (kind == "max") {
    emit(opt, op_max(machines.at(0), machines.at(1)).str());
  } else if (kind == "union") {
    emit(opt, op_union(machines.at(0), machines.at(1)).str());
  } else if (kind == "chain") {
    emit(opt, chain_reduction(machines).str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal-indexed objectives, universal graphs, and game solving"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("-o,--output", opt.output, "write the primary artifact to this file");
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--budget-vertices", opt.budget_vertices, "vertex budget for constructions");
  app.add_option("--budget-enum", opt.budget_enum, "graph/walk enumeration budget");
  app.add_option("--budget-oracle", opt.budget_oracle, "oracle strategy budget");

  auto* member_cmd = app.add_subcommand("member", "decide lasso membership in an objective");
  std::string obj_text, lasso_text;
  member_cmd->add_option("objective", obj_text, "objective expression")->required();
  member_cmd->add_option("lasso", lasso_text, "lasso word `u | v`")->required();

  auto* build_cmd = app.add_subcommand("build", "construct a graph and print it");
  std::string build_kind;
  uint64_t alpha = 0, kappa = 2, k = 1, beta = 1;
  std::string class_spec;
  std::vector<std::string> inputs;
  build_cmd->add_option("kind", build_kind, "construction")
      ->required()
      ->check(CLI::IsMember({"signature", "power", "loop", "chain", "sum", "tensor", "lexprod"}));
  build_cmd->add_option("--alpha", alpha, "priority bound");
  build_cmd->add_option("--kappa", kappa, "counter bound / chain length");
  build_cmd->add_option("--k", k, "copy or chain count");
  build_cmd->add_option("--beta", beta, "rank bound");
  build_cmd->add_option("--class", class_spec, "colour family spec");
  build_cmd->add_option("--input,--base", inputs, "input graph files");

  auto* check_cmd = app.add_subcommand("check", "satisfaction and universality checks");
  check_cmd->require_subcommand(1);
  auto* sat_cmd = check_cmd->add_subcommand("satisfies", "does the graph satisfy the objective");
  std::string graph_file, universal_file, colours_spec, artifact_prefix;
  std::optional<size_t> bound;
  size_t size_n = 2;
  bool almost = false;
  sat_cmd->add_option("--graph", graph_file)->required();
  sat_cmd->add_option("--objective", obj_text)->required();
  sat_cmd->add_option("--bound", bound, "cycle length bound (bounded mode)");
  auto* uni_cmd = check_cmd->add_subcommand("universality", "sweep all small satisfying graphs");
  uni_cmd->add_option("--universal", universal_file)->required();
  uni_cmd->add_option("--objective", obj_text)->required();
  uni_cmd->add_option("--colours", colours_spec)->required();
  uni_cmd->add_option("--size", size_n, "maximum candidate size");
  uni_cmd->add_flag("--almost", almost, "require only one vertex cone to map");
  uni_cmd->add_option("--bound", bound, "cycle length bound (bounded mode)");
  uni_cmd->add_option("--artifacts", artifact_prefix, "write failing graphs to <prefix><i>.graph");

  auto* solve_cmd = app.add_subcommand("solve", "solve a game");
  std::string game_file;
  bool auto_flag = false, oracle_flag = false;
  solve_cmd->add_option("--game", game_file)->required();
  solve_cmd->add_option("--objective", obj_text)->required();
  solve_cmd->add_option("--universal", universal_file, "universal graph file");
  solve_cmd->add_flag("--auto", auto_flag, "construct the universal graph heuristically");
  solve_cmd->add_flag("--oracle", oracle_flag, "cross-check against strategy enumeration");

  auto* reduce_cmd = app.add_subcommand("reduce", "prefix-function operators and word maps");
  std::string reduce_kind, alpha_text, gammas_text;
  std::vector<std::string> machine_files;
  reduce_cmd->add_option("kind", reduce_kind)
      ->required()
      ->check(CLI::IsMember({"max", "union", "chain", "double", "collapse"}));
  std::string second_machine;
  reduce_cmd->add_option("-f,--machine", machine_files, "machine files (in chain order)");
  reduce_cmd->add_option("-g", second_machine, "second machine file");
  reduce_cmd->add_option("--lasso", lasso_text, "lasso word");
  reduce_cmd->add_option("--alpha", alpha_text, "index to collapse");
  reduce_cmd->add_option("--gammas", gammas_text, "comma-separated replacement indices");

  for (CLI::App* sub : {member_cmd, build_cmd, check_cmd, sat_cmd, uni_cmd, solve_cmd, reduce_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*member_cmd) return cmd_member(opt, obj_text, lasso_text);
    if (*build_cmd) return cmd_build(opt, build_kind, alpha, kappa, k, beta, class_spec, inputs);
    if (*sat_cmd) return cmd_check_satisfies(opt, graph_file, obj_text, bound);
    if (*uni_cmd)
      return cmd_check_universality(opt, universal_file, obj_text, colours_spec, size_n, almost,
                                    bound, artifact_prefix);
    if (*solve_cmd)
      return cmd_solve(opt, game_file, obj_text, universal_file, auto_flag, oracle_flag);
    if (*reduce_cmd) {
      if (!second_machine.empty()) machine_files.push_back(second_machine);
      return cmd_reduce(opt, reduce_kind, machine_files, lasso_text, alpha_text, gammas_text);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
