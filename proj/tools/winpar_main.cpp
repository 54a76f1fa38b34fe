/*
 * Copyright 2026 The winpar authors
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

#include <CLI11.hpp>
#include <json.hpp>

#include "winpar/io.hpp"
#include "winpar/objectives.hpp"
#include "winpar/oracle.hpp"
#include "winpar/synthesis.hpp"

using json = nlohmann::json;
using namespace winpar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitArgument = 3;
constexpr int kExitInternal = 4;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::string tok;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!tok.empty()) ids.push_back(std::move(tok)), tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) ids.push_back(std::move(tok));
  return ids;
}

uint32_t lookup(const Arena& arena, const std::string& id) {
  auto v = arena.index_of(id);
  if (!v) throw ArgumentError("unknown vertex '" + id + "'");
  return *v;
}

struct ObjectiveArgs {
  std::string obj;
  bool direct = false;
  int lambda = -1;
  std::vector<std::string> targets;

  void attach(CLI::App* cmd) {
    cmd->add_option("--obj", obj, "objective kind")->required();
    cmd->add_flag("--direct", direct, "direct (non prefix-independent) variant");
    cmd->add_option("--lambda", lambda, "window size for the fixed kinds");
    cmd->add_option("--target", targets,
                    "vertex set for reach/safe/buchi/cobuchi (one occurrence per genreach set)");
  }

  ObjectiveSpec build(const Arena& arena) const {
    auto kind = objective_from_name(obj);
    if (!kind) throw ArgumentError("unknown objective '" + obj + "'");
    ObjectiveSpec spec;
    spec.kind = *kind;
    spec.direct = direct;
    if (lambda >= 0) spec.lambda = lambda;
    for (const auto& t : targets) {
      std::vector<uint32_t> set;
      for (const auto& id : split_ids(t)) set.push_back(lookup(arena, id));
      spec.targets.push_back(std::move(set));
    }
    try {
      spec.validate(arena);
    } catch (const std::invalid_argument& e) {
      throw ArgumentError(e.what());
    }
    return spec;
  }
};

json objective_json(const ObjectiveSpec& spec) {
  json j;
  j["kind"] = objective_name(spec.kind);
  if (is_window_kind(spec.kind)) j["direct"] = spec.direct;
  if (spec.lambda) j["lambda"] = *spec.lambda;
  return j;
}

json region_json(const Arena& arena, const std::vector<Player>& winner, Player p) {
  json r = json::array();
  for (uint32_t v = 0; v < winner.size(); ++v)
    if (winner[v] == p) r.push_back(arena.id(v));
  return r;
}

SolveVia via_from_name(const std::string& name) {
  if (name == "product") return SolveVia::Product;
  if (name == "rr") return SolveVia::RequestResponse;
  if (name == "history") return SolveVia::History;
  throw ArgumentError("unknown --via '" + name + "'");
}

Lasso parse_lasso_arg(const Arena& arena, const std::string& text) {
  auto bar = text.find('|');
  std::string stem_part = bar == std::string::npos ? "" : text.substr(0, bar);
  std::string cycle_part = bar == std::string::npos ? text : text.substr(bar + 1);
  Lasso lasso;
  for (const auto& id : split_ids(stem_part)) lasso.stem.push_back(lookup(arena, id));
  for (const auto& id : split_ids(cycle_part)) lasso.cycle.push_back(lookup(arena, id));
  return lasso;
}

json lasso_json(const Arena& arena, const Lasso& lasso) {
  json j;
  j["stem"] = json::array();
  j["cycle"] = json::array();
  for (uint32_t v : lasso.stem) j["stem"].push_back(arena.id(v));
  for (uint32_t v : lasso.cycle) j["cycle"].push_back(arena.id(v));
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"winpar: window parity and parity-response games"};
  app.require_subcommand(1);

  std::string file, init_id, strategy_out, strategy_in, lasso_text, dot_out;
  std::string via_name = "product";
  bool all = false;
  ObjectiveArgs obj_args;

  auto* solve_cmd = app.add_subcommand("solve", "solve a game and report the winner");
  solve_cmd->add_option("--file", file, "game file")->required();
  obj_args.attach(solve_cmd);
  solve_cmd->add_option("--init", init_id, "initial vertex (defaults to the file's init)");
  solve_cmd->add_flag("--all", all, "report full winning regions");
  solve_cmd->add_option("--strategy", strategy_out, "write the winner's strategy here");
  solve_cmd->add_option("--via", via_name, "algorithm route: product|rr|history");

  auto* check_cmd = app.add_subcommand("check", "exact lasso membership");
  check_cmd->add_option("--file", file, "game file")->required();
  obj_args.attach(check_cmd);
  check_cmd->add_option("--lasso", lasso_text, "stem before '|', cycle after")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a Moore strategy");
  verify_cmd->add_option("--file", file, "game file")->required();
  obj_args.attach(verify_cmd);
  verify_cmd->add_option("--strategy", strategy_in, "strategy file")->required();
  verify_cmd->add_option("--init", init_id, "initial vertex")->required();

  auto* product_cmd = app.add_subcommand("product", "emit the product construction");
  product_cmd->add_option("--file", file, "game file")->required();
  obj_args.attach(product_cmd);
  product_cmd->add_option("--emit-dot", dot_out, "write GraphViz here")->required();
  product_cmd->add_option("--via", via_name, "algorithm route: product|rr|history");

  std::string seeds = "0..16";
  uint32_t max_v = 5;
  int max_lambda = 3, max_d = 4, max_n = 2;
  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check a random corpus");
  oracle_cmd->add_option("--seeds", seeds, "seed range A..B");
  oracle_cmd->add_option("--max-v", max_v, "max vertices");
  oracle_cmd->add_option("--max-lambda", max_lambda, "max window size");
  oracle_cmd->add_option("--max-d", max_d, "max priority");
  oracle_cmd->add_option("--max-n", max_n, "max dimensions");

  std::string gallery_name, gallery_param, gallery_out;
  auto* gallery_cmd = app.add_subcommand("gallery", "write a worked-example arena");
  gallery_cmd->add_option("--name", gallery_name, "fig4..fig10")->required();
  gallery_cmd->add_option("--param", gallery_param, "n=<k> or d=<k> for the families");
  gallery_cmd->add_option("--out", gallery_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgument;
  }

  json out;
  if (solve_cmd->parsed() || check_cmd->parsed() || verify_cmd->parsed() ||
      product_cmd->parsed()) {
    ParsedGame game = parse_game(slurp(file));
    const Arena& arena = game.arena;
    auto issues = validate_arena(arena);
    if (!issues.empty()) throw ParseError(0, "invalid arena: " + issues.front().message);
    ObjectiveSpec spec = obj_args.build(arena);

    if (check_cmd->parsed()) {
      Lasso lasso = parse_lasso_arg(arena, lasso_text);
      auto verdict = check_lasso(arena, lasso, spec);
      out["command"] = "check";
      out["objective"] = objective_json(spec);
      out["holds"] = verdict.holds;
      if (!verdict.holds)
        out["witness"] = {{"position", verdict.position}, {"dimension", verdict.dimension + 1}};
    } else if (verify_cmd->parsed()) {
      MooreStrategy strategy = read_strategy(slurp(strategy_in), arena);
      uint32_t init = lookup(arena, init_id);
      auto result = verify_strategy(arena, strategy, spec, init);
      out["command"] = "verify";
      out["objective"] = objective_json(spec);
      out["player"] = player_index(strategy.player);
      out["memory"] = strategy.memory_size();
      out["winning"] = result.winning;
      if (result.counterexample) out["counterexample"] = lasso_json(arena, *result.counterexample);
    } else {
      SolveVia via = via_from_name(via_name);
      SolveResult result = solve(arena, spec, via);
      if (product_cmd->parsed()) {
        spill(dot_out, export_dot(result.product));
        out["command"] = "product";
        out["objective"] = objective_json(spec);
        out["states"] = result.product.size();
        out["bad"] = result.product.bad_states().size();
        out["dot"] = dot_out;
      } else {
        out["command"] = "solve";
        out["objective"] = objective_json(spec);
        out["via"] = via_name;
        out["product_states"] = result.product.size();
        out["product_bad"] = result.product.bad_states().size();
        if (result.threshold) out["threshold"] = *result.threshold;
        uint32_t init = 0;
        if (!init_id.empty())
          init = lookup(arena, init_id);
        else if (game.initial)
          init = *game.initial;
        out["initial"] = arena.id(init);
        Player winner = result.source_winner[init];
        out["winner"] = player_index(winner);
        if (all) {
          out["regions"] = {{"win1", region_json(arena, result.source_winner, Player::P1)},
                            {"win2", region_json(arena, result.source_winner, Player::P2)}};
        }
        if (!strategy_out.empty()) {
          MooreStrategy machine = extract_strategy(arena, result, winner);
          spill(strategy_out, write_strategy(machine, arena));
          out["strategy"] = {{"file", strategy_out},
                             {"player", player_index(winner)},
                             {"memory", machine.memory_size()}};
        }
      }
    }
  } else if (oracle_cmd->parsed()) {
    auto dots = seeds.find("..");
    if (dots == std::string::npos) throw ArgumentError("--seeds expects A..B");
    uint64_t a = std::stoull(seeds.substr(0, dots));
    uint64_t b = std::stoull(seeds.substr(dots + 2));
    if (b < a) throw ArgumentError("--seeds expects A..B with A <= B");
    auto report = cross_check_corpus(a, b, max_v, max_lambda, max_d, max_n);
    out["command"] = "oracle";
    out["seeds"] = {a, b};
    out["arenas"] = report.arenas;
    out["checks"] = report.checks;
    out["violations"] = json::array();
    for (const auto& v : report.violations)
      out["violations"].push_back({{"check", v.check}, {"detail", v.detail}, {"arena", v.arena_text}});
    std::cout << out.dump(2) << "\n";
    return report.ok() ? kExitOk : kExitInternal;
  } else if (gallery_cmd->parsed()) {
    int param = -1;
    if (!gallery_param.empty()) {
      auto eq = gallery_param.find('=');
      param = std::stoi(eq == std::string::npos ? gallery_param : gallery_param.substr(eq + 1));
    }
    GalleryGame game = paper_gallery(gallery_name, param);
    std::string text = write_game(game.arena, game.initial);
    if (gallery_out.empty()) {
      std::cout << text;
      return kExitOk;
    }
    spill(gallery_out, text);
    out["command"] = "gallery";
    out["name"] = gallery_name;
    out["vertices"] = game.arena.size();
    out["out"] = gallery_out;
  }

  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
