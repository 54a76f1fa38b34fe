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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "winpar/io.hpp"
#include "winpar/objectives.hpp"
#include "winpar/oracle.hpp"
#include "winpar/synthesis.hpp"

namespace py = pybind11;
using namespace winpar;

namespace {

ObjectiveSpec spec_from_kwargs(const Arena& arena, const std::string& objective, bool direct,
                               std::optional<int> lam,
                               const std::vector<std::vector<std::string>>& targets) {
  auto kind = objective_from_name(objective);
  if (!kind) throw std::invalid_argument("unknown objective '" + objective + "'");
  ObjectiveSpec spec;
  spec.kind = *kind;
  spec.direct = direct;
  spec.lambda = lam;
  for (const auto& set : targets) {
    std::vector<uint32_t> s;
    for (const auto& id : set) {
      auto v = arena.index_of(id);
      if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
      s.push_back(*v);
    }
    spec.targets.push_back(std::move(s));
  }
  spec.validate(arena);
  return spec;
}

uint32_t vertex_of(const Arena& arena, const std::string& id) {
  auto v = arena.index_of(id);
  if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
  return *v;
}

Lasso lasso_of(const Arena& arena, const std::vector<std::string>& stem,
               const std::vector<std::string>& cycle) {
  Lasso lasso;
  for (const auto& id : stem) lasso.stem.push_back(vertex_of(arena, id));
  for (const auto& id : cycle) lasso.cycle.push_back(vertex_of(arena, id));
  return lasso;
}

py::list region_list(const Arena& arena, const std::vector<Player>& winner, Player p) {
  py::list out;
  for (uint32_t v = 0; v < winner.size(); ++v)
    if (winner[v] == p) out.append(arena.id(v));
  return out;
}

SolveVia via_of(const std::string& name) {
  if (name == "product") return SolveVia::Product;
  if (name == "rr") return SolveVia::RequestResponse;
  if (name == "history") return SolveVia::History;
  throw std::invalid_argument("unknown via '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_winpar, m) {
  m.doc() = "window parity and parity-response games on finite arenas";

  py::class_<Arena>(m, "Arena")
      .def_property_readonly("num_vertices", &Arena::size)
      .def_property_readonly("dims", &Arena::dims)
      .def("ids",
           [](const Arena& a) {
             std::vector<std::string> out;
             for (uint32_t v = 0; v < a.size(); ++v) out.push_back(a.id(v));
             return out;
           })
      .def("owner", [](const Arena& a, const std::string& id) {
        return player_index(a.owner(vertex_of(a, id)));
      })
      .def("priorities",
           [](const Arena& a, const std::string& id) {
             auto p = a.priorities(vertex_of(a, id));
             return std::vector<int>(p.begin(), p.end());
           })
      .def("successors",
           [](const Arena& a, const std::string& id) {
             std::vector<std::string> out;
             for (uint32_t w : a.successors(vertex_of(a, id))) out.push_back(a.id(w));
             return out;
           })
      .def("__repr__", [](const Arena& a) {
        return "<winpar.Arena " + std::to_string(a.size()) + " vertices, " +
               std::to_string(a.dims()) + " dims>";
      });

  m.def("parse_game", [](const std::string& text) {
    auto parsed = parse_game(text);
    py::dict out;
    out["init"] = parsed.initial ? py::cast(parsed.arena.id(*parsed.initial)) : py::none();
    out["arena"] = py::cast(std::move(parsed.arena));
    return out;
  });
  m.def("write_game", [](const Arena& arena) { return write_game(arena); });
  m.def("export_dot", [](const Arena& arena) { return export_dot(arena); });
  m.def("validate", [](const Arena& arena) {
    std::vector<std::string> out;
    for (const auto& issue : validate_arena(arena)) out.push_back(issue.message);
    return out;
  });

  m.def(
      "make_arena",
      [](const std::vector<std::tuple<std::string, int, std::vector<int>>>& vertices,
         const std::vector<std::pair<std::string, std::string>>& edges, int dims) {
        Arena arena;
        arena.set_dims(dims);
        for (const auto& [id, owner, prios] : vertices)
          arena.add_vertex(id, owner == 1 ? Player::P1 : Player::P2, prios);
        for (const auto& [src, dst] : edges)
          arena.add_edge(vertex_of(arena, src), vertex_of(arena, dst));
        arena.finalize();
        return arena;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("dims") = 1);

  m.def(
      "check_lasso",
      [](const Arena& arena, const std::vector<std::string>& stem,
         const std::vector<std::string>& cycle, const std::string& objective, bool direct,
         std::optional<int> lam, const std::vector<std::vector<std::string>>& targets) {
        auto spec = spec_from_kwargs(arena, objective, direct, lam, targets);
        auto verdict = check_lasso(arena, lasso_of(arena, stem, cycle), spec);
        py::dict out;
        out["holds"] = verdict.holds;
        if (!verdict.holds) {
          out["position"] = verdict.position;
          out["dimension"] = verdict.dimension + 1;
        }
        return out;
      },
      py::arg("arena"), py::arg("stem"), py::arg("cycle"), py::arg("objective"),
      py::arg("direct") = false, py::arg("lam") = py::none(),
      py::arg("targets") = std::vector<std::vector<std::string>>{});

  m.def(
      "solve",
      [](const Arena& arena, const std::string& objective, bool direct, std::optional<int> lam,
         const std::vector<std::vector<std::string>>& targets, const std::string& via) {
        auto spec = spec_from_kwargs(arena, objective, direct, lam, targets);
        auto result = solve(arena, spec, via_of(via));
        py::dict out;
        out["win1"] = region_list(arena, result.source_winner, Player::P1);
        out["win2"] = region_list(arena, result.source_winner, Player::P2);
        out["product_states"] = result.product.size();
        if (result.threshold) out["threshold"] = *result.threshold;
        return out;
      },
      py::arg("arena"), py::arg("objective"), py::arg("direct") = false,
      py::arg("lam") = py::none(), py::arg("targets") = std::vector<std::vector<std::string>>{},
      py::arg("via") = "product");

  m.def(
      "synthesize",
      [](const Arena& arena, const std::string& objective, bool direct, std::optional<int> lam,
         const std::vector<std::vector<std::string>>& targets, int player) {
        auto spec = spec_from_kwargs(arena, objective, direct, lam, targets);
        auto result = solve(arena, spec);
        auto machine =
            extract_strategy(arena, result, player == 1 ? Player::P1 : Player::P2);
        py::dict out;
        out["memory"] = machine.memory_size();
        out["text"] = write_strategy(machine, arena);
        return out;
      },
      py::arg("arena"), py::arg("objective"), py::arg("direct") = false,
      py::arg("lam") = py::none(), py::arg("targets") = std::vector<std::vector<std::string>>{},
      py::arg("player") = 1);

  m.def(
      "verify",
      [](const Arena& arena, const std::string& strategy_text, const std::string& objective,
         bool direct, std::optional<int> lam, const std::vector<std::vector<std::string>>& targets,
         const std::string& init) {
        auto spec = spec_from_kwargs(arena, objective, direct, lam, targets);
        auto machine = read_strategy(strategy_text, arena);
        auto result = verify_strategy(arena, machine, spec, vertex_of(arena, init));
        py::dict out;
        out["winning"] = result.winning;
        if (result.counterexample) {
          std::vector<std::string> stem, cycle;
          for (uint32_t v : result.counterexample->stem) stem.push_back(arena.id(v));
          for (uint32_t v : result.counterexample->cycle) cycle.push_back(arena.id(v));
          out["stem"] = stem;
          out["cycle"] = cycle;
        }
        return out;
      },
      py::arg("arena"), py::arg("strategy"), py::arg("objective"), py::arg("direct") = false,
      py::arg("lam") = py::none(), py::arg("targets") = std::vector<std::vector<std::string>>{},
      py::arg("init") = "");

  m.def(
      "random_arena",
      [](uint64_t seed, uint32_t n, double density, int dims, int maxprio, double p1_ratio) {
        return random_arena(seed, n, density, dims, maxprio, p1_ratio);
      },
      py::arg("seed"), py::arg("n") = 5, py::arg("density") = 0.3, py::arg("dims") = 1,
      py::arg("maxprio") = 3, py::arg("p1_ratio") = 0.5);

  m.def(
      "gallery",
      [](const std::string& name, int param) {
        auto g = paper_gallery(name, param);
        py::dict out;
        out["init"] = g.arena.id(g.initial);
        out["arena"] = py::cast(std::move(g.arena));
        return out;
      },
      py::arg("name"), py::arg("param") = -1);

  m.def(
      "cross_check",
      [](uint64_t seed_begin, uint64_t seed_end, uint32_t max_v, int max_lambda, int max_d,
         int max_n) {
        auto report = cross_check_corpus(seed_begin, seed_end, max_v, max_lambda, max_d, max_n);
        py::dict out;
        out["arenas"] = report.arenas;
        out["checks"] = report.checks;
        py::list violations;
        for (const auto& v : report.violations) {
          py::dict item;
          item["check"] = v.check;
          item["detail"] = v.detail;
          violations.append(item);
        }
        out["violations"] = violations;
        return out;
      },
      py::arg("seed_begin"), py::arg("seed_end"), py::arg("max_v") = 5, py::arg("max_lambda") = 3,
      py::arg("max_d") = 4, py::arg("max_n") = 2);
}
