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

#include "winpar/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace winpar {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, size_t line, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

Player parse_owner(const std::string& tok, size_t line) {
  if (tok == "1") return Player::P1;
  if (tok == "2") return Player::P2;
  throw ParseError(line, "owner must be 1 or 2, got '" + tok + "'");
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

ParsedGame parse_game(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;

  int dims = -1;
  struct EdgeDecl {
    std::string src, dst;
    size_t line;
  };
  std::vector<EdgeDecl> edges;
  std::optional<std::pair<std::string, size_t>> init;
  Arena arena;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (dims < 0) {
      if (tokens.size() != 3 || tokens[0] != "winpar" || tokens[1] != "1" ||
          tokens[2].rfind("dims=", 0) != 0)
        throw ParseError(lineno, "missing header 'winpar 1 dims=<n>'");
      dims = parse_int(tokens[2].substr(5), lineno, "dimension count");
      if (dims < 1) throw ParseError(lineno, "dimension count must be >= 1");
      arena.set_dims(dims);
      continue;
    }
    if (tokens[0] == "vertex") {
      if (static_cast<int>(tokens.size()) != 3 + dims)
        throw ParseError(lineno, "dimension mismatch at line " + std::to_string(lineno) +
                                     " (expected " + std::to_string(dims) + " priorities)");
      Player owner = parse_owner(tokens[2], lineno);
      std::vector<int> prios;
      for (int m = 0; m < dims; ++m) {
        int p = parse_int(tokens[3 + m], lineno, "priority");
        if (p < 0) throw ParseError(lineno, "priorities must be non-negative");
        prios.push_back(p);
      }
      if (arena.index_of(tokens[1]))
        throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
      arena.add_vertex(tokens[1], owner, std::move(prios));
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError(lineno, "edge needs two endpoints");
      edges.push_back({tokens[1], tokens[2], lineno});
    } else if (tokens[0] == "init") {
      if (tokens.size() != 2) throw ParseError(lineno, "init needs one vertex");
      init = {tokens[1], lineno};
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (dims < 0) throw ParseError(lineno, "missing header 'winpar 1 dims=<n>'");
  if (arena.size() == 0) throw ParseError(lineno, "no vertices");

  for (const auto& e : edges) {
    auto s = arena.index_of(e.src);
    if (!s) throw ParseError(e.line, "unknown edge endpoint '" + e.src + "'");
    auto d = arena.index_of(e.dst);
    if (!d) throw ParseError(e.line, "unknown edge endpoint '" + e.dst + "'");
    arena.add_edge(*s, *d);
  }
  arena.finalize();

  ParsedGame out;
  out.arena = std::move(arena);
  if (init) {
    auto v = out.arena.index_of(init->first);
    if (!v) throw ParseError(init->second, "unknown init vertex '" + init->first + "'");
    out.initial = *v;
  }
  return out;
}

std::string write_game(const Arena& arena, std::optional<uint32_t> initial) {
  std::ostringstream out;
  out << "winpar 1 dims=" << arena.dims() << "\n";
  for (uint32_t v = 0; v < arena.size(); ++v) {
    out << "vertex " << arena.id(v) << " " << player_index(arena.owner(v));
    for (int m = 0; m < arena.dims(); ++m) out << " " << arena.priority(v, m);
    out << "\n";
  }
  for (uint32_t v = 0; v < arena.size(); ++v)
    for (uint32_t w : arena.successors(v)) out << "edge " << arena.id(v) << " " << arena.id(w) << "\n";
  if (initial) out << "init " << arena.id(*initial) << "\n";
  return out.str();
}

namespace {

std::string priority_label(const Arena& arena, uint32_t v) {
  std::string label;
  for (int m = 0; m < arena.dims(); ++m) {
    if (m) label += ",";
    label += std::to_string(arena.priority(v, m));
  }
  return label;
}

}  // namespace

std::string export_dot(const Arena& arena, std::optional<uint32_t> initial) {
  std::ostringstream out;
  out << "digraph arena {\n";
  if (initial) {
    out << "  __init [shape=point, label=\"\"];\n";
    out << "  __init -> " << quote_dot(arena.id(*initial)) << ";\n";
  }
  for (uint32_t v = 0; v < arena.size(); ++v) {
    out << "  " << quote_dot(arena.id(v)) << " [shape="
        << (arena.owner(v) == Player::P1 ? "circle" : "box") << ", label="
        << quote_dot(arena.id(v) + "\\n" + priority_label(arena, v)) << "];\n";
  }
  for (uint32_t v = 0; v < arena.size(); ++v)
    for (uint32_t w : arena.successors(v))
      out << "  " << quote_dot(arena.id(v)) << " -> " << quote_dot(arena.id(w)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const ProductArena& product) {
  const Arena& pg = product.game;
  std::ostringstream out;
  out << "digraph product {\n";
  for (uint32_t u = 0; u < pg.size(); ++u) {
    std::string label;
    if (u == product.absorbing) {
      label = "beta";
    } else {
      uint32_t v = product.back_map[u];
      label = v == kNoVertex ? "?" : "s" + std::to_string(v);
      if (product.bad[u]) {
        label = "beta(" + label + ")";
      } else {
        const auto& pay = product.payload[u];
        if (!pay.empty()) {
          label += " |";
          for (int x : pay) label += " " + std::to_string(x);
        }
      }
    }
    out << "  n" << u << " [shape=" << (pg.owner(u) == Player::P1 ? "circle" : "box")
        << ", label=" << quote_dot(label);
    if (product.bad[u]) out << ", style=filled, fillcolor=gray80";
    out << "];\n";
  }
  for (uint32_t u = 0; u < pg.size(); ++u)
    for (uint32_t w : pg.successors(u)) out << "  n" << u << " -> n" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_strategy(const MooreStrategy& s, const Arena& arena) {
  std::ostringstream out;
  out << "moore " << player_index(s.player) << " init=" << s.memory_names[s.initial] << "\n";
  for (uint32_t m = 0; m < s.memory_size(); ++m)
    for (uint32_t v = 0; v < s.num_vertices; ++v)
      if (arena.owner(v) == s.player)
        out << "next " << s.memory_names[m] << " " << arena.id(v) << " -> "
            << arena.id(s.next_at(m, v)) << "\n";
  for (uint32_t m = 0; m < s.memory_size(); ++m)
    for (uint32_t v = 0; v < s.num_vertices; ++v)
      out << "update " << s.memory_names[m] << " " << arena.id(v) << " -> "
          << s.memory_names[s.update_at(m, v)] << "\n";
  return out.str();
}

MooreStrategy read_strategy(const std::string& text, const Arena& arena) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;

  std::optional<Player> player;
  std::string init_name;
  struct Entry {
    bool is_next;
    std::string m, v, target;
    size_t line;
  };
  std::vector<Entry> entries;
  std::map<std::string, uint32_t> memory_index;
  std::vector<std::string> memory_names;
  auto intern_memory = [&](const std::string& name) {
    auto it = memory_index.find(name);
    if (it != memory_index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(memory_names.size());
    memory_index.emplace(name, id);
    memory_names.push_back(name);
    return id;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!player) {
      if (tokens.size() != 3 || tokens[0] != "moore" || tokens[2].rfind("init=", 0) != 0)
        throw ParseError(lineno, "missing header 'moore <player> init=<m0>'");
      player = parse_owner(tokens[1], lineno);
      init_name = tokens[2].substr(5);
      intern_memory(init_name);
      continue;
    }
    if ((tokens[0] == "next" || tokens[0] == "update")) {
      if (tokens.size() != 5 || tokens[3] != "->")
        throw ParseError(lineno, "expected '" + tokens[0] + " <m> <v> -> <target>'");
      if (tokens[0] == "update") intern_memory(tokens[1]), intern_memory(tokens[4]);
      else intern_memory(tokens[1]);
      entries.push_back({tokens[0] == "next", tokens[1], tokens[2], tokens[4], lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!player) throw ParseError(lineno, "missing header 'moore <player> init=<m0>'");

  MooreStrategy s = MooreStrategy::make(*player, arena.size(),
                                        static_cast<uint32_t>(memory_names.size()));
  s.memory_names = memory_names;
  s.initial = memory_index.at(init_name);
  for (const auto& e : entries) {
    auto v = arena.index_of(e.v);
    if (!v) throw ParseError(e.line, "unknown vertex '" + e.v + "'");
    uint32_t m = memory_index.at(e.m);
    if (e.is_next) {
      auto t = arena.index_of(e.target);
      if (!t) throw ParseError(e.line, "unknown vertex '" + e.target + "'");
      s.set_next(m, *v, *t);
    } else {
      s.set_update(m, *v, memory_index.at(e.target));
    }
  }
  validate_strategy(arena, s);
  return s;
}

}  // namespace winpar
