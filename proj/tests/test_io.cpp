#include <doctest.h>

#include "helpers.hpp"
#include "winpar/io.hpp"
#include "winpar/oracle.hpp"
#include "winpar/synthesis.hpp"

using namespace winpar;
using namespace winpar::test;

namespace {

const char* kFig4 = R"(# the four-priority cycle
winpar 1 dims=1
vertex v0 1 3
vertex v1 1 1
vertex v2 1 2
vertex v3 1 0
edge v0 v1
edge v1 v2
edge v2 v3
edge v3 v0
init v0
)";

bool same_arena(const Arena& a, const Arena& b) {
  if (a.size() != b.size() || a.dims() != b.dims()) return false;
  for (uint32_t v = 0; v < a.size(); ++v) {
    auto w = b.index_of(a.id(v));
    if (!w) return false;
    if (a.owner(v) != b.owner(*w)) return false;
    for (int m = 0; m < a.dims(); ++m)
      if (a.priority(v, m) != b.priority(*w, m)) return false;
    if (a.successors(v).size() != b.successors(*w).size()) return false;
    for (uint32_t s : a.successors(v))
      if (!b.has_edge(*w, *b.index_of(a.id(s)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parsing the cycle file") {
  auto parsed = parse_game(kFig4);
  CHECK(parsed.arena.size() == 4);
  CHECK(parsed.arena.dims() == 1);
  REQUIRE(parsed.initial.has_value());
  CHECK(parsed.arena.id(*parsed.initial) == "v0");
  CHECK(same_arena(parsed.arena, paper_gallery("fig4").arena));
}

TEST_CASE("parse diagnostics carry line numbers") {
  CHECK_THROWS_AS(parse_game("winpar 1 dims=1\n"), ParseError);
  try {
    parse_game("winpar 1 dims=1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("no vertices") != std::string::npos);
  }

  try {
    parse_game("winpar 1 dims=1\nvertex a 1 0 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("dimension mismatch") != std::string::npos);
  }

  try {
    parse_game("winpar 1 dims=1\nvertex a 1 0\nvertex a 2 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("duplicate vertex") != std::string::npos);
  }

  try {
    parse_game("winpar 1 dims=1\nvertex a 1 0\nedge a b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("unknown edge endpoint") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_game("vertex a 1 0\n"), ParseError);  // missing header
}

TEST_CASE("game files round-trip") {
  for (const char* name : {"fig4", "fig5", "fig6", "fig7", "fig9"}) {
    auto g = paper_gallery(name);
    auto again = parse_game(write_game(g.arena, g.initial));
    CHECK(same_arena(g.arena, again.arena));
    REQUIRE(again.initial.has_value());
    CHECK(g.arena.id(g.initial) == again.arena.id(*again.initial));
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Arena a = random_arena(seed, 6, 0.35, 1 + static_cast<int>(seed % 2), 4, 0.5);
    CHECK(same_arena(a, parse_game(write_game(a)).arena));
  }
}

TEST_CASE("dot export follows the owner shapes") {
  auto g = paper_gallery("fig5");
  std::string dot = export_dot(g.arena, g.initial);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
  // exactly one box: v1 is the only P2 vertex
  size_t boxes = 0;
  for (size_t at = dot.find("shape=box"); at != std::string::npos;
       at = dot.find("shape=box", at + 1))
    ++boxes;
  CHECK(boxes == 1);

  auto res = solve(g.arena, ObjectiveSpec::fixed(Objective::FixWP, 2, false));
  std::string pdot = export_dot(res.product);
  CHECK(pdot.find("fillcolor=gray80") != std::string::npos);  // beta states stand out
}

TEST_CASE("strategies round-trip") {
  auto g = paper_gallery("fig6");
  auto spec = ObjectiveSpec::fixed(Objective::FixPR, 4, true);
  auto res = solve(g.arena, spec);
  MooreStrategy machine = extract_strategy(g.arena, res, Player::P1);
  MooreStrategy again = read_strategy(write_strategy(machine, g.arena), g.arena);
  CHECK(again.player == machine.player);
  CHECK(again.memory_size() == machine.memory_size());
  CHECK(again.memory_names[again.initial] == machine.memory_names[machine.initial]);
  // Same behavior, not just same shape: the re-read machine still wins.
  CHECK(verify_strategy(g.arena, again, spec, g.initial).winning);
}

TEST_CASE("strategy files validate against the arena") {
  auto g = paper_gallery("fig6");
  CHECK_THROWS_AS(read_strategy("moore 1 init=m0\nnext m0 v0 -> v2\n", g.arena), std::exception);
  CHECK_THROWS_AS(read_strategy("next m0 v0 -> v1\n", g.arena), ParseError);
}
