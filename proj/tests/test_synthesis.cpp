#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "winpar/oracle.hpp"
#include "winpar/synthesis.hpp"

using namespace winpar;
using namespace winpar::test;

namespace {

// The alternation machine for the two-cycle arena: memory A plays into
// the short cycle, memory B into the long one, toggling at the cycle
// exits.
MooreStrategy fig6_alternation(const Arena& a) {
  MooreStrategy s = MooreStrategy::make(Player::P1, a.size(), 2);
  s.memory_names = {"A", "B"};
  for (uint32_t m = 0; m < 2; ++m) {
    for (uint32_t v = 0; v < a.size(); ++v) {
      s.set_update(m, v, m);
      s.set_next(m, v, a.successors(v)[0]);
    }
  }
  uint32_t v0 = *a.index_of("v0");
  s.set_next(0, v0, *a.index_of("v1"));
  s.set_next(1, v0, *a.index_of("v3"));
  s.set_update(0, *a.index_of("v2"), 1);
  s.set_update(1, *a.index_of("v6"), 0);
  return s;
}

}  // namespace

TEST_CASE("extracted strategy for the alternation arena") {
  auto g = paper_gallery("fig6");
  auto spec = ObjectiveSpec::fixed(Objective::FixPR, 4, true);
  auto res = solve(g.arena, spec);
  REQUIRE(res.won_by(g.initial, Player::P1));
  MooreStrategy machine = extract_strategy(g.arena, res, Player::P1);
  CHECK(machine.memory_size() >= 2);
  CHECK(machine.memory_size() <= res.product.payload_space + 1);
  auto verdict = verify_strategy(g.arena, machine, spec, g.initial);
  CHECK(verdict.winning);
}

TEST_CASE("extracted strategy for the d/2-memory arena") {
  auto g = paper_gallery("fig8", 6);
  auto spec = ObjectiveSpec::fixed(Objective::FixWP, 5, false);
  auto res = solve(g.arena, spec);
  REQUIRE(res.won_by(g.initial, Player::P1));
  MooreStrategy machine = extract_strategy(g.arena, res, Player::P1);
  CHECK(machine.memory_size() >= 3);
  CHECK(verify_strategy(g.arena, machine, spec, g.initial).winning);
}

TEST_CASE("all-even safety extraction is memoryless") {
  Arena a = build_arena(1, {{"a", Player::P1, {0}}, {"b", Player::P2, {2}}},
                        {{"a", "b"}, {"b", "a"}, {"a", "a"}});
  auto spec = ObjectiveSpec::fixed(Objective::FixPR, 1, true);
  auto res = solve(a, spec);
  MooreStrategy machine = extract_strategy(a, res, Player::P1);
  CHECK(machine.memory_size() == 1);
  CHECK(verify_strategy(a, machine, spec, 0).winning);
}

TEST_CASE("restriction by a memoryless strategy keeps the vertex count") {
  auto g = paper_gallery("fig6");
  auto memoryless = memoryless_strategies(g.arena, Player::P1);
  auto r = restrict_arena(g.arena, memoryless[0]);
  CHECK(r.game.size() == g.arena.size());
}

TEST_CASE("restriction by the alternation machine") {
  auto g = paper_gallery("fig6");
  MooreStrategy s = fig6_alternation(g.arena);
  auto r = restrict_arena(g.arena, s);
  CHECK(r.game.size() == 2 * g.arena.size());

  // The strategy owner's states all have out-degree one, and the unique
  // play from (v0, A) is the winning alternation lasso.
  for (uint32_t u = 0; u < r.game.size(); ++u)
    if (r.game.owner(u) == Player::P1) CHECK(r.game.successors(u).size() == 1);

  std::vector<uint32_t> walk;
  std::vector<int> seen(r.game.size(), -1);
  uint32_t u = r.index(g.initial, s.initial);
  while (seen[u] < 0) {
    seen[u] = static_cast<int>(walk.size());
    walk.push_back(u);
    u = r.game.successors(u)[0];
  }
  Lasso play;
  for (size_t i = seen[u]; i < walk.size(); ++i)
    play.cycle.push_back(r.source_vertex[walk[i]]);
  for (int i = 0; i < seen[u]; ++i) play.stem.push_back(r.source_vertex[walk[i]]);
  std::vector<std::string> ids;
  for (uint32_t v : play.cycle) ids.push_back(g.arena.id(v));
  CHECK(ids == std::vector<std::string>{"v0", "v1", "v2", "v0", "v3", "v4", "v5", "v6"});
  CHECK(check_lasso(g.arena, play, ObjectiveSpec::fixed(Objective::FixPR, 4, true)).holds);
  CHECK(verify_strategy(g.arena, s, ObjectiveSpec::fixed(Objective::FixPR, 4, true), g.initial)
            .winning);
}

TEST_CASE("memoryless play loses the alternation arena") {
  auto g = paper_gallery("fig6");
  auto spec = ObjectiveSpec::fixed(Objective::FixPR, 4, true);
  uint32_t v0 = *g.arena.index_of("v0");
  for (const auto& s : memoryless_strategies(g.arena, Player::P1)) {
    auto verdict = verify_strategy(g.arena, s, spec, g.initial);
    CHECK_FALSE(verdict.winning);
    REQUIRE(verdict.counterexample.has_value());
    // The refuting play is consistent and violates the objective.
    CHECK_NOTHROW(validate_lasso(g.arena, *verdict.counterexample));
    CHECK_FALSE(check_lasso(g.arena, *verdict.counterexample, spec).holds);
    if (s.next_at(0, v0) == *g.arena.index_of("v1")) {
      // Always-left play: the unique outcome (v0 v1 v2)^omega.
      auto u = unroll(*verdict.counterexample, 6);
      std::vector<std::string> ids;
      for (uint32_t v : u) ids.push_back(g.arena.id(v));
      CHECK(ids == std::vector<std::string>{"v0", "v1", "v2", "v0", "v1", "v2"});
    }
  }
}

TEST_CASE("memoryless opposition loses the complement of the three-window objective") {
  auto g = paper_gallery("fig7");
  auto spec = ObjectiveSpec::fixed(Objective::FixPR, 3, false);
  for (const auto& s : memoryless_strategies(g.arena, Player::P2)) {
    auto verdict = verify_strategy(g.arena, s, spec, g.initial);
    CHECK_FALSE(verdict.winning);
    REQUIRE(verdict.counterexample.has_value());
    // A P2 refutation is a consistent play that satisfies the objective.
    CHECK(check_lasso(g.arena, *verdict.counterexample, spec).holds);
  }
  // The solver still awards the arena to P2, who needs memory 2.
  auto res = solve(g.arena, spec);
  CHECK(res.won_by(g.initial, Player::P2));
  auto machine = extract_strategy(g.arena, res, Player::P2);
  CHECK(machine.memory_size() >= 2);
  CHECK(verify_strategy(g.arena, machine, spec, g.initial).winning);
}

TEST_CASE("extraction round-trips across kinds and arenas") {
  std::mt19937_64 rng(5);
  size_t verified = 0;
  for (uint64_t seed = 0; seed < 25; ++seed) {
    int dims = 1 + static_cast<int>(seed % 2);
    Arena a = random_arena(seed, 5, 0.4, dims, 3, 0.5);
    std::vector<ObjectiveSpec> specs;
    for (int lambda : {1, 2, 3})
      for (Objective kind : {Objective::FixPR, Objective::FixWP})
        specs.push_back(ObjectiveSpec::fixed(kind, lambda, seed % 2 == 0));
    specs.push_back(ObjectiveSpec::bounded(Objective::BndWP, false));
    if (dims == 1) specs.push_back(ObjectiveSpec::parity());
    specs.push_back(ObjectiveSpec::with_set(Objective::Buchi, {0}));
    specs.push_back(ObjectiveSpec::genreach({{0}, {static_cast<uint32_t>(a.size() - 1)}}));
    for (const auto& spec : specs) {
      auto res = solve(a, spec);
      for (Player p : {Player::P1, Player::P2}) {
        if (res.region(p).empty()) continue;
        if (is_bounded_kind(spec.kind) && p == Player::P2) {
          CHECK_THROWS_AS(extract_strategy(a, res, p), std::invalid_argument);
          continue;
        }
        MooreStrategy machine = extract_strategy(a, res, p);
        CHECK(machine.memory_size() <= res.product.payload_space + 1);
        for (uint32_t v : res.region(p)) {
          CHECK(verify_strategy(a, machine, spec, v).winning);
          ++verified;
        }
      }
    }
  }
  CHECK(verified > 200);
}

TEST_CASE("bounded kinds refuse a finite certificate for the delaying player") {
  auto g = paper_gallery("fig5");
  auto res = solve(g.arena, ObjectiveSpec::bounded(Objective::BndWP, false));
  REQUIRE(res.won_by(g.initial, Player::P2));
  CHECK_THROWS_WITH_AS(extract_strategy(g.arena, res, Player::P2),
                       "no finite certificate produced", std::invalid_argument);
  // Any finite P2 machine is refuted exactly: the machine that always
  // loops on v1 loses the complement of the bounded objective (its
  // outcome closes every window once it settles on the loop).
  MooreStrategy loop = MooreStrategy::make(Player::P2, g.arena.size(), 1);
  uint32_t v1 = *g.arena.index_of("v1");
  loop.set_next(0, v1, v1);
  auto verdict =
      verify_strategy(g.arena, loop, ObjectiveSpec::bounded(Objective::BndWP, false), g.initial);
  CHECK_FALSE(verdict.winning);
  // Bounded failures carry no lasso refutation (none needs to exist).
  CHECK_FALSE(verdict.counterexample.has_value());
}

TEST_CASE("verification rejects mismatched strategies") {
  auto g4 = paper_gallery("fig4");
  auto g6 = paper_gallery("fig6");
  MooreStrategy s = MooreStrategy::make(Player::P1, g4.arena.size(), 1);
  for (uint32_t v = 0; v < g4.arena.size(); ++v) s.set_next(0, v, g4.arena.successors(v)[0]);
  CHECK_THROWS_AS(
      verify_strategy(g6.arena, s, ObjectiveSpec::fixed(Objective::FixPR, 3, true), 0),
      std::invalid_argument);
}
