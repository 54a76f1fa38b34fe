#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "winpar/objectives.hpp"
#include "winpar/oracle.hpp"

using namespace winpar;
using namespace winpar::test;

namespace {

Lasso fig4_lasso(const Arena& a) { return lasso_of(a, {}, {"v0", "v1", "v2", "v3"}); }

}  // namespace

TEST_CASE("window status on the four-priority cycle") {
  auto g = paper_gallery("fig4");
  Lasso l = fig4_lasso(g.arena);

  auto open3 = window_close(g.arena, l, 0, 0, 3);
  CHECK_FALSE(open3.closed);  // priorities 3,1,2: no even value is segment-minimal

  auto closed4 = window_close(g.arena, l, 0, 0, 4);
  CHECK(closed4.closed);
  CHECK(closed4.closing_offset == 3);

  // An even priority closes its own window immediately.
  auto at2 = window_close(g.arena, l, 2, 0, 1);
  CHECK(at2.closed);
  CHECK(at2.closing_offset == 0);

  std::vector<int> prefix = {3, 1, 2};
  CHECK_THROWS_WITH_AS(window_close(prefix, 0, 4), "insufficient horizon", std::invalid_argument);
}

TEST_CASE("lasso membership matches the worked example") {
  auto g = paper_gallery("fig4");
  Lasso l = fig4_lasso(g.arena);
  auto member = [&](Objective kind, int lambda, bool direct) {
    return check_lasso(g.arena, l, ObjectiveSpec::fixed(kind, lambda, direct)).holds;
  };
  CHECK(member(Objective::FixPR, 3, true));
  CHECK(member(Objective::FixPR, 3, false));
  CHECK(member(Objective::FixWP, 4, true));
  CHECK(member(Objective::FixWP, 4, false));
  CHECK_FALSE(member(Objective::FixWP, 3, true));
  CHECK(check_lasso(g.arena, l, ObjectiveSpec::bounded(Objective::BndPR, true)).holds);
  CHECK(check_lasso(g.arena, l, ObjectiveSpec::bounded(Objective::BndWP, false)).holds);
}

TEST_CASE("alternation lassos from the memory examples") {
  auto g6 = paper_gallery("fig6");
  Lasso alt6 = lasso_of(g6.arena, {}, {"v0", "v1", "v2", "v0", "v3", "v4", "v5", "v6"});
  CHECK(check_lasso(g6.arena, alt6, ObjectiveSpec::fixed(Objective::FixPR, 4, true)).holds);

  auto g7 = paper_gallery("fig7");
  Lasso alt7 = lasso_of(g7.arena, {}, {"v0", "v1", "v2", "v0", "v3", "v4"});
  auto verdict = check_lasso(g7.arena, alt7, ObjectiveSpec::fixed(Objective::FixPR, 3, false));
  CHECK_FALSE(verdict.holds);
  CHECK(verdict.position == 2);  // the odd priority on v2 is answered one step too late
  CHECK(verdict.dimension == 0);
}

TEST_CASE("self-loop with even priority satisfies everything at lambda 1") {
  Arena a = build_arena(1, {{"v", Player::P1, {0}}}, {{"v", "v"}});
  Lasso l = lasso_of(a, {}, {"v"});
  for (Objective kind : {Objective::FixPR, Objective::FixWP})
    for (bool direct : {true, false})
      CHECK(check_lasso(a, l, ObjectiveSpec::fixed(kind, 1, direct)).holds);
  for (Objective kind : {Objective::BndPR, Objective::BndWP})
    for (bool direct : {true, false})
      CHECK(check_lasso(a, l, ObjectiveSpec::bounded(kind, direct)).holds);
}

TEST_CASE("classical kinds on lassos") {
  auto g = paper_gallery("fig5");
  const Arena& a = g.arena;
  Lasso loop = lasso_of(a, {"v0"}, {"v1"});
  Lasso full = lasso_of(a, {}, {"v0", "v1", "v2"});

  CHECK(check_lasso(a, full, ObjectiveSpec::parity()).holds);
  CHECK(check_lasso(a, loop, ObjectiveSpec::parity()).holds);  // min on the cycle is 2
  CHECK(check_lasso(a, loop, ObjectiveSpec::with_set(Objective::Reach, {*a.index_of("v1")})).holds);
  CHECK_FALSE(
      check_lasso(a, loop, ObjectiveSpec::with_set(Objective::Reach, {*a.index_of("v2")})).holds);
  CHECK(check_lasso(a, full, ObjectiveSpec::with_set(Objective::Buchi, {*a.index_of("v2")})).holds);
  CHECK_FALSE(
      check_lasso(a, loop, ObjectiveSpec::with_set(Objective::Buchi, {*a.index_of("v2")})).holds);
  CHECK(check_lasso(a, loop,
                    ObjectiveSpec::with_set(Objective::CoBuchi, {*a.index_of("v1")})).holds);
  CHECK(check_lasso(a, full,
                    ObjectiveSpec::genreach({{*a.index_of("v1")}, {*a.index_of("v2")}}))
            .holds);
  CHECK_FALSE(
      check_lasso(a, loop, ObjectiveSpec::genreach({{*a.index_of("v1")}, {*a.index_of("v2")}}))
          .holds);
}

TEST_CASE("good decomposition of the worked example") {
  auto g = paper_gallery("fig4");
  Lasso l = fig4_lasso(g.arena);

  auto dec = good_decomposition(g.arena, l, 4, 0, true);
  REQUIRE(dec.has_value());
  CHECK(dec->indices.front() == 0);
  // Frozen from the window sweep: each window closes at offset 3, so the
  // sequence is 0, 4, 8, ... — one recorded index, then period 4.
  CHECK(dec->indices == std::vector<size_t>{0});
  CHECK(dec->period == 4);

  CHECK_FALSE(good_decomposition(g.arena, l, 3, 0, true).has_value());

  Arena even = build_arena(1, {{"v", Player::P1, {0}}}, {{"v", "v"}});
  auto dec1 = good_decomposition(even, lasso_of(even, {}, {"v"}), 1, 0, true);
  REQUIRE(dec1.has_value());
  CHECK(dec1->indices == std::vector<size_t>{0});
  CHECK(dec1->period == 1);
}

TEST_CASE("good decompositions exist exactly for window members") {
  std::mt19937_64 rng(23);
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Arena a = random_arena(seed, 5, 0.35, 1, 4, 0.5);
    Lasso l = random_lasso(a, rng, static_cast<uint32_t>(rng() % a.size()));
    for (int lambda = 1; lambda <= 4; ++lambda) {
      for (bool direct : {true, false}) {
        bool member =
            check_lasso(a, l, ObjectiveSpec::fixed(Objective::FixWP, lambda, direct)).holds;
        auto dec = good_decomposition(a, l, lambda, 0, direct);
        CHECK(member == dec.has_value());
        if (dec) {
          if (direct) CHECK(dec->indices.front() == 0);
          CHECK(dec->period > 0);
          // Every recorded segment must be lambda-good.
          for (size_t i = 0; i + 1 < dec->indices.size(); ++i) {
            auto w = window_close(a, l, dec->indices[i], 0, lambda);
            CHECK(w.closed);
            CHECK(dec->indices[i] + w.closing_offset + 1 == dec->indices[i + 1]);
          }
        }
      }
    }
  }
}

TEST_CASE("minimal sufficient lambda on the worked example") {
  auto g = paper_gallery("fig4");
  Lasso l = fig4_lasso(g.arena);
  CHECK(min_sufficient_lambda(g.arena, l, Objective::FixWP, true, 0) == 4);
  CHECK(min_sufficient_lambda(g.arena, l, Objective::FixPR, true, 0) == 3);

  Arena odd = build_arena(1, {{"v", Player::P1, {1}}}, {{"v", "v"}});
  CHECK_FALSE(min_sufficient_lambda(odd, lasso_of(odd, {}, {"v"}), Objective::FixWP, true, 0)
                  .has_value());
}

TEST_CASE("membership agrees with the definition-level reference") {
  std::mt19937_64 rng(101);
  for (uint64_t seed = 0; seed < 80; ++seed) {
    int dims = 1 + static_cast<int>(seed % 2);
    Arena a = random_arena(seed, 5, 0.35, dims, 4, 0.5);
    Lasso l = random_lasso(a, rng, static_cast<uint32_t>(rng() % a.size()));
    for (bool direct : {true, false}) {
      for (int lambda = 1; lambda <= 5; ++lambda) {
        for (Objective kind : {Objective::FixPR, Objective::FixWP}) {
          auto spec = ObjectiveSpec::fixed(kind, lambda, direct);
          CHECK(check_lasso(a, l, spec).holds == naive_member(a, l, spec));
        }
      }
      for (Objective kind : {Objective::BndPR, Objective::BndWP}) {
        auto spec = ObjectiveSpec::bounded(kind, direct);
        CHECK(check_lasso(a, l, spec).holds == naive_member(a, l, spec));
      }
    }
  }
}

TEST_CASE("per-lasso objective lattice") {
  std::mt19937_64 rng(55);
  auto member = [](const Arena& a, const Lasso& l, Objective kind, bool direct,
                   std::optional<int> lambda = std::nullopt) {
    ObjectiveSpec spec = lambda ? ObjectiveSpec::fixed(kind, *lambda, direct)
                                : ObjectiveSpec::bounded(kind, direct);
    return check_lasso(a, l, spec).holds;
  };
  for (uint64_t seed = 100; seed < 180; ++seed) {
    int d = static_cast<int>(seed % 5);
    Arena a = random_arena(seed, 5, 0.35, 1, d, 0.5);
    Lasso l = random_lasso(a, rng, static_cast<uint32_t>(rng() % a.size()));
    int dmax = a.max_priority();
    for (int lambda = 1; lambda <= 4; ++lambda) {
      for (Objective kind : {Objective::FixPR, Objective::FixWP}) {
        // Direct implies undirect; lambda-monotone; fixed implies bounded.
        if (member(a, l, kind, true, lambda)) CHECK(member(a, l, kind, false, lambda));
        if (member(a, l, kind, true, lambda)) CHECK(member(a, l, kind, true, lambda + 1));
        if (member(a, l, kind, false, lambda)) CHECK(member(a, l, kind, false, lambda + 1));
        Objective bnd = kind == Objective::FixPR ? Objective::BndPR : Objective::BndWP;
        if (member(a, l, kind, true, lambda)) CHECK(member(a, l, bnd, true));
        if (member(a, l, kind, false, lambda)) CHECK(member(a, l, bnd, false));
      }
      for (bool direct : {true, false}) {
        // WP within PR, and PR within WP at (d/2) * lambda.
        if (member(a, l, Objective::FixWP, direct, lambda))
          CHECK(member(a, l, Objective::FixPR, direct, lambda));
        if (member(a, l, Objective::FixPR, direct, lambda))
          CHECK(member(a, l, Objective::FixWP, direct, std::max(1, dmax / 2 * lambda)));
        if (dmax <= 2)
          CHECK(member(a, l, Objective::FixPR, direct, lambda) ==
                member(a, l, Objective::FixWP, direct, lambda));
      }
    }
    for (bool direct : {true, false}) {
      CHECK(member(a, l, Objective::BndPR, direct) == member(a, l, Objective::BndWP, direct));
      if (member(a, l, Objective::BndWP, direct))
        CHECK(check_lasso(a, l, ObjectiveSpec::parity()).holds);
      // Bounded kinds equal the fixed kind at lambda* = S + 2C, and
      // exists-lambda brute force.
      int lstar = static_cast<int>(l.stem.size() + 2 * l.cycle.size());
      for (Objective kind : {Objective::BndPR, Objective::BndWP}) {
        Objective fix = kind == Objective::BndPR ? Objective::FixPR : Objective::FixWP;
        CHECK(member(a, l, kind, direct) == member(a, l, fix, direct, lstar));
        bool exists = min_sufficient_lambda(a, l, fix, direct, 0).has_value();
        if (a.dims() == 1) CHECK(member(a, l, kind, direct) == exists);
      }
    }
  }
}
