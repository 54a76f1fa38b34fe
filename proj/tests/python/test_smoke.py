"""Smoke tests for the _winpar extension module."""

import _winpar as wp

FIG4 = """winpar 1 dims=1
vertex v0 1 3
vertex v1 1 1
vertex v2 1 2
vertex v3 1 0
edge v0 v1
edge v1 v2
edge v2 v3
edge v3 v0
init v0
"""


def test_parse_and_roundtrip():
    parsed = wp.parse_game(FIG4)
    arena = parsed["arena"]
    assert parsed["init"] == "v0"
    assert arena.num_vertices == 4
    assert arena.dims == 1
    assert arena.priorities("v0") == [3]
    assert wp.validate(arena) == []
    again = wp.parse_game(wp.write_game(arena))["arena"]
    assert sorted(again.ids()) == sorted(arena.ids())


def test_lasso_membership_matches_the_worked_example():
    arena = wp.parse_game(FIG4)["arena"]
    cycle = ["v0", "v1", "v2", "v3"]
    assert wp.check_lasso(arena, [], cycle, "fixpr", direct=True, lam=3)["holds"]
    assert not wp.check_lasso(arena, [], cycle, "fixwp", direct=True, lam=3)["holds"]
    assert wp.check_lasso(arena, [], cycle, "fixwp", direct=True, lam=4)["holds"]
    bad = wp.check_lasso(arena, [], cycle, "fixwp", direct=True, lam=3)
    assert bad["position"] == 0 and bad["dimension"] == 1


def test_solving_the_delaying_arena():
    g = wp.gallery("fig5")
    arena = g["arena"]
    assert g["init"] == "v0"
    parity = wp.solve(arena, "parity")
    assert "v0" in parity["win1"]
    for lam in range(1, 7):
        for kind in ("fixpr", "fixwp"):
            for direct in (True, False):
                res = wp.solve(arena, kind, direct=direct, lam=lam)
                assert "v0" in res["win2"], (kind, direct, lam)
    bnd = wp.solve(arena, "bndwp")
    assert "v0" in bnd["win2"]
    assert bnd["threshold"] == 3


def test_synthesis_and_verification():
    arena = wp.gallery("fig6")["arena"]
    machine = wp.synthesize(arena, "fixpr", direct=True, lam=4, player=1)
    assert machine["memory"] >= 2
    verdict = wp.verify(arena, machine["text"], "fixpr", direct=True, lam=4, init="v0")
    assert verdict["winning"]


def test_classical_objectives():
    arena = wp.make_arena(
        [("a", 1, [0]), ("b", 2, [1])],
        [("a", "b"), ("b", "a"), ("b", "b")],
    )
    res = wp.solve(arena, "reach", targets=[["b"]])
    assert res["win1"] == ["a", "b"]
    res = wp.solve(arena, "genreach", targets=[["a"], ["b"]])
    assert "a" in res["win1"]


def test_random_and_cross_check():
    a = wp.random_arena(1, n=5, density=0.4)
    b = wp.random_arena(1, n=5, density=0.4)
    assert wp.write_game(a) == wp.write_game(b)
    report = wp.cross_check(0, 8, max_v=4, max_lambda=2)
    assert report["arenas"] == 8
    assert report["violations"] == []


def test_dot_export():
    arena = wp.gallery("fig5")["arena"]
    dot = wp.export_dot(arena)
    assert dot.count("shape=box") == 1
    assert "shape=circle" in dot
