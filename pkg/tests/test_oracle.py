import json
import re
from fractions import Fraction

import pytest

from bouncing_tower.oracle import (
    DEFAULT_CAP,
    FixedDiskConstraint,
    ScaleCapError,
    bfs_distance,
    build_graph,
    code_to_word,
    export_graph,
    oracle_cap,
    restricted_reachability,
    shortest_path,
    shortest_path_count,
    verify_solver,
    word_to_code,
)
from bouncing_tower.rules import (
    BOUNCING,
    HANOI,
    Configuration,
    RuleSet,
    all_configurations,
    apply_move,
    legal_moves,
    replay,
)

from helpers import stack_bfs, two_peg_setup

ALPHAS = [Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)]


def test_code_round_trip():
    for c in all_configurations(4):
        assert code_to_word(word_to_code(c.word), 4) == c.word
    assert word_to_code("AAA") == 0
    assert word_to_code("CCC") == 26
    assert word_to_code("BAA") == 9


class TestBuild:
    def test_single_disk(self):
        g = build_graph(1, BOUNCING)
        assert g.vertex_count == 3
        assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_two_disks_degree(self):
        g = build_graph(2, BOUNCING)
        assert g.vertex_count == 9
        assert g.degree(word_to_code("AA")) == 2

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_rules(self, n, alpha):
        rules = RuleSet(alpha)
        g = build_graph(n, rules)
        assert g.vertex_count == 3**n
        for c in all_configurations(n):
            expected = {word_to_code(apply_move(c, m, rules).word) for m in legal_moves(c, rules)}
            assert set(g.neighbours(word_to_code(c.word))) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_symmetric(self, n):
        g = build_graph(n, BOUNCING)
        for u in range(g.vertex_count):
            for v in g.neighbours(u):
                assert u in g.neighbours(v)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_degree_at_most_five(self, n):
        g = build_graph(n, BOUNCING)
        assert max(g.degree(v) for v in range(g.vertex_count)) <= 5

    def test_cap(self):
        with pytest.raises(ScaleCapError):
            build_graph(DEFAULT_CAP + 1, BOUNCING)
        assert build_graph(3, BOUNCING, cap=3).vertex_count == 27

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("BOUNCING_TOWER_ORACLE_CAP", "4")
        assert oracle_cap() == 4
        with pytest.raises(ScaleCapError):
            build_graph(5, BOUNCING)

    def test_unknown_word(self):
        g = build_graph(2, BOUNCING)
        with pytest.raises(ValueError):
            bfs_distance(g, "AA", "CCC")


class TestDistances:
    def test_bouncing_three(self):
        g = build_graph(3, BOUNCING)
        assert bfs_distance(g, "AAA", "CCC") == 5

    def test_trivial(self):
        g = build_graph(0, BOUNCING)
        assert bfs_distance(g, "", "") == 0
        assert shortest_path_count(g, "", "") == 1

    @pytest.mark.parametrize("n", range(0, 10))
    def test_hanoi(self, n):
        g = build_graph(n, HANOI)
        assert bfs_distance(g, "A" * n, "C" * n) == 2**n - 1
        assert shortest_path_count(g, "A" * n, "C" * n) == 1

    def test_count_four(self):
        g = build_graph(4, BOUNCING)
        assert shortest_path_count(g, "AAAA", "CCCC") == 1

    # (distance, number of shortest paths) from A^n to C^n at alpha=1/2
    OBSERVED = {5: (15, 1), 6: (27, 9), 7: (45, 4), 8: (73, 9)}

    @pytest.mark.parametrize("n", sorted(OBSERVED))
    def test_bouncing_observed(self, n):
        g = build_graph(n, BOUNCING)
        assert (bfs_distance(g, "A" * n, "C" * n), shortest_path_count(g, "A" * n, "C" * n)) == self.OBSERVED[n]

    @pytest.mark.parametrize("n", range(0, 8))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_against_stack_simulator(self, n, alpha):
        g = build_graph(n, RuleSet(alpha))
        s, t = "A" * n, "C" * n
        assert (bfs_distance(g, s, t), shortest_path_count(g, s, t)) == stack_bfs(n, alpha)

    def test_unreachable(self):
        pins = FixedDiskConstraint.of([(1, "A")])
        g = build_graph(2, BOUNCING, constraint=pins)
        assert bfs_distance(g, "AA", "CC") is None
        assert shortest_path_count(g, "AA", "CC") == 0
        assert shortest_path(g, "AA", "CC") is None

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_shortest_path_replays(self, alpha):
        rules = RuleSet(alpha)
        g = build_graph(6, rules)
        path = shortest_path(g, "AAAAAA", "CCCCCC")
        assert len(path) == bfs_distance(g, "AAAAAA", "CCCCCC")
        assert replay(Configuration.tower(6), path, rules).word == "CCCCCC"


class TestVerifySolver:
    def test_bouncing_five(self):
        r = verify_solver(5, "bouncing")
        assert r.ok and r.trace_len == r.bfs_len == 15 and r.unique

    def test_hanoi(self):
        assert verify_solver(6, "hanoi").ok

    def test_bouncing_eight_reports_gap(self):
        r = verify_solver(8, "bouncing")
        assert (r.trace_len, r.bfs_len, r.unique, r.legal, r.terminal) == (81, 73, False, True, True)
        assert not r.ok
        assert r.summary().startswith("FAIL n=8")

    def test_alt_is_not_optimal(self):
        # the alternative only costs extra once a 010 sub-call moves 4 or more disks
        assert verify_solver(6, "alt").trace_len == 27
        r = verify_solver(7, "alt")
        assert r.legal and r.terminal and r.trace_len == 49 > r.bfs_len == 45


def _disconnected_pair(n):
    return "C" + "A" * (n - 3) + "B" + "A", "C" + "B" * (n - 2) + "A"


class TestReachability:
    @pytest.mark.parametrize("n", range(5, 9))
    def test_inaccessible_states(self, n):
        reach = restricted_reachability(n, BOUNCING, "A" * n)
        for w in ("B" + "C" * (n - 3) + "AA", "C" + "B" * (n - 3) + "AA"):
            assert w not in reach
            # isolated vertex: no legal move in or out
            assert legal_moves(Configuration.from_word(w), BOUNCING) == []

    def test_inaccessible_states_small_n_connected(self):
        reach = restricted_reachability(4, BOUNCING, "AAAA")
        assert "BCAA" in reach

    @pytest.mark.parametrize("n", range(5, 9))
    def test_disconnected_part(self, n):
        u, v = _disconnected_pair(n)
        pins = FixedDiskConstraint.of([(1, "A"), (2, "B"), (n, "C")])
        assert v not in restricted_reachability(n, BOUNCING, u, pins)
        assert u not in restricted_reachability(n, BOUNCING, v, pins)

    def test_disconnected_part_joined_at_four(self):
        u, v = _disconnected_pair(4)
        pins = FixedDiskConstraint.of([(1, "A"), (2, "B"), (4, "C")])
        assert v in restricted_reachability(4, BOUNCING, u, pins)

    def test_unconstrained_is_component(self):
        assert len(restricted_reachability(3, BOUNCING, "AAA")) == 27

    def test_pin_violated_by_start(self):
        pins = FixedDiskConstraint.of([(1, "B")])
        with pytest.raises(ValueError):
            restricted_reachability(2, BOUNCING, "AA", pins)

    def test_same_parity_two_disks_blocked(self):
        start, goal, fixed = two_peg_setup(4, 2, 0)
        pins = FixedDiskConstraint.of((d, start.peg_of(d)) for d in fixed)
        assert goal.word not in restricted_reachability(start.n, BOUNCING, start.word, pins, ["B"])


def _transfer_possible(height, moving, fixed_on_target):
    start, goal, fixed = two_peg_setup(height, moving, fixed_on_target)
    pins = FixedDiskConstraint.of((d, start.peg_of(d)) for d in fixed)
    return goal.word in restricted_reachability(start.n, BOUNCING, start.word, pins, ["B"])


@pytest.mark.parametrize("height", range(1, 7))
@pytest.mark.parametrize("fixed_on_target", range(0, 4))
def test_two_peg_transfer_limits(height, fixed_on_target):
    for moving in range(1, height + 1):
        # disks left behind on the source are its fixed disks
        same = (height - moving) % 2 == fixed_on_target % 2
        limit = 1 if same else 2
        assert _transfer_possible(height, moving, fixed_on_target) == (moving <= limit), moving


class TestExport:
    def test_dot_single(self):
        out = export_graph(build_graph(1, BOUNCING), "dot")
        assert out.startswith("graph G {\n")
        assert len(re.findall(r" -- ", out)) == 3
        assert '"A" -- "B"' in out

    def test_json_two(self):
        g = build_graph(2, BOUNCING)
        doc = json.loads(export_graph(g, "json"))
        assert doc["n"] == 2 and doc["alpha"] == "1/2"
        assert doc["nodes"] == sorted(doc["nodes"]) and len(doc["nodes"]) == 9
        edges = {tuple(e) for e in doc["edges"]}
        for i, w in enumerate(doc["nodes"]):
            c = Configuration.from_word(w)
            for m in legal_moves(c, BOUNCING):
                j = doc["nodes"].index(apply_move(c, m, BOUNCING).word)
                assert (min(i, j), max(i, j)) in edges
        assert len(edges) == sum(len(legal_moves(Configuration.from_word(w), BOUNCING)) for w in doc["nodes"]) // 2

    @pytest.mark.parametrize("fmt", ["dot", "json"])
    def test_deterministic(self, fmt):
        assert export_graph(build_graph(4, BOUNCING), fmt) == export_graph(build_graph(4, BOUNCING), fmt)

    def test_bad_format(self):
        with pytest.raises(ValueError):
            export_graph(build_graph(1, BOUNCING), "xml")
