from __future__ import annotations

import itertools
import random

import pytest

from conftest import load_fixture
from evac.world import (
    DIRECTIONS,
    UnknownNode,
    build_graph,
    direction_between,
    relative_options,
    reverse,
    rotate,
    shortest_path,
    turn_left,
    turn_right,
)


def test_turn_algebra():
    for h in DIRECTIONS:
        assert turn_left(turn_left(h)) == reverse(h)
        assert turn_right(h) == turn_left(turn_left(turn_left(h)))
        assert rotate(h, "straight") == h


def test_direction_between():
    assert direction_between((0, 0), (3, 0)) == "E"
    assert direction_between((0, 0), (0, 2)) == "N"
    assert direction_between((5, 1), (2, 1)) == "W"
    assert direction_between((0, 4), (0, 1)) == "S"
    with pytest.raises(ValueError):
        direction_between((0, 0), (1, 1))


def test_center_crossing_options():
    # 3x3 lattice, center node n11, heading east: left goes north, straight
    # east, right south (enumerated from the lattice geometry).
    graph = build_graph(load_fixture("grid3x3"))
    options = relative_options(graph, "n11", "E")
    assert options == {
        "left": ("ev11", "N"),
        "straight": ("eh11", "E"),
        "right": ("ev10", "S"),
    }


def test_dead_end_has_no_options():
    graph = build_graph(load_fixture("micro_deadend"))
    # d2 is degree-1, reached heading east along its only edge.
    assert relative_options(graph, "d2", "E") == {}


def test_corner_offers_only_the_southbound_turn():
    # Top-right corner n22 entered heading east: neighbors lie west and
    # south, so the only legal move is a right turn onto ev21.
    graph = build_graph(load_fixture("grid3x3"))
    assert relative_options(graph, "n22", "E") == {"right": ("ev21", "S")}


def test_unknown_node_raises():
    graph = build_graph(load_fixture("minimal"))
    with pytest.raises(UnknownNode):
        relative_options(graph, "nope", "E")
    with pytest.raises(UnknownNode):
        shortest_path(graph, "n0", "nope")


def test_adjacency_is_symmetric_and_degree_consistent():
    for name in ("grid3x3", "trap", "firetrap", "straightline"):
        graph = build_graph(load_fixture(name))
        for node, out in graph.adjacency.items():
            assert graph.degree(node) == len(out)
            for adj in out:
                back = [a for a in graph.adjacency[adj.neighbor] if a.edge == adj.edge]
                assert len(back) == 1
                assert back[0].neighbor == node
                assert back[0].direction == reverse(adj.direction)


def test_no_option_points_back():
    # The traversed edge is never offered again from the far side.
    for name in ("grid3x3", "grid4x4", "trap", "firetrap"):
        graph = build_graph(load_fixture(name))
        for node in graph.nodes:
            for heading in DIRECTIONS:
                options = relative_options(graph, node, heading)
                edges = [e for e, _ in options.values()]
                assert len(edges) == len(set(edges))
                for edge, new_heading in options.values():
                    neighbor = graph.other_end(edge, node)
                    onward = relative_options(graph, neighbor, new_heading)
                    assert edge not in [e for e, _ in onward.values()]


def test_shortest_path_trivial_and_disconnected():
    graph = build_graph(load_fixture("grid3x3"))
    assert shortest_path(graph, "n11", "n11") == []
    # Close both edges incident to the target corner.
    assert shortest_path(graph, "n00", "n22", closed={"eh12", "ev21"}) is None


def test_lattice_corner_to_corner_is_four_unit_edges():
    graph = build_graph(load_fixture("grid3x3"))
    path = shortest_path(graph, "n00", "n22")
    assert path is not None
    assert sum(graph.edges[e].length for e in path) == 4


def test_shortest_path_symmetric_lengths():
    rng = random.Random(11)
    for name in ("grid3x3", "grid4x4", "trap", "firetrap", "straightline"):
        graph = build_graph(load_fixture(name))
        nodes = sorted(graph.nodes)
        for _ in range(10):
            a, b = rng.choice(nodes), rng.choice(nodes)
            fwd = shortest_path(graph, a, b)
            back = shortest_path(graph, b, a)
            if fwd is None:
                assert back is None
                continue
            total = lambda p: sum(graph.edges[e].length for e in p)
            assert total(fwd) == total(back)


def _all_simple_paths(graph, src, dst, closed):
    """Brute-force enumeration used as the shortest-path oracle."""
    results = []

    def walk(node, visited, edges, cost):
        if node == dst:
            results.append((cost, tuple(edges)))
            return
        for adj in graph.adjacency[node]:
            if adj.edge in closed or adj.neighbor in visited:
                continue
            walk(
                adj.neighbor,
                visited | {adj.neighbor},
                edges + [adj.edge],
                cost + graph.edges[adj.edge].length,
            )

    walk(src, {src}, [], 0)
    return results


@pytest.mark.parametrize("name", ["minimal", "grid2x2", "grid3x3", "trap", "firetrap", "micro_deadend"])
def test_shortest_path_matches_brute_force(name):
    # Oracle equivalence on every graph small enough to enumerate all simple
    # paths, including the deterministic edge-id tie-break.
    graph = build_graph(load_fixture(name))
    nodes = sorted(graph.nodes)
    edge_ids = sorted(graph.edges)
    rng = random.Random(7)
    closures = [frozenset()] + [frozenset(rng.sample(edge_ids, min(2, len(edge_ids)))) for _ in range(3)]
    for src, dst in itertools.product(nodes, nodes):
        for closed in closures:
            got = shortest_path(graph, src, dst, closed)
            candidates = _all_simple_paths(graph, src, dst, closed)
            if not candidates:
                assert got is None
                continue
            best_cost = min(c for c, _ in candidates)
            best = min(p for c, p in candidates if c == best_cost)
            assert got is not None
            assert sum(graph.edges[e].length for e in got) == best_cost
            assert tuple(got) == best
