"""Road-network queries: headings, turn options at intersections, shortest paths.

The map is an undirected graph of axis-aligned road segments. Every edge runs
due north/south or due east/west between two intersections, so "left",
"straight" and "right" are exact rotations of the current heading and never
need angle arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional

if TYPE_CHECKING:
    from .scenario import ScenarioSpec

DIRECTIONS = ("N", "E", "S", "W")

# Facing north, your left hand points west.
_LEFT = {"N": "W", "W": "S", "S": "E", "E": "N"}
_RIGHT = {v: k for k, v in _LEFT.items()}
_REVERSE = {"N": "S", "S": "N", "E": "W", "W": "E"}

TURN_LEFT = "left"
TURN_STRAIGHT = "straight"
TURN_RIGHT = "right"
TURNS = (TURN_LEFT, TURN_STRAIGHT, TURN_RIGHT)


class UnknownNode(KeyError):
    """Raised when a query names a node id the graph does not contain."""


def turn_left(heading: str) -> str:
    return _LEFT[heading]


def turn_right(heading: str) -> str:
    return _RIGHT[heading]


def reverse(heading: str) -> str:
    return _REVERSE[heading]


def rotate(heading: str, turn: str) -> str:
    """Absolute direction you face after taking `turn` from `heading`."""
    if turn == TURN_LEFT:
        return _LEFT[heading]
    if turn == TURN_RIGHT:
        return _RIGHT[heading]
    if turn == TURN_STRAIGHT:
        return heading
    raise ValueError(f"unknown turn {turn!r}")


def direction_between(a_pos: tuple[int, int], b_pos: tuple[int, int]) -> str:
    """Cardinal direction from a to b; positions must share exactly one axis."""
    ax, ay = a_pos
    bx, by = b_pos
    if ax == bx and ay != by:
        return "N" if by > ay else "S"
    if ay == by and ax != bx:
        return "E" if bx > ax else "W"
    raise ValueError(f"positions {a_pos} and {b_pos} are not axis-aligned")


@dataclass(frozen=True)
class Adjacent:
    edge: str
    neighbor: str
    direction: str


class RoadGraph:
    """Immutable-after-build adjacency view of a scenario's road network."""

    def __init__(self, spec: "ScenarioSpec") -> None:
        self.nodes = {n.id: n for n in spec.nodes}
        self.edges = {e.id: e for e in spec.edges}
        self.exit_node = spec.exit
        self.shelters = frozenset(spec.shelters)
        adjacency: dict[str, list[Adjacent]] = {n: [] for n in self.nodes}
        for edge in spec.edges:
            a = self.nodes[edge.a]
            b = self.nodes[edge.b]
            adjacency[edge.a].append(Adjacent(edge.id, edge.b, direction_between(a.pos, b.pos)))
            adjacency[edge.b].append(Adjacent(edge.id, edge.a, direction_between(b.pos, a.pos)))
        self.adjacency = {n: tuple(sorted(out, key=lambda x: x.edge)) for n, out in adjacency.items()}

    def degree(self, node: str) -> int:
        return len(self._adjacent(node))

    def edge_length(self, edge_id: str) -> int:
        return self.edges[edge_id].length

    def other_end(self, edge_id: str, node: str) -> str:
        edge = self.edges[edge_id]
        return edge.b if node == edge.a else edge.a

    def edge_direction(self, edge_id: str, from_node: str) -> str:
        """Direction of travel when entering `edge_id` from `from_node`."""
        for adj in self._adjacent(from_node):
            if adj.edge == edge_id:
                return adj.direction
        raise UnknownNode(f"edge {edge_id} is not incident to node {from_node}")

    def _adjacent(self, node: str) -> tuple[Adjacent, ...]:
        try:
            return self.adjacency[node]
        except KeyError:
            raise UnknownNode(node) from None


def build_graph(spec: "ScenarioSpec") -> RoadGraph:
    return RoadGraph(spec)


def relative_options(graph: RoadGraph, node: str, heading: str) -> dict[str, tuple[str, str]]:
    """Turns available at `node` for a vehicle that arrived facing `heading`.

    Maps left/straight/right to (edge id, new heading). The edge pointing back
    the way the vehicle came is never offered: there is no U-turn.
    """
    options: dict[str, tuple[str, str]] = {}
    back = reverse(heading)
    for adj in graph._adjacent(node):
        if adj.direction == back:
            continue
        for turn in TURNS:
            if adj.direction == rotate(heading, turn):
                options[turn] = (adj.edge, adj.direction)
    return options


def shortest_path(
    graph: RoadGraph,
    src: str,
    dst: str,
    closed: Optional[Iterable[str]] = None,
) -> Optional[list[str]]:
    """Minimum total-length edge route from src to dst avoiding closed edges.

    Ties are broken toward the lexicographically smallest edge-id sequence so
    repeated queries (and replays that depend on them) are bit-stable. Returns
    None when dst is unreachable, [] when src == dst.
    """
    if src not in graph.nodes:
        raise UnknownNode(src)
    if dst not in graph.nodes:
        raise UnknownNode(dst)
    blocked = frozenset(closed or ())
    # Heap entries carry the full edge sequence; tuple comparison gives the
    # edge-id tie-break at equal cost.
    heap: list[tuple[int, tuple[str, ...], str]] = [(0, (), src)]
    settled: set[str] = set()
    while heap:
        dist, path, node = heapq.heappop(heap)
        if node in settled:
            continue
        if node == dst:
            return list(path)
        settled.add(node)
        for adj in graph.adjacency[node]:
            if adj.edge in blocked or adj.neighbor in settled:
                continue
            length = graph.edges[adj.edge].length
            heapq.heappush(heap, (dist + length, path + (adj.edge,), adj.neighbor))
    return None
