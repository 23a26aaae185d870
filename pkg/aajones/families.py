"""
The seven labelled families of dual checkerboard graphs with a marked pair
(v1, v2) joined by the dealternator edge.

Families 1-3 are built from label vectors ``a`` and ``b`` of equal length
n + 1 and a scalar ``c``; each label is the multiplicity of its edge.  In
Families 4-7 a scalar label counts the crossings added to the drawn single
edge, so that edge has multiplicity label + 1, and a vector label is a
series path whose entries are the multiplicities of its edges.

Every graph carries coordinates taken from the drawings, which give a plane
rotation system: the dealternator leaves v1 heading west and enters v2 from
the east, passing below everything else.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from aajones.checkerboard import AAPathStats, GraphStats, SimplifiedGraph, aa_path_stats, graph_stats
from aajones.errors import ParamError

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

_EPS = 1e-3


@dataclass(frozen=True)
class FamilyEdge:
    u: str
    v: str
    multiplicity: int
    # points the drawn edge heads towards when leaving u and when arriving at v
    leave: Optional[Point] = None
    arrive: Optional[Point] = None


@dataclass
class FamilyGraph:
    family_id: int
    params: Dict[str, object]
    positions: Dict[str, Point]
    edges: List[FamilyEdge]
    marked: Tuple[str, str] = ("v1", "v2")
    dealternator: Tuple[str, str] = field(default=("v1", "v2"))

    def multi_edges(self) -> List[Tuple[str, str]]:
        """Parallel edges expanded; the dealternator is the last entry."""
        expanded = [(e.u, e.v) for e in self.edges for _ in range(e.multiplicity)]
        return expanded + [self.dealternator]

    @property
    def dealternator_index(self) -> int:
        return len(self.multi_edges()) - 1

    def simplified(self) -> SimplifiedGraph:
        g = nx.Graph()
        g.add_nodes_from(self.positions)
        for e in self.edges:
            g.add_edge(e.u, e.v, multiplicity=e.multiplicity)
        g.add_edge(*self.dealternator, multiplicity=1)
        return SimplifiedGraph(g, 0)

    def stats(self) -> Tuple[GraphStats, AAPathStats]:
        simple = self.simplified()
        return graph_stats(simple), aa_path_stats(simple, *self.marked)

    def identity_holds(self) -> bool:
        """Families 1-3 have Q = beta1; Families 4-7 have beta1 = P0 + S + 1."""
        gs, ps = self.stats()
        if self.family_id <= 3:
            return ps.Q == gs.beta1
        return gs.beta1 == ps.P0 + ps.S + 1

    def rotation(self) -> Dict[str, List[int]]:
        """Counterclockwise order of ``multi_edges()`` indices around every vertex."""
        ends: Dict[str, List[Tuple[float, int]]] = {name: [] for name in self.positions}
        index = 0
        for e in self.edges:
            out = _angle(self.positions[e.u], e.leave or self.positions[e.v])
            back = _angle(self.positions[e.v], e.arrive or self.positions[e.u])
            for j in range(e.multiplicity):
                # parallel copies nest: consecutive at u, reversed at v
                ends[e.u].append((out + _EPS * j, index))
                ends[e.v].append((back - _EPS * j, index))
                index += 1
        u, v = self.dealternator
        ends[u].append((math.pi, index))
        ends[v].append((0.0, index))
        return {
            name: [k for _, k in sorted((a % (2 * math.pi), k) for a, k in spokes)]
            for name, spokes in ends.items()
        }


def _angle(origin: Point, target: Point) -> float:
    return math.atan2(target[1] - origin[1], target[0] - origin[0])


# -------------------------------- parameter checks
def _label(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ParamError(f"label {name} must be an integer >= 1, got {value!r}")
    return value


def _vector(name: str, value, min_length: int = 1) -> List[int]:
    if value is None or isinstance(value, (int, str)):
        raise ParamError(f"label vector {name} must be a sequence of integers")
    values = list(value)
    if len(values) < min_length:
        raise ParamError(f"label vector {name} needs at least {min_length} entries")
    return [_label(f"{name}[{i}]", x) for i, x in enumerate(values)]


# -------------------------------- Families 1-3
def _fan(a: Sequence[int], b: Sequence[int], x_label: int, positions, edges) -> None:
    """x joined to v1 and to y_0..y_n, each y_i joined to v2; y_n on the axis, y_0 on top."""
    n = len(a) - 1
    positions.update({"v1": (0.0, 0.0), "x": (1.0, 0.0), "v2": (3.0, 0.0)})
    edges.append(FamilyEdge("v1", "x", x_label))
    for i in range(n + 1):
        height = 3.0 * (n - i) / n if n else 0.0
        name = f"y{i}"
        positions[name] = (2.0, height)
        edges.append(FamilyEdge("x", name, a[i]))
        edges.append(FamilyEdge(name, "v2", b[i]))


def _fan_labels(a, b) -> Tuple[List[int], List[int]]:
    a = _vector("a", a)
    b = _vector("b", b)
    if len(a) != len(b):
        raise ParamError(f"vectors a and b must have equal length, got {len(a)} and {len(b)}")
    return a, b


def _family1(a, b, c) -> FamilyGraph:
    a, b = _fan_labels(a, b)
    c = _label("c", c)
    positions: Dict[str, Point] = {}
    edges: List[FamilyEdge] = []
    _fan(a, b, 1, positions, edges)
    positions.update({"w1": (1.0, -1.0), "w2": (2.0, -1.0)})
    edges += [
        FamilyEdge("v1", "w1", 1),
        FamilyEdge("w1", "w2", 1),
        FamilyEdge("w2", "v2", c),
    ]
    return FamilyGraph(1, {"a": a, "b": b, "c": c}, positions, edges)


def _family2(a, b, c) -> FamilyGraph:
    a, b = _fan_labels(a, b)
    c = _label("c", c)
    positions: Dict[str, Point] = {}
    edges: List[FamilyEdge] = []
    _fan(a, b, c, positions, edges)
    return FamilyGraph(2, {"a": a, "b": b, "c": c}, positions, edges)


def _family3(a, b, c) -> FamilyGraph:
    a, b = _fan_labels(a, b)
    c = _label("c", c)
    positions: Dict[str, Point] = {}
    edges: List[FamilyEdge] = []
    _fan(a, b, 1, positions, edges)
    positions["w"] = (1.0, -1.0)
    edges += [
        FamilyEdge("v1", "w", 1),
        FamilyEdge("w", f"y{len(a) - 1}", c),
    ]
    return FamilyGraph(3, {"a": a, "b": b, "c": c}, positions, edges)


# -------------------------------- Families 4-7
_DIAMOND = {"v1": (0.0, 0.0), "top": (1.0, 1.0), "v2": (2.0, 0.0), "bot": (1.0, -1.0)}
# the circled series path runs outside the straight top-v2 edge
_SERIES_ROUTE = [(1.0, 1.0), (1.4, 1.0), (1.8, 0.8), (2.0, 0.4), (2.0, 0.0)]


def _diamond(bottom_label: int, rounded: bool) -> Tuple[Dict[str, Point], List[FamilyEdge]]:
    positions = dict(_DIAMOND)
    bend = (1.4, 0.4) if rounded else None
    edges = [
        FamilyEdge("v1", "top", 1),
        FamilyEdge("v1", "bot", 1),
        FamilyEdge("top", "v2", 1, leave=bend, arrive=bend),
        FamilyEdge("bot", "v2", bottom_label),
    ]
    return positions, edges


def _series(vector: List[int], positions: Dict[str, Point], edges: List[FamilyEdge]) -> None:
    """A path top -> s1 -> ... -> v2 along the drawn route, one edge per vector entry."""
    stops = len(vector)
    lengths = [math.dist(p, q) for p, q in zip(_SERIES_ROUTE, _SERIES_ROUTE[1:])]
    total = sum(lengths)
    names = ["top"]
    for k in range(1, stops):
        target = total * k / stops
        for (p, q), seg in zip(zip(_SERIES_ROUTE, _SERIES_ROUTE[1:]), lengths):
            if target <= seg:
                frac = target / seg
                point = (p[0] + frac * (q[0] - p[0]), p[1] + frac * (q[1] - p[1]))
                break
            target -= seg
        name = f"s{k}"
        positions[name] = point
        names.append(name)
    names.append("v2")
    for (u, v), m in zip(zip(names, names[1:]), vector):
        edges.append(FamilyEdge(u, v, m))


def _family4(a) -> FamilyGraph:
    a = _label("a", a)
    positions, edges = _diamond(a + 1, rounded=False)
    return FamilyGraph(4, {"a": a}, positions, edges)


def _family5(a) -> FamilyGraph:
    a = _vector("a", a, min_length=2)
    positions, edges = _diamond(1, rounded=True)
    _series(a, positions, edges)
    return FamilyGraph(5, {"a": a}, positions, edges)


def _family6(a, b) -> FamilyGraph:
    a = _label("a", a)
    b = _label("b", b)
    positions, edges = _diamond(b + 1, rounded=False)
    edges.append(FamilyEdge("top", "bot", a + 1))
    return FamilyGraph(6, {"a": a, "b": b}, positions, edges)


def _family7(a, b) -> FamilyGraph:
    a = _label("a", a)
    b = _vector("b", b, min_length=2)
    positions, edges = _diamond(1, rounded=True)
    edges.append(FamilyEdge("top", "bot", a + 1))
    _series(b, positions, edges)
    return FamilyGraph(7, {"a": a, "b": b}, positions, edges)


def family_graph(family_id: int, a=None, b=None, c=None) -> FamilyGraph:
    """
    Build a family graph from its labels.

    Families 1-3 take vectors ``a``, ``b`` and a scalar ``c``; Family 4 a
    scalar ``a``; Family 5 a vector ``a``; Family 6 scalars ``a``, ``b``;
    Family 7 a scalar ``a`` and a vector ``b``.
    """
    builders = {
        1: lambda: _family1(a, b, c),
        2: lambda: _family2(a, b, c),
        3: lambda: _family3(a, b, c),
        4: lambda: _family4(a),
        5: lambda: _family5(a),
        6: lambda: _family6(a, b),
        7: lambda: _family7(a, b),
    }
    if family_id not in builders:
        raise ParamError(f"family id must be 1..7, got {family_id!r}")
    graph = builders[family_id]()
    logger.debug(
        "family %d with %s: %d vertices, %d edges",
        family_id,
        graph.params,
        len(graph.positions),
        len(graph.multi_edges()),
    )
    return graph


__all__ = ["FamilyEdge", "FamilyGraph", "family_graph"]
