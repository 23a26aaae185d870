"""
Checkerboard (Tait) graphs of a connected diagram and their statistics.

Faces are two-coloured with the unbounded face unshaded.  Each colour class
gives a graph whose vertices are that class's faces and whose edges are the
crossings.  At crossing ``i`` the class owning corners 0 and 2 sees an
A-edge (the A-smoothing keeps those two corners apart); the other class sees
a B-edge.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from aajones.diagram import FaceSet, LinkDiagram, faces
from aajones.errors import InternalError, NotApplicableError, SplitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TaitEdge:
    u: int
    v: int
    crossing: int
    kind: str  # "A" or "B"

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class TaitGraph:
    shaded: bool
    vertices: Tuple[int, ...]
    edges: Tuple[TaitEdge, ...]
    dealternator_edge: Optional[int] = None

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    def edge_for(self, crossing: int) -> TaitEdge:
        for edge in self.edges:
            if edge.crossing == crossing:
                return edge
        raise KeyError(crossing)

    def loops(self) -> List[TaitEdge]:
        return [edge for edge in self.edges if edge.is_loop]

    def a_edge_count(self) -> int:
        return sum(1 for edge in self.edges if edge.kind == "A")

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for edge in self.edges:
            g.add_edge(
                edge.u,
                edge.v,
                key=edge.crossing,
                kind=edge.kind,
                dealternator=edge.crossing == self.dealternator_edge,
            )
        return g


@dataclass(frozen=True)
class SimplifiedGraph:
    """Loop-free simple graph; edge attribute ``multiplicity`` counts merged parallels."""

    graph: nx.Graph
    loops_removed: int

    def multiplicity(self, u: int, v: int) -> int:
        return self.graph.edges[u, v]["multiplicity"]

    def __contains__(self, vertex) -> bool:
        return vertex in self.graph


@dataclass(frozen=True)
class GraphStats:
    v: int
    e: int
    mu: int
    tau: int
    beta1: int


@dataclass(frozen=True)
class AAPathStats:
    P: int
    P0: int
    P1: int
    P2: int
    Q: int
    S: int


# -------------------------------- colouring
def face_colors(d: LinkDiagram) -> Tuple[FaceSet, List[int]]:
    """Two-colour the faces; opposite sides of every arc differ, unbounded face is 0."""
    fs = faces(d)
    colors: List[Optional[int]] = [None] * len(fs)
    colors[fs.unbounded_face_index] = 0
    queue = deque([fs.unbounded_face_index])
    while queue:
        f = queue.popleft()
        for i, p in fs.faces[f].corners:
            for q in ((p + 1) % 4, (p + 3) % 4):
                g = fs.face_of((i, q))
                if colors[g] is None:
                    colors[g] = 1 - colors[f]
                    queue.append(g)
                elif colors[g] == colors[f]:
                    raise InternalError("face adjacency is not two-colourable")
    if any(c is None for c in colors):
        raise InternalError("face colouring did not reach every face")
    return fs, colors


def tait_graphs(d: LinkDiagram, dealternator: Optional[int] = None) -> Tuple[TaitGraph, TaitGraph]:
    """
    Return (G, Gbar).

    G is the colour class with more A-edges, so for an alternating diagram it
    is the all-A graph whichever class is shaded.  When both classes have the
    same number of A-edges, G is the shaded class.  With a dealternator, G is
    the graph in which every other crossing is an A-edge.
    """
    fs, colors = face_colors(d)
    built = {}
    for color in (0, 1):
        edges = []
        for i in range(d.c):
            if colors[fs.face_of((i, 0))] == color:
                ends, kind = (0, 2), "A"
            else:
                ends, kind = (1, 3), "B"
            u, v = sorted(fs.face_of((i, p)) for p in ends)
            edges.append(TaitEdge(u, v, i, kind))
        vertices = tuple(k for k, c in enumerate(colors) if c == color)
        built[color] = TaitGraph(bool(color), vertices, tuple(edges), dealternator)

    if dealternator is not None:
        for color in (1, 0):
            others = [e for e in built[color].edges if e.crossing != dealternator]
            if all(e.kind == "A" for e in others):
                return built[color], built[1 - color]
        raise NotApplicableError(f"crossing {dealternator} is not a dealternator")
    if built[0].a_edge_count() > built[1].a_edge_count():
        return built[0], built[1]
    return built[1], built[0]


def dump(g: TaitGraph) -> str:
    """Adjacency text: one line per vertex pair, multiplicity, edge kinds and the dealternator mark."""
    lines = [f"{'shaded' if g.shaded else 'unshaded'} v={g.v} e={g.e}"]
    grouped: Dict[Tuple[int, int], List[TaitEdge]] = {}
    for edge in g.edges:
        grouped.setdefault((edge.u, edge.v), []).append(edge)
    for (u, v), edges in sorted(grouped.items()):
        kinds = "".join(sorted(e.kind for e in edges))
        mark = " D" if any(e.crossing == g.dealternator_edge for e in edges) else ""
        crossings = ",".join(str(e.crossing) for e in sorted(edges, key=lambda e: e.crossing))
        lines.append(f"  f{u} -- f{v} x{len(edges)} {kinds} [{crossings}]{mark}")
    return "\n".join(lines)


# -------------------------------- simplification and statistics
def simplify(g: TaitGraph) -> SimplifiedGraph:
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    loops = 0
    for edge in g.edges:
        if edge.is_loop:
            loops += 1
            continue
        if simple.has_edge(edge.u, edge.v):
            simple.edges[edge.u, edge.v]["multiplicity"] += 1
        else:
            simple.add_edge(edge.u, edge.v, multiplicity=1)
    return SimplifiedGraph(simple, loops)


def graph_stats(g: SimplifiedGraph) -> GraphStats:
    graph = g.graph
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise SplitError("graph statistics need a connected graph")
    v = graph.number_of_nodes()
    e = graph.number_of_edges()
    mu = sum(1 for _, _, m in graph.edges(data="multiplicity") if m >= 2)
    tau = sum(nx.triangles(graph).values()) // 3
    return GraphStats(v=v, e=e, mu=mu, tau=tau, beta1=e - v + 1)


def aa_path_stats(g: SimplifiedGraph, x1, x2) -> AAPathStats:
    """
    Short-path census between the marked vertices of a simplification.

    P counts length-two paths, split into P0/P1/P2 by how many of the two
    edges are merged parallels; Q counts length-three paths whose interior
    vertices are not both-adjacent; S counts K4 subgraphs through both marks.
    """
    graph = g.graph
    for x in (x1, x2):
        if x not in graph:
            raise IndexError(f"marked vertex {x} is not in the graph")
    if x1 == x2:
        raise ValueError("marked vertices must be distinct")

    n1 = set(graph[x1]) - {x1, x2}
    n2 = set(graph[x2]) - {x1, x2}
    common = n1 & n2
    split = [0, 0, 0]
    for y in common:
        heavy = (g.multiplicity(x1, y) >= 2) + (g.multiplicity(y, x2) >= 2)
        split[heavy] += 1

    q = 0
    for y in n1 - common:
        for z in n2 - common:
            if y != z and graph.has_edge(y, z):
                q += 1

    s = 0
    if graph.has_edge(x1, x2):
        s = sum(1 for y, z in combinations(sorted(common), 2) if graph.has_edge(y, z))

    return AAPathStats(P=len(common), P0=split[0], P1=split[1], P2=split[2], Q=q, S=s)


__all__ = [
    "TaitEdge",
    "TaitGraph",
    "SimplifiedGraph",
    "GraphStats",
    "AAPathStats",
    "face_colors",
    "tait_graphs",
    "dump",
    "simplify",
    "graph_stats",
    "aa_path_stats",
]
