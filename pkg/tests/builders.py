"""
Test-only diagram builders and brute-force oracles.

Random plane multigraphs are grown from a cycle by splitting faces and
subdividing edges, which keeps them 2-edge-connected and loop-free.  Their
medial diagrams with every crossing an A-edge are reduced alternating
diagrams whose checkerboard graph is the input graph.
"""

import random
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import networkx as nx
import sympy
from hypothesis import strategies as st

from aajones.diagram import LinkDiagram, flip_crossing

Edge = Tuple[object, object]


# -------------------------------- plane multigraphs
class PlaneGraph:
    """Multigraph with a rotation system: ``rotation[w]`` lists edge ids counterclockwise."""

    def __init__(self, edges: Sequence[Edge], rotation: Dict[object, List[int]]):
        self.edges = list(edges)
        self.rotation = {w: list(order) for w, order in rotation.items()}

    def _next(self, w, e: int) -> int:
        order = self.rotation[w]
        return order[(order.index(e) + 1) % len(order)]

    def _prev(self, w, e: int) -> int:
        order = self.rotation[w]
        return order[order.index(e) - 1]

    def other(self, w, e: int):
        u, v = self.edges[e]
        return v if w == u else u

    def corners(self) -> List[Tuple[object, int]]:
        """(w, e) is the corner at w between e and its counterclockwise successor."""
        return [(w, e) for w, order in self.rotation.items() for e in order]

    def face_of(self, corner: Tuple[object, int]) -> List[Tuple[object, int]]:
        orbit = []
        w, e = corner
        while (w, e) not in orbit:
            orbit.append((w, e))
            e2 = self._next(w, e)
            w = self.other(w, e2)
            e = e2
        return orbit

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.rotation)
        for k, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=k)
        return g


def random_plane_graph(rng: random.Random, n_edges: int) -> PlaneGraph:
    """A 2-edge-connected loop-free plane multigraph with exactly ``n_edges`` edges."""
    size = rng.randint(2, min(4, n_edges))
    edges = [(k, (k + 1) % size) for k in range(size)]
    # a cycle drawn counterclockwise: at vertex k the edge to k-1 follows the edge to k+1
    rotation = {k: [k, (k - 1) % size] for k in range(size)}
    if size == 2:
        rotation = {0: [0, 1], 1: [1, 0]}
    g = PlaneGraph(edges, rotation)
    next_vertex = size
    while len(g.edges) < n_edges:
        if rng.random() < 0.3:
            # subdivide an edge
            e = rng.randrange(len(g.edges))
            u, v = g.edges[e]
            w = next_vertex
            next_vertex += 1
            f = len(g.edges)
            g.edges[e] = (u, w)
            g.edges.append((w, v))
            g.rotation[v][g.rotation[v].index(e)] = f
            g.rotation[w] = [f, e]
        else:
            # split a face with a chord between two of its corners
            corner = rng.choice(g.corners())
            face = g.face_of(corner)
            candidates = [c for c in face if c[0] != corner[0]]
            if not candidates:
                continue
            (a, ea), (b, eb) = corner, rng.choice(candidates)
            f = len(g.edges)
            g.edges.append((a, b))
            g.rotation[a].insert(g.rotation[a].index(ea) + 1, f)
            g.rotation[b].insert(g.rotation[b].index(eb) + 1, f)
    return g


# -------------------------------- medial diagrams
def medial_diagram(g: PlaneGraph, kinds: Sequence[str] = None) -> LinkDiagram:
    """
    Crossing ``i`` sits on edge ``i``; ``kinds[i]`` is "A" or "B", the kind
    the graph sees at that crossing (default all "A", giving an alternating
    diagram whose checkerboard graph is ``g``).
    """
    labels: Dict[Tuple[object, int], int] = {}
    for corner in g.corners():
        labels[corner] = len(labels) + 1
    kinds = kinds or ["A"] * len(g.edges)
    crossings = []
    for e, (p, q) in enumerate(g.edges):
        nw = labels[(p, e)]
        sw = labels[(p, g._prev(p, e))]
        se = labels[(q, e)]
        ne = labels[(q, g._prev(q, e))]
        crossings.append((nw, sw, se, ne) if kinds[e] == "A" else (sw, se, ne, nw))
    return LinkDiagram.from_pd_tuples(crossings)


def family_companion(graph) -> LinkDiagram:
    """Almost alternating diagram whose dual checkerboard graph is the family graph."""
    plane = PlaneGraph(graph.multi_edges(), graph.rotation())
    alternating = medial_diagram(plane, ["B"] * len(plane.edges))
    return flip_crossing(alternating, graph.dealternator_index)


def random_alternating(seed: int, min_c: int = 3, max_c: int = 12) -> Tuple[PlaneGraph, LinkDiagram]:
    rng = random.Random(seed)
    g = random_plane_graph(rng, rng.randint(min_c, max_c))
    return g, medial_diagram(g)


# -------------------------------- braid closures
def braid_closure(strands: int, word: Sequence[int]) -> LinkDiagram:
    """
    Closure of a braid word; generator ``k`` (1-based, signed) crosses strands
    k and k+1.  Strands run upward; positive generators carry the left strand
    under the right one.
    """
    current = list(range(1, strands + 1))
    initial = list(current)
    fresh = strands + 1
    crossings = []
    entries = []
    for g in word:
        k = abs(g) - 1
        a, b = current[k], current[k + 1]
        c, d = fresh, fresh + 1
        fresh += 2
        if g > 0:
            crossings.append([a, b, d, c])
            entries.append(1)
        else:
            crossings.append([b, d, c, a])
            entries.append(3)
        current[k], current[k + 1] = c, d
    closing = dict(zip(current, initial))
    closed = tuple(tuple(closing.get(x, x) for x in t) for t in crossings)
    return LinkDiagram(closed, tuple(entries))


# -------------------------------- hypothesis strategies
@st.composite
def alternating_diagrams(draw, min_c: int = 3, max_c: int = 10) -> LinkDiagram:
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_alternating(seed, min_c, max_c)[1]


@st.composite
def plane_graphs(draw, min_e: int = 3, max_e: int = 12) -> PlaneGraph:
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    rng = random.Random(seed)
    return random_plane_graph(rng, rng.randint(min_e, max_e))


# -------------------------------- naive oracles
def naive_bracket(d: LinkDiagram) -> sympy.Expr:
    """Plain recursion over smoothings with networkx loop counting, expanded by sympy."""
    A = sympy.Symbol("A")
    delta = -A**2 - A**-2

    def loops(pairs) -> int:
        g = nx.Graph()
        g.add_nodes_from(d.arc_slots)
        g.add_edges_from(pairs)
        return nx.number_connected_components(g)

    def expand(i: int, pairs, weight):
        if i == d.c:
            return weight * delta ** (loops(pairs) - 1)
        a, b, c, e = d.crossings[i]
        return expand(i + 1, pairs + [(a, b), (c, e)], weight * A) + expand(
            i + 1, pairs + [(a, e), (b, c)], weight / A
        )

    if d.c == 0:
        return sympy.expand(delta ** (d.unknotted_loops - 1))
    return sympy.expand(expand(0, [], sympy.Integer(1)) * delta**d.unknotted_loops)


def naive_path_stats(graph: nx.Graph, x1, x2) -> Dict[str, int]:
    """P, P0, P1, P2, Q, S by enumerating paths and vertex quadruples."""
    stats = dict(P=0, P0=0, P1=0, P2=0, Q=0, S=0)
    for path in nx.all_simple_paths(graph, x1, x2, cutoff=3):
        if len(path) == 3:
            heavy = sum(graph.edges[u, v]["multiplicity"] >= 2 for u, v in zip(path, path[1:]))
            stats["P"] += 1
            stats[f"P{heavy}"] += 1
        elif len(path) == 4:
            _, y, z, _ = path
            if not graph.has_edge(y, x2) and not graph.has_edge(z, x1):
                stats["Q"] += 1
    others = [w for w in graph if w not in (x1, x2)]
    for y, z in combinations(others, 2):
        quad = (x1, x2, y, z)
        if all(graph.has_edge(u, v) for u, v in combinations(quad, 2)):
            stats["S"] += 1
    return stats


def naive_triangles(graph: nx.Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(graph.nodes, 3)
        if graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c)
    )
