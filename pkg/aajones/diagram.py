"""
Planar diagram (PD) codes.

A crossing is a 4-tuple of arc labels listed counterclockwise starting at the
incoming under-strand, so the under-strand runs from position 0 to position 2
and the over-strand joins positions 1 and 3.  ``over_entries[i]`` records at
which of those two positions the over-strand enters crossing ``i``.

Positions around a crossing are called slots; ``(i, p)`` is slot ``p`` of
crossing ``i``.  The sector between slot ``p`` and slot ``p + 1`` is the
corner ``(i, p)``.  Faces of the diagram are the orbits of
``corner (i, p) -> corner at the far end of the arc in slot (i, p + 1)``.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from aajones.errors import (
    InternalError,
    NotApplicableError,
    ParseError,
    SplitError,
    ValidationError,
)
from aajones.unionfind import UnionFind

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]
PDTuple = Tuple[int, int, int, int]

_TOKEN_RE = re.compile(r"X\[[^\]]*\]|reverse=[\d,]*|[^\s,]+")
_WRAPPER_RE = re.compile(r"^\s*PD\[(.*)\]\s*$", re.S)
_CROSSING_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]$")


@dataclass(frozen=True)
class Component:
    """One oriented component: its passes through crossings and the arcs entering them."""

    passes: Tuple[Slot, ...]
    arcs: Tuple[int, ...]

    @property
    def min_arc(self) -> int:
        return min(self.arcs)


@dataclass(frozen=True)
class Face:
    corners: Tuple[Slot, ...]
    # (arc, side): side "L" or "R" of the arc relative to its orientation
    incidences: Tuple[Tuple[int, str], ...]


@dataclass(frozen=True)
class FaceSet:
    faces: Tuple[Face, ...]
    unbounded_face_index: int
    corner_face: Dict[Slot, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.faces)

    def face_of(self, corner: Slot) -> int:
        return self.corner_face[corner]


def _arc_slots(crossings: Sequence[PDTuple]) -> Dict[int, List[Slot]]:
    slots: Dict[int, List[Slot]] = {}
    for i, tup in enumerate(crossings):
        for p, label in enumerate(tup):
            slots.setdefault(label, []).append((i, p))
    return slots


def _other_end(slots: Dict[int, List[Slot]], crossings: Sequence[PDTuple], slot: Slot) -> Slot:
    i, p = slot
    a, b = slots[crossings[i][p]]
    return b if a == slot else a


def _walk(slots, crossings, start: Slot) -> List[Slot]:
    """Follow a strand from an entry slot until it closes up; returns the entry slots."""
    passes = [start]
    limit = 2 * len(crossings)
    slot = start
    while True:
        i, p = slot
        slot = _other_end(slots, crossings, (i, (p + 2) % 4))
        if slot == start:
            return passes
        passes.append(slot)
        if len(passes) > limit:
            raise InternalError("strand traversal did not close up")


def _face_orbits(slots, crossings) -> List[List[Slot]]:
    seen = set()
    orbits = []
    for i in range(len(crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            orbit = []
            corner = (i, p)
            while corner not in seen:
                seen.add(corner)
                orbit.append(corner)
                ci, cp = corner
                corner = _other_end(slots, crossings, (ci, (cp + 1) % 4))
            orbits.append(orbit)
    return orbits


def _count_blocks(slots, n_crossings: int) -> int:
    if n_crossings == 0:
        return 0
    uf = UnionFind(range(n_crossings))
    for (i, _), (j, _) in slots.values():
        uf.join(i, j)
    return uf.count()


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[PDTuple, ...]
    over_entries: Tuple[int, ...]
    unknotted_loops: int = 0

    def __post_init__(self):
        if len(self.crossings) != len(self.over_entries):
            raise ValidationError("one over-strand entry is required per crossing")
        if self.unknotted_loops < 0:
            raise ValidationError("loops must be nonnegative")
        if not self.crossings and not self.unknotted_loops:
            raise ValidationError("empty diagram: no crossings and no loops")
        for tup in self.crossings:
            if len(tup) != 4 or any(not isinstance(a, int) or a < 1 for a in tup):
                raise ValidationError(f"crossing {tup} must have four positive integer arcs")
        if any(e not in (1, 3) for e in self.over_entries):
            raise ValidationError("over-strand entries must be slot 1 or slot 3")
        slots = _arc_slots(self.crossings)
        for label, where in slots.items():
            if len(where) != 2:
                raise ValidationError(f"arc {label} appears {len(where)} times, expected 2")
        entries = self._entry_slots()
        for label, (s, t) in slots.items():
            if (s in entries) == (t in entries):
                raise ValidationError(f"arc {label} is not oriented consistently")
        expected = len(self.crossings) + 2 * _count_blocks(slots, len(self.crossings))
        found = len(_face_orbits(slots, self.crossings))
        if found != expected:
            raise ValidationError(
                f"non-planar incidence structure: {found} faces, Euler formula needs {expected}"
            )

    def _entry_slots(self) -> set:
        entries = set()
        for i, e in enumerate(self.over_entries):
            entries.add((i, 0))
            entries.add((i, e))
        return entries

    # -------------------------------- constructors
    @classmethod
    def from_pd_tuples(
        cls,
        tuples: Sequence[Sequence[int]],
        loops: int = 0,
        reverse: Iterable[int] = (),
    ) -> "LinkDiagram":
        """Build a diagram from raw PD tuples, orienting components by arc labels."""
        crossings = [tuple(int(a) for a in t) for t in tuples]
        for t in crossings:
            if len(t) != 4:
                raise ValidationError(f"crossing {t} must have four arcs")
        if not crossings and not loops:
            raise ValidationError("empty diagram: no crossings and no loops")
        slots = _arc_slots(crossings)
        for label, where in slots.items():
            if len(where) != 2:
                raise ValidationError(f"arc {label} appears {len(where)} times, expected 2")

        components = _default_orientation(slots, crossings)
        reverse = set(reverse)
        for k in reverse:
            if not 0 <= k < len(components):
                raise ValidationError(
                    f"reverse index {k} out of range for {len(components)} components"
                )
        under_entry: Dict[int, int] = {}
        over_entry: Dict[int, int] = {}
        for k, passes in enumerate(components):
            if k in reverse:
                passes = [(i, (p + 2) % 4) for i, p in passes]
            for i, p in passes:
                if p % 2 == 0:
                    under_entry[i] = p
                else:
                    over_entry[i] = p
        normalized = []
        entries = []
        for i, t in enumerate(crossings):
            e = over_entry[i]
            if under_entry[i] == 2:
                t = (t[2], t[3], t[0], t[1])
                e = (e + 2) % 4
            normalized.append(t)
            entries.append(e)
        return cls(tuple(normalized), tuple(entries), loops)

    # -------------------------------- incidence helpers
    @property
    def c(self) -> int:
        return len(self.crossings)

    @cached_property
    def arc_slots(self) -> Dict[int, Tuple[Slot, Slot]]:
        return {k: tuple(v) for k, v in _arc_slots(self.crossings).items()}

    def other_end(self, slot: Slot) -> Slot:
        a, b = self.arc_slots[self.crossings[slot[0]][slot[1]]]
        return b if a == slot else a

    def is_entry(self, slot: Slot) -> bool:
        i, p = slot
        return p == 0 or p == self.over_entries[i]

    @property
    def arcs(self) -> List[int]:
        return sorted(self.arc_slots)

    @cached_property
    def components(self) -> Tuple[Component, ...]:
        """Oriented components ordered by smallest arc label, each starting at that arc."""
        slots = _arc_slots(self.crossings)
        seen = set()
        found = []
        for i in range(self.c):
            for p in (0, self.over_entries[i]):
                if (i, p) in seen:
                    continue
                passes = _walk(slots, self.crossings, (i, p))
                seen.update(passes)
                arcs = [self.crossings[j][q] for j, q in passes]
                start = arcs.index(min(arcs))
                found.append(
                    Component(
                        tuple(passes[start:] + passes[:start]),
                        tuple(arcs[start:] + arcs[:start]),
                    )
                )
        found.sort(key=lambda comp: comp.min_arc)
        return tuple(found)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.unknotted_loops

    @cached_property
    def strand_components(self) -> Tuple[Tuple[int, int], ...]:
        """For each crossing, the (under, over) component indices."""
        owner: Dict[Slot, int] = {}
        for k, comp in enumerate(self.components):
            for slot in comp.passes:
                owner[slot] = k
        return tuple(
            (owner[(i, 0)], owner[(i, self.over_entries[i])]) for i in range(self.c)
        )

    # -------------------------------- faces
    @cached_property
    def _orbits(self) -> List[List[Slot]]:
        return _face_orbits(_arc_slots(self.crossings), self.crossings)

    @cached_property
    def block_count(self) -> int:
        return _count_blocks(_arc_slots(self.crossings), self.c)

    def canonical(self) -> "LinkDiagram":
        """Relabel arcs 1..2c along oriented components and sort the crossings."""
        relabel: Dict[int, int] = {}
        for comp in self.components:
            for label in comp.arcs:
                relabel[label] = len(relabel) + 1
        rows = sorted(
            (tuple(relabel[a] for a in t), e) for t, e in zip(self.crossings, self.over_entries)
        )
        return LinkDiagram(
            tuple(r[0] for r in rows), tuple(r[1] for r in rows), self.unknotted_loops
        )


def _default_orientation(slots, crossings) -> List[List[Slot]]:
    """
    Orient every component of raw PD tuples, ordered by smallest arc label.

    The direction with more ascending arc-label steps wins; on a tie the first
    under-pass must enter at position 0; with no under-pass the traversal that
    starts at the component's first listed slot is kept.
    """
    seen = set()
    components = []
    for i in range(len(crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            passes = _walk(slots, crossings, (i, p))
            for j, q in passes:
                seen.add((j, q))
                seen.add((j, (q + 2) % 4))
            arcs = [crossings[j][q] for j, q in passes]
            n = len(arcs)
            ascents = sum(1 for k in range(n) if arcs[(k + 1) % n] > arcs[k])
            descents = sum(1 for k in range(n) if arcs[(k + 1) % n] < arcs[k])
            forward = ascents > descents
            if ascents == descents:
                forward = True
                for j, q in passes:
                    if q % 2 == 0:
                        forward = q == 0
                        break
            if not forward:
                passes = [(j, (q + 2) % 4) for j, q in reversed(passes)]
            in_arcs = [crossings[j][q] for j, q in passes]
            components.append((min(in_arcs), passes))
    components.sort(key=lambda item: item[0])
    return [passes for _, passes in components]


# -------------------------------- text format
def parse_pd(text: str, reverse: Iterable[int] = ()) -> LinkDiagram:
    """
    Parse ``X[a,b,c,d]`` tokens with optional ``loops=N`` and ``reverse=i,j``
    headers.  Tokens may be comma separated and wrapped in ``PD[...]``.

    Indices in ``reverse`` (and in the header) are 0-based component indices in
    order of each component's smallest arc label.
    """
    wrapped = _WRAPPER_RE.match(text)
    if wrapped:
        text = wrapped.group(1)
    tuples = []
    loops = 0
    reversed_components = set(reverse)
    for token in _TOKEN_RE.findall(text):
        if token.startswith("X["):
            m = _CROSSING_RE.match(token)
            if not m:
                raise ParseError(f"malformed crossing token {token!r}")
            tuples.append(tuple(int(g) for g in m.groups()))
        elif token.startswith("loops="):
            value = token[len("loops="):]
            if not value.isdigit():
                raise ParseError(f"malformed loops header {token!r}")
            loops = int(value)
        elif token.startswith("reverse="):
            value = token[len("reverse="):]
            try:
                reversed_components.update(int(v) for v in value.split(",") if v)
            except ValueError:
                raise ParseError(f"malformed reverse header {token!r}")
        else:
            raise ParseError(f"unexpected token {token!r}")
    for t in tuples:
        if 0 in t:
            raise ParseError("arc labels must be positive integers")
    return LinkDiagram.from_pd_tuples(tuples, loops=loops, reverse=sorted(reversed_components))


def serialize(d: LinkDiagram) -> str:
    """Canonical PD text; ``parse_pd(serialize(d)) == d.canonical()``."""
    canon = d.canonical()
    tokens = []
    if canon.unknotted_loops:
        tokens.append(f"loops={canon.unknotted_loops}")
    if canon.crossings:
        slots = _arc_slots(canon.crossings)
        defaults = _default_orientation(slots, canon.crossings)
        actual_entries = canon._entry_slots()
        flipped = [
            k for k, passes in enumerate(defaults) if not set(passes) <= actual_entries
        ]
        if flipped:
            tokens.append("reverse=" + ",".join(str(k) for k in flipped))
    tokens.extend("X[" + ",".join(str(a) for a in t) + "]" for t in canon.crossings)
    return " ".join(tokens)


# -------------------------------- orientation and signs
def crossing_signs(d: LinkDiagram) -> Tuple[int, ...]:
    """+1 where the over-strand enters at slot 3 (runs from slot 3 to slot 1)."""
    return tuple(1 if e == 3 else -1 for e in d.over_entries)


def writhe(d: LinkDiagram) -> int:
    return sum(crossing_signs(d))


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    if i == j:
        raise ValueError("linking number needs two distinct components")
    total = 0
    for sign, (under, over) in zip(crossing_signs(d), d.strand_components):
        if {under, over} == {i, j}:
            total += sign
    return total // 2


def reverse_components(d: LinkDiagram, indices: Iterable[int]) -> LinkDiagram:
    indices = set(indices)
    n = len(d.components)
    for k in indices:
        if not 0 <= k < n:
            raise IndexError(f"component {k} out of range for {n} components")
    crossings = []
    entries = []
    for t, e, (under, over) in zip(d.crossings, d.over_entries, d.strand_components):
        if over in indices:
            e = (e + 2) % 4
        if under in indices:
            t = (t[2], t[3], t[0], t[1])
            e = (e + 2) % 4
        crossings.append(t)
        entries.append(e)
    return LinkDiagram(tuple(crossings), tuple(entries), d.unknotted_loops)


# -------------------------------- connectivity and faces
def is_split(d: LinkDiagram) -> bool:
    if d.c == 0:
        return d.unknotted_loops > 1
    return d.block_count > 1 or d.unknotted_loops > 0


def require_connected(d: LinkDiagram) -> None:
    if d.c == 0:
        raise NotApplicableError("diagram has no crossings")
    if is_split(d):
        raise SplitError("operation requires a connected diagram")


def faces(d: LinkDiagram) -> FaceSet:
    require_connected(d)
    face_list = []
    corner_face: Dict[Slot, int] = {}
    for index, orbit in enumerate(d._orbits):
        incidences = []
        for i, p in orbit:
            start = (i, (p + 1) % 4)
            arc = d.crossings[i][start[1]]
            # the face lies to the right of travel out of this slot
            side = "L" if d.is_entry(start) else "R"
            incidences.append((arc, side))
            corner_face[(i, p)] = index
        face_list.append(Face(tuple(orbit), tuple(incidences)))
    anchor = min((inc, k) for k, f in enumerate(face_list) for inc in f.incidences)
    return FaceSet(tuple(face_list), anchor[1], corner_face)


# -------------------------------- alternation, reducedness, primality
def is_alternating(d: LinkDiagram) -> bool:
    for comp in d.components:
        kinds = [p == 0 for _, p in comp.passes]
        n = len(kinds)
        if any(kinds[k] == kinds[(k + 1) % n] for k in range(n)):
            return False
    return True


def nugatory_crossings(d: LinkDiagram) -> List[int]:
    """Crossings whose two opposite corners of one color lie in the same face."""
    fs = faces(d)
    found = []
    for i in range(d.c):
        if fs.face_of((i, 0)) == fs.face_of((i, 2)) or fs.face_of((i, 1)) == fs.face_of((i, 3)):
            found.append(i)
    return found


def is_reduced(d: LinkDiagram) -> bool:
    if d.c == 0:
        return True
    return not nugatory_crossings(d)


def is_prime(d: LinkDiagram) -> bool:
    """Both checkerboard graphs are loop-free and two-connected."""
    import networkx as nx

    from aajones.checkerboard import tait_graphs

    if nugatory_crossings(d):
        return False
    for g in tait_graphs(d):
        simple = nx.Graph(g.to_networkx())
        if any(True for _ in nx.articulation_points(simple)):
            return False
    return True


# -------------------------------- crossing changes
def _flipped(t: PDTuple, e: int) -> Tuple[PDTuple, int]:
    a, b, c, d = t
    if e == 1:
        return (b, c, d, a), 3
    return (d, a, b, c), 1


def flip_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    if not 0 <= i < d.c:
        raise IndexError(f"crossing {i} out of range for {d.c} crossings")
    crossings = list(d.crossings)
    entries = list(d.over_entries)
    crossings[i], entries[i] = _flipped(crossings[i], entries[i])
    return LinkDiagram(tuple(crossings), tuple(entries), d.unknotted_loops)


def mirror(d: LinkDiagram) -> LinkDiagram:
    pairs = [_flipped(t, e) for t, e in zip(d.crossings, d.over_entries)]
    return LinkDiagram(
        tuple(t for t, _ in pairs), tuple(e for _, e in pairs), d.unknotted_loops
    )


# -------------------------------- Reidemeister moves (test generators)
def _fresh_labels(d: LinkDiagram, n: int) -> List[int]:
    top = max(d.arc_slots, default=0)
    return list(range(top + 1, top + n + 1))


def _relabel_slot(crossings: List[list], slot: Slot, label: int) -> None:
    crossings[slot[0]][slot[1]] = label


def r1_variant(d: LinkDiagram, positive: bool = True, arc: Optional[int] = None) -> LinkDiagram:
    """Add a kink to ``arc`` (default: the smallest arc, or a crossingless loop)."""
    p, k, q = _fresh_labels(d, 3)
    if d.c == 0:
        # a crossingless loop closes up on itself: p plays the role of q
        tup = (p, p, k, k) if positive else (p, k, k, p)
        entry = 3 if positive else 1
        return LinkDiagram((tup,), (entry,), d.unknotted_loops - 1)
    label = min(d.arc_slots) if arc is None else arc
    s, t = d.arc_slots[label]
    head, tail = (s, t) if d.is_entry(s) else (t, s)
    crossings = [list(x) for x in d.crossings]
    _relabel_slot(crossings, tail, p)
    _relabel_slot(crossings, head, q)
    if positive:
        crossings.append([p, q, k, k])
        entries = d.over_entries + (3,)
    else:
        crossings.append([p, k, k, q])
        entries = d.over_entries + (1,)
    return LinkDiagram(tuple(tuple(x) for x in crossings), entries, d.unknotted_loops)


def _orient_tuple(ccw: Sequence[Tuple[int, str]], under: str, over: str, incoming: Dict[str, int]):
    """
    Rotate a counterclockwise list of (label, strand) half-edges so it starts at
    the incoming half-edge of ``under``; return (tuple, over entry slot).
    ``incoming[strand]`` is the index in ``ccw`` of that strand's incoming half-edge.
    """
    start = incoming[under]
    rotated = [ccw[(start + k) % 4] for k in range(4)]
    entry = (incoming[over] - start) % 4
    if entry not in (1, 3) or rotated[2][1] != under:
        raise InternalError("local move produced an inconsistent crossing")
    return tuple(label for label, _ in rotated), entry


def r2_variant(d: LinkDiagram) -> Optional[LinkDiagram]:
    """Push one boundary arc of a face over another; adds two crossings."""
    if d.c == 0 or is_split(d):
        return None
    fs = faces(d)
    for face in fs.faces:
        travel = []
        for i, p in face.corners:
            start = (i, (p + 1) % 4)
            travel.append((d.crossings[i][start[1]], start, d.other_end(start)))
        for ix, (x, x0, x1) in enumerate(travel):
            for y, y0, y1 in travel[ix + 1:]:
                if x != y:
                    return _poke(d, x, x0, x1, y, y0, y1)
    return None


def _poke(d, x, x0, x1, y, y0, y1) -> LinkDiagram:
    # Picture: the face lies south of y (travelled west to east) and north of
    # x (travelled east to west).  A finger of x rises over y, crossing it at
    # C_east going north and at C_west coming back south.
    x1_, x2_, x3_, y1_, y2_, y3_ = _fresh_labels(d, 6)
    x_forward = not d.is_entry(x0)
    y_forward = not d.is_entry(y0)
    crossings = [list(t) for t in d.crossings]
    _relabel_slot(crossings, x0, x1_)
    _relabel_slot(crossings, x1, x3_)
    _relabel_slot(crossings, y0, y1_)
    _relabel_slot(crossings, y1, y3_)
    entries = list(d.over_entries)

    # counterclockwise from east: E, N, W, S
    east = [(y3_, "y"), (x2_, "x"), (y2_, "y"), (x1_, "x")]
    west = [(y2_, "y"), (x2_, "x"), (y1_, "y"), (x3_, "x")]
    east_in = {"y": 2 if y_forward else 0, "x": 3 if x_forward else 1}
    west_in = {"y": 2 if y_forward else 0, "x": 1 if x_forward else 3}
    for ccw, incoming in ((east, east_in), (west, west_in)):
        tup, entry = _orient_tuple(ccw, "y", "x", incoming)
        crossings.append(list(tup))
        entries.append(entry)
    return LinkDiagram(tuple(tuple(t) for t in crossings), tuple(entries), d.unknotted_loops)


def triangle_faces(d: LinkDiagram) -> List[Face]:
    fs = faces(d)
    return [
        f for f in fs.faces if len(f.corners) == 3 and len({i for i, _ in f.corners}) == 3
    ]


def r3_variant(d: LinkDiagram) -> Optional[LinkDiagram]:
    """Slide one strand across the opposite crossing of a triangular face, if allowed."""
    if d.c < 3 or is_split(d):
        return None
    for face in triangle_faces(d):
        result = _slide(d, face)
        if result is not None:
            return result
    return None


def _slide(d: LinkDiagram, face: Face) -> Optional[LinkDiagram]:
    (i1, p1), (i2, p2), (i3, p3) = face.corners
    if d.crossings[i1][(p1 + 1) % 4] != d.crossings[i2][p2]:
        raise InternalError("triangle corners are not consecutive")
    # boundary points counterclockwise around the triangle tangle
    boundary = [
        (i1, (p1 + 2) % 4),
        (i1, (p1 + 3) % 4),
        (i3, (p3 + 2) % 4),
        (i3, (p3 + 3) % 4),
        (i2, (p2 + 2) % 4),
        (i2, (p2 + 3) % 4),
    ]
    # chord k joins boundary k and boundary k + 3; chord 0 runs through i1 and i3,
    # chord 1 through i1 and i2, chord 2 through i2 and i3.  Odd slots are over.
    over = {
        (0, 1): 1 if (p1 + 1) % 2 else 0,
        (1, 2): 1 if p2 % 2 else 2,
        (0, 2): 2 if p3 % 2 else 0,
    }
    # the three strands must not pass over each other cyclically
    layered = False
    for chord in range(3):
        tops = [over[pair] == chord for pair in over if chord in pair]
        if all(tops) or not any(tops):
            layered = True
    if not layered:
        return None

    forward = [d.is_entry(boundary[k]) for k in range(3)]
    ext = [d.crossings[i][p] for i, p in boundary]
    order = _slid_arrangement()
    internal = dict(zip(range(3), _fresh_labels(d, 3)))

    crossings = [list(t) for t in d.crossings]
    entries = list(d.over_entries)
    targets = {(0, 1): i1, (1, 2): i2, (0, 2): i3}
    for pair, index in targets.items():
        halves = []
        for chord in pair:
            seq = order[chord]
            pos = seq.index(pair)
            ahead = ext[chord + 3] if pos == len(seq) - 1 else internal[chord]
            behind = ext[chord] if pos == 0 else internal[chord]
            angle = 60 * chord + 180
            halves.append((angle % 360, ahead, chord, "ahead"))
            halves.append(((angle + 180) % 360, behind, chord, "behind"))
        halves.sort()
        ccw = [(label, str(chord)) for _, label, chord, _ in halves]
        incoming = {}
        for n, (_, _, chord, direction) in enumerate(halves):
            comes_from = "behind" if forward[chord] else "ahead"
            if direction == comes_from:
                incoming[str(chord)] = n
        top = over[pair]
        bottom = pair[0] if top == pair[1] else pair[1]
        tup, entry = _orient_tuple(ccw, str(bottom), str(top), incoming)
        crossings[index] = list(tup)
        entries[index] = entry
    return LinkDiagram(tuple(tuple(t) for t in crossings), tuple(entries), d.unknotted_loops)


def _slid_arrangement() -> Dict[int, List[Tuple[int, int]]]:
    """
    Crossing order along each chord after the slide.

    Chords are lines through boundary points at 60k degrees, shifted off the
    centre so they bound a small triangle; the shift direction is chosen so
    that chord 1 meets chord 2 before chord 0, the reverse of the triangle
    being replaced.
    """
    def line(k, s):
        phi = math.radians(60 * k + 180)
        ux, uy = math.cos(phi), math.sin(phi)
        start = (math.cos(math.radians(60 * k)), math.sin(math.radians(60 * k)))
        nx_, ny_ = -uy, ux
        return (start[0] + s * 0.1 * nx_, start[1] + s * 0.1 * ny_), (ux, uy)

    def meet(a, b):
        (p, u), (q, v) = a, b
        det = u[0] * (-v[1]) - u[1] * (-v[0])
        rx, ry = q[0] - p[0], q[1] - p[1]
        return (rx * (-v[1]) - ry * (-v[0])) / det

    for s in (1, -1):
        lines = [line(k, s) for k in range(3)]
        order = {}
        for chord in range(3):
            others = [k for k in range(3) if k != chord]
            params = sorted((meet(lines[chord], lines[k]), k) for k in others)
            order[chord] = [tuple(sorted((chord, k))) for _, k in params]
        if order[1] == [(1, 2), (0, 1)]:
            return order
    raise InternalError("no triangle arrangement found")


def reidemeister_variants(d: LinkDiagram) -> List[LinkDiagram]:
    """One positive and one negative R1 kink, one R2 poke and, when available, one R3 slide."""
    variants = [r1_variant(d, positive=True), r1_variant(d, positive=False)]
    r2 = r2_variant(d)
    if r2 is not None:
        variants.append(r2)
    r3 = r3_variant(d)
    if r3 is not None:
        variants.append(r3)
    logger.debug("built %d Reidemeister variants for a %d-crossing diagram", len(variants), d.c)
    return variants


__all__ = [
    "Component",
    "Face",
    "FaceSet",
    "LinkDiagram",
    "parse_pd",
    "serialize",
    "crossing_signs",
    "writhe",
    "linking_number",
    "reverse_components",
    "is_split",
    "faces",
    "is_alternating",
    "is_reduced",
    "is_prime",
    "nugatory_crossings",
    "flip_crossing",
    "mirror",
    "r1_variant",
    "r2_variant",
    "r3_variant",
    "reidemeister_variants",
]
