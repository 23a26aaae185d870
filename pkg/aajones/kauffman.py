"""
Kauffman bracket by state summation, and the Jones polynomial derived from it.

A state assigns an A- or B-smoothing to every crossing; bit ``i`` of the state
index is set when crossing ``i`` gets the B-smoothing.  For a crossing
``(a, b, c, d)`` the A-smoothing joins arcs a-b and c-d, the B-smoothing
joins a-d and b-c.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from tqdm import tqdm

from aajones.diagram import LinkDiagram, require_connected, writhe
from aajones.errors import CapError, InternalError
from aajones.laurent import (
    LOOP_VALUE,
    LaurentPoly,
    Unit,
    monomial_shift,
    poly_sum,
)
from aajones.unionfind import UnionFind

logger = logging.getLogger(__name__)

DEFAULT_CAP = 24
DEFAULT_CHUNK_BITS = 16


@dataclass(frozen=True)
class KauffmanState:
    bits: int
    c: int

    @classmethod
    def all_a(cls, c: int) -> "KauffmanState":
        return cls(0, c)

    @classmethod
    def all_b(cls, c: int) -> "KauffmanState":
        return cls((1 << c) - 1, c)

    def is_b(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    @property
    def b_count(self) -> int:
        return bin(self.bits).count("1")


@dataclass(frozen=True)
class StateLoops:
    state: KauffmanState
    loops: Tuple[frozenset, ...]

    @property
    def count(self) -> int:
        return len(self.loops)

    def loop_of(self, arc: int) -> int:
        for k, loop in enumerate(self.loops):
            if arc in loop:
                return k
        raise KeyError(arc)


def smoothing_pairs(crossing: Tuple[int, int, int, int], b: bool) -> Tuple[Tuple[int, int], ...]:
    a, b_, c, d = crossing
    if b:
        return ((a, d), (b_, c))
    return ((a, b_), (c, d))


def resolve(d: LinkDiagram, state: KauffmanState) -> List[frozenset]:
    """The loops of a state, each as the set of arcs it runs along."""
    if state.c != d.c:
        raise ValueError(f"state has {state.c} crossings, diagram has {d.c}")
    uf = UnionFind(d.arc_slots)
    for i, crossing in enumerate(d.crossings):
        for u, v in smoothing_pairs(crossing, state.is_b(i)):
            uf.join(u, v)
    groups: Dict[int, set] = {}
    for arc, g in uf.groups().items():
        groups.setdefault(g, set()).add(arc)
    return [frozenset(groups[g]) for g in sorted(groups)]


def state_loops(d: LinkDiagram, state: KauffmanState) -> StateLoops:
    return StateLoops(state, tuple(resolve(d, state)))


# -------------------------------- polynomial assembly
def _loop_power(n: int) -> LaurentPoly:
    return LOOP_VALUE ** n


def _assemble(d: LinkDiagram, hist: np.ndarray) -> LaurentPoly:
    """Sum A^(c - 2 popcount) d^(loops - 1 + unknotted loops) over a (popcount, loops) histogram."""
    c = d.c
    by_loops: Dict[int, Dict[int, int]] = {}
    for pop, loops in zip(*np.nonzero(hist)):
        by_loops.setdefault(int(loops), {})[c - 2 * int(pop)] = int(hist[pop, loops])
    parts = []
    for loops, terms in by_loops.items():
        power = loops - 1 + d.unknotted_loops
        if power < 0:
            raise InternalError("a state cannot have zero loops")
        parts.append(LaurentPoly.from_dict(Unit.QUARTER_A, terms) * _loop_power(power))
    return poly_sum(parts, Unit.QUARTER_A)


# -------------------------------- vectorized enumeration
def _encode(d: LinkDiagram) -> np.ndarray:
    index = {arc: k for k, arc in enumerate(d.arcs)}
    return np.array([[index[a] for a in t] for t in d.crossings], dtype=np.int64)


def _count_chunk(encoded: np.ndarray, start: int, size: int) -> np.ndarray:
    """Histogram of (B-count, loop count) over states start .. start + size - 1."""
    c = encoded.shape[0]
    m = 2 * c
    states = np.arange(start, start + size, dtype=np.int64)
    bits = ((states[:, None] >> np.arange(c, dtype=np.int64)) & 1).astype(bool)
    rows = np.arange(size)
    labels = np.tile(np.arange(m, dtype=np.int64), (size, 1))
    changed = True
    while changed:
        changed = False
        for i in range(c):
            a, b, cc, dd = encoded[i]
            col = bits[:, i]
            for u, v in ((np.full(size, a), np.where(col, dd, b)), (np.full(size, cc), np.where(col, b, dd))):
                lu = labels[rows, u]
                lv = labels[rows, v]
                low = np.minimum(lu, lv)
                if np.any(lu != lv):
                    changed = True
                    labels[rows, u] = low
                    labels[rows, v] = low
    loops = (labels == np.arange(m)).sum(axis=1)
    pops = bits.sum(axis=1)
    hist = np.zeros((c + 1, m + 1), dtype=np.int64)
    np.add.at(hist, (pops, loops), 1)
    return hist


def state_histogram(
    d: LinkDiagram,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    progress: bool = False,
) -> np.ndarray:
    """
    Histogram ``h[k, l]``: number of states with k B-smoothings and l loops.

    States are enumerated in chunks of ``2**chunk_bits``; with ``workers > 1``
    chunks are counted in a process pool.
    """
    c = d.c
    if c > cap:
        raise CapError(f"{c} crossings exceeds the state enumeration cap of {cap}")
    if c == 0:
        raise ValueError("a crossingless diagram has a single empty state")
    encoded = _encode(d)
    total = 1 << c
    size = min(total, 1 << chunk_bits)
    starts = list(range(0, total, size))
    hist = np.zeros((c + 1, 2 * c + 1), dtype=np.int64)
    logger.debug("enumerating %d states in %d chunks", total, len(starts))

    bar_fmt = "{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}, {rate_fmt}]"
    with tqdm(
        total=len(starts), desc="States", unit="chunk", bar_format=bar_fmt, disable=not progress
    ) as pbar:
        if workers <= 1 or len(starts) == 1:
            for start in starts:
                hist += _count_chunk(encoded, start, size)
                pbar.update(1)
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(_count_chunk, encoded, start, size) for start in starts]
                for future in as_completed(futures):
                    hist += future.result()
                    pbar.update(1)
    return hist


def bracket(
    d: LinkDiagram,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    progress: bool = False,
) -> LaurentPoly:
    """Kauffman bracket in A, normalized so the crossingless unknot is 1."""
    if d.c == 0:
        return _loop_power(d.unknotted_loops - 1)
    hist = state_histogram(d, cap=cap, workers=workers, chunk_bits=chunk_bits, progress=progress)
    return _assemble(d, hist)


def bracket_oracle(d: LinkDiagram, cap: int = 16) -> LaurentPoly:
    """Slow reference: one union-find per state."""
    if d.c == 0:
        return _loop_power(d.unknotted_loops - 1)
    if d.c > cap:
        raise CapError(f"{d.c} crossings exceeds the oracle cap of {cap}")
    hist = np.zeros((d.c + 1, 2 * d.c + 1), dtype=np.int64)
    for bits in range(1 << d.c):
        state = KauffmanState(bits, d.c)
        hist[state.b_count, len(resolve(d, state))] += 1
    return _assemble(d, hist)


# -------------------------------- Jones polynomial
def jones_from_bracket(br: LaurentPoly, w: int) -> LaurentPoly:
    """V = (-A^3)^(-w) <D> with A = t^(-1/4)."""
    if br.unit is not Unit.QUARTER_A:
        raise ValueError("bracket must be a polynomial in A")
    normalized = monomial_shift(br, -1 if w % 2 else 1, -3 * w)
    terms = {}
    for k, coeff in normalized.terms:
        if k % 2:
            raise InternalError(f"normalized bracket has odd A-exponent {k}")
        terms[-k // 2] = coeff
    return LaurentPoly.from_dict(Unit.HALF_T, terms)


def jones(
    d: LinkDiagram,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    progress: bool = False,
) -> LaurentPoly:
    br = bracket(d, cap=cap, workers=workers, chunk_bits=chunk_bits, progress=progress)
    return jones_from_bracket(br, writhe(d))


# -------------------------------- extreme states
def _is_adequate(d: LinkDiagram, state: KauffmanState) -> bool:
    sl = state_loops(d, state)
    for i, crossing in enumerate(d.crossings):
        (u, _), (v, _) = smoothing_pairs(crossing, state.is_b(i))
        if sl.loop_of(u) == sl.loop_of(v):
            return False
    return True


def is_a_adequate(d: LinkDiagram) -> bool:
    """No crossing has both A-smoothing arcs on the same all-A loop."""
    return _is_adequate(d, KauffmanState.all_a(d.c))


def is_b_adequate(d: LinkDiagram) -> bool:
    return _is_adequate(d, KauffmanState.all_b(d.c))


def state_counts(d: LinkDiagram) -> Tuple[int, int]:
    """Loop counts (s_A, s_B) of the all-A and all-B states, crossingless loops included."""
    s_a = len(resolve(d, KauffmanState.all_a(d.c))) + d.unknotted_loops
    s_b = len(resolve(d, KauffmanState.all_b(d.c))) + d.unknotted_loops
    return s_a, s_b


def turaev_genus(d: LinkDiagram) -> int:
    """Genus of the Turaev surface: (2 + c - s_A - s_B) / 2 for a connected diagram."""
    if d.c == 0 and d.unknotted_loops == 1:
        return 0
    require_connected(d)
    s_a, s_b = state_counts(d)
    twice = 2 + d.c - s_a - s_b
    if twice % 2:
        raise InternalError("Turaev genus numerator is odd")
    return twice // 2


__all__ = [
    "KauffmanState",
    "StateLoops",
    "resolve",
    "state_loops",
    "state_histogram",
    "state_counts",
    "bracket",
    "bracket_oracle",
    "jones",
    "jones_from_bracket",
    "is_a_adequate",
    "is_b_adequate",
    "turaev_genus",
]
