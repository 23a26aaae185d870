"""
Almost alternating diagrams: dealternator search and the closed-form extreme
coefficients of the bracket, plus the verdicts that follow from them.

Throughout, ``G`` is the checkerboard graph whose edges are A-edges except
for the dealternator, ``Gbar`` its dual; ``(u1, u2)`` and ``(v1, v2)`` are the
endpoints of the dealternator edge in each.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

import sympy

from aajones.checkerboard import (
    AAPathStats,
    GraphStats,
    TaitGraph,
    aa_path_stats,
    graph_stats,
    simplify,
    tait_graphs,
)
from aajones.diagram import (
    LinkDiagram,
    flip_crossing,
    is_alternating,
    is_reduced,
    require_connected,
)
from aajones.errors import AlreadyAlternatingError, InternalError, NotApplicableError
from aajones.kauffman import is_a_adequate, is_b_adequate, turaev_genus
from aajones.laurent import (
    LaurentPoly,
    Unit,
    monomial_shift,
    span,
    to_coeff_vector,
)

logger = logging.getLogger(__name__)


class CrossingMinimality(str, Enum):
    MINIMAL = "Minimal"
    WITHIN_ONE_CROSSING = "WithinOneCrossing"
    REDUCIBLE_BY_TWO = "ReducibleByTwo"
    INCONCLUSIVE = "Inconclusive"


class SignVerdict(str, Enum):
    CONSISTENT = "Consistent"
    OBSTRUCTED = "Obstructed"


class Nontriviality(str, Enum):
    NONTRIVIAL_JONES = "NontrivialJones"
    VIOLATION = "Violation"


class SemiAdequateVerdict(str, Enum):
    NOT_APPLICABLE = "NotApplicable"
    UNLINK = "Unlink"
    NONTRIVIAL = "Nontrivial"


class DiagramClass(str, Enum):
    ALTERNATING = "Alternating"
    AA_STRONGLY_REDUCED = "AAStronglyReduced"
    AA_NOT_STRONGLY_REDUCED = "AANotStronglyReduced"
    NOT_AA = "NotAA"


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _choose2(n: int) -> int:
    return n * (n - 1) // 2


# -------------------------------- dealternators
@dataclass(frozen=True)
class DealternatorCert:
    crossing: int
    u1: int
    u2: int
    v1: int
    v2: int
    strongly_reduced: bool
    reason: Optional[str] = None


def _certify(d: LinkDiagram, crossing: int) -> DealternatorCert:
    g, gbar = tait_graphs(d, dealternator=crossing)
    ue = g.edge_for(crossing)
    ve = gbar.edge_for(crossing)
    reason = None
    if ue.is_loop:
        reason = "dealternator edge is a loop in G"
    elif ve.is_loop:
        reason = "dealternator edge is a loop in Gbar"
    elif _parallel_count(g, ue.u, ue.v) > 1:
        reason = "another edge of G joins u1 and u2"
    elif _parallel_count(gbar, ve.u, ve.v) > 1:
        reason = "another edge of Gbar joins v1 and v2"
    elif g.loops() or gbar.loops():
        reason = "a checkerboard graph has a loop"
    return DealternatorCert(crossing, ue.u, ue.v, ve.u, ve.v, reason is None, reason)


def _parallel_count(g: TaitGraph, u: int, v: int) -> int:
    return sum(1 for e in g.edges if {e.u, e.v} == {u, v})


def find_dealternators(d: LinkDiagram) -> List[DealternatorCert]:
    """Every crossing whose flip makes ``d`` alternating, each certified."""
    require_connected(d)
    if is_alternating(d):
        raise AlreadyAlternatingError("diagram is already alternating")
    certs = [_certify(d, i) for i in range(d.c) if is_alternating(flip_crossing(d, i))]
    logger.debug("found %d dealternator(s): %s", len(certs), [c.crossing for c in certs])
    return certs


def classify_with_certs(d: LinkDiagram) -> Tuple[DiagramClass, List[DealternatorCert]]:
    """The diagram class together with the dealternator certificates it was read from."""
    require_connected(d)
    if is_alternating(d):
        return DiagramClass.ALTERNATING, []
    certs = find_dealternators(d)
    if not certs:
        return DiagramClass.NOT_AA, certs
    if any(c.strongly_reduced for c in certs):
        return DiagramClass.AA_STRONGLY_REDUCED, certs
    return DiagramClass.AA_NOT_STRONGLY_REDUCED, certs


def classify(d: LinkDiagram) -> DiagramClass:
    return classify_with_certs(d)[0]


# -------------------------------- reduced alternating diagrams
@dataclass(frozen=True)
class DasLinCoeffs:
    gamma0: int
    gamma1: int
    gamma2: int
    gamma_cm2: int
    gamma_cm1: int
    gamma_c: int
    anchor: int  # A-exponent of gamma0; gamma_i sits at anchor - 4i

    def by_index(self, c: int) -> Dict[int, int]:
        """Map i -> gamma_i; for c < 5 the low and high ends overlap and must agree."""
        values = {}
        for i, value in ((0, self.gamma0), (1, self.gamma1), (2, self.gamma2),
                         (c - 2, self.gamma_cm2), (c - 1, self.gamma_cm1), (c, self.gamma_c)):
            if i < 0:
                continue
            if i in values and values[i] != value:
                raise InternalError(f"coefficient {i} has two different closed forms")
            values[i] = value
        return values


def _leading_triple(s: GraphStats) -> Tuple[int, int, int]:
    v, e = s.v, s.e
    return (
        _sign(v - 1),
        _sign(v - 2) * (e - v + 1),
        _sign(v - 3) * (_choose2(v - 1) - e * (v - 2) + s.mu + _choose2(e) - s.tau),
    )


def dasbach_lin_coeffs(d: LinkDiagram) -> DasLinCoeffs:
    """First three and last three bracket coefficients of a reduced alternating diagram."""
    require_connected(d)
    if not is_alternating(d):
        raise NotApplicableError("diagram is not alternating")
    if not is_reduced(d):
        raise NotApplicableError("diagram is not reduced")
    g, gbar = tait_graphs(d)
    s = graph_stats(simplify(g))
    sbar = graph_stats(simplify(gbar))
    g0, g1, g2 = _leading_triple(s)
    gc, gcm1, gcm2 = _leading_triple(sbar)
    return DasLinCoeffs(g0, g1, g2, gcm2, gcm1, gc, d.c + 2 * s.v - 2)


def alternating_jones_checks(v: LaurentPoly, c: int) -> Tuple[bool, bool, bool]:
    """
    For a reduced alternating diagram with c crossings: (span equals c,
    first and last coefficients are +-1, coefficients alternate in sign).
    Zero coefficients inside the support do not break alternation.
    """
    coeffs = to_coeff_vector(v).coeffs[::2]
    span_ok = span(v) == c
    ends_ok = abs(coeffs[0]) == 1 and abs(coeffs[-1]) == 1
    lead = 1 if coeffs[0] > 0 else -1
    alternates = all(lead * _sign(i) * a >= 0 for i, a in enumerate(coeffs))
    return span_ok, ends_ok, alternates


# -------------------------------- almost alternating diagrams
@dataclass(frozen=True)
class AAReport:
    crossing: int
    c: int
    alpha0: int
    alpha1: int
    alpha_cm4: int
    alpha_cm3: int
    anchor_exponent: int
    stats: AAPathStats
    stats_bar: AAPathStats
    graph_stats: GraphStats
    graph_stats_bar: GraphStats
    minimality: Optional[CrossingMinimality] = None
    sign_verdict: Optional[SignVerdict] = None
    nontriviality: Optional[Nontriviality] = None
    turaev_genus: Optional[int] = None
    span_minimal: Optional[bool] = None
    lemma_dual: Optional[Tuple[bool, bool]] = None

    @property
    def window(self) -> Tuple[int, int]:
        """Bracket exponents outside [low, high] vanish."""
        return self.anchor_exponent - 4 * (self.c - 3), self.anchor_exponent

    def alpha_exponents(self) -> Dict[str, int]:
        top = self.anchor_exponent
        return {
            "alpha0": top,
            "alpha1": top - 4,
            "alpha_cm4": top - 4 * (self.c - 4),
            "alpha_cm3": top - 4 * (self.c - 3),
        }


def _alpha_pair(gs: GraphStats, ps: AAPathStats) -> Tuple[int, int]:
    first = _sign(gs.v) * (ps.P - 1)
    second = _sign(gs.v - 1) * (
        gs.beta1 * (ps.P - 1) - _choose2(ps.P) + ps.P2 - ps.P0 + ps.Q - ps.S
    )
    return first, second


def aa_coefficients(d: LinkDiagram, cert: DealternatorCert) -> AAReport:
    """Closed-form first two and last two bracket coefficients of a strongly reduced diagram."""
    if not cert.strongly_reduced:
        raise NotApplicableError(f"dealternator {cert.crossing} is not strongly reduced: {cert.reason}")
    g, gbar = tait_graphs(d, dealternator=cert.crossing)
    simple, simple_bar = simplify(g), simplify(gbar)
    gs, gs_bar = graph_stats(simple), graph_stats(simple_bar)
    ps = aa_path_stats(simple, cert.u1, cert.u2)
    ps_bar = aa_path_stats(simple_bar, cert.v1, cert.v2)
    alpha0, alpha1 = _alpha_pair(gs, ps)
    alpha_cm3, alpha_cm4 = _alpha_pair(gs_bar, ps_bar)
    return AAReport(
        crossing=cert.crossing,
        c=d.c,
        alpha0=alpha0,
        alpha1=alpha1,
        alpha_cm4=alpha_cm4,
        alpha_cm3=alpha_cm3,
        anchor_exponent=d.c + 2 * gs.v - 8,
        stats=ps,
        stats_bar=ps_bar,
        graph_stats=gs,
        graph_stats_bar=gs_bar,
    )


def crossing_minimality(report: AAReport) -> CrossingMinimality:
    p, pbar = report.stats.P, report.stats_bar.P
    if p != 1 and pbar != 1:
        return CrossingMinimality.MINIMAL
    if p == 1 and pbar == 1:
        return CrossingMinimality.REDUCIBLE_BY_TWO
    side = report.stats if p == 1 else report.stats_bar
    if side.P2 - side.P0 + side.Q - side.S != 0:
        return CrossingMinimality.WITHIN_ONE_CROSSING
    return CrossingMinimality.INCONCLUSIVE


def lemma_dual_check(
    stats: AAPathStats, stats_bar: AAPathStats, gs: GraphStats, gs_bar: GraphStats
) -> Tuple[bool, bool]:
    membership = stats.P in (0, 2) or stats_bar.P in (0, 2)
    inequalities = stats.P + stats.Q <= gs.beta1 and stats_bar.P + stats_bar.Q <= gs_bar.beta1
    return membership, inequalities


# -------------------------------- obstructions on the Jones polynomial
def sign_obstruction(v: LaurentPoly) -> SignVerdict:
    """Consistent iff (|a0| = 1 and a0 a1 <= 0) or (|an| = 1 and a(n-1) an <= 0)."""
    lo, hi = v.min_exp, v.max_exp
    a0, an = v.coeff(lo), v.coeff(hi)
    # one t-step is two stored units; a monomial has no inner neighbours
    a1 = v.coeff(lo + 2) if hi > lo else 0
    an1 = v.coeff(hi - 2) if hi > lo else 0
    if (abs(a0) == 1 and a0 * a1 <= 0) or (abs(an) == 1 and an1 * an <= 0):
        return SignVerdict.CONSISTENT
    return SignVerdict.OBSTRUCTED


def unlink_jones(components: int) -> LaurentPoly:
    """(-t^(1/2) - t^(-1/2))^(components - 1)."""
    if components < 1:
        raise ValueError("an unlink has at least one component")
    factor = LaurentPoly.from_dict(Unit.HALF_T, {1: -1, -1: -1})
    return factor ** (components - 1)


def unlink_shift(v: LaurentPoly, components: int) -> Optional[int]:
    """The integer k with v = t^k * unlink_jones(components), if there is one."""
    if v.unit is not Unit.HALF_T or v.is_zero():
        return None
    target = unlink_jones(components)
    shift = v.min_exp - target.min_exp
    if shift % 2 or monomial_shift(target, 1, shift) != v:
        return None
    return shift // 2


def is_unit_times_unlink(v: LaurentPoly, components: int) -> bool:
    return unlink_shift(v, components) is not None


def span_certifies_minimal(d: LinkDiagram, v: LaurentPoly) -> bool:
    """An almost alternating diagram whose Jones span is c - 3 has the fewest crossings of its kind."""
    return span(v) == sympy.Integer(d.c - 3)


def semi_adequate_verdict(d: LinkDiagram, v: LaurentPoly) -> SemiAdequateVerdict:
    if not (is_a_adequate(d) or is_b_adequate(d)):
        return SemiAdequateVerdict.NOT_APPLICABLE
    k = unlink_shift(v, d.component_count)
    if k is None:
        return SemiAdequateVerdict.NONTRIVIAL
    if k != 0:
        raise InternalError(f"semi-adequate diagram has unlink polynomial shifted by t^{k}")
    return SemiAdequateVerdict.UNLINK


def aa_report(d: LinkDiagram, cert: DealternatorCert, v: LaurentPoly) -> AAReport:
    report = aa_coefficients(d, cert)
    nontrivial = (
        Nontriviality.VIOLATION
        if is_unit_times_unlink(v, d.component_count)
        else Nontriviality.NONTRIVIAL_JONES
    )
    return replace(
        report,
        minimality=crossing_minimality(report),
        sign_verdict=sign_obstruction(v),
        nontriviality=nontrivial,
        turaev_genus=turaev_genus(d),
        span_minimal=span_certifies_minimal(d, v),
        lemma_dual=lemma_dual_check(
            report.stats, report.stats_bar, report.graph_stats, report.graph_stats_bar
        ),
    )


__all__ = [
    "CrossingMinimality",
    "SignVerdict",
    "Nontriviality",
    "SemiAdequateVerdict",
    "DiagramClass",
    "DealternatorCert",
    "DasLinCoeffs",
    "AAReport",
    "find_dealternators",
    "classify",
    "classify_with_certs",
    "dasbach_lin_coeffs",
    "alternating_jones_checks",
    "aa_coefficients",
    "crossing_minimality",
    "lemma_dual_check",
    "sign_obstruction",
    "unlink_jones",
    "unlink_shift",
    "is_unit_times_unlink",
    "span_certifies_minimal",
    "semi_adequate_verdict",
    "aa_report",
]
