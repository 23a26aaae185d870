"""Kauffman bracket, Jones polynomial and almost alternating diagram analytics."""

__version__ = "0.1.0"

from aajones.diagram import LinkDiagram, parse_pd, serialize, writhe  # noqa: E402
from aajones.kauffman import bracket, jones  # noqa: E402
from aajones.laurent import LaurentPoly, Unit, format_poly, parse_poly  # noqa: E402

__all__ = [
    "__version__",
    "LinkDiagram",
    "parse_pd",
    "serialize",
    "writhe",
    "bracket",
    "jones",
    "LaurentPoly",
    "Unit",
    "format_poly",
    "parse_poly",
]
