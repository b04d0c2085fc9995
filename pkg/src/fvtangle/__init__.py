"""Classification of flat virtual pure tangles by descending Gauss diagrams."""
from .gauss import (
    AFTER, BEFORE, EQUAL, Arrow, CanonicalMode, DiagramError, Endpoint,
    IllegalSite, ParseError, PureTangleDiagram, Violation, bigons, empty,
    flatten, illegal_count, illegal_sites, is_canonical, kinks, parse,
    serialize, total_order, validate,
)

__version__ = '0.1.0'
