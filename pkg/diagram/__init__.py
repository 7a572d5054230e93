"""
Link diagram ingestion package.

Provides oriented planar link diagrams and their combinatorial maps:
- Diagram model with crossings, components and braid provenance (LinkDiagram, Crossing, BraidWord)
- PD code parsing, serialization and crossing signs (parse_pd, serialize_pd, signs, mirror_diagram)
- Braid closures with surgery-arc tags (parse_braid, braid_closure)
- Rotation-system planar maps with an Euler check (PlanarMap, build_planar_map)
"""

from .braid import braid_closure, parse_braid, parse_braid_word, random_braid_word
from .models import SMOOTHING_PARTNER, BraidWord, Crossing, DiagramError, LinkDiagram
from .pd import mirror_diagram, parse_pd, serialize_pd, signs, writhe
from .planar_map import PlanarMap, build_planar_map

__all__ = [
    "SMOOTHING_PARTNER",
    "BraidWord",
    "Crossing",
    "DiagramError",
    "LinkDiagram",
    "PlanarMap",
    "braid_closure",
    "build_planar_map",
    "mirror_diagram",
    "parse_braid",
    "parse_braid_word",
    "parse_pd",
    "random_braid_word",
    "serialize_pd",
    "signs",
    "writhe",
]
