"""Tools for (r,c)-constant graphs: regular graphs whose every vertex link has c edges."""

from __future__ import annotations

from .canon import CanonicalForm, canonical_form, canonical_graph
from .catalog import Catalog, CatalogRecord, seed_catalog
from .circulant import (
    BelowBound,
    CirculantError,
    CirculantSpec,
    Mod3Impossible,
    construct_rc_circulant,
    edge_orbit,
    make_circulant,
    orbit_partition,
)
from .constructions import (
    NoPartition,
    cartesian_product,
    complement_signature,
    complement_transform,
    fact2_construct,
    solve_clique_partition,
)
from .graph import GraphError, RcSignature, SizeCapExceeded, SmallGraph, neighborhood_edges, rc_signature
from .graph6 import Graph6Error, g6_decode, g6_encode
from .nonexistence import (
    NonexistenceCertificate,
    bad_link_certificate,
    enumerate_links,
    fact3_check,
    find_certificate,
    planar_arithmetic,
    verify_certificate,
)
from .planarity import is_planar
from .search import (
    SearchBudgetExceeded,
    SearchConfig,
    SearchResult,
    SearchStats,
    extend_one_vertex,
    find_smallest,
    generate_rc_graphs,
    prune,
    search,
    smallest_rc_graph,
)

__version__ = "0.1.0"
