"""Wiener index behaviour under vertex deletion: good vertices, cactus
constructions and a unicyclic census."""

from .canon import CanonicalForm, are_isomorphic, automorphism_check, automorphism_orbits, canonical_form
from .census import CensusRow, find_g12, run_census
from .construct import ConstructionParams, ConstructionReport, construct
from .enumeration import count_unicyclic, enumerate_trees, enumerate_unicyclic
from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    DisconnectingDeletionError,
    Graph6Error,
    GraphError,
    InvalidVertexError,
    VerificationError,
)
from .good import AnalysisReport, DeletionDelta, analyze, delta_profile, good_vertices
from .graph import (
    Graph,
    articulation_vertices,
    attach_pendant,
    delete_vertex,
    is_connected,
    longest_cycle_length,
)
from .graph6 import decode_graph6, encode_graph6, to_dot
from .metrics import transmission, transmissions, wiener_index

__version__ = "0.1.0"
