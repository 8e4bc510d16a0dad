"""dynplanar: fully dynamic planarity testing with maintained embeddings.

An engine maintains, under edge insertions and deletions over a fixed
vertex domain, the block/cut-vertex forest, per-block SPQR trees,
combinatorial embeddings of every triconnected component, two-coloured
separating pairs along coherent tree paths, per-block embeddings, and a
whole-graph rotation scheme. Insertions that would break planarity are
rejected without mutating anything.
"""
from .engine import Engine
from .graph_core import (
    ACCEPTED,
    DELETE,
    INSERT,
    NOOP_ABSENT,
    NOOP_DUPLICATE,
    REJECTED_NONPLANAR,
    ChangeOutcome,
    EdgeChangeType,
)

__all__ = [
    "ACCEPTED",
    "DELETE",
    "INSERT",
    "NOOP_ABSENT",
    "NOOP_DUPLICATE",
    "REJECTED_NONPLANAR",
    "ChangeOutcome",
    "EdgeChangeType",
    "Engine",
]

__version__ = "0.1.0"
