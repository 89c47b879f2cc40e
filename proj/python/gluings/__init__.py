"""Exact counts of polygon gluings into orientable surfaces.

Thin wrapper around the compiled core: brute-force enumeration over
permutation pairs, recurrences and closed forms with exact integers, and
audits of the edge-deletion operation.
"""

from ._core import (
    GluingDiagram,
    audit_bicolored_deletion,
    audit_deletion_multiplicities,
    bicolored_one_face,
    classify_deletion,
    closed_B0_2,
    closed_eps0_2,
    closed_eps0_3,
    closed_eps1_2,
    closed_eps2_2,
    count_bicolored,
    count_eps,
    count_eps_tilde,
    delete_marked_edge,
    eps_one_face,
    genus_spectrum,
    identity_suite,
    rec_B0_2,
    rec_eps0_2,
    rec_eps0_3,
    rec_eps1_2,
    rec_eps_tilde,
)

__version__ = "0.1.0"

__all__ = [
    "GluingDiagram",
    "audit_bicolored_deletion",
    "audit_deletion_multiplicities",
    "bicolored_one_face",
    "classify_deletion",
    "closed_B0_2",
    "closed_eps0_2",
    "closed_eps0_3",
    "closed_eps1_2",
    "closed_eps2_2",
    "count_bicolored",
    "count_eps",
    "count_eps_tilde",
    "delete_marked_edge",
    "eps_one_face",
    "genus_spectrum",
    "identity_suite",
    "rec_B0_2",
    "rec_eps0_2",
    "rec_eps0_3",
    "rec_eps1_2",
    "rec_eps_tilde",
]
