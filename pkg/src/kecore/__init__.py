"""König-Egerváry graphs: recognition, maximum matching and core(G)."""

from .core import (
    CoreResult,
    UniqueMIS,
    alpha_ke,
    compute_core,
    core_bipartite,
    core_general,
    core_perfect_matching,
    unique_mis,
)
from .errors import (
    InvalidMatchingError,
    KECoreError,
    NoPerfectMatchingError,
    NotBipartiteError,
    NotKEError,
    ParseError,
    PreconditionError,
    TooLargeError,
)
from .generator import GenSpec, gen_ke
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    closed_neighborhood,
    induced_delete,
    parse_graph,
)
from .ke_test import KEVerdict, is_ke, ke_given_matching
from .matching import Matching, has_perfect_matching, maximum_matching, mu_after_delete

__version__ = "0.1.0"
