"""posetc: finite posets, their antichain orders, and map embeddings.

Core objects: :class:`FinitePoset` (dense validated order matrix),
:func:`all_antichains` / :func:`antichain_poset` (the domination order on
antichains), :func:`embed` / :func:`verify_embedding` (the maps
f_a(x) = Max L(a, x) and the machine check that a -> f_a is an order
embedding), lattice tables with the homomorphism counterexample scan, and
a seeded random-poset oracle with a small isomorphism checker.
"""

from ._kernels import backend_name, set_backend
from .antichains import (
    DEFAULT_ENUM_CAP,
    AntichainPoset,
    PowersetOrderStatus,
    all_antichains,
    antichain_poset,
    powerset_order_status,
    subset_leq,
)
from .cayley import (
    CayleyMap,
    MapFamily,
    cayley_map,
    embed,
    image_subposet,
    map_leq,
    verify_embedding,
)
from .errors import (
    AntichainOrderNotLattice,
    BaseMismatch,
    CycleDetected,
    DuplicateElement,
    NotALattice,
    PosetError,
    PosetFormatError,
    TooLarge,
    UnknownElement,
)
from .lattice import (
    HomomorphismReport,
    HomomorphismWitness,
    LatticeTables,
    join_homomorphism_witness,
    lattice_tables,
    pointwise_join,
    pointwise_meet,
    singleton_meet_check,
)
from .oracle import GenConfig, are_isomorphic, random_poset
from .poset import (
    FinitePoset,
    Law,
    OrderWitness,
    format_poset,
    from_relations,
    parse_poset,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainOrderNotLattice",
    "AntichainPoset",
    "BaseMismatch",
    "CayleyMap",
    "CycleDetected",
    "DEFAULT_ENUM_CAP",
    "DuplicateElement",
    "FinitePoset",
    "GenConfig",
    "HomomorphismReport",
    "HomomorphismWitness",
    "LatticeTables",
    "Law",
    "MapFamily",
    "NotALattice",
    "OrderWitness",
    "PosetError",
    "PosetFormatError",
    "PowersetOrderStatus",
    "TooLarge",
    "UnknownElement",
    "all_antichains",
    "antichain_poset",
    "are_isomorphic",
    "backend_name",
    "cayley_map",
    "embed",
    "format_poset",
    "from_relations",
    "image_subposet",
    "join_homomorphism_witness",
    "lattice_tables",
    "map_leq",
    "parse_poset",
    "pointwise_join",
    "pointwise_meet",
    "powerset_order_status",
    "random_poset",
    "set_backend",
    "singleton_meet_check",
    "subset_leq",
    "verify_embedding",
]
