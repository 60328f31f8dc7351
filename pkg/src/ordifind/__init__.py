"""Greedy ordinal factorization of binary object/attribute datasets.

Pipeline: parse a formal context, build its concept lattice, extract greedy
ordinal factors (maximal lattice chains, equivalently staircase-shaped
subrelations of the incidence), then rank and explore objects by how well
they match per-factor positions.
"""

from .context import (
    FormalContext,
    ParseError,
    derive_extent,
    derive_intent,
    parse_context,
    serialize_context,
)
from .factorize import (
    Factorization,
    FactorTick,
    OrdinalFactor,
    factor_ticks,
    factorize_naive,
    ordifind,
)
from .ferrers import (
    ConceptChain,
    FerrersRelation,
    chain_to_ferrers,
    is_ferrers,
    max_ferrers,
)
from .interface import (
    FactorizationDocument,
    export_factorization,
    import_factorization,
    plot2d,
)
from .lattice import (
    Concept,
    ConceptLattice,
    ConceptLimitError,
    attribute_concept,
    build_lattice,
    linear_extension,
    object_concept,
)
from .metrics import (
    distance,
    hamming,
    position,
    rank_objects,
    selection_distance,
    supported_positions,
)

__version__ = "0.1.0"

__all__ = [
    "FormalContext",
    "ParseError",
    "derive_extent",
    "derive_intent",
    "parse_context",
    "serialize_context",
    "Concept",
    "ConceptLattice",
    "ConceptLimitError",
    "build_lattice",
    "attribute_concept",
    "object_concept",
    "linear_extension",
    "FerrersRelation",
    "ConceptChain",
    "is_ferrers",
    "chain_to_ferrers",
    "max_ferrers",
    "FactorTick",
    "OrdinalFactor",
    "Factorization",
    "factor_ticks",
    "factorize_naive",
    "ordifind",
    "position",
    "distance",
    "hamming",
    "selection_distance",
    "rank_objects",
    "supported_positions",
    "FactorizationDocument",
    "export_factorization",
    "import_factorization",
    "plot2d",
]
