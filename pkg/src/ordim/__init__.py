"""Finite toolkit for order extensions, multi-utility representations and
order dimension, with exact rational arithmetic throughout."""

from .config import SearchConfig, default_config
from .dimension import DimensionCertificate, critical_pairs, dimension, refutes
from .errors import OrdimError
from .extension import (
    ExtensionTrace,
    RelationSequence,
    antichain_extension,
    canonical_linear_extension,
    debreu_extension_from_dense,
    debreu_extension_from_sets,
    extension_from_monotone,
    lex_extension,
    limit_of_sequence,
)
from .generators import FamilySpec, generate
from .poset import (
    Poset,
    PairClass,
    classify_pair,
    from_cover_relations,
    intersect,
    is_extension,
    is_order_isomorphic,
    minimum_dense_subset,
)
from .representations import (
    IncreasingSetFamily,
    MultiUtility,
    Realizer,
    increasing_family_from_multi_utility,
    injective_monotone_from_family,
    injective_multi_utility_from_multi_utility,
    injective_multi_utility_to_realizer,
    realizer_from_multi_utility,
    realizer_to_injective_multi_utility,
    strictify_multi_utility,
    validate_representation,
)

__version__ = "0.1.0"
