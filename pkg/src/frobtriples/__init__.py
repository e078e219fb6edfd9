"""p-Frobenius numbers, p-genus and p-Sylvester sums of numerical semigroups.

The generic engine works for any coprime generator set; closed forms cover
the triples (x, y, z) with x^2 + y^2 = z^r for r = 2..5.
"""

__version__ = "0.1.0"

from .algebraic import Side, Threshold, compare_ratio  # noqa: E402
from .closed_forms import (  # noqa: E402
    ClosedFormResult,
    CornerSpec,
    apery_corners,
    g0_closed,
    g1_closed,
    n0_closed,
)
from .errors import FrobError  # noqa: E402
from .regimes import RegimeLabel, classify_regime  # noqa: E402
from .semigroup import (  # noqa: E402
    DenumerantTable,
    GeneratorSet,
    PAperySet,
    SemigroupStats,
    denumerant_table,
    gaps_oracle,
    generic_stats,
    p_apery_set,
    stats_from_apery,
    two_gen_stats,
)
from .triples import (  # noqa: E402
    Triple,
    TripleParams,
    enumerate_params,
    general_xyz,
    make_triple,
    ordering_of,
)

__all__ = [
    "ClosedFormResult",
    "CornerSpec",
    "DenumerantTable",
    "FrobError",
    "GeneratorSet",
    "PAperySet",
    "RegimeLabel",
    "SemigroupStats",
    "Side",
    "Threshold",
    "Triple",
    "TripleParams",
    "apery_corners",
    "classify_regime",
    "compare_ratio",
    "denumerant_table",
    "enumerate_params",
    "g0_closed",
    "g1_closed",
    "gaps_oracle",
    "general_xyz",
    "generic_stats",
    "make_triple",
    "n0_closed",
    "ordering_of",
    "p_apery_set",
    "stats_from_apery",
    "two_gen_stats",
]
