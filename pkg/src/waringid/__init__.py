"""Exact identifiability tests for Waring decompositions of quartic forms."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CBNotSatisfied,
    InputError,
    NumericalRangeError,
    RankOutOfRange,
    WaringError,
    WrongRank,
)
from .exactlin import RationalMatrix, kernel_basis, rank, rank_float  # noqa: E402
from .geometry import (  # noqa: E402
    PencilCertificate,
    RncCertificate,
    RncVerdict,
    apolar_pencil,
    castelnuovo_certificate,
    gkr_inequality_check,
    macaulay_check,
    vandermonde_points,
)
from .identify import (  # noqa: E402
    Decomposition,
    IdentifiabilityReport,
    Verdict,
    certify,
    kruskal_test,
    minimality_test,
    reshaped_kruskal_test,
    terracini_test,
)
from .pointset import (  # noqa: E402
    HilbertProfile,
    PointSet,
    evaluation_matrix,
    hilbert_function,
    hilbert_profile,
    is_lgp,
    kruskal_rank,
    satisfies_cb,
    separates,
)
from .veronese import monomials, tangent_basis, veronese_embed  # noqa: E402
