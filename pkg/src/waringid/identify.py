"""Identifiability certificates for Waring decompositions of quartics.

For a decomposition ``T = sum_i w_i * nu_4(P_i)`` of length ``r`` in ``n + 1``
variables, :func:`certify` runs

* ``r > 2n+1``: nothing can be said (NOT_APPLICABLE);
* ``r < 2n+1``: minimality plus the reshaped Kruskal criterion with the
  degree split 4 = 2 + 1 + 1;
* ``r = 2n+1``: minimality, linear general position of the points, and
  Terracini's tangent-space count, stopping at the first failure.

All tests are rank conditions on spans, so weights never affect a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import InputError, RankOutOfRange, WrongRank
from .exactlin import Scalar, as_rational, integer_rank
from .pointset import PointSet, SubsetIndependence, kruskal_rank_of_vectors
from .veronese import num_monomials, power_form_coefficients, tangent_basis, veronese_embed


@dataclass(frozen=True)
class Decomposition:
    """Candidate decomposition ``T = sum_i weights[i] * nu_d(points[i])``.

    Weights refer to the normalised representatives stored in ``points``.
    """

    points: PointSet
    weights: tuple[Fraction, ...] = ()
    d: int = 4

    def __post_init__(self):
        if len(self.points) < 1:
            raise InputError("a decomposition needs at least one point")
        if not self.weights:
            object.__setattr__(self, "weights", (Fraction(1),) * len(self.points))
        else:
            ws = tuple(as_rational(w) for w in self.weights)
            if len(ws) != len(self.points):
                raise InputError(f"{len(ws)} weights for {len(self.points)} points")
            if any(w == 0 for w in ws):
                raise InputError("weights must be nonzero")
            object.__setattr__(self, "weights", ws)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], weights: Sequence[Scalar] = (), d: int = 4,
                  n: int | None = None) -> Decomposition:
        return cls(PointSet(rows, n), tuple(as_rational(w) for w in weights), d)

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def r(self) -> int:
        return len(self.points)


def tensor_coefficients(D: Decomposition) -> tuple[Fraction, ...]:
    """Coefficients of ``sum_i w_i (P_i . x)**d`` in the graded-lex monomial basis."""
    total = [Fraction(0)] * num_monomials(D.n, D.d)
    for w, p in zip(D.weights, D.points):
        for k, c in enumerate(power_form_coefficients(p, D.d)):
            total[k] += w * c
    return tuple(total)


def _require_quartic(D: Decomposition) -> None:
    if D.d != 4:
        raise InputError(f"this test is defined for quartics only (d=4), got d={D.d}")


def _integer_rows(vectors) -> list[list[int]]:
    # rows come from primitive integer points, so every entry is integral
    return [[int(x) for x in v] for v in vectors]


def minimality_test(D: Decomposition) -> tuple[bool, int]:
    """Are the ``r`` fourth Veronese images linearly independent?"""
    _require_quartic(D)
    rows = _integer_rows(veronese_embed(p, 4) for p in D.points.integer_points)
    rk = integer_rank(rows)
    return rk == D.r, rk


def kruskal_test(D: Decomposition) -> tuple[bool, int]:
    """Linear general position of the points, with their Kruskal rank."""
    checker = SubsetIndependence(D.points.integer_points)
    k = checker.kruskal_rank()
    return k == min(D.r, D.n + 1), k


def terracini_dimension(D: Decomposition) -> int:
    """Dimension of the span of the affine tangent spaces at all ``nu_4(P_i)``."""
    rows = []
    for p in D.points.integer_points:
        rows.extend(_integer_rows(tangent_basis(p, 4)))
    return integer_rank(rows)


def expected_terracini_dimension(n: int) -> int:
    return 2 * n * n + 3 * n + 1


def terracini_test(D: Decomposition) -> tuple[bool, int]:
    """Tangent spaces at ``2n+1`` points must span ``(2n+1)(n+1)`` dimensions."""
    _require_quartic(D)
    if D.r != 2 * D.n + 1:
        raise WrongRank(f"Terracini's test needs r = 2n+1 = {2 * D.n + 1}, got r = {D.r}")
    dim = terracini_dimension(D)
    return dim == expected_terracini_dimension(D.n), dim


@dataclass(frozen=True)
class ReshapedKruskalDetails:
    nu2_kruskal_rank: int
    nu2_lgp: bool
    kruskal_rank: int
    lgp: bool
    bound_lhs: int
    bound_rhs: Fraction
    inequality: bool


def reshaped_kruskal_test(D: Decomposition) -> tuple[bool, ReshapedKruskalDetails]:
    """Kruskal's criterion on the 4 = 2 + 1 + 1 reshaping of the quartic.

    Requires ``nu_2(A)`` and ``A`` in linear general position and
    ``r <= (min(C(n+2,2), r) + 2 * min(n+1, r)) / 2 - 1``.
    """
    _require_quartic(D)
    n, r = D.n, D.r
    if r > 2 * n:
        raise RankOutOfRange(f"reshaped Kruskal covers r <= 2n = {2 * n}, got r = {r}")
    quad_dim = comb(n + 2, 2)
    quad_rows = _integer_rows(veronese_embed(p, 2) for p in D.points.integer_points)
    if r <= quad_dim:
        nu2_k = r if integer_rank(quad_rows) == r else kruskal_rank_of_vectors(quad_rows)
    else:
        nu2_k = kruskal_rank_of_vectors(quad_rows)
    nu2_lgp = nu2_k == min(r, quad_dim)
    lgp, k = kruskal_test(D)
    rhs = Fraction(min(quad_dim, r) + 2 * min(n + 1, r), 2) - 1
    inequality = r <= rhs
    details = ReshapedKruskalDetails(nu2_k, nu2_lgp, k, lgp, r, rhs, inequality)
    return nu2_lgp and lgp and inequality, details


class Verdict(str, enum.Enum):
    IDENTIFIABLE = "IDENTIFIABLE"
    RESHAPED_KRUSKAL_OK = "RESHAPED_KRUSKAL_OK"
    TEST_FAILED = "TEST_FAILED"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class IdentifiabilityReport:
    verdict: Verdict
    r: int
    n: int
    minimality_rank: int | None = None
    kruskal_rank: int | None = None
    terracini_dim: int | None = None
    failed_test: str | None = None
    notes: tuple[str, ...] = field(default=())

    def evidence(self) -> dict:
        """Every field except the free-text notes."""
        return {
            "verdict": self.verdict.value,
            "r": self.r,
            "n": self.n,
            "minimality_rank": self.minimality_rank,
            "kruskal_rank": self.kruskal_rank,
            "terracini_dim": self.terracini_dim,
            "failed_test": self.failed_test,
        }


_RNC_NOTE = (
    "cannot conclude identifiability: for a minimal decomposition in linear general "
    "position with r = 2n+1, a Terracini defect arises when the points lie on a rational "
    "normal curve, in which case a one-parameter family of decompositions of length 2n+1 "
    "passes through this one"
)


def certify(D: Decomposition) -> IdentifiabilityReport:
    _require_quartic(D)
    n, r = D.n, D.r
    if n < 1:
        raise InputError("certify needs n >= 1")
    if r > 2 * n + 1:
        return IdentifiabilityReport(
            Verdict.NOT_APPLICABLE, r, n,
            notes=(f"r = {r} exceeds 2n+1 = {2 * n + 1}; the criterion does not apply",),
        )

    ok, mrank = minimality_test(D)
    if not ok:
        return IdentifiabilityReport(
            Verdict.TEST_FAILED, r, n, minimality_rank=mrank, failed_test="minimality",
            notes=(f"nu_4 images span dimension {mrank} < r = {r}; decomposition is not minimal",),
        )

    if r < 2 * n + 1:
        passed, det = reshaped_kruskal_test(D)
        if passed:
            return IdentifiabilityReport(
                Verdict.RESHAPED_KRUSKAL_OK, r, n, minimality_rank=mrank, kruskal_rank=det.kruskal_rank,
                notes=(f"reshaped Kruskal bound {r} <= {det.bound_rhs} with nu_2(A) and A in LGP; "
                       f"rank {r}, identifiable",),
            )
        if not det.nu2_lgp:
            reason = f"nu_2(A) has Kruskal rank {det.nu2_kruskal_rank} < {min(r, comb(n + 2, 2))}"
        elif not det.lgp:
            reason = f"A has Kruskal rank {det.kruskal_rank} < {min(r, n + 1)}"
        else:
            reason = f"bound violated: {r} > {det.bound_rhs}"
        return IdentifiabilityReport(
            Verdict.TEST_FAILED, r, n, minimality_rank=mrank, kruskal_rank=det.kruskal_rank,
            failed_test="reshaped_kruskal", notes=(reason,),
        )

    lgp, k = kruskal_test(D)
    if not lgp:
        return IdentifiabilityReport(
            Verdict.TEST_FAILED, r, n, minimality_rank=mrank, kruskal_rank=k, failed_test="kruskal",
            notes=(f"Kruskal rank {k} < n+1 = {n + 1}; points are not in linear general position",),
        )

    passed, dim = terracini_test(D)
    expected = expected_terracini_dimension(n)
    if not passed:
        return IdentifiabilityReport(
            Verdict.TEST_FAILED, r, n, minimality_rank=mrank, kruskal_rank=k, terracini_dim=dim,
            failed_test="terracini",
            notes=(f"tangent spaces span dimension {dim} < {expected}", _RNC_NOTE),
        )
    return IdentifiabilityReport(
        Verdict.IDENTIFIABLE, r, n, minimality_rank=mrank, kruskal_rank=k, terracini_dim=dim,
        notes=(f"minimal, in LGP and Terracini dimension {dim} = {expected}; rank {r}, identifiable",),
    )


EXAMPLE_MATRIX: tuple[tuple[int, ...], ...] = (
    (0, 1, 1, -3, -5, 2, -1, 2, -1),
    (-2, -1, 2, 0, 1, 2, -4, 3, 1),
    (2, 0, 5, 1, 4, -5, -1, -3, 4),
    (1, -5, -1, 3, -2, 3, 5, 2, -3),
    (1, -3, -2, -5, -4, 3, -2, 1, 4),
)
"""Five by nine integer matrix whose columns are an identifiable decomposition for n = 4."""


def example_points() -> list[tuple[int, ...]]:
    return [tuple(col) for col in zip(*EXAMPLE_MATRIX)]
