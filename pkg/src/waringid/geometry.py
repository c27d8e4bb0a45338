"""Certificates built on point-set invariants.

* Cayley-Bacharach bound on h-vectors (:func:`gkr_inequality_check`).
* Macaulay growth test on h-vectors (:func:`macaulay_check`).
* Rational normal curve certificate from the relaxed Castelnuovo lemma
  (:func:`castelnuovo_certificate`).
* Apolar pencil of a decomposition supported on the standard rational normal
  curve (:func:`apolar_pencil`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import CBNotSatisfied, InputError
from .exactlin import RationalMatrix, Scalar, as_rational, kernel_basis
from .pointset import (
    HilbertProfile,
    PointSet,
    SubsetIndependence,
    hilbert_function,
    hilbert_profile,
    satisfies_cb,
)


def vandermonde_points(n: int, lambdas: Sequence[Scalar]) -> PointSet:
    """Points ``(1, t, t**2, ..., t**n)`` of the standard rational normal curve."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    ts = [as_rational(t) for t in lambdas]
    if len(set(ts)) != len(ts):
        raise InputError("lambdas must be pairwise distinct")
    return PointSet([[t**k for k in range(n + 1)] for t in ts], n)


def rnc_parameters(Z: PointSet) -> list[Fraction]:
    """Recover ``t`` for every point of ``Z`` on the standard curve ``(1, t, ..., t**n)``.

    Raises InputError if some point is not of that form.
    """
    out = []
    for i, p in enumerate(Z.points):
        t = p[1] if Z.n >= 1 else None
        if t is None or p[0] != 1 or any(p[k] != t**k for k in range(Z.n + 1)):
            raise InputError(f"point {i} is not on the standard rational normal curve")
        out.append(t)
    return out


# -- h-vector inequalities -------------------------------------------------


def _dh_sequence(source: HilbertProfile | Sequence[int]) -> list[int]:
    if isinstance(source, HilbertProfile):
        return list(source.dh)
    return [int(x) for x in source]


def gkr_violation(dh: Sequence[int], i: int) -> int | None:
    """First ``j`` in ``0..i+1`` breaking ``sum(dh[:j+1]) <= sum(dh[i+1-j : i+2])``.

    ``dh`` is read as zero beyond its end. Returns None if no ``j`` breaks it.
    """
    def D(k: int) -> int:
        return dh[k] if 0 <= k < len(dh) else 0

    for j in range(i + 2):
        head = sum(D(k) for k in range(j + 1))
        tail = sum(D(k) for k in range(i + 1 - j, i + 2))
        if head > tail:
            return j
    return None


def gkr_inequality_check(Z: PointSet, i: int, profile: HilbertProfile | None = None) -> bool:
    """Check the h-vector inequalities forced by CB(i).

    The caller must supply a set satisfying CB(i); otherwise CBNotSatisfied is
    raised. A False return would contradict the theorem and is treated by the
    test-suite as a failure.
    """
    ok, witness = satisfies_cb(Z, i)
    if not ok:
        raise CBNotSatisfied(f"CB({i}) fails: point {witness} is separated by degree-{i} forms")
    profile = profile or hilbert_profile(Z)
    return gkr_violation(profile.dh, i) is None


def macaulay_check(source: HilbertProfile | Sequence[int]) -> bool:
    """Growth test on a difference sequence starting at degree 0.

    Wherever ``Dh(j) <= j`` with ``j > 0`` the sequence may not increase, and
    once it hits zero at a positive index it stays zero.
    """
    dh = _dh_sequence(source)
    D = dh + [0]
    for j in range(1, len(dh)):
        if D[j] <= j and D[j] < D[j + 1]:
            return False
    first_zero = next((j for j in range(1, len(dh)) if dh[j] == 0), None)
    if first_zero is not None and any(dh[first_zero:]):
        return False
    return True


# -- Castelnuovo -----------------------------------------------------------


class RncVerdict(str, enum.Enum):
    ON_RNC = "ON_RNC"
    NO_LGP_SUBSET = "NO_LGP_SUBSET"
    H2_TOO_BIG = "H2_TOO_BIG"
    TOO_FEW_POINTS = "TOO_FEW_POINTS"


@dataclass(frozen=True)
class RncCertificate:
    verdict: RncVerdict
    h2: int
    lgp_subset: tuple[int, ...] | None = None


def castelnuovo_certificate(Z: PointSet) -> RncCertificate:
    """Decide whether the relaxed Castelnuovo lemma places ``Z`` on a rational normal curve.

    The hypotheses are ``l(Z) >= 2n+3``, ``h_Z(2) <= 2n+1`` and some
    ``(2n+1)``-subset in linear general position. The curve itself is never
    constructed. ``NO_LGP_SUBSET`` means the lemma does not apply, not that no
    curve exists.
    """
    n = Z.n
    h2 = hilbert_function(Z, 2)
    if len(Z) < 2 * n + 3:
        return RncCertificate(RncVerdict.TOO_FEW_POINTS, h2)
    if h2 > 2 * n + 1:
        return RncCertificate(RncVerdict.H2_TOO_BIG, h2)
    checker = SubsetIndependence(Z.integer_points)
    for subset in combinations(range(len(Z)), 2 * n + 1):
        if checker.is_lgp(subset):
            return RncCertificate(RncVerdict.ON_RNC, h2, subset)
    return RncCertificate(RncVerdict.NO_LGP_SUBSET, h2)


# -- apolar pencil ---------------------------------------------------------


@dataclass(frozen=True)
class PencilCertificate:
    """Kernel of the middle catalecticant of the restricted binary form.

    ``catalecticant[a][b] = c[a + b]`` where the binary form of degree 4n is
    ``sum_k C(4n, k) * c[k] * s**(4n-k) * t**k``. A kernel vector ``g`` is a
    degree-(2n+1) dual form ``sum_b g[b] * S**(2n+1-b) * T**b`` apolar to it.
    """

    n: int
    catalecticant: RationalMatrix
    kernel_dim: int
    kernel: RationalMatrix = field(repr=False)
    binary_form: tuple[Fraction, ...] = field(repr=False, default=())

    @property
    def family_certified(self) -> bool:
        return self.kernel_dim >= 2


def scaled_binary_coefficients(
    weights: Sequence[Scalar], lambdas: Sequence[Scalar], degree: int
) -> list[Fraction]:
    """``c[k] = sum_i w_i * t_i**k`` for ``k = 0..degree``.

    These are the coefficients of ``sum_i w_i (s + t_i t)**degree`` with the
    binomial factors divided out.
    """
    ws = [as_rational(w) for w in weights]
    ts = [as_rational(t) for t in lambdas]
    return [sum((w * t**k for w, t in zip(ws, ts)), Fraction(0)) for k in range(degree + 1)]


def apolar_pencil(weights: Sequence[Scalar], lambdas: Sequence[Scalar], n: int) -> PencilCertificate:
    """Catalecticant kernel for ``2n+1`` weighted points on the standard curve.

    The quartic restricted to the curve is the binary form of degree ``4n``
    ``sum_i w_i (s + t_i t)**(4n)``. Its ``2n x (2n+2)`` catalecticant has a
    kernel of dimension at least 2 exactly when the given decomposition moves
    in a one-parameter family along the curve.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    ws = [as_rational(w) for w in weights]
    ts = [as_rational(t) for t in lambdas]
    r = 2 * n + 1
    if len(ws) != r or len(ts) != r:
        raise InputError(f"need exactly {r} weights and lambdas, got {len(ws)} and {len(ts)}")
    if any(w == 0 for w in ws):
        raise InputError("weights must be nonzero")
    if len(set(ts)) != r:
        raise InputError("lambdas must be pairwise distinct")
    c = scaled_binary_coefficients(ws, ts, 4 * n)
    cat = RationalMatrix([[c[a + b] for b in range(2 * n + 2)] for a in range(2 * n)])
    ker = kernel_basis(cat)
    return PencilCertificate(n=n, catalecticant=cat, kernel_dim=ker.cols, kernel=ker, binary_form=tuple(c))


def sharpness_configuration() -> PointSet:
    """Nine points of P^3 with ``h_Z(2) = 7`` but no 7-subset in general position.

    Four points ``(1, a, b, ab)`` on the quadric ``xw = yz`` and five points
    ``(0, 0, 1, c)`` on the line ``x = y = 0``, which lies on that quadric.
    """
    quadric = [(1, a, b, a * b) for a, b in [(1, 2), (2, -1), (-1, 3), (3, 5)]]
    line = [(0, 0, 1, c) for c in range(5)]
    return PointSet(quadric + line, 3)

