"""Finite point configurations in projective space and their invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .exactlin import RationalMatrix, Scalar, as_rational, integer_rank
from .veronese import num_monomials, veronese_embed


def normalize(point: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Scale so that the first nonzero coordinate is 1."""
    vec = tuple(as_rational(x) for x in point)
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise InputError("the zero vector is not a projective point")
    return tuple(x / lead for x in vec)


def primitive_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """The integer multiple of ``vec`` with coprime entries."""
    den = math.lcm(*(x.denominator for x in vec))
    ints = [x.numerator * (den // x.denominator) for x in vec]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class PointSet:
    """Pairwise distinct points of P^n, each stored with leading coordinate 1.

    Construction validates and normalises; the object is immutable afterwards.
    """

    points: tuple[tuple[Fraction, ...], ...]
    n: int
    integer_points: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, points: Iterable[Sequence[Scalar]], n: int | None = None):
        rows = [tuple(p) for p in points]
        if n is None:
            if not rows:
                raise InputError("cannot infer n from an empty point list")
            n = len(rows[0]) - 1
        if n < 0:
            raise InputError(f"ambient dimension must be >= 0, got {n}")
        normalized = []
        seen: dict[tuple[Fraction, ...], int] = {}
        for i, row in enumerate(rows):
            if len(row) != n + 1:
                raise InputError(f"point {i} has {len(row)} coordinates, expected {n + 1}")
            try:
                p = normalize(row)
            except InputError as exc:
                raise InputError(f"point {i}: {exc}") from exc
            if p in seen:
                raise InputError(f"points {seen[p]} and {i} are proportional")
            seen[p] = i
            normalized.append(p)
        object.__setattr__(self, "points", tuple(normalized))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "integer_points", tuple(primitive_integer(p) for p in normalized))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self.points)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.points[i]

    def subset(self, indices: Iterable[int]) -> PointSet:
        return PointSet([self.points[i] for i in indices], self.n)

    def without(self, i: int) -> PointSet:
        return PointSet(self.points[:i] + self.points[i + 1 :], self.n)

    def transform(self, g: Sequence[Sequence[Scalar]]) -> PointSet:
        """Apply the linear map ``g`` (a square matrix) to every point."""
        G = [[as_rational(x) for x in row] for row in g]
        if len(G) != self.n + 1 or any(len(row) != self.n + 1 for row in G):
            raise InputError("transformation must be (n+1)x(n+1)")
        return PointSet(([sum(a * b for a, b in zip(row, p)) for row in G] for p in self.points), self.n)


@dataclass(frozen=True)
class HilbertProfile:
    """Hilbert function of a point set up to stabilisation.

    ``h[j]`` for ``j = 0..len(h)-1``, the last entry equal to the cardinality;
    ``dh`` is the h-vector (first differences, all positive).
    """

    h: tuple[int, ...]
    dh: tuple[int, ...]
    socle_degree: int
    cardinality: int

    def value(self, j: int) -> int:
        if j < 0:
            return 0
        return self.h[j] if j < len(self.h) else self.cardinality

    def difference(self, j: int) -> int:
        return self.value(j) - self.value(j - 1)

    def residual(self, j: int) -> int:
        """``l(Z) - h_Z(j)``, the failure of degree-j forms to separate Z."""
        return self.cardinality - self.value(j)


def evaluation_matrix(Z: PointSet, j: int) -> RationalMatrix:
    """``len(Z)`` by ``C(n+j, j)`` matrix whose rows are the degree-``j`` images."""
    if j < 0:
        raise InputError(f"degree must be >= 0, got {j}")
    return RationalMatrix((veronese_embed(p, j) for p in Z.points), cols=num_monomials(Z.n, j))


def gram_matrix(Z: PointSet, j: int) -> list[list[int]]:
    """Integer matrix ``((p_a . p_b) ** j)`` on primitive integer representatives.

    It equals ``E W E^T`` with ``E`` the evaluation matrix (rows rescaled) and
    ``W`` the positive diagonal of multinomial coefficients, so over Q its rank
    is the rank of ``E``.
    """
    pts = Z.integer_points
    dots = [[sum(x * y for x, y in zip(p, q)) for q in pts] for p in pts]
    return [[v**j for v in row] for row in dots]


def hilbert_function(Z: PointSet, j: int, method: str = "auto") -> int:
    """Number of conditions ``Z`` imposes on forms of degree ``j``.

    ``method`` selects the rank route: ``"evaluation"`` uses the evaluation
    matrix, ``"gram"`` the ``len(Z)`` square Gram matrix, ``"auto"`` whichever
    is smaller.
    """
    if j < 0:
        return 0
    if len(Z) == 0:
        return 0
    if method == "auto":
        method = "gram" if num_monomials(Z.n, j) > len(Z) else "evaluation"
    if method == "gram":
        return integer_rank(gram_matrix(Z, j))
    if method == "evaluation":
        pts = Z.integer_points
        rows = [veronese_embed(p, j) for p in pts]
        return integer_rank([[int(x) for x in row] for row in rows])
    raise InputError(f"unknown method {method!r}")


def hilbert_profile(Z: PointSet) -> HilbertProfile:
    if len(Z) < 1:
        raise InputError("hilbert_profile needs at least one point")
    ell = len(Z)
    h = [hilbert_function(Z, 0)]
    j = 0
    while h[-1] < ell:
        j += 1
        if j > ell:
            raise AssertionError("Hilbert function failed to stabilise by degree l(Z)-1")
        h.append(hilbert_function(Z, j))
    dh = tuple(b - a for a, b in zip([0] + h[:-1], h))
    return HilbertProfile(h=tuple(h), dh=dh, socle_degree=len(dh) - 2, cardinality=ell)


class SubsetIndependence:
    """Memoised independence test for subsets of a fixed list of vectors."""

    def __init__(self, vectors: Sequence[Sequence[int]]):
        self.vectors = [tuple(v) for v in vectors]
        self._cache: dict[tuple[int, ...], bool] = {}

    def independent(self, subset: tuple[int, ...]) -> bool:
        hit = self._cache.get(subset)
        if hit is None:
            hit = integer_rank([self.vectors[i] for i in subset]) == len(subset)
            self._cache[subset] = hit
        return hit

    def all_independent(self, indices: Sequence[int], k: int) -> bool:
        return all(self.independent(s) for s in combinations(indices, k))

    def kruskal_rank(self, indices: Sequence[int] | None = None) -> int:
        if indices is None:
            indices = range(len(self.vectors))
        indices = tuple(indices)
        if not indices:
            return 0
        dim = len(self.vectors[0])
        for k in range(min(len(indices), dim), 0, -1):
            if self.all_independent(indices, k):
                return k
        return 0

    def is_lgp(self, indices: Sequence[int] | None = None) -> bool:
        if indices is None:
            indices = range(len(self.vectors))
        indices = tuple(indices)
        k = min(len(indices), len(self.vectors[0])) if self.vectors else 0
        return self.all_independent(indices, k)


def kruskal_rank_of_vectors(vectors: Sequence[Sequence[Scalar]]) -> int:
    """Largest k such that every k of the given nonzero vectors are independent."""
    ints = [primitive_integer([as_rational(x) for x in v]) for v in vectors]
    return SubsetIndependence(ints).kruskal_rank()


def kruskal_rank(Z: PointSet) -> int:
    if len(Z) < 1:
        raise InputError("kruskal_rank needs at least one point")
    return SubsetIndependence(Z.integer_points).kruskal_rank()


def is_lgp(Z: PointSet) -> bool:
    if len(Z) == 0:
        return True
    return SubsetIndependence(Z.integer_points).is_lgp()


def separates(Z: PointSet, i: int) -> bool:
    """True when forms of degree ``i`` separate the points of ``Z``."""
    if i < 0:
        raise InputError(f"degree must be >= 0, got {i}")
    return hilbert_function(Z, i) == len(Z)


def satisfies_cb(Z: PointSet, i: int) -> tuple[bool, int | None]:
    """Cayley-Bacharach property in degree ``i``.

    Returns ``(True, None)`` or ``(False, k)`` where ``k`` is the least index
    of a point that some degree-``i`` form separates from the others.
    """
    if i < 0:
        raise InputError(f"degree must be >= 0, got {i}")
    if len(Z) < 2:
        raise InputError("Cayley-Bacharach is only defined here for at least two points")
    full = hilbert_function(Z, i)
    for k in range(len(Z)):
        if hilbert_function(Z.without(k), i) < full:
            return False, k
    return True, None


def cb_degrees(Z: PointSet, profile: HilbertProfile | None = None) -> list[int]:
    """All ``i`` in ``0..socle_degree + 1`` for which ``Z`` satisfies CB(i).

    Each degree is tested on its own; nothing is inferred from neighbours.
    """
    profile = profile or hilbert_profile(Z)
    return [i for i in range(profile.socle_degree + 2) if satisfies_cb(Z, i)[0]]


__all__ = [
    "HilbertProfile",
    "PointSet",
    "cb_degrees",
    "evaluation_matrix",
    "gram_matrix",
    "hilbert_function",
    "hilbert_profile",
    "is_lgp",
    "kruskal_rank",
    "kruskal_rank_of_vectors",
    "normalize",
    "satisfies_cb",
    "separates",
]
