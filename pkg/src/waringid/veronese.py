"""Monomials, Veronese embeddings and their tangent spaces.

Coordinates of the degree-d embedding are plain monomial evaluations
``prod(m[i] ** e[i])`` (no multinomial weights). That differs from symmetric
tensor coordinates by an invertible diagonal matrix, so no rank or span
dimension computed here depends on the choice.

Monomials are listed in graded lexicographic order with x0 > x1 > ... > xn.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import InputError
from .exactlin import Scalar, as_rational

ExponentVector = tuple[int, ...]


@lru_cache(maxsize=None)
def _monomials(nvars: int, d: int) -> tuple[ExponentVector, ...]:
    if nvars == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def monomials(n: int, d: int) -> tuple[ExponentVector, ...]:
    """Exponent vectors of the degree-``d`` monomials in ``n + 1`` variables."""
    if n < 0 or d < 0:
        raise InputError(f"need n >= 0 and d >= 0, got n={n}, d={d}")
    return _monomials(n + 1, d)


def num_monomials(n: int, d: int) -> int:
    return comb(n + d, d)


def _coerce_point(m: Sequence[Scalar]) -> tuple[Fraction, ...]:
    vec = tuple(as_rational(x) for x in m)
    if not vec:
        raise InputError("empty coordinate vector")
    if all(x == 0 for x in vec):
        raise InputError("the zero vector is not a projective point")
    return vec


def _power_table(vec: Sequence[Fraction], d: int) -> list[list[Fraction]]:
    table = []
    for x in vec:
        powers = [Fraction(1)]
        for _ in range(d):
            powers.append(powers[-1] * x)
        table.append(powers)
    return table


def _evaluate(table: list[list[Fraction]], exps: Sequence[ExponentVector]) -> tuple[Fraction, ...]:
    out = []
    for e in exps:
        v = Fraction(1)
        for powers, k in zip(table, e):
            if k:
                v *= powers[k]
                if not v:
                    break
        out.append(v)
    return tuple(out)


def veronese_embed(m: Sequence[Scalar], d: int) -> tuple[Fraction, ...]:
    """Image of ``m`` under the degree-``d`` monomial map.

    >>> [str(x) for x in veronese_embed((1, 2), 2)]
    ['1', '2', '4']
    """
    vec = _coerce_point(m)
    if d < 0:
        raise InputError(f"degree must be >= 0, got {d}")
    return _evaluate(_power_table(vec, d), monomials(len(vec) - 1, d))


def tangent_basis(m: Sequence[Scalar], d: int) -> list[tuple[Fraction, ...]]:
    """Jacobian columns of the degree-``d`` monomial map at ``m``.

    Vector ``j`` is the partial derivative in direction ``x_j``. Together they
    span the affine cone over the tangent space of the Veronese variety at
    the image of ``m``; by Euler's identity ``sum_j m[j] * v_j = d * nu_d(m)``.
    """
    vec = _coerce_point(m)
    if d < 1:
        raise InputError(f"tangent spaces need degree >= 1, got {d}")
    exps = monomials(len(vec) - 1, d)
    table = _power_table(vec, d)
    basis = []
    for j in range(len(vec)):
        col = []
        for e in exps:
            k = e[j]
            if k == 0:
                col.append(Fraction(0))
                continue
            v = Fraction(k)
            for i, (powers, ei) in enumerate(zip(table, e)):
                p = ei - 1 if i == j else ei
                if p:
                    v *= powers[p]
            col.append(v)
        basis.append(tuple(col))
    return basis


def multinomial(e: ExponentVector) -> int:
    out = factorial(sum(e))
    for k in e:
        out //= factorial(k)
    return out


def power_form_coefficients(m: Sequence[Scalar], d: int) -> tuple[Fraction, ...]:
    """Coefficients of the form ``(m . x) ** d`` in the monomial basis."""
    vec = _coerce_point(m)
    exps = monomials(len(vec) - 1, d)
    values = _evaluate(_power_table(vec, d), exps)
    return tuple(multinomial(e) * v for e, v in zip(exps, values))
