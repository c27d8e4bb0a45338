import random
from fractions import Fraction
from itertools import combinations

import pytest

from _configs import CONIC_SIX, GENERAL_SIX, LINE_PLUS_ONE, random_configuration
from waringid.errors import CBNotSatisfied, InputError
from waringid.exactlin import RationalMatrix, kernel_basis, rank
from waringid.geometry import (
    RncVerdict,
    apolar_pencil,
    castelnuovo_certificate,
    gkr_inequality_check,
    gkr_violation,
    macaulay_check,
    rnc_parameters,
    scaled_binary_coefficients,
    sharpness_configuration,
    vandermonde_points,
)
from waringid.pointset import PointSet, hilbert_function, hilbert_profile, is_lgp, kruskal_rank


def test_vandermonde_points():
    Z = vandermonde_points(1, [0, 1])
    assert Z.points == ((1, 0), (1, 1))
    Z = vandermonde_points(4, range(9))
    assert len(Z) == 9 and Z[8] == (1, 8, 64, 512, 4096)
    assert kruskal_rank(vandermonde_points(3, range(7))) == 4
    with pytest.raises(InputError):
        vandermonde_points(2, [1, 2, 1])


def test_rnc_parameters_roundtrip():
    ts = [Fraction(-3, 2), 0, 5]
    assert rnc_parameters(vandermonde_points(3, ts)) == ts
    with pytest.raises(InputError):
        rnc_parameters(PointSet([(1, 2, 5)]))


# -- Cayley-Bacharach bound ----------------------------------------------------


def gkr_by_hand(dh, i):
    """Direct restatement of the inequality family, summing slices of a padded list."""
    padded = list(dh) + [0] * (i + 3)
    return all(sum(padded[: j + 1]) <= sum(padded[i + 1 - j : i + 2]) for j in range(i + 2))


def test_gkr_examples():
    assert gkr_inequality_check(PointSet(CONIC_SIX), 2)
    assert gkr_inequality_check(PointSet(GENERAL_SIX), 1)
    with pytest.raises(CBNotSatisfied):
        gkr_inequality_check(PointSet(LINE_PLUS_ONE), 1)


def test_gkr_violation_on_synthetic_vector():
    # (1, 2, 1, 1, 1) with i = 1: j = 1 gives 3 > Dh(1) + Dh(2) = 3? no; j = 2 gives 4 > 4? no
    assert gkr_violation((1, 2, 1, 1, 1), 3) == 1
    assert gkr_violation((1, 2, 2, 1), 2) is None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gkr_on_curve_points(n):
    Z = vandermonde_points(n, range(2 * n + 3))
    prof = hilbert_profile(Z)
    i = prof.socle_degree
    from waringid.pointset import satisfies_cb

    if satisfies_cb(Z, i)[0]:
        assert gkr_inequality_check(Z, i, prof)
        assert gkr_by_hand(prof.dh, i)


@pytest.mark.parametrize("seed", range(40))
def test_gkr_agrees_with_hand_sums(seed):
    rng = random.Random(seed)
    dh = [1] + [rng.randint(0, 4) for _ in range(rng.randint(0, 5))]
    i = rng.randint(0, 5)
    assert (gkr_violation(dh, i) is None) == gkr_by_hand(dh, i)


def test_macaulay_examples():
    assert macaulay_check((1, 2, 2, 1))
    assert macaulay_check((1, 2, 1, 1, 1))
    assert not macaulay_check((1, 2, 0, 1))
    assert not macaulay_check((1, 1, 2))
    assert macaulay_check(hilbert_profile(PointSet(GENERAL_SIX)))


# -- Castelnuovo ---------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_castelnuovo_on_curve(n):
    Z = vandermonde_points(n, range(2 * n + 3))
    cert = castelnuovo_certificate(Z)
    assert cert.verdict is RncVerdict.ON_RNC
    assert cert.h2 == 2 * n + 1
    assert len(cert.lgp_subset) == 2 * n + 1
    assert is_lgp(Z.subset(cert.lgp_subset))
    assert is_lgp(Z)


def test_castelnuovo_eleven_curve_points_in_p4():
    cert = castelnuovo_certificate(vandermonde_points(4, [Fraction(t, 3) for t in range(-5, 6)]))
    assert cert.verdict is RncVerdict.ON_RNC and cert.h2 == 9


def test_sharpness_configuration():
    Z = sharpness_configuration()
    # the four quadric points satisfy xw = yz and the line lies on the quadric
    assert all(p[0] * p[3] == p[1] * p[2] for p in Z)
    assert len(Z) == 9
    assert hilbert_function(Z, 2) == 7
    # a 6-point subset in general position exists, as the construction intends
    assert is_lgp(Z.subset([0, 1, 2, 3, 4, 5]))
    assert not any(is_lgp(Z.subset(s)) for s in combinations(range(9), 7))
    cert = castelnuovo_certificate(Z)
    assert cert.verdict is RncVerdict.NO_LGP_SUBSET and cert.h2 == 7


def test_castelnuovo_generic_points():
    rng = random.Random(7)
    pts = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(9)]
    Z = PointSet(pts)
    assert hilbert_function(Z, 2) == 9
    cert = castelnuovo_certificate(Z)
    assert cert.verdict is RncVerdict.H2_TOO_BIG and cert.h2 == 9


def test_castelnuovo_too_few_points():
    cert = castelnuovo_certificate(vandermonde_points(3, range(8)))
    assert cert.verdict is RncVerdict.TOO_FEW_POINTS


@pytest.mark.parametrize("seed", range(30))
def test_castelnuovo_verdicts_are_consistent(seed):
    Z = random_configuration(random.Random(500 + seed), n_max=3, ell_max=12)
    cert = castelnuovo_certificate(Z)
    if cert.verdict is RncVerdict.ON_RNC:
        assert cert.h2 == 2 * Z.n + 1
        assert is_lgp(Z)
        assert all(x <= Z.n for x in hilbert_profile(Z).dh[1:])


# -- apolar pencil -------------------------------------------------------------


def brute_kernel_dim(rows):
    return len(rows[0]) - rank(RationalMatrix(rows))


def test_pencil_binary_quartic():
    cert = apolar_pencil([1, 1, 1], [0, 1, 2], 1)
    c = [Fraction(x) for x in (3, 3, 5, 9, 17)]
    assert list(cert.binary_form) == c
    rows = [[c[0], c[1], c[2], c[3]], [c[1], c[2], c[3], c[4]]]
    assert cert.catalecticant.tolist() == rows
    assert cert.kernel_dim == brute_kernel_dim(rows) == 2


def test_pencil_nine_curve_points_in_p4():
    cert = apolar_pencil([1] * 9, range(9), 4)
    assert cert.catalecticant.shape == (8, 10)
    assert cert.kernel_dim == 2
    assert (cert.catalecticant @ cert.kernel).is_zero()


def root_form(lambdas):
    """Coefficients of prod(T - t S) in the basis S**(k-b) T**b, b = 0..k."""
    coeffs = [Fraction(1)]
    for t in lambdas:
        # multiply by (T - t S): shift for T, scale for S
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for b, a in enumerate(coeffs):
            nxt[b + 1] += a
            nxt[b] -= t * a
        coeffs = nxt
    return coeffs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pencil_contains_the_given_decomposition(n):
    ts = [Fraction(t) for t in range(-n, n + 1)]
    ws = [Fraction(k + 2, 3) for k in range(2 * n + 1)]
    cert = apolar_pencil(ws, ts, n)
    g = RationalMatrix([[x] for x in root_form(ts)])
    assert (cert.catalecticant @ g).is_zero()
    # g lies in the span of the kernel basis
    assert rank(RationalMatrix(cert.kernel.columns() + [g.column(0)])) == cert.kernel_dim


def test_binary_coefficients_match_expansion():
    from math import comb

    ws, ts, deg = [2, -1], [3, Fraction(1, 2)], 4
    c = scaled_binary_coefficients(ws, ts, deg)
    # expand sum w (s + t x)^deg directly at s = 1, x = 5
    direct = sum(w * (1 + t * 5) ** deg for w, t in zip(ws, ts))
    assert sum(comb(deg, k) * c[k] * 5**k for k in range(deg + 1)) == direct


def test_pencil_rejects_bad_input():
    with pytest.raises(InputError):
        apolar_pencil([1, 1], [0, 1], 1)
    with pytest.raises(InputError):
        apolar_pencil([1, 0, 1], [0, 1, 2], 1)
    with pytest.raises(InputError):
        apolar_pencil([1, 1, 1], [0, 1, 1], 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pencil_kernel_annihilates(n):
    rng = random.Random(n)
    ts = rng.sample(range(-20, 20), 2 * n + 1)
    ws = [rng.choice([-3, -1, 1, 2, 5]) for _ in ts]
    cert = apolar_pencil(ws, ts, n)
    assert cert.kernel_dim == 2 * n + 2 - rank(cert.catalecticant)
    assert cert.kernel_dim == brute_kernel_dim(cert.catalecticant.tolist())
    assert kernel_basis(cert.catalecticant).cols == cert.kernel_dim
    assert (cert.catalecticant @ cert.kernel).is_zero()
