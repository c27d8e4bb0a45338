import random
from fractions import Fraction
from itertools import combinations

import pytest

from _configs import (
    CONIC_SIX,
    GENERAL_SIX,
    LINE_PLUS_ONE,
    random_configuration,
    random_invertible,
    random_nonzero_rational,
)
from waringid.errors import InputError
from waringid.exactlin import RationalMatrix, kernel_basis, rank
from waringid.geometry import macaulay_check, vandermonde_points
from waringid.identify import example_points
from waringid.pointset import (
    PointSet,
    cb_degrees,
    evaluation_matrix,
    hilbert_function,
    hilbert_profile,
    is_lgp,
    kruskal_rank,
    satisfies_cb,
    separates,
)
from waringid.veronese import num_monomials

EXAMPLE_POINTS = PointSet(example_points())


def brute_kruskal(points):
    """Kruskal rank by checking every subset size from 1 upward."""
    k = 0
    for size in range(1, len(points) + 1):
        if all(rank(RationalMatrix(list(s))) == size for s in combinations(points, size)):
            k = size
        else:
            break
    return k


# -- construction -------------------------------------------------------------


def test_pointset_normalises():
    Z = PointSet([(0, 2, 4), (3, 6, 9)])
    assert Z.points == ((0, 1, 2), (1, 2, 3))
    assert Z.n == 2
    assert Z.integer_points == ((0, 1, 2), (1, 2, 3))


def test_pointset_rejects_duplicates_and_zero():
    with pytest.raises(InputError, match="proportional"):
        PointSet([(1, 2), (-2, -4)])
    with pytest.raises(InputError):
        PointSet([(0, 0, 0)])
    with pytest.raises(InputError):
        PointSet([(1, 2), (1, 2, 3)])


def test_pointset_rational_coordinates():
    Z = PointSet([("1/2", "1/3", 1)])
    assert Z.points[0] == (1, Fraction(2, 3), 2)
    assert Z.integer_points[0] == (3, 2, 6)


# -- evaluation matrices and the Hilbert function -----------------------------


def test_evaluation_matrix_examples():
    E = evaluation_matrix(PointSet([(1, 0, 0, 0)]), 1)
    assert E.tolist() == [[1, 0, 0, 0]]
    E = evaluation_matrix(PointSet([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 1)
    assert E.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_evaluation_matrix_of_example_points():
    E = evaluation_matrix(EXAMPLE_POINTS, 2)
    assert E.shape == (9, 15)
    assert rank(E) == 9


def test_hilbert_function_basics():
    Z = PointSet(GENERAL_SIX)
    assert hilbert_function(Z, -1) == 0
    assert hilbert_function(Z, 0) == 1
    assert hilbert_function(Z, 1) == 3
    assert hilbert_function(PointSet(CONIC_SIX), 2) == 5


def test_hilbert_function_matches_kernel_dimension():
    Z = PointSet(CONIC_SIX)
    for j in range(5):
        E = evaluation_matrix(Z, j)
        assert hilbert_function(Z, j) == num_monomials(2, j) - kernel_basis(E).cols


@pytest.mark.parametrize(
    "points, dh, socle",
    [
        (GENERAL_SIX, (1, 2, 3), 1),
        (CONIC_SIX, (1, 2, 2, 1), 2),
        (LINE_PLUS_ONE, (1, 2, 1, 1, 1), 3),
    ],
)
def test_classical_h_vectors(points, dh, socle):
    prof = hilbert_profile(PointSet(points))
    assert prof.dh == dh
    assert prof.socle_degree == socle
    assert prof.h[-1] == 6
    assert prof.residual(prof.socle_degree) == dh[-1]


def test_general_six_fixture_is_generic():
    # six general points lie on no conic and no three are collinear
    Z = PointSet(GENERAL_SIX)
    assert kernel_basis(evaluation_matrix(Z, 2)).cols == 0
    assert is_lgp(Z)


def test_single_point_profile():
    prof = hilbert_profile(PointSet([(1, 2, 3)]))
    assert prof.h == (1,) and prof.dh == (1,) and prof.socle_degree == -1


@pytest.mark.parametrize("seed", range(40))
def test_gram_and_evaluation_routes_agree(seed):
    rng = random.Random(seed)
    Z = random_configuration(rng)
    for j in range(0, 5):
        assert hilbert_function(Z, j, "gram") == hilbert_function(Z, j, "evaluation")


# -- Kruskal rank and LGP -----------------------------------------------------


def test_kruskal_examples():
    assert kruskal_rank(PointSet([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 3
    assert kruskal_rank(EXAMPLE_POINTS) == 5
    collinear = PointSet([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert kruskal_rank(collinear) == 2
    assert not is_lgp(collinear)
    assert is_lgp(EXAMPLE_POINTS)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_curve_points_in_lgp(n):
    Z = vandermonde_points(n, range(-n, n + 3))
    assert len(Z) == 2 * n + 3
    assert is_lgp(Z)


@pytest.mark.parametrize("seed", range(25))
def test_kruskal_matches_brute_force(seed):
    Z = random_configuration(random.Random(1000 + seed), n_max=3, ell_max=7)
    assert kruskal_rank(Z) == brute_kruskal(Z.points)


# -- separation and Cayley-Bacharach ------------------------------------------


def test_separation_examples():
    assert separates(PointSet(CONIC_SIX), 5)
    assert not separates(PointSet(CONIC_SIX), 2)
    assert separates(PointSet(GENERAL_SIX), 2)


def test_cb_examples():
    assert satisfies_cb(PointSet(GENERAL_SIX), 1) == (True, None)
    assert satisfies_cb(PointSet(CONIC_SIX), 2) == (True, None)
    assert satisfies_cb(PointSet(LINE_PLUS_ONE), 1) == (False, 5)


def test_cb_four_points_three_collinear():
    Z = PointSet([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
    assert hilbert_function(Z, 1) < 4
    assert satisfies_cb(Z, 1)[0] is False


def test_cb_needs_two_points():
    with pytest.raises(InputError):
        satisfies_cb(PointSet([(1, 0)]), 0)


# -- properties over random configurations ------------------------------------

CONFIGS = [random_configuration(random.Random(s)) for s in range(60)]


@pytest.mark.parametrize("Z", CONFIGS)
def test_profile_invariants(Z):
    prof = hilbert_profile(Z)
    assert prof.h[0] == 1
    assert all(a <= b for a, b in zip(prof.h, prof.h[1:]))
    assert prof.h[-1] == len(Z)
    assert all(x >= 1 for x in prof.dh)
    assert sum(prof.dh) == len(Z)
    assert prof.socle_degree == len(prof.dh) - 2
    assert macaulay_check(prof)
    for j in range(len(prof.h)):
        if prof.value(j) == len(Z) - 1:
            assert prof.value(j + 1) == len(Z)


@pytest.mark.parametrize("Z", CONFIGS[:30])
def test_cb_inherited_and_forces_non_separation(Z):
    prof = hilbert_profile(Z)
    holds = cb_degrees(Z, prof)
    for i in holds:
        assert prof.value(i) < len(Z)
        if i >= 1:
            assert i - 1 in holds
    assert all(i <= prof.socle_degree for i in holds)


@pytest.mark.parametrize("Z", CONFIGS[:30])
def test_subsets_have_smaller_hilbert_function(Z):
    rng = random.Random(len(Z))
    sub = Z.subset(sorted(rng.sample(range(len(Z)), max(1, len(Z) // 2))))
    for j in range(6):
        assert hilbert_function(sub, j) <= hilbert_function(Z, j)


@pytest.mark.parametrize("seed", range(15))
def test_projective_invariance(seed):
    rng = random.Random(seed)
    Z = random_configuration(rng, n_max=4, ell_max=10)
    g = random_invertible(rng, Z.n + 1)
    W = Z.transform(g)
    scales = [random_nonzero_rational(rng) for _ in W]
    W = PointSet([[c * x for x in p] for c, p in zip(scales, W)], Z.n)
    assert hilbert_profile(W) == hilbert_profile(Z)
    assert kruskal_rank(W) == kruskal_rank(Z)
    assert is_lgp(W) == is_lgp(Z)
    for i in range(3):
        if len(Z) >= 2:
            assert satisfies_cb(W, i)[0] == satisfies_cb(Z, i)[0]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_curve_points_h_vector_bounded_by_n(n):
    Z = vandermonde_points(n, [Fraction(t, 2) for t in range(-5, 3 * n)])
    prof = hilbert_profile(Z)
    assert is_lgp(Z)
    assert all(x <= n for x in prof.dh[1:])
