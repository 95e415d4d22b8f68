import random
from fractions import Fraction

import pytest

from riordan import series
from riordan.array import RiordanPair, conjugate, matrix
from riordan.bivar import CoeffMatrix, DimensionError
from riordan.families import make_R, reference_B20, robbins
from riordan.minors import MinorSequence, det, det_cofactor, principal_minors
from riordan.symmetry import symmetrize

F = Fraction


def test_robbins_minors():
    S = symmetrize(make_R(1, 26), 11)
    values = principal_minors(S, 11)
    assert list(values) == [robbins(n + 1) for n in range(11)]
    assert values[-1] == 31095744852375


def test_twenty_vertex_minors():
    S = symmetrize(make_R(2, 22), 9)
    assert list(principal_minors(S, 9)) == reference_B20()


def test_negation_pair_minors():
    pair = RiordanPair(series.poly([1], 8), series.poly([0, -1], 8))
    got = principal_minors(matrix(pair, 6), 6)
    assert list(got) == [1, -1, -1, 1, 1, -1]
    assert list(got) == [(-1) ** ((n + 1) * n // 2) for n in range(6)]


def test_det_examples():
    assert det(CoeffMatrix([[1]])) == 1
    assert det(CoeffMatrix([[1, 1], [1, 3]])) == 2
    assert det(CoeffMatrix([[1, 1], [1, -1]])) == -2


def test_count_guard():
    with pytest.raises(DimensionError):
        principal_minors(CoeffMatrix([[1]]), 2)


def test_zero_leading_minors():
    M = CoeffMatrix([[0, 1], [1, 0]])
    assert list(principal_minors(M, 2)) == [0, -1]
    M = CoeffMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    assert list(principal_minors(M, 3)) == [0, -1, -2]
    M = CoeffMatrix([[1, 2, 3], [2, 4, 5], [3, 5, 6]])  # 2x2 block singular
    assert list(principal_minors(M, 3)) == [1, 0, -1]
    assert det(M) == det_cofactor([[F(c) for c in row] for row in M.rows])


def test_rational_entries():
    M = CoeffMatrix([[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]])
    expected2 = F(1, 2) * F(1, 7) - F(1, 3) * F(1, 5)
    assert list(principal_minors(M, 2)) == [F(1, 2), expected2]
    assert det(M) == expected2


def test_bareiss_vs_cofactor_randomized():
    rng = random.Random(47)
    for _ in range(120):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if rng.random() < 0.2 and n >= 2:
            rows[n - 1] = rows[0][:]  # force singularity sometimes
        M = CoeffMatrix(rows)
        assert det(M) == det_cofactor([[F(c) for c in row] for row in rows])


def test_minor_sweep_vs_independent_dets_randomized():
    rng = random.Random(53)
    for _ in range(60):
        n = rng.randint(2, 7)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        M = CoeffMatrix(rows)
        got = principal_minors(M, n)
        for m in range(1, n + 1):
            block = [[F(rows[i][j]) for j in range(m)] for i in range(m)]
            assert got[m - 1] == det_cofactor(block)


def test_multiplicativity():
    rng = random.Random(59)
    for _ in range(30):
        n = rng.randint(2, 6)
        A = CoeffMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        M = CoeffMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert det(A * M * A.transpose()) == det(A) ** 2 * det(M)


def _random_symmetric(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            rows[i][j] = rows[j][i] = rng.randint(-4, 4)
    return CoeffMatrix(rows)


def _random_unipotent_pair(rng, order):
    g = [1] + [rng.randint(-3, 3) for _ in range(order - 1)]
    f = [0, 1] + [rng.randint(-3, 3) for _ in range(order - 2)]
    return RiordanPair(series.poly(g, order), series.poly(f, order))


def test_unipotent_conjugation_preserves_minors():
    rng = random.Random(61)
    for _ in range(100):
        n = rng.randint(2, 8)
        M = _random_symmetric(rng, n)
        a = _random_unipotent_pair(rng, n + 2)
        assert principal_minors(conjugate(M, a), n) == principal_minors(M, n)


def test_negation_conjugation_preserves_minors():
    rng = random.Random(67)
    neg = RiordanPair(series.poly([1], 10), series.poly([0, -1], 10))
    for _ in range(40):
        n = rng.randint(2, 8)
        M = _random_symmetric(rng, n)
        assert principal_minors(conjugate(M, neg), n) == principal_minors(M, n)


def test_minor_sequence_type():
    got = principal_minors(CoeffMatrix([[2, 0], [0, 3]]), 2)
    assert isinstance(got, MinorSequence)
    assert got == [2, 6]
