"""Exact linear algebra over Q(E): rank, kernels, incremental row spaces."""

from __future__ import annotations

import random
from fractions import Fraction

from superlab.linalg import Echelon, kernel_basis, rank
from superlab.scalars import EPS, ONE, ZERO, QEps


def q(x):
    return QEps(x)


def test_rank_basic():
    assert rank([]) == 0
    assert rank([[ZERO, ZERO]]) == 0
    assert rank([[q(1), q(2)], [q(2), q(4)]]) == 1
    assert rank([[q(1), q(0)], [q(0), q(1)]]) == 2
    # E-dependent rows: (1, E) and (E^2, -1) = E*(E, ...)? check honestly:
    # E*(1, E) = (E, E^2) so (E, -1-E) is a multiple of (1, E).
    assert rank([[ONE, EPS], [EPS, -ONE - EPS]]) == 1


def test_kernel_basis_known():
    # x + 2y = 0 has kernel spanned by (-2, 1).
    basis = kernel_basis([[q(1), q(2)]])
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + q(2) * v[1] == ZERO
    assert any(v)


def test_kernel_dimension_random():
    rng = random.Random(991)
    for _ in range(25):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 5)
        mat = [
            [
                QEps(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-1, 1)))
                for _ in range(ncols)
            ]
            for _ in range(nrows)
        ]
        r = rank(mat)
        basis = kernel_basis(mat)
        assert len(basis) == ncols - r
        for v in basis:
            for row in mat:
                s = ZERO
                for a, x in zip(row, v):
                    s = s + a * x
                assert s == ZERO


def test_echelon_membership():
    ech = Echelon()
    assert ech.add({0: ONE, 1: q(2)})
    assert not ech.add({0: q(3), 1: q(6)})  # dependent
    assert ech.dim == 1
    assert ech.contains({0: q(-1), 1: q(-2)})
    assert not ech.contains({0: ONE})
    assert ech.add({2: EPS})
    assert ech.dim == 2
    assert ech.contains({0: ONE, 1: q(2), 2: q(7)})
