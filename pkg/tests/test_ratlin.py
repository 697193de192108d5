"""Exact linear algebra kernel, cross-checked against rank identities."""

import random
from fractions import Fraction

from critlevel.ratlin import (
    cokernel_equations,
    in_span,
    mat_vec,
    nullity,
    nullspace,
    rank,
    rref,
)

F = Fraction


def random_matrix(rng, n, m, den=3):
    return [[F(rng.randint(-5, 5), rng.randint(1, den)) for _ in range(m)] for _ in range(n)]


def test_rref_simple():
    rows, pivots = rref([[F(2), F(4)], [F(1), F(2)]])
    assert rows == [[F(1), F(2)]]
    assert pivots == [0]


def test_rank_and_nullity_random():
    rng = random.Random(17)
    for _ in range(40):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        mat = random_matrix(rng, n, m)
        r = rank(mat, m)
        ns = nullspace(mat, m)
        assert r + len(ns) == m
        assert nullity(mat, m) == len(ns)
        for vec in ns:
            assert all(x == 0 for x in mat_vec(mat, vec))
        # nullspace vectors are independent
        assert rank(ns, m) == len(ns) if ns else True


def test_rank_product_bound():
    rng = random.Random(29)
    for _ in range(20):
        a = random_matrix(rng, 4, 3)
        b = random_matrix(rng, 3, 5)
        prod = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(5)] for i in range(4)]
        assert rank(prod, 5) <= min(rank(a, 3), rank(b, 5))


def test_cokernel_cuts_exact_span():
    rng = random.Random(31)
    for _ in range(25):
        dim = rng.randint(1, 6)
        k = rng.randint(0, dim)
        cols = [[F(rng.randint(-4, 4)) for _ in range(dim)] for _ in range(k)]
        eqs = cokernel_equations(cols, dim)
        for col in cols:
            assert all(sum(e * c for e, c in zip(eq, col)) == 0 for eq in eqs)
        # the solution space of the equations is exactly the span
        span_dim = rank([list(c) for c in cols], dim) if cols else 0
        assert nullity(eqs, dim) == span_dim


def test_in_span():
    cols = [[F(1), F(0), F(2)], [F(0), F(1), F(-1)]]
    assert in_span(cols, [F(2), F(3), F(1)])
    assert not in_span(cols, [F(0), F(0), F(1)])
    assert not in_span([], [F(1), F(0)])
    assert in_span([], [F(0), F(0)])
