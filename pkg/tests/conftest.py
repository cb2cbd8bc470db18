"""Shared helpers: small independent oracles the library results are
checked against.  These deliberately avoid the library's own elimination
code paths."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest


def det_cofactor(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by cofactor expansion; independent of any rref code."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, head in enumerate(rows[0]):
        if not head:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * head * det_cofactor(minor)
    return total


def rank_by_minors(rows: list[list[Fraction]]) -> int:
    """Rank as the largest size of a nonzero square minor (brute force)."""
    r = len(rows)
    c = len(rows[0]) if rows else 0
    for size in range(min(r, c), 0, -1):
        for row_idx in itertools.combinations(range(r), size):
            for col_idx in itertools.combinations(range(c), size):
                minor = [[rows[i][j] for j in col_idx] for i in row_idx]
                if det_cofactor(minor):
                    return size
    return 0


def raw_jacobi_residual(dim: int, table: dict, i: int, j: int, k: int) -> list[Fraction]:
    """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] expanded
    straight from a sparse constants table, bypassing LieAlgebra."""

    def bb(a: int, b: int) -> list[Fraction]:
        if a == b:
            return [Fraction(0)] * dim
        if a < b:
            got = table.get((a, b))
            return list(got) if got else [Fraction(0)] * dim
        got = table.get((b, a))
        return [-x for x in got] if got else [Fraction(0)] * dim

    def br(a: int, v: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * dim
        for b, coef in enumerate(v):
            if coef:
                for t, x in enumerate(bb(a, b)):
                    out[t] += coef * x
        return out

    total = [Fraction(0)] * dim
    for term in (br(i, bb(j, k)), br(j, bb(k, i)), br(k, bb(i, j))):
        for t, x in enumerate(term):
            total[t] += x
    return total


@pytest.fixture(scope="session")
def frozen_catalog():
    from liecap.capability import catalog

    return catalog()
