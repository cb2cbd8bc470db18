"""Finite-dimensional Lie algebras presented by structure constants.

An algebra of dimension n is stored as the sparse table of brackets
``[e_i, e_j] = sum_k c[k] e_k`` for i < j; the bracket of arbitrary
vectors is the bilinear, antisymmetric extension.  ``validate`` checks
the Jacobi identity and reports the first offending basis triple, so a
structurally well-formed but non-Lie table can be constructed and then
rejected with a witness.
"""

from __future__ import annotations

import random
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Fraction,
    Matrix,
    Scalar,
    SpanBuilder,
    Subspace,
    Vector,
    kernel_basis,
    quotient_with_section,
    random_invertible,
    unit_vector,
    vector,
    zero_vector,
)


class InvalidAlgebraError(ValueError):
    """Structure constants that do not define a Lie algebra."""


_UNCHECKED = object()


class LieAlgebra:
    """A Lie algebra over Q given by structure constants.

    Instances are immutable and hashable; equality compares dimensions
    and bracket tables (labels are presentation only).  All derived
    computations are exact and deterministic.
    """

    __slots__ = ("dim", "labels", "_table", "_key", "_hash", "_jacobi")

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence[Scalar]],
        labels: Sequence[str] | None = None,
    ):
        if dim < 0:
            raise ValueError("negative dimension")
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        else:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("label count does not match dimension")
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise InvalidAlgebraError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
            vec = vector(coeffs)
            if len(vec) != dim:
                raise InvalidAlgebraError(f"bracket ({i}, {j}) has {len(vec)} coefficients, expected {dim}")
            if any(vec):
                table[(i, j)] = vec
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_table", table)
        key = (dim, tuple(sorted(table.items())))
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))
        object.__setattr__(self, "_jacobi", _UNCHECKED)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LieAlgebra) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<LieAlgebra dim={self.dim} brackets={len(self._table)}>"

    @property
    def brackets(self) -> Mapping[tuple[int, int], Vector]:
        return MappingProxyType(self._table)

    # -- bracket ------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a coordinate vector."""
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise ValueError("basis index out of range")
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vector(self.dim))
        c = self._table.get((j, i))
        return zero_vector(self.dim) if c is None else tuple(-x for x in c)

    def _ad(self, i: int, v: Sequence[Fraction]) -> Vector:
        """[e_i, v] for a coordinate vector v."""
        out = [Fraction(0)] * self.dim
        for (a, b), c in self._table.items():
            coef = None
            if a == i:
                coef = v[b]
            elif b == i:
                coef = -v[a]
            if coef:
                for k, x in enumerate(c):
                    if x:
                        out[k] += coef * x
        return tuple(out)

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """Bilinear antisymmetric extension of the structure constants."""
        xv = vector(x)
        yv = vector(y)
        if len(xv) != self.dim or len(yv) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), c in self._table.items():
            coef = xv[i] * yv[j] - xv[j] * yv[i]
            if coef:
                for k, v in enumerate(c):
                    if v:
                        out[k] += coef * v
        return tuple(out)

    # -- validation ---------------------------------------------------------

    def validate(self) -> tuple[int, int, int] | None:
        """First basis triple violating the Jacobi identity, or None.

        Antisymmetry holds by construction (only i < j brackets are
        stored), so the Jacobi identity is the whole check.  The check
        runs on integer-rescaled constants (each Jacobi term scales by
        the same square factor, so vanishing is unaffected) and the
        verdict is cached on the instance.
        """
        if self._jacobi is not _UNCHECKED:
            return self._jacobi
        n = self.dim
        denom = 1
        for c in self._table.values():
            for x in c:
                denom = lcm(denom, x.denominator)
        table = {key: tuple(int(x * denom) for x in c) for key, c in self._table.items()}
        ad: list[list[tuple[int, int, tuple[int, ...]]]] = [[] for _ in range(n)]
        for (a, b), c in table.items():
            ad[a].append((b, 1, c))
            ad[b].append((a, -1, c))

        def accumulate(out: list[int], i: int, v: tuple[int, ...], sign: int) -> None:
            for other, s, c in ad[i]:
                coef = sign * s * v[other]
                if coef:
                    for t, x in enumerate(c):
                        if x:
                            out[t] += coef * x

        violation: tuple[int, int, int] | None = None
        for i in range(n):
            for j in range(i + 1, n):
                bij = table.get((i, j))
                for k in range(j + 1, n):
                    bjk = table.get((j, k))
                    bik = table.get((i, k))
                    if bij is None and bjk is None and bik is None:
                        continue
                    out = [0] * n
                    if bjk is not None:
                        accumulate(out, i, bjk, 1)
                    if bik is not None:
                        # [e_k, e_i] = -[e_i, e_k]
                        accumulate(out, j, bik, -1)
                    if bij is not None:
                        accumulate(out, k, bij, 1)
                    if any(out):
                        violation = (i, j, k)
                        break
                if violation:
                    break
            if violation:
                break
        object.__setattr__(self, "_jacobi", violation)
        return violation

    def require_valid(self) -> None:
        violation = self.validate()
        if violation is not None:
            raise InvalidAlgebraError(f"Jacobi identity fails at basis triple {violation}")

    # -- subobjects ----------------------------------------------------------

    def derived_subalgebra(self) -> Subspace:
        """[L, L]: the span of all basis brackets."""
        sb = SpanBuilder(self.dim)
        for c in self._table.values():
            sb.add(c)
        return sb.subspace()

    def center(self) -> Subspace:
        """{x : [x, y] = 0 for all y}, via the kernel of the stacked
        adjoint equations."""
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n * n)]
        for (a, b), c in self._table.items():
            for k, v in enumerate(c):
                if v:
                    rows[b * n + k][a] += v
                    rows[a * n + k][b] -= v
        return kernel_basis(Matrix.from_rows(rows, cols=n))

    def bracket_span(self, s: Subspace) -> Subspace:
        """[L, S] for a subspace S."""
        if s.ambient_dim != self.dim:
            raise ValueError("ambient dimension mismatch")
        sb = SpanBuilder(self.dim)
        for i in range(self.dim):
            for row in s.basis.data:
                v = self._ad(i, row)
                if any(v):
                    sb.add(v)
        return sb.subspace()

    def lower_central_series(self) -> list[Subspace]:
        """L^1 = L, L^{i+1} = [L, L^i], listed until it stabilizes."""
        series = [Subspace.full(self.dim)]
        while True:
            nxt = self.bracket_span(series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
            if nxt.is_zero():
                break
        return series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero()

    def is_abelian(self) -> bool:
        return not self._table

    def is_ideal(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise ValueError("ambient dimension mismatch")
        return all(
            s.contains(self._ad(i, row))
            for i in range(self.dim)
            for row in s.basis.data
        )

    def is_central_ideal(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise ValueError("ambient dimension mismatch")
        return all(
            not any(self._ad(i, row))
            for i in range(self.dim)
            for row in s.basis.data
        )

    # -- constructions -------------------------------------------------------

    def quotient(self, ideal: Subspace) -> tuple["LieAlgebra", Matrix]:
        """L / N for an ideal N, with the projection onto quotient
        coordinates.

        Quotient coordinates are the non-pivot columns of the RREF of
        N's basis, so the construction is canonical: representatives of
        the quotient basis are the ambient unit vectors at those
        columns, and their labels are carried over.
        """
        if not self.is_ideal(ideal):
            raise ValueError("subspace is not an ideal")
        q = quotient_with_section(self.dim, ideal.basis.data)
        consts: dict[tuple[int, int], Vector] = {}
        for s in range(q.dim):
            for t in range(s + 1, q.dim):
                w = self.bracket_basis(q.section_cols[s], q.section_cols[t])
                consts[(s, t)] = q.projection.mul_vec(w)
        labels = tuple(self.labels[c] for c in q.section_cols)
        return LieAlgebra(q.dim, consts, labels), q.projection

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """The same algebra written in the basis f_i = sum_j p[i][j] e_j.

        Raises ValueError if p is not square invertible of matching size.
        """
        n = self.dim
        if p.rows != n or p.cols != n:
            raise ValueError("change of basis matrix has wrong shape")
        pinv_t = p.inverse().transpose()
        # rescale everything to integers and undo the scaling once per entry
        dp = 1
        for row in p.data:
            for x in row:
                dp = lcm(dp, x.denominator)
        pi = [[int(x * dp) for x in row] for row in p.data]
        dq = 1
        for row in pinv_t.data:
            for x in row:
                dq = lcm(dq, x.denominator)
        qi = [[int(x * dq) for x in row] for row in pinv_t.data]
        dt = 1
        for c in self._table.values():
            for x in c:
                dt = lcm(dt, x.denominator)
        ti = {key: [int(x * dt) for x in c] for key, c in self._table.items()}
        scale = Fraction(1, dp * dp * dt * dq)
        consts: dict[tuple[int, int], Vector] = {}
        for i in range(n):
            ri = pi[i]
            for j in range(i + 1, n):
                rj = pi[j]
                w = [0] * n
                for (a, b), c in ti.items():
                    coef = ri[a] * rj[b] - ri[b] * rj[a]
                    if coef:
                        for t, x in enumerate(c):
                            if x:
                                w[t] += coef * x
                if any(w):
                    consts[(i, j)] = tuple(
                        scale * sum(qr[t] * w[t] for t in range(n)) for qr in qi
                    )
        return LieAlgebra(self.dim, consts)


# ---------------------------------------------------------------------------
# standard families


def abelian(n: int) -> LieAlgebra:
    """A(n): the n-dimensional algebra with all brackets zero."""
    if n < 0:
        raise ValueError("negative dimension")
    return LieAlgebra(n, {}, labels=tuple(f"x{i + 1}" for i in range(n)))


def heisenberg(m: int) -> LieAlgebra:
    """H(m): dimension 2m + 1, basis a_1..a_m, b_1..b_m, z with
    [a_i, b_i] = z the only nonzero brackets."""
    if m < 1:
        raise ValueError("Heisenberg algebras need m >= 1")
    dim = 2 * m + 1
    labels = tuple(
        [f"a{i + 1}" for i in range(m)] + [f"b{i + 1}" for i in range(m)] + ["z"]
    )
    z = unit_vector(dim, 2 * m)
    return LieAlgebra(dim, {(i, m + i): z for i in range(m)}, labels=labels)


def direct_sum(left: LieAlgebra, right: LieAlgebra) -> LieAlgebra:
    """Block-diagonal direct sum; labels get ".1" / ".2" suffixes."""
    n1, n2 = left.dim, right.dim
    dim = n1 + n2
    consts: dict[tuple[int, int], Vector] = {}
    for (i, j), c in left.brackets.items():
        consts[(i, j)] = tuple(c) + zero_vector(n2)
    for (i, j), c in right.brackets.items():
        consts[(n1 + i, n1 + j)] = zero_vector(n1) + tuple(c)
    labels = tuple(f"{s}.1" for s in left.labels) + tuple(f"{s}.2" for s in right.labels)
    return LieAlgebra(dim, consts, labels=labels)


def scramble(algebra: LieAlgebra, seed: int) -> LieAlgebra:
    """Rewrite the algebra in a seeded random invertible rational basis."""
    rng = random.Random(seed)
    return algebra.change_basis(random_invertible(algebra.dim, rng))


def from_bracket_list(
    dim: int,
    entries: Iterable[tuple[int, int, Mapping[int, Scalar]]],
    labels: Sequence[str] | None = None,
) -> LieAlgebra:
    """Build an algebra from sparse (i, j, {k: coeff}) bracket entries.

    Duplicate (i, j) pairs are rejected; this is the loader used for the
    JSON file format.
    """
    table: dict[tuple[int, int], Vector] = {}
    for i, j, coeffs in entries:
        if (i, j) in table:
            raise InvalidAlgebraError(f"duplicate bracket entry ({i}, {j})")
        vec = [Fraction(0)] * dim
        for k, val in coeffs.items():
            if not 0 <= k < dim:
                raise InvalidAlgebraError(f"coefficient index {k} out of range in bracket ({i}, {j})")
            vec[k] = Fraction(val)
        table[(i, j)] = tuple(vec)
    return LieAlgebra(dim, table, labels=labels)
