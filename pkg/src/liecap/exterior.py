"""Constructive non-abelian exterior squares.

For an n-dimensional algebra L the exterior square L ^ L is realized as
a quotient of the n^2-dimensional span of formal symbols e_i (x) e_j by
three relation families, instantiated at all basis triples (i, j, k):

  (R1)  [e_i,e_j] (x) e_k  -  e_i (x) [e_j,e_k]  +  e_j (x) [e_i,e_k]
  (R2)  e_i (x) [e_j,e_k]  -  [e_k,e_i] (x) e_j  +  [e_j,e_i] (x) e_k
  (R3)  e_i (x) e_i,   and   e_i (x) e_j + e_j (x) e_i  for i < j

where a bracket inside a slot is expanded through the structure
constants.  The commutator map sends the class of e_i (x) e_j to
[e_i, e_j]; the multiplier is its kernel, so

  dim M(L) = dim(L ^ L) - dim [L, L].

Every construction self-checks that each relation vector maps to zero
under the symbol-level commutator map (this is equivalent to the Jacobi
identity, so a failure signals a defect, and raises).  The quotient is
taken with canonical coordinates (non-pivot columns of the relation
RREF), which makes all reported bases and projections deterministic.

This module never consults the closed-form tables; it is the
independent witness the formulas are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .linalg import (
    Fraction,
    Matrix,
    SpanBuilder,
    Subspace,
    Vector,
    _normalize_int,
    _quotient_from_builder,
    kernel_basis,
    vector,
    zero_vector,
)
from .lie import LieAlgebra


class ConstructionError(RuntimeError):
    """Internal consistency check failed while building an exterior square."""


@dataclass(frozen=True)
class ExteriorSquare:
    """The exterior square of ``source`` in canonical quotient coordinates.

    ``projection`` maps the n^2 symbol coordinates onto the quotient;
    ``commutator_map`` maps quotient coordinates to coordinates in the
    derived subalgebra (it is surjective by construction).
    """

    source: LieAlgebra
    ambient_dim: int
    relation_rank: int
    quotient_dim: int
    projection: Matrix
    commutator_map: Matrix
    derived: Subspace

    def wedge(self, x, y) -> Vector:
        """Class of x ^ y in quotient coordinates."""
        n = self.source.dim
        xv = vector(x)
        yv = vector(y)
        if len(xv) != n or len(yv) != n:
            raise ValueError("vector length does not match algebra dimension")
        tensor = [Fraction(0)] * (n * n)
        for i, a in enumerate(xv):
            if a:
                base = i * n
                for j, b in enumerate(yv):
                    if b:
                        tensor[base + j] = a * b
        return self.projection.mul_vec(tensor)

    def basis_wedge(self, i: int, j: int) -> Vector:
        """Class of e_i ^ e_j; just a column of the projection."""
        n = self.source.dim
        return self.projection.column(i * n + j)

    def commutator(self, w) -> Vector:
        """Image of a quotient vector under the commutator map, given in
        coordinates of the derived subalgebra's basis."""
        return self.commutator_map.mul_vec(w)

    def multiplier_dim(self) -> int:
        return self.quotient_dim - self.derived.dim


def _integer_brackets(algebra: LieAlgebra) -> list[list[list[int]]]:
    """All basis brackets scaled by one common denominator.

    A uniform scaling multiplies every relation row by the same nonzero
    constant, so spans are unchanged and the hot loops can stay on int.
    """
    n = algebra.dim
    den = 1
    for c in algebra.brackets.values():
        for x in c:
            d = x.denominator
            if d != 1:
                den = den * d // math.gcd(den, d)
    out = []
    for i in range(n):
        out.append(
            [
                [x.numerator * (den // x.denominator) for x in algebra.bracket_basis(i, j)]
                for j in range(n)
            ]
        )
    return out


def _relation_rows(algebra: LieAlgebra, ibr: list[list[list[int]]]) -> list[list[int]]:
    """All relation vectors as normalized integer rows, deduplicated.

    Deduplication only removes repeated rows (the families overlap
    heavily); the spanned relation subspace is unchanged.
    """
    n = algebra.dim
    seen: set[tuple[int, ...]] = set()
    rows: list[list[int]] = []

    def push(entries: dict[int, int]) -> None:
        if not entries:
            return
        dense = [0] * (n * n)
        for col, val in entries.items():
            dense[col] = val
        row = _normalize_int(dense)
        if row is None:
            return
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            rows.append(row)

    nz = [[any(ibr[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not (nz[i][j] or nz[j][k] or nz[i][k]):
                    continue
                c_ij = ibr[i][j]
                c_jk = ibr[j][k]
                c_ik = ibr[i][k]
                # R1: [e_i,e_j](x)e_k - e_i(x)[e_j,e_k] + e_j(x)[e_i,e_k]
                entries: dict[int, int] = {}
                for l, v in enumerate(c_ij):
                    if v:
                        col = l * n + k
                        entries[col] = entries.get(col, 0) + v
                for l, v in enumerate(c_jk):
                    if v:
                        col = i * n + l
                        entries[col] = entries.get(col, 0) - v
                for l, v in enumerate(c_ik):
                    if v:
                        col = j * n + l
                        entries[col] = entries.get(col, 0) + v
                push(entries)
                # R2: e_i(x)[e_j,e_k] - [e_k,e_i](x)e_j + [e_j,e_i](x)e_k
                entries = {}
                for l, v in enumerate(c_jk):
                    if v:
                        col = i * n + l
                        entries[col] = entries.get(col, 0) + v
                for l, v in enumerate(ibr[k][i]):
                    if v:
                        col = l * n + j
                        entries[col] = entries.get(col, 0) - v
                for l, v in enumerate(ibr[j][i]):
                    if v:
                        col = l * n + k
                        entries[col] = entries.get(col, 0) + v
                push(entries)

    for i in range(n):
        push({i * n + i: 1})
        for j in range(i + 1, n):
            push({i * n + j: 1, j * n + i: 1})
    return rows


def _check_relations_die(n: int, ibr: list[list[list[int]]], rows: list[list[int]]) -> None:
    """Self-check: every relation must vanish under the symbol-level
    commutator map e_i (x) e_j -> [e_i, e_j].  A failure means the
    construction (or the input constants) is defective."""
    for row in rows:
        image = [0] * n
        for col, val in enumerate(row):
            if val:
                i, j = divmod(col, n)
                c = ibr[i][j]
                for t in range(n):
                    x = c[t]
                    if x:
                        image[t] += val * x
        if any(image):
            raise ConstructionError("relation vector survives the commutator map")


@lru_cache(maxsize=None)
def exterior_square(algebra: LieAlgebra) -> ExteriorSquare:
    """Build L ^ L with its commutator map.  Cached per algebra."""
    algebra.require_valid()
    n = algebra.dim
    ibr = _integer_brackets(algebra)
    rows = _relation_rows(algebra, ibr)
    _check_relations_die(n, ibr, rows)

    sb = SpanBuilder(n * n)
    for row in rows:
        sb.add_int_row(list(row))
    quotient = _quotient_from_builder(sb)

    derived = algebra.derived_subalgebra()
    columns: list[Vector] = []
    for col in quotient.section_cols:
        coords = derived.coordinates(algebra.bracket_basis(*divmod(col, n)))
        if coords is None:
            raise ConstructionError("basis bracket escapes the derived subalgebra")
        columns.append(coords)
    commutator_map = Matrix.from_rows(
        [[c[t] for c in columns] for t in range(derived.dim)],
        cols=quotient.dim,
    )
    if commutator_map.rank() != derived.dim:
        raise ConstructionError("commutator map is not surjective onto [L, L]")

    return ExteriorSquare(
        source=algebra,
        ambient_dim=n * n,
        relation_rank=sb.rank,
        quotient_dim=quotient.dim,
        projection=quotient.projection,
        commutator_map=commutator_map,
        derived=derived,
    )


def exterior_square_dim(algebra: LieAlgebra) -> int:
    return exterior_square(algebra).quotient_dim


def multiplier_dim(algebra: LieAlgebra) -> int:
    """dim M(L), constructed as dim ker of the commutator map."""
    return exterior_square(algebra).multiplier_dim()


def exterior_center(algebra: LieAlgebra) -> Subspace:
    """{x in L : x ^ y = 0 in L ^ L for every y}.

    Computed as the kernel of the stacked maps x -> x ^ e_j; the algebra
    is capable exactly when this is zero."""
    ext = exterior_square(algebra)
    n = algebra.dim
    q = ext.quotient_dim
    rows = []
    for j in range(n):
        for s in range(q):
            rows.append([ext.projection.data[s][i * n + j] for i in range(n)])
    if not rows:
        return Subspace.full(n)
    return kernel_basis(Matrix.from_rows(rows, cols=n))


def is_capable(algebra: LieAlgebra) -> bool:
    return exterior_center(algebra).is_zero()


def _require_central_ideal(algebra: LieAlgebra, ideal: Subspace) -> None:
    if not algebra.is_central_ideal(ideal):
        raise ValueError("subspace is not a central ideal")


def quotient_exterior_dim(algebra: LieAlgebra, ideal: Subspace) -> int:
    """dim((L/N) ^ (L/N)) for a central ideal N."""
    _require_central_ideal(algebra, ideal)
    quotient, _ = algebra.quotient(ideal)
    return exterior_square(quotient).quotient_dim


def ideal_wedge_image(algebra: LieAlgebra, ideal: Subspace) -> Subspace:
    """Image of L ^ N inside L ^ L, for a central ideal N."""
    _require_central_ideal(algebra, ideal)
    ext = exterior_square(algebra)
    n = algebra.dim
    sb = SpanBuilder(ext.quotient_dim)
    for i in range(n):
        for u in ideal.basis.data:
            w = zero_vector(ext.quotient_dim)
            for j, c in enumerate(u):
                if c:
                    col = ext.basis_wedge(i, j)
                    w = tuple(a + c * b for a, b in zip(w, col))
            sb.add(w)
    return sb.subspace()


def ideal_in_exterior_center(algebra: LieAlgebra, ideal: Subspace) -> bool:
    """Decide N <= Z^(L) for a central ideal N without computing Z^(L):
    N sits inside the exterior center exactly when passing to L/N does
    not change the exterior square dimension."""
    _require_central_ideal(algebra, ideal)
    return exterior_square(algebra).quotient_dim == quotient_exterior_dim(algebra, ideal)
