"""Closed-form Schur multiplier dimensions for the classified families."""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import AbelianAlgebraError, heisenberg_decompose
from .lie import LieAlgebra


def abelian_multiplier_dim(n: int) -> int:
    """dim M(A(n)) = n(n-1)/2."""
    if n < 0:
        raise ValueError("negative dimension")
    return n * (n - 1) // 2


def heisenberg_multiplier_dim(m: int) -> int:
    """dim M(H(1)) = 2; dim M(H(m)) = 2m^2 - m - 1 for m >= 2."""
    if m < 1:
        raise ValueError("Heisenberg algebras need m >= 1")
    return 2 if m == 1 else 2 * m * m - m - 1


def heisenberg_exterior_square_dim(m: int) -> int:
    """dim(H(1) ^ H(1)) = 3; dim(H(m) ^ H(m)) = 2m^2 - m for m >= 2."""
    if m < 1:
        raise ValueError("Heisenberg algebras need m >= 1")
    return 3 if m == 1 else 2 * m * m - m


def direct_sum_multiplier_dim(dim_m1: int, dim_m2: int, ab1: int, ab2: int) -> int:
    """dim M(L1 + L2) from the summands: dim M(L1) + dim M(L2) plus the
    product of the abelianization dimensions dim(L1/L1') * dim(L2/L2')."""
    return dim_m1 + dim_m2 + ab1 * ab2


@dataclass(frozen=True)
class MultiplierReport:
    description: str
    dim_multiplier: int
    dim_exterior_square: int
    method: str


def classified_multiplier(algebra: LieAlgebra) -> MultiplierReport:
    """Closed-form multiplier dimension for nilpotent algebras with
    dim [L, L] <= 1, routed through the H(m) + A(k) decomposition.

    Anything with dim [L, L] >= 2 (or non-nilpotent) has no closed form
    here and raises ValueError; use the constructive path instead.
    """
    algebra.require_valid()
    if not algebra.is_nilpotent():
        raise ValueError("no closed form: algebra is not nilpotent")
    n = algebra.dim
    try:
        dec = heisenberg_decompose(algebra)
    except AbelianAlgebraError:
        dim_m = abelian_multiplier_dim(n)
        return MultiplierReport(f"A({n})", dim_m, dim_m, "closed-form")
    except ValueError:
        raise ValueError("no closed form: dim [L, L] >= 2") from None
    dim_m = direct_sum_multiplier_dim(
        heisenberg_multiplier_dim(dec.m),
        abelian_multiplier_dim(dec.k),
        2 * dec.m,
        dec.k,
    )
    # dim(L ^ L) = dim M(L) + dim [L, L] for any finite-dimensional L
    return MultiplierReport(f"H({dec.m})+A({dec.k})", dim_m, dim_m + 1, "closed-form")
