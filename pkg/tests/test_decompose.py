"""Recognition of H(m) + A(k): induced forms, symplectic bases and the
certified decomposition round trip."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import rank_by_minors
from liecap.decompose import (
    AbelianAlgebraError,
    AlternatingForm,
    heisenberg_decompose,
    induced_form,
    symplectic_basis,
)
from liecap.lie import LieAlgebra, abelian, direct_sum, heisenberg, scramble
from liecap.linalg import Matrix, kernel_basis, unit_vector


def test_induced_form_heisenberg():
    form, z = induced_form(heisenberg(1))
    assert z == unit_vector(3, 2)
    assert form.matrix == Matrix.from_rows(
        [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    )


def test_induced_form_rank_is_basis_invariant():
    L = direct_sum(heisenberg(2), abelian(1))
    base_rank = induced_form(L)[0].rank()
    assert base_rank == 4
    for seed in (1, 2, 3):
        form, _ = induced_form(scramble(L, seed))
        assert form.rank() == 4


def test_induced_form_rejections():
    with pytest.raises(ValueError):
        induced_form(abelian(3))  # derived dimension 0
    with pytest.raises(ValueError):
        induced_form(direct_sum(heisenberg(1), heisenberg(1)))  # dimension 2
    with pytest.raises(ValueError):
        induced_form(LieAlgebra(2, {(0, 1): (0, 1)}))  # not nilpotent


def test_alternating_form_rejects_non_skew():
    with pytest.raises(ValueError):
        AlternatingForm(Matrix.from_rows([[0, 1], [1, 0]]))


def test_symplectic_basis_zero_form():
    form = AlternatingForm(Matrix.zero(3, 3))
    pairs, radical = symplectic_basis(form)
    assert pairs == []
    assert radical.dim == 3


def test_symplectic_basis_standard_pair():
    form = AlternatingForm(Matrix.from_rows([[0, 1], [-1, 0]]))
    pairs, radical = symplectic_basis(form)
    assert len(pairs) == 1
    assert radical.dim == 0
    a, b = pairs[0]
    assert form.value(a, b) == 1


@pytest.mark.parametrize("seed", [5, 21, 77])
def test_symplectic_basis_random_skew(seed):
    # random 6x6 alternating form; rank certified by minor expansion
    rng = random.Random(seed)
    raw = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(6)]
    skew = [[raw[i][j] - raw[j][i] for j in range(6)] for i in range(6)]
    form = AlternatingForm(Matrix.from_rows(skew))
    rank = rank_by_minors(skew)
    pairs, radical = symplectic_basis(form)
    assert 2 * len(pairs) == rank
    assert 2 * len(pairs) + radical.dim == 6
    assert radical == kernel_basis(form.matrix)
    # full pairing table: f(a_i, b_j) = delta_ij, everything else zero
    avs = [p[0] for p in pairs]
    bvs = [p[1] for p in pairs]
    for i, a in enumerate(avs):
        for j, b in enumerate(bvs):
            assert form.value(a, b) == (1 if i == j else 0)
    for i, x in enumerate(avs):
        for j, y in enumerate(avs):
            assert form.value(x, y) == 0
    for i, x in enumerate(bvs):
        for j, y in enumerate(bvs):
            assert form.value(x, y) == 0
    for x in avs + bvs:
        for r in radical.basis.data:
            assert form.value(x, r) == 0


def test_decompose_canonical_inputs():
    for m in (1, 2, 3):
        for k in (0, 1, 2):
            L = direct_sum(heisenberg(m), abelian(k)) if k else heisenberg(m)
            dec = heisenberg_decompose(L)
            assert (dec.m, dec.k) == (m, k)
            # canonical input, canonical answer: the basis change is trivial
            assert dec.basis_change == Matrix.identity(L.dim)


def test_decompose_rejections():
    with pytest.raises(AbelianAlgebraError):
        heisenberg_decompose(abelian(3))
    with pytest.raises(ValueError):
        heisenberg_decompose(direct_sum(heisenberg(1), heisenberg(1)))
    with pytest.raises(ValueError):
        heisenberg_decompose(LieAlgebra(2, {(0, 1): (0, 1)}))


def test_decompose_seven_dimensional_rank_two():
    # dim 7 with one Heisenberg pair leaves a 4-dimensional abelian part
    L = direct_sum(heisenberg(1), abelian(4))
    dec = heisenberg_decompose(L)
    assert (dec.m, dec.k) == (1, 4)


def test_form_radical_equals_center():
    # for nilpotent L with one-dimensional [L, L] the radical of the
    # induced form is exactly the center
    for base, seed in ((heisenberg(2), 31), (direct_sum(heisenberg(1), abelian(2)), 32)):
        L = scramble(base, seed)
        form, _ = induced_form(L)
        assert form.radical() == L.center()


def test_decompose_dimension_count():
    for m in (1, 2, 3):
        for k in (0, 2):
            L = scramble(direct_sum(heisenberg(m), abelian(k)), 400 + 10 * m + k)
            dec = heisenberg_decompose(L)
            assert 2 * dec.m + 1 + dec.k == L.dim


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_decompose_round_trip_under_scrambles(m, k):
    canonical = direct_sum(heisenberg(m), abelian(k))
    expected = dict(canonical.brackets)
    for seed in range(25):
        scrambled = scramble(canonical, 9000 + 97 * (10 * m + k) + seed)
        dec = heisenberg_decompose(scrambled)
        assert (dec.m, dec.k) == (m, k)
        rewritten = scrambled.change_basis(dec.basis_change)
        assert dict(rewritten.brackets) == expected
