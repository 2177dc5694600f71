from fractions import Fraction

import pytest

from oddtl.jones_wenzl import jw
from oddtl.k0 import ZPiLaurent, qint_xpi
from oddtl.osp import (
    G_cap_values,
    G_cup_vector,
    TensorModule,
    WeightModule,
    check_sl2_relation,
    decompose_tensor_power,
    e_action,
    e_matrix,
    equivariance_check,
    f_action,
    f_matrix,
    g_columns,
    g_functor,
    hom_rank,
    image_rank,
    supercharacter,
    tensor_module,
    tensor_power_module,
    theta,
    theta_table,
)
from oddtl.scalars import RatFunc, delta, quantum_int
from oddtl.superlinalg import rank
from oddtl.tl import basis_morphism, cap, cup, dyck_leq, dyck_sequence, enumerate_basis

Q = Fraction(2)


def test_weight_module_basis():
    V3 = WeightModule(3)
    assert V3.dim == 4
    assert [V3.weight(i) for i in range(4)] == [3, 1, -1, -3]
    assert [V3.parity(i) for i in range(4)] == [0, 1, 0, 1]
    assert [WeightModule(3, eps=1).parity(i) for i in range(4)] == [0, 0, 0, 0]
    assert repr(WeightModule(2, shift=1)) == "ΠV(2)"
    with pytest.raises(ValueError):
        WeightModule(-1)


def test_action_examples():
    for n in range(1, 6):
        M = WeightModule(n)
        assert f_action(M, {0: 1}) == {1: RatFunc(1)}
        assert e_action(M, {n: 1}) == {n - 1: RatFunc(1)}
        assert e_action(M, {0: 1}) == {} and f_action(M, {n: 1}) == {}
    V2 = WeightModule(2)
    # F v_0 = ε [2] v_{-2}
    assert f_action(V2, {1: 1}) == {2: -RatFunc(quantum_int(2))}


@pytest.mark.parametrize("eps", [-1, 1])
def test_defining_relation_on_simples(eps):
    for m in range(7):
        assert check_sl2_relation(WeightModule(m, eps))


def test_defining_relation_on_tensor_powers():
    for k in range(1, 6):
        assert check_sl2_relation(tensor_power_module(k))
    for k in range(1, 4):
        assert check_sl2_relation(tensor_power_module(k, eps=1))
    assert check_sl2_relation(TensorModule(WeightModule(2), WeightModule(3)))


def test_coassociativity_of_action():
    for parts in [(1, 1, 1), (2, 1, 1), (1, 2, 3)]:
        mods = [WeightModule(k, q=Q) for k in parts]
        left = tensor_module(*mods, bracketing="left")
        right = tensor_module(*mods, bracketing="right")
        assert e_matrix(left) == e_matrix(right)
        assert f_matrix(left) == f_matrix(right)


def test_g_on_generators():
    cup_vec = G_cup_vector()
    assert cup_vec == {(1, -1): -RatFunc.q(1), (-1, 1): RatFunc(1)}
    assert G_cap_values()[(-1, 1)] == RatFunc.q(-1)
    assert G_cap_values(eps=1)[(-1, 1)] == -RatFunc.q(-1)
    assert G_cap_values()[(1, -1)] == RatFunc(1)
    bubble = g_columns(cap() @ cup())
    assert bubble == [{(): RatFunc(delta())}]


def test_g_is_monoidal_on_small_homs():
    shapes = [(m, n) for m in range(4) for n in range(4) if (m + n) % 2 == 0]
    for m, k in shapes:
        for n in range(4):
            if (k + n) % 2:
                continue
            for d1 in enumerate_basis(k, n):
                for d2 in enumerate_basis(m, k):
                    f, g = basis_morphism(d1), basis_morphism(d2)
                    assert g_functor(f @ g, Q) == g_functor(f, Q) @ g_functor(g, Q)


def test_theta_single_cap():
    s = enumerate_basis(2, 0)[0]
    th = theta(s)
    assert th.matrix[0, 1] == RatFunc(1)  # v_1 ⊗ v_-1
    with pytest.raises(ValueError):
        theta(enumerate_basis(1, 1)[0])


@pytest.mark.parametrize("m", [2, 4, 6])
def test_theta_triangularity(m):
    seqs, table = theta_table(m, Q)
    for i, s in enumerate(seqs):
        for j, t in enumerate(seqs):
            if i == j:
                assert table[i][j] in (1, -1)
            elif not dyck_leq(t, s):
                assert table[i][j] == 0
    assert [dyck_sequence(d) for d in enumerate_basis(m, 0)] == seqs


def test_hom_spaces_have_full_rank():
    for total in range(0, 9, 2):
        for m in range(total + 1):
            assert hom_rank(m, total - m) == len(enumerate_basis(m, total - m))


def test_equivariance():
    assert all(equivariance_check().values())
    assert all(equivariance_check(q=Q).values())
    assert all(equivariance_check(eps=1).values())


def test_supercharacters():
    assert supercharacter(WeightModule(0)) == ZPiLaurent.one()
    assert supercharacter(WeightModule(1)) == ZPiLaurent.parse("x + πx^-1")
    for n in range(9):
        assert supercharacter(WeightModule(n, q=Q)) == qint_xpi(n + 1)
    VV = tensor_power_module(2, q=Q)
    assert supercharacter(VV) == qint_xpi(3) + ZPiLaurent.pi() * qint_xpi(1)


def test_character_is_multiplicative():
    for j in range(5):
        for k in range(5):
            M, N = WeightModule(j, q=Q), WeightModule(k, q=Q)
            assert supercharacter(TensorModule(M, N)) == supercharacter(M) * supercharacter(N)
    shifted = WeightModule(2, q=Q, shift=1)
    assert supercharacter(shifted) == ZPiLaurent.pi() * qint_xpi(3)


def highest_weight_counts(n):
    """Multiplicities from kernels of E on each (weight, parity) space, at q = 2."""
    M = tensor_power_module(n, q=Q)
    out = []
    for k in range(n, -1, -2):
        for p in (0, 1):
            vecs = [i for i in range(M.dim) if M.weight(i) == k and M.parity(i) == p]
            if not vecs:
                continue
            images = [e_action(M, {i: 1}) for i in vecs]
            rows = sorted({j for im in images for j in im})
            E = [[im.get(r, 0) for im in images] for r in rows]
            mult = len(vecs) - (rank(E) if rows else 0)
            if mult:
                out.append((k, p, mult))
    return sorted(out, reverse=True)


def test_decomposition_matches_highest_weight_vectors():
    assert decompose_tensor_power(1) == [(1, 0, 1)]
    assert decompose_tensor_power(2) == [(2, 0, 1), (0, 1, 1)]
    for n in range(1, 8):
        got = decompose_tensor_power(n)
        assert sorted(got, reverse=True) == highest_weight_counts(n)
        assert sum(mult * (k + 1) for k, _, mult in got) == 2 ** n


def test_jw_image_rank():
    assert image_rank(jw(3)) == 4
    assert rank(g_functor(jw(3)).map_entries(lambda c: c.evaluate(3)).matrix) == 4
    for n in range(1, 6):
        assert image_rank(jw(n)) == n + 1
