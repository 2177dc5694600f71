import random
from fractions import Fraction

import pytest
from oracles import koszul_kron

from oddtl.superlinalg import (
    SuperMap,
    SuperSpace,
    parity_shift,
    rank,
    tensor_map,
    tensor_power,
    tensor_space,
)

V = SuperSpace(["v1", "v-1"], [0, 1])


def random_space(rng, max_dim=3):
    d = rng.randint(1, max_dim)
    return SuperSpace(range(d), [rng.randint(0, 1) for _ in range(d)])


def random_homogeneous(rng, src, tgt, parity):
    cols = []
    for j in range(src.dim):
        col = {}
        for i in range(tgt.dim):
            if (src.parity[j] + tgt.parity[i]) % 2 == parity and rng.random() < 0.7:
                col[i] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        cols.append(col)
    return SuperMap.from_columns(src, tgt, cols)


def as_lists(f):
    return [[Fraction(x) for x in row] for row in f.matrix]


def test_tensor_space_parities():
    assert tensor_space(V, V).parity == (0, 1, 1, 0)
    assert tensor_space(V, V).basis == (("v1", "v1"), ("v1", "v-1"), ("v-1", "v1"), ("v-1", "v-1"))
    empty = SuperSpace([], [])
    assert tensor_space(V, empty).dim == 0
    assert tensor_power(V, 0) == SuperSpace.unit()
    assert tensor_power(V, 3).dim == 8


def test_parity_shift():
    assert parity_shift(V).parity == (1, 0)
    assert parity_shift(parity_shift(V)) == V
    assert parity_shift(V).dim == V.dim


def test_space_validation():
    with pytest.raises(ValueError):
        SuperSpace(["a", "a"], [0, 1])
    with pytest.raises(ValueError):
        SuperSpace(["a"], [0, 1])


def test_even_tensor_is_kronecker():
    rng = random.Random(1)
    f = random_homogeneous(rng, V, V, 0)
    g = random_homogeneous(rng, V, V, 0)
    n = V.dim  # row (i, k), column (j, l)
    expected = [[as_lists(f)[i][j] * as_lists(g)[k][l] for j in range(n) for l in range(n)]
                for i in range(n) for k in range(n)]
    assert as_lists(tensor_map(f, g)) == expected


def test_odd_g_negates_odd_v_entries():
    g = SuperMap.from_columns(V, V, [{1: 1}, {0: 1}])  # odd swap
    f = SuperMap.identity(V)
    M = tensor_map(f, g).matrix
    # v = v1 (even): no sign; v = v-1 (odd): sign
    assert M[1, 0] == 1 and M[0, 1] == 1
    assert M[3, 2] == -1 and M[2, 3] == -1


@pytest.mark.parametrize("seed", range(40))
def test_tensor_matches_sign_by_hand(seed):
    rng = random.Random(seed)
    spaces = [random_space(rng) for _ in range(4)]
    pf, pg = rng.randint(0, 1), rng.randint(0, 1)
    f = random_homogeneous(rng, spaces[0], spaces[1], pf)
    g = random_homogeneous(rng, spaces[2], spaces[3], pg)
    assert as_lists(tensor_map(f, g)) == koszul_kron(as_lists(f), as_lists(g), pg,
                                                     list(spaces[0].parity))


def test_super_interchange_randomised():
    rng = random.Random(7)
    for _ in range(500):
        X, Y, Z, U, W, T = (random_space(rng) for _ in range(6))
        pf, pg, ph, pk = (rng.randint(0, 1) for _ in range(4))
        h = random_homogeneous(rng, X, Y, ph)
        f = random_homogeneous(rng, Y, Z, pf)
        k = random_homogeneous(rng, U, W, pk)
        g = random_homogeneous(rng, W, T, pg)
        lhs = tensor_map(f, g) @ tensor_map(h, k)
        rhs = tensor_map(f @ h, g @ k)
        if g.parity() and h.parity():
            rhs = -rhs
        assert lhs == rhs


def test_composition_basics():
    rng = random.Random(3)
    for _ in range(50):
        A, B, C, D = (random_space(rng) for _ in range(4))
        f = random_homogeneous(rng, C, D, rng.randint(0, 1))
        g = random_homogeneous(rng, B, C, rng.randint(0, 1))
        h = random_homogeneous(rng, A, B, rng.randint(0, 1))
        assert f @ SuperMap.identity(C) == f
        assert (f @ g) @ h == f @ (g @ h)
        fg = f @ g
        if not fg.is_zero():
            assert fg.parity() == (f.parity() + g.parity()) % 2
    with pytest.raises(ValueError):
        SuperMap.identity(V) @ SuperMap.identity(tensor_space(V, V))


def test_parts_recombine():
    rng = random.Random(5)
    for _ in range(30):
        A, B = random_space(rng), random_space(rng)
        f = random_homogeneous(rng, A, B, 0) + random_homogeneous(rng, A, B, 1)
        even, odd = f.parts
        assert even + odd == f
        assert even.parity() == 0 and odd.parity() in (0, 1)


def test_tensor_is_bilinear_and_strictly_associative():
    rng = random.Random(11)
    for _ in range(30):
        A, B, C = (random_space(rng, 2) for _ in range(3))
        f = random_homogeneous(rng, A, A, rng.randint(0, 1))
        g = random_homogeneous(rng, B, B, rng.randint(0, 1))
        g2 = random_homogeneous(rng, B, B, g.parity())
        h = random_homogeneous(rng, C, C, rng.randint(0, 1))
        assert tensor_map(f, g + g2) == tensor_map(f, g) + tensor_map(f, g2)
        assert tensor_map(f.scale(3), g) == tensor_map(f, g).scale(3)
        left = tensor_map(tensor_map(f, g), h)
        right = tensor_map(f, tensor_map(g, h))
        assert (left.matrix == right.matrix).all()


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 0], [0, 3]]) == 2
    assert rank([[1, 1], [1, 1 + 7]], modulus=7) == 1
