import random
from fractions import Fraction

import pytest

from oddtl.envelope import DiagramHandle, PiEnvelope
from oddtl.jones_wenzl import jw
from oddtl.k0 import (
    IdempotentPair,
    NotACharacter,
    ShapeMismatch,
    ZPiLaurent,
    chebyshev_genfun_check,
    clebsch_gordan,
    decompose_in_basis,
    jw_refinement_counts,
    jw_witnesses,
    k0_class_of_tensor_power,
    pi_free_rank,
    qint_xpi,
    verify_idempotent_equivalence,
)
from oddtl.osp import decompose_tensor_power, supercharacter, tensor_power_module
from oddtl.tl import TLMorphism

PI = ZPiLaurent.pi()


def as_pairs(p):
    """Coefficients as {(exponent, pi-power): int}, for comparing with hand expansions."""
    return {(k, t): c for k, ab in p.coeffs.items() for t, c in enumerate(ab) if c}


def naive_product(a, b):
    out = {}
    for (i, s), x in as_pairs(a).items():
        for (j, t), y in as_pairs(b).items():
            key = (i + j, (s + t) % 2)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def random_element(rng):
    return ZPiLaurent({rng.randint(-3, 3): (rng.randint(-3, 3), rng.randint(-3, 3))
                       for _ in range(3)})


def test_qint_examples():
    assert qint_xpi(1) == ZPiLaurent.one()
    assert str(qint_xpi(2)) == "x + pi*x^-1"
    assert str(qint_xpi(3)) == "x^2 + pi + x^-2"
    for bad in (0, -2):
        with pytest.raises(ValueError):
            qint_xpi(bad)


def test_text_round_trip():
    rng = random.Random(0)
    for _ in range(100):
        p = random_element(rng)
        assert ZPiLaurent.parse(str(p)) == p
    assert ZPiLaurent.parse("x^2 + 2*pi + x^-2") == qint_xpi(2) ** 2
    assert str(ZPiLaurent()) == "0" and ZPiLaurent.parse("0") == ZPiLaurent()
    with pytest.raises(ValueError):
        ZPiLaurent.parse("y^2")


def test_ring_axioms():
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = (random_element(rng) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert as_pairs(a * b) == naive_product(a, b)
        assert PI * PI * a == a
        assert a - a == ZPiLaurent()


def test_clebsch_gordan():
    assert qint_xpi(2) * qint_xpi(2) == qint_xpi(3) + PI * qint_xpi(1)
    assert str(qint_xpi(2) ** 2) == "x^2 + 2*pi + x^-2"
    for n in range(9):
        for m in range(9):
            assert qint_xpi(n + 1) * qint_xpi(m + 1) == clebsch_gordan(n, m)


def test_decompose_examples():
    two = qint_xpi(2)
    assert decompose_in_basis(two ** 2) == [(2, 0, 1), (0, 1, 1)]
    assert decompose_in_basis(two ** 3) == [(3, 0, 1), (1, 1, 2)]
    assert decompose_in_basis(ZPiLaurent()) == []
    assert decompose_in_basis(PI * qint_xpi(4)) == [(3, 1, 1)]
    with pytest.raises(NotACharacter):
        decompose_in_basis(-qint_xpi(2))
    with pytest.raises(NotACharacter):
        decompose_in_basis(ZPiLaurent.monomial(-1))


def test_decomposition_is_unique_expansion():
    rng = random.Random(2)
    for _ in range(50):
        terms = [(rng.randint(0, 6), rng.randint(0, 1), rng.randint(1, 3)) for _ in range(3)]
        p = sum((qint_xpi(k + 1) * PI ** pi * mult for k, pi, mult in terms), ZPiLaurent())
        rebuilt = sum((qint_xpi(k + 1) * PI ** pi * mult
                       for k, pi, mult in decompose_in_basis(p)), ZPiLaurent())
        assert rebuilt == p


def test_generating_function():
    for N in (1, 5, 20):
        assert chebyshev_genfun_check(N)
    with pytest.raises(ValueError):
        chebyshev_genfun_check(0)


def test_generating_function_by_hand():
    # (1 − [2]t + πt²)(1 + [2]t + [3]t² + …): the t² coefficient is [3] − [2]² + π
    two = qint_xpi(2)
    assert qint_xpi(3) - two * two + PI == ZPiLaurent()


def test_pi_acts_freely():
    assert pi_free_rank(12) == 26
    assert pi_free_rank(0) == 2


def test_tensor_power_classes():
    assert k0_class_of_tensor_power(0) == ZPiLaurent.one()
    assert str(k0_class_of_tensor_power(2)) == "x^2 + 2*pi + x^-2"
    for n in range(9):
        assert k0_class_of_tensor_power(n) == supercharacter(tensor_power_module(n, q=Fraction(2)))


def test_decompositions_agree_across_modules():
    for n in range(1, 11):
        d = decompose_in_basis(k0_class_of_tensor_power(n))
        assert sum(mult * (k + 1) for k, _, mult in d) == 2 ** n
        assert sorted(d) == sorted(decompose_tensor_power(n))
        if n <= 6:
            assert sorted(jw_refinement_counts(n)) == sorted(d)


# -- idempotent equivalence -----------------------------------------------------
def test_trivial_equivalence():
    env = PiEnvelope(DiagramHandle(3))
    e = IdempotentPair(env.lift(jw(3)), env)
    assert verify_idempotent_equivalence(e, e, e.e, e.e)


@pytest.mark.parametrize("eps", [-1, 1])
def test_jw_witnesses(eps):
    for n in range(2, 7):
        g, f, u, v = jw_witnesses(n, eps)
        assert (g.obj.shift, f.obj.shift) == (0, 1)
        assert verify_idempotent_equivalence(g, f, u, v)


def test_wrong_witnesses_fail():
    env = PiEnvelope(DiagramHandle(3))
    f2 = IdempotentPair(env.lift(jw(2)), env)
    f3 = IdempotentPair(env.lift(jw(3)), env)
    u = env.lift(TLMorphism.zero(3, 2))
    v = env.lift(TLMorphism.zero(2, 3))
    assert not verify_idempotent_equivalence(f2, f3, u, v)
    # the same witnesses against unshifted f_{n-2} are mis-shaped
    g, _f, u3, v3 = jw_witnesses(3)
    with pytest.raises(ShapeMismatch):
        verify_idempotent_equivalence(g, IdempotentPair(env.lift(jw(1)), env), u3, v3)


def test_idempotent_pair_validation():
    env = PiEnvelope(DiagramHandle(3))
    with pytest.raises(ValueError):
        IdempotentPair(env.lift(jw(2) * 2), env)
    with pytest.raises(ShapeMismatch):
        IdempotentPair(env.lift(jw(2), 0, 1), env)
