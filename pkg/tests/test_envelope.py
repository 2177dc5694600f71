import random
from fractions import Fraction

import pytest

from oddtl import tl
from oddtl.envelope import (
    AssociatedSupercategory,
    DiagramHandle,
    PiCategory,
    PiEnvelope,
    PiObject,
    SupercategoryHandle,
    UnsupportedOperation,
    ValidationError,
    associated_supercategory,
    associativity_report,
    round_trip_report,
    underlying_pi_category,
)
from oddtl.superlinalg import SuperMap, SuperSpace

STL = PiEnvelope(DiagramHandle(4))


class ToySuperspace(SupercategoryHandle):
    """One object: the superspace k^{1|1}, with homogeneous matrix units as basis."""

    V = SuperSpace(["e", "o"], [0, 1])

    def objects(self):
        return ["V"]

    def hom_basis(self, X, Y):
        out = []
        for i in range(2):
            for j in range(2):
                out.append(SuperMap.from_columns(self.V, self.V, [{i: 1} if k == j else {}
                                                                   for k in range(2)]))
        return out

    def parity(self, f):
        return f.parity()

    def source(self, f):
        return "V"

    def target(self, f):
        return "V"

    def compose(self, f, g):
        return f @ g

    def identity(self, X):
        return SuperMap.identity(self.V)

    def is_zero(self, f):
        return f.is_zero()


def random_lift(rng, env, m, n, a, b):
    basis = env.base.hom_basis(m, n)
    f = rng.choice(basis)
    for extra in rng.sample(basis, min(2, len(basis))):
        f = f + extra * rng.randint(-2, 2)
    return env.lift(f, a, b)


# -- signs and structure ---------------------------------------------------------
def test_tensor_sign_examples():
    I1, cap = tl.identity(1), tl.cap()
    plain = STL.tensor(STL.lift(I1), STL.lift(cap))
    assert plain.base == I1 ^ cap
    for b in (0, 1):
        signed = STL.tensor(STL.lift(I1, 1, b), STL.lift(cap, 0, 0))
        assert signed.base == -(I1 ^ cap)
        assert signed.source == PiObject(3, 1) and signed.target == PiObject(1, b)


def test_tensor_sign_formula_exhaustive():
    f0, f1 = tl.identity(1), tl.cup()
    g0, g1 = tl.identity(2), tl.cap()
    for f in (f0, f1):
        for g in (g0, g1):
            for a, b, c, d in ((a, b, c, d) for a in (0, 1) for b in (0, 1)
                               for c in (0, 1) for d in (0, 1)):
                got = STL.tensor(STL.lift(f, a, b), STL.lift(g, c, d))
                sign = (-1) ** (a * g.parity + f.parity * d + a * d + a * c)
                assert got.base == (f ^ g) * sign
                assert got.parity == (f.parity + g.parity + a + b + c + d) % 2


def test_envelope_parity_and_composition():
    cup = STL.lift(tl.cup(), 1, 0)
    assert cup.parity == 0
    cap = STL.lift(tl.cap(), 0, 1)
    assert STL.compose(cap, cup).base == tl.cap() @ tl.cup()
    assert STL.compose(cap, cup).parity == cap.parity + cup.parity == 0
    with pytest.raises(ValueError):
        STL.compose(cap, STL.lift(tl.cup(), 0, 1))
    X = PiObject(2, 1)
    f = STL.lift(tl.identity(2), 1, 0)
    assert STL.compose(f, STL.identity(X)) == f


def test_zeta_is_an_odd_isomorphism():
    for X in STL.objects():
        z, zi = STL.zeta(X), STL.zeta_inverse(X)
        assert z.parity == 1 and z.target == X
        assert STL.compose(z, zi) == STL.identity(X)
        assert STL.compose(zi, z) == STL.identity(X.shifted())


def test_xi_is_minus_identity():
    P = underlying_pi_category(STL)
    for X in P.objects():
        assert P.xi(X) == -STL.identity(X)
        assert P.Pi_object(P.Pi_object(X)) == X
    assert all(P.validate().values())


def test_pi_on_morphisms_satisfies_defining_square():
    rng = random.Random(0)
    for _ in range(40):
        m = rng.randint(0, 3)
        n = m + 2 * rng.randint(0, 1)
        f = random_lift(rng, STL, m, n, rng.randint(0, 1), rng.randint(0, 1))
        lhs = STL.compose(STL.zeta(f.target), STL.Pi_morphism(f))
        rhs = STL.compose(f, STL.zeta(f.source)) * (-1) ** f.parity
        assert lhs == rhs


def test_envelope_associative():
    rng = random.Random(1)
    for _ in range(30):
        ar = [rng.randint(0, 3) for _ in range(4)]
        for i in (1, 2, 3):
            ar[i] += (ar[i] + ar[i - 1]) % 2
        sh = [rng.randint(0, 1) for _ in range(4)]
        h = random_lift(rng, STL, ar[0], ar[1], sh[0], sh[1])
        g = random_lift(rng, STL, ar[1], ar[2], sh[1], sh[2])
        f = random_lift(rng, STL, ar[2], ar[3], sh[2], sh[3])
        assert STL.compose(f, STL.compose(g, h)) == STL.compose(STL.compose(f, g), h)


@pytest.mark.parametrize("category", ["stl", "brauer"])
def test_super_interchange_in_envelope(category):
    env = PiEnvelope(DiagramHandle(4, category))
    rng = random.Random(2)
    for _ in range(250):
        ar = [rng.randint(0, 2) for _ in range(6)]
        for i in (1, 2, 4, 5):
            ar[i] += (ar[i] + ar[i - 1]) % 2
        x, y, z, u, w, t = ar
        s = [rng.randint(0, 1) for _ in range(6)]
        h = random_lift(rng, env, x, y, s[0], s[1])
        f = random_lift(rng, env, y, z, s[1], s[2])
        k = random_lift(rng, env, u, w, s[3], s[4])
        g = random_lift(rng, env, w, t, s[4], s[5])
        lhs = env.compose(env.tensor(f, g), env.tensor(h, k))
        rhs = env.tensor(env.compose(f, h), env.compose(g, k))
        assert lhs == rhs * (-1) ** (g.parity * h.parity)


# -- round trip ------------------------------------------------------------------
def test_round_trip_on_stl():
    report = round_trip_report(PiEnvelope(DiagramHandle(3)))
    assert report == {k: True for k in report}


def test_odd_composition_needs_the_minus_sign():
    # with ξ_Z ∘ Πg ∘ f taken literally, T is not a functor
    report = round_trip_report(PiEnvelope(DiagramHandle(2)), odd_sign=1)
    assert not report["T functorial"]
    assert not report["E D = I"]
    assert report["T bijective"] and report["T parity"]


def test_round_trip_on_toy_superspace():
    env = PiEnvelope(ToySuperspace())
    report = round_trip_report(env)
    assert report == {k: True for k in report}
    A_hat = associated_supercategory(underlying_pi_category(env))
    X = PiObject("V", 0)
    assert len(A_hat.hom_basis(X, X)) == 4
    assert sorted(f.parity for f in A_hat.hom_basis(X, X)) == [0, 0, 1, 1]


def test_hat_zeta_recovers_xi():
    env = PiEnvelope(DiagramHandle(2))
    P = underlying_pi_category(env)
    A_hat = AssociatedSupercategory(P)
    for X in A_hat.objects():
        z = A_hat.zeta(X)
        composite = A_hat.compose(z, A_hat.Pi_morphism(z))
        assert composite.parity == 0
        assert composite.under == P.xi(X)
    assert associativity_report(A_hat)


def test_non_monoidal_handle():
    env = PiEnvelope(ToySuperspace())
    f = env.identity(PiObject("V"))
    with pytest.raises(UnsupportedOperation):
        env.tensor(f, f)


def test_bad_pi_category_data_rejected():
    # one object pair {0, 1} swapped by Π, scalars as morphisms, and ξ chosen inconsistently
    P = PiCategory(
        objects=[0, 1], hom=lambda X, Y: [Fraction(1)] if X == Y else [],
        compose=lambda f, g: f * g, identity=lambda X: Fraction(1),
        Pi_object=lambda X: 1 - X, Pi_morphism=lambda f: f,
        xi=lambda X: Fraction(1 if X == 0 else -1), is_zero=lambda f: f == 0)
    assert not P.validate()["xi Pi = Pi xi"]
    with pytest.raises(ValidationError):
        associated_supercategory(P)
    good = PiCategory(
        objects=[0, 1], hom=lambda X, Y: [Fraction(1)] if X == Y else [],
        compose=lambda f, g: f * g, identity=lambda X: Fraction(1),
        Pi_object=lambda X: 1 - X, Pi_morphism=lambda f: f,
        xi=lambda X: Fraction(-1), is_zero=lambda f: f == 0)
    assert all(good.validate().values())
    assert associated_supercategory(good).objects() == [0, 1]


def test_unknown_category():
    with pytest.raises(ValueError):
        DiagramHandle(2, "tangles")
