"""The Π-envelope of a supercategory and the passage to and from Π-categories.

A morphism ``f^b_a: Π^a λ → Π^b μ`` of the envelope is a homogeneous
morphism ``f: λ → μ`` of the base category together with the two shifts; its
parity is ``|f| + a + b``.  Composition ignores the shifts and tensor products
pick up the sign ``(−1)^{a|g| + |f|d + ad + ac}``.

Everything here works through a small *handle* interface so that the same
code serves the Temperley-Lieb category, the odd Brauer category and toy
examples in the tests.
"""
from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass


class UnsupportedOperation(TypeError):
    """The handle does not provide the requested structure."""


class ValidationError(ValueError):
    """Π-category data violating ``ξΠ = Πξ`` or naturality."""


# --------------------------------------------------------------------------
# Handles
# --------------------------------------------------------------------------
class SupercategoryHandle:
    """Interface to a (monoidal) supercategory truncated to finitely many objects.

    Morphisms must support ``+``, unary ``-``, scalar ``*`` and ``==``.
    """

    monoidal = False

    def objects(self) -> list:
        raise NotImplementedError

    def hom_basis(self, X, Y) -> list:
        """A basis of ``Hom(X, Y)`` consisting of homogeneous morphisms."""
        raise NotImplementedError

    def parity(self, f) -> int:
        raise NotImplementedError

    def source(self, f):
        raise NotImplementedError

    def target(self, f):
        raise NotImplementedError

    def compose(self, f, g):
        """``f ∘ g``."""
        raise NotImplementedError

    def identity(self, X):
        raise NotImplementedError

    def is_zero(self, f) -> bool:
        raise NotImplementedError

    def tensor(self, f, g):
        raise UnsupportedOperation("this supercategory is not monoidal")

    def tensor_objects(self, X, Y):
        raise UnsupportedOperation("this supercategory is not monoidal")


class DiagramHandle(SupercategoryHandle):
    """The Temperley-Lieb or Brauer category on objects ``0..max_n``."""

    monoidal = True

    def __init__(self, max_n: int, category: str = "stl", eps: int = -1):
        self.max_n = max_n
        self.category = category
        self.eps = eps
        if category == "stl":
            from . import tl
            self._mod = tl
            self._basis = tl.enumerate_basis
        elif category == "brauer":
            from . import brauer
            self._mod = brauer
            self._basis = brauer.enumerate_diagrams
        else:
            raise ValueError(f"unknown category {category!r}")

    def objects(self):
        return list(range(self.max_n + 1))

    def hom_basis(self, X, Y):
        return [self._mod.basis_morphism(d, self.eps) for d in self._basis(X, Y)]

    def parity(self, f):
        return f.parity

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def compose(self, f, g):
        return f @ g

    def identity(self, X):
        return self._mod.identity(X, self.eps)

    def is_zero(self, f):
        return f.is_zero()

    def tensor(self, f, g):
        return f.tensor(g)

    def tensor_objects(self, X, Y):
        return X + Y


# --------------------------------------------------------------------------
# The envelope
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class PiObject:
    base: Hashable
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "shift", self.shift % 2)

    def shifted(self, k: int = 1) -> PiObject:
        return PiObject(self.base, self.shift + k)

    def __str__(self) -> str:
        return f"{'Π' if self.shift else ''}{self.base}"


class PiMorphism:
    """``f^b_a: Π^a λ → Π^b μ``; ``base`` is a morphism of the underlying category."""

    __slots__ = ("base", "base_parity", "source", "target")

    def __init__(self, base, source: PiObject, target: PiObject, base_parity: int):
        self.base = base
        self.source = source
        self.target = target
        self.base_parity = base_parity % 2

    @property
    def a(self) -> int:
        return self.source.shift

    @property
    def b(self) -> int:
        return self.target.shift

    @property
    def parity(self) -> int:
        return (self.base_parity + self.a + self.b) % 2

    def _same(self, other: PiMorphism) -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("morphisms have different source or target")

    def __add__(self, other: PiMorphism) -> PiMorphism:
        self._same(other)
        return PiMorphism(self.base + other.base, self.source, self.target, self.base_parity)

    def __neg__(self) -> PiMorphism:
        return PiMorphism(-self.base, self.source, self.target, self.base_parity)

    def __sub__(self, other: PiMorphism) -> PiMorphism:
        return self + (-other)

    def __mul__(self, c) -> PiMorphism:
        return PiMorphism(self.base * c, self.source, self.target, self.base_parity)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiMorphism):
            return NotImplemented
        return (self.source, self.target) == (other.source, other.target) and self.base == other.base

    __hash__ = None

    def __repr__(self) -> str:
        return f"PiMorphism({self.source} -> {self.target}, parity={self.parity}, base={self.base!r})"


class PiEnvelope(SupercategoryHandle):
    """``A_π`` for a handle ``A``; itself a Π-supercategory handle."""

    def __init__(self, base: SupercategoryHandle):
        self.base = base
        self.monoidal = base.monoidal

    # -- objects and homs -------------------------------------------------
    def objects(self):
        return [PiObject(X, a) for X in self.base.objects() for a in (0, 1)]

    def lift(self, f, a: int = 0, b: int = 0) -> PiMorphism:
        """``f^b_a``."""
        B = self.base
        return PiMorphism(f, PiObject(B.source(f), a), PiObject(B.target(f), b), B.parity(f))

    def hom_basis(self, X: PiObject, Y: PiObject):
        return [self.lift(h, X.shift, Y.shift) for h in self.base.hom_basis(X.base, Y.base)]

    def parity(self, f: PiMorphism) -> int:
        return f.parity

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def identity(self, X: PiObject) -> PiMorphism:
        return self.lift(self.base.identity(X.base), X.shift, X.shift)

    def is_zero(self, f) -> bool:
        return self.base.is_zero(f.base)

    def compose(self, f: PiMorphism, g: PiMorphism) -> PiMorphism:
        """``f^c_b ∘ g^b_a = (f ∘ g)^c_a``."""
        if g.target != f.source:
            raise ValueError(f"cannot compose: {g.target} is not {f.source}")
        return PiMorphism(self.base.compose(f.base, g.base), g.source, f.target,
                          f.base_parity + g.base_parity)

    def tensor_objects(self, X: PiObject, Y: PiObject) -> PiObject:
        return PiObject(self.base.tensor_objects(X.base, Y.base), X.shift + Y.shift)

    def tensor(self, f: PiMorphism, g: PiMorphism) -> PiMorphism:
        """``f^b_a ⊗ g^d_c = (−1)^{a|g| + |f|d + ad + ac} (f⊗g)^{b+d}_{a+c}``."""
        if not self.base.monoidal:
            raise UnsupportedOperation("the base category is not monoidal")
        a, c, d = f.a, g.a, g.b
        sign = (a * g.base_parity + f.base_parity * d + a * d + a * c) % 2
        base = self.base.tensor(f.base, g.base)
        if sign:
            base = -base
        return PiMorphism(base, self.tensor_objects(f.source, g.source),
                          self.tensor_objects(f.target, g.target),
                          f.base_parity + g.base_parity)

    # -- Π-structure ------------------------------------------------------
    def Pi_object(self, X: PiObject) -> PiObject:
        return X.shifted()

    def zeta(self, X: PiObject) -> PiMorphism:
        """The odd isomorphism ``ζ_X = (1)^a_{a+1}: ΠX → X``."""
        return self.lift(self.base.identity(X.base), X.shift + 1, X.shift)

    def zeta_inverse(self, X: PiObject) -> PiMorphism:
        return self.lift(self.base.identity(X.base), X.shift, X.shift + 1)

    def Pi_morphism(self, f: PiMorphism) -> PiMorphism:
        """``Πf`` determined by ``ζ_Y ∘ Πf = (−1)^{|f|} f ∘ ζ_X``."""
        out = PiMorphism(f.base, f.source.shifted(), f.target.shifted(), f.base_parity)
        return -out if f.parity else out


# --------------------------------------------------------------------------
# Π-categories
# --------------------------------------------------------------------------
class PiCategory:
    """An ordinary category with ``Π`` and ``ξ: Π² ≅ 1``, given by callables.

    ``hom(X, Y)`` lists a basis of the (even) morphisms.
    """

    def __init__(self, objects: Sequence, hom: Callable, compose: Callable,
                 identity: Callable, Pi_object: Callable, Pi_morphism: Callable,
                 xi: Callable, equal: Callable = lambda f, g: f == g,
                 is_zero: Callable | None = None):
        self._objects = list(objects)
        self.hom = hom
        self.compose = compose
        self.identity = identity
        self.Pi_object = Pi_object
        self.Pi_morphism = Pi_morphism
        self.xi = xi
        self.equal = equal
        self.is_zero = is_zero

    def objects(self):
        return list(self._objects)

    def validate(self) -> dict[str, bool]:
        """Check ``ξ_{ΠX} = Π(ξ_X)`` and naturality of ``ξ`` on the basis."""
        report = {"xi Pi = Pi xi": True, "xi natural": True, "Pi involutive": True}
        for X in self._objects:
            PX = self.Pi_object(X)
            if self.Pi_object(PX) != X:
                report["Pi involutive"] = False
            if not self.equal(self.xi(PX), self.Pi_morphism(self.xi(X))):
                report["xi Pi = Pi xi"] = False
            for Y in self._objects:
                for f in self.hom(X, Y):
                    lhs = self.compose(self.xi(Y), self.Pi_morphism(self.Pi_morphism(f)))
                    rhs = self.compose(f, self.xi(X))
                    if not self.equal(lhs, rhs):
                        report["xi natural"] = False
        return report


def underlying_pi_category(A) -> PiCategory:
    """Forget the odd morphisms of a Π-supercategory handle.

    ``A`` must provide ``Pi_object``, ``Pi_morphism`` and ``zeta``; the
    coherence is ``ξ_X = ζ_X ∘ Π(ζ_X)``.
    """
    def hom(X, Y):
        return [f for f in A.hom_basis(X, Y) if A.parity(f) == 0]

    def xi(X):
        z = A.zeta(X)
        return A.compose(z, A.Pi_morphism(z))

    return PiCategory(A.objects(), hom, A.compose, A.identity, A.Pi_object,
                      A.Pi_morphism, xi, is_zero=A.is_zero)


# --------------------------------------------------------------------------
# The associated supercategory
# --------------------------------------------------------------------------
class HatMorphism:
    """A homogeneous morphism ``X → Y`` of the associated supercategory.

    Even: ``under: X → Y``.  Odd: ``under: X → ΠY``.
    """

    __slots__ = ("parity", "source", "target", "under")

    def __init__(self, under, parity: int, source, target):
        self.under, self.parity = under, parity % 2
        self.source, self.target = source, target

    def __add__(self, other):
        return HatMorphism(self.under + other.under, self.parity, self.source, self.target)

    def __neg__(self):
        return HatMorphism(-self.under, self.parity, self.source, self.target)

    def __mul__(self, c):
        return HatMorphism(self.under * c, self.parity, self.source, self.target)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HatMorphism):
            return NotImplemented
        return ((self.parity, self.source, self.target) == (other.parity, other.source, other.target)
                and self.under == other.under)

    __hash__ = None

    def __repr__(self) -> str:
        return f"HatMorphism({self.source} -> {self.target}, parity={self.parity})"


class AssociatedSupercategory(SupercategoryHandle):
    """The supercategory with ``Hom_1(X, Y) := Hom(X, ΠY)`` built from a Π-category.

    ``odd_sign`` multiplies the odd∘odd composite ``ξ_Z ∘ Πg ∘ f``.  The
    default ``-1`` is the value for which ``ζ̂ ∘ Π̂ζ̂`` recovers ``ξ`` and the
    comparison functor back to a Π-envelope is a functor; see
    :func:`round_trip_report`.
    """

    def __init__(self, P: PiCategory, odd_sign: int = -1, validate: bool = True):
        if validate:
            bad = [k for k, ok in P.validate().items() if not ok]
            if bad:
                raise ValidationError(f"Π-category data fails: {', '.join(bad)}")
        self.P = P
        self.odd_sign = odd_sign

    def objects(self):
        return self.P.objects()

    def hom_basis(self, X, Y):
        P = self.P
        even = [HatMorphism(f, 0, X, Y) for f in P.hom(X, Y)]
        odd = [HatMorphism(f, 1, X, Y) for f in P.hom(X, P.Pi_object(Y))]
        return even + odd

    def parity(self, f) -> int:
        return f.parity

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def identity(self, X):
        return HatMorphism(self.P.identity(X), 0, X, X)

    def is_zero(self, f) -> bool:
        return self.P.is_zero(f.under)

    def compose(self, g: HatMorphism, f: HatMorphism) -> HatMorphism:
        """``g ∘ f`` by the four parity cases."""
        P = self.P
        if f.target != g.source:
            raise ValueError("cannot compose")
        X, Z = f.source, g.target
        if not f.parity and not g.parity:
            return HatMorphism(P.compose(g.under, f.under), 0, X, Z)
        if g.parity and not f.parity:
            return HatMorphism(P.compose(g.under, f.under), 1, X, Z)
        if f.parity and not g.parity:
            return HatMorphism(P.compose(P.Pi_morphism(g.under), f.under), 1, X, Z)
        h = P.compose(P.xi(Z), P.compose(P.Pi_morphism(g.under), f.under))
        if self.odd_sign == -1:
            h = -h
        return HatMorphism(h, 0, X, Z)

    # Π-structure
    def Pi_object(self, X):
        return self.P.Pi_object(X)

    def Pi_morphism(self, f: HatMorphism) -> HatMorphism:
        P = self.P
        h = P.Pi_morphism(f.under)
        if f.parity:
            h = -h
        return HatMorphism(h, f.parity, P.Pi_object(f.source), P.Pi_object(f.target))

    def zeta(self, X) -> HatMorphism:
        """``ζ̂_X: ΠX → X`` is the identity of ``ΠX`` viewed as odd."""
        PX = self.P.Pi_object(X)
        return HatMorphism(self.P.identity(PX), 1, PX, X)


def associated_supercategory(P: PiCategory, odd_sign: int = -1) -> AssociatedSupercategory:
    return AssociatedSupercategory(P, odd_sign)


def comparison_functor(env: PiEnvelope) -> Callable[[HatMorphism], PiMorphism]:
    """``T``: even ``f̂ ↦ f`` and odd ``f̂ ↦ ζ_Y ∘ f``."""
    def T(f: HatMorphism) -> PiMorphism:
        if f.parity == 0:
            return f.under
        return env.compose(env.zeta(f.target), f.under)
    return T


def round_trip_report(env: PiEnvelope, odd_sign: int = -1) -> dict[str, bool]:
    """Exhaustive round-trip checks on a truncated envelope.

    * ``E∘D = I``: the underlying Π-category of the associated supercategory
      has the same homs, ``Π`` and ``ξ`` as the one we started from;
    * ``T`` preserves parity and identities, is a functor on all composable
      pairs of basis morphisms, and is bijective on every hom-space basis;
    * composition in the associated supercategory is associative.
    """
    P = underlying_pi_category(env)
    A_hat = AssociatedSupercategory(P, odd_sign)
    P2 = underlying_pi_category(A_hat)
    T = comparison_functor(env)
    objs = env.objects()
    report = {"E D = I": True, "T parity": True, "T identity": True,
              "T functorial": True, "T bijective": True, "associative": True}

    for X in objs:
        if P2.Pi_object(X) != P.Pi_object(X):
            report["E D = I"] = False
        if P2.xi(X).under != P.xi(X) or P2.xi(X).parity != 0:
            report["E D = I"] = False
        if T(A_hat.identity(X)) != env.identity(X):
            report["T identity"] = False
        for Y in objs:
            ev = P2.hom(X, Y)
            if [h.under for h in ev] != P.hom(X, Y):
                report["E D = I"] = False
            for h in ev:
                if P2.Pi_morphism(h).under != P.Pi_morphism(h.under):
                    report["E D = I"] = False

    basis = {(X, Y): A_hat.hom_basis(X, Y) for X in objs for Y in objs}
    for (X, Y), fs in basis.items():
        images = [T(f) for f in fs]
        if any(env.parity(t) != f.parity for t, f in zip(images, fs)):
            report["T parity"] = False
        target_basis = env.hom_basis(X, Y)
        # T sends basis elements to distinct basis elements up to sign
        hits = []
        for t in images:
            k = next((i for i, b in enumerate(target_basis) if t == b or t == -b), None)
            hits.append(k)
        if None in hits or len(set(hits)) != len(hits) or len(hits) != len(target_basis):
            report["T bijective"] = False

    for X in objs:
        for Y in objs:
            for Z in objs:
                for f in basis[(X, Y)]:
                    for g in basis[(Y, Z)]:
                        gf = A_hat.compose(g, f)
                        if T(gf) != env.compose(T(g), T(f)):
                            report["T functorial"] = False
    report["associative"] = associativity_report(A_hat)
    return report


def associativity_report(H: SupercategoryHandle) -> bool:
    """``h∘(g∘f) = (h∘g)∘f`` for every composable triple of basis morphisms."""
    objs = H.objects()
    for X in objs:
        for Y in objs:
            for Z in objs:
                for W in objs:
                    for f in H.hom_basis(X, Y):
                        for g in H.hom_basis(Y, Z):
                            for h in H.hom_basis(Z, W):
                                if H.compose(h, H.compose(g, f)) != H.compose(H.compose(h, g), f):
                                    return False
    return True
