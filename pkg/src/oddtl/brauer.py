"""The odd Brauer supercategory.

Brauer diagrams with an even crossing and odd cup and cap.  The right
zigzag is the identity, the left zigzag is minus the identity, a crossing
is absorbed by a cup from above (``s ∘ cup = cup``) and flips the sign of a
cap (``cap ∘ s = −cap``); consequently every closed loop is zero.

Normal forms are only claimed to be consistent with these relations: no
basis theorem is asserted for the odd Brauer hom-spaces.

>>> (cap() @ cup()).is_zero()
True
"""
from __future__ import annotations

from fractions import Fraction

from .diagrams import LayerWord, Matching, reduce_word
from .morphisms import DiagramMorphism, Flavor, brauer_flavor
from .scalars import LaurentPoly, RatFunc


class SBMorphism(DiagramMorphism):
    """A homogeneous linear combination of Brauer diagrams."""

    __slots__ = ()

    def _default_flavor(self) -> Flavor:
        return brauer_flavor(-1)


BrauerDiagram = Matching


def identity(n: int, eps: int = -1) -> SBMorphism:
    return SBMorphism.identity(n, brauer_flavor(eps))


def cap(eps: int = -1) -> SBMorphism:
    return SBMorphism.basis_element(Matching.from_pairs(2, 0, [("b0", "b1")]), brauer_flavor(eps))


def cup(eps: int = -1) -> SBMorphism:
    return SBMorphism.basis_element(Matching.from_pairs(0, 2, [("t0", "t1")]), brauer_flavor(eps))


def cross(eps: int = -1) -> SBMorphism:
    return SBMorphism.basis_element(
        Matching.from_pairs(2, 2, [("b0", "t1"), ("b1", "t0")]), brauer_flavor(eps))


def basis_morphism(d: Matching, eps: int = -1) -> SBMorphism:
    return SBMorphism.basis_element(d, brauer_flavor(eps))


def sb_compose(f: SBMorphism, g: SBMorphism) -> SBMorphism:
    """``f ∘ g``; closed loops annihilate a term."""
    return f.compose(g)


def sb_tensor(f: SBMorphism, g: SBMorphism) -> SBMorphism:
    return f.tensor(g)


def normalize(word: LayerWord, eps: int = -1) -> SBMorphism:
    flavor = brauer_flavor(eps)
    r = reduce_word(word, flavor.rules)
    if r is None:
        return SBMorphism.zero(word.source, word.target, flavor)
    sign, loops, d = r
    c = RatFunc(sign)
    if loops:
        c = c * RatFunc(LaurentPoly.from_fmpz(flavor.loop_poly(), -1)) ** loops
    return SBMorphism(word.source, word.target, {d: c}, flavor)


def enumerate_diagrams(m: int, n: int) -> list[Matching]:
    """All Brauer diagrams ``m -> n`` (``(m+n-1)!!`` of them)."""
    if (m + n) % 2:
        return []

    def matchings(points):
        if not points:
            yield ()
            return
        a = points[0]
        for k in range(1, len(points)):
            rest = points[1:k] + points[k + 1:]
            for tail in matchings(rest):
                yield ((a, points[k]),) + tail

    out = []
    for arcs in matchings(tuple(range(m + n))):
        partner = [0] * (m + n)
        for a, b in arcs:
            partner[a], partner[b] = b, a
        out.append(Matching(m, n, partner))
    return sorted(out)


def relation_suite(eps: int = -1) -> dict[str, bool]:
    """Evaluate both sides of every defining relation and its consequences.

    With ``eps = -1`` these are the odd Brauer relations; with ``eps = +1``
    the classical Brauer relations (loop value ``-[2]``) are checked instead.
    """
    I, s = identity(1, eps), cross(eps)
    cp, cu = cap(eps), cup(eps)
    sign = eps  # left zigzag and the twisted cap
    report = {
        "double crossing": s @ s == identity(2, eps),
        "braid": (s ^ I) @ (I ^ s) @ (s ^ I) == (I ^ s) @ (s ^ I) @ (I ^ s),
        "right zigzag": (cp ^ I) @ (I ^ cu) == I,
        "left zigzag": (I ^ cp) @ (cu ^ I) == sign * I,
        "cup slide": (I ^ s) @ (cu ^ I) == (s ^ I) @ (I ^ cu),
        "cap slide": (cp ^ I) @ (I ^ s) == (I ^ cp) @ (s ^ I),
        "crossing absorbed by cup": s @ cu == cu,
        "twisted cap": cp @ s == sign * cp,
    }
    bubble = cp @ cu
    if eps == -1:
        twisted = cp @ s @ cu
        # the loop equals half of itself minus half of its twisted form
        half = RatFunc(Fraction(1, 2))
        report["loop = twisted loop sign"] = twisted == -bubble
        report["loop vanishes"] = bubble.is_zero() and (half * bubble - half * twisted) == bubble
        report["2 invertible"] = RatFunc(2) * half == RatFunc(1)
    else:
        from .scalars import delta
        report["loop value"] = bubble == RatFunc(delta(1)) * identity(0, eps)
    return report
