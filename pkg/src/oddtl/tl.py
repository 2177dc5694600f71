"""The odd Temperley-Lieb supercategory.

Objects are natural numbers; ``Hom(m, n)`` has the crossingless matchings as
a basis.  The cup and cap are odd (for ``eps = -1``), the right zigzag is the
identity, the left zigzag is ``eps`` times the identity and a closed loop is
``delta = -[2]``.  Setting ``eps = +1`` gives the classical category with even
generators.

>>> bubble = cap() @ cup()
>>> print(bubble)
(-q + q^-1) · [empty]
>>> len(enumerate_basis(3, 3))
5
"""
from __future__ import annotations

from collections.abc import Sequence
from functools import cache

from .diagrams import Layer, LayerWord, Matching, planar_word, reduce_word
from .morphisms import DiagramMorphism, Flavor, tl_flavor
from .scalars import LaurentPoly, RatFunc

MatchingDiagram = Matching


class TLMorphism(DiagramMorphism):
    """A homogeneous element of ``Hom(source, target)`` in the (odd) TL category."""

    __slots__ = ()

    def _default_flavor(self) -> Flavor:
        return tl_flavor(-1)

    def _validate(self, d: Matching) -> None:
        if not d.is_planar():
            raise ValueError(f"{d!r} has crossings")


def _flavor(eps: int) -> Flavor:
    return tl_flavor(eps)


def identity(n: int, eps: int = -1) -> TLMorphism:
    return TLMorphism.identity(n, _flavor(eps))


def cap(eps: int = -1) -> TLMorphism:
    return TLMorphism.basis_element(Matching.from_pairs(2, 0, [("b0", "b1")]), _flavor(eps))


def cup(eps: int = -1) -> TLMorphism:
    return TLMorphism.basis_element(Matching.from_pairs(0, 2, [("t0", "t1")]), _flavor(eps))


def basis_morphism(d: Matching, eps: int = -1) -> TLMorphism:
    return TLMorphism.basis_element(d, _flavor(eps))


def compose(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    """``f ∘ g``."""
    return f.compose(g)


def tensor(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    return f.tensor(g)


def canonical_word(d: Matching) -> LayerWord:
    """Leftmost-innermost cap slicing followed by the mirrored cup slicing.

    >>> d = Matching.from_pairs(4, 0, [("b0", "b3"), ("b1", "b2")])
    >>> [(l.left_pad, l.generator, l.right_pad) for l in canonical_word(d).layers]
    [(1, 'cap', 1), (0, 'cap', 0)]
    """
    return planar_word(d)


def normalize(word: LayerWord, eps: int = -1) -> TLMorphism:
    """Evaluate a word of cups and caps in the canonical basis."""
    if any(l.generator == "cross" for l in word.layers):
        raise ValueError("crossings are not morphisms of the Temperley-Lieb category")
    flavor = _flavor(eps)
    sign, loops, d = reduce_word(word, flavor.rules)
    c = RatFunc(sign) * RatFunc(LaurentPoly.from_fmpz(flavor.loop_poly(), -1)) ** loops
    return TLMorphism(word.source, word.target, {d: c}, flavor)


def word(layers: Sequence, source: int) -> LayerWord:
    return LayerWord([l if isinstance(l, Layer) else Layer(*l) for l in layers], source)


def relation_suite(eps: int = -1) -> dict[str, bool]:
    """Both zigzags, the bubble and the sign for swapping two cup layers."""
    from .scalars import delta

    I, cp, cu = identity(1, eps), cap(eps), cup(eps)
    return {
        "right zigzag": (cp ^ I) @ (I ^ cu) == I,
        "left zigzag": (I ^ cp) @ (cu ^ I) == RatFunc(eps) * I,
        "bubble": cp @ cu == RatFunc(delta(eps)) * identity(0, eps),
        "cup layers swap": (cu ^ cu) == RatFunc(eps) * ((identity(2, eps) ^ cu) @ cu),
    }


# --------------------------------------------------------------------------
# Basis enumeration
# --------------------------------------------------------------------------
def _noncrossing(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inner in _noncrossing(points[1:k]):
            for outer in _noncrossing(points[k + 1:]):
                yield ((first, points[k]),) + inner + outer


@cache
def _basis(m: int, n: int) -> tuple[Matching, ...]:
    if (m + n) % 2:
        return ()
    # walk the boundary: bottom left to right, then top right to left
    cycle = tuple(range(m)) + tuple(m + j for j in reversed(range(n)))
    out = []
    for arcs in _noncrossing(cycle):
        partner = [0] * (m + n)
        for a, b in arcs:
            partner[a], partner[b] = b, a
        out.append(Matching(m, n, partner))
    return tuple(sorted(out))


def enumerate_basis(m: int, n: int) -> list[Matching]:
    """All crossingless matchings ``m -> n`` in a fixed order."""
    if m < 0 or n < 0:
        raise ValueError("arities must be nonnegative")
    return list(_basis(m, n))


def catalan(k: int) -> int:
    c = 1
    for i in range(k):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


# --------------------------------------------------------------------------
# Dyck sequences
# --------------------------------------------------------------------------
def dyck_sequence(d: Matching) -> tuple[int, ...]:
    """``+1`` under each left endpoint of a cap, ``-1`` under each right one.

    >>> dyck_sequence(Matching.from_pairs(4, 0, [("b0", "b3"), ("b1", "b2")]))
    (1, 1, -1, -1)
    """
    if d.target != 0:
        raise ValueError("Dyck sequences are defined for diagrams with no top points")
    return tuple(1 if d.partner[i] > i else -1 for i in range(d.source))


def from_dyck(seq: Sequence[int]) -> Matching:
    """Inverse of :func:`dyck_sequence`."""
    stack, partner = [], [0] * len(seq)
    for i, s in enumerate(seq):
        if s == 1:
            stack.append(i)
        elif s == -1:
            if not stack:
                raise ValueError("not a Dyck sequence")
            j = stack.pop()
            partner[i], partner[j] = j, i
        else:
            raise ValueError("entries must be +1 or -1")
    if stack:
        raise ValueError("not a Dyck sequence")
    return Matching(len(seq), 0, partner)


def dyck_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """Prefix-sum dominance order.

    >>> dyck_leq((1, -1, 1, -1), (1, 1, -1, -1))
    True
    """
    if len(s) != len(t):
        raise ValueError("sequences of different lengths")
    a = b = 0
    for x, y in zip(s, t):
        a += x
        b += y
        if a > b:
            return False
    return True
