"""Matchings, layered words and the signed rewriting engine.

This module is shared by the Temperley-Lieb and Brauer calculi.  A word is
traced into a list of *events* (cups create two strand labels, caps consume
two, crossings only permute positions).  Reduction then works on events:

* a cap that consumes a strand born in a cup is slid down to that cup,
  picking up ``-1`` per odd layer passed, and the pair is removed as a
  zigzag (scalar ``1`` or ``eps``) or a bubble (the loop value);
* the surviving caps and cups are sorted into the order of the canonical
  word, contributing the sign of that permutation.

Crossings are even and obey the symmetric-group relations together with the
slide and absorption rules, so they never contribute signs except through a
cap whose two ends arrive in swapped order (``cap ∘ s = eps · cap``).
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cache

GENERATORS = {"cap": (2, 0), "cup": (0, 2), "cross": (2, 2)}


# --------------------------------------------------------------------------
# Matchings
# --------------------------------------------------------------------------
def _parse_point(p, m: int) -> int:
    if isinstance(p, str):
        side, idx = p[0], int(p[1:])
    else:
        side, idx = p
    if side == "b":
        return idx
    if side == "t":
        return m + idx
    raise ValueError(f"bad boundary point {p!r}")


class Matching:
    """A perfect matching of ``m`` bottom and ``n`` top boundary points.

    Points are numbered ``0..m-1`` along the bottom and ``m..m+n-1`` along
    the top, both left to right.  ``partner[p]`` is the point joined to ``p``.
    """

    __slots__ = ("_hash", "partner", "source", "target")

    def __init__(self, source: int, target: int, partner: Sequence[int]):
        partner = tuple(partner)
        if len(partner) != source + target:
            raise ValueError("partner table has wrong length")
        for p, r in enumerate(partner):
            if r == p or not 0 <= r < len(partner) or partner[r] != p:
                raise ValueError("not a perfect matching")
        self.source = source
        self.target = target
        self.partner = partner
        self._hash = hash((source, target, partner))

    @classmethod
    def from_pairs(cls, source: int, target: int, pairs: Iterable) -> Matching:
        """Build from pairs of points written ``"b<i>"``/``"t<j>"`` or ``("b", i)``."""
        partner = [-1] * (source + target)
        for a, b in pairs:
            i, j = _parse_point(a, source), _parse_point(b, source)
            for x in (i, j):
                if not 0 <= x < source + target or partner[x] != -1:
                    raise ValueError(f"point used twice or out of range in {pairs!r}")
            partner[i], partner[j] = j, i
        if -1 in partner:
            raise ValueError("some boundary point is unmatched")
        return cls(source, target, partner)

    @classmethod
    def identity(cls, n: int) -> Matching:
        return cls(n, n, [n + i for i in range(n)] + list(range(n)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matching) and self._hash == other._hash
                and self.partner == other.partner and self.source == other.source)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Matching) -> bool:
        return (self.source, self.target, self.partner) < (other.source, other.target, other.partner)

    def point_name(self, p: int) -> str:
        return f"b{p}" if p < self.source else f"t{p - self.source}"

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.point_name(p), self.point_name(r))
                for p, r in enumerate(self.partner) if p < r]

    def caps(self) -> list[tuple[int, int]]:
        m = self.source
        return [(p, r) for p, r in enumerate(self.partner[:m]) if p < r < m]

    def cups(self) -> list[tuple[int, int]]:
        m = self.source
        return [(p - m, r - m) for p, r in enumerate(self.partner) if m <= p < r]

    def throughs(self) -> list[tuple[int, int]]:
        """``(bottom, top)`` pairs of through strands, ordered by bottom."""
        m = self.source
        return [(p, r - m) for p, r in enumerate(self.partner[:m]) if r >= m]

    @property
    def n_through(self) -> int:
        return len(self.throughs())

    def generator_count(self) -> int:
        return (self.source + self.target) // 2 - self.n_through

    def is_planar(self) -> bool:
        m, n = self.source, self.target
        # boundary cycle: bottom left to right, then top right to left
        pos = [p if p < m else m + (n - 1 - (p - m)) for p in range(m + n)]
        arcs = sorted(tuple(sorted((pos[p], pos[r]))) for p, r in enumerate(self.partner) if p < r)
        for i, (a, b) in enumerate(arcs):
            for c, d in arcs[i + 1:]:
                if a < c < b < d:
                    return False
        return True

    def reflect(self) -> Matching:
        """Swap top and bottom (vertical reflection)."""
        m, n = self.source, self.target
        swap = [n + p if p < m else p - m for p in range(m + n)]
        partner = [0] * (m + n)
        for p, r in enumerate(self.partner):
            partner[swap[p]] = swap[r]
        return Matching(n, m, partner)

    def __repr__(self) -> str:
        return f"Matching({self.source}, {self.target}, {self.pairs()})"


# --------------------------------------------------------------------------
# Layered words
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class Layer:
    left_pad: int
    generator: str
    right_pad: int

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.left_pad < 0 or self.right_pad < 0:
            raise ValueError("negative padding")

    @property
    def source(self) -> int:
        return self.left_pad + GENERATORS[self.generator][0] + self.right_pad

    @property
    def target(self) -> int:
        return self.left_pad + GENERATORS[self.generator][1] + self.right_pad

    def shifted(self, left: int = 0, right: int = 0) -> Layer:
        return Layer(self.left_pad + left, self.generator, self.right_pad + right)


@dataclass(frozen=True)
class LayerWord:
    """Layers read bottom to top."""

    layers: tuple
    source: int
    target: int

    def __init__(self, layers: Iterable, source: int, target: int | None = None):
        layers = tuple(l if isinstance(l, Layer) else Layer(*l) for l in layers)
        width = source
        for k, layer in enumerate(layers):
            if layer.source != width:
                raise ValueError(f"layer {k} expects {layer.source} strands, got {width}")
            width = layer.target
        if target is not None and target != width:
            raise ValueError(f"word ends with {width} strands, expected {target}")
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", width)

    def odd_layers(self) -> int:
        return sum(l.generator != "cross" for l in self.layers)

    def then(self, other: LayerWord) -> LayerWord:
        """Stack ``other`` on top of ``self``."""
        return LayerWord(self.layers + other.layers, self.source, other.target)

    def padded(self, left: int = 0, right: int = 0) -> LayerWord:
        return LayerWord([l.shifted(left, right) for l in self.layers],
                         self.source + left + right, self.target + left + right)

    def __len__(self) -> int:
        return len(self.layers)


def trace(word: LayerWord) -> tuple[list[tuple[str, int, int]], list[int]]:
    """Events of ``word`` and the strand labels reaching the top.

    Bottom strands carry labels ``0..m-1``; each cup mints two fresh labels.
    """
    pos = list(range(word.source))
    fresh = word.source
    events = []
    for layer in word.layers:
        i = layer.left_pad
        if layer.generator == "cap":
            events.append(("cap", pos[i], pos[i + 1]))
            del pos[i:i + 2]
        elif layer.generator == "cup":
            events.append(("cup", fresh, fresh + 1))
            pos[i:i] = [fresh, fresh + 1]
            fresh += 2
        else:
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return events, pos


def matching_of(word: LayerWord) -> tuple[Matching, int]:
    """The matching traced by ``word`` and its number of closed loops."""
    r = reduce_word(word, Rules(odd=False, eps=1, loop_zero=False, planar=False))
    return r[2], r[1]


# --------------------------------------------------------------------------
# Canonical words
# --------------------------------------------------------------------------
def _cap_sequence(d: Matching) -> tuple[list[Layer], int]:
    """Leftmost-innermost cap removal on the bottom of a planar matching."""
    alive = list(range(d.source))
    layers = []
    while True:
        for i in range(len(alive) - 1):
            if d.partner[alive[i]] == alive[i + 1]:
                layers.append(Layer(i, "cap", len(alive) - i - 2))
                del alive[i:i + 2]
                break
        else:
            return layers, len(alive)


def planar_word(d: Matching) -> LayerWord:
    """Canonical word of a crossingless matching: caps, then mirrored cups."""
    caps, t = _cap_sequence(d)
    cup_caps, t2 = _cap_sequence(d.reflect())
    if t != t2:
        raise ValueError("matching is not planar")
    cups = [Layer(l.left_pad, "cup", l.right_pad) for l in reversed(cup_caps)]
    word = LayerWord(caps + cups, d.source, d.target)
    return word


def _sort_layers(order: list[int]) -> list[int]:
    """Crossing positions sorting ``order`` increasingly (leftmost descent first)."""
    order = list(order)
    swaps = []
    while True:
        for i in range(len(order) - 1):
            if order[i] > order[i + 1]:
                order[i], order[i + 1] = order[i + 1], order[i]
                swaps.append(i)
                break
        else:
            return swaps


def brauer_word(d: Matching) -> LayerWord:
    """Canonical word of a Brauer diagram.

    Bottom crossings bring every cap pair to the left (caps ordered by their
    left endpoint, through strands ordered by their top endpoint), the caps
    close from the left, cups open at the left (last cup first), and top
    crossings move every strand to its endpoint.
    """
    m, n = d.source, d.target
    caps = sorted(d.caps())
    thr = sorted(d.throughs(), key=lambda bt: bt[1])
    arrangement = [p for c in caps for p in c] + [b for b, _ in thr]
    layers: list[Layer] = []
    width = m
    # replaying the sorting swaps backwards builds the arrangement from the identity
    for i in reversed(_sort_layers(arrangement)):
        layers.append(Layer(i, "cross", width - i - 2))
    for _ in caps:
        width -= 2
        layers.append(Layer(0, "cap", width))
    cups = sorted(d.cups())
    for c in reversed(cups):
        layers.append(Layer(0, "cup", width))
        width += 2
    top_order = [p for c in cups for p in c] + [t for _, t in thr]
    for i in _sort_layers(top_order):
        layers.append(Layer(i, "cross", width - i - 2))
    return LayerWord(layers, m, n)


# --------------------------------------------------------------------------
# Reduction
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class Rules:
    """How generators behave.

    ``odd``: cups and caps are odd (swap sign ``-1``); ``eps``: scalar of the
    left zigzag and of a cap absorbing a crossing; ``loop_zero``: closed loops
    kill the term (otherwise each loop is counted); ``planar``: use the
    crossingless canonical form.
    """

    odd: bool
    eps: int
    loop_zero: bool
    planar: bool

    def canonical_word(self, d: Matching) -> LayerWord:
        return _canonical_planar(d) if self.planar else _canonical_brauer(d)

    def canonical_events(self, d: Matching) -> dict:
        return _canonical_events(self.planar, d)


@cache
def _canonical_planar(d: Matching) -> LayerWord:
    return planar_word(d)


@cache
def _canonical_brauer(d: Matching) -> LayerWord:
    return brauer_word(d)


@cache
def _canonical_events(planar: bool, d: Matching) -> dict:
    word = _canonical_planar(d) if planar else _canonical_brauer(d)
    events, top = trace(word)
    return {k: i for i, k in enumerate(_event_keys(events, top))}


def _event_keys(events, top) -> list:
    where = {lab: j for j, lab in enumerate(top)}
    keys = []
    for kind, a, b in events:
        if kind == "cap":
            keys.append(("cap", min(a, b), max(a, b)))
        else:
            x, y = where[a], where[b]
            keys.append(("cup", min(x, y), max(x, y)))
    return keys


def _inversions(seq: list[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def reduce_events(events, top: list[int], source: int, rules: Rules):
    """Normalise traced events.

    Returns ``(sign, loops, matching)`` or ``None`` when a loop vanishes.
    """
    ev = list(events)
    alive = [True] * len(ev)
    creator = {}
    for k, (kind, a, b) in enumerate(ev):
        if kind == "cup":
            creator[a] = creator[b] = k
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while x in parent:
            x = parent[x]
        return x

    sign, loops = 1, 0
    while True:
        hit = None
        for c, (kind, a, b) in enumerate(ev):
            if not alive[c] or kind != "cap":
                continue
            x, y = find(a), find(b)
            cx, cy = creator.get(x), creator.get(y)
            if cx is None and cy is None:
                continue
            u = max(k for k in (cx, cy) if k is not None)
            hit = c, u, x, y
            break
        if hit is None:
            break
        c, u, x, y = hit
        if rules.odd and sum(alive[u + 1:c]) % 2:
            sign = -sign
        alive[u] = alive[c] = False
        _, a, b = ev[u]
        if {x, y} == {a, b}:
            if rules.loop_zero:
                return None
            loops += 1
            continue
        if creator.get(y) == u:
            used, other = y, x
        else:
            used, other = x, y
            sign *= rules.eps
        parent[b if used == a else a] = other

    rest = [(k, ev[k]) for k in range(len(ev)) if alive[k]]
    top = [find(x) for x in top]
    events_left = []
    for _, (kind, a, b) in rest:
        if kind == "cap":
            a, b = find(a), find(b)
            if a > b:
                sign *= rules.eps
                a, b = b, a
        events_left.append((kind, a, b))

    m, n = source, len(top)
    partner = [0] * (m + n)
    where = {lab: j for j, lab in enumerate(top)}
    for kind, a, b in events_left:
        if kind == "cap":
            partner[a], partner[b] = b, a
        else:
            i, j = m + where[a], m + where[b]
            partner[i], partner[j] = j, i
    for j, lab in enumerate(top):
        if lab < m:
            partner[lab], partner[m + j] = m + j, lab
    d = Matching(m, n, partner)

    if rules.odd and len(events_left) > 1:
        order = rules.canonical_events(d)
        ranks = [order[k] for k in _event_keys(events_left, top)]
        if _inversions(ranks) % 2:
            sign = -sign
    return sign, loops, d


def reduce_word(word: LayerWord, rules: Rules):
    events, top = trace(word)
    return reduce_events(events, top, word.source, rules)


# --------------------------------------------------------------------------
# Halves
# --------------------------------------------------------------------------
def split(d: Matching) -> tuple[Matching, Matching]:
    """Factor ``d = U ∘ C`` with ``C`` caps-only and ``U`` cups-only.

    The middle object has one point per through strand, ordered by top
    endpoint, so the canonical words concatenate to the canonical word of
    ``d`` (for both canonical forms).
    """
    m, n = d.source, d.target
    thr = sorted(d.throughs(), key=lambda bt: bt[1])
    t = len(thr)
    cp = list(d.partner[:m]) + [0] * t
    for p, r in enumerate(d.partner[:m]):
        if r >= m:
            cp[p] = -1
    for k, (b, _) in enumerate(thr):
        cp[b], cp[m + k] = m + k, b
    up = [0] * (t + n)
    for i, j in d.cups():
        up[t + i], up[t + j] = t + j, t + i
    for k, (_, top) in enumerate(thr):
        up[k], up[t + top] = t + top, k
    return Matching(t, n, up), Matching(m, t, cp)


def join(U: Matching, C: Matching) -> Matching:
    """Inverse of :func:`split`."""
    m, t, n = C.source, C.target, U.target
    partner = [0] * (m + n)
    for a, b in C.caps():
        partner[a], partner[b] = b, a
    for i, j in U.cups():
        partner[m + i], partner[m + j] = m + j, m + i
    for b, k in C.throughs():
        top = U.partner[k] - t
        partner[b], partner[m + top] = m + top, b
    return Matching(m, n, partner)


def tensor_matching(d: Matching, e: Matching) -> Matching:
    """Side-by-side juxtaposition (no signs)."""
    m1, n1, m2, n2 = d.source, d.target, e.source, e.target
    m, n = m1 + m2, n1 + n2

    def relabel_d(p):
        return p if p < m1 else m + (p - m1)

    def relabel_e(p):
        return m1 + p if p < m2 else m + n1 + (p - m2)

    partner = [0] * (m + n)
    for p, r in enumerate(d.partner):
        partner[relabel_d(p)] = relabel_d(r)
    for p, r in enumerate(e.partner):
        partner[relabel_e(p)] = relabel_e(r)
    return Matching(m, n, partner)
