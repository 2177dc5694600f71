"""Linear combinations of diagrams and their bilinear composition.

Composition of two morphisms is the hot path of the whole library (squaring
the eighth projector multiplies about two million pairs of diagrams).  Each
diagram is split as ``cup half ∘ cap half`` so that only three small memo
tables are needed, and coefficients are accumulated as integer polynomials
over a common denominator before a single reduction per output diagram.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from flint import fmpq_poly, fmpz_poly

from .diagrams import (
    LayerWord,
    Matching,
    Rules,
    join,
    reduce_word,
    split,
    tensor_matching,
)
from .scalars import LaurentPoly, RatFunc, as_scalar, check_eps


@dataclass(frozen=True)
class Flavor:
    """Rewriting rules together with the value of a closed loop."""

    rules: Rules
    name: str

    @property
    def eps(self) -> int:
        return self.rules.eps

    @property
    def odd(self) -> bool:
        return self.rules.odd

    def loop_poly(self) -> fmpz_poly | None:
        """``q * loop value`` as an integer polynomial (``None`` if loops vanish)."""
        if self.rules.loop_zero:
            return None
        return fmpz_poly([-self.rules.eps, 0, -1])

    def parity(self, source: int, target: int) -> int:
        if not self.odd or (source + target) % 2:
            return 0
        return (abs(source - target) // 2) % 2


def tl_flavor(eps: int = -1) -> Flavor:
    eps = check_eps(eps)
    return _FLAVORS[("tl", eps)]


def brauer_flavor(eps: int = -1) -> Flavor:
    eps = check_eps(eps)
    return _FLAVORS[("brauer", eps)]


_FLAVORS = {
    ("tl", -1): Flavor(Rules(odd=True, eps=-1, loop_zero=False, planar=True), "STL"),
    ("tl", 1): Flavor(Rules(odd=False, eps=1, loop_zero=False, planar=True), "TL"),
    ("brauer", -1): Flavor(Rules(odd=True, eps=-1, loop_zero=True, planar=False), "SB"),
    ("brauer", 1): Flavor(Rules(odd=False, eps=1, loop_zero=False, planar=False), "B"),
}


class _Engine:
    """Memo tables for one flavour; behaves as a pure cache."""

    def __init__(self, flavor: Flavor):
        self.flavor = flavor
        self.rules = flavor.rules
        self._split: dict = {}
        self._middle: dict = {}
        self._cups: dict = {}
        self._caps: dict = {}
        self._join: dict = {}
        self._tensor: dict = {}
        self._pair: dict = {}
        self._ids: dict[Matching, int] = {}
        self._by_id: list[Matching] = []

    def intern(self, d: Matching) -> int:
        i = self._ids.get(d)
        if i is None:
            i = self._ids[d] = len(self._by_id)
            self._by_id.append(d)
        return i

    def lookup(self, i: int) -> Matching:
        return self._by_id[i]

    def word(self, d: Matching) -> LayerWord:
        return self.rules.canonical_word(d)

    def halves(self, d: Matching):
        h = self._split.get(d)
        if h is None:
            h = self._split[d] = split(d)
        return h

    def _reduce(self, lower: Matching, upper: Matching):
        return reduce_word(self.word(lower).then(self.word(upper)), self.rules)

    def middle(self, C1: Matching, U2: Matching):
        key = (C1, U2)
        if key not in self._middle:
            r = self._reduce(U2, C1)
            if r is None:
                self._middle[key] = None
            else:
                s, loops, d = r
                Um, Cm = self.halves(d)
                self._middle[key] = (s, loops, Um, Cm)
        return self._middle[key]

    def cup_join(self, U1: Matching, Um: Matching):
        key = (U1, Um)
        r = self._cups.get(key)
        if r is None:
            s, loops, d = self._reduce(Um, U1)
            assert loops == 0
            r = self._cups[key] = (s, self.intern(d))
        return r

    def cap_join(self, Cm: Matching, C2: Matching):
        key = (Cm, C2)
        r = self._caps.get(key)
        if r is None:
            s, loops, d = self._reduce(C2, Cm)
            assert loops == 0
            r = self._caps[key] = (s, self.intern(d))
        return r

    def joined(self, U: Matching, C: Matching) -> Matching:
        key = (U, C)
        d = self._join.get(key)
        if d is None:
            d = self._join[key] = join(U, C)
        return d

    def compose_pair(self, top: Matching, bottom: Matching):
        """``[top] ∘ [bottom]`` as ``(sign, loops, matching)`` or ``None``."""
        key = (top, bottom)
        if key not in self._pair:
            self._pair[key] = self._reduce(bottom, top)
        return self._pair[key]

    def tensor_pair(self, left: Matching, right: Matching):
        """``[left] ⊗ [right] = ([left] ⊗ 1) ∘ (1 ⊗ [right])``."""
        key = (left, right)
        if key not in self._tensor:
            w = self.word(right).padded(left=left.source).then(
                self.word(left).padded(right=right.target))
            r = reduce_word(w, self.rules)
            assert r is not None and r[1] == 0 and r[2] == tensor_matching(left, right)
            self._tensor[key] = r[0]
        return self._tensor[key]


_ENGINES: dict[Flavor, _Engine] = {}


def engine(flavor: Flavor) -> _Engine:
    e = _ENGINES.get(flavor)
    if e is None:
        e = _ENGINES[flavor] = _Engine(flavor)
    return e


def _common_denominator(terms: Mapping[Matching, RatFunc]):
    """Write every coefficient as ``q^low * N / den`` with integer ``N``."""
    L = fmpq_poly([1])
    for c in terms.values():
        dp = c.den._poly
        if dp.degree() > 0:
            L = L * dp // L.gcd(dp)
    nums = []
    for d, c in terms.items():
        N = c.num._poly * (L // c.den._poly) if c.den._poly.degree() > 0 else c.num._poly * L
        nums.append((d, N, c.num._low))
    K = 1
    for _, N, _ in nums:
        k = int(N.denom())
        K = K * k // _gcd(K, k)
    low = min((lo for _, _, lo in nums), default=0)
    out = []
    for d, N, lo in nums:
        P = fmpz_poly((N * K).numer())
        if lo > low:
            P = P.left_shift(lo - low)
        out.append((d, P))
    return out, low, LaurentPoly._raw(0, L * K)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class DiagramMorphism:
    """A homogeneous linear combination of diagrams ``source -> target``."""

    __slots__ = ("flavor", "source", "target", "terms")

    def __init__(self, source: int, target: int, terms: Mapping | Iterable = (),
                 flavor: Flavor | None = None):
        self.source = int(source)
        self.target = int(target)
        self.flavor = flavor or self._default_flavor()
        clean: dict[Matching, RatFunc] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for d, c in items:
            if (d.source, d.target) != (self.source, self.target):
                raise ValueError("diagram does not match the morphism's signature")
            self._validate(d)
            c = as_scalar(c)
            if d in clean:
                c = clean[d] + c
            clean[d] = c
        self.terms = {d: c for d, c in clean.items() if c}

    # subclasses override
    def _default_flavor(self) -> Flavor:
        raise NotImplementedError

    def _validate(self, d: Matching) -> None:
        pass

    def _new(self, source, target, terms) -> DiagramMorphism:
        obj = object.__new__(type(self))
        obj.source, obj.target, obj.flavor = source, target, self.flavor
        obj.terms = {d: c for d, c in terms.items() if c}
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def basis_element(cls, d: Matching, flavor: Flavor | None = None):
        return cls(d.source, d.target, {d: 1}, flavor)

    @classmethod
    def identity(cls, n: int, flavor: Flavor | None = None):
        return cls.basis_element(Matching.identity(n), flavor)

    @classmethod
    def zero(cls, source: int, target: int, flavor: Flavor | None = None):
        return cls(source, target, {}, flavor)

    # -- inspection -------------------------------------------------------
    @property
    def parity(self) -> int:
        return self.flavor.parity(self.source, self.target)

    @property
    def eps(self) -> int:
        return self.flavor.eps

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: Matching) -> RatFunc:
        return self.terms.get(d, RatFunc(0))

    def sorted_terms(self) -> list[tuple[Matching, RatFunc]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramMorphism):
            return NotImplemented
        return (self.flavor == other.flavor and self.source == other.source
                and self.target == other.target and self.terms == other.terms)

    __hash__ = None

    def _check_same(self, other: DiagramMorphism) -> None:
        if not isinstance(other, DiagramMorphism) or other.flavor != self.flavor:
            raise TypeError("morphisms live in different categories")
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError(f"cannot add {self.source}->{self.target} and "
                             f"{other.source}->{other.target}")

    # -- linear structure -------------------------------------------------
    def __add__(self, other: DiagramMorphism) -> DiagramMorphism:
        self._check_same(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return self._new(self.source, self.target, terms)

    def __neg__(self) -> DiagramMorphism:
        return self._new(self.source, self.target, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: DiagramMorphism) -> DiagramMorphism:
        return self + (-other)

    def scale(self, c) -> DiagramMorphism:
        c = as_scalar(c)
        if not c:
            return self._new(self.source, self.target, {})
        return self._new(self.source, self.target, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, c) -> DiagramMorphism:
        if isinstance(c, DiagramMorphism):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    # -- composition and tensor ------------------------------------------
    def compose(self, other: DiagramMorphism) -> DiagramMorphism:
        """``self ∘ other`` (``other`` is applied first)."""
        if not isinstance(other, DiagramMorphism) or other.flavor != self.flavor:
            raise TypeError("morphisms live in different categories")
        if other.target != self.source:
            raise ValueError(f"arity mismatch: {self.source}->{self.target} after "
                             f"{other.source}->{other.target}")
        if not self.terms or not other.terms:
            return self._new(other.source, self.target, {})
        if len(self.terms) * len(other.terms) <= 16:
            return self._compose_small(other)
        return self._compose_fast(other)

    __matmul__ = compose

    def _compose_small(self, other):
        eng = engine(self.flavor)
        out: dict[Matching, RatFunc] = {}
        loop = None if self.flavor.rules.loop_zero else RatFunc(
            LaurentPoly.from_fmpz(self.flavor.loop_poly(), -1))
        for d1, a in self.terms.items():
            for d2, b in other.terms.items():
                r = eng.compose_pair(d1, d2)
                if r is None:
                    continue
                s, loops, d = r
                c = a * b if s > 0 else -(a * b)
                if loops:
                    c = c * loop ** loops
                out[d] = out[d] + c if d in out else c
        return self._new(other.source, self.target, out)

    def _compose_fast(self, other):
        eng = engine(self.flavor)
        ftop, flow, fden = _common_denominator(self.terms)
        gbot, glow, gden = _common_denominator(other.terms)

        by_cap: dict[Matching, list] = {}
        for d, P in ftop:
            U1, C1 = eng.halves(d)
            by_cap.setdefault(C1, []).append((U1, P))
        by_cup: dict[Matching, list] = {}
        for d, P in gbot:
            U2, C2 = eng.halves(d)
            by_cup.setdefault(U2, []).append((C2, P))

        # acc[loops][U3 id][C3 id] -> integer polynomial
        acc: dict[int, dict[int, dict[int, fmpz_poly]]] = {}
        for C1, tops in by_cap.items():
            # bottoms whose middle agrees are summed before the outer product
            groups: dict[tuple, dict[int, fmpz_poly]] = {}
            for U2, bottoms in by_cup.items():
                hit = eng.middle(C1, U2)
                if hit is None:
                    continue
                s, loops, Um, Cm = hit
                lower = groups.setdefault((loops, Um, Cm), {})
                for C2, b in bottoms:
                    sb, C3 = eng.cap_join(Cm, C2)
                    if sb * s < 0:
                        b = -b
                    prev = lower.get(C3)
                    lower[C3] = b if prev is None else prev + b
            for (loops, Um, Cm), lower in groups.items():
                lower_items = [(C3, b) for C3, b in lower.items() if b != 0]
                if not lower_items:
                    continue
                table = acc.setdefault(loops, {})
                for U1, a in tops:
                    su, U3 = eng.cup_join(U1, Um)
                    if su < 0:
                        a = -a
                    row = table.get(U3)
                    if row is None:
                        row = table[U3] = {}
                    get = row.get
                    for C3, b in lower_items:
                        prev = get(C3)
                        row[C3] = a * b if prev is None else prev + a * b

        by_d: dict[Matching, dict[int, fmpz_poly]] = {}
        for loops, table in acc.items():
            for U3, row in table.items():
                for C3, P in row.items():
                    if P == 0:
                        continue
                    d = eng.joined(eng.lookup(U3), eng.lookup(C3))
                    slot = by_d.setdefault(d, {})
                    slot[loops] = slot[loops] + P if loops in slot else P
        den = fden * gden
        qdelta = self.flavor.loop_poly()
        out: dict[Matching, RatFunc] = {}
        for d, per_loop in by_d.items():
            top = max(per_loop)
            total = fmpz_poly()
            for loops, P in per_loop.items():
                if loops:
                    P = P * qdelta ** loops
                total += P.left_shift(top - loops) if top > loops else P
            if total == 0:
                continue
            c = RatFunc(LaurentPoly.from_fmpz(total, flow + glow - top), den)
            if c:
                out[d] = c
        return self._new(other.source, self.target, out)

    def tensor(self, other: DiagramMorphism) -> DiagramMorphism:
        """``self ⊗ other``, defined as ``(self ⊗ 1) ∘ (1 ⊗ other)``."""
        if not isinstance(other, DiagramMorphism) or other.flavor != self.flavor:
            raise TypeError("morphisms live in different categories")
        eng = engine(self.flavor)
        out: dict[Matching, RatFunc] = {}
        for d1, a in self.terms.items():
            for d2, b in other.terms.items():
                s = eng.tensor_pair(d1, d2)
                d = tensor_matching(d1, d2)
                c = a * b if s > 0 else -(a * b)
                out[d] = out[d] + c if d in out else c
        return self._new(self.source + other.source, self.target + other.target, out)

    def __xor__(self, other):
        return self.tensor(other)

    # -- specialisation ---------------------------------------------------
    def evaluate(self, q) -> dict[Matching, object]:
        """Coefficients specialised at a rational ``q``."""
        return {d: c.evaluate(q) for d, c in self.terms.items()}

    # -- text and JSON ----------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.sorted_terms():
            label = "[" + (", ".join(f"{a}-{b}" for a, b in d.pairs()) or "empty") + "]"
            parts.append(f"({c}) · {label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return (f"{type(self).__name__}({self.source}->{self.target}, "
                f"parity={self.parity}, terms={len(self.terms)})")

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "parity": self.parity,
            "terms": [{"pairs": [list(p) for p in d.pairs()], "coeff": c.to_json()}
                      for d, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping, flavor: Flavor | None = None):
        m, n = int(data["source"]), int(data["target"])
        terms = {}
        for t in data["terms"]:
            d = Matching.from_pairs(m, n, t["pairs"])
            terms[d] = RatFunc.from_json(t["coeff"])
        obj = cls(m, n, terms, flavor)
        if "parity" in data and int(data["parity"]) != obj.parity:
            raise ValueError("stored parity disagrees with the signature")
        return obj
