"""Grothendieck-ring arithmetic in ``Z^π[x, x^-1]`` with ``π² = 1``.

>>> print(qint_xpi(2) * qint_xpi(2))
x^2 + 2*pi + x^-2
>>> decompose_in_basis(qint_xpi(2) ** 3)
[(3, 0, 1), (1, 1, 2)]
"""
from __future__ import annotations

import re
from collections.abc import Mapping


class NotACharacter(ValueError):
    """Raised when a Laurent polynomial is not a nonnegative sum of basis elements."""


class ZPiLaurent:
    """Finite sums ``Σ (a_k + b_k π) x^k`` with integer ``a_k, b_k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, tuple[int, int]] | None = None):
        clean = {}
        for k, (a, b) in (coeffs or {}).items():
            if a or b:
                clean[int(k)] = (int(a), int(b))
        self.coeffs = clean

    @classmethod
    def monomial(cls, k: int, pi: int = 0, c: int = 1) -> ZPiLaurent:
        return cls({k: (0, c) if pi % 2 else (c, 0)})

    @classmethod
    def one(cls) -> ZPiLaurent:
        return cls.monomial(0)

    @classmethod
    def pi(cls) -> ZPiLaurent:
        return cls.monomial(0, 1)

    @classmethod
    def coerce(cls, x) -> ZPiLaurent:
        if isinstance(x, ZPiLaurent):
            return x
        if isinstance(x, int):
            return cls({0: (x, 0)})
        raise TypeError(f"cannot interpret {x!r} in Z^pi[x, x^-1]")

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == ZPiLaurent.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = ZPiLaurent.coerce(other)
        out = dict(self.coeffs)
        for k, (a, b) in other.coeffs.items():
            c, d = out.get(k, (0, 0))
            out[k] = (a + c, b + d)
        return ZPiLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> ZPiLaurent:
        return ZPiLaurent({k: (-a, -b) for k, (a, b) in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-ZPiLaurent.coerce(other))

    def __rsub__(self, other):
        return ZPiLaurent.coerce(other) - self

    def __mul__(self, other):
        other = ZPiLaurent.coerce(other)
        out: dict[int, tuple[int, int]] = {}
        for k, (a, b) in self.coeffs.items():
            for l, (c, d) in other.coeffs.items():
                e, f = out.get(k + l, (0, 0))
                out[k + l] = (e + a * c + b * d, f + a * d + b * c)
        return ZPiLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ZPiLaurent:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ZPiLaurent.one()
        for _ in range(n):
            out = out * self
        return out

    def times_pi(self) -> ZPiLaurent:
        return ZPiLaurent({k: (b, a) for k, (a, b) in self.coeffs.items()})

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero has no degree")
        return max(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            a, b = self.coeffs[k]
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            for c, tag in ((a, ""), (b, "pi")):
                if not c:
                    continue
                body = "*".join(p for p in (tag, mono) if p)
                if not body:
                    body = str(abs(c))
                elif abs(c) != 1:
                    body = f"{abs(c)}*{body}"
                terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"ZPiLaurent({str(self)!r})"

    def to_json(self) -> dict:
        return {str(k): {"1": a, "pi": b} for k, (a, b) in sorted(self.coeffs.items())}

    @classmethod
    def parse(cls, text: str) -> ZPiLaurent:
        """Inverse of ``str``; ``π`` is accepted for ``pi``.

        >>> str(ZPiLaurent.parse("x^2 + 2*pi + x^-2"))
        'x^2 + 2*pi + x^-2'
        """
        src = text.replace(" ", "").replace("π", "pi")
        if not src:
            raise ValueError("empty input")
        if src[0] not in "+-":
            src = "+" + src
        out = ZPiLaurent()
        pos = 0
        while pos < len(src):
            m = _TERM.match(src, pos)
            if m is None or m.end() == pos or not any(m.group("coef", "pi", "x")):
                raise ValueError(f"cannot parse {text!r}")
            c = int(m.group("coef") or 1) * (-1 if m.group("sign") == "-" else 1)
            k = (int(m.group("exp")) if m.group("exp") else 1) if m.group("x") else 0
            out = out + ZPiLaurent.monomial(k, 1 if m.group("pi") else 0, c)
            pos = m.end()
        return out


_TERM = re.compile(r"(?P<sign>[+-])(?:(?P<coef>\d+)\*?)?(?P<pi>pi)?\*?(?:(?P<x>x)(?:\^(?P<exp>-?\d+))?)?")


def qint_xpi(n: int) -> ZPiLaurent:
    """``[n]_{x,π} = x^{n-1} + π x^{n-3} + … + π^{n-1} x^{1-n}``.

    >>> print(qint_xpi(3))
    x^2 + pi + x^-2
    """
    if n <= 0:
        raise ValueError("qint_xpi is defined for n >= 1")
    return ZPiLaurent({n - 1 - 2 * j: (0, 1) if j % 2 else (1, 0) for j in range(n)})


def clebsch_gordan(n: int, m: int) -> ZPiLaurent:
    """Right-hand side ``Σ_r π^r [n+m-2r+1]`` of the product ``[n+1][m+1]``."""
    out = ZPiLaurent()
    for r in range(min(m, n) + 1):
        term = qint_xpi(n + m - 2 * r + 1)
        out = out + (term.times_pi() if r % 2 else term)
    return out


def decompose_in_basis(p: ZPiLaurent) -> list[tuple[int, int, int]]:
    """Expand ``p`` as ``Σ mult · π^pi · [k+1]`` and list ``(k, pi, mult)``.

    Greedy subtraction from the top degree; the expansion is unique because
    ``[k+1]`` has leading term ``x^k``.
    """
    p = ZPiLaurent.coerce(p)
    out = []
    while p:
        k = p.degree()
        if k < 0:
            raise NotACharacter("not a character: the top degree is negative")
        a, b = p.coeffs[k]
        if a < 0 or b < 0:
            raise NotACharacter("not a character: negative multiplicity")
        base = qint_xpi(k + 1)
        if a:
            out.append((k, 0, a))
        if b:
            out.append((k, 1, b))
        p = p - base * ZPiLaurent({0: (a, b)})
    return out


def k0_class_of_tensor_power(n: int) -> ZPiLaurent:
    return qint_xpi(2) ** n


def chebyshev_genfun_check(N: int) -> bool:
    """Check ``(1 - [2] t + π t²) Σ_{n=0}^{N} [n+1] t^n = 1 + O(t^{N+1})``.

    The series is indexed so that its constant term is ``[1] = 1``.
    """
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    series = [qint_xpi(n + 1) for n in range(N + 1)]
    two = qint_xpi(2)
    for n in range(N + 1):
        c = series[n]
        if n >= 1:
            c = c - two * series[n - 1]
        if n >= 2:
            c = c + series[n - 2].times_pi()
        if c != (ZPiLaurent.one() if n == 0 else ZPiLaurent()):
            return False
    return True


def pi_free_rank(N: int) -> int:
    """Rank over ``Z`` of ``{[n+1], π[n+1] : n ≤ N}`` (expected ``2(N+1)``)."""
    from fractions import Fraction

    vecs = []
    for n in range(N + 1):
        for shift in (False, True):
            b = qint_xpi(n + 1)
            b = b.times_pi() if shift else b
            vecs.append(b)
    keys = sorted({(k, t) for v in vecs for k in v.coeffs for t in (0, 1)})
    rows = [[Fraction(v.coeffs.get(k, (0, 0))[t]) for k, t in keys] for v in vecs]
    from .superlinalg import rank
    return rank(rows)


def jw_refinement_counts(n: int) -> list[tuple[int, int, int]]:
    """Multiplicities of ``(f_k)^π`` classes after refining ``f_1^{⊗n}``.

    Uses the witnessed splitting ``f_{k} ⊗ f_1 ≅ f_{k+1} ⊕ Π f_{k-1}``.
    """
    classes: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int], int] = {}
        for (k, pi), mult in classes.items():
            up = (k + 1, pi)
            nxt[up] = nxt.get(up, 0) + mult
            if k >= 1:
                down = (k - 1, 1 - pi)
                nxt[down] = nxt.get(down, 0) + mult
        classes = nxt
    return sorted(((k, pi, m) for (k, pi), m in classes.items()), key=lambda t: (-t[0], t[1]))


# --------------------------------------------------------------------------
# Idempotent equivalence in a Π-envelope
# --------------------------------------------------------------------------
class ShapeMismatch(ValueError):
    """Witnesses whose sources and targets do not fit the idempotents."""


class IdempotentPair:
    """An even idempotent endomorphism ``e`` of the Π-envelope ``context``.

    Stands for the summand of its object cut out by ``e``.
    """

    def __init__(self, e, context):
        if e.source != e.target:
            raise ShapeMismatch("an idempotent must be an endomorphism")
        if context.parity(e) != 0:
            raise ValueError("idempotent must be even")
        if context.compose(e, e) != e:
            raise ValueError("e∘e differs from e")
        self.e = e
        self.context = context

    @property
    def obj(self):
        return self.e.source

    def __repr__(self) -> str:
        return f"IdempotentPair(on {self.obj})"


def verify_idempotent_equivalence(e: IdempotentPair, f: IdempotentPair, u, v) -> bool:
    """Whether ``u: f → e`` and ``v: e → f`` are mutually inverse on the summands.

    True iff ``v∘e∘u = f`` and ``u∘f∘v = e``.
    """
    A = e.context
    X, Y = e.obj, f.obj
    if (u.source, u.target) != (Y, X) or (v.source, v.target) != (X, Y):
        raise ShapeMismatch(f"witnesses must go {Y} -> {X} and {X} -> {Y}")
    comp = A.compose
    return comp(v, comp(e.e, u)) == f.e and comp(u, comp(f.e, v)) == e.e


def jw_witnesses(n: int, eps: int = -1):
    """``(g_n)^0_0``, ``(f_{n−2})^1_1`` and the lifted ``(u_n)^0_1``, ``(v_n)^1_0``."""
    from .envelope import DiagramHandle, PiEnvelope
    from .jones_wenzl import gn, jw, un, vn

    env = PiEnvelope(DiagramHandle(n, "stl", eps))
    g = IdempotentPair(env.lift(gn(n, eps), 0, 0), env)
    f = IdempotentPair(env.lift(jw(n - 2, eps), 1, 1), env)
    return g, f, env.lift(un(n, eps), 1, 0), env.lift(vn(n, eps), 0, 1)
