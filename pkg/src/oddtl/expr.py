"""A small language for diagram expressions.

::

    expr := term { "*" term }
    term := atom { "ox" atom }
    atom := "cap" | "cup" | "cross" | "id(" nat ")" | "jw(" nat ")"
          | "gn(" nat ")" | "un(" nat ")" | "vn(" nat ")"
          | scalar "·" atom | "(" expr ")"

``f * g`` is ``f ∘ g`` (``g`` first).  ``⊗`` may replace ``ox`` and ``.``
may replace ``·``.  A scalar is a number, a power of ``q`` or a
parenthesised rational function such as ``(q^2 + 1)/(q)``.

>>> ast = parse("(id(1) ox cap) * (cup ox id(1))")
>>> print(to_text(ast))
id(1) ox cap * cup ox id(1)
>>> print(evaluate(ast))
(-1) · [b0-t0]
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .scalars import RatFunc, parse_scalar


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ArityError(ValueError):
    def __init__(self, message: str, subterm: Expr):
        super().__init__(f"{message} in {to_text(subterm)!r}")
        self.subterm = subterm


@dataclass(frozen=True)
class Gen:
    name: str  # cap, cup or cross


@dataclass(frozen=True)
class Indexed:
    name: str  # id, jw, gn, un or vn
    n: int


@dataclass(frozen=True)
class Scaled:
    scalar: RatFunc
    body: Expr


@dataclass(frozen=True)
class Compose:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Tensor:
    left: Expr
    right: Expr


Expr = Gen | Indexed | Scaled | Compose | Tensor
DiagramExpr = Expr

GENERATORS = ("cap", "cup", "cross")
INDEXED = ("id", "jw", "gn", "un", "vn")

_WORD = re.compile(r"[a-z]+")
_NAT = re.compile(r"\s*(\d+)\s*\)")
_BARE_SCALAR = re.compile(r"[+-]?(?:\d+(?:/\d+)?\*?)?(?:q(?:\^[+-]?\d+)?)?")
_DOTS = ("·", ".")


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------
class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def ws(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def error(self, msg: str):
        raise ExprSyntaxError(msg, self.i)

    def expr(self) -> Expr:
        node = self.term()
        while self.peek("*"):
            self.i += 1
            node = Compose(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.atom()
        while True:
            if self.peek("ox") and not self._word_continues(self.i + 2):
                self.i += 2
            elif self.peek("⊗"):
                self.i += 1
            else:
                return node
            node = Tensor(node, self.atom())

    def _word_continues(self, j: int) -> bool:
        return j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_")

    def _matching_paren(self, j: int) -> int | None:
        depth = 0
        for k in range(j, len(self.s)):
            depth += self.s[k] == "("
            depth -= self.s[k] == ")"
            if depth == 0:
                return k
        return None

    def _scalar_end(self) -> int | None:
        """End of a scalar prefix starting at ``self.i`` if one is followed by ``·``."""
        j = self.i
        if self.s.startswith("(", j):
            k = self._matching_paren(j)
            if k is None:
                return None
            j = k + 1
            m = re.compile(r"\s*/\s*").match(self.s, j)
            if m and self.s.startswith("(", m.end()):
                k = self._matching_paren(m.end())
                if k is None:
                    return None
                j = k + 1
        else:
            m = _BARE_SCALAR.match(self.s, j)
            if not m or m.end() == j:
                return None
            j = m.end()
        end = j
        while j < len(self.s) and self.s[j].isspace():
            j += 1
        return end if self.s.startswith(_DOTS, j) else None

    def atom(self) -> Expr:
        self.ws()
        if self.i >= len(self.s):
            self.error("unexpected end of input")
        end = self._scalar_end()
        if end is not None:
            start = self.i
            try:
                c = parse_scalar(self.s[start:end])
            except (ValueError, ZeroDivisionError) as exc:
                raise ExprSyntaxError(f"bad scalar ({exc})", start) from None
            self.i = end
            self.ws()
            self.i += 1  # the dot
            return Scaled(c, self.atom())
        if self.s.startswith("(", self.i):
            self.i += 1
            node = self.expr()
            if not self.peek(")"):
                self.error("expected ')'")
            self.i += 1
            return node
        m = _WORD.match(self.s, self.i)
        if not m:
            self.error("expected a generator, scalar or '('")
        name = m.group()
        if name in GENERATORS:
            self.i = m.end()
            return Gen(name)
        if name in INDEXED and self.s.startswith("(", m.end()):
            k = _NAT.match(self.s, m.end() + 1)
            if not k:
                self.i = m.end() + 1
                self.error(f"expected a natural number argument to {name}")
            self.i = k.end()
            return Indexed(name, int(k.group(1)))
        self.error(f"unknown word {name!r}")


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    p.ws()
    if p.i != len(text):
        p.error("unexpected trailing input")
    return node


# --------------------------------------------------------------------------
# Printing
# --------------------------------------------------------------------------
def to_text(e: Expr) -> str:
    """Print with the fewest parentheses ``parse`` needs to rebuild ``e``."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Indexed):
        return f"{e.name}({e.n})"
    if isinstance(e, Scaled):
        body = to_text(e.body)
        if isinstance(e.body, (Compose, Tensor)):
            body = f"({body})"
        return f"({e.scalar})·{body}"
    if isinstance(e, Compose):
        right = to_text(e.right)
        if isinstance(e.right, Compose):
            right = f"({right})"
        return f"{to_text(e.left)} * {right}"
    if isinstance(e, Tensor):
        right = to_text(e.right)
        if isinstance(e.right, (Compose, Tensor)):
            right = f"({right})"
        left = to_text(e.left)
        if isinstance(e.left, Compose):
            left = f"({left})"
        return f"{left} ox {right}"
    raise TypeError(f"not an expression: {e!r}")


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------
def evaluate(e: Expr, category: str = "stl", eps: int = -1):
    """Elaborate ``e`` into a :class:`TLMorphism` or :class:`SBMorphism`."""
    from . import brauer, jones_wenzl, tl

    if category not in ("stl", "brauer"):
        raise ValueError(f"unknown category {category!r}")
    mod = tl if category == "stl" else brauer

    def go(e: Expr):
        if isinstance(e, Gen):
            if e.name == "cross":
                if category != "brauer":
                    raise ArityError("the crossing needs --category brauer", e)
                return brauer.cross(eps)
            return getattr(mod, e.name)(eps)
        if isinstance(e, Indexed):
            if e.name == "id":
                return mod.identity(e.n, eps)
            if category != "stl":
                raise ArityError(f"{e.name} lives in the Temperley-Lieb category", e)
            fn = {"jw": jones_wenzl.jw, "gn": jones_wenzl.gn,
                  "un": jones_wenzl.un, "vn": jones_wenzl.vn}[e.name]
            try:
                return fn(e.n, eps)
            except ValueError as exc:
                raise ArityError(str(exc), e) from None
        if isinstance(e, Scaled):
            return e.scalar * go(e.body)
        if isinstance(e, Compose):
            f, g = go(e.left), go(e.right)
            if g.target != f.source:
                raise ArityError(f"cannot compose {f.source}->{f.target} "
                                 f"after {g.source}->{g.target}", e)
            return f @ g
        if isinstance(e, Tensor):
            return go(e.left).tensor(go(e.right))
        raise TypeError(f"not an expression: {e!r}")

    return go(e)
