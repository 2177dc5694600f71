"""Super Jones-Wenzl projectors and the idempotents splitting ``f_{n-1} ⊗ f_1``.

``f_{n+1} = f_n⊗1 + ([n]/[n+1]) (f_n⊗1)(1^{n-1}⊗cup)(1^{n-1}⊗cap)(f_n⊗1)``.
"""
from __future__ import annotations

import threading

from .diagrams import Matching
from .scalars import RatFunc, check_eps, quantum_int
from .tl import TLMorphism, cap, cup, identity


class RootOfUnityError(ArithmeticError):
    """A quantum integer needed as a denominator vanishes."""


class JWCache:
    """Memo of ``f_n`` for one value of ``eps``."""

    def __init__(self, eps: int = -1):
        self.eps = check_eps(eps)
        self.table: dict[int, TLMorphism] = {0: identity(0, self.eps)}
        self._lock = threading.Lock()

    def ratio(self, a: int, b: int) -> RatFunc:
        den = quantum_int(b, self.eps)
        if not den:
            raise RootOfUnityError(f"[{b}] vanishes")
        return RatFunc(quantum_int(a, self.eps), den)

    def turn_back(self, n: int) -> TLMorphism:
        """``(f_n⊗1)(1^{n-1}⊗cup)(1^{n-1}⊗cap)(f_n⊗1)`` in ``End(n+1)``."""
        fn1 = self.get(n).tensor(identity(1, self.eps))
        return fn1 @ (self.cupcap(n + 1) @ fn1)

    def cupcap(self, n: int) -> TLMorphism:
        """``(1^{n-2}⊗cup)(1^{n-2}⊗cap)`` in ``End(n)``."""
        e = self.eps
        pad = identity(n - 2, e)
        return pad.tensor(cup(e)) @ pad.tensor(cap(e))

    def get(self, n: int) -> TLMorphism:
        if n < 0:
            raise ValueError("n must be nonnegative")
        with self._lock:
            if n in self.table:
                return self.table[n]
        prev = self.get(n - 1)
        if n == 1:
            f = identity(1, self.eps)
        else:
            f = prev.tensor(identity(1, self.eps)) + self.ratio(n - 1, n) * self.turn_back(n - 1)
        with self._lock:
            self.table.setdefault(n, f)
            return self.table[n]


_CACHES: dict[int, JWCache] = {}


def _cache(eps: int) -> JWCache:
    eps = check_eps(eps)
    if eps not in _CACHES:
        _CACHES[eps] = JWCache(eps)
    return _CACHES[eps]


def jw(n: int, eps: int = -1) -> TLMorphism:
    """The projector ``f_n`` in ``End(n)``."""
    return _cache(eps).get(n)


def gn(n: int, eps: int = -1) -> TLMorphism:
    """``g_n = −([n−1]/[n]) (f_{n−1}⊗1)(1^{n−2}⊗cup)(1^{n−2}⊗cap)(f_{n−1}⊗1)``."""
    if n < 2:
        raise ValueError("g_n needs n >= 2")
    c = _cache(eps)
    return -(c.ratio(n - 1, n) * c.turn_back(n - 1))


def un(n: int, eps: int = -1) -> TLMorphism:
    """``u_n = −([n−1]/[n]) (f_{n−1}⊗1)(1^{n−2}⊗cup)``, odd, ``n−2 → n``."""
    if n < 2:
        raise ValueError("u_n needs n >= 2")
    c = _cache(eps)
    f = jw(n - 1, eps).tensor(identity(1, eps))
    return -(c.ratio(n - 1, n) * (f @ identity(n - 2, eps).tensor(cup(eps))))


def vn(n: int, eps: int = -1) -> TLMorphism:
    """``v_n = (1^{n−2}⊗cap)(f_{n−1}⊗1)``, odd, ``n → n−2``."""
    if n < 2:
        raise ValueError("v_n needs n >= 2")
    f = jw(n - 1, eps).tensor(identity(1, eps))
    return identity(n - 2, eps).tensor(cap(eps)) @ f


def cap_at(n: int, i: int, eps: int = -1) -> TLMorphism:
    """``1^i ⊗ cap ⊗ 1^{n−2−i}``."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"position {i} out of range for {n} strands")
    return identity(i, eps).tensor(cap(eps)).tensor(identity(n - 2 - i, eps))


def cup_at(n: int, i: int, eps: int = -1) -> TLMorphism:
    """``1^i ⊗ cup ⊗ 1^{n−2−i}`` with ``n`` top points."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"position {i} out of range for {n} strands")
    return identity(i, eps).tensor(cup(eps)).tensor(identity(n - 2 - i, eps))


def cap_annihilates(n: int, i: int, eps: int = -1) -> bool:
    """Whether ``(1^i ⊗ cap ⊗ 1^{n−2−i}) ∘ f_n = 0``."""
    return (cap_at(n, i, eps) @ jw(n, eps)).is_zero()


def cup_annihilates(n: int, i: int, eps: int = -1) -> bool:
    """Whether ``f_n ∘ (1^i ⊗ cup ⊗ 1^{n−2−i}) = 0``."""
    return (jw(n, eps) @ cup_at(n, i, eps)).is_zero()


def partial_closure(f: TLMorphism) -> TLMorphism:
    """Close the rightmost strand: ``(1^{n−1}⊗cap)(f⊗1)(1^{n−1}⊗cup)``."""
    n = f.source
    if n != f.target:
        raise ValueError("partial closure needs an endomorphism")
    if n == 0:
        raise ValueError("nothing to close on the empty object")
    e = f.eps
    pad = identity(n - 1, e)
    return pad.tensor(cap(e)) @ (f.tensor(identity(1, e)) @ pad.tensor(cup(e)))


def identity_coefficient(f: TLMorphism) -> RatFunc:
    return f.coefficient(Matching.identity(f.source))
