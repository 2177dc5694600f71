"""Weight supermodules for quantum osp(1|2) and the functor ``G`` on STL.

``V = V(1)`` has basis ``v_1`` (even) and ``v_{-1}`` (odd).  ``G`` sends the
object ``n`` to ``V^{⊗n}``, the cup to ``1 ↦ v_{-1}⊗v_1 − q v_1⊗v_{-1}`` and
the cap to the pairing with ``v_1⊗v_{-1} ↦ 1`` and ``v_{-1}⊗v_1 ↦ −εq^{-1}``.

Scalars are symbolic (:class:`RatFunc`) by default; passing a rational
``q`` specialises every coefficient, which is much faster for rank checks.

>>> V = WeightModule(1)
>>> [str(c) for c in G_cup_vector().values()]
['-q', '1']
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache

from .diagrams import Layer, Matching
from .k0 import ZPiLaurent, decompose_in_basis
from .morphisms import DiagramMorphism, engine, tl_flavor
from .scalars import LaurentPoly, RatFunc, check_eps, quantum_int
from .superlinalg import SuperMap, SuperSpace, rank, tensor_power

Vector = dict  # sparse: {basis index: scalar}


def _scalar(p: LaurentPoly, q):
    return RatFunc(p) if q is None else p.evaluate(q)


def _qpow(k: int, q):
    return RatFunc.q(k) if q is None else Fraction(q) ** k


# --------------------------------------------------------------------------
# Modules
# --------------------------------------------------------------------------
class WeightModule:
    """The simple module ``V(n)`` with basis ``v_n, v_{n-2}, …, v_{-n}``.

    ``shift=1`` gives the parity-shifted module ``ΠV(n)``.
    """

    def __init__(self, n: int, eps: int = -1, q=None, shift: int = 0):
        if n < 0:
            raise ValueError("highest weight must be nonnegative")
        self.n, self.eps, self.q, self.shift = n, check_eps(eps), q, shift % 2
        weights = [n - 2 * k for k in range(n + 1)]
        par = [(k + self.shift) % 2 if self.eps == -1 else self.shift for k in range(n + 1)]
        self.space = SuperSpace(weights, par)

    def __repr__(self) -> str:
        return f"{'Π' if self.shift else ''}V({self.n})"

    @property
    def dim(self) -> int:
        return self.n + 1

    def weight(self, i: int) -> int:
        return self.n - 2 * i

    def parity(self, i: int) -> int:
        return self.space.parity[i]

    def e_col(self, i: int) -> Vector:
        """``E v_{n-2i} = [n-i+1] v_{n-2i+2}``."""
        if i == 0:
            return {}
        return {i - 1: _scalar(quantum_int(self.n - i + 1, self.eps), self.q)}

    def f_col(self, i: int) -> Vector:
        """``F v_{n-2i} = ε^i [i+1] v_{n-2i-2}``."""
        if i == self.n:
            return {}
        return {i + 1: _scalar(quantum_int(i + 1, self.eps) * self.eps ** i, self.q)}


class TensorModule:
    """``M ⊗ N`` with the coproduct action.

    ``E(v⊗w) = Ev⊗w + (−1)^{|v|} q^{-wt v} v⊗Ew`` and
    ``F(v⊗w) = (−1)^{|v|} ε^{wt v} v⊗Fw + q^{wt w} Fv⊗w``, the signs being
    the Koszul signs of ``1⊗E`` and ``1⊗F``.
    """

    def __init__(self, left, right):
        if (left.eps, left.q) != (right.eps, right.q):
            raise ValueError("factors use different parameters")
        self.left, self.right = left, right
        self.eps, self.q = left.eps, left.q
        from .superlinalg import tensor_space
        self.space = tensor_space(left.space, right.space)
        self._dr = right.dim

    def __repr__(self) -> str:
        return f"({self.left!r} ⊗ {self.right!r})"

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    def _split(self, i: int) -> tuple[int, int]:
        return divmod(i, self._dr)

    def weight(self, i: int) -> int:
        a, b = self._split(i)
        return self.left.weight(a) + self.right.weight(b)

    def parity(self, i: int) -> int:
        return self.space.parity[i]

    def e_col(self, i: int) -> Vector:
        a, b = self._split(i)
        out: Vector = {}
        for a2, c in self.left.e_col(a).items():
            out[a2 * self._dr + b] = c
        sign = -1 if self.left.parity(a) else 1
        scale = _qpow(-self.left.weight(a), self.q) * sign
        for b2, c in self.right.e_col(b).items():
            k = a * self._dr + b2
            out[k] = out.get(k, 0) + scale * c
        return {k: c for k, c in out.items() if c != 0}

    def f_col(self, i: int) -> Vector:
        a, b = self._split(i)
        out: Vector = {}
        sign = -1 if self.left.parity(a) else 1
        scale = sign * self.eps ** (self.left.weight(a) % 2)
        for b2, c in self.right.f_col(b).items():
            out[a * self._dr + b2] = scale * c
        qs = _qpow(self.right.weight(b), self.q)
        for a2, c in self.left.f_col(a).items():
            k = a2 * self._dr + b
            out[k] = out.get(k, 0) + qs * c
        return {k: c for k, c in out.items() if c != 0}


def tensor_module(*factors, bracketing: str = "left"):
    """Iterated tensor product, bracketed from the left or the right."""
    if not factors:
        raise ValueError("need at least one factor")
    if bracketing == "left":
        out = factors[0]
        for f in factors[1:]:
            out = TensorModule(out, f)
        return out
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = TensorModule(f, out)
    return out


def tensor_power_module(k: int, eps: int = -1, q=None):
    if k == 0:
        return WeightModule(0, eps, q)
    return tensor_module(*[WeightModule(1, eps, q) for _ in range(k)])


def _apply(col_fn, vec: Vector) -> Vector:
    out: Vector = {}
    for i, c in vec.items():
        for j, d in col_fn(i).items():
            out[j] = out.get(j, 0) + d * c
    return {j: c for j, c in out.items() if c != 0}


def e_action(M, vector: Vector) -> Vector:
    return _apply(M.e_col, vector)


def f_action(M, vector: Vector) -> Vector:
    return _apply(M.f_col, vector)


def e_matrix(M) -> SuperMap:
    return SuperMap.from_columns(M.space, M.space, [M.e_col(i) for i in range(M.dim)])


def f_matrix(M) -> SuperMap:
    return SuperMap.from_columns(M.space, M.space, [M.f_col(i) for i in range(M.dim)])


def check_sl2_relation(M) -> bool:
    """``(EF − εFE) v = [wt v] v`` on every basis vector."""
    for i in range(M.dim):
        ef = e_action(M, f_action(M, {i: 1}))
        fe = f_action(M, e_action(M, {i: 1}))
        lhs = dict(ef)
        for j, c in fe.items():
            lhs[j] = lhs.get(j, 0) - M.eps * c
        lhs = {j: c for j, c in lhs.items() if c != 0}
        val = _scalar(quantum_int(M.weight(i), M.eps), M.q)
        rhs = {i: val} if val != 0 else {}
        if lhs != rhs:
            return False
    return True


def supercharacter(M) -> ZPiLaurent:
    """``Σ_v x^{wt v} π^{|v|}`` over the weight basis."""
    out: dict[int, list[int]] = {}
    for i in range(M.dim):
        slot = out.setdefault(M.weight(i), [0, 0])
        slot[M.parity(i)] += 1
    return ZPiLaurent({k: tuple(v) for k, v in out.items()})


def decompose_tensor_power(n: int, eps: int = -1) -> list[tuple[int, int, int]]:
    """``V^{⊗n}`` as a list of ``(highest weight, Π-shift, multiplicity)``."""
    return decompose_in_basis(supercharacter(tensor_power_module(n, eps, q=Fraction(2))))


# --------------------------------------------------------------------------
# The functor G
# --------------------------------------------------------------------------
def V_space(eps: int = -1) -> SuperSpace:
    return SuperSpace([1, -1], [0, 1] if check_eps(eps) == -1 else [0, 0])


def G_cup_vector(eps: int = -1, q=None) -> dict:
    """``G(cup)(1)`` as ``{(a, b): coefficient}`` on ``V⊗V``."""
    return {(1, -1): -_qpow(1, q), (-1, 1): _scalar(LaurentPoly(1), q)}


def G_cap_values(eps: int = -1, q=None) -> dict:
    return {(1, -1): _scalar(LaurentPoly(1), q), (-1, 1): -check_eps(eps) * _qpow(-1, q)}


def _label_parity(eps: int):
    return (lambda s: 1 if s == -1 else 0) if eps == -1 else (lambda s: 0)


def _apply_layer(layer: Layer, vec: dict, eps: int, q, cup_vec, cap_vals) -> dict:
    par = _label_parity(eps)
    odd = eps == -1 and layer.generator != "cross"
    i = layer.left_pad
    out: dict = {}
    for s, c in vec.items():
        sign = -1 if odd and sum(par(x) for x in s[:i]) % 2 else 1
        if layer.generator == "cap":
            val = cap_vals.get(s[i:i + 2])
            if val is None:
                continue
            t = s[:i] + s[i + 2:]
            out[t] = out.get(t, 0) + sign * val * c
        elif layer.generator == "cup":
            for pair, val in cup_vec.items():
                t = s[:i] + pair + s[i:]
                out[t] = out.get(t, 0) + sign * val * c
        else:
            raise ValueError("G is defined on the Temperley-Lieb category only")
    return {t: c for t, c in out.items() if c != 0}


def _index(s: tuple) -> int:
    k = 0
    for x in s:
        k = 2 * k + (0 if x == 1 else 1)
    return k


def _all_labels(n: int):
    from itertools import product
    return list(product((1, -1), repeat=n))


@cache
def _G_basis(d: Matching, eps: int, q) -> tuple:
    """Columns of ``G([d])`` as a tuple of sparse ``{label: scalar}``."""
    word = engine(tl_flavor(eps)).word(d)
    cup_vec, cap_vals = G_cup_vector(eps, q), G_cap_values(eps, q)
    cols = []
    for s in _all_labels(d.source):
        vec = {s: 1}
        for layer in word.layers:
            vec = _apply_layer(layer, vec, eps, q, cup_vec, cap_vals)
            if not vec:
                break
        cols.append(vec)
    return tuple(cols)


def g_columns(f: DiagramMorphism, q=None) -> list[dict]:
    """``G(f)`` as sparse columns ``{target label: scalar}``, one per source label.

    Labels are tuples over ``{1, -1}`` in the order of :func:`_all_labels`.
    """
    eps = f.eps
    if f.flavor != tl_flavor(eps):
        raise TypeError("G is defined on the Temperley-Lieb category")
    q = None if q is None else Fraction(q)
    cols: list[dict] = [{} for _ in range(2 ** f.source)]
    for d, coeff in f.terms.items():
        c = coeff if q is None else coeff.evaluate(q)
        for j, vec in enumerate(_G_basis(d, eps, q)):
            col = cols[j]
            for t, x in vec.items():
                col[t] = col.get(t, 0) + c * x
    return [{t: c for t, c in col.items() if c != 0} for col in cols]


def g_functor(f: DiagramMorphism, q=None) -> SuperMap:
    """``G(f): V^{⊗m} → V^{⊗n}`` (symbolic unless ``q`` is a rational)."""
    V = V_space(f.eps)
    src, tgt = tensor_power(V, f.source), tensor_power(V, f.target)
    cols = [{_index(t): c for t, c in col.items()} for col in g_columns(f, q)]
    return SuperMap.from_columns(src, tgt, cols)


def g_of_word(layers, source: int, eps: int = -1, q=None) -> SuperMap:
    """``G`` of a layered word, computed layer by layer from the definitions."""
    from .diagrams import LayerWord
    word = layers if isinstance(layers, LayerWord) else LayerWord(layers, source)
    q = None if q is None else Fraction(q)
    V = V_space(eps)
    cup_vec, cap_vals = G_cup_vector(eps, q), G_cap_values(eps, q)
    cols = []
    for s in _all_labels(word.source):
        vec = {s: 1}
        for layer in word.layers:
            vec = _apply_layer(layer, vec, eps, q, cup_vec, cap_vals)
        cols.append({_index(t): c for t, c in vec.items()})
    return SuperMap.from_columns(tensor_power(V, word.source), tensor_power(V, word.target), cols)


def theta(s: Matching, q=None, eps: int = -1) -> SuperMap:
    """The functional ``θ_s = G([s])`` on ``V^{⊗m}``."""
    if s.target != 0:
        raise ValueError("θ is defined for diagrams with no top points")
    from .tl import basis_morphism
    return g_functor(basis_morphism(s, eps), q)


def theta_table(m: int, q=None, eps: int = -1):
    """Matrix ``θ_s(v_t)`` over Dyck sequences ``s, t`` (rows ``s``, columns ``t``)."""
    from .tl import dyck_sequence, enumerate_basis
    basis = enumerate_basis(m, 0)
    seqs = [dyck_sequence(s) for s in basis]
    table = []
    for s in basis:
        th = theta(s, q, eps)
        table.append([th.matrix[0, _index(t)] for t in seqs])
    return seqs, table


def hom_rank(m: int, n: int, q=Fraction(2), eps: int = -1, modulus: int | None = None) -> int:
    """Rank of the span of ``{G([d])}`` over the basis of ``Hom(m, n)``."""
    from .tl import basis_morphism, enumerate_basis
    rows = []
    for d in enumerate_basis(m, n):
        G = g_functor(basis_morphism(d, eps), q)
        rows.append(list(G.matrix.reshape(-1)))
    return rank(rows, modulus) if rows else 0


def image_rank(f: DiagramMorphism, q=Fraction(2)) -> int:
    G = g_functor(f, q)
    return rank(G.matrix)


# --------------------------------------------------------------------------
# Equivariance of G(cup) and G(cap)
# --------------------------------------------------------------------------
def equivariance_check(eps: int = -1, q=None) -> dict[str, bool]:
    """Check that ``G(cup)`` and ``G(cap)`` intertwine ``E`` and ``F``.

    Both maps are odd and ``E``, ``F`` are odd, so supercommutation reads
    ``X·h(v) = −h(X·v)``; on the trivial module ``X`` acts by zero, so the
    conditions become ``X·G(cup)(1) = 0`` and ``G(cap)(X·v) = 0``.
    """
    VV = TensorModule(WeightModule(1, eps, q), WeightModule(1, eps, q))
    labels = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    cup_vec = {labels.index(k): c for k, c in G_cup_vector(eps, q).items()}
    cap_vals = {labels.index(k): c for k, c in G_cap_values(eps, q).items()}

    def cap_of(vec):
        return sum((cap_vals.get(i, 0) * c for i, c in vec.items()), 0)

    report = {
        "E cup": not e_action(VV, cup_vec),
        "F cup": not f_action(VV, cup_vec),
    }
    for i, lab in enumerate(labels):
        report[f"cap E {lab}"] = cap_of(e_action(VV, {i: 1})) == 0
        report[f"cap F {lab}"] = cap_of(f_action(VV, {i: 1})) == 0
    return report
