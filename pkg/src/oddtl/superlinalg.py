"""Finite-dimensional superspaces and super linear maps.

Matrices are dense numpy object arrays whose entries are exact scalars
(``int``, ``Fraction`` or :class:`~oddtl.scalars.RatFunc`); the integer ``0``
is used for structural zeros so that products skip them cheaply.

Tensor products are strict: the basis of ``V ⊗ W`` is the flat lexicographic
product of the two bases, labelled by concatenated tuples.

>>> V = SuperSpace([1, -1], [0, 1])
>>> tensor_space(V, V).parity
(0, 1, 1, 0)
"""
from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np


def _label(x) -> tuple:
    return x if isinstance(x, tuple) else (x,)


@dataclass(frozen=True)
class SuperSpace:
    """An ordered homogeneous basis together with its parities."""

    basis: tuple
    parity: tuple

    def __init__(self, basis: Iterable[Hashable], parity: Iterable[int]):
        basis = tuple(basis)
        parity = tuple(int(p) % 2 for p in parity)
        if len(basis) != len(parity):
            raise ValueError("basis and parity lengths differ")
        if len(set(basis)) != len(basis):
            raise ValueError("basis labels must be distinct")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "parity", parity)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def even_dim(self) -> int:
        return self.parity.count(0)

    @property
    def odd_dim(self) -> int:
        return self.parity.count(1)

    def index(self, label) -> int:
        return self.basis.index(label)

    @classmethod
    def unit(cls) -> SuperSpace:
        """The ground field, one even basis vector labelled ``()``."""
        return cls([()], [0])


def tensor_space(V: SuperSpace, W: SuperSpace) -> SuperSpace:
    basis = [_label(v) + _label(w) for v in V.basis for w in W.basis]
    parity = [p + r for p in V.parity for r in W.parity]
    return SuperSpace(basis, parity)


def tensor_power(V: SuperSpace, n: int) -> SuperSpace:
    out = SuperSpace.unit()
    for _ in range(n):
        out = tensor_space(out, V)
    return out


def parity_shift(V: SuperSpace) -> SuperSpace:
    return SuperSpace(V.basis, [1 - p for p in V.parity])


def _zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def _nonzero(M: np.ndarray) -> list[tuple[int, int]]:
    return [(i, j) for (i, j), x in np.ndenumerate(M) if x != 0]


class SuperMap:
    """A linear map ``source -> target``, not necessarily homogeneous.

    ``matrix[i, j]`` is the coefficient of ``target.basis[i]`` in the image of
    ``source.basis[j]``.
    """

    __slots__ = ("matrix", "source", "target")

    def __init__(self, source: SuperSpace, target: SuperSpace, matrix=None):
        self.source = source
        self.target = target
        if matrix is None:
            matrix = _zeros(target.dim, source.dim)
        else:
            arr = np.asarray(matrix, dtype=object)
            if arr.size == 0:
                arr = _zeros(target.dim, source.dim)
            matrix = arr
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match "
                             f"{target.dim}x{source.dim}")
        self.matrix = matrix

    @classmethod
    def identity(cls, V: SuperSpace) -> SuperMap:
        M = _zeros(V.dim, V.dim)
        for i in range(V.dim):
            M[i, i] = 1
        return cls(V, V, M)

    @classmethod
    def from_columns(cls, source: SuperSpace, target: SuperSpace,
                     columns: Sequence[dict]) -> SuperMap:
        """Build from sparse image vectors ``{target index: scalar}``."""
        M = _zeros(target.dim, source.dim)
        for j, col in enumerate(columns):
            for i, c in col.items():
                if c != 0:
                    M[i, j] = c
        return cls(source, target, M)

    # -- parity -----------------------------------------------------------
    def _part(self, p: int) -> SuperMap:
        M = _zeros(self.target.dim, self.source.dim)
        for i, j in _nonzero(self.matrix):
            if (self.target.parity[i] + self.source.parity[j]) % 2 == p:
                M[i, j] = self.matrix[i, j]
        return SuperMap(self.source, self.target, M)

    def even_part(self) -> SuperMap:
        return self._part(0)

    def odd_part(self) -> SuperMap:
        return self._part(1)

    @property
    def parts(self) -> tuple[SuperMap, SuperMap]:
        return self.even_part(), self.odd_part()

    def parity(self) -> int | None:
        """``0`` or ``1`` for homogeneous maps, ``None`` otherwise.

        The zero map is reported as even.
        """
        seen = {(self.target.parity[i] + self.source.parity[j]) % 2
                for i, j in _nonzero(self.matrix)}
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def is_zero(self) -> bool:
        return not _nonzero(self.matrix)

    # -- algebra ----------------------------------------------------------
    def compose(self, other: SuperMap) -> SuperMap:
        """``self ∘ other``."""
        if other.target != self.source:
            raise ValueError("cannot compose: target of right factor differs from source of left")
        A, B = self.matrix, other.matrix
        cols: dict[int, list[tuple[int, object]]] = {}
        for i, k in _nonzero(A):
            cols.setdefault(k, []).append((i, A[i, k]))
        R = _zeros(A.shape[0], B.shape[1])
        for k, j in _nonzero(B):
            b = B[k, j]
            for i, a in cols.get(k, ()):
                R[i, j] = R[i, j] + a * b
        return SuperMap(other.source, self.target, R)

    __matmul__ = compose

    def __add__(self, other: SuperMap) -> SuperMap:
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("shape mismatch")
        return SuperMap(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> SuperMap:
        return self.scale(-1)

    def __sub__(self, other: SuperMap) -> SuperMap:
        return self + (-other)

    def scale(self, c) -> SuperMap:
        M = _zeros(*self.matrix.shape)
        if c != 0:
            for i, j in _nonzero(self.matrix):
                M[i, j] = c * self.matrix[i, j]
        return SuperMap(self.source, self.target, M)

    def map_entries(self, fn) -> SuperMap:
        """Apply ``fn`` to every nonzero entry, e.g. to specialise ``q``."""
        M = _zeros(*self.matrix.shape)
        for i, j in _nonzero(self.matrix):
            M[i, j] = fn(self.matrix[i, j])
        return SuperMap(self.source, self.target, M)

    def apply(self, vector: dict) -> dict:
        """Apply to a sparse vector ``{source index: scalar}``."""
        out: dict[int, object] = {}
        for j, c in vector.items():
            for i in np.flatnonzero(self.matrix[:, j] != 0):
                out[int(i)] = out.get(int(i), 0) + self.matrix[i, j] * c
        return {i: c for i, c in out.items() if c != 0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperMap):
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        return f"SuperMap({self.source.dim}->{self.target.dim}, nnz={len(_nonzero(self.matrix))})"


def compose(f: SuperMap, g: SuperMap) -> SuperMap:
    return f.compose(g)


def tensor_map(f: SuperMap, g: SuperMap) -> SuperMap:
    """Koszul-signed tensor product: ``(f⊗g)(v⊗w) = (-1)^{|g||v|} f(v)⊗g(w)``.

    The parity of ``g`` is read off per matrix entry, so inhomogeneous maps
    are handled part by part.
    """
    src = tensor_space(f.source, g.source)
    tgt = tensor_space(f.target, g.target)
    gw = g.source.dim
    gt = g.target.dim
    M = _zeros(tgt.dim, src.dim)
    f_nz = _nonzero(f.matrix)
    g_nz = [(i, j, (g.target.parity[i] + g.source.parity[j]) % 2) for i, j in _nonzero(g.matrix)]
    for fi, fj in f_nz:
        a = f.matrix[fi, fj]
        vpar = f.source.parity[fj]
        for gi, gj, gpar in g_nz:
            c = a * g.matrix[gi, gj]
            M[fi * gt + gi, fj * gw + gj] = -c if gpar and vpar else c
    return SuperMap(src, tgt, M)


def rank(matrix, modulus: int | None = None) -> int:
    """Exact rank of a matrix of rationals (or of its reduction mod a prime).

    Entries must be ``int`` or ``Fraction``; use ``SuperMap.map_entries`` to
    specialise symbolic entries first.
    """
    from fractions import Fraction

    from flint import fmpq, fmpq_mat, nmod_mat

    rows = [list(r) for r in np.asarray(matrix, dtype=object)]
    if not rows or not rows[0]:
        return 0
    entries = [Fraction(x) for r in rows for x in r]
    shape = (len(rows), len(rows[0]))
    if modulus is None:
        return fmpq_mat(*shape, [fmpq(x.numerator, x.denominator) for x in entries]).rank()
    reduced = [x.numerator * pow(x.denominator, -1, modulus) % modulus for x in entries]
    return nmod_mat(*shape, reduced, modulus).rank()
