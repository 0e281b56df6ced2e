"""Schur modules as explicit cokernels and the scalars maps induce on them."""
from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinat import as_partition
from .exactla import ImageReducer, rank
from .exalg import LinearMap, MapDescriptor, build_map, compose, tensor_basis


class SchurModel:
    """``L_mu`` realized as ``Λ^mu`` modulo the image of ``theta_mu``.

    ``reduce`` sends a vector of ``Λ^mu`` (dict tensor -> coefficient) to its
    canonical coset representative; the surviving monomials are the
    non-pivot ones of the image.
    """

    def __init__(self, mu: Sequence[int], n: int):
        if n < 1:
            raise ValueError(f"ambient dimension must be positive, got {n}")
        self.mu = tuple(as_partition(mu))
        self.n = n
        if n < sum(self.mu):
            warnings.warn(f"n={n} < |mu|={sum(self.mu)}: outside the range where the presentation "
                          "theorems are stated", stacklevel=2)
        self.theta = build_map(MapDescriptor("thetaMu", shape=self.mu, n=n), n)
        self.basis = self.theta.target
        self.index = self.theta.target_index
        self.rank = rank(self.theta.matrix)
        self.dimension = len(self.basis) - self.rank
        self._reducer = None

    @property
    def reducer(self) -> ImageReducer:
        if self._reducer is None:
            self._reducer = ImageReducer(self.theta.matrix)
            if self._reducer.rank != self.rank:
                raise ArithmeticError("echelon basis and rank computation disagree")
        return self._reducer

    @property
    def faithful(self) -> bool:
        return self.n >= sum(self.mu)

    def reduce_coords(self, v: dict) -> dict:
        return self.reducer.reduce(v)

    def reduce(self, v: dict) -> dict:
        coords = {self.index[t]: x for t, x in v.items()}
        return {self.basis[i]: x for i, x in self.reduce_coords(coords).items()}

    def standard_monomials(self) -> list:
        """Basis tensors that survive reduction (one per basis vector of L_mu)."""
        piv = self.reducer.pivots
        return [t for i, t in enumerate(self.basis) if i not in piv]

    def __repr__(self):
        return f"SchurModel(mu={self.mu}, n={self.n}, dimension={self.dimension})"


@lru_cache(maxsize=128)
def schur_model(mu: Sequence[int], n: int) -> SchurModel:
    return SchurModel(tuple(mu), n)


def cosemistandard_count(mu: Sequence[int], n: int) -> int:
    """Fillings of the diagram of ``mu`` by ``1..n``, rows strictly increasing,
    columns weakly increasing.  Direct backtracking count.
    """
    mu = tuple(as_partition(mu))
    cells = [(i, j) for i, part in enumerate(mu) for j in range(part)]
    filling: dict = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i, j - 1] + 1)
        if i > 0:
            lo = max(lo, filling[i - 1, j])
        total = 0
        # the rest of the row must still fit strictly above this entry
        hi = n - (mu[i] - 1 - j)
        for v in range(lo, hi + 1):
            filling[i, j] = v
            total += rec(idx + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)


def pieri_dims(a: int, b: int, n: int) -> list[int]:
    """Dimensions of ``L_(a+i, b-i)`` for ``i = 0..b``."""
    if a < b:
        raise ValueError(f"need a >= b, got ({a}, {b})")
    out = []
    for i in range(b + 1):
        shape = tuple(p for p in (a + i, b - i) if p)
        out.append(0 if a + i > n else _quiet_model(shape, n).dimension)
    return out


def _quiet_model(shape, n) -> SchurModel:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return schur_model(shape, n)


def coker_dim(m: LinearMap, method: str = "exact") -> int:
    return m.matrix.nrows - rank(m.matrix, method)


def _as_map(phi, n: int) -> LinearMap:
    if isinstance(phi, MapDescriptor):
        return build_map(phi, n)
    return phi


def summand_scalar_empirical(phi, a: int, b: int, j: int, n: int | None = None) -> Fraction:
    """Scalar by which an endomorphism of ``Λ^a ⊗ Λ^b`` acts on ``L_(a+j, b-j)``.

    Both ``π∘δ_j∘Φ`` and ``π∘δ_j`` are evaluated on every basis vector; the
    ratio must be one scalar, otherwise ``ArithmeticError`` is raised.
    """
    n = n if n is not None else a + b
    if not 0 <= j <= b:
        raise ValueError(f"summand index {j} outside 0..{b}")
    phi = _as_map(phi, n)
    if tuple(phi.target_shape) != (a, b) or tuple(phi.source_shapes) != ((a, b),):
        raise ValueError(f"expected an endomorphism of Λ^{a} ⊗ Λ^{b}")
    mu = tuple(p for p in (a + j, b - j) if p)
    model = _quiet_model(mu, n)
    delta = build_map(MapDescriptor("delta", a=a, b=b, t=j, n=n), n)
    lhs = compose(delta, phi).matrix.columns
    rhs = delta.matrix.columns
    if len(mu) == 1:
        to_model = lambda v: {(model.index[(delta.target[i][0],)]): x for i, x in v.items()}  # noqa: E731
    else:
        to_model = lambda v: {model.index[delta.target[i]]: x for i, x in v.items()}  # noqa: E731
    scalar = None
    pairs = []
    for col_l, col_r in zip(lhs, rhs):
        u = model.reduce_coords(to_model(col_r))
        w = model.reduce_coords(to_model(col_l))
        pairs.append((u, w))
        if scalar is None and u:
            i = next(iter(u))
            scalar = w.get(i, Fraction(0)) / u[i]
    if scalar is None:
        raise ArithmeticError(f"π∘δ_{j} vanishes for n={n}; no probe vector found")
    for u, w in pairs:
        expect = {i: scalar * x for i, x in u.items() if scalar * x}
        if w != expect:
            raise ArithmeticError(f"map does not act by a single scalar on L_{mu}")
    return scalar


def _split_product(factors, first_degrees) -> dict:
    """``sum prod(f_u(first)) ⊗ prod(f'_u(second))`` over coproducts of each factor."""
    from .exalg import comult, wedge

    acc = {((), ()): 1}
    for f, d1 in zip(factors, first_degrees):
        nxt: dict = {}
        for (left, right), c in acc.items():
            for (fl, fr), s in comult(f, d1, len(f) - d1).items():
                wl, wr = wedge(left, fl), wedge(right, fr)
                if wl is None or wr is None:
                    continue
                key = (wl[1], wr[1])
                val = nxt.get(key, 0) + c * s * wl[0] * wr[0]
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key)
        acc = nxt
    return acc


def exchange_sides(x, y, z, a_parts, b_parts) -> tuple[dict, dict]:
    """Both sides of the exchange identity in ``Λ^a ⊗ Λ^b`` (before projection).

    ``x, y, z`` are monomials of degrees ``a_i + b_i``.  The left side splits
    each of them and multiplies the pieces; the right side moves the ``b_1``
    second-row vectors of ``x`` into ``y`` and ``z`` with binomial weights.
    Requires ``b_1 <= a_2 + a_3``.
    """
    from .combinat import binom
    from .exalg import wedge

    a1, a2, a3 = a_parts
    b1, b2, b3 = b_parts
    if b1 > a2 + a3:
        raise ValueError("needs b1 <= a2 + a3")
    lhs = _split_product((x, y, z), (a1, a2, a3))
    eps = (a2 + a3 + 1) * b1
    rhs: dict = {}
    for i2 in range(b1 + 1):
        i3 = b1 - i2
        if i2 > a2 or i3 > a3:
            continue
        sign = (-1) ** (eps + i2 * (a3 - i3) + i3 * b2)
        weight = sign * binom(b2 + i2, b2) * binom(b3 + i3, b3)
        for (left, right), c in _split_product((y, z), (a2 - i2, a3 - i3)).items():
            w = wedge(tuple(x), left)
            if w is None:
                continue
            key = (w[1], right)
            val = rhs.get(key, 0) + weight * c * w[0]
            if val:
                rhs[key] = val
            else:
                rhs.pop(key)
    return lhs, rhs
