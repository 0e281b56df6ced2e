"""Exterior algebra of Q^n and the equivariant maps built from it.

A monomial ``e_{i1}...e_{ia}`` is a strictly increasing tuple of indices; a
basis element of ``Λ^ν = Λ^{ν1} ⊗ ... ⊗ Λ^{νl}`` is a tuple of such tuples.
Vectors are dicts ``monomial -> coefficient``.  Every map is evaluated on
basis elements by a short program of three elementary moves (split a factor
by the comultiplication, multiply two adjacent factors, swap two adjacent
factors) and then stored as a :class:`~schurspecht.exactla.SparseMatrix`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Optional, Sequence

from .exactla import SparseMatrix

Monomial = tuple  # strictly increasing ints
Tensor = tuple  # tuple of Monomials


def wedge(x: Sequence[int], y: Sequence[int]) -> Optional[tuple[int, Monomial]]:
    """Product ``x y`` in the exterior algebra: ``(sign, merged)`` or ``None``."""
    if set(x) & set(y):
        return None
    inversions = 0
    j = 0
    for xi in x:
        while j < len(y) and y[j] < xi:
            j += 1
        inversions += j
    return (-1 if inversions & 1 else 1), tuple(sorted((*x, *y)))


@lru_cache(maxsize=None)
def _shuffles(m: int, a: int) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]:
    out = []
    base = a * (a - 1) // 2
    for left in combinations(range(m), a):
        right = tuple(i for i in range(m) if i not in left)
        sign = -1 if (sum(left) - base) & 1 else 1
        out.append((sign, left, right))
    return tuple(out)


def comult(x: Sequence[int], a: int, b: int) -> dict:
    """Component ``Λ^{a+b} -> Λ^a ⊗ Λ^b`` of the coproduct, as a signed shuffle sum."""
    x = tuple(x)
    if len(x) != a + b or a < 0 or b < 0:
        raise ValueError(f"cannot split a degree-{len(x)} monomial into ({a}, {b})")
    return {(tuple(x[i] for i in left), tuple(x[i] for i in right)): s
            for s, left, right in _shuffles(a + b, a)}


# -- elementary moves -------------------------------------------------------

def _run(program: Sequence[tuple], terms: list) -> list:
    for op in program:
        kind, pos = op[0], op[1]
        nxt = []
        if kind == "split":
            s1 = op[2]
            for coef, t in terms:
                f = t[pos]
                for sign, left, right in _shuffles(len(f), s1):
                    nxt.append((coef * sign, t[:pos] + (tuple(f[i] for i in left), tuple(f[i] for i in right)) + t[pos + 1:]))
        elif kind == "merge":
            for coef, t in terms:
                w = wedge(t[pos], t[pos + 1])
                if w is not None:
                    nxt.append((coef * w[0], t[:pos] + (w[1],) + t[pos + 2:]))
        elif kind == "swap":
            for coef, t in terms:
                nxt.append((coef, t[:pos] + (t[pos + 1], t[pos]) + t[pos + 2:]))
        else:
            raise ValueError(kind)
        terms = nxt
    return terms


def _accumulate(terms: Iterable, out: dict | None = None, scale=1) -> dict:
    out = {} if out is None else out
    for coef, t in terms:
        v = out.get(t, 0) + scale * coef
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


# -- descriptors ------------------------------------------------------------

KINDS = ("delta", "theta", "PhiT", "phiLower", "psi", "beta", "gamma", "thetaMu", "extended", "identity")


@dataclass(frozen=True)
class MapDescriptor:
    """Names one of the equivariant maps.

    ``a, b`` are the degrees of the two tensor factors, ``t`` the number of
    moved vectors for delta/theta/PhiT, ``k`` the exchange size for
    phiLower/psi/beta/gamma.  ``thetaMu`` uses ``shape``.  ``extended``
    places ``inner`` at column pair ``position`` (1-based) inside
    ``shape``.  ``identity`` uses ``shape``.
    """

    kind: str
    a: int = 0
    b: int = 0
    t: int = 0
    k: int = 0
    n: Optional[int] = None
    shape: tuple = ()
    position: int = 0
    inner: Optional["MapDescriptor"] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(self.shape))
        _validate(self)

    @property
    def ambient(self) -> int:
        return self.n if self.n is not None else sum(self.target_shape)

    @property
    def source_shapes(self) -> tuple[tuple[int, ...], ...]:
        """Direct summands of the source (a single summand except for thetaMu)."""
        a, b, t, k = self.a, self.b, self.t, self.k
        kind = self.kind
        if kind in ("delta", "theta", "PhiT", "phiLower", "psi"):
            return ((a, b),)
        if kind in ("beta", "gamma"):
            return ((a, k, b - k),)
        if kind == "identity":
            return (self.shape,)
        if kind == "thetaMu":
            mu = self.shape
            return tuple(mu[:c] + (mu[c] + 1, mu[c + 1] - 1) + mu[c + 2:] for c in range(len(mu) - 1))
        if kind == "extended":
            c = self.position - 1
            return tuple(self.shape[:c] + s + self.shape[c + 2:] for s in self.inner.source_shapes)
        raise ValueError(kind)

    @property
    def target_shape(self) -> tuple[int, ...]:
        a, b, t = self.a, self.b, self.t
        if self.kind == "delta":
            return (a + t, b - t)
        if self.kind == "theta":
            return (a - t, b + t)
        if self.kind in ("PhiT", "phiLower", "psi", "beta", "gamma"):
            return (a, b)
        return self.shape


def _validate(d: MapDescriptor) -> None:
    if d.kind not in KINDS:
        raise ValueError(f"unknown map kind {d.kind!r}")
    if min(d.a, d.b, d.t, d.k) < 0:
        raise ValueError(f"negative parameter in {d}")
    if d.kind in ("delta", "PhiT") and d.t > d.b:
        raise ValueError(f"{d.kind} needs t <= b, got t={d.t}, b={d.b}")
    if d.kind == "theta" and d.t > d.a:
        raise ValueError(f"theta needs t <= a, got t={d.t}, a={d.a}")
    if d.kind == "phiLower" and d.k > min(d.a, d.b):
        raise ValueError(f"phiLower needs k <= min(a, b), got k={d.k}")
    if d.kind in ("psi", "gamma", "beta") and not 1 <= d.k <= d.b:
        raise ValueError(f"{d.kind} needs 1 <= k <= b, got k={d.k}, b={d.b}")
    if d.kind in ("psi", "gamma", "beta") and d.k > d.a:
        raise ValueError(f"{d.kind} needs k <= a, got k={d.k}, a={d.a}")
    if d.kind == "thetaMu" and (len(d.shape) < 1 or min(d.shape) < 1):
        raise ValueError(f"thetaMu needs a nonempty shape of positive parts, got {d.shape}")
    if d.kind == "extended":
        if d.inner is None:
            raise ValueError("extended map needs an inner descriptor")
        if not 1 <= d.position < len(d.shape):
            raise ValueError(f"position {d.position} out of range for shape {d.shape}")
        c = d.position - 1
        if tuple(d.inner.target_shape) != d.shape[c:c + 2]:
            raise ValueError(f"inner map lands in {d.inner.target_shape}, not {d.shape[c:c + 2]}")
    if d.n is not None and d.n < 1:
        raise ValueError("ambient dimension must be positive")


def _program(d: MapDescriptor) -> list[tuple[int, list]]:
    """Linear combination of move programs realizing a two-column map."""
    a, b, t, k = d.a, d.b, d.t, d.k
    delta = [("split", 1, t), ("merge", 0)]
    if d.kind == "delta":
        return [(1, delta)]
    if d.kind == "theta":
        return [(1, [("split", 0, a - t), ("merge", 1)])]
    if d.kind == "PhiT":
        return [(1, delta + [("split", 0, a), ("merge", 1)])]
    phi = [("split", 0, a - k), ("split", 2, k), ("swap", 1), ("merge", 0), ("merge", 1)]
    if d.kind == "phiLower":
        return [(1, phi)]
    if d.kind == "psi":
        return [(comb(b, k), []), (-1, phi)]
    beta = [("split", 0, a - k), ("swap", 1), ("merge", 0), ("merge", 1)]
    if d.kind == "beta":
        return [(1, beta)]
    if d.kind == "gamma":
        return [(1, [("merge", 1)]), (-1, beta)]
    if d.kind == "identity":
        return [(1, [])]
    raise ValueError(d.kind)


def evaluate(d: MapDescriptor, term: Tensor, summand: int = 0) -> dict:
    """Image of one basis tensor (in direct summand ``summand`` of the source)."""
    if d.kind == "thetaMu":
        inner = MapDescriptor("theta", a=d.shape[summand] + 1, b=d.shape[summand + 1] - 1, t=1)
        return _evaluate_at(inner, term, summand)
    if d.kind == "extended":
        return _evaluate_at(d.inner, term, d.position - 1, summand)
    out: dict = {}
    for coef, prog in _program(d):
        _accumulate(_run(prog, [(1, tuple(term))]), out, coef)
    return out


def _evaluate_at(inner: MapDescriptor, term: Tensor, c: int, summand: int = 0) -> dict:
    width = len(inner.source_shapes[summand])
    head, mid, tail = term[:c], term[c:c + width], term[c + width:]
    return {head + t + tail: v for t, v in evaluate(inner, mid, summand).items()}


# -- bases and linear maps ----------------------------------------------------

@lru_cache(maxsize=256)
def tensor_basis(shape: tuple, n: int) -> tuple[Tensor, ...]:
    """Basis of ``Λ^shape`` over ``Q^n``: lexicographic per factor, row-major."""
    pools = [tuple(combinations(range(1, n + 1), s)) for s in shape]
    return tuple(product(*pools))


@lru_cache(maxsize=256)
def weight_basis(shape: tuple, r: int) -> tuple[Tensor, ...]:
    """Basis tensors of ``Λ^shape`` (with n = r) using each of ``1..r`` exactly once."""
    if sum(shape) != r:
        raise ValueError(f"shape {shape} has degree {sum(shape)}, not {r}")
    out = []

    def rec(remaining, c, acc):
        if c == len(shape):
            out.append(tuple(acc))
            return
        for col in combinations(remaining, shape[c]):
            acc.append(col)
            rec(tuple(x for x in remaining if x not in col), c + 1, acc)
            acc.pop()

    rec(tuple(range(1, r + 1)), 0, [])
    return tuple(out)


def basis_size(shape: Sequence[int], n: int) -> int:
    size = 1
    for s in shape:
        size *= comb(n, s)
    return size


@dataclass
class LinearMap:
    """An explicit matrix between monomial bases.

    ``source`` lists the bases of the direct summands of the source, in
    order; columns of ``matrix`` follow that concatenation.
    """

    source_shapes: tuple
    target_shape: tuple
    n: int
    source: list  # list of (summand, tensor)
    target: tuple  # tensors
    matrix: SparseMatrix
    weight: Optional[int] = None

    @property
    def target_index(self) -> dict:
        idx = getattr(self, "_tindex", None)
        if idx is None:
            idx = {t: i for i, t in enumerate(self.target)}
            self._tindex = idx
        return idx

    @property
    def source_index(self) -> dict:
        idx = getattr(self, "_sindex", None)
        if idx is None:
            idx = {s: i for i, s in enumerate(self.source)}
            self._sindex = idx
        return idx

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


def build_map(d: MapDescriptor, n: int | None = None, weight: int | None = None) -> LinearMap:
    """Materialize ``d`` as a sparse matrix.

    With ``weight=r`` only the multilinear weight space (each of ``1..r``
    used once, ``n = r``) is built; the maps preserve weights, so this is
    the restriction of the full matrix.
    """
    n = n if n is not None else d.ambient
    if weight is not None:
        if n != weight:
            raise ValueError(f"weight-space restriction needs n = r, got n={n}, r={weight}")
        tbasis = weight_basis(tuple(d.target_shape), weight)
    else:
        tbasis = tensor_basis(tuple(d.target_shape), n)
    tindex = {t: i for i, t in enumerate(tbasis)}
    source, cols = [], []
    for s, shape in enumerate(d.source_shapes):
        sbasis = weight_basis(shape, weight) if weight is not None else tensor_basis(shape, n)
        for term in sbasis:
            img = evaluate(d, term, s)
            cols.append({tindex[t]: v for t, v in img.items()})
            source.append((s, term))
    m = SparseMatrix(len(tbasis), len(cols), cols)
    return LinearMap(tuple(d.source_shapes), tuple(d.target_shape), n, source, tbasis, m, weight)


def identity_map(shape: Sequence[int], n: int) -> LinearMap:
    return build_map(MapDescriptor("identity", shape=tuple(shape), n=n), n)


def apply_map(m: LinearMap, v: dict) -> dict:
    """Apply ``m`` to a vector keyed by source tensors.

    Keys may be bare tensors (single summand) or ``(summand, tensor)`` pairs.
    """
    sidx = m.source_index
    coords = {}
    for key, x in v.items():
        if len(m.source_shapes) == 1 and (not key or not isinstance(key[0], int)):
            key = (0, key)
        shape = m.source_shapes[key[0]] if 0 <= key[0] < len(m.source_shapes) else None
        if shape is None or tuple(len(f) for f in key[1]) != tuple(shape):
            raise ValueError(f"{key!r} is not a basis tensor of the source {m.source_shapes}")
        coords[sidx[key]] = x
    out = m.matrix.apply(coords)
    return {m.target[i]: x for i, x in out.items()}


def compose(m2: LinearMap, m1: LinearMap) -> LinearMap:
    """``m2 ∘ m1``."""
    if len(m2.source_shapes) != 1 or tuple(m2.source_shapes[0]) != tuple(m1.target_shape) or m1.n != m2.n \
            or m1.weight != m2.weight:
        raise ValueError(f"cannot compose: {m1.target_shape} -> {m2.source_shapes}")
    return LinearMap(m1.source_shapes, m2.target_shape, m1.n, m1.source, m2.target,
                     m2.matrix @ m1.matrix, m1.weight)


def combine(terms: Sequence[tuple]) -> LinearMap:
    """Linear combination ``sum(c * m)`` of maps with identical bases."""
    (c0, m0), rest = terms[0], terms[1:]
    mat = m0.matrix.scale(c0)
    for c, m in rest:
        if m.source != m0.source or m.target != m0.target:
            raise ValueError("maps in a linear combination must share bases")
        mat = mat + m.matrix.scale(c)
    return LinearMap(m0.source_shapes, m0.target_shape, m0.n, m0.source, m0.target, mat, m0.weight)


def direct_sum(maps: Sequence[LinearMap]) -> LinearMap:
    """The map out of the direct sum of sources into the common target."""
    first = maps[0]
    for m in maps:
        if m.target != first.target:
            raise ValueError("direct sum needs a common target")
    cols, source, shapes = [], [], []
    for m in maps:
        offset = len(shapes)
        shapes.extend(m.source_shapes)
        source.extend((s + offset, t) for s, t in m.source)
        cols.extend(m.matrix.columns)
    mat = SparseMatrix(first.matrix.nrows, len(cols), cols)
    return LinearMap(tuple(shapes), first.target_shape, first.n, source, first.target, mat, first.weight)


def column_pair_map(mu: Sequence[int], kind: str, ks: Sequence[int], n: int | None = None,
                    weight: int | None = None) -> LinearMap:
    """``sum_c 1 ⊗ ... ⊗ X_{k_c} ⊗ ... ⊗ 1`` over adjacent column pairs of ``mu``.

    ``kind`` is ``"psi"`` or ``"gamma"`` (``ks`` gives the exchange sizes)
    or ``"theta"`` (``ks`` ignored, t = 1 everywhere).
    """
    mu = tuple(mu)
    if kind == "theta":
        return build_map(MapDescriptor("thetaMu", shape=mu, n=n), n if n is not None else sum(mu), weight)
    if len(ks) != len(mu) - 1:
        raise ValueError(f"need {len(mu) - 1} exchange sizes, got {len(ks)}")
    n = n if n is not None else sum(mu)
    parts = []
    for c, k in enumerate(ks, start=1):
        inner = MapDescriptor(kind, a=mu[c - 1], b=mu[c], k=k)
        parts.append(build_map(MapDescriptor("extended", shape=mu, position=c, inner=inner, n=n), n, weight))
    if not parts:
        return build_map(MapDescriptor("thetaMu", shape=mu, n=n), n, weight)
    return direct_sum(parts)
