"""Exact sparse linear algebra over the rationals.

Vectors are plain ``dict`` objects mapping an integer coordinate to a
nonzero ``int`` or ``Fraction``.  A :class:`SparseMatrix` is stored by
columns, since every question asked here is about a column space.
"""
from __future__ import annotations

import heapq
import random
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = dict  # coordinate -> nonzero rational


class SparseMatrix:
    """Column-sparse exact matrix; zero entries are never stored."""

    def __init__(self, nrows: int, ncols: int, columns: Sequence[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if columns is None:
            columns = [{} for _ in range(ncols)]
        if len(columns) != ncols:
            raise ValueError(f"expected {ncols} columns, got {len(columns)}")
        self.columns = []
        for col in columns:
            clean = {i: v for i, v in col.items() if v}
            for i in clean:
                if not 0 <= i < nrows:
                    raise IndexError(f"row index {i} out of range for {nrows} rows")
            self.columns.append(clean)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: dict) -> "SparseMatrix":
        cols = [{} for _ in range(ncols)]
        for (i, j), v in entries.items():
            cols[j][i] = v
        return cls(nrows, ncols, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> dict:
        return {(i, j): v for j, col in enumerate(self.columns) for i, v in col.items()}

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return SparseMatrix(self.ncols, self.nrows, cols)

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.nrows != other.nrows:
            raise ValueError(f"row counts differ: {self.nrows} vs {other.nrows}")
        return SparseMatrix(self.nrows, self.ncols + other.ncols, self.columns + other.columns)

    def scale(self, s) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, [{i: s * v for i, v in c.items()} for c in self.columns])

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return SparseMatrix(self.nrows, self.ncols,
                            [add_vectors(a, b) for a, b in zip(self.columns, other.columns)])

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.columns])

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            for i, a in self.columns[j].items():
                out[i] = out.get(i, 0) + a * x
        return {i: x for i, x in out.items() if x}

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        nnz = sum(len(c) for c in self.columns)
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={nnz})"


def add_vectors(a: dict, b: dict, s=1) -> dict:
    """Return ``a + s*b`` without stored zeros."""
    out = dict(a)
    for i, x in b.items():
        y = out.get(i, 0) + s * x
        if y:
            out[i] = y
        else:
            out.pop(i, None)
    return out


def _columns(m) -> list[dict]:
    if isinstance(m, SparseMatrix):
        return m.columns
    return list(m)


def _primitive(v: dict) -> dict:
    """Scale a rational vector to a primitive integer vector (same span)."""
    den = reduce(lcm, (x.denominator for x in v.values() if isinstance(x, Fraction)), 1)
    w = {i: int(x * den) for i, x in v.items()}
    g = gcd(*w.values())
    if g > 1:
        w = {i: x // g for i, x in w.items()}
    return w


# -- elimination kernels ---------------------------------------------------

def _markowitz_rank(vectors: Iterable[dict], prime: int | None) -> int:
    """Rank of the span of ``vectors`` by sparse elimination.

    ``prime=None`` works over the integers (fraction-free, rows kept
    primitive); otherwise over GF(prime).  The pivot is taken from the
    sparsest remaining vector, in its least populated coordinate, with the
    smallest bit-length as tie-break.
    """
    rows: list[dict] = []
    for v in vectors:
        v = {i: x for i, x in v.items() if x}
        if not v:
            continue
        if prime is None:
            rows.append(_primitive(v))
        else:
            w = {}
            for i, x in v.items():
                x = (x.numerator * pow(x.denominator, -1, prime)) % prime if isinstance(x, Fraction) else x % prime
                if x:
                    w[i] = x
            if w:
                rows.append(w)
    where: dict[int, set] = {}
    for r, v in enumerate(rows):
        for i in v:
            where.setdefault(i, set()).add(r)
    heap = [(len(v), r) for r, v in enumerate(rows)]
    heapq.heapify(heap)
    alive = [True] * len(rows)
    rank = 0
    while heap:
        n, r = heapq.heappop(heap)
        if not alive[r]:
            continue
        v = rows[r]
        if len(v) != n:
            heapq.heappush(heap, (len(v), r))
            continue
        alive[r] = False
        if not v:
            continue
        for i in v:
            where[i].discard(r)
        j = min(v, key=lambda i: (len(where[i]), abs(v[i]).bit_length(), i))
        rank += 1
        pv = v[j]
        if prime is not None and pv != 1:
            inv = pow(pv, -1, prime)
            v = {i: x * inv % prime for i, x in v.items()}
        for r2 in list(where[j]):
            w = rows[r2]
            a = w[j]
            if prime is None:
                g = gcd(pv, a)
                s, t = pv // g, a // g
                new = {i: s * x for i, x in w.items()} if s != 1 else dict(w)
                for i, x in v.items():
                    y = new.get(i, 0) - t * x
                    if y:
                        new[i] = y
                    else:
                        del new[i]
                if new:
                    c = gcd(*new.values())
                    if c > 1:
                        new = {i: x // c for i, x in new.items()}
            else:
                new = dict(w)
                for i, x in v.items():
                    y = (new.get(i, 0) - a * x) % prime
                    if y:
                        new[i] = y
                    else:
                        del new[i]
            for i in w:
                if i not in new:
                    where[i].discard(r2)
            for i in new:
                if i not in w:
                    where.setdefault(i, set()).add(r2)
            rows[r2] = new
            heapq.heappush(heap, (len(new), r2))
        where[j].clear()
    return rank


_PRIME_RNG_SEED = 20240611


def random_prime(bits: int = 62, seed: int | None = None) -> int:
    """A random prime of the given bit-length (deterministic for a given seed)."""
    from sympy import nextprime

    rng = random.Random(_PRIME_RNG_SEED if seed is None else seed)
    while True:
        p = nextprime(rng.randrange(1 << (bits - 1), 1 << bits))
        if p < 1 << bits:
            return p


def rank(m, method: str = "exact", certify: bool = False, prime: int | None = None) -> int:
    """Exact rank over Q of a matrix (or of the span of a list of vectors).

    ``method="modular"`` computes the rank over GF(p) for a 62-bit prime,
    which can only undershoot the rational rank.  With ``certify=True``
    the modular value is checked against a second prime and against the
    exact computation; a mismatch raises ``ArithmeticError``.
    """
    cols = _columns(m)
    if method == "exact":
        return _markowitz_rank(cols, None)
    if method != "modular":
        raise ValueError(f"unknown rank method {method!r}")
    p = prime or random_prime()
    r = _markowitz_rank(cols, p)
    if certify:
        r2 = _markowitz_rank(cols, random_prime(seed=p))
        exact = _markowitz_rank(cols, None)
        if not r == r2 == exact:
            raise ArithmeticError(f"modular ranks {r}, {r2} disagree with exact rank {exact}")
    return r


def image_contains(a, b, method: str = "exact") -> bool:
    """True iff the column space of ``b`` lies inside the column space of ``a``."""
    if isinstance(a, SparseMatrix) and isinstance(b, SparseMatrix) and a.nrows != b.nrows:
        raise ValueError(f"row counts differ: {a.nrows} vs {b.nrows}")
    ca, cb = _columns(a), _columns(b)
    return rank(ca + cb, method) == rank(ca, method)


def span_equal(a, b, method: str = "exact") -> bool:
    ca, cb = _columns(a), _columns(b)
    rab = rank(ca + cb, method)
    return rab == rank(ca, method) == rank(cb, method)


class ImageReducer:
    """Canonical representatives modulo the column space of a matrix.

    Pivots are the largest coordinates of an echelon basis, so the surviving
    coordinates of a reduced vector are the lexicographically smallest ones.
    The pivot set depends only on the subspace, not on the generators.
    """

    def __init__(self, a):
        self.nrows = a.nrows if isinstance(a, SparseMatrix) else None
        self.pivots: dict[int, dict] = {}
        for col in _columns(a):
            self._insert(col)

    def _insert(self, v: dict) -> None:
        v = {i: Fraction(x) for i, x in v.items() if x}
        v = self._reduce(v, keep_going=False)
        if v:
            j = max(v)
            pv = v[j]
            self.pivots[j] = {i: x / pv for i, x in v.items()}

    def _reduce(self, v: dict, keep_going: bool = True) -> dict:
        v = dict(v)
        heap = [-i for i in v]
        heapq.heapify(heap)
        seen = set()
        while heap:
            j = -heapq.heappop(heap)
            if j in seen or j not in v:
                continue
            seen.add(j)
            p = self.pivots.get(j)
            if p is None:
                if not keep_going:
                    return v
                continue
            a = v[j]
            for i, x in p.items():
                y = v.get(i, 0) - a * x
                if y:
                    if i not in v:
                        heapq.heappush(heap, -i)
                    v[i] = y
                else:
                    v.pop(i, None)
        return v

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: dict) -> dict:
        if self.nrows is not None:
            for i in v:
                if not 0 <= i < self.nrows:
                    raise ValueError(f"coordinate {i} outside {self.nrows} rows")
        return self._reduce({i: Fraction(x) for i, x in v.items() if x})


def reduce_mod_image(a, v: dict) -> dict:
    """Canonical representative of ``v`` modulo the column space of ``a``."""
    return ImageReducer(a).reduce(v)
