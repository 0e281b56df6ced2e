"""Column tabloids, Garnir-type relation families and the Schur functor bridge."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .combinat import Partition, as_partition, conjugate, validate_exchange_vector
from .exactla import rank as _rank

ColumnTabloid = tuple  # tuple of strictly increasing tuples, one per column


def permutation_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def canonical_tabloid(filling: Sequence[Sequence[int]]) -> tuple[int, ColumnTabloid]:
    """Sort every column; return ``(sign, tabloid)``.

    The filling must use each of ``1..r`` exactly once.
    """
    flat = sorted(x for col in filling for x in col)
    if flat != list(range(1, len(flat) + 1)):
        raise ValueError(f"filling {filling} does not use 1..{len(flat)} exactly once")
    sign = 1
    for col in filling:
        sign *= permutation_sign(col)
    return sign, tuple(tuple(sorted(col)) for col in filling)


def _canon(filling) -> tuple[int, ColumnTabloid]:
    # unchecked variant for the hot loops
    sign = 1
    out = []
    for col in filling:
        s = sorted(col)
        if len(col) > 1 and permutation_sign(col) < 0:
            sign = -sign
        out.append(tuple(s))
    return sign, tuple(out)


@lru_cache(maxsize=64)
def tabloid_basis(lam: Sequence[int]) -> tuple[ColumnTabloid, ...]:
    """All column tabloids of shape ``lam`` in lexicographic order of columns."""
    mu = conjugate(lam)
    r = sum(mu)
    out: list[ColumnTabloid] = []

    def rec(remaining: tuple[int, ...], c: int, acc: list):
        if c == len(mu):
            out.append(tuple(acc))
            return
        for col in combinations(remaining, mu[c]):
            rest = tuple(x for x in remaining if x not in col)
            acc.append(col)
            rec(rest, c + 1, acc)
            acc.pop()

    rec(tuple(range(1, r + 1)), 0, [])
    return tuple(out)


@lru_cache(maxsize=64)
def tabloid_index(lam: Sequence[int]) -> dict:
    return {t: i for i, t in enumerate(tabloid_basis(lam))}


@dataclass(frozen=True)
class RelationFamily:
    """Which relations to generate: ``"GR"``, ``"SGR"`` or ``"CLASSIC"``.

    ``CLASSIC`` is the Garnir family with a single exchange between every
    pair of adjacent columns; its exchange vector is ignored.
    """

    kind: str
    k: tuple = field(default=())

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in ("GR", "SGR", "CLASSIC"):
            raise ValueError(f"unknown relation family {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "k", tuple(self.k))


def _resolve_k(lam, family: RelationFamily) -> tuple[int, ...]:
    if family.kind == "CLASSIC":
        return (1,) * max(len(conjugate(lam)) - 1, 0)
    return validate_exchange_vector(lam, family.k)


def garnir_relation(T: ColumnTabloid, c: int, top: Sequence[int], index: dict) -> dict:
    """The Garnir relation for tabloid ``T``, columns ``c, c+1`` (0-based),
    with ``top`` the entries of column ``c+1`` moved to its top cells.
    """
    left, right = T[c], T[c + 1]
    k = len(top)
    rest = tuple(x for x in right if x not in top)
    eps = permutation_sign(tuple(top) + rest)
    vec = {index[T]: 1}
    for chosen in combinations(range(len(left)), k):
        newleft = list(left)
        for pos, y in zip(chosen, top):
            newleft[pos] = y
        newright = tuple(left[p] for p in chosen) + rest
        filling = T[:c] + (tuple(newleft), newright) + T[c + 2:]
        s, S = _canon(filling)
        i = index[S]
        v = vec.get(i, 0) - eps * s
        if v:
            vec[i] = v
        else:
            vec.pop(i, None)
    return vec


def symmetrized_relation(T: ColumnTabloid, c: int, k: int, index: dict) -> dict:
    """``C(|col c+1|, k) T`` minus every order-preserving k-by-k exchange."""
    left, right = T[c], T[c + 1]
    vec = {index[T]: comb(len(right), k)}
    for ys in combinations(range(len(right)), k):
        for xs in combinations(range(len(left)), k):
            newleft, newright = list(left), list(right)
            for px, py in zip(xs, ys):
                newleft[px], newright[py] = right[py], left[px]
            s, S = _canon(T[:c] + (tuple(newleft), tuple(newright)) + T[c + 2:])
            i = index[S]
            v = vec.get(i, 0) - s
            if v:
                vec[i] = v
            else:
                vec.pop(i, None)
    return vec


def relation_vectors(lam: Sequence[int], family: RelationFamily) -> list[dict]:
    """Generators of the relation subspace, as sparse vectors over :func:`tabloid_basis`."""
    lam = as_partition(lam)
    ks = _resolve_k(lam, family)
    basis = tabloid_basis(lam)
    index = tabloid_index(lam)
    out = []
    for T in basis:
        for c, k in enumerate(ks):
            if family.kind == "SGR":
                out.append(symmetrized_relation(T, c, k, index))
            else:
                for top in combinations(T[c + 1], k):
                    out.append(garnir_relation(T, c, top, index))
    return out


def quotient_dim(lam: Sequence[int], family: RelationFamily, method: str = "exact") -> int:
    lam = as_partition(lam)
    return len(tabloid_basis(lam)) - _rank(relation_vectors(lam, family), method)


def schur_functor_restrict(d, r: int):
    """Restriction of a GL map to the multilinear weight space (n = r).

    The weight basis of ``Λ^mu`` is the tabloid basis of ``mu'`` in the same order.
    """
    from .exalg import build_map

    if sum(d.target_shape) != r:
        raise ValueError(f"map has degree {sum(d.target_shape)}, not {r}")
    return build_map(d, r, weight=r)


def restricted_relation_map(lam: Sequence[int], family: RelationFamily):
    """Weight-space restriction of the GL map whose image should be the relation span:
    ``sum_c psi_{k_c}`` for SGR, ``sum_c gamma_{k_c}`` for GR and CLASSIC.
    """
    from .exalg import column_pair_map

    lam = as_partition(lam)
    mu = conjugate(lam)
    ks = _resolve_k(lam, family)
    kind = "psi" if family.kind == "SGR" else "gamma"
    return column_pair_map(mu, kind, ks, n=lam.size, weight=lam.size)


def sym_action(lam: Sequence[int], i: int, v: dict) -> dict:
    """Apply the transposition ``(i, i+1)`` to a vector over :func:`tabloid_basis`."""
    lam = as_partition(lam)
    if not 1 <= i < lam.size:
        raise ValueError(f"transposition ({i}, {i + 1}) outside S_{lam.size}")
    basis, index = tabloid_basis(lam), tabloid_index(lam)
    swap = {i: i + 1, i + 1: i}
    out: dict = {}
    for idx, x in v.items():
        s, S = _canon([tuple(swap.get(e, e) for e in col) for col in basis[idx]])
        j = index[S]
        y = out.get(j, 0) + s * x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out
