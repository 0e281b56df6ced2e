"""Closed-form arithmetic criteria for cokernels and relation quotients.

Every quantity here is an exact integer or ``Fraction``.  Binomials use
:func:`~schurspecht.combinat.binom`, which vanishes outside ``0 <= r <= n``;
that convention is what truncates the sums below.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .combinat import binom, conjugate, validate_exchange_vector


@dataclass(frozen=True)
class Witness:
    c: int
    j: Optional[int]
    value: object


@dataclass
class CriterionReport:
    """Verdict of a criterion with the column pairs / summands that broke it."""

    verdict: bool
    witnesses: list = field(default_factory=list)
    criterion: str = ""
    j_range: Optional[str] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == bool(self.witnesses):
            raise ValueError("a report fails exactly when it has witnesses")

    def as_dict(self) -> dict:
        d = asdict(self)
        d["witnesses"] = [{"c": w.c, "j": w.j, "value": _render(w.value)} for w in self.witnesses]
        return d


def _render(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    return x


def c_scalar(a: int, b: int, t: int, i: int) -> int:
    """Scalar of ``Phi_t`` on the summand ``L_(a+i, b-i)``: ``C(i,t) C(a-b+t+i, t)``."""
    return binom(i, t) * binom(a - b + t + i, t)


def phi_coeffs(b: int, k: int) -> list[int]:
    """Coordinates of the exchange map ``phi_k`` in the basis ``Phi_0..Phi_b``."""
    return [(-1) ** t * binom(b - t, k - t) for t in range(b + 1)]


def psi_coeffs(b: int, k: int) -> list[int]:
    """Coordinates of ``psi_k = C(b,k) 1 - phi_k`` in the basis ``Phi_0..Phi_b``."""
    return [0] + [(-1) ** (t - 1) * binom(b - t, k - t) for t in range(1, b + 1)]


def change_of_basis_matrix(b: int) -> list[list[int]]:
    """``A[k][t] = (-1)^k C(b-k, b-t)``; it is its own inverse."""
    return [[(-1) ** k * binom(b - k, b - t) for t in range(b + 1)] for k in range(b + 1)]


def eigen_sum(coeffs: Sequence, a: int, b: int, j: int):
    """Scalar of ``sum_t coeffs[t] Phi_t`` on ``L_(a+j, b-j)``."""
    if not 0 <= j <= b:
        raise ValueError(f"j={j} outside 0..{b}")
    return sum(coeffs[t] * c_scalar(a, b, t, j) for t in range(min(j, len(coeffs) - 1) + 1))


@dataclass(frozen=True)
class CokerIdentification:
    index: Optional[int]
    zeros: tuple

    @property
    def irreducible(self) -> bool:
        return self.index is not None


def identify_coker(coeffs: Sequence, a: int, b: int) -> CokerIdentification:
    """Which ``L_(a+i, b-i)`` is the cokernel of ``sum_t coeffs[t] Phi_t``, if any.

    The cokernel is irreducible exactly when a single summand is killed.
    """
    if a < b:
        raise ValueError(f"need a >= b, got ({a}, {b})")
    zeros = tuple(j for j in range(b + 1) if eigen_sum(coeffs, a, b, j) == 0)
    return CokerIdentification(zeros[0] if len(zeros) == 1 else None, zeros)


def sigma_sum(a: int, b: int, k: int, j: int) -> int:
    """``sum_{t=1}^{j} (-1)^(t-1) C(b-t, b-k) C(j, t) C(a-b+j+t, t)``."""
    return sum((-1) ** (t - 1) * binom(b - t, b - k) * binom(j, t) * binom(a - b + j + t, t)
               for t in range(1, j + 1))


def multirow_coker_verdict(mu: Sequence[int], coeff_provider: Callable[[int, int, int], Sequence]) -> CriterionReport:
    """Sufficient condition for ``coker(sum_c Psi_c) = L_mu``.

    ``coeff_provider(c, mu_c, mu_{c+1})`` returns the ``Phi_t`` coordinates
    of the map placed on column pair ``c`` (1-based).
    """
    mu = tuple(mu)
    if len(mu) < 2:
        raise ValueError("need at least two parts")
    witnesses = []
    for c in range(1, len(mu)):
        a, b = mu[c - 1], mu[c]
        coeffs = list(coeff_provider(c, a, b))
        if coeffs and coeffs[0] != 0:
            witnesses.append(Witness(c, 0, coeffs[0]))
        for j in range(1, b + 1):
            s = sum(coeffs[t] * c_scalar(a, b, t, j) for t in range(1, min(j, len(coeffs) - 1) + 1))
            if s == 0:
                witnesses.append(Witness(c, j, s))
    return CriterionReport(not witnesses, witnesses, "multirow-coker")


J_RANGES = ("full", "short")


def sgr_verdict(lam: Sequence[int], k: Sequence[int], j_range: str = "full") -> CriterionReport:
    """Arithmetic test for the symmetrized Garnir presentation.

    ``full`` checks ``j = 1..mu_{c+1}``; ``short`` only ``j = 1..k_c``.
    """
    if j_range not in J_RANGES:
        raise ValueError(f"j_range must be one of {J_RANGES}")
    k = validate_exchange_vector(lam, k)
    mu = conjugate(lam)
    witnesses = []
    for c in range(1, len(mu)):
        a, b, kc = mu[c - 1], mu[c], k[c - 1]
        top = b if j_range == "full" else kc
        for j in range(1, top + 1):
            s = sigma_sum(a, b, kc, j)
            if s == 0:
                witnesses.append(Witness(c, j, s))
    return CriterionReport(not witnesses, witnesses, "sgr-sigma", j_range)


def d_coeff(a: int, b: int, k: int, i: int, t: int) -> int:
    """Coefficient of the ``t``-th cosemistandard term in ``pi∘delta_i∘gamma_k``."""
    p, q = pq_bounds(b, k, i)
    if not p <= t <= q:
        raise ValueError(f"t={t} outside [{p}, {q}]")
    return 1 - sum((-1) ** j * binom(a - k + j, a - k) * binom(b - k - i + t, t - j) for j in range(p, t + 1))


def pq_bounds(b: int, k: int, i: int) -> tuple[int, int]:
    return i - min(b - k, i), min(k, i)


def split_pairs(b: int, k: int, i: int) -> list[tuple[int, int]]:
    """``{(i1, i2): i1 + i2 = i, i1 <= k, i2 <= b-k}`` by direct enumeration."""
    return [(i1, i - i1) for i1 in range(i + 1) if i1 <= k and i - i1 <= b - k]


def gamma_two_row_verdict(a: int, b: int, k: int) -> bool:
    """Whether ``coker(gamma_k) = L_(a,b)``; the closed form and the
    coefficient test are both evaluated and must agree.
    """
    if not a >= b >= k >= 1:
        raise ValueError(f"need a >= b >= k >= 1, got ({a}, {b}, {k})")
    closed = a > k or a == b == k == 1
    by_coeffs = all(any(d_coeff(a, b, k, i, t) != 0 for t in range(pq_bounds(b, k, i)[0], pq_bounds(b, k, i)[1] + 1))
                    for i in range(1, b + 1))
    if closed != by_coeffs:
        raise ArithmeticError(f"closed form and coefficient test disagree at {(a, b, k)}")
    return closed


def gr_verdict(lam: Sequence[int], k: Sequence[int]) -> CriterionReport:
    """Distinct-columns hypothesis for the Garnir presentation with exchange vector ``k``.

    Fails at every column pair with ``k_c = mu_{c+1} > 1`` and ``mu_c = mu_{c+1}``.
    For two columns the verdict is an exact characterization, recorded in
    ``extra["two_column_iff"]``.
    """
    k = validate_exchange_vector(lam, k)
    mu = conjugate(lam)
    witnesses = [Witness(c, None, mu[c - 1] - mu[c]) for c in range(1, len(mu))
                 if k[c - 1] == mu[c] > 1 and not mu[c - 1] > mu[c]]
    extra = {}
    if len(mu) == 2:
        extra["two_column_iff"] = gamma_two_row_verdict(mu[0], mu[1], k[0])
    return CriterionReport(not witnesses, witnesses, "gr-distinct-columns", None, extra)


def classic_verdict(lam: Sequence[int]) -> CriterionReport:
    """Single Garnir exchanges always present the Specht module."""
    return CriterionReport(True, [], "classic")
