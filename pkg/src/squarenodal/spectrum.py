"""Dirichlet spectrum of the square (0, pi)^2 and the Courant-sharp shortlist.

Eigenvalues are the integers m**2 + n**2 with m, n >= 1, listed with
multiplicity.  An index k can only be Courant sharp if its eigenvalue
opens a new cluster, satisfies the Faber-Krahn necessary condition
k / lambda_k <= pi / j01**2, and lies below the threshold obtained by
playing that condition against the counting-function lower bound
N(lambda) > (pi/4) lambda - 2 sqrt(lambda) - 1.  The filter leaves the
indices {1, 2, 4, 5, 7, 9}; deciding the last three requires the nodal
topology modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Mode",
    "SpectrumEntry",
    "CourantAudit",
    "enumerate_spectrum",
    "counting_function",
    "pleijel_lower_bound",
    "bessel_j0",
    "bessel_j0_first_zero",
    "faber_krahn_ratio",
    "faber_krahn_pass",
    "candidate_eigenvalue_bound",
    "courant_audit",
    "courant_sharp_candidates",
    "first_index_of_eigenvalue",
]


@dataclass(frozen=True, order=True)
class Mode:
    """Unordered index pair of a product eigenfunction, stored with m <= n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("mode indices must be positive")

    @property
    def eigenvalue(self) -> int:
        return self.m * self.m + self.n * self.n


@dataclass(frozen=True)
class SpectrumEntry:
    """One ranked eigenvalue.  Entries of a cluster share the same modes tuple."""

    k: int
    eigenvalue: int
    modes: tuple[Mode, ...]

    @property
    def multiplicity(self) -> int:
        """Number of ordered pairs (m, n) with this eigenvalue."""
        return sum(1 if mode.m == mode.n else 2 for mode in self.modes)


@dataclass(frozen=True)
class CourantAudit:
    k: int
    eigenvalue: int
    is_first_of_cluster: bool
    pleijel_bound: float
    faber_krahn: bool
    candidate: bool


def _modes_by_eigenvalue(lambda_max: float) -> dict[int, list[Mode]]:
    top = int(math.isqrt(int(lambda_max)))
    table: dict[int, list[Mode]] = {}
    for m in range(1, top + 1):
        for n in range(m, top + 1):
            v = m * m + n * n
            if v <= lambda_max:
                table.setdefault(v, []).append(Mode(m, n))
    return table


def enumerate_spectrum(lambda_max: float) -> list[SpectrumEntry]:
    """All spectrum entries with eigenvalue <= lambda_max, ranked from 1.

    Each eigenvalue appears as many times as its multiplicity (the number
    of ordered pairs), every entry of a cluster carrying the full set of
    unordered mode pairs.
    """
    if lambda_max < 2:
        raise ValueError("lambda_max must be at least 2, the bottom of the spectrum")
    table = _modes_by_eigenvalue(lambda_max)
    entries: list[SpectrumEntry] = []
    k = 0
    for v in sorted(table):
        modes = tuple(sorted(table[v]))
        mult = sum(1 if mo.m == mo.n else 2 for mo in modes)
        for _ in range(mult):
            k += 1
            entries.append(SpectrumEntry(k=k, eigenvalue=v, modes=modes))
    return entries


def counting_function(lam: float) -> int:
    """Number of eigenvalues strictly below lam (multiplicity counted)."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    top = int(math.isqrt(int(lam))) + 1
    count = 0
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            if m * m + n * n < lam:
                count += 1
    return count


def pleijel_lower_bound(lam: float) -> float:
    """(pi/4) lam - 2 sqrt(lam) - 1, a strict lower bound for N(lam)."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    return 0.25 * math.pi * lam - 2.0 * math.sqrt(lam) - 1.0


def bessel_j0(x: float) -> float:
    """J_0 by its ascending series.  Accurate for the modest x needed here."""
    term = 1.0
    total = 1.0
    z = -0.25 * x * x
    for k in range(1, 60):
        term *= z / (k * k)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


@lru_cache(maxsize=1)
def bessel_j0_first_zero() -> float:
    """Smallest positive zero of J_0, by bisection on [2.0, 2.5]."""
    lo, hi = 2.0, 2.5
    flo = bessel_j0(lo)
    if flo <= 0 or bessel_j0(hi) >= 0:
        raise RuntimeError("bisection bracket for the J_0 zero is invalid")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if bessel_j0(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


@lru_cache(maxsize=1)
def faber_krahn_ratio() -> float:
    """pi / j01**2, the largest value k/lambda_k compatible with Courant sharpness."""
    j01 = bessel_j0_first_zero()
    return math.pi / (j01 * j01)


def faber_krahn_pass(k: int, lam: float) -> bool:
    """Whether index k at eigenvalue lam satisfies k/lam <= pi/j01**2."""
    if k < 1 or lam <= 0:
        raise ValueError("need k >= 1 and lam > 0")
    return k / lam <= faber_krahn_ratio()


@lru_cache(maxsize=1)
def candidate_eigenvalue_bound() -> float:
    """Largest eigenvalue a Courant-sharp index can have.

    Courant sharpness forces both k > (pi/4) lam - 2 sqrt(lam) and
    k <= (pi/j01**2) lam, which is impossible once
    sqrt(lam) >= 2 / (pi/4 - pi/j01**2).
    """
    gap = 0.25 * math.pi - faber_krahn_ratio()
    return (2.0 / gap) ** 2


def courant_audit(lambda_max: float | None = None) -> list[CourantAudit]:
    """Per-index audit of the Courant-sharp necessary conditions."""
    bound = candidate_eigenvalue_bound() if lambda_max is None else float(lambda_max)
    entries = enumerate_spectrum(max(bound, 2.0))
    audits = []
    prev = 0
    for e in entries:
        first = e.eigenvalue > prev
        prev = e.eigenvalue
        fk = faber_krahn_pass(e.k, e.eigenvalue)
        audits.append(
            CourantAudit(
                k=e.k,
                eigenvalue=e.eigenvalue,
                is_first_of_cluster=first,
                pleijel_bound=pleijel_lower_bound(e.eigenvalue),
                faber_krahn=fk,
                candidate=first and fk and e.eigenvalue <= bound,
            )
        )
    return audits


def courant_sharp_candidates(lambda_max: float | None = None) -> set[int]:
    """Indices surviving the cluster-head and Faber-Krahn filters."""
    return {a.k for a in courant_audit(lambda_max) if a.candidate}


def first_index_of_eigenvalue(eigenvalue: int) -> int:
    """Smallest k with lambda_k equal to the given eigenvalue."""
    return counting_function(eigenvalue) + 1
