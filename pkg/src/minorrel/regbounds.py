"""Regularity, generator degree bounds and Hilbert functions of minor algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .partitions import admissible_partitions
from .symfunc import dim_schur


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def excluded_reason(t: int, m: int, n: int) -> Optional[str]:
    """Why the closed formulas do not apply, or None.  Assumes ``m <= n``."""
    if t == 1:
        return "t=1: the algebra is a polynomial ring"
    if n <= t + 1:
        return "n <= t+1: the algebra is a polynomial ring"
    if t >= m:
        return "t=m: maximal minors, the relations are the Pluecker quadrics"
    return None


@dataclass(frozen=True)
class RegularityCase:
    t: int
    m: int
    n: int
    case: str
    k0: Optional[int] = None
    value: Optional[int] = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"case": self.case, "k0": self.k0, "reg": self.value}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def regularity(t: int, m: int, n: int) -> RegularityCase:
    """Castelnuovo-Mumford regularity of the algebra of ``t``-minors of an ``m x n`` matrix."""
    if min(t, m, n) < 1:
        raise ValueError("t, m, n must be positive")
    if m > n:
        m, n = n, m
    why = excluded_reason(t, m, n)
    if why:
        return RegularityCase(t, m, n, "excluded", reason=why)
    if m + n - 1 < (m * n) // t:
        return RegularityCase(t, m, n, "i", None, m * n - _ceil_div(m * n, t))
    k0 = _ceil_div(t * m + t * n - m * n, m - t)
    return RegularityCase(t, m, n, "ii", k0, m * n - (m * (n + k0)) // t)


def square_bound(t: int, m: int) -> int:
    """Generator degree bound valid for every ``n`` once ``n >= m + t``."""
    return m * (m + t) - m - (m * m) // t + 1


def degree_bound(t: int, m: int, n: int) -> int:
    """Upper bound for the degree of a minimal relation.

    Returns 0 when there are no relations and 2 for maximal minors.  Otherwise
    the bound for an ``m x (m+t)`` matrix applies to every ``n``; for smaller
    ``n`` the regularity of the actual algebra may be sharper.
    """
    if min(t, m, n) < 1:
        raise ValueError("t, m, n must be positive")
    if m > n:
        m, n = n, m
    if t == 1 or n <= t + 1 or t > m:
        return 0
    if t == m:
        return 2
    bound = square_bound(t, m)
    if n < m + t:
        bound = min(bound, regularity(t, m, n).value + 1)
    return bound


def hilbert_At(t: int, m: int, n: int, d: int) -> int:
    """Dimension of the degree-``d`` part, summed over admissible shapes."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    if t > min(m, n):
        return 0
    return sum(dim_schur(lam, m) * dim_schur(lam, n)
               for lam in admissible_partitions(t, d, max_part=min(m, n)))


def hilbert_series(t: int, m: int, n: int, dmax: int) -> list[tuple[int, int]]:
    return [(d, hilbert_At(t, m, n, d)) for d in range(dmax + 1)]


def hilbert_csv(t: int, m: int, n: int, dmax: int) -> str:
    rows = ["d,dim"] + [f"{d},{v}" for d, v in hilbert_series(t, m, n, dmax)]
    return "\n".join(rows) + "\n"


def duality_check(t: int, n: int, dmax: int) -> bool:
    """Compare the Hilbert functions for ``t``-minors and ``(n-t)``-minors of a square matrix."""
    if not 1 <= t < n:
        raise ValueError("need 1 <= t < n")
    return all(hilbert_At(t, n, n, d) == hilbert_At(n - t, n, n, d) for d in range(dmax + 1))
