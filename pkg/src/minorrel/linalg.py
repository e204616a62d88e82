"""Exact sparse linear algebra over the integers and rationals.

Vectors are dicts mapping a hashable column key to a nonzero integer.
Columns are ordered by the natural ordering of their keys, so keys of one
matrix must be mutually comparable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

PRIMES = (2305843009213693951, 4611686018427387847)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incremental fraction-free row echelon form.

    Each stored row is primitive and indexed by its leading (smallest) key, so
    reducing a new row only ever introduces larger keys and terminates.
    """

    def __init__(self):
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            a, b = p[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _primitive(out)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        row = _primitive(row)
        self.pivots[min(row)] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[dict]) -> int:
    """Exact rank of the matrix with the given sparse rows."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def rank_mod(rows: Iterable[dict], p: int = PRIMES[0]) -> int:
    """Rank modulo the prime ``p``; a lower bound for the rational rank."""
    pivots: dict = {}
    for r in rows:
        row = {k: v % p for k, v in r.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def kernel(rows: list[dict], columns: Optional[Iterable] = None) -> list[dict]:
    """Integer basis of ``{x : row . x = 0 for every row}``.

    ``columns`` lists the unknowns; by default it is every key that occurs.
    Basis vectors are primitive and sorted by their free column.
    """
    cols = sorted(set(columns) if columns is not None else {k for r in rows for k in r})
    ech = Echelon()
    for r in rows:
        ech.add(r)
    # back substitution to reduced form over the rationals
    piv_cols = sorted(ech.pivots, reverse=True)
    reduced: dict = {}
    for c in piv_cols:
        row = {k: Fraction(v, ech.pivots[c][c]) for k, v in ech.pivots[c].items()}
        for c2 in list(row):
            if c2 != c and c2 in reduced:
                f = row.pop(c2)
                for k, v in reduced[c2].items():
                    if k == c2:
                        continue
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        reduced[c] = row
    basis = []
    for free in cols:
        if free in reduced:
            continue
        vec = {free: Fraction(1)}
        for c, row in reduced.items():
            v = row.get(free)
            if v:
                vec[c] = -v
        basis.append(_to_integer(vec))
    return basis


def _to_integer(vec: dict) -> dict:
    den = 1
    for v in vec.values():
        den = den * v.denominator // gcd(den, v.denominator)
    return _primitive({k: int(v * den) for k, v in vec.items()})


def apply(rows: list[dict], vec: dict) -> list:
    return [sum(v * vec.get(k, 0) for k, v in r.items()) for r in rows]
