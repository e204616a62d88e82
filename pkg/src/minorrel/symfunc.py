"""Symmetric functions: characters, plethysm with exterior powers, dimensions.

All public results use the Weyman labelling of Schur modules (``L_(d) V`` is
the exterior power).  Internally the engine works with ordinary symmetric
functions, where ``s_(d)`` is the complete homogeneous function.  The two
labellings differ by transposition, and :func:`_to_standard` /
:func:`_from_standard` are the only places where that happens.
"""

from __future__ import annotations

import json
import math
import os
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .partitions import (
    BiShape,
    Partition,
    admissible_degree,
    partition,
    partitions_of,
    size,
    tau,
    transpose,
)

DEFAULT_CAP = 12
CACHE_ENV = "MINORREL_CACHE_DIR"


class CapExceeded(ValueError):
    """The requested plethysm is larger than the configured size cap."""

    def __init__(self, td: int, cap: int):
        self.td = td
        self.cap = cap
        self.estimate = _partition_count(td) ** 2
        super().__init__(
            f"plethysm of total degree {td} exceeds cap {cap} "
            f"(about {self.estimate} character evaluations; raise the cap to proceed)")


@lru_cache(maxsize=None)
def _partition_count(n: int) -> int:
    return len(partitions_of(n))


def _to_standard(lam: Partition) -> Partition:
    return transpose(lam)


def _from_standard(lam: Partition) -> Partition:
    return transpose(lam)


# --- symmetric group characters -------------------------------------------

def _beta(lam: Partition, length: int) -> tuple:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: tuple) -> Partition:
    length = len(beta)
    bs = sorted(beta, reverse=True)
    return partition(bs[i] - (length - 1 - i) for i in range(length))


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    beta = _beta(lam, len(lam))
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in occupied:
            continue
        between = sum(1 for c in beta if b - k < c < b)
        new = tuple(b - k if c == b else c for c in beta)
        total += (-1) ** between * _mn(_from_beta(new), rest)
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Irreducible character ``chi^lam`` of the symmetric group at cycle type ``rho``.

    Standard labelling: ``chi^(n)`` is the trivial character.  Evaluated by the
    Murnaghan-Nakayama rule on beta-sets.
    """
    lam, rho = partition(lam), tuple(sorted(rho, reverse=True))
    if size(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, partition(rho))


def z(rho: Partition) -> int:
    out = 1
    for k, mult in Counter(rho).items():
        out *= k ** mult * math.factorial(mult)
    return out


def sign(rho: Partition) -> int:
    return (-1) ** (sum(rho) - len(rho))


# --- power-sum expansions --------------------------------------------------

def _merge(rho: Partition, sigma: Partition) -> Partition:
    return tuple(sorted(rho + sigma, reverse=True))


def schur_to_powersum(lam: Partition) -> dict:
    """``s_lam = sum_rho chi^lam(rho) / z_rho p_rho`` (standard labelling)."""
    n = size(lam)
    out = {}
    for rho in partitions_of(n):
        c = character(lam, rho)
        if c:
            out[rho] = Fraction(c, z(rho))
    return out


def powersum_to_schur(expansion: dict) -> dict:
    """Inverse of :func:`schur_to_powersum`; coefficients must come out integral."""
    by_size: dict = {}
    for rho, c in expansion.items():
        by_size.setdefault(sum(rho), {})[rho] = c
    out = {}
    for n, part_exp in by_size.items():
        for lam in partitions_of(n):
            c = sum(coef * character(lam, rho) for rho, coef in part_exp.items())
            if c:
                if c.denominator != 1:
                    raise ArithmeticError(f"non-integral Schur coefficient {c} at {lam}")
                out[lam] = int(c)
    return out


def _elementary_powersum(t: int, k: int) -> dict:
    """``p_k`` plethysm ``e_t``: the elementary function in the ``k``-th powers."""
    return {tuple(k * r for r in rho): Fraction(sign(rho), z(rho)) for rho in partitions_of(t)}


def _multiply(a: dict, b: dict) -> dict:
    out: dict = {}
    for r1, c1 in a.items():
        for r2, c2 in b.items():
            key = _merge(r1, r2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _plethysm_standard(nu: Partition, t: int) -> tuple:
    """Schur expansion (standard labelling) of ``s_nu`` plethysm ``e_t``."""
    d = size(nu)
    total: dict = {}
    factor_cache: dict = {}
    for rho in partitions_of(d):
        c = character(nu, rho)
        if not c:
            continue
        prod = {(): Fraction(1)}
        for k in rho:
            if k not in factor_cache:
                factor_cache[k] = _elementary_powersum(t, k)
            prod = _multiply(prod, factor_cache[k])
        w = Fraction(c, z(rho))
        for key, v in prod.items():
            total[key] = total.get(key, 0) + w * v
    total = {k: v for k, v in total.items() if v}
    return tuple(sorted(powersum_to_schur(total).items(), reverse=True))


def _disk_cache_path() -> Optional[Path]:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / "plethysm.json"


_disk_loaded: dict = {}


def _disk_lookup(key: str):
    path = _disk_cache_path()
    if path is None:
        return None
    if str(path) not in _disk_loaded:
        try:
            _disk_loaded[str(path)] = json.loads(path.read_text())
        except (OSError, ValueError):
            _disk_loaded[str(path)] = {}
    return _disk_loaded[str(path)].get(key)


def _disk_store(key: str, value) -> None:
    path = _disk_cache_path()
    if path is None:
        return
    table = _disk_loaded.setdefault(str(path), {})
    table[key] = value
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(table, sort_keys=True))
    tmp.replace(path)


def plethysm_exterior(mu: Partition, t: int, cap: Optional[int] = None) -> dict:
    """Decomposition of ``L_mu(/\\^t V)`` as ``{lam: multiplicity}``.

    Both ``mu`` and the keys use the Weyman labelling.  The expansion assumes
    ``dim V`` is large; in dimension ``n`` drop the keys with ``lam[0] > n``.
    """
    mu = partition(mu)
    if t < 1:
        raise ValueError("t must be positive")
    cap = DEFAULT_CAP if cap is None else cap
    td = t * size(mu)
    if td > cap:
        raise CapExceeded(td, cap)
    key = f"{t}:{','.join(map(str, mu))}"
    cached = _disk_lookup(key)
    if cached is not None:
        return {partition(p): m for p, m in cached}
    std = _plethysm_standard(_to_standard(mu), t)
    out = {_from_standard(lam): m for lam, m in std}
    _disk_store(key, sorted(([list(k), v] for k, v in out.items()), reverse=True))
    return out


def sym_power_exterior(d: int, t: int, cap: Optional[int] = None) -> dict:
    """Decomposition of ``Sym^d(/\\^t V)``."""
    return plethysm_exterior((1,) * d, t, cap=cap)


def expansion_to_json(expansion: dict) -> list:
    return [{"partition": list(lam), "mult": expansion[lam]}
            for lam in sorted(expansion, reverse=True)]


def expansion_from_json(data: list) -> dict:
    return {partition(e["partition"]): int(e["mult"]) for e in data if e["mult"]}


def dim_schur(lam: Partition, n: int) -> int:
    """``dim L_lam V`` for ``dim V = n`` (hook content formula)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    std = _to_standard(partition(lam))
    if len(std) > n:
        return 0
    conj = transpose(std)
    num, den = 1, 1
    for i, row in enumerate(std):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def mult_in_S(b: BiShape, t: int, d: Optional[int] = None, cap: Optional[int] = None) -> int:
    """Multiplicity of the bi-shape in ``Sym^d(E (x) F*)``."""
    dr, dc = admissible_degree(b.row, t), admissible_degree(b.col, t)
    if dr is None or dc is None or dr != dc or (d is not None and d != dr):
        return 0
    total = 0
    for mu in partitions_of(dr):
        ple = plethysm_exterior(mu, t, cap=cap)
        total += ple.get(b.row, 0) * ple.get(b.col, 0)
    return total


def mult_in_J(b: BiShape, t: int, d: Optional[int] = None, cap: Optional[int] = None) -> int:
    """Multiplicity of the bi-shape in the relation ideal ``J_t``."""
    m = mult_in_S(b, t, d, cap=cap)
    if m and b.is_symmetric():
        return m - 1
    return m


def quadratic_kernel_shapes(t: int) -> list[BiShape]:
    """Bi-shapes ``(tau_u|tau_v)`` with ``u+v`` even and ``u != v``."""
    if t < 1:
        raise ValueError("t must be positive")
    out = [BiShape(tau(t, u), tau(t, v))
           for u in range(t + 1) for v in range(t + 1) if (u + v) % 2 == 0 and u != v]
    return sorted(out, reverse=True)
