"""Partition combinatorics for the t-minor decomposition.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros; ``()`` is the zero partition.  Shapes are always read
in the Weyman convention used throughout the package: the one-row shape
``(d,)`` labels the exterior power and the one-column shape the symmetric
power.

Lists of partitions returned by this module are sorted in descending
lexicographic order.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence

Partition = tuple


class BiShape(NamedTuple):
    """A pair of partitions ``(row|col)`` indexing ``L_row V (x) L_col W*``."""

    row: Partition
    col: Partition

    def is_symmetric(self) -> bool:
        return self.row == self.col

    def mirror(self) -> "BiShape":
        return BiShape(self.col, self.row)

    def to_json(self) -> dict:
        return {"row": list(self.row), "col": list(self.col)}

    @classmethod
    def from_json(cls, data) -> "BiShape":
        return cls(partition(data["row"]), partition(data["col"]))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.row))}|{','.join(map(str, self.col))})"


def partition(parts: Sequence[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts of {parts!r} are not weakly decreasing")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"4,1,1"`` (or ``"[4,1,1]"`` or ``""``) into a partition."""
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return partition(int(x) for x in text.replace(" ", "").split(","))


def to_json(lam: Partition) -> str:
    return json.dumps(list(lam))


def from_json(text: str) -> Partition:
    return partition(json.loads(text))


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part (0-based), zero past the end."""
    return lam[i] if i < len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def is_rectangle(lam: Partition) -> bool:
    return len(set(lam)) <= 1


def is_fat_hook(lam: Partition) -> bool:
    return len(set(lam)) == 2


def partitions_of(n: int, max_parts: Optional[int] = None,
                  max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of ``n``, descending lexicographic."""
    return list(_gen_partitions(n, n if max_part is None else max_part,
                                n if max_parts is None else max_parts))


def _gen_partitions(n: int, max_part: int, max_parts: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first, max_parts - 1):
            yield (first,) + rest


def is_admissible(lam: Partition, t: int, d: int) -> bool:
    """``lam`` is a partition of ``t*d`` with at most ``d`` rows."""
    return size(lam) == t * d and len(lam) <= d


def admissible_degree(lam: Partition, t: int) -> Optional[int]:
    """The unique ``d`` making ``lam`` ``(t, d)``-admissible, if any."""
    if t < 1:
        raise ValueError("t must be positive")
    n = size(lam)
    if n % t:
        return None
    d = n // t
    return d if len(lam) <= d else None


def admissible_partitions(t: int, d: int, max_part: Optional[int] = None) -> list[Partition]:
    return partitions_of(t * d, max_parts=d, max_part=max_part)


def _require_degree(lam: Partition, t: int) -> int:
    d = admissible_degree(lam, t)
    if d is None:
        raise ValueError(f"{lam} is not (t={t}, d)-admissible for any d")
    return d


def _strips_below(lam: Partition, t: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by removing a horizontal ``t``-strip."""
    k = len(lam)
    out: list[int] = [0] * k

    def rec(i: int, removed: int) -> Iterator[Partition]:
        if i == k:
            if removed == t:
                yield partition(out)
            return
        lo = part(lam, i + 1)
        for a in range(lam[i], lo - 1, -1):
            r = removed + lam[i] - a
            if r > t:
                break
            out[i] = a
            yield from rec(i + 1, r)

    yield from rec(0, 0)


def _strips_above(alpha: Partition, t: int) -> Iterator[Partition]:
    """Partitions obtained from ``alpha`` by adding a horizontal ``t``-strip."""
    k = len(alpha) + 1
    out: list[int] = [0] * k

    def rec(i: int, added: int) -> Iterator[Partition]:
        if i == k:
            if added == t:
                yield partition(out)
            return
        base = part(alpha, i)
        hi = base + (t - added) if i == 0 else min(alpha[i - 1], base + t - added)
        for a in range(hi, base - 1, -1):
            out[i] = a
            yield from rec(i + 1, added + a - base)

    yield from rec(0, 0)


def is_pieri_pair(alpha: Partition, lam: Partition, t: int) -> bool:
    """``lam`` arises from ``alpha`` by adding ``t`` boxes in distinct columns."""
    if size(lam) - size(alpha) != t or len(lam) > len(alpha) + 1:
        return False
    if part(lam, 0) > part(alpha, 0) + t:
        return False
    return all(part(alpha, i) <= part(lam, i) for i in range(len(lam))) and all(
        part(lam, i) <= alpha[i - 1] for i in range(1, len(lam)))


def predecessors(lam: Partition, t: int) -> list[Partition]:
    d = _require_degree(lam, t)
    if d == 0:
        return []
    preds = {a for a in _strips_below(lam, t) if len(a) <= d - 1}
    return sorted(preds, reverse=True)


def successors(alpha: Partition, t: int, max_row_length: Optional[int] = None) -> list[Partition]:
    d = _require_degree(alpha, t)
    succ = {lam for lam in _strips_above(alpha, t) if len(lam) <= d + 1}
    if max_row_length is not None:
        succ = {lam for lam in succ if part(lam, 0) <= max_row_length}
    return sorted(succ, reverse=True)


@lru_cache(maxsize=None)
def _tensor_mult(lam: Partition, t: int) -> int:
    if not lam:
        return 1
    return sum(_tensor_mult(a, t) for a in predecessors(lam, t))


def tensor_multiplicity(lam: Partition, t: int) -> int:
    """Multiplicity of ``L_lam V`` in the ``d``-fold tensor power of ``/\\^t V``."""
    _require_degree(lam, t)
    return _tensor_mult(partition(lam), t)


def trivial_extension(lam: Partition, d: int, cols: int = 1) -> Partition:
    """Prefix ``lam`` with ``cols`` columns of length ``d``."""
    if len(lam) > d:
        raise ValueError(f"{lam} has more than d={d} rows")
    return partition(part(lam, i) + cols for i in range(d))


def one_predecessors(mu: Partition) -> list[Partition]:
    """Partitions obtained by removing one corner box."""
    out = []
    for i, x in enumerate(mu):
        if part(mu, i + 1) < x:
            out.append(partition(mu[:i] + (x - 1,) + mu[i + 1:]))
    return sorted(out, reverse=True)


def one_successors(mu: Partition) -> list[Partition]:
    out = []
    for i in range(len(mu) + 1):
        if i == 0 or mu[i - 1] > part(mu, i):
            new = list(mu) + [0]
            new[i] += 1
            out.append(partition(new))
    return sorted(out, reverse=True)


def _complete_from_corners(corners: frozenset) -> list[Partition]:
    """All ``mu`` whose set of one-box predecessors equals ``corners``."""
    cands: set = set()
    for c in corners:
        cands.update(one_successors(c))
    return sorted((mu for mu in cands if frozenset(one_predecessors(mu)) == corners),
                  reverse=True)


@lru_cache(maxsize=None)
def _single_type_candidate(lam: Partition, t: int) -> Optional[Partition]:
    d = size(lam) // t
    if d == 1:
        return (1,)
    if d == 2:
        # tau_u = (t+u, t-u) sits in Sym^2 iff u is even; Sym^2 is (1,1) here.
        u = lam[0] - t
        return (1, 1) if u % 2 == 0 else (2,)
    types = []
    for pred in predecessors(lam, t):
        mu = _single_type_candidate(pred, t)
        if mu is None:
            return None
        types.append(mu)
    if len(set(types)) != len(types):
        return None
    cands = _complete_from_corners(frozenset(types))
    return cands[0] if len(cands) == 1 else None


def single_type_candidate(lam: Partition, t: int) -> Optional[Partition]:
    """Recursive necessary condition for single ``/\\^t``-type.

    Every predecessor must itself be of single type, the predecessor types must
    be pairwise distinct, and they must be exactly the one-box predecessors of a
    unique ``mu``.  The returned ``mu`` is the only partition in whose Schur
    functor ``lam`` can be of single type; whether ``lam`` actually occurs there
    is a separate question (see :func:`is_single_type`).
    """
    _require_degree(lam, t)
    return _single_type_candidate(partition(lam), t)


def is_single_type(lam: Partition, t: int, cap: Optional[int] = None) -> Optional[Partition]:
    """The type ``mu`` if ``lam`` is of single ``/\\^t``-type, else ``None``.

    Within the plethysm cap the answer is read off the plethysms ``L_nu E``
    for all ``nu`` of size ``d``.  Beyond the cap the recursive candidate is
    returned when its multiplicity count matches, i.e. the number of standard
    tableaux of ``mu`` equals the multiplicity of ``lam`` in the tensor power.
    The recursion is sufficient but not necessary: ``(5,5)`` for ``t=2`` is of
    single type ``(3,1,1)`` although its only predecessor ``(5,3)`` is not.
    """
    from . import symfunc

    _require_degree(lam, t)
    lam = partition(lam)
    cap = symfunc.DEFAULT_CAP if cap is None else cap
    d = size(lam) // t
    if size(lam) > cap:
        mu = single_type_candidate(lam, t)
        if mu is None or symfunc.character(mu, (1,) * d) != tensor_multiplicity(lam, t):
            return None
        return mu
    found = [(nu, symfunc.plethysm_exterior(nu, t, cap=cap).get(lam, 0)) for nu in partitions_of(d)]
    found = [(nu, k) for nu, k in found if k]
    if len(found) == 1 and found[0][1] == 1:
        return found[0][0]
    return None


def bi_predecessors(b: BiShape, t: int) -> list[BiShape]:
    return [BiShape(a, c) for a in predecessors(b.row, t) for c in predecessors(b.col, t)]


def is_tshape_relation(b: BiShape, t: int) -> bool:
    """Asymmetric with only symmetric bi-predecessors of multiplicity one."""
    if b.is_symmetric():
        return False
    bps = bi_predecessors(b, t)
    return bool(bps) and all(
        p.is_symmetric() and tensor_multiplicity(p.row, t) * tensor_multiplicity(p.col, t) == 1
        for p in bps)


def classify_tshape(t: int, d: int) -> list[BiShape]:
    """T-shape relations of degree ``d >= 3``, found by exhaustive search.

    A bi-shape qualifies iff it has exactly one bi-predecessor counted with
    multiplicity and that predecessor is symmetric.  Only partitions of
    multiplicity one in the tensor power can take part, so the search pairs
    those up by their common predecessor.
    """
    if d < 3:
        raise ValueError("classify_tshape needs d >= 3")
    by_pred: dict = {}
    for lam in admissible_partitions(t, d):
        if tensor_multiplicity(lam, t) != 1:
            continue
        (pred,) = predecessors(lam, t)
        by_pred.setdefault(pred, []).append(lam)
    found = []
    for group in by_pred.values():
        for g in group:
            for lam in group:
                b = BiShape(g, lam)
                if g != lam and is_tshape_relation(b, t):
                    found.append(b)
    return sorted(found, reverse=True)


def gamma_lambda(t: int, u: int) -> BiShape:
    """The even cubic bi-shape ``((t+u, t+u, t-2u) | (t+2u, t-u, t-u))``."""
    return BiShape(partition((t + u, t + u, t - 2 * u)), partition((t + 2 * u, t - u, t - u)))


def rho_sigma(t: int, u: int) -> BiShape:
    """The odd cubic bi-shape ``((t+u, t+u-1, t-2u+1) | (t+2u-1, t-u+1, t-u))``."""
    return BiShape(partition((t + u, t + u - 1, t - 2 * u + 1)),
                   partition((t + 2 * u - 1, t - u + 1, t - u)))


def tau(t: int, u: int) -> Partition:
    return partition((t + u, t - u))


def is_shape_relation(b: BiShape, t: int, cap: Optional[int] = None) -> bool:
    """Test ``b`` against the shape-relation criterion in ``S_t``.

    ``b`` must be asymmetric, occur in some ``(S_t)_mu``, and every
    bi-predecessor occurring in ``(S_t)_mu'`` for a one-box predecessor ``mu'``
    of ``mu`` must be symmetric of single type.
    """
    from . import symfunc

    if b.is_symmetric():
        return False
    d = admissible_degree(b.row, t)
    if d is None or admissible_degree(b.col, t) != d:
        return False
    bps = bi_predecessors(b, t)
    for mu in partitions_of(d):
        if not (symfunc.plethysm_exterior(mu, t, cap=cap).get(b.row, 0)
                and symfunc.plethysm_exterior(mu, t, cap=cap).get(b.col, 0)):
            continue
        ok = True
        for mu1 in one_predecessors(mu):
            ple = symfunc.plethysm_exterior(mu1, t, cap=cap)
            for p in bps:
                if ple.get(p.row, 0) and ple.get(p.col, 0):
                    if not p.is_symmetric() or is_single_type(p.row, t, cap=cap) is None:
                        ok = False
        if ok:
            return True
    return False


def shape_relations_deg3(t: int, m: int, n: int, cap: Optional[int] = None) -> list[BiShape]:
    """Degree-3 shape relations fitting an ``m x n`` matrix, found by search."""
    if t < 1:
        raise ValueError("t must be positive")
    found = []
    shapes = admissible_partitions(t, 3)
    for g in shapes:
        if part(g, 0) > m:
            continue
        for lam in shapes:
            if part(lam, 0) > n or g == lam:
                continue
            b = BiShape(g, lam)
            if is_shape_relation(b, t, cap=cap):
                found.append(b)
    return sorted(found, reverse=True)
