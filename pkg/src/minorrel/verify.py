"""Checking relations, brute-force dimension counts and the minimality pipeline."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb
from typing import Optional

from . import linalg
from .multilinear import (
    bi_tensor,
    fd_tableau,
    perm_sign,
    project_fd,
    successor_lift,
    symmetrize,
    u_action,
)
from .partitions import (
    BiShape,
    admissible_degree,
    bi_predecessors,
    is_pieri_pair,
    part,
    size,
    transpose,
)
from .relations import (
    MinorPolynomial,
    even_cubic,
    format_polynomial,
    mirror,
    odd_cubic,
    quadratic_relation,
)
from .symfunc import mult_in_J

PROBE_PRIME = (1 << 61) - 1
BRUTE_CAP = 20000
EXHAUSTIVE_CAP = 5000


class BruteCapExceeded(ValueError):
    pass


# --- polynomials in the matrix entries ------------------------------------------------

class XPolynomial:
    """Integer polynomial in the entries ``x_ij`` of an ``m x n`` matrix.

    A monomial is the sorted tuple of its variables ``(i, j)``, with repetition.
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms=None):
        self.m, self.n = m, n
        self.terms = {k: v for k, v in dict(terms or {}).items() if v}

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, XPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items()):
            mono = "*".join(f"x{i}_{j}" for i, j in k)
            parts.append(f"{v:+d}*{mono}")
        return " ".join(parts)


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple(sorted(k1 + k2))
            nv = out.get(k, 0) + v1 * v2
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


@lru_cache(maxsize=65536)
def _minor_terms(rows: tuple, cols: tuple) -> tuple:
    out = []
    for p in permutations(range(len(cols))):
        key = tuple(sorted((rows[a], cols[p[a]]) for a in range(len(rows))))
        out.append((key, perm_sign(p)))
    return tuple(out)


def _check_fit(syms, m: int, n: int):
    for i, j in syms:
        if (i and (i[-1] > m or i[0] < 1)) or (j and (j[-1] > n or j[0] < 1)):
            raise ValueError(f"minor [{i}|{j}] does not fit a {m}x{n} matrix")


def expand_minor(s, m: int, n: int) -> XPolynomial:
    """Leibniz expansion of the minor symbol ``s = (rows, cols)``."""
    rows, cols = tuple(s[0]), tuple(s[1])
    if len(rows) != len(cols):
        raise ValueError("a minor needs as many rows as columns")
    _check_fit([(rows, cols)], m, n)
    return XPolynomial(m, n, dict(_minor_terms(rows, cols)))


def _expand_trie(monos: list, depth: int) -> dict:
    """Expand ``sum c * s_1 ... s_d``; monomials sharing a prefix share work."""
    if all(len(k) == depth + 1 for k, _ in monos):
        acc: dict = {}
        for k, c in monos:
            for key, s in _minor_terms(*k[depth]):
                nv = acc.get(key, 0) + c * s
                if nv:
                    acc[key] = nv
                else:
                    acc.pop(key, None)
        return acc
    groups: dict = {}
    for k, c in monos:
        groups.setdefault(k[depth], []).append((k, c))
    out: dict = {}
    for s, sub in groups.items():
        inner = _expand_trie(sub, depth + 1)
        if not inner:
            continue
        for key, v in _mul(dict(_minor_terms(*s)), inner).items():
            nv = out.get(key, 0) + v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def expand_relation(p: MinorPolynomial, m: int, n: int) -> XPolynomial:
    """Substitute the determinant for every minor symbol."""
    for k in p.terms:
        _check_fit(k, m, n)
    monos = [(k, c) for k, c in p.items() if k]
    const = p.terms.get((), 0)
    out = _expand_trie(monos, 0) if monos else {}
    if const:
        out[()] = out.get((), 0) + const
    return XPolynomial(m, n, out)


def is_relation(p: MinorPolynomial, m: int, n: int) -> bool:
    """True iff ``p`` vanishes identically on the generic ``m x n`` matrix."""
    return not expand_relation(p, m, n)


def _det_mod(mat: list, p: int) -> int:
    mat = [row[:] for row in mat]
    k = len(mat)
    det = 1
    for c in range(k):
        piv = next((r for r in range(c, k) if mat[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det = det * mat[c][c] % p
        inv = pow(mat[c][c], -1, p)
        for r in range(c + 1, k):
            f = mat[r][c] * inv % p
            if f:
                for j in range(c, k):
                    mat[r][j] = (mat[r][j] - f * mat[c][j]) % p
    return det % p


def random_probe(p: MinorPolynomial, m: int, n: int, trials: int = 3, seed: int = 0) -> bool:
    """Evaluate ``p`` at seeded random matrices modulo ``2^61 - 1``.

    False means ``p`` is certainly not a relation; True is correct with error
    probability at most ``(deg/prime)^trials``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    for k in p.terms:
        _check_fit(k, m, n)
    rng = random.Random(seed)
    q = PROBE_PRIME
    for _ in range(trials):
        X = [[rng.randrange(q) for _ in range(n)] for _ in range(m)]
        cache: dict = {}
        total = 0
        for k, c in p.terms.items():
            val = c % q
            for s in k:
                if s not in cache:
                    rows, cols = s
                    cache[s] = _det_mod([[X[i - 1][j - 1] for j in cols] for i in rows], q)
                val = val * cache[s] % q
                if not val:
                    break
            total = (total + val) % q
        if total:
            return False
    return True


# --- brute-force Hilbert function --------------------------------------------------------

def all_minors(t: int, m: int, n: int) -> list:
    return [(i, j) for i in combinations(range(1, m + 1), t)
            for j in combinations(range(1, n + 1), t)]


def _bi_content(mono) -> tuple:
    rows = tuple(sorted(x for i, _ in mono for x in i))
    cols = tuple(sorted(x for _, j in mono for x in j))
    return rows, cols


def brute_dim_At(t: int, m: int, n: int, d: int, cap: int = BRUTE_CAP) -> int:
    """Dimension of the degree-``d`` part of the algebra generated by the ``t``-minors.

    Computed as the exact rank of the expanded degree-``d`` monomials in the
    minors.  Monomials of different bi-content expand into disjoint sets of
    ``x``-monomials, so the rank is summed block by block.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if t > min(m, n):
        return 1 if d == 0 else 0
    if d == 0:
        return 1
    minors = all_minors(t, m, n)
    count = comb(len(minors) + d - 1, d)
    if count > cap:
        raise BruteCapExceeded(f"{count} monomials exceed the cap {cap}")
    blocks: dict = {}
    for mono in combinations_with_replacement(minors, d):
        blocks.setdefault(_bi_content(mono), []).append(mono)
    total = 0
    for monos in blocks.values():
        prefix: dict = {(): {(): 1}}
        rows = []
        for mono in monos:
            for ell in range(1, d + 1):
                key = mono[:ell]
                if key not in prefix:
                    prefix[key] = _mul(prefix[mono[:ell - 1]], dict(_minor_terms(*mono[ell - 1])))
            rows.append(prefix[mono])
        total += linalg.rank(rows)
    return total


# --- derivation of invariants -----------------------------------------------------

def _block_ok(tab, t: int) -> bool:
    for col in zip(*_columns(tab)):
        pass
    for col in _columns(tab):
        blocks = [(p - 1) // t for p in col]
        if len(set(blocks)) != len(blocks):
            return False
    return True


def _columns(tab):
    width = len(tab[0]) if tab else 0
    return [[row[j] for row in tab if j < len(row)] for j in range(width)]


def tableau_candidates(shape, t: int, limit: int):
    """The column-cycled tableau first, then single swaps that keep blocks column-free."""
    if limit < 1:
        return
    base = fd_tableau(shape, t)
    yield base
    produced = 1
    boxes = [(i, j) for i, row in enumerate(base) for j in range(len(row))]
    for a, b in combinations(boxes, 2):
        if produced >= limit:
            return
        if a[1] == b[1]:
            continue
        rows = [list(r) for r in base]
        rows[a[0]][a[1]], rows[b[0]][b[1]] = rows[b[0]][b[1]], rows[a[0]][a[1]]
        cand = tuple(tuple(r) for r in rows)
        if _block_ok(cand, t):
            produced += 1
            yield cand


def derive_invariant(src: BiShape, dst: BiShape, t: int, row_tab=None, col_tab=None) -> MinorPolynomial:
    """Lift a copy of ``src`` in the relations to a U-invariant of ``dst`` one degree up.

    The result lies in ``(S_t)_1 * (J_t)_{d-1}`` and has the bi-weight of
    ``dst``; it may be zero for an unlucky choice of tableaux.
    """
    src, dst = BiShape(*src), BiShape(*dst)
    if not (is_pieri_pair(src.row, dst.row, t) and is_pieri_pair(src.col, dst.col, t)):
        raise ValueError(f"{dst} is not a bi-successor of {src}")
    if src.is_symmetric():
        raise ValueError(f"source {src} is symmetric; its copies need not be relations")
    d = admissible_degree(src.row, t)
    if d is None or admissible_degree(src.col, t) != d:
        raise ValueError(f"{src} is not an admissible bi-shape for t={t}")
    row_tab = row_tab or fd_tableau(src.row, t)
    col_tab = col_tab or fd_tableau(src.col, t)
    r = project_fd(successor_lift(row_tab, src.row, dst.row, t), t)
    c = project_fd(successor_lift(col_tab, src.col, dst.col, t), t)
    return symmetrize(bi_tensor(r, c)).normalized()


@dataclass
class MinimalityVerdict:
    bishape: BiShape
    degree: int
    status: str
    rank_found: int
    rank_needed: int
    witnesses: list = field(default_factory=list)
    method: str = ""

    def to_json(self) -> dict:
        return {
            "bishape": self.bishape.to_json(),
            "degree": self.degree,
            "status": self.status,
            "rank_found": self.rank_found,
            "rank_needed": self.rank_needed,
            "method": self.method,
            "witnesses": self.witnesses,
        }


def is_degenerate(t: int, m: int, n: int) -> Optional[str]:
    """Which of the easy situations applies: ``"t=1"``, ``"small"``, ``"grassmannian"``."""
    lo, hi = min(m, n), max(m, n)
    if t == 1:
        return "t=1"
    if hi <= t + 1:
        return "small"
    if t == lo:
        return "grassmannian"
    return None


def _poly_rank(polys) -> int:
    return linalg.rank(dict(p.terms) for p in polys)


def _symbols_within(t: int, rc: dict, cc: dict):
    rows = sorted(i for i, k in rc.items() if k > 0)
    cols = sorted(j for j, k in cc.items() if k > 0)
    for i in combinations(rows, t):
        for j in combinations(cols, t):
            yield (i, j)


def _sub(content: dict, idx) -> Optional[dict]:
    out = dict(content)
    for x in idx:
        if out.get(x, 0) <= 0:
            return None
        out[x] -= 1
    return out


def weight_monomials(t: int, rc: dict, cc: dict, d: int) -> list:
    """All degree-``d`` monomials in ``t``-minors with row content ``rc`` and column content ``cc``."""
    syms = sorted(_symbols_within(t, rc, cc))
    out = []

    def rec(start, r, c, acc):
        if len(acc) == d:
            if not any(r.values()) and not any(c.values()):
                out.append(tuple(acc))
            return
        for k in range(start, len(syms)):
            i, j = syms[k]
            r2 = _sub(r, i)
            if r2 is None:
                continue
            c2 = _sub(c, j)
            if c2 is None:
                continue
            acc.append(syms[k])
            rec(k, r2, c2, acc)
            acc.pop()

    rec(0, rc, cc, [])
    return out


def _relations_in_weight(t: int, rc: dict, cc: dict, d: int) -> list:
    """Integer basis of the degree-``d`` relations with the given bi-content."""
    monos = weight_monomials(t, rc, cc, d)
    if not monos:
        return []
    eqs: dict = {}
    for k, mono in enumerate(monos):
        exp = _expand_trie([(mono, 1)], 0)
        for x, v in exp.items():
            eqs.setdefault(x, {})[k] = v
    ker = linalg.kernel(list(eqs.values()), range(len(monos)))
    return [{monos[k]: v for k, v in vec.items()} for vec in ker]


def _content_dict(vec) -> dict:
    return {i + 1: x for i, x in enumerate(vec) if x}


def exhaustive_invariants(b: BiShape, t: int) -> int:
    """Dimension of the U-invariants of bi-weight ``b`` in ``(S_t)_1 * (J_t)_{d-1}``."""
    d = size(b.row) // t
    rc, cc = _content_dict(transpose(b.row)), _content_dict(transpose(b.col))
    products = []
    for s in _symbols_within(t, rc, cc):
        r2, c2 = _sub(rc, s[0]), _sub(cc, s[1])
        if r2 is None or c2 is None:
            continue
        for rel in _relations_in_weight(t, r2, c2, d - 1):
            products.append({tuple(sorted(mono + (s,))): v for mono, v in rel.items()})
    ech = linalg.Echelon()
    basis = [p for p in products if ech.add(p)]
    if not basis:
        return 0
    m0, n0 = max(rc), max(cc)
    eqs: dict = {}
    for k, vec in enumerate(basis):
        poly = MinorPolynomial(t, vec)
        for side, top in (("row", m0), ("col", n0)):
            for a in range(2, top + 1):
                for key, v in u_action(poly, a, a - 1, side).items():
                    eqs.setdefault((side, a, key), {})[k] = v
    ker = linalg.kernel(list(eqs.values()), range(len(basis)))
    return len(ker)


def minimality_check(b: BiShape, t: int, budget: int = 4, m: Optional[int] = None,
                     n: Optional[int] = None, max_degree: int = 4, max_td: int = 8,
                     cap: Optional[int] = None,
                     exhaustive_cap: int = EXHAUSTIVE_CAP) -> MinimalityVerdict:
    """Decide whether the relations of bi-shape ``b`` are minimal generators.

    First try to derive enough independent invariants from bi-predecessors that
    are relations themselves (``non_minimal`` on success).  Otherwise, within the
    size limits, compute the whole invariant space of ``(S_t)_1 (J_t)_{d-1}`` in
    the bi-weight of ``b``; fewer invariants than copies of ``b`` means
    ``minimal``.  Anything else is ``inconclusive``.
    """
    b = BiShape(*b)
    d = admissible_degree(b.row, t)
    if d is None or admissible_degree(b.col, t) != d:
        raise ValueError(f"{b} is not an admissible bi-shape for t={t}")
    m = part(b.row, 0) if m is None else m
    n = part(b.col, 0) if n is None else n
    if part(b.row, 0) > m or part(b.col, 0) > n:
        raise ValueError(f"{b} does not fit a {m}x{n} matrix")
    need = mult_in_J(b, t, cap=cap)
    if need == 0:
        raise ValueError(f"{b} does not occur in the relations for t={t}")
    kind = is_degenerate(t, m, n)
    if kind in ("t=1", "small"):
        raise ValueError(f"no relations exist for t={t} on a {m}x{n} matrix")
    if d <= 2:
        return MinimalityVerdict(b, d, "minimal", 0, need, [], "degree 2: no relations below")
    if kind == "grassmannian":
        return MinimalityVerdict(b, d, "non_minimal", need, need, [],
                                 "maximal minors: generated in degree 2")

    derived, witnesses = [], []
    ech = linalg.Echelon()
    for src in bi_predecessors(b, t):
        if src.is_symmetric() or mult_in_J(src, t, cap=cap) == 0:
            continue
        rows = list(tableau_candidates(src.row, t, budget))
        cols = list(tableau_candidates(src.col, t, budget))
        for rt in rows:
            for ct in cols:
                inv = derive_invariant(src, b, t, rt, ct)
                if inv and ech.add(dict(inv.terms)):
                    derived.append(inv)
                    witnesses.append({"source": src.to_json(),
                                      "row_tableau": [list(r) for r in rt],
                                      "col_tableau": [list(r) for r in ct],
                                      "terms": len(inv)})
                if len(ech) >= need:
                    break
            if len(ech) >= need:
                break
        if len(ech) >= need:
            break
    found = _poly_rank(derived)
    if found >= need:
        return MinimalityVerdict(b, d, "non_minimal", found, need, witnesses, "derived invariants")
    if d > max_degree or t * d > max_td:
        return MinimalityVerdict(b, d, "inconclusive", found, need, witnesses,
                                 "derivation budget exhausted")
    rc, cc = _content_dict(transpose(b.row)), _content_dict(transpose(b.col))
    size_ = len(weight_monomials(t, rc, cc, d))
    if size_ > exhaustive_cap:
        return MinimalityVerdict(b, d, "inconclusive", found, need, witnesses,
                                 f"weight space has {size_} monomials, over the cap {exhaustive_cap}")
    total = exhaustive_invariants(b, t)
    status = "minimal" if total < need else "non_minimal"
    return MinimalityVerdict(b, d, status, total, need, witnesses,
                             "exhaustive span of (S_t)_1 (J_t)_{d-1}")


# --- generator export ----------------------------------------------------------

def generator_family(t: int, m: int, n: int, degmax: int = 3) -> list:
    """``(label, polynomial)`` for every standard generator defined on an ``m x n`` matrix."""
    if t == 1 or max(m, n) <= t + 1 or t > min(m, n):
        return []
    out = []
    if degmax >= 2:
        for u in range(t + 1):
            for v in range(t + 1):
                if (u + v) % 2 == 0 and u != v and t + u <= m and t + v <= n:
                    out.append((f"f_{u},{v}", quadratic_relation(t, u, v)))
    if degmax >= 3:
        for u in range(1, t // 2 + 1):
            if t + u <= m and t + 2 * u <= n:
                out.append((f"g_{u}", even_cubic(t, u)))
            if t + 2 * u <= m and t + u <= n:
                out.append((f"g'_{u}", mirror(even_cubic(t, u))))
        for u in range(2, (t + 1) // 2 + 1):
            if t + u <= m and t + 2 * u - 1 <= n:
                out.append((f"h_{u}", odd_cubic(t, u)))
            if t + 2 * u - 1 <= m and t + u <= n:
                out.append((f"h'_{u}", mirror(odd_cubic(t, u))))
    return out


def export_generators(t: int, m: int, n: int, degmax: int = 3) -> str:
    """One polynomial per line in the plain-text minor format."""
    lines = [format_polynomial(p) for _, p in generator_family(t, m, n, degmax)]
    return "".join(line + "\n" for line in lines)
