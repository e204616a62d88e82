"""Sparse exact tensors: Young symmetrizers, successor lifts, projections to
tensor powers of exterior powers, U-invariance and weights.

A :class:`TensorElem` has one of three kinds:

``"tensor"``  keys are tuples of vector indices, an element of the N-fold tensor power of V.
``"ext"``     keys are tuples of strictly increasing index tuples (ExtIndex), one per factor.
``"bi"``      keys are tuples of pairs ``(I, J)`` of ExtIndex values, one per factor of E (x) F*.

Indices are 1-based.  Tableaux are tuples of row tuples.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Optional

from .partitions import Partition, is_pieri_pair, partition, size, transpose

KINDS = ("tensor", "ext", "bi")


def perm_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (entries must be distinct)."""
    seq = list(seq)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def canonical_ext(indices) -> tuple[Optional[tuple], int]:
    """Sort an exterior monomial: ``(sorted, sign)``, or ``(None, 0)`` on a repeat."""
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        return None, 0
    return tuple(sorted(idx)), perm_sign(idx)


def blocks_sign(*blocks) -> int:
    """Sign of the permutation that sorts the concatenation of disjoint blocks."""
    return perm_sign([x for b in blocks for x in b])


class TensorElem:
    """Immutable sparse integer combination of canonical multi-indices."""

    __slots__ = ("kind", "terms")

    def __init__(self, terms, kind: str = "tensor"):
        if kind not in KINDS:
            raise ValueError(f"unknown tensor kind {kind!r}")
        self.kind = kind
        self.terms = {k: v for k, v in dict(terms).items() if v}

    @classmethod
    def zero(cls, kind="tensor"):
        return cls({}, kind)

    def degree(self) -> Optional[int]:
        for k in self.terms:
            return len(k)
        return None

    def _check(self, other):
        if not isinstance(other, TensorElem) or other.kind != self.kind:
            raise TypeError("tensor kinds differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorElem(out, self.kind)

    def __neg__(self):
        return TensorElem({k: -v for k, v in self.terms.items()}, self.kind)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c: int):
        return TensorElem({k: c * v for k, v in self.terms.items()}, self.kind)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.kind == other.kind and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def dump(self) -> str:
        """One term per line: ``coeff  (i..|j..) (x) ...``."""
        lines = []
        for key, c in self.items():
            if self.kind == "tensor":
                body = " ⊗ ".join(f"({i})" for i in key)
            elif self.kind == "ext":
                body = " ⊗ ".join("(" + "".join(map(str, f)) + ")" for f in key)
            else:
                body = " ⊗ ".join("(" + "".join(map(str, i)) + "|" + "".join(map(str, j)) + ")"
                                  for i, j in key)
            lines.append(f"{c}  {body}")
        return "\n".join(lines)

    def __repr__(self):
        return f"TensorElem(kind={self.kind!r}, {len(self.terms)} terms)"


def tensor(*factors: int, coeff: int = 1) -> TensorElem:
    return TensorElem({tuple(factors): coeff}, "tensor")


def ext(*factors, coeff: int = 1) -> TensorElem:
    """Basis element ``e_I1 (x) ... (x) e_Id`` with each ``I`` sorted into canonical form."""
    key, sign = [], coeff
    for f in factors:
        c, s = canonical_ext(f)
        if c is None:
            return TensorElem.zero("ext")
        key.append(c)
        sign *= s
    return TensorElem({tuple(key): sign}, "ext")


# --- tableaux ----------------------------------------------------------------

def tableau_shape(tab) -> Partition:
    return partition(len(r) for r in tab)


def reading_tableau(shape: Partition) -> tuple:
    """Rows filled with ``1..N`` left to right, top to bottom."""
    out, c = [], 1
    for r in shape:
        out.append(tuple(range(c, c + r)))
        c += r
    return tuple(out)


def fd_tableau(shape: Partition, t: int) -> tuple:
    """Position tableau whose columns never put two boxes in one block of ``t``.

    Boxes are numbered column by column; box ``c`` lands in block ``c mod d``
    at slot ``c div d`` of that block.  Since every column has at most ``d``
    boxes, a column meets each block at most once, which keeps the block
    projection of the Young symmetrizer image nonzero.
    """
    shape = partition(shape)
    n = size(shape)
    if t < 1 or n % t:
        raise ValueError(f"shape {shape} is not a union of blocks of size {t}")
    d = n // t
    if len(shape) > d:
        raise ValueError(f"shape {shape} has more than d={d} rows")
    rows = [[0] * r for r in shape]
    c = 0
    for j, col_len in enumerate(transpose(shape)):
        for i in range(col_len):
            rows[i][j] = (c % d) * t + c // d + 1
            c += 1
    return tuple(tuple(r) for r in rows)


def _check_tableau(Lam, shape=None):
    Lam = tuple(tuple(r) for r in Lam)
    entries = sorted(x for r in Lam for x in r)
    if entries != list(range(1, len(entries) + 1)):
        raise ValueError("position tableau must have content (1,...,1)")
    if shape is not None and tableau_shape(Lam) != partition(shape):
        raise ValueError(f"tableau shape {tableau_shape(Lam)} does not match {partition(shape)}")
    return Lam


# --- Young symmetrizer -------------------------------------------------------

def _row_alternations(gam: tuple) -> dict:
    """Signed orderings of every row; empty if some row repeats an entry."""
    per_row = []
    for row in gam:
        if len(set(row)) != len(row):
            return {}
        per_row.append([(p, perm_sign(p) * perm_sign(row)) for p in permutations(sorted(row))])
    out = {}
    for combo in product(*per_row):
        sign = 1
        for _, s in combo:
            sign *= s
        out[tuple(p for p, _ in combo)] = sign
    return out


def _column_symmetrize(filling: tuple, shape: Partition) -> Counter:
    cols = transpose(shape)
    col_entries = [[filling[i][j] for i in range(cols[j])] for j in range(len(cols))]
    out: Counter = Counter()
    for combo in product(*(permutations(c) for c in col_entries)):
        rows = [[0] * r for r in shape]
        for j, col in enumerate(combo):
            for i, x in enumerate(col):
                rows[i][j] = x
        out[tuple(tuple(r) for r in rows)] += 1
    return out


@lru_cache(maxsize=4096)
def _young(Lam: tuple, gam: tuple) -> tuple:
    shape = tableau_shape(Lam)
    pos = {}
    for i, row in enumerate(Lam):
        for j, p in enumerate(row):
            pos[(i, j)] = p - 1
    n = len(pos)
    acc: dict = {}
    for filling, sign in _row_alternations(gam).items():
        for full, mult in _column_symmetrize(filling, shape).items():
            key = [0] * n
            for i, row in enumerate(full):
                for j, x in enumerate(row):
                    key[pos[(i, j)]] = x
            key = tuple(key)
            acc[key] = acc.get(key, 0) + sign * mult
    return tuple((k, v) for k, v in acc.items() if v)


def young_symmetrizer(Lam, Gam) -> TensorElem:
    """``Y_Lam(Gam)``: alternate the rows of ``Gam``, then symmetrize its columns.

    The entry in box ``(i, j)`` is written to tensor position ``Lam(i, j)``.
    """
    Lam = _check_tableau(Lam)
    Gam = tuple(tuple(r) for r in Gam)
    if tableau_shape(Gam) != tableau_shape(Lam) or any(len(a) != len(b) for a, b in zip(Lam, Gam)):
        raise ValueError("tableaux have different shapes")
    return TensorElem(dict(_young(Lam, Gam)), "tensor")


# --- successor lift ------------------------------------------------------------

def added_boxes(lam: Partition, gam: Partition) -> list[tuple[int, list[int]]]:
    """Rows (0-based) gaining boxes, with the 1-based columns added in each."""
    out = []
    for i in range(len(gam)):
        a = lam[i] if i < len(lam) else 0
        if gam[i] > a:
            out.append((i, list(range(a + 1, gam[i] + 1))))
    return out


def lift_plan(lam: Partition, gam: Partition):
    """``(g, thresholds, tail)`` for the lift from ``lam`` to ``gam``.

    ``pi`` runs over the permutations of ``1..g``.  In row ``i`` (0-based) of
    the tableau every column ``j > thresholds[i]`` is replaced by ``pi(j)``, and
    the appended factor is ``e_pi(c)`` for ``c`` in ``tail``.
    """
    rows = added_boxes(lam, gam)
    g = gam[rows[0][0]]
    thresholds = {}
    for pos, (i, _) in enumerate(rows):
        thresholds[i] = gam[rows[pos + 1][0]] if pos + 1 < len(rows) else 0
    tail = [j for _, cols in reversed(rows) for j in cols]
    return g, thresholds, tail


def successor_lift(Lam, lam: Partition, gam: Partition, t: int) -> TensorElem:
    """Highest weight vector of a copy of ``L_gam V`` inside ``Y_Lam(V^N) (x) V^t``.

    ``gam`` must arise from ``lam`` by adding ``t`` boxes in distinct columns.
    In the ``l``-th row that gains boxes, the entries in columns beyond ``gam``
    of the next such row are replaced by ``pi(j)``; the appended factor lists
    the lowest new boxes first.
    """
    lam, gam = partition(lam), partition(gam)
    Lam = _check_tableau(Lam, lam)
    if not is_pieri_pair(lam, gam, t):
        raise ValueError(f"{gam} is not obtained from {lam} by adding {t} boxes in distinct columns")
    g, thresholds, tail_cols = lift_plan(lam, gam)

    grouped: dict = {}
    for pi in permutations(range(1, g + 1)):
        sign = perm_sign(pi)
        T = []
        ok = True
        for i, r in enumerate(lam):
            th = thresholds.get(i)
            row = tuple(pi[j - 1] if th is not None and j > th else j for j in range(1, r + 1))
            srt, s = canonical_ext(row)
            if srt is None:
                ok = False
                break
            sign *= s
            T.append(srt)
        if not ok:
            continue
        key = (tuple(T), tuple(pi[j - 1] for j in tail_cols))
        grouped[key] = grouped.get(key, 0) + sign

    by_tab: dict = {}
    for (T, tail), c in grouped.items():
        if c:
            by_tab.setdefault(T, []).append((tail, c))
    out: dict = {}
    for T, tails in by_tab.items():
        y = _young(Lam, T)
        for key, v in y:
            for tail, c in tails:
                k = key + tail
                out[k] = out.get(k, 0) + v * c
    return TensorElem(out, "tensor")


def project_fd(v: TensorElem, t: int) -> TensorElem:
    """Wedge consecutive blocks of ``t`` factors; repeated indices vanish."""
    if v.kind != "tensor":
        raise ValueError("project_fd expects a plain tensor")
    out: dict = {}
    for key, c in v.terms.items():
        if len(key) % t:
            raise ValueError(f"tensor length {len(key)} is not divisible by t={t}")
        new, sign = [], c
        for b in range(0, len(key), t):
            srt, s = canonical_ext(key[b:b + t])
            if srt is None:
                sign = 0
                break
            new.append(srt)
            sign *= s
        if sign:
            k = tuple(new)
            out[k] = out.get(k, 0) + sign
    return TensorElem(out, "ext")


def bi_tensor(row: TensorElem, col: TensorElem) -> TensorElem:
    """Pair factor ``i`` of ``row`` with factor ``i`` of ``col``."""
    if row.kind != "ext" or col.kind != "ext":
        raise ValueError("bi_tensor expects two exterior tensors")
    if row and col and row.degree() != col.degree():
        raise ValueError(f"degree mismatch: {row.degree()} vs {col.degree()}")
    out: dict = {}
    for k1, c1 in row.terms.items():
        for k2, c2 in col.terms.items():
            k = tuple(zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return TensorElem(out, "bi")


def symmetrize(v: TensorElem):
    """Image in the symmetric algebra: sort the factors of every term."""
    from .relations import MinorPolynomial

    if v.kind != "bi":
        raise ValueError("symmetrize expects a bi-tensor")
    out: dict = {}
    t = None
    for key, c in v.terms.items():
        k = tuple(sorted(key))
        out[k] = out.get(k, 0) + c
        if t is None and key:
            t = len(key[0][0])
    return MinorPolynomial(t or 0, out)


# --- U-invariance and weights -------------------------------------------------

def _factors(v):
    """Return (kind, terms) for a TensorElem or MinorPolynomial."""
    if isinstance(v, TensorElem):
        return v.kind, v.terms
    return "sym", v.terms


def _indices(kind, key, side):
    if kind == "tensor":
        return list(key)
    if kind == "ext":
        return [x for f in key for x in f]
    k = 0 if side == "row" else 1
    return [x for f in key for x in f[k]]


def _substitute(kind, key, a, b, side):
    """x-linear part of replacing index ``a`` by ``a + x b``: list of (key, sign)."""
    out = []
    if kind == "tensor":
        for p, x in enumerate(key):
            if x == a:
                out.append((key[:p] + (b,) + key[p + 1:], 1))
        return out
    if kind == "ext":
        for p, f in enumerate(key):
            if a in f:
                srt, s = canonical_ext(b if x == a else x for x in f)
                if srt is not None:
                    out.append((key[:p] + (srt,) + key[p + 1:], s))
        return out
    k = 0 if side == "row" else 1
    for p, pair in enumerate(key):
        f = pair[k]
        if a in f:
            srt, s = canonical_ext(b if x == a else x for x in f)
            if srt is None:
                continue
            new = (srt, pair[1]) if k == 0 else (pair[0], srt)
            nk = key[:p] + (new,) + key[p + 1:]
            if kind == "sym":
                nk = tuple(sorted(nk))
            out.append((nk, s))
    return out


def u_action(v, a: int, b: int, side: str = "row") -> dict:
    """x-linear coefficient of ``E_ab^x`` (``e_a -> e_a + x e_b``) applied to ``v``."""
    kind, terms = _factors(v)
    out: dict = {}
    for key, c in terms.items():
        for nk, s in _substitute(kind, key, a, b, side):
            out[nk] = out.get(nk, 0) + c * s
    return {k: x for k, x in out.items() if x}


def check_u_invariant(v, side: str = "row") -> bool:
    """True iff every lowering generator ``E_ab``, ``a > b``, fixes ``v``.

    ``v`` may be a TensorElem or a MinorPolynomial; ``side`` selects the row
    (E) or column (F*) indices for bi-tensors and polynomials.  Both sides use
    the same lower-index-preferred convention.
    """
    if side not in ("row", "col"):
        raise ValueError("side must be 'row' or 'col'")
    kind, terms = _factors(v)
    weight_of(v, side=side)
    present = set()
    for key in terms:
        present.update(_indices(kind, key, side))
    for a in sorted(present):
        for b in range(1, a):
            if u_action(v, a, b, side):
                return False
    return True


def _content(idx: Iterable[int], n: Optional[int]) -> tuple:
    cnt = Counter(idx)
    top = max(cnt, default=0)
    if n is not None:
        if top > n:
            raise ValueError(f"index {top} exceeds ambient dimension {n}")
        top = n
    return tuple(cnt.get(i, 0) for i in range(1, top + 1))


def weight_of(v, n: Optional[int] = None, side: Optional[str] = None):
    """Weight of a weight-homogeneous element.

    Plain and exterior tensors give the content vector.  Bi-tensors and
    polynomials give ``(row content, negated column content)``, or one side
    when ``side`` is given (the column side again negated).
    """
    kind, terms = _factors(v)
    if not terms:
        raise ValueError("the zero element has no weight")
    seen = None
    first = None
    for key in terms:
        if kind in ("tensor", "ext"):
            w = _content(_indices(kind, key, "row"), n)
        else:
            r = _content(_indices(kind, key, "row"), None)
            c = tuple(-x for x in _content(_indices(kind, key, "col"), None))
            w = (r, c)
        if seen is None:
            seen, first = w, key
        elif _strip(w) != _strip(seen):
            raise ValueError(f"mixed weights: {first} has {seen}, {key} has {w}")
    if kind in ("bi", "sym") and side is not None:
        return seen[0] if side == "row" else seen[1]
    return seen


def _strip(w):
    if w and isinstance(w[0], tuple):
        return tuple(_strip(x) for x in w)
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def weight_partition(w) -> Partition:
    """Read a (possibly negated) content vector as a partition."""
    return partition(abs(x) for x in w if x)
