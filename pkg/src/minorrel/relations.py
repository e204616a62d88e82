"""Explicit relations between t-minors.

A :class:`MinorPolynomial` is an integer combination of monomials in minor
symbols.  A symbol is a pair ``(I, J)`` of strictly increasing index tuples
and a monomial is a sorted tuple of symbols (with repetition).  Monomials are
ordered lexicographically on the row tuple first, then the column tuple.
"""

from __future__ import annotations

import re
from itertools import combinations, permutations
from math import gcd
from typing import Iterable, Sequence

from .multilinear import blocks_sign, canonical_ext
from .partitions import BiShape, partition, transpose


def symbol(rows: Sequence[int], cols: Sequence[int]) -> tuple[tuple, int]:
    """Canonical minor symbol and the sign from sorting its indices (0 if degenerate)."""
    r, s1 = canonical_ext(rows)
    c, s2 = canonical_ext(cols)
    if r is None or c is None:
        return None, 0
    return (r, c), s1 * s2


class MinorPolynomial:
    """Sparse integer polynomial in the minor symbols ``[I|J]`` of size ``t``."""

    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms=None):
        self.t = t
        clean = {}
        for k, v in dict(terms or {}).items():
            if not v:
                continue
            k = tuple(sorted(k))
            for i, j in k:
                if len(i) != t or len(j) != t:
                    raise ValueError(f"symbol {i}|{j} is not a {t}-minor")
            clean[k] = clean.get(k, 0) + v
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_products(cls, t: int, products: Iterable) -> "MinorPolynomial":
        """Build from ``(coeff, [(rows, cols), ...])`` with unsorted index lists."""
        acc: dict = {}
        for coeff, syms in products:
            key, sign = [], coeff
            for rows, cols in syms:
                s, e = symbol(rows, cols)
                if s is None:
                    sign = 0
                    break
                key.append(s)
                sign *= e
            if sign:
                k = tuple(sorted(key))
                acc[k] = acc.get(k, 0) + sign
        return cls(t, acc)

    def degree(self):
        for k in self.terms:
            return len(k)
        return None

    def __add__(self, other):
        if self.t != other.t and self.terms and other.terms:
            raise ValueError("minor sizes differ")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MinorPolynomial(self.t or other.t, out)

    def __neg__(self):
        return MinorPolynomial(self.t, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c: int):
        return MinorPolynomial(self.t, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MinorPolynomial) and self.terms == other.terms and (
            self.t == other.t or not self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def normalized(self) -> "MinorPolynomial":
        """Coprime integer coefficients, positive on the smallest monomial."""
        if not self.terms:
            return self
        g = 0
        for v in self.terms.values():
            g = gcd(g, v)
        lead = self.terms[min(self.terms)]
        if lead < 0:
            g = -g
        return MinorPolynomial(self.t, {k: v // g for k, v in self.terms.items()})

    def mirror(self) -> "MinorPolynomial":
        return MinorPolynomial(self.t, {tuple((j, i) for i, j in k): v
                                        for k, v in self.terms.items()})

    def max_indices(self) -> tuple[int, int]:
        m = n = 0
        for k in self.terms:
            for i, j in k:
                m, n = max(m, i[-1] if i else 0), max(n, j[-1] if j else 0)
        return m, n

    def to_text(self) -> str:
        return format_polynomial(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MinorPolynomial(t={self.t}, {len(self.terms)} terms)"


# --- text format -------------------------------------------------------------

def _fmt_symbol(s) -> str:
    i, j = s
    return "[" + ",".join(map(str, i)) + "|" + ",".join(map(str, j)) + "]"


def format_polynomial(p: MinorPolynomial) -> str:
    """``c * [i,..|j,..][..] + c * ...``; the zero polynomial prints as ``0``."""
    if not p.terms:
        return "0"
    out = []
    for n, (k, v) in enumerate(p.items()):
        body = "".join(_fmt_symbol(s) for s in k)
        if n == 0:
            out.append(f"{v} * {body}")
        else:
            out.append(f" {'+' if v > 0 else '-'} {abs(v)} * {body}")
    return "".join(out)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*)?\s*((?:\[[^\]]*\])+)\s*")
_SYM = re.compile(r"\[([\d,\s]*)\|([\d,\s]*)\]")


def parse_polynomial(text: str, t: int = None) -> MinorPolynomial:
    """Inverse of :func:`format_polynomial`; unsorted symbols pick up their sign.

    A missing ``c *`` means coefficient 1.
    """
    text = text.strip()
    if text == "0":
        return MinorPolynomial(t or 0)
    pos, products = 0, []
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        sign_txt, coeff, syms = m.groups()
        if sign_txt is None and not first:
            raise ValueError("terms after the first must be joined by ' + ' or ' - '")
        c = int(coeff or 1) * (-1 if sign_txt == "-" else 1)
        sl = []
        for r, cl in _SYM.findall(syms):
            rows = [int(x) for x in r.split(",") if x.strip()]
            cols = [int(x) for x in cl.split(",") if x.strip()]
            if t is None:
                t = len(rows)
            sl.append((rows, cols))
        products.append((c, sl))
        pos = m.end()
        first = False
    return MinorPolynomial.from_products(t, products)


# --- set partitions --------------------------------------------------------------

def ordered_partitions(ground: Sequence[int], sizes: Sequence[int]):
    """All ordered set partitions of ``ground`` into blocks of the given sizes."""
    ground = tuple(sorted(ground))
    if not sizes:
        if not ground:
            yield ()
        return
    for first in combinations(ground, sizes[0]):
        rest = tuple(x for x in ground if x not in first)
        for tail in ordered_partitions(rest, sizes[1:]):
            yield (first,) + tail


def _interval(a: int, b: int) -> tuple:
    return tuple(range(a, b + 1))


def _minus(k, a):
    return tuple(x for x in k if x not in a)


# --- constructors --------------------------------------------------------------

def quadratic_relation(t: int, u: int, v: int) -> MinorPolynomial:
    """Highest bi-weight vector of ``(tau_u | tau_v)`` in the degree-2 relations."""
    if not (0 <= u <= t and 0 <= v <= t):
        raise ValueError(f"need 0 <= u, v <= t, got u={u}, v={v}, t={t}")
    if (u + v) % 2 or u == v:
        raise ValueError(f"need u+v even and u != v, got u={u}, v={v}")
    P, Q = _interval(1, t - u), _interval(1, t - v)
    rows = list(ordered_partitions(_interval(t - u + 1, t + u), (u, u)))
    cols = list(ordered_partitions(_interval(t - v + 1, t + v), (v, v)))
    products = []
    for I, J in rows:
        for H, K in cols:
            # each monomial shows up twice; keep one copy
            if (u and not I < J) or (not u and not H < K):
                continue
            sign = blocks_sign(I, J) * blocks_sign(H, K)
            products.append((sign, [(P + I, Q + H), (P + J, Q + K)]))
    return MinorPolynomial.from_products(t, products).normalized()


def even_cubic(t: int, u: int) -> MinorPolynomial:
    """Highest bi-weight vector of the even cubic ``((t+u,t+u,t-2u) | (t+2u,t-u,t-u))``."""
    if not 1 <= u <= t // 2:
        raise ValueError(f"need 1 <= u <= t/2, got u={u}, t={t}")
    K = _interval(t - 2 * u + 1, t + u)
    P, Q = _interval(1, t - 2 * u), _interval(1, t - u)
    cols = list(ordered_partitions(_interval(t - u + 1, t + 2 * u), (u, u, u)))
    products = []
    for A, B, C in ordered_partitions(K, (u, u, u)):
        if not A < B < C:
            continue
        sa = blocks_sign(A, B, C)
        for L, M, N in cols:
            products.append((sa * blocks_sign(L, M, N),
                             [(P + _minus(K, A), Q + L), (P + _minus(K, B), Q + M),
                              (P + _minus(K, C), Q + N)]))
    return MinorPolynomial.from_products(t, products).normalized()


def _odd_factor(base, blocks_ground, sizes, extra, first_pos, eps):
    """``x_1 + eps * x_2`` where ``x_2`` swaps the first two factors of ``x_1``.

    ``x_1`` runs over ordered partitions ``(X, Y, Z)`` of ``blocks_ground``;
    ``extra`` is appended to the factor in position ``first_pos``.
    """
    from .multilinear import TensorElem, ext

    out = TensorElem.zero("ext")
    for X, Y, Z in ordered_partitions(blocks_ground, sizes):
        s = blocks_sign(X, Y, Z)
        f = [base + a for a in (X, Y, Z)]
        for p in first_pos:
            f[p] = f[p] + extra
        out = out + ext(*f, coeff=s) + ext(f[1], f[0], f[2], coeff=eps * s)
    return out


def odd_cubic(t: int, u: int) -> MinorPolynomial:
    """Highest bi-weight vector of the odd cubic
    ``((t+u, t+u-1, t-2u+1) | (t+2u-1, t-u+1, t-u))``.

    Built by pairing the row invariant with the column invariant factor by
    factor and passing to the symmetric algebra.  The second summand of each
    invariant carries the sign ``(-1)^u``; with a constant minus sign the
    factors are not U-invariant for even ``u``.
    """
    from .multilinear import bi_tensor, symmetrize

    if not 2 <= u <= (t + 1) // 2:
        raise ValueError(f"need 2 <= u <= ceil(t/2), got u={u}, t={t}")
    K = _interval(t - 2 * u + 2, t + u - 1)
    P, Q = _interval(1, t - 2 * u + 1), _interval(1, t - u)
    eps = (-1) ** u
    # row side: complements of (A, B, C) in K, with t+u joined to the middle one
    row = _odd_factor((), K, (u - 1, u, u - 1), (), (), eps)
    row = _complement_factors(row, P, K, t + u)
    col = _odd_factor(Q, _interval(t - u + 2, t + 2 * u - 1), (u - 1, u, u - 1),
                      (t - u + 1,), (0, 2), eps)
    return symmetrize(bi_tensor(row, col)).normalized()


def _complement_factors(v, P, K, extra):
    """Replace each factor ``X`` by ``P + (K minus X)``, adding ``extra`` where ``|X| = u``."""
    from .multilinear import TensorElem, canonical_ext

    out: dict = {}
    for key, c in v.terms.items():
        sizes = [len(x) for x in key]
        big = max(sizes)
        new, sign = [], c
        for x in key:
            f = P + _minus(K, x) + ((extra,) if len(x) == big else ())
            srt, s = canonical_ext(f)
            new.append(srt)
            sign *= s
        k = tuple(new)
        out[k] = out.get(k, 0) + sign
    return TensorElem(out, "ext")


def mirror(p: MinorPolynomial) -> MinorPolynomial:
    return p.mirror()


# --- determinantal relations ---------------------------------------------------

def validate_initial_segment(seg: Sequence[Sequence[int]]) -> bool:
    """True iff every member's componentwise predecessors come earlier."""
    seg = [tuple(s) for s in seg]
    if not seg:
        return True
    t = len(seg[0])
    for s in seg:
        if len(s) != t or list(s) != sorted(set(s)) or (s and s[0] < 1):
            return False
    seen = set()
    for s in seg:
        # the covering elements below s: decrease one entry by one
        for i in range(t):
            lower = s[i] - 1
            if lower < 1 or (i > 0 and lower == s[i - 1]):
                continue
            below = s[:i] + (lower,) + s[i + 1:]
            if below not in seen:
                return False
        seen.add(s)
    return len(seen) == len(seg)


def segment_shape(seg: Sequence[Sequence[int]]):
    """Shape induced by a segment: transpose of its content vector."""
    cnt: dict = {}
    for s in seg:
        for x in s:
            cnt[x] = cnt.get(x, 0) + 1
    content = [cnt.get(i, 0) for i in range(1, max(cnt, default=0) + 1)]
    if any(content[i] < content[i + 1] for i in range(len(content) - 1)):
        raise ValueError(f"segment content {content} is not a partition")
    return transpose(partition(content))


def determinantal_shape(row_seg, col_seg) -> BiShape:
    return BiShape(segment_shape(row_seg), segment_shape(col_seg))


def determinantal_relation(t: int, row_seg, col_seg) -> MinorPolynomial:
    """Determinant of the matrix ``([row_seg[a] | col_seg[b]])_{a,b}``."""
    row_seg = [tuple(s) for s in row_seg]
    col_seg = [tuple(s) for s in col_seg]
    if len(row_seg) != len(col_seg):
        raise ValueError("segments have different lengths")
    for name, seg in (("row", row_seg), ("column", col_seg)):
        if any(len(s) != t for s in seg):
            raise ValueError(f"{name} segment entries must be {t}-subsets")
        if not validate_initial_segment(seg):
            raise ValueError(f"{name} segment is not downward closed")
    shape = determinantal_shape(row_seg, col_seg)
    if shape.is_symmetric():
        raise ValueError(f"not a relation: induced bi-shape {shape} is symmetric")
    d = len(row_seg)
    acc: dict = {}
    for perm in permutations(range(d)):
        key = tuple(sorted((row_seg[a], col_seg[perm[a]]) for a in range(d)))
        sgn = blocks_sign(perm)
        acc[key] = acc.get(key, 0) + sgn
    return MinorPolynomial(t, acc).normalized()


# --- the standard generator families -------------------------------------------

def tau_shape(t: int, u: int):
    return partition((t + u, t - u))
