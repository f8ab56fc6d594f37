"""Exact linear algebra over Q and GF(p).

Ranks and nullities drive every height, homology, and incidence computation
in this package, so everything here is exact: arbitrary-precision integers
and fractions, no floats. Over Q a matrix is scaled row by row to integers
and reduced by fraction-free (Bareiss) elimination; sparse integer matrices
first go through a unit-pivot elimination pass, which removes the bulk of
the rank without any coefficient growth and leaves Bareiss only a small
dense remainder (for simplicial boundary matrices the remainder is almost
always empty). Over GF(p) entries are reduced mod p and eliminated directly.

All functions are pure and deterministic: pivots are chosen by a fixed rule,
never randomly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import FieldError

_PRIME_CAP = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (p=None) or a prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if self.p >= _PRIME_CAP:
                raise FieldError(f"prime {self.p} exceeds the 2^31 cap")
            if not _is_prime(self.p):
                raise FieldError(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


#: The rational field, the default everywhere.
QQ = FieldSpec(None)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """Parse a CLI field spec: ``q`` or ``gf:p``."""
    t = text.strip().lower()
    if t == "q":
        return QQ
    if t.startswith("gf:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise FieldError(f"bad field spec {text!r}") from None
        return FieldSpec(p)
    raise FieldError(f"bad field spec {text!r} (expected 'q' or 'gf:p')")


class RationalMatrix:
    """Immutable dense matrix with exact rational entries (int or Fraction)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        rows = [tuple(row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        else:
            cols = 0 if cols is None else cols
        for r in rows:
            for x in r:
                if not isinstance(x, (int, Fraction)):
                    raise TypeError(f"entry {x!r} is not an exact rational")
        self.rows = len(rows)
        self.cols = cols
        self.entries = tuple(rows)

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.cols == other.cols
            and all(
                Fraction(a) == Fraction(b)
                for ra, rb in zip(self.entries, other.entries)
                for a, b in zip(ra, rb)
            )
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(Fraction(x) for x in r) for r in self.entries)))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )


def _integer_rows(matrix: RationalMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in matrix.entries:
        scale = 1
        for x in row:
            d = x.denominator
            scale = scale * d // gcd(scale, d)
        scaled = []
        for x in row:
            v = x * scale
            if v.denominator != 1:
                raise AssertionError("denominator survived row scaling")
            scaled.append(v.numerator)
        out.append(scaled)
    return out


def bareiss_rank(rows, check: bool = False) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Pivots are the first nonzero entry per column, rows scanned in order.
    With ``check=True`` every implied division is verified to be exact
    (Bareiss intermediates are determinants, hence integers).
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        pivot_row = None
        for i in range(rank, nr):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        p = m[rank][c]
        top = m[rank]
        for i in range(rank + 1, nr):
            row = m[i]
            mic = row[c]
            if mic == 0 and prev == 1:
                continue
            for j in range(c + 1, nc):
                num = row[j] * p - mic * top[j]
                if check and num % prev:
                    raise AssertionError("non-integer Bareiss intermediate")
                row[j] = num // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def _sparse_from_dense(rows) -> list[dict[int, int]]:
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


def rank_int_sparse(sparse_rows: list[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows.

    Unit (+-1) pivots are eliminated first -- shortest live row first (lazy
    heap), breaking ties toward the sparsest column -- which keeps the
    arithmetic integral with no coefficient growth. Whatever ends up
    unit-free goes to dense Bareiss elimination; any prefix of exact row
    eliminations preserves the rank, so the split is a pure optimization.
    """
    rows: dict[int, dict[int, int]] = {
        i: dict(r) for i, r in enumerate(sparse_rows) if r
    }
    col_rows: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)

    heap = [(len(r), i) for i, r in rows.items()]
    heapq.heapify(heap)
    no_unit: set[int] = set()
    rank = 0
    while heap:
        length, pi = heapq.heappop(heap)
        row = rows.get(pi)
        if row is None or len(row) != length or pi in no_unit:
            continue
        best = None
        for j, v in row.items():
            if v == 1 or v == -1:
                key = (len(col_rows[j]), j)
                if best is None or key < best:
                    best = key
        if best is None:
            no_unit.add(pi)
            continue
        pj = best[1]
        pivot_row = rows.pop(pi)
        s = pivot_row[pj]
        for j in pivot_row:
            col_rows[j].discard(pi)
        for i in sorted(col_rows.get(pj, ())):
            r = rows[i]
            f = r[pj] * s
            for j, v in pivot_row.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    if j not in r:
                        col_rows.setdefault(j, set()).add(i)
                    r[j] = nv
                elif j in r:
                    del r[j]
                    col_rows[j].discard(i)
            if not r:
                del rows[i]
            else:
                no_unit.discard(i)
                heapq.heappush(heap, (len(r), i))
        col_rows.pop(pj, None)
        rank += 1

    if rows:
        live_cols = sorted({j for r in rows.values() for j in r})
        col_of = {j: k for k, j in enumerate(live_cols)}
        dense = []
        for i in sorted(rows):
            row = [0] * len(live_cols)
            for j, v in rows[i].items():
                row[col_of[j]] = v
            dense.append(row)
        rank += bareiss_rank(dense)
    return rank


def _mod_p_rows(matrix: RationalMatrix, p: int) -> list[dict[int, int]]:
    out = []
    for row in matrix.entries:
        sp = {}
        for j, x in enumerate(row):
            den = x.denominator
            if den % p == 0:
                raise FieldError(
                    f"cannot reduce {x} mod {p}: {p} divides the denominator"
                )
            v = (x.numerator % p) * pow(den % p, -1, p) % p
            if v:
                sp[j] = v
        out.append(sp)
    return out


def rank_mod_p_sparse(sparse_rows: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p): sparse elimination, shortest live row first."""
    rows: dict[int, dict[int, int]] = {
        i: dict(r) for i, r in enumerate(sparse_rows) if r
    }
    col_rows: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)

    heap = [(len(r), i) for i, r in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, pi = heapq.heappop(heap)
        row = rows.get(pi)
        if row is None or len(row) != length:
            continue
        pj = min(row, key=lambda j: (len(col_rows[j]), j))
        pivot_row = rows.pop(pi)
        inv = pow(pivot_row[pj], -1, p)
        for j in pivot_row:
            col_rows[j].discard(pi)
        for i in sorted(col_rows.get(pj, ())):
            r = rows[i]
            f = r[pj] * inv % p
            for j, v in pivot_row.items():
                nv = (r.get(j, 0) - f * v) % p
                if nv:
                    if j not in r:
                        col_rows.setdefault(j, set()).add(i)
                    r[j] = nv
                elif j in r:
                    del r[j]
                    col_rows[j].discard(i)
            if not r:
                del rows[i]
            else:
                heapq.heappush(heap, (len(r), i))
        col_rows.pop(pj, None)
        rank += 1
    return rank


def rank(matrix: RationalMatrix, field: FieldSpec = QQ) -> int:
    """Rank of the matrix over the given field."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if field.is_rationals:
        return rank_int_sparse(_sparse_from_dense(_integer_rows(matrix)))
    return rank_mod_p_sparse(_mod_p_rows(matrix, field.p), field.p)


def nullity(matrix: RationalMatrix, field: FieldSpec = QQ) -> int:
    """Dimension of the kernel: cols - rank."""
    return matrix.cols - rank(matrix, field)


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row echelon form over Q, with the pivot column indices."""
    m = [[Fraction(x) for x in row] for row in matrix.entries]
    nr, nc = matrix.rows, matrix.cols
    pivots = []
    r = 0
    for c in range(nc):
        pivot_row = None
        for i in range(r, nr):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return RationalMatrix(m, cols=nc), tuple(pivots)


def nullspace(matrix: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel (one vector per free column)."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * matrix.cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -Fraction(reduced.entries[r][fc])
        basis.append(tuple(vec))
    return basis
