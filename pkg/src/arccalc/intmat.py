"""
Sparse matrices over the integers and their Smith normal form.

Arithmetic is exact (Python integers), so invariant factors are trustworthy
at any coefficient size.  Pivoting prefers unit entries with least fill-in;
on the boundary matrices this package produces, pivots are almost always
unit, so coefficient growth never materializes in practice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator


class SparseIntMatrix:
    """Dict-of-rows integer matrix; stored entries are always nonzero."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimension")
        self.nrows = nrows
        self.ncols = ncols
        self._rows: list[dict[int, int]] = [{} for _ in range(nrows)]

    @classmethod
    def from_entries(
        cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, int]]
    ) -> "SparseIntMatrix":
        m = cls(nrows, ncols)
        for i, j, v in entries:
            m.add(i, j, v)
        return m

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        m = cls(n, n)
        for i in range(n):
            m._rows[i][i] = 1
        return m

    def get(self, i: int, j: int) -> int:
        self._check(i, j)
        return self._rows[i].get(j, 0)

    def set(self, i: int, j: int, v: int) -> None:
        self._check(i, j)
        if v:
            self._rows[i][j] = v
        else:
            self._rows[i].pop(j, None)

    def add(self, i: int, j: int, v: int) -> None:
        self.set(i, j, self._rows[i].get(j, 0) + v)

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"({i}, {j}) out of range for {self.nrows}x{self.ncols}")

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self._rows):
            for j, v in row.items():
                yield i, j, v

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return all(not r for r in self._rows)

    def copy(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.nrows, self.ncols)
        m._rows = [dict(r) for r in self._rows]
        return m

    def transpose(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.ncols, self.nrows)
        for i, j, v in self.entries():
            m._rows[j][i] = v
        return m

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = SparseIntMatrix(self.nrows, other.ncols)
        for i, row in enumerate(self._rows):
            acc: dict[int, int] = {}
            for k, v in row.items():
                for j, w in other._rows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out._rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SparseIntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def to_triples(self) -> str:
        """Header line ``{"rows": R, "cols": C}`` then ``row col value`` lines."""
        lines = [json.dumps({"rows": self.nrows, "cols": self.ncols}, sort_keys=True)]
        for i, j, v in sorted(self.entries()):
            lines.append(f"{i} {j} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triples(cls, text: str) -> "SparseIntMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty triple stream")
        header = json.loads(lines[0])
        m = cls(int(header["rows"]), int(header["cols"]))
        for ln in lines[1:]:
            i, j, v = ln.split()
            m.add(int(i), int(j), int(v))
        return m


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors ``d_1 | d_2 | ...`` with optional unimodular U, V."""

    invariant_factors: tuple[int, ...]
    rank: int
    U: SparseIntMatrix | None = None
    V: SparseIntMatrix | None = None

    def diagonal_matrix(self, nrows: int, ncols: int) -> SparseIntMatrix:
        d = SparseIntMatrix(nrows, ncols)
        for t, v in enumerate(self.invariant_factors):
            d.set(t, t, v)
        return d


class _Eliminator:
    """Row/column elimination state shared by the SNF passes."""

    def __init__(self, m: SparseIntMatrix, want_transforms: bool):
        self.nrows = m.nrows
        self.ncols = m.ncols
        self.rows: list[dict[int, int]] = [dict(r) for r in m._rows]
        self.col_rows: list[set[int]] = [set() for _ in range(m.ncols)]
        for i, row in enumerate(self.rows):
            for j in row:
                self.col_rows[j].add(i)
        # rows grouped by current length, so the pivot search starts at the
        # sparsest rows instead of scanning every entry
        self.done_rows: set[int] = set()
        self.row_bucket: list[int] = [len(r) for r in self.rows]
        self.buckets: dict[int, dict[int, None]] = {}
        for i, length in enumerate(self.row_bucket):
            self.buckets.setdefault(length, {})[i] = None
        self.u_rows: list[dict[int, int]] | None = None
        self.vt_rows: list[dict[int, int]] | None = None
        if want_transforms:
            self.u_rows = [{i: 1} for i in range(m.nrows)]
            self.vt_rows = [{j: 1} for j in range(m.ncols)]

    def _rebucket(self, i: int) -> None:
        if i in self.done_rows:
            return
        length = len(self.rows[i])
        old = self.row_bucket[i]
        if length != old:
            bucket = self.buckets[old]
            del bucket[i]
            if not bucket:
                del self.buckets[old]
            self.buckets.setdefault(length, {})[i] = None
            self.row_bucket[i] = length

    def retire_row(self, i: int) -> None:
        bucket = self.buckets[self.row_bucket[i]]
        del bucket[i]
        if not bucket:
            del self.buckets[self.row_bucket[i]]
        self.done_rows.add(i)

    # -- elementary operations; each keeps col_rows and transforms in sync --

    def row_op(self, dst: int, src: int, c: int) -> None:
        # row dst += c * row src
        rows, col_rows = self.rows, self.col_rows
        rdst, rsrc = rows[dst], rows[src]
        for j, v in rsrc.items():
            new = rdst.get(j, 0) + c * v
            if new:
                rdst[j] = new
                col_rows[j].add(dst)
            else:
                rdst.pop(j, None)
                col_rows[j].discard(dst)
        self._rebucket(dst)
        if self.u_rows is not None:
            udst, usrc = self.u_rows[dst], self.u_rows[src]
            for j, v in usrc.items():
                new = udst.get(j, 0) + c * v
                if new:
                    udst[j] = new
                else:
                    udst.pop(j, None)

    def col_op(self, dst: int, src: int, c: int) -> None:
        # col dst += c * col src
        rows, col_rows = self.rows, self.col_rows
        for i in list(self.col_rows[src]):
            row = rows[i]
            new = row.get(dst, 0) + c * row[src]
            if new:
                row[dst] = new
                col_rows[dst].add(i)
            else:
                row.pop(dst, None)
                col_rows[dst].discard(i)
            self._rebucket(i)
        if self.vt_rows is not None:
            vdst, vsrc = self.vt_rows[dst], self.vt_rows[src]
            for i, v in vsrc.items():
                new = vdst.get(i, 0) + c * v
                if new:
                    vdst[i] = new
                else:
                    vdst.pop(i, None)

    def swap_rows(self, a: int, b: int) -> None:
        if a == b:
            return
        rows, col_rows = self.rows, self.col_rows
        for j in rows[a].keys() | rows[b].keys():
            ina, inb = j in rows[a], j in rows[b]
            if ina != inb:
                if ina:
                    col_rows[j].discard(a)
                    col_rows[j].add(b)
                else:
                    col_rows[j].discard(b)
                    col_rows[j].add(a)
        rows[a], rows[b] = rows[b], rows[a]
        self._rebucket(a)
        self._rebucket(b)
        if self.u_rows is not None:
            self.u_rows[a], self.u_rows[b] = self.u_rows[b], self.u_rows[a]

    def swap_cols(self, a: int, b: int) -> None:
        if a == b:
            return
        rows, col_rows = self.rows, self.col_rows
        for i in col_rows[a] | col_rows[b]:
            row = rows[i]
            va, vb = row.pop(a, None), row.pop(b, None)
            if va is not None:
                row[b] = va
            if vb is not None:
                row[a] = vb
        col_rows[a], col_rows[b] = col_rows[b], col_rows[a]
        if self.vt_rows is not None:
            self.vt_rows[a], self.vt_rows[b] = self.vt_rows[b], self.vt_rows[a]

    def negate_row(self, i: int) -> None:
        row = self.rows[i]
        for j in row:
            row[j] = -row[j]
        if self.u_rows is not None:
            urow = self.u_rows[i]
            for j in urow:
                urow[j] = -urow[j]

    # -- pivot clearing --

    def clear_pivot(self, pi: int, pj: int) -> None:
        """
        Zero out row ``pi`` and column ``pj`` except the pivot itself,
        migrating the pivot to smaller remainders when division is inexact.
        Terminates because the pivot's absolute value strictly drops at
        every migration.
        """
        rows, col_rows = self.rows, self.col_rows
        while True:
            v = rows[pi][pj]
            migrated = False
            for i in list(col_rows[pj]):
                if i == pi:
                    continue
                q = rows[i][pj] // v
                if q:
                    self.row_op(i, pi, -q)
                r = rows[i].get(pj, 0)
                if r:
                    self.swap_rows(i, pi)
                    migrated = True
                    break
            if migrated:
                continue
            for j in list(rows[pi].keys()):
                if j == pj:
                    continue
                q = rows[pi][j] // v
                if q:
                    self.col_op(j, pj, -q)
                r = rows[pi].get(j, 0)
                if r:
                    self.swap_cols(j, pj)
                    migrated = True
                    break
            if not migrated:
                return

    def find_pivot(self) -> tuple[int, int] | None:
        """
        Nonzero entry preferring unit value, then small value, then least
        fill-in.  Rows are visited sparsest first, and the search stops at
        the first unit entry found there (its fill-in is near-minimal), so a
        full scan only happens when no unit entry exists.
        """
        best = None
        best_key = None
        rows, col_rows = self.rows, self.col_rows
        for length in sorted(self.buckets):
            if length == 0:
                continue
            for i in self.buckets[length]:
                row = rows[i]
                for j, v in row.items():
                    key = (abs(v) != 1, abs(v), len(col_rows[j]))
                    if best_key is None or key < best_key:
                        best_key = key
                        best = (i, j)
                if best_key[0] is False:
                    return best
        return best


def snf(m: SparseIntMatrix, want_transforms: bool = False) -> SNFResult:
    """
    Smith normal form of ``m``.

    Returns the invariant factors (positive, each dividing the next) and the
    rank; with ``want_transforms`` also unimodular ``U`` (nrows x nrows) and
    ``V`` (ncols x ncols) such that ``U @ m @ V`` is the diagonal matrix of
    the invariant factors.
    """
    e = _Eliminator(m, want_transforms)
    pivots: list[list[int]] = []  # [row, col] per pivot, in discovery order

    while True:
        pick = e.find_pivot()
        if pick is None:
            break
        pi, pj = pick
        e.clear_pivot(pi, pj)
        # clearing leaves exactly the (possibly migrated) pivot in its row
        pivots.append([pi, next(iter(e.rows[pi]))])
        e.retire_row(pi)

    # enforce the divisibility chain
    if want_transforms:
        changed = True
        while changed:
            changed = False
            for s in range(len(pivots)):
                for t in range(s + 1, len(pivots)):
                    rs, cs = pivots[s]
                    rt, ct = pivots[t]
                    ds = e.rows[rs][cs]
                    dt = e.rows[rt][ct]
                    if dt % ds:
                        e.col_op(cs, ct, 1)
                        e.clear_pivot(rs, cs)
                        pivots[s][1] = next(iter(e.rows[rs]))
                        pivots[t][1] = next(iter(e.rows[rt]))
                        changed = True
        for rs, cs in pivots:
            if e.rows[rs][cs] < 0:
                e.negate_row(rs)
        pivots.sort(key=lambda rc: e.rows[rc[0]][rc[1]])
        # park each pivot at (t, t) so U @ m @ V is literally diagonal
        for t, (rs, cs) in enumerate(list(pivots)):
            e.swap_rows(t, rs)
            e.swap_cols(t, cs)
            for other in pivots:
                if other[0] == t:
                    other[0] = rs
                elif other[0] == rs:
                    other[0] = t
                if other[1] == t:
                    other[1] = cs
                elif other[1] == cs:
                    other[1] = t
        factors = tuple(e.rows[t][t] for t in range(len(pivots)))
        u = SparseIntMatrix(m.nrows, m.nrows)
        u._rows = e.u_rows
        vt = SparseIntMatrix(m.ncols, m.ncols)
        vt._rows = e.vt_rows
        return SNFResult(factors, len(factors), u, vt.transpose())

    values = sorted(abs(e.rows[r][c]) for r, c in pivots)
    return SNFResult(tuple(_divisibility_chain(values)), len(values))


def _divisibility_chain(values: list[int]) -> list[int]:
    """Turn diagonal values into invariant factors by repeated gcd/lcm."""
    vals = list(values)
    n = len(vals)
    changed = True
    while changed:
        changed = False
        for s in range(n):
            for t in range(s + 1, n):
                if vals[t] % vals[s]:
                    g = gcd(vals[s], vals[t])
                    vals[s], vals[t] = g, vals[s] * vals[t] // g
                    changed = True
    return sorted(vals)


def rank(m: SparseIntMatrix) -> int:
    return snf(m).rank
