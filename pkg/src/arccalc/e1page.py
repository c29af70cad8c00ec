"""
First-page bookkeeping for the arc-system spectral sequences.

A page is a table indexed by column ``p >= 1``: the summands in column ``p``
are the realizable degree-``p`` words over the ambient surface, each labeled
by the surface type of its stabilizer (the cut surface).  Entries are labels
only; no homology groups are computed here.  The first differential, with
trivial coefficients, is the signed face-merge matrix, which must coincide
with the boundary matrix of the realizability quotient complex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import quotient_complex
from .intmat import SparseIntMatrix
from .perms import Perm, face
from .surfaces import (
    ArcClass,
    SurfaceType,
    realizable_perms,
    simplex_genus,
    stabilizer_label,
)


@dataclass(frozen=True)
class Summand:
    perm: Perm
    genus: int
    stabilizer: SurfaceType

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "genus": self.genus,
            "stabilizer": self.stabilizer.to_json(),
        }


@dataclass(frozen=True)
class E1Page:
    ambient: SurfaceType
    side: int
    columns: tuple[tuple[Summand, ...], ...]  # columns[p-1] lists column p
    vanishing_bound: int

    @property
    def max_p(self) -> int:
        return len(self.columns)

    def column(self, p: int) -> tuple[Summand, ...]:
        if not 1 <= p <= self.max_p:
            raise ValueError(f"column {p} not on the page (1..{self.max_p})")
        return self.columns[p - 1]

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "side": self.side,
            "vanishing_bound": self.vanishing_bound,
            "columns": {
                str(p): [s.to_json() for s in self.column(p)]
                for p in range(1, self.max_p + 1)
            },
        }

    def to_table(self) -> str:
        lines = [
            f"ambient {self.ambient}  side {self.side}  vanishing p+q <= {self.vanishing_bound}"
        ]
        for p in range(1, self.max_p + 1):
            cells = [
                f"{','.join(map(str, s.perm))} -> {s.stabilizer}" for s in self.column(p)
            ]
            lines.append(f"p={p:<2d} | " + "   ".join(cells))
        return "\n".join(lines)


def e1_skeleton(ambient: SurfaceType, side: int, max_p: int) -> E1Page:
    """
    Populate columns 1..``max_p`` with realizable words and their stabilizer
    labels.  The page converges to zero for ``p + q <= 2g - 2 + side``.

    >>> page = e1_skeleton(SurfaceType(3, 2), 1, 2)
    >>> page.vanishing_bound
    5
    """
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    if ambient.r < side:
        raise ValueError(f"{ambient} has too few boundary circles for side {side}")
    if ambient.g < 2:
        raise ValueError("page generation needs ambient genus >= 2")
    if max_p < 1:
        raise ValueError("max_p must be >= 1")
    columns = []
    for p in range(1, max_p + 1):
        col = tuple(
            Summand(
                w,
                simplex_genus(ArcClass(w, side)),
                stabilizer_label(ambient, ArcClass(w, side)),
            )
            for w in realizable_perms(p, side, ambient.g)
        )
        columns.append(col)
    return E1Page(ambient, side, tuple(columns), 2 * ambient.g - 2 + side)


def d1_matrix(page: E1Page, p: int) -> SparseIntMatrix:
    """
    Matrix of the first differential from column ``p`` to column ``p-1``:
    the ``(target, source)`` entry is the signed count of faces of the
    source word equal to the target word.
    """
    if p < 2:
        raise ValueError("the first differential needs p >= 2")
    src = [s.perm for s in page.column(p)]
    dst = {s.perm: i for i, s in enumerate(page.column(p - 1))}
    m = SparseIntMatrix(len(dst), len(src))
    for c, word in enumerate(src):
        for j in range(len(word)):
            f = face(word, j)
            assert f in dst, f"face {f} missing from column {p - 1}"
            m.add(dst[f], c, (-1) ** j)
    return m


def quotient_boundary_matrix(page: E1Page, p: int) -> SparseIntMatrix:
    """The boundary matrix the page's d1 must reproduce."""
    return quotient_complex(page.ambient.g, page.side, max(p, 2)).boundary_matrix(p)


def cancellation_report(word: Perm) -> tuple[tuple[int, Perm], ...]:
    """
    Signed faces surviving the twist cancellations.

    Two successive faces are equal exactly when the word carries adjacent
    values at adjacent positions (in either order); such a pair enters with
    opposite signs and cancels.  Survivors are aggregated per face word and
    returned sorted, which must match the nonzero entries of the word's
    first-differential column.

    >>> cancellation_report((0, 2, 1))
    ((1, (1, 0)),)
    >>> cancellation_report((0, 3, 1, 2))
    ((-1, (0, 1, 2)), (1, (2, 0, 1)))
    """
    k = len(word)
    if k < 2:
        return ()
    alive = [True] * k
    j = 0
    while j < k - 1:
        if alive[j] and alive[j + 1] and abs(word[j] - word[j + 1]) == 1:
            alive[j] = alive[j + 1] = False
            j += 2
        else:
            j += 1
    acc: dict[Perm, int] = {}
    for j in range(k):
        if alive[j]:
            f = face(word, j)
            acc[f] = acc.get(f, 0) + (-1) ** j
    return tuple(sorted(((c, p) for p, c in acc.items() if c != 0), key=lambda t: t[1]))
