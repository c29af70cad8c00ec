"""
The permutation chain complex, its realizability quotients, and exact
integer homology.

Degree ``d`` of a complex carries a lexicographically ordered basis of
degree-``d`` words; the boundary of a word is its alternating face sum.  The
full complex over all of the symmetric groups is contractible via the
prepend-a-fixed-point homotopy; the quotient complex at genus ``g`` keeps
only words realizable by arc systems on a genus-``g`` surface, and stays
exact in a range that grows with ``g``.  Homology is computed from Smith
normal forms, so Betti numbers and torsion are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .intmat import SparseIntMatrix, snf
from .perms import (
    FormalSum,
    Perm,
    all_perms,
    boundary,
    boundary_of_sum,
    hat,
    homotopy_d_on_sum,
    identity,
    singleton,
)
from .surfaces import ArcClass, realizable, realizable_perms

DEFAULT_DEGREE_CAP = 7
MAX_DEGREE_CAP = 8  # factorial growth; degree 9 is out of the supported range


def _check_cap(max_degree: int) -> None:
    if not 1 <= max_degree <= MAX_DEGREE_CAP:
        raise ValueError(f"max_degree must be in [1, {MAX_DEGREE_CAP}], got {max_degree}")


class ChainComplex:
    """
    Graded bases of permutation words with exact boundary matrices.

    ``basis(d)`` is the ordered basis at degree ``d``; ``boundary_matrix(d)``
    maps degree ``d`` to degree ``d-1`` for ``2 <= d <= max_degree``.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        bases: dict[int, tuple[Perm, ...]],
        matrices: dict[int, SparseIntMatrix] | None = None,
    ):
        self._bases = dict(bases)
        self.min_degree = min(self._bases)
        self.max_degree = max(self._bases)
        if set(self._bases) != set(range(self.min_degree, self.max_degree + 1)):
            raise ValueError("degrees must be contiguous")
        self._index = {
            d: {p: i for i, p in enumerate(basis)} for d, basis in self._bases.items()
        }
        self._matrices: dict[int, SparseIntMatrix] = {}
        for d in range(self.min_degree + 1, self.max_degree + 1):
            self._matrices[d] = (
                matrices[d] if matrices is not None else self._build_matrix(d)
            )
            m = self._matrices[d]
            if (m.nrows, m.ncols) != (len(self._bases[d - 1]), len(self._bases[d])):
                raise ValueError(f"boundary matrix shape mismatch at degree {d}")
        if matrices is not None and not self.verify_dd_zero():
            raise ValueError("boundary matrices do not square to zero")

    @classmethod
    def from_matrices(
        cls, bases: dict[int, tuple[Perm, ...]], matrices: dict[int, SparseIntMatrix]
    ) -> "ChainComplex":
        """Explicitly given boundary matrices (shape-checked, dd = 0 checked)."""
        return cls(bases, matrices)

    def _build_matrix(self, d: int) -> SparseIntMatrix:
        lower = self._index[d - 1]
        m = SparseIntMatrix(len(self._bases[d - 1]), len(self._bases[d]))
        for c, word in enumerate(self._bases[d]):
            for coeff, f in boundary(word).terms:
                assert f in lower, f"face {f} escapes the degree-{d - 1} basis"
                m.add(lower[f], c, coeff)
        return m

    def basis(self, d: int) -> tuple[Perm, ...]:
        if d not in self._bases:
            raise ValueError(f"degree {d} not present (range {self.min_degree}..{self.max_degree})")
        return self._bases[d]

    def dimension(self, d: int) -> int:
        return len(self.basis(d))

    def boundary_matrix(self, d: int) -> SparseIntMatrix:
        if d not in self._matrices:
            raise ValueError(f"no boundary matrix at degree {d}")
        return self._matrices[d]

    def contains(self, d: int, word: Perm) -> bool:
        return d in self._bases and word in self._index[d]

    def verify_dd_zero(self) -> bool:
        return all(
            (self._matrices[d - 1] @ self._matrices[d]).is_zero()
            for d in range(self.min_degree + 2, self.max_degree + 1)
        )


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_json(self, degree: int | None = None) -> dict:
        out = {"betti": self.betti, "torsion": list(self.torsion)}
        if degree is not None:
            out["degree"] = degree
        return out


def perm_complex(max_degree: int) -> ChainComplex:
    """Full complex: basis at degree ``d`` is the whole symmetric group."""
    _check_cap(max_degree)
    return ChainComplex({d: tuple(all_perms(d)) for d in range(1, max_degree + 1)})


def quotient_complex(g: int, side: int, max_degree: int = DEFAULT_DEGREE_CAP) -> ChainComplex:
    """
    Subcomplex of realizable words at genus ``g``.  Realizability is closed
    under faces, so the boundary restricts; construction asserts it.
    """
    if g < 2:
        raise ValueError("quotient complex needs genus >= 2")
    _check_cap(max_degree)
    return ChainComplex(
        {d: realizable_perms(d, side, g) for d in range(1, max_degree + 1)}
    )


def homology(c: ChainComplex, d: int) -> HomologyGroup:
    """
    Homology at degree ``d`` of the truncated complex: boundary maps into or
    out of absent degrees are zero, so the ends report kernels/cokernels of
    the truncation.  The degree itself must be present.
    """
    if d < c.min_degree or d > c.max_degree:
        raise ValueError(f"degree {d} not present (range {c.min_degree}..{c.max_degree})")
    out_rank = snf(c.boundary_matrix(d)).rank if d > c.min_degree else 0
    if d < c.max_degree:
        into = snf(c.boundary_matrix(d + 1))
        in_rank = into.rank
        torsion = tuple(f for f in into.invariant_factors if f > 1)
    else:
        in_rank = 0
        torsion = ()
    betti = c.dimension(d) - out_rank - in_rank
    return HomologyGroup(betti, torsion)


def exactness_report(g: int, side: int, max_degree: int | None = None) -> list[dict]:
    """
    Homology of the quotient complex at every internal degree, flagging the
    degrees where exactness is guaranteed (positions ``2 .. g-1+side``; the
    guarantee covers the range just below the point where realizability
    starts cutting the basis down).  Out-of-range rows are informational.
    """
    top = g + side - 1
    if max_degree is None:
        max_degree = min(MAX_DEGREE_CAP, max(DEFAULT_DEGREE_CAP, top + 1))
    _check_cap(max_degree)
    c = quotient_complex(g, side, max_degree)
    rows = []
    for d in range(2, max_degree):
        h = homology(c, d)
        rows.append(
            {
                "degree": d,
                "betti": h.betti,
                "torsion": list(h.torsion),
                "trivial": h.trivial,
                "guaranteed": d <= top,
            }
        )
    return rows


@dataclass(frozen=True)
class HomotopyReport:
    checked: int
    failures: tuple[Perm, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "failures": [list(p) for p in self.failures],
            "ok": self.ok,
        }


def _contracts(word: Perm) -> bool:
    lhs = boundary(hat(word)) + homotopy_d_on_sum(boundary(word))
    return lhs == singleton(word)


def verify_homotopy(max_degree: int) -> HomotopyReport:
    """
    Exhaustive check that prepend-then-boundary plus boundary-then-prepend
    is the identity on every word of degree 2 through ``max_degree``.
    """
    _check_cap(max_degree)
    failures = []
    checked = 0
    for d in range(2, max_degree + 1):
        for word in all_perms(d):
            checked += 1
            if not _contracts(word):
                failures.append(word)
    return HomotopyReport(checked, tuple(failures))


def verify_homotopy_sampled(degree: int, samples: int, seed: int = 0) -> HomotopyReport:
    """Same identity on ``samples`` random words of the given degree."""
    if degree < 2:
        raise ValueError("homotopy identity needs degree >= 2")
    rng = random.Random(seed)
    failures = []
    base = list(range(degree))
    for _ in range(samples):
        word = base[:]
        rng.shuffle(word)
        if not _contracts(tuple(word)):
            failures.append(tuple(word))
    return HomotopyReport(samples, tuple(failures))


def quotient_contraction(g: int, side: int, d: int, word: Perm) -> FormalSum:
    """
    The lifted contraction on the quotient complex at genus ``g``.

    Prepending a fixed point keeps a word realizable except in one spot: the
    identity at the top degree ``T = g + side - 1``.  There the correction is
    degree-parity dependent: zero when ``T`` is odd (the identity's boundary
    already vanishes one degree down), and the word ``(2,0,1,3,4,...,T)``
    when ``T`` is even (its boundary equals the identity's).
    """
    top = g + side - 1
    lifted = hat(word)
    if realizable(ArcClass(lifted, side), g):
        return singleton(lifted)
    assert word == identity(d) and d == top, f"unexpected escape at degree {d}: {word}"
    if top % 2 == 1:
        return FormalSum()
    tau = (2, 0, 1) + tuple(range(3, top + 1))
    return singleton(tau)


def verify_quotient_homotopy(g: int, side: int) -> HomotopyReport:
    """
    Check that the lifted contraction contracts the quotient complex in the
    guaranteed range: for every basis word of degree ``2 <= d <= g-1+side``,
    contraction-of-boundary plus boundary-of-contraction returns the word.
    """
    if g < 2:
        raise ValueError("quotient complex needs genus >= 2")
    top = g + side - 1
    failures = []
    checked = 0
    for d in range(2, top + 1):
        for word in realizable_perms(d, side, g):
            checked += 1
            img = boundary_of_sum(quotient_contraction(g, side, d, word))
            for coeff, f in boundary(word).terms:
                img = img + quotient_contraction(g, side, d - 1, f).scale(coeff)
            if img != singleton(word):
                failures.append(word)
    return HomotopyReport(checked, tuple(failures))
