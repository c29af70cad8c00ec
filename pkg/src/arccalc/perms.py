"""
Permutations of ``{0, ..., k-1}`` in word notation, plus the signed face and
boundary calculus of the permutation chain complex.

A permutation ``x`` of degree ``k`` is the tuple ``(x(0), ..., x(k-1))``.
Functions accept any integer sequence and return plain tuples, so every value
is hashable, immutable and safe to share between threads.

Composition convention: ``compose(a, b)`` applies ``b`` first, so
``compose(a, b)(x) == a(b(x))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def is_perm(word: Sequence[int]) -> bool:
    """
    Check that ``word`` is a permutation of ``{0, ..., n-1}`` with ``n = len(word)``.

    >>> [is_perm(w) for w in [(0,), (1, 2, 0), (0, 0, 2), (3, 1)]]
    [True, True, False, False]
    """
    n = len(word)
    seen = [False] * n
    for x in word:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def as_perm(word: Sequence[int]) -> Perm:
    """Coerce ``word`` to a tuple, rejecting anything that is not a permutation."""
    p = tuple(word)
    if not p or not is_perm(p):
        raise ValueError(f"not a permutation word: {word!r}")
    return p


def degree(a: Sequence[int]) -> int:
    return len(a)


def identity(k: int) -> Perm:
    """
    The identity word of degree ``k``.

    >>> identity(3)
    (0, 1, 2)
    """
    if k < 1:
        raise ValueError("degree must be >= 1")
    return tuple(range(k))


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """
    Product applying ``b`` first: ``compose(a, b)(x) = a(b(x))``.

    >>> compose((1, 2, 0), (1, 2, 0))
    (2, 0, 1)
    >>> compose((0, 2, 1), (1, 2, 0))
    (2, 1, 0)
    """
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(a: Sequence[int]) -> Perm:
    """
    >>> inverse((1, 2, 0))
    (2, 0, 1)
    """
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def cycle_count(a: Sequence[int]) -> int:
    """
    Number of disjoint cycles, fixed points counted as 1-cycles.

    >>> cycle_count((0, 1, 2, 3))
    4
    >>> cycle_count((1, 2, 0))
    1
    >>> cycle_count((3, 1, 0, 2))
    2
    """
    seen = [False] * len(a)
    count = 0
    for i in range(len(a)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = a[j]
    return count


def rotation(k: int) -> Perm:
    """
    The cycle ``(1, 2, ..., k-1, 0)`` sending ``j`` to ``j+1 mod k``.

    >>> rotation(4)
    (1, 2, 3, 0)
    """
    if k < 1:
        raise ValueError("degree must be >= 1")
    return tuple((j + 1) % k for j in range(k))


def hat(t: Sequence[int]) -> Perm:
    """
    Prepend the fixed point 0: the result has degree ``k+1``, fixes 0, and
    sends ``j`` to ``t(j-1)+1`` for ``j >= 1``.

    >>> hat((1, 2, 0))
    (0, 2, 3, 1)
    >>> cycle_count(hat((1, 0))) == cycle_count((1, 0)) + 1
    True
    """
    return (0,) + tuple(x + 1 for x in t)


def face(a: Sequence[int], j: int) -> Perm:
    """
    Delete the entry at position ``j`` and renumber, subtracting 1 from every
    remaining value that exceeds the deleted one.

    >>> face((0, 2, 1), 0)
    (1, 0)
    >>> face((0, 2, 1), 2)
    (0, 1)
    >>> face(identity(4), 2)
    (0, 1, 2)
    """
    k = len(a)
    if k < 2:
        raise ValueError("no faces below degree 2")
    if not 0 <= j < k:
        raise ValueError(f"face index {j} out of range for degree {k}")
    v = a[j]
    return tuple(x - 1 if x > v else x for i, x in enumerate(a) if i != j)


def faces(a: Sequence[int]) -> list[Perm]:
    """All faces ``[face(a, 0), ..., face(a, k-1)]``."""
    return [face(a, j) for j in range(len(a))]


@dataclass(frozen=True)
class FormalSum:
    """
    Integer combination of equal-degree permutations.

    ``terms`` is canonical: sorted by word, no repeated word, no zero
    coefficient.  Build values with :meth:`from_terms`, which normalizes.
    """

    terms: tuple[tuple[int, Perm], ...] = ()

    def __post_init__(self) -> None:
        words = [p for _, p in self.terms]
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("zero coefficient in canonical form")
        if words != sorted(set(words)):
            raise ValueError("terms not in canonical sorted form")
        if len({len(p) for p in words}) > 1:
            raise ValueError("mixed degrees in formal sum")

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, Sequence[int]]]) -> "FormalSum":
        acc: dict[Perm, int] = {}
        for c, p in pairs:
            p = tuple(p)
            acc[p] = acc.get(p, 0) + c
        return cls(tuple(sorted(((c, p) for p, c in acc.items() if c != 0), key=lambda t: t[1])))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Sequence[int]) -> int:
        p = tuple(p)
        for c, q in self.terms:
            if q == p:
                return c
        return 0

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum.from_terms(self.terms + other.terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        return FormalSum(tuple((-c, p) for c, p in self.terms))

    def scale(self, c: int) -> "FormalSum":
        if c == 0:
            return FormalSum()
        return FormalSum(tuple((c * k, p) for k, p in self.terms))

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "perm": list(p)} for c, p in sorted(self.terms, key=lambda t: t[1])]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "FormalSum":
        return cls.from_terms((d["coeff"], tuple(d["perm"])) for d in data)


ZERO_SUM = FormalSum()


def singleton(a: Sequence[int], coeff: int = 1) -> FormalSum:
    return FormalSum.from_terms([(coeff, tuple(a))])


def boundary(a: Sequence[int]) -> FormalSum:
    """
    Alternating sum of faces, as a normalized :class:`FormalSum`.

    >>> boundary((0, 2, 1)).terms
    ((1, (1, 0)),)
    >>> boundary((1, 2, 0)).terms
    ((1, (0, 1)),)
    >>> boundary(identity(4)).is_zero()
    True
    """
    return FormalSum.from_terms(
        ((-1) ** j, face(a, j)) for j in range(len(a))
    )


def boundary_of_sum(s: FormalSum) -> FormalSum:
    out = ZERO_SUM
    for c, p in s.terms:
        out = out + boundary(p).scale(c)
    return out


def homotopy_d(a: Sequence[int]) -> Perm:
    """Degree-raising contraction; on a single word it is :func:`hat`."""
    return hat(a)


def homotopy_d_on_sum(s: FormalSum) -> FormalSum:
    return FormalSum.from_terms((c, hat(p)) for c, p in s.terms)


def all_perms(k: int) -> Iterator[Perm]:
    """All degree-``k`` words in lexicographic order."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    return itertools.permutations(range(k))
