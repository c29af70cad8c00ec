"""
Closed-form surface arithmetic for arc systems.

A compact oriented surface is recorded by its type ``(g, r)``: genus and
number of boundary circles.  An arc system of ``p`` disjoint arcs between two
marked boundary points is recorded by an :class:`ArcClass`: the degree-``p``
permutation matching the arc order at the two endpoints, together with
``side`` = 1 when both endpoints sit on one boundary circle and 2 when they
sit on two distinct circles.  Everything about the thickened arc system and
the complementary cut surface (boundary count, genus, realizability on a
given genus) is a function of that pair alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import Perm, all_perms, as_perm, compose, hat, inverse, rotation

SIDES = (1, 2)


@dataclass(frozen=True)
class SurfaceType:
    """Genus ``g`` and boundary count ``r`` of a compact oriented surface."""

    g: int
    r: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.r < 0:
            raise ValueError(f"invalid surface type ({self.g}, {self.r})")

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.g - self.r

    def to_json(self) -> dict:
        return {"g": self.g, "r": self.r}

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceType":
        return cls(int(data["g"]), int(data["r"]))

    def __str__(self) -> str:
        return f"F({self.g},{self.r})"


@dataclass(frozen=True)
class ArcClass:
    """Orbit label of an arc system: endpoint-matching word plus side."""

    perm: Perm
    side: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", as_perm(self.perm))
        if self.side not in SIDES:
            raise ValueError(f"side must be 1 or 2, got {self.side}")

    @property
    def arc_count(self) -> int:
        return len(self.perm)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "side": self.side}

    @classmethod
    def from_json(cls, data: dict) -> "ArcClass":
        return cls(tuple(data["perm"]), int(data["side"]))


@lru_cache(maxsize=None)
def _neighborhood_boundary(perm: Perm, side: int) -> int:
    k = len(perm)
    if side == 1:
        h = hat(perm)
        rot = rotation(k + 1)
        word = compose(compose(rot, inverse(h)), compose(inverse(rot), h))
        return _cycles(word) + 1
    rot = rotation(k)
    word = compose(compose(rot, inverse(perm)), compose(inverse(rot), perm))
    return _cycles(word) + 2


def _cycles(word: Perm) -> int:
    seen = [False] * len(word)
    count = 0
    for i in range(len(word)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = word[j]
    return count


def boundary_of_neighborhood(a: ArcClass) -> int:
    """
    Number of boundary circles of the thickened arc system.

    >>> boundary_of_neighborhood(ArcClass((1, 2, 0), 1))
    3
    >>> boundary_of_neighborhood(ArcClass((1, 2, 0), 2))
    5
    """
    return _neighborhood_boundary(a.perm, a.side)


def simplex_genus(a: ArcClass) -> int:
    """
    Genus of the thickened arc system; for ``p`` arcs this is
    ``(p + 2 - boundary_of_neighborhood) / 2``, always an exact division.

    >>> simplex_genus(ArcClass((1, 2, 0), 1))
    1
    >>> simplex_genus(ArcClass((1, 2, 0), 2))
    0
    """
    num = a.arc_count + 2 - boundary_of_neighborhood(a)
    assert num >= 0 and num % 2 == 0, f"parity violation for {a}"
    return num // 2


def realizable(a: ArcClass, g: int) -> bool:
    """
    Whether some arc system on a genus-``g`` surface has this label: the
    criterion is ``simplex_genus >= p + 1 - g - side``.

    >>> realizable(ArcClass((0, 1), 2), 1)
    True
    >>> realizable(ArcClass((0, 1, 2), 1), 1)
    False
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    return simplex_genus(a) >= a.arc_count + 1 - g - a.side


@lru_cache(maxsize=None)
def realizable_perms(p: int, side: int, g: int) -> tuple[Perm, ...]:
    """
    All degree-``p`` words realizable at genus ``g``, in lexicographic order.
    The full symmetric group is returned whenever ``p <= g - 1 + side``.
    """
    if p < 1:
        raise ValueError("degree must be >= 1")
    if side not in SIDES:
        raise ValueError("side must be 1 or 2")
    if p <= g - 1 + side:
        return tuple(all_perms(p))
    return tuple(w for w in all_perms(p) if realizable(ArcClass(w, side), g))


def cut_surface(ambient: SurfaceType, a: ArcClass) -> SurfaceType:
    """
    Type of the complement of the thickened arc system inside ``ambient``.

    >>> cut_surface(SurfaceType(5, 3), ArcClass((1, 2, 0), 2))
    SurfaceType(g=3, r=4)
    """
    if ambient.r < a.side:
        raise ValueError(f"{ambient} has too few boundary circles for side {a.side}")
    s = simplex_genus(a)
    p = a.arc_count
    if not realizable(a, ambient.g):
        raise ValueError(
            f"genus deficit: {a} needs simplex genus >= {p + 1 - ambient.g - a.side}, has {s}"
        )
    g_cut = ambient.g + s - (p + 1 - a.side)
    r_cut = boundary_of_neighborhood(a) + ambient.r - 2 * a.side
    assert g_cut >= 0 and r_cut >= 1, f"degenerate cut type ({g_cut}, {r_cut})"
    out = SurfaceType(g_cut, r_cut)
    assert out.euler_char == ambient.euler_char + p
    return out


def stabilizer_label(ambient: SurfaceType, a: ArcClass) -> SurfaceType:
    """Surface type indexing the stabilizer of the arc system's orbit."""
    return cut_surface(ambient, a)


_GLUE_DELTAS = {
    "0,1": (0, 1),
    "1,-1": (1, -1),
    "1,0": (1, 0),
    "0,-1": (0, -1),
}


def glue(op: str, s: SurfaceType) -> SurfaceType:
    """
    Apply one of the elementary boundary operations:

    - ``"0,1"``: attach a pair of pants to one boundary circle,
    - ``"1,-1"``: attach a pair of pants to two boundary circles (needs r >= 2),
    - ``"1,0"``: the composite of the previous two,
    - ``"0,-1"``: cap a boundary circle with a disk (needs r >= 1),
    - ``"circle_cut"``: cut along a nonseparating circle (needs g >= 1).

    >>> glue("circle_cut", SurfaceType(2, 1))
    SurfaceType(g=1, r=3)
    """
    if op == "circle_cut":
        if s.g < 1:
            raise ValueError("circle_cut needs genus >= 1")
        return SurfaceType(s.g - 1, s.r + 2)
    if op not in _GLUE_DELTAS:
        raise ValueError(f"unknown gluing operation {op!r}")
    dg, dr = _GLUE_DELTAS[op]
    if op == "1,-1" and s.r < 2:
        raise ValueError("gluing 1,-1 needs at least two boundary circles")
    if op == "0,-1" and s.r < 1:
        raise ValueError("gluing 0,-1 needs at least one boundary circle")
    return SurfaceType(s.g + dg, s.r + dr)
