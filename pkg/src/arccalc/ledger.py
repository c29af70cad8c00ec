"""
Mechanical replay of the stability bookkeeping.

Three kinds of artifacts:

* ``main_theorem_ledger`` instantiates, over a finite parameter grid, every
  inequality the untwisted stability induction rests on, and records whether
  each instance holds.  A clean run is a numeric audit of the induction.
* ``twisted_range`` evaluates the stability thresholds for coefficient
  systems of a given degree under the three gluing moves.
* ``orbit_set_exceptions`` re-derives, by brute force over realizability, the
  finitely many parameter tuples where the orbit sets used by the twisted
  induction are smaller than required; the result must match the known
  exception lists exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .perms import identity
from .surfaces import ArcClass, realizable, realizable_perms, simplex_genus

GLUINGS = ((1, 0), (0, 1), (1, -1))


def epsilon(l: int, m: int) -> int:
    """
    Threshold correction for the gluing ``(l, m)``: 1 for the two-circle
    pants attachment ``(1, -1)``, 0 for ``(1, 0)`` and ``(0, 1)``.
    """
    if (l, m) not in GLUINGS:
        raise ValueError(f"unknown gluing ({l}, {m})")
    return 1 if (l, m) == (1, -1) else 0


# mode -> (needs epsilon, threshold rhs as function of (n, k, eps))
_TWISTED_MODES = {
    "abs-iso-s01": (False, lambda n, k, e: 3 * n + k),
    "abs-surj": (True, lambda n, k, e: 3 * n + k - e),
    "abs-iso": (False, lambda n, k, e: 3 * n + k + 2),
    "rel-surj-s01": (True, lambda n, k, e: 3 * n + k - 2 - e),
    "rel-iso-s01": (True, lambda n, k, e: 3 * n + k - 1 - e),
    "rel-surj-s11": (True, lambda n, k, e: 3 * n + k - 3 - e),
    "rel-iso-s11": (True, lambda n, k, e: 3 * n + k - e),
}

TWISTED_MODES = tuple(sorted(_TWISTED_MODES))


def twisted_range(mode: str, n: int, k: int, g: int, lm: tuple[int, int] | None = None) -> bool:
    """
    Whether ``2g`` clears the threshold of the given stability statement for
    homology degree ``n`` and coefficient degree ``k``.

    >>> twisted_range("abs-iso-s01", 2, 0, 3)
    True
    >>> twisted_range("abs-iso", 1, 0, 2, (1, -1))
    False
    """
    if mode not in _TWISTED_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {TWISTED_MODES}")
    if min(n, k, g) < 0:
        raise ValueError("n, k, g must be >= 0")
    needs_eps, rhs = _TWISTED_MODES[mode]
    if needs_eps:
        if lm is None:
            raise ValueError(f"mode {mode!r} needs the gluing (l, m)")
        e = epsilon(*lm)
    else:
        e = epsilon(*lm) if lm is not None else 0
    return 2 * g >= rhs(n, k, e)


@dataclass(frozen=True)
class Obligation:
    claim: str
    params: dict = field(compare=False)
    inequality: str
    holds: bool

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(sorted(self.params.items())),
            "inequality": self.inequality,
            "holds": self.holds,
        }

    def to_csv_row(self) -> str:
        params = ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.claim},{params},{self.inequality.replace(',', ';')},{self.holds}"


def _obligation(claim: str, params: dict, lhs: int, rhs: int) -> Obligation:
    return Obligation(claim, params, f"{lhs} >= {rhs}", lhs >= rhs)


def main_theorem_ledger(g_max: int, k_max: int) -> list[Obligation]:
    """
    Every inequality instance backing the untwisted stability induction, for
    all homology degrees ``1 <= k <= k_max`` and genera ``g <= g_max`` in
    the claimed ranges.  Degree 0 is vacuous and contributes nothing.

    Three branches, by the hypothesis satisfied at ``(g, k)``:
    boundary-add surjectivity (``2g >= 3k``), genus-raise surjectivity
    (``2g >= 3k - 1``), genus-raise injectivity (``2g >= 3k + 2``).  Each
    branch needs its two low-column differentials covered by the named
    stabilizer maps one induction step down, plus, in higher columns, a
    cut-surface genus large enough for the two-row exactness argument.
    """
    if g_max < 1 or k_max < 1:
        raise ValueError("grid bounds must be >= 1")
    out: list[Obligation] = []
    for k in range(1, k_max + 1):
        for g in range(0, g_max + 1):
            if 2 * g >= 3 * k:
                out.extend(_boundary_add_branch(g, k))
            if 2 * g >= 3 * k - 1:
                out.extend(_genus_raise_surj_branch(g, k))
            if 2 * g >= 3 * k + 2:
                out.extend(_genus_raise_inj_branch(g, k))
    return out


def _boundary_add_branch(g: int, k: int) -> list[Obligation]:
    base = {"branch": "boundary-add-surj", "g": g, "k": k}
    obs = [
        _obligation("c1-surj-step-down", base, 2 * (g - 1), 3 * (k - 1)),
        _obligation("c2-surj-step-down", base, 2 * (g - 2), 3 * (k - 1) - 1),
    ]
    if k >= 2:
        obs.append(_obligation("split-exact-range", base, g - 1, k))
    for q in range(0, k - 1):
        p = k + 1 - q
        obs.append(
            _obligation("row-iso-leg", {**base, "p": p, "q": q}, 2 * (g - p + 1), 3 * q + 2)
        )
        p2 = k + 2 - q
        obs.append(
            _obligation("row-surj-leg", {**base, "p": p2, "q": q}, 2 * (g - p2 + 1), 3 * q)
        )
    return obs


def _genus_raise_surj_branch(g: int, k: int) -> list[Obligation]:
    base = {"branch": "genus-raise-surj", "g": g, "k": k}
    obs = [
        _obligation("c1-surj-step-down", base, 2 * (g - 1), 3 * (k - 1) - 1),
        _obligation("c2-surj-step-down", base, 2 * (g - 1), 3 * (k - 1)),
    ]
    if k >= 2:
        obs.extend(
            [
                _obligation("three-column-genus", base, g + 1, 3),
                _obligation("c1-inj-step-down", base, 2 * (g - 1), 3 * (k - 2) + 2),
                _obligation("c2-inj-step-down", base, 2 * (g - 1), 3 * (k - 2)),
                _obligation("c3-surj-step-down", base, 2 * (g - 2), 3 * (k - 2)),
                _obligation("c456-surj-step-down", base, 2 * (g - 2), 3 * (k - 2) - 1),
            ]
        )
    if k >= 3:
        obs.append(_obligation("split-exact-range", base, g - 1, k))
    for q in range(0, k - 2):
        p = k + 1 - q
        obs.append(
            _obligation("row-iso-leg", {**base, "p": p, "q": q}, 2 * (g - p + 1), 3 * q + 2)
        )
        p2 = k + 2 - q
        obs.append(
            _obligation("row-surj-leg", {**base, "p": p2, "q": q}, 2 * (g - p2 + 1), 3 * q)
        )
    return obs


def _genus_raise_inj_branch(g: int, k: int) -> list[Obligation]:
    base = {"branch": "genus-raise-inj", "g": g, "k": k}
    obs = [
        _obligation("c1-surj-same-degree", base, 2 * (g - 1), 3 * k - 1),
        _obligation("c2-surj-same-degree", base, 2 * (g - 1), 3 * k),
        _obligation("three-column-genus", base, g + 1, 3),
        _obligation("c1-inj-step-down", base, 2 * (g - 1), 3 * (k - 1) + 2),
        _obligation("c2-inj-step-down", base, 2 * (g - 1), 3 * (k - 1)),
        _obligation("c3-surj-step-down", base, 2 * (g - 2), 3 * (k - 1)),
        _obligation("c456-surj-step-down", base, 2 * (g - 2), 3 * (k - 1) - 1),
    ]
    if k >= 2:
        obs.append(_obligation("split-exact-range", base, g - 1, k))
    for q in range(0, k - 1):
        p = k + 2 - q
        obs.append(
            _obligation("row-iso-leg", {**base, "p": p, "q": q}, 2 * (g - p + 1), 3 * q + 2)
        )
        p2 = k + 3 - q
        obs.append(
            _obligation("row-surj-leg", {**base, "p": p2, "q": q}, 2 * (g - p2 + 1), 3 * q)
        )
    return obs


@dataclass(frozen=True, order=True)
class ExceptionTuple:
    case: str
    lm: tuple[int, int]
    n: int
    g: int
    k: int

    def to_json(self) -> dict:
        return {"case": self.case, "l": self.lm[0], "m": self.lm[1], "n": self.n, "g": self.g, "k": self.k}


# case -> (side, additive hypothesis constant c in 2g >= 3n + k + c)
_CASES = {
    "surj-s01": (2, -2),
    "surj-s11": (1, -3),
    "inj-s11": (1, 0),
}

EXCEPTION_CASES = tuple(sorted(_CASES))

# hand-entered expected exception lists, expanded over the gluings
EXPECTED_EXCEPTIONS: dict[str, frozenset[tuple[tuple[int, int], int, int, int]]] = {
    "surj-s01": frozenset(
        {((1, 0), 1, 1, 0), ((1, 0), 1, 1, 1), ((0, 1), 1, 1, 0), ((0, 1), 1, 1, 1)}
        | {((1, -1), 1, 0, 0)}
        | {((1, -1), 1, 1, 0), ((1, -1), 1, 1, 1), ((1, -1), 1, 1, 2)}
    ),
    "surj-s11": frozenset(
        {((1, 0), 1, 0, 0), ((0, 1), 1, 0, 0)}
        | {((1, -1), 1, 0, 0), ((1, -1), 1, 0, 1)}
        | {((1, -1), 2, 1, 0)}
    ),
    "inj-s11": frozenset({((1, -1), 1, 1, 0)}),
}


def _full_orbit_set(p: int, side: int, g_complex: int) -> bool:
    # the identity word minimizes the thickening genus (value 0), so the
    # orbit set is full exactly when the identity is realizable
    if p <= 6:
        return len(realizable_perms(p, side, g_complex)) == factorial(p)
    return realizable(ArcClass(identity(p), side), g_complex)


def _positive_genus_words_realizable(p: int, side: int, g_complex: int) -> bool:
    return all(
        realizable(ArcClass(w, side), g_complex)
        for w in permutations(range(p))
        if simplex_genus(ArcClass(w, side)) >= 1
    )


def _required_orbit_sets_present(case: str, lm: tuple[int, int], n: int, g: int) -> bool:
    side, _ = _CASES[case]
    g_complex = g if side == 2 else g + 1
    if case == "surj-s01":
        full_range = list(range(2, n + 2)) + ([3] if n == 1 else [])
        partial = []
    elif case == "surj-s11":
        full_range = list(range(2, n + 2))
        partial = [n + 2] if n <= 2 else []
    else:
        full_range = list(range(2, n + 3))
        partial = [4] if n == 1 else []
    if not all(_full_orbit_set(p, side, g_complex) for p in full_range):
        return False
    return all(_positive_genus_words_realizable(p, side, g_complex) for p in partial)


def orbit_set_exceptions(case: str) -> list[ExceptionTuple]:
    """
    Brute-force re-derivation of the exception tuples for the given case:
    parameter tuples satisfying the case's genus hypothesis whose orbit sets
    nonetheless miss a required word.

    Finite enumeration: a missing orbit forces ``g <= n + 1``, and combined
    with the weakest hypothesis ``2g >= 3n + k - 4`` that bounds ``n <= 6``
    and ``k <= 2g - 3n + 4``.
    """
    if case not in _CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {EXCEPTION_CASES}")
    _, c = _CASES[case]
    found = []
    for lm in GLUINGS:
        eps = epsilon(*lm)
        for n in range(1, 7):
            for g in range(0, n + 2):
                k = 0
                while 2 * g >= 3 * n + k + c - eps:
                    if not _required_orbit_sets_present(case, lm, n, g):
                        found.append(ExceptionTuple(case, lm, n, g, k))
                    k += 1
    return sorted(found)


def check_orbit_set_exceptions(case: str) -> tuple[bool, list[ExceptionTuple]]:
    """Compare the brute-force list against the stored expected list."""
    computed = orbit_set_exceptions(case)
    got = {(t.lm, t.n, t.g, t.k) for t in computed}
    return got == EXPECTED_EXCEPTIONS[case], computed
