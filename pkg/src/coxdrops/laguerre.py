"""
Restricted Laguerre histories, 2-Motzkin and Motzkin paths, and the
classical Foata-Zeilberger encoding of permutations.

Paths are strings over the step alphabet ``N S E D``, where ``D`` is the
dotted-east step of a 2-Motzkin path; plain Motzkin paths use only
``N S E``.  The height ``h_i`` of step i is the pre-step height: the number
of N steps minus the number of S steps strictly before i.  A path must stay
at height >= 0 and return to 0.

>>> fz_history((4, 3, 2, 1))
LaguerreHistory(steps='NNSS', labels=(0, 1, 1, 0))
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import inverse, validate_permutation

STEPS_2MOTZKIN = "NSED"
STEPS_MOTZKIN = "NSE"


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

def heights(steps: str) -> tuple[int, ...]:
    """Pre-step heights h_1..h_n."""
    out = []
    h = 0
    for s in steps:
        out.append(h)
        if s == "N":
            h += 1
        elif s == "S":
            h -= 1
    return tuple(out)


def is_valid_path(steps: str, alphabet: str = STEPS_2MOTZKIN) -> bool:
    """Nonnegative heights throughout, final height zero, known letters."""
    if any(s not in alphabet for s in steps):
        return False
    h = 0
    for s in steps:
        if s == "N":
            h += 1
        elif s == "S":
            h -= 1
            if h < 0:
                return False
    return h == 0


def _require_path(steps: str, alphabet: str = STEPS_2MOTZKIN) -> None:
    if not is_valid_path(steps, alphabet):
        raise ValueError(f"{steps!r} is not a valid path over {alphabet!r}")


def area(steps: str) -> int:
    """
    Sum of the pre-step heights; equals depth of every permutation whose
    history has this shape.

    >>> area("NNSS")
    4
    """
    _require_path(steps)
    return sum(heights(steps))


def max_height(steps: str) -> int:
    """Largest height reached after any step."""
    _require_path(steps)
    best = h = 0
    for s in steps:
        if s == "N":
            h += 1
            best = max(best, h)
        elif s == "S":
            h -= 1
    return best


def motzkin_paths(n: int) -> Iterator[str]:
    """All Motzkin paths of length n (alphabet N S E)."""
    yield from _paths(n, STEPS_MOTZKIN)


def two_motzkin_paths(n: int) -> Iterator[str]:
    """All 2-Motzkin paths of length n (alphabet N S E D)."""
    yield from _paths(n, STEPS_2MOTZKIN)


def _paths(n: int, alphabet: str) -> Iterator[str]:
    acc: list[str] = []

    def rec(k: int, h: int) -> Iterator[str]:
        if h > n - k:
            return
        if k == n:
            yield "".join(acc)
            return
        for s in alphabet:
            if s == "S" and h == 0:
                continue
            acc.append(s)
            yield from rec(k + 1, h + (s == "N") - (s == "S"))
            acc.pop()

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# restricted Laguerre histories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaguerreHistory:
    """A 2-Motzkin path together with a label under each step."""
    steps: str
    labels: tuple[int, ...]

    def is_valid(self) -> bool:
        if len(self.steps) != len(self.labels):
            return False
        if not is_valid_path(self.steps):
            return False
        for s, h, p in zip(self.steps, heights(self.steps), self.labels):
            cap = h if s in "NE" else h - 1
            if not 0 <= p <= cap:
                return False
        return True

    @property
    def shape(self) -> str:
        """The underlying Motzkin path: D steps relabelled E."""
        return self.steps.replace("D", "E")

    def to_json(self) -> str:
        return json.dumps({"steps": self.steps, "labels": list(self.labels)})


def laguerre_histories(n: int) -> Iterator[LaguerreHistory]:
    """All restricted Laguerre histories of length n; there are n! of them."""
    for steps in two_motzkin_paths(n):
        ranges = []
        for s, h in zip(steps, heights(steps)):
            cap = h if s in "NE" else h - 1
            ranges.append(range(cap + 1))
        for labels in itertools.product(*ranges):
            yield LaguerreHistory(steps, labels)


# ---------------------------------------------------------------------------
# the permutation encoding
# ---------------------------------------------------------------------------

def cyclic_classify(p: Sequence[int], i: int) -> str:
    """
    Classify index i by the trichotomy of p^{-1}(i), i, p(i):
    'CPk' (cyclic peak), 'CVal' (valley), 'Cda' (double ascent),
    'Cdd' (double descent) or 'Fix'.

    >>> [cyclic_classify((4, 3, 2, 1), i) for i in (1, 2, 3, 4)]
    ['CVal', 'CVal', 'CPk', 'CPk']
    """
    p = validate_permutation(p)
    if not 1 <= i <= len(p):
        raise ValueError(f"index {i} out of range for n={len(p)}")
    fwd = p[i - 1]
    if fwd == i:
        return "Fix"
    back = inverse(p)[i - 1]
    if back < i and fwd < i:
        return "CPk"
    if back > i and fwd > i:
        return "CVal"
    if back < i and fwd > i:
        return "Cda"
    return "Cdd"


def nest_at(p: Sequence[int], i: int) -> int:
    """
    Number of arcs of the cycle diagram strictly enclosing the arc at i:
    indices j with j < i < p(i) < p(j) or p(j) < p(i) <= i < j.

    >>> nest_at((4, 3, 2, 1), 2)
    1
    """
    pi = p[i - 1]
    c = 0
    for j, pj in enumerate(p, start=1):
        if (j < i < pi < pj) or (pj < pi <= i < j):
            c += 1
    return c


def nest(p: Sequence[int]) -> int:
    return sum(nest_at(p, i) for i in range(1, len(p) + 1))


_STEP_OF = {"CVal": "N", "CPk": "S", "Cda": "E", "Fix": "E", "Cdd": "D"}


def fz_history(p: Sequence[int]) -> LaguerreHistory:
    """
    The Foata-Zeilberger encoding: step i is determined by the cyclic class
    of i, the label is the nesting count at i.  A bijection from S_n onto
    the restricted Laguerre histories of length n; the area of the shape is
    depth(p), area plus total nesting is inv(p).

    >>> fz_history((2, 1))
    LaguerreHistory(steps='NS', labels=(0, 0))
    """
    p = validate_permutation(p)
    inv_p = inverse(p)
    steps = []
    labels = []
    for i in range(1, len(p) + 1):
        fwd = p[i - 1]
        back = inv_p[i - 1]
        if fwd == i or (back < i < fwd):
            steps.append("E")
        elif back > i and fwd > i:
            steps.append("N")
        elif back < i and fwd < i:
            steps.append("S")
        else:
            steps.append("D")
        labels.append(nest_at(p, i))
    return LaguerreHistory("".join(steps), tuple(labels))


def motzkin_shape(p: Sequence[int]) -> str:
    """
    The Motzkin path under the permutation: the history's shape with E and
    D merged.  Surjective onto the Motzkin paths but not injective.

    >>> motzkin_shape((3, 1, 2))
    'NES'
    """
    return fz_history(p).shape


def path_weight(steps: str) -> int:
    """
    Number of permutations whose Motzkin shape is this path: the product
    over steps of (h+1) for N, h for S and 2h+1 for E at pre-step height h
    (the count of admissible labels, with E counting both merged kinds).

    >>> path_weight("NES")
    3
    """
    _require_path(steps, STEPS_MOTZKIN)
    w = 1
    for s, h in zip(steps, heights(steps)):
        w *= h + 1 if s == "N" else h if s == "S" else 2 * h + 1
    return w


# ---------------------------------------------------------------------------
# even subsets <-> paths of height at most one
# ---------------------------------------------------------------------------

def even_subset_to_path(subset: Sequence[int], n: int) -> str:
    """
    Bijection from even-cardinality subsets of 1..n onto Motzkin paths of
    length n with maximum height <= 1: the odd-ranked elements become N
    steps, the even-ranked ones S steps, everything else E.

    >>> even_subset_to_path((1, 3), 3)
    'NES'
    """
    elems = sorted(subset)
    if len(elems) % 2 != 0:
        raise ValueError("subset must have even cardinality")
    if len(set(elems)) != len(elems) or elems and not (1 <= elems[0] and elems[-1] <= n):
        raise ValueError(f"not a subset of 1..{n}")
    steps = ["E"] * n
    for k, s in enumerate(elems):
        steps[s - 1] = "N" if k % 2 == 0 else "S"
    return "".join(steps)


def path_to_even_subset(steps: str) -> tuple[int, ...]:
    """Inverse of :func:`even_subset_to_path`; requires max height <= 1."""
    _require_path(steps, STEPS_MOTZKIN)
    if max_height(steps) > 1:
        raise ValueError("only paths of height <= 1 correspond to subsets")
    return tuple(i + 1 for i, s in enumerate(steps) if s in "NS")
