"""
Sign-reversing involutions on S_n and B_n built from canonical reduced
words, the fixed-point generators, and the type-D pairing maps.

The type-A involution finds the smallest stage t whose factor has two or
more letters and toggles the neighbouring stage-(t-1) factor between empty
and its single-letter form; the resulting word is again canonical, one
letter longer or shorter.  The type-B involution first looks for a
near-maximal-length factor and toggles its two forms, falling back to the
type-A move (with the toggled letter one index lower) when none exists.
Both maps preserve a drop statistic and flip the sign, so all non-fixed
elements cancel out of signed enumerators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import (Window, format_window, in_type_d, validate_permutation,
                        validate_signed)
from .reduced_words import (CanonicalWord, canonical_word_a, canonical_word_b,
                            evaluate_word, near_maximal_u, near_maximal_v)


@dataclass(frozen=True)
class InvolutionReport:
    """One application of an involution."""
    input: Window
    output: Window
    fixed: bool
    changed_factor_index: int | None = None
    transposition: tuple[int, int] | None = None

    def to_json_dict(self) -> dict:
        return {
            "input": format_window(self.input),
            "output": format_window(self.output),
            "fixed": self.fixed,
            "factor_index": self.changed_factor_index,
            "transposition": list(self.transposition) if self.transposition else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _smallest_long_stage(word: CanonicalWord) -> int | None:
    for i in range(1, word.top + 1):
        if len(word.factor(i)) >= 2:
            return i
    return None


def _toggled_factors(word: CanonicalWord, stage: int, letter: int) -> tuple:
    factors = list(word.factors)
    idx = word.top - stage
    factors[idx] = () if factors[idx] else (letter,)
    return tuple(factors)


def involution_a(p: Sequence[int]) -> InvolutionReport:
    """
    The type-A sign-reversing involution.

    >>> involution_a((4, 1, 5, 2, 3)).output
    (5, 1, 4, 2, 3)
    >>> involution_a((1, 2, 3)).fixed
    True
    """
    p = validate_permutation(p)
    word = canonical_word_a(p)
    t = _smallest_long_stage(word)
    if t is None:
        return InvolutionReport(p, p, True)
    d = t - 1
    factors = _toggled_factors(word, d, d)
    out = evaluate_word(tuple(k for f in factors for k in f), "A", word.n)
    a, b = _transposition_values(word, d)
    return InvolutionReport(p, out, False, changed_factor_index=d,
                            transposition=(a, b))


def _transposition_values(word: CanonicalWord, d: int) -> tuple[int, int]:
    # letters at positions d, d+1 of the intermediate element w_{d+1},
    # the prefix product of the factors of stage > d
    letters = tuple(k for f in word.factors[:word.top - d] for k in f)
    w = evaluate_word(letters, word.kind, word.n)
    return w[d - 1], w[d]


def differing_transposition(p: Sequence[int]) -> tuple[int, int]:
    """
    The value pair (a, b) whose swap carries the involution image back to p.
    a and b sit at positions d, d+1 of the intermediate element above the
    toggled stage d, and satisfy a >= d+1, b >= d+2.  Rejects fixed points.

    >>> differing_transposition((4, 1, 5, 2, 3))
    (4, 5)
    """
    p = validate_permutation(p)
    word = canonical_word_a(p)
    t = _smallest_long_stage(word)
    if t is None:
        raise ValueError(f"{format_window(p)} is a fixed point; no transposition")
    return _transposition_values(word, t - 1)


def involution_b(s: Sequence[int]) -> InvolutionReport:
    """
    The type-B sign-reversing involution: toggle the leftmost near-maximal
    factor between its two forms, else fall back to the type-A style move.

    >>> involution_b((3, 1, -5, 2, -4)).output
    (3, 1, -4, 2, -5)
    >>> involution_b((-6, 1, 5, 3, 4, -2)).output
    (-5, 1, 6, 3, 4, -2)
    """
    s = validate_signed(s)
    word = canonical_word_b(s)
    n = word.n
    for i in range(n, 1, -1):                      # leftmost = largest stage
        f = word.factor(i)
        u, v = near_maximal_u(i), near_maximal_v(i)
        if f == u or f == v:
            factors = list(word.factors)
            factors[word.top - i] = v if f == u else u
            out = evaluate_word(tuple(k for g in factors for k in g), "B", n)
            return InvolutionReport(s, out, False, changed_factor_index=i)
    t = _smallest_long_stage(word)
    if t is None:
        return InvolutionReport(s, s, True)
    factors = _toggled_factors(word, t - 1, t - 2)
    out = evaluate_word(tuple(k for f in factors for k in f), "B", n)
    return InvolutionReport(s, out, False, changed_factor_index=t - 1)


# ---------------------------------------------------------------------------
# fixed points
# ---------------------------------------------------------------------------

def fixed_points(kind: str, n: int) -> Iterator[Window]:
    """
    The involution's fixed points: elements whose canonical word is a
    strictly decreasing sequence of distinct generator indices.  There are
    2^(n-1) of them in S_n (subsets of s_1..s_{n-1}) and 2^n in B_n
    (subsets of s_0..s_{n-1}).

    >>> sorted(fixed_points("S", 3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2)]
    """
    if kind == "S":
        lo, wordkind = 1, "A"
    elif kind == "B":
        lo, wordkind = 0, "B"
    else:
        raise ValueError("fixed_points supports kinds 'S' and 'B'")
    gens = range(n - 1, lo - 1, -1)
    for mask in range(1 << (n - lo)):
        word = tuple(k for k in gens if mask >> (k - lo) & 1)
        yield evaluate_word(word, wordkind, n)


def is_fixed_a(p: Sequence[int]) -> bool:
    word = canonical_word_a(validate_permutation(p))
    return all(len(f) <= 1 for f in word.factors)


def is_fixed_b(s: Sequence[int]) -> bool:
    word = canonical_word_b(validate_signed(s))
    # a near-maximal factor always has >= 2 letters, so this test covers both
    # branches of the involution
    return all(len(f) <= 1 for f in word.factors)


# ---------------------------------------------------------------------------
# type-D pairing maps
# ---------------------------------------------------------------------------

def _top_positions(s: Sequence[int]) -> tuple[int, int]:
    n = len(s)
    ia = next(i for i, x in enumerate(s) if abs(x) == n - 1)
    ib = next(i for i, x in enumerate(s) if abs(x) == n)
    return ia, ib


def _swap_top_magnitudes(s: Sequence[int]) -> Window:
    n = len(s)
    ia, ib = _top_positions(s)
    out = list(s)
    out[ia] = n if s[ia] > 0 else -n
    out[ib] = (n - 1) if s[ib] > 0 else -(n - 1)
    return tuple(out)


def pair_map_bd(s: Sequence[int]) -> Window:
    """
    The pairing used to cancel the signed zdrops sum over B_n - D_n: swap
    the magnitudes of the entries +-(n-1) and +-n, keeping each position's
    sign.  Defined on windows where +-(n-1) occurs left of +-n; the image
    has them in the opposite order and the type-D length parity flipped.

    >>> pair_map_bd((1, -2))
    (2, -1)
    """
    s = validate_signed(s)
    if len(s) < 2:
        raise ValueError("pairing needs n >= 2")
    ia, ib = _top_positions(s)
    if ia > ib:
        raise ValueError(
            f"{format_window(s)}: the letter +-{len(s) - 1} must occur left of +-{len(s)}")
    return _swap_top_magnitudes(s)


def pair_map_d(s: Sequence[int]) -> Window:
    """
    The same magnitude swap restricted to D_n, pairing off the signed
    drops_d sum in the inductive step.

    >>> pair_map_d((-1, -2))
    (-2, -1)
    """
    s = validate_signed(s)
    if not in_type_d(s):
        raise ValueError(f"{format_window(s)} has oddly many negatives; not in D_n")
    return pair_map_bd(s)
