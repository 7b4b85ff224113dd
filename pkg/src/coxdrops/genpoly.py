"""
Exact sparse polynomials in (t, p, q, x) and the signed/unsigned statistic
enumerators built from exhaustive group sweeps.

Coefficients are Python ints (arbitrary precision); every identity here is
an exact equality of coefficient dictionaries, never a numeric comparison.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from typing import Sequence

from . import perm_core as pc
from .laguerre import STEPS_MOTZKIN, heights, is_valid_path, motzkin_paths

VARS = ("t", "p", "q", "x")
Expo = tuple[int, int, int, int]

_ZERO: Expo = (0, 0, 0, 0)


class MultiPoly:
    """
    Sparse polynomial in the fixed variables t, p, q, x with integer
    coefficients; exponent vectors are 4-tuples and zero coefficients are
    never stored.

    >>> (MultiPoly.one() - MultiPoly.term(1, q=1)) ** 2
    MultiPoly('1 - 2*q + q^2')
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Expo, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_ZERO: 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ZERO: c})

    @classmethod
    def term(cls, coeff: int, t: int = 0, p: int = 0, q: int = 0, x: int = 0) -> "MultiPoly":
        return cls({(t, p, q, x): coeff})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        res = MultiPoly()
        res.terms = out
        return res

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[Expo, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        res = MultiPoly()
        res.terms = out
        return res

    def scale(self, c: int) -> "MultiPoly":
        res = MultiPoly()
        if c:
            res.terms = {e: c * v for e, v in self.terms.items()}
        return res

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ------------------------------------------------------------

    def substitute(self, **values: int) -> "MultiPoly":
        """Set some of t, p, q, x to integer values, e.g. ``f.substitute(p=1)``."""
        idx = {v: i for i, v in enumerate(VARS)}
        for name in values:
            if name not in idx:
                raise ValueError(f"unknown variable {name!r}")
        out = MultiPoly()
        for e, c in self.terms.items():
            coeff = c
            ee = list(e)
            for name, val in values.items():
                i = idx[name]
                coeff *= val ** e[i]
                ee[i] = 0
            if coeff:
                key = tuple(ee)
                v = out.terms.get(key, 0) + coeff
                if v:
                    out.terms[key] = v
                elif key in out.terms:
                    del out.terms[key]
        return out

    def coefficient(self, t: int = 0, p: int = 0, q: int = 0, x: int = 0) -> int:
        return self.terms.get((t, p, q, x), 0)

    def univariate(self, var: str) -> dict[int, int]:
        """Exponent -> coefficient map, requiring all other variables absent."""
        i = VARS.index(var)
        out = {}
        for e, c in self.terms.items():
            if any(e[j] for j in range(4) if j != i):
                raise ValueError(f"polynomial is not univariate in {var}")
            out[e[i]] = c
        return out

    # -- rendering ----------------------------------------------------------

    def pretty(self) -> str:
        """
        Human-readable form with terms in sorted exponent order.

        >>> signed_trivariate(2).pretty()
        '1 - t*p*q'
        """
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(VARS, e) if k)
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)

    def to_json_obj(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in sorted(self.terms.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __repr__(self) -> str:
        return f"MultiPoly({self.pretty()!r})"


def poly_from_counter(counts: Counter, key_to_expo) -> MultiPoly:
    """Build a polynomial from an accumulation Counter."""
    out = MultiPoly()
    for k, c in counts.items():
        if c:
            e = key_to_expo(k)
            out.terms[e] = out.terms.get(e, 0) + c
    out.terms = {e: c for e, c in out.terms.items() if c}
    return out


def q_integer(k: int) -> MultiPoly:
    """
    The q-integer 1 + q + ... + q^(k-1); zero when k = 0.

    >>> q_integer(3).pretty()
    '1 + q + q^2'
    """
    if k < 0:
        raise ValueError("q_integer needs k >= 0")
    return MultiPoly({(0, 0, j, 0): 1 for j in range(k)})


# ---------------------------------------------------------------------------
# enumerators over full groups
# ---------------------------------------------------------------------------

def signed_trivariate(n: int) -> MultiPoly:
    """
    Sum over S_n of (-1)^inv t^exc p^depth q^drops, which factors as
    (1 - t p q)^(n-1).

    >>> signed_trivariate(2).pretty()
    '1 - t*p*q'
    """
    counts: Counter = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        sgn = -1 if pc.inv(w) % 2 else 1
        counts[(pc.exc(w), pc.depth(w), pc.drops(w))] += sgn
    return poly_from_counter(counts, lambda k: (k[0], k[1], k[2], 0))


def signed_drops(kind: str, n: int) -> MultiPoly:
    """
    The signed univariate drops enumerator of a group, using its own length
    statistic: sum of (-1)^inv q^drops over S_n, (-1)^inv_b q^drops_b over
    B_n, or (-1)^inv_d q^drops_d over D_n.  Equals (1-q)^(n-1), (1-q)^n and
    (1-q^3)(1-q)^(n-1) respectively.
    """
    counts: Counter = Counter()
    if kind == "S":
        for w in itertools.permutations(range(1, n + 1)):
            counts[pc.drops(w)] += -1 if pc.inv(w) % 2 else 1
    elif kind == "B":
        for s in pc.iter_group("B", n):
            counts[pc.drops_b(s)] += -1 if pc.inv_b(s) % 2 else 1
    elif kind == "D":
        for s in pc.iter_group("D", n):
            counts[pc.drops_d(s)] += -1 if pc.inv_d(s) % 2 else 1
    else:
        raise ValueError("signed_drops kinds: 'S', 'B', 'D'")
    return poly_from_counter(counts, lambda k: (0, 0, k, 0))


def drops_poly(kind: str, n: int) -> MultiPoly:
    """Unsigned drops enumerator over S_n or the even subgroup A_n."""
    if kind not in ("S", "A"):
        raise ValueError("drops_poly kinds: 'S', 'A'")
    counts: Counter = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        if kind == "A" and pc.inv(w) % 2:
            continue
        counts[pc.drops(w)] += 1
    return poly_from_counter(counts, lambda k: (0, 0, k, 0))


def dep_inv_poly(n: int) -> MultiPoly:
    """
    Sum over S_n of x^depth q^inv; the empty product gives 1 at n = 0.

    >>> dep_inv_poly(3).pretty()
    '1 + 2*q*x + 2*q^2*x^2 + q^3*x^2'
    """
    counts: Counter = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        counts[(pc.depth(w), pc.inv(w))] += 1
    return poly_from_counter(counts, lambda k: (0, 0, k[1], k[0]))


def signed_exc_check(n: int) -> bool:
    """signed_trivariate specialized at p = q = 1 equals (1 - t)^(n-1)."""
    lhs = signed_trivariate(n).substitute(p=1, q=1)
    rhs = (MultiPoly.one() - MultiPoly.term(1, t=1)) ** (n - 1)
    return lhs == rhs


def bivariate_identity_check(n: int) -> bool:
    """
    Whether sum q^depth t^exc  ==  sum q^drops t^des over S_n (always true).

    >>> bivariate_identity_check(3)
    True
    """
    a: Counter = Counter()
    b: Counter = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        a[(pc.depth(w), pc.exc(w))] += 1
        b[(pc.drops(w), pc.des(w))] += 1
    return a == b


# ---------------------------------------------------------------------------
# truncated series and the continued-fraction convergent
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """
    Power series in t truncated at order N; the coefficient of t^k is a
    MultiPoly (in practice a polynomial in x and q).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[MultiPoly] | None = None):
        self.order = order
        self.coeffs = [MultiPoly.zero() for _ in range(order + 1)]
        if coeffs is not None:
            for i, c in enumerate(coeffs[:order + 1]):
                self.coeffs[i] = c

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        s = cls(order)
        s.coeffs[0] = MultiPoly.one()
        return s

    def coefficient(self, k: int) -> MultiPoly:
        if not 0 <= k <= self.order:
            raise ValueError(f"order-{self.order} series has no t^{k} coefficient")
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TruncatedSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = TruncatedSeries(self.order)
        for i in range(self.order + 1):
            out.coeffs[i] = self.coeffs[i] + other.coeffs[i]
        return out

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = TruncatedSeries(self.order)
        for i in range(self.order + 1):
            out.coeffs[i] = self.coeffs[i] - other.coeffs[i]
        return out

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = TruncatedSeries(self.order)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out.coeffs[i + j] = out.coeffs[i + j] + a * b
        return out

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        out = TruncatedSeries(self.order)
        for i in range(self.order + 1 - k):
            out.coeffs[i + k] = self.coeffs[i]
        return out

    def scale_poly(self, f: MultiPoly) -> "TruncatedSeries":
        out = TruncatedSeries(self.order)
        for i, a in enumerate(self.coeffs):
            if a:
                out.coeffs[i] = a * f
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be 1."""
        if self.coeffs[0] != MultiPoly.one():
            raise ValueError("series inverse needs constant term 1")
        out = TruncatedSeries(self.order)
        out.coeffs[0] = MultiPoly.one()
        for k in range(1, self.order + 1):
            acc = MultiPoly.zero()
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out.coeffs[k - j]
            out.coeffs[k] = -acc
        return out


def _cfrac_c(k: int) -> MultiPoly:
    return MultiPoly.term(1, x=k, q=k) * (q_integer(k) + q_integer(k + 1))


def _cfrac_b(m: int) -> MultiPoly:
    return MultiPoly.term(1, x=2 * m - 1, q=2 * m - 1) * (q_integer(m) ** 2)


def jfraction_convergent(order: int) -> TruncatedSeries:
    """
    The J-fraction 1 / (1 - c_0 t - b_1 t^2 / (1 - c_1 t - ...)) with
    c_k = x^k q^k ([k]_q + [k+1]_q) and b_m = x^(2m-1) q^(2m-1) [m]_q^2,
    evaluated bottom up from depth order+1 and truncated at t^order.  The
    coefficient of t^n is the (depth, inv) enumerator of S_n.

    >>> jfraction_convergent(2).coefficient(2).pretty()
    '1 + q*x'
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    tail = TruncatedSeries.one(order)
    for k in range(order, -1, -1):
        den = TruncatedSeries.one(order)
        den.coeffs[1] = den.coeffs[1] - _cfrac_c(k)
        den = den - tail.scale_poly(_cfrac_b(k + 1)).shift(2)
        tail = den.inverse()
    return tail


# ---------------------------------------------------------------------------
# descent blocks and the MAD statistic
# ---------------------------------------------------------------------------

def descent_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    """
    Maximal strictly-decreasing runs; concatenating them gives back p.

    >>> descent_blocks((2, 3, 1))
    [(2,), (3, 1)]
    """
    blocks: list[tuple[int, ...]] = []
    cur = [p[0]]
    for v in p[1:]:
        if cur[-1] > v:
            cur.append(v)
        else:
            blocks.append(tuple(cur))
            cur = [v]
    blocks.append(tuple(cur))
    return blocks


def right_embracings(p: Sequence[int]) -> tuple[int, ...]:
    """
    For each letter, the number of descent blocks strictly to its right
    whose first letter exceeds it and whose last letter is below it; blocks
    of length one never embrace.
    """
    blocks = descent_blocks(p)
    out = []
    for bi, block in enumerate(blocks):
        later = [b for b in blocks[bi + 1:] if len(b) >= 2]
        for v in block:
            out.append(sum(1 for b in later if b[0] > v > b[-1]))
    return tuple(out)


def mad(p: Sequence[int]) -> int:
    """
    The Mahonian statistic drops + total right-embracing count.

    >>> mad((2, 3, 1))
    3
    """
    return pc.drops(p) + sum(right_embracings(p))


def drops_mad_poly(n: int) -> MultiPoly:
    """Sum over S_n of x^drops q^mad; equidistributed with (depth, inv)."""
    counts: Counter = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        counts[(pc.drops(w), mad(w))] += 1
    return poly_from_counter(counts, lambda k: (0, 0, k[1], k[0]))


# ---------------------------------------------------------------------------
# per-path enumerators
# ---------------------------------------------------------------------------

def per_path_enumerator(steps: str) -> MultiPoly:
    """
    The (depth, inv) enumerator of the permutations whose Motzkin shape is
    this path: the product over steps at pre-step height h of
    x^h q^h [h+1]_q (N), x^h q^h [h]_q (S), x^h q^h ([h]_q + [h+1]_q) (E).

    >>> per_path_enumerator("NES").pretty()
    '2*q^2*x^2 + q^3*x^2'
    """
    if not is_valid_path(steps, STEPS_MOTZKIN):
        raise ValueError(f"{steps!r} is not a Motzkin path")
    out = MultiPoly.one()
    for s, h in zip(steps, heights(steps)):
        if s == "N":
            f = q_integer(h + 1)
        elif s == "S":
            f = q_integer(h)
        else:
            f = q_integer(h) + q_integer(h + 1)
        out = out * (MultiPoly.term(1, x=h, q=h) * f)
    return out


def per_path_identity_check(n: int) -> bool:
    """Whether the per-path enumerators sum to the (depth, inv) enumerator."""
    total = MultiPoly.zero()
    for steps in motzkin_paths(n):
        total = total + per_path_enumerator(steps)
    return total == dep_inv_poly(n)


# ---------------------------------------------------------------------------
# exact moments
# ---------------------------------------------------------------------------

def drops_moments(kind: str, n: int) -> tuple[Fraction, Fraction]:
    """
    Exact mean and variance of drops under the uniform distribution on S_n
    or A_n, computed from the drops generating polynomial.

    >>> drops_moments("S", 3)
    (Fraction(4, 3), Fraction(5, 9))
    """
    dist = drops_poly(kind, n).univariate("q")
    total = sum(dist.values())
    mean = Fraction(sum(k * c for k, c in dist.items()), total)
    second = Fraction(sum(k * k * c for k, c in dist.items()), total)
    return mean, second - mean * mean
