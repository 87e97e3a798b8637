"""The polynomial part of the counting function, by two independent routes.

V_1 is the quasi-polynomial with every periodic coefficient replaced by its
mean; its coefficients are plain rationals. `v1_explicit` expands the closed
symmetric form, `r_coeffs_recursive` grows the coefficients one part at a time.
Both are expressed through central Bernoulli values B_l(1/2).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .bernoulli import central_value
from .errors import InputError
from .exactnum import (
    Rational,
    as_parts,
    binomial,
    compositions,
    format_rational,
    multinomial,
    parse_rational,
)

__all__ = [
    "Polynomial",
    "umbral_power",
    "v1_explicit",
    "w1_from_v1",
    "r_coeff_explicit",
    "r_mm_constant",
    "r_coeffs_recursive",
    "split_weight",
]


class Polynomial:
    """Dense univariate polynomial, exact rational coefficients, highest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int]):
        cs = tuple(Fraction(c) for c in coeffs)
        self.coeffs = cs if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, s: Rational | int) -> Rational:
        sf = Fraction(s)
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * sf + c
        return acc

    def shifted(self, delta: Rational | int) -> "Polynomial":
        """Coefficients of p(s + delta), re-expanded exactly."""
        df = Fraction(delta)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for idx, c in enumerate(self.coeffs):
            if not c:
                continue
            e = n - 1 - idx
            for k in range(e + 1):
                out[n - 1 - k] += c * binomial(e, k) * df ** (e - k)
        return Polynomial(out)

    def _trimmed(self) -> tuple[Fraction, ...]:
        cs = self.coeffs
        i = 0
        while i < len(cs) - 1 and cs[i] == 0:
            i += 1
        return cs[i:]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        pa = (Fraction(0),) * (n - len(a)) + a
        pb = (Fraction(0),) * (n - len(b)) + b
        return Polynomial(x + y for x, y in zip(pa, pb))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        pa = (Fraction(0),) * (n - len(a)) + a
        pb = (Fraction(0),) * (n - len(b)) + b
        return Polynomial(x - y for x, y in zip(pa, pb))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self) -> int:
        return hash(self._trimmed())

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> str:
        """JSON array of exact coefficient strings, highest power first."""
        return json.dumps([format_rational(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        raw = json.loads(text)
        if not isinstance(raw, list):
            raise InputError("polynomial JSON must be an array of rational strings")
        return cls(parse_rational(c) for c in raw)


def umbral_power(l: int, parts: Sequence[int]) -> Rational:
    """Expand (d_1 B + ... + d_m B)^l where B^e means the central value B_e(1/2).

    Each symbol keeps its own index: the power splits over compositions of l
    with a multinomial weight.
    """
    if l < 0:
        raise InputError("power must be nonnegative")
    total = Fraction(0)
    for r in compositions(l, len(parts)):
        term = Fraction(multinomial(l, r))
        for d, e in zip(parts, r):
            if not term:
                break
            term *= Fraction(d) ** e * central_value(e)
        total += term
    return total


def v1_explicit(parts: Sequence[int]) -> Polynomial:
    """Polynomial part in the symmetric variable: closed form, all parts at once."""
    d = as_parts(parts)
    m = len(d)
    pref = Fraction(1, math.factorial(m - 1) * math.prod(d))
    return Polynomial(
        pref * binomial(m - 1, l) * umbral_power(l, d) for l in range(m)
    )


def w1_from_v1(v1: Polynomial, parts: Sequence[int]) -> Polynomial:
    """Move to the counting frame: substitute s -> s + sum(parts)/2."""
    d = as_parts(parts)
    return v1.shifted(Fraction(sum(d), 2))


def r_coeff_explicit(j: int, parts: Sequence[int]) -> Rational:
    """Mean value of the j-th periodic coefficient, directly from the closed form."""
    d = as_parts(parts)
    m = len(d)
    if not isinstance(j, int) or not 1 <= j <= m:
        raise InputError(f"coefficient index must be in 1..{m}, got {j!r}")
    pref = Fraction(binomial(m - 1, j - 1), math.factorial(m - 1) * math.prod(d))
    return pref * umbral_power(j - 1, d)


def r_mm_constant(parts: Sequence[int]) -> Rational:
    """Constant remainder of the free coefficient.

    The one-part-at-a-time recursion reaches every coefficient except this
    piece, which involves the first m-1 parts only.
    """
    d = as_parts(parts)
    m = len(d)
    return umbral_power(m - 1, d[:-1]) / (math.factorial(m - 1) * math.prod(d))


def r_coeffs_recursive(parts: Sequence[int]) -> Polynomial:
    """Polynomial part grown one part at a time; independent of v1_explicit."""
    d = as_parts(parts)
    coeffs = [Fraction(1, d[0])]
    for mm in range(2, len(d) + 1):
        dm = Fraction(d[mm - 1])
        new = []
        for j in range(1, mm):
            acc = Fraction(0)
            for l in range(j):
                b = central_value(l)
                if not b:
                    continue
                acc += dm ** (l - 1) * binomial(mm - 1 - j + l, l) * b * coeffs[j - l - 1]
            new.append(acc / (mm - j))
        free = r_mm_constant(d[:mm])
        for l in range(1, mm):
            b = central_value(l)
            if not b:
                continue
            free += dm ** (l - 1) / l * b * coeffs[mm - l - 1]
        new.append(free)
        coeffs = new
    return Polynomial(coeffs)


def split_weight(l: int, m: int, i: int, r: Sequence[int]) -> Rational:
    """Weight of one pivot/composition bucket when (d_1 + ... + d_m)^l is split.

    `i` is the 1-based pivot position; `r` lists the exponents of the other
    m-1 positions in order. The divisor counts the zero exponents over all m
    positions, the pivot's own (absent, hence zero) exponent included, so that
    summing every bucket restores the plain power.
    """
    if not 0 <= l < m:
        raise InputError(f"need 0 <= l < m, got l={l}, m={m}")
    if not 1 <= i <= m:
        raise InputError(f"pivot must be in 1..{m}, got {i}")
    rr = tuple(r)
    if len(rr) != m - 1:
        raise InputError(f"need {m - 1} exponents, got {len(rr)}")
    z = 1 + sum(1 for e in rr if e == 0)
    return Fraction(multinomial(l, rr), z)
