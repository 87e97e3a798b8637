"""Quasi-polynomial certificates for restricted partition counting.

A certificate for an ordered part list d = (d_1, ..., d_m) is

    V(s) = sum_{j=1}^{m} R_j(s) * s^(m-j)

with each R_j periodic of a period dividing tau = lcm(d). Counts live in the
shifted frame: the number of solutions of sum x_i d_i = n is V(n + xi) with
xi = sum(d)/2. Two constructions are provided:

  * build_recursive: start from one part and fold parts in one at a time
    (base_case / extend_recursive);
  * build_explicit: a single pass over pivot positions and shift sums.

They share no intermediate state, which is what makes table-level agreement a
meaningful check.

Periodic coefficients live on the half-integer lattice: a function of period T
stores 2T rationals indexed by the scaled residue 2s mod 2T, so integer and
half-odd points coexist in one table and every shift is index arithmetic.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import polypart
from .bernoulli import bernoulli_poly
from .errors import InputError, IntegralityError
from .exactnum import (
    HalfInt,
    HalfLike,
    Rational,
    as_parts,
    binomial,
    compositions,
    format_rational,
    lcm_of,
    multinomial,
    parse_rational,
)

__all__ = [
    "PeriodicFn",
    "QuasiPoly",
    "psi",
    "tau_table",
    "base_case",
    "extend_recursive",
    "build_recursive",
    "closure_fn",
    "build_explicit",
]


class PeriodicFn:
    """An exact periodic function on the half-integer lattice.

    ``values[rho]`` is the value at every point s with 2s = rho (mod 2*period);
    even rho are the integer points, odd rho the half-odd ones.
    """

    __slots__ = ("period", "values")

    def __init__(self, period: int, values: Iterable[Rational | int]):
        if not isinstance(period, int) or period < 1:
            raise InputError(f"period must be a positive integer, got {period!r}")
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != 2 * period:
            raise InputError(f"period {period} needs {2 * period} residue values, got {len(vals)}")
        self.period = period
        self.values = vals

    @classmethod
    def constant(cls, value: Rational | int, period: int = 1) -> "PeriodicFn":
        return cls(period, [Fraction(value)] * (2 * period))

    def at(self, s: HalfLike) -> Rational:
        return self.values[HalfInt.coerce(s).twice % (2 * self.period)]

    def at_twice(self, twice: int) -> Rational:
        """Value at the point twice/2; the fast path used by the builders."""
        return self.values[twice % (2 * self.period)]

    def with_period(self, target: int) -> "PeriodicFn":
        """Retabulate at a multiple of the current period. Values unchanged."""
        if not isinstance(target, int) or target < 1 or target % self.period:
            raise InputError(f"{target!r} is not a positive multiple of period {self.period}")
        if target == self.period:
            return self
        span = 2 * self.period
        return PeriodicFn(target, [self.values[r % span] for r in range(2 * target)])

    def natural_average(self, parity: int) -> Rational:
        """Mean over one period of the integer-spaced grid with 2s = parity (mod 2)."""
        sel = self.values[parity % 2 :: 2]
        return sum(sel, Fraction(0)) / len(sel)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PeriodicFn):
            return NotImplemented
        return self.period == other.period and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.period, self.values))

    def __repr__(self) -> str:
        return f"PeriodicFn(period={self.period})"


class QuasiPoly:
    """A certificate V(s) = sum_j R_j(s) s^(m-j) for one ordered part list.

    Immutable once built. ``coeffs[j-1]`` is R_j; every coefficient period
    divides the master period.
    """

    __slots__ = ("parts", "coeffs", "master_period")

    def __init__(
        self,
        parts: Sequence[int],
        coeffs: Sequence[PeriodicFn],
        master_period: int | None = None,
    ):
        self.parts = as_parts(parts)
        cs = tuple(coeffs)
        if len(cs) != len(self.parts):
            raise InputError(
                f"{len(self.parts)} parts need {len(self.parts)} coefficient functions, got {len(cs)}"
            )
        period = lcm_of(self.parts) if master_period is None else master_period
        if not isinstance(period, int) or period < 1:
            raise InputError(f"master period must be a positive integer, got {period!r}")
        for fn in cs:
            if period % fn.period:
                raise InputError(
                    f"coefficient period {fn.period} does not divide master period {period}"
                )
        self.coeffs = cs
        self.master_period = period

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def xi(self) -> HalfInt:
        """The symmetrizing shift sum(parts)/2 between the two frames."""
        return HalfInt(sum(self.parts))

    def value(self, s: HalfLike) -> Rational:
        """V(s) at any half-integer lattice point, by Horner over the powers."""
        sp = HalfInt.coerce(s)
        sf = sp.fraction
        acc = Fraction(0)
        for fn in self.coeffs:
            acc = acc * sf + fn.at_twice(sp.twice)
        return acc

    def count(self, n: int):
        """The count at integer n, i.e. V(n + xi), returned as an exact int.

        A fractional value for n >= 0 means the certificate is wrong and raises;
        for n < 0 the (possibly fractional) continuation value is returned as is.
        """
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"n must be an integer, got {n!r}")
        v = self.value(HalfInt(2 * n + sum(self.parts)))
        if v.denominator == 1:
            return int(v)
        if n >= 0:
            raise IntegralityError(f"count at n={n} evaluated to {v}, not an integer")
        return v

    def aligned(self, target: int) -> "QuasiPoly":
        """Same function, every table retabulated at the target period."""
        if not isinstance(target, int) or target < 1 or target % self.master_period:
            raise InputError(
                f"{target!r} is not a positive multiple of the master period {self.master_period}"
            )
        return QuasiPoly(self.parts, tuple(f.with_period(target) for f in self.coeffs), target)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        return (
            self.parts == other.parts
            and self.master_period == other.master_period
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.parts, self.master_period, self.coeffs))

    def __repr__(self) -> str:
        return f"QuasiPoly(parts={self.parts}, master_period={self.master_period})"

    def to_json_dict(self) -> dict:
        coefficients = []
        for idx, fn in enumerate(self.coeffs):
            coefficients.append(
                {
                    "power": self.m - 1 - idx,
                    "period": fn.period,
                    "values": {
                        str(rho): format_rational(fn.values[rho])
                        for rho in range(2 * fn.period)
                    },
                }
            )
        return {
            "parts": list(self.parts),
            "master_period": self.master_period,
            "xi": str(self.xi),
            "coefficients": coefficients,
        }

    def to_json(self) -> str:
        """Deterministic JSON: fixed key order, numeric residue order, exact strings."""
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "QuasiPoly":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"not valid JSON: {exc}") from exc
        try:
            parts = tuple(raw["parts"])
            entries = sorted(raw["coefficients"], key=lambda e: -e["power"])
            powers = [e["power"] for e in entries]
            if powers != list(range(len(parts) - 1, -1, -1)):
                raise InputError(f"coefficient powers must cover {len(parts)-1}..0, got {powers}")
            fns = []
            for entry in entries:
                period = entry["period"]
                vals = [parse_rational(entry["values"][str(rho)]) for rho in range(2 * period)]
                fns.append(PeriodicFn(period, vals))
            q = cls(parts, tuple(fns), raw["master_period"])
            if str(q.xi) != raw["xi"]:
                raise InputError(f"shift field {raw['xi']!r} does not match the parts")
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed certificate JSON: {exc}") from exc
        return q


def psi(d: int, x: HalfLike) -> Rational:
    """Indicator that d divides x; half-odd x is never divisible."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"modulus must be a positive integer, got {d!r}")
    return Fraction(1) if HalfInt.coerce(x).twice % (2 * d) == 0 else Fraction(0)


def tau_table(parts: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Pivot-dependent periods: row i, column n holds lcm(d_1..d_n, d_i).

    The diagonal is d_i itself, and the last column of every row is the full
    lcm.
    """
    d = as_parts(parts)
    m = len(d)
    return tuple(
        tuple(d[i] if n == i else math.lcm(*d[: n + 1], d[i]) for n in range(m))
        for i in range(m)
    )


def base_case(d1: int) -> QuasiPoly:
    """One part: V(s) is the indicator of d_1 | (s - d_1/2), period d_1."""
    (d1,) = as_parts([d1])
    values = [
        Fraction(1) if (rho - d1) % (2 * d1) == 0 else Fraction(0)
        for rho in range(2 * d1)
    ]
    return QuasiPoly((d1,), (PeriodicFn(d1, values),), d1)


def closure_fn(parts: Sequence[int]) -> PeriodicFn:
    """The last-part-periodic remainder of the free coefficient.

    This is the piece of R_m the one-part extension cannot reach from the
    previous level: the constant remainder with 1/d_m replaced by the shifted
    divisibility indicator and each central Bernoulli symbol replaced by its
    finite shift sum. Prefix periods fold the last part in first:
    t_i = lcm(d_m, d_1, ..., d_i). Period of the result: d_m.

    Per composition, the product over positions is folded in the residue ring
    mod 2*d_m instead of expanding the full multi-index grid, which keeps the
    work polynomial in the periods rather than proportional to their product.
    """
    d = as_parts(parts)
    m = len(d)
    last = d[-1]
    prefix = d[:-1]
    taus = [math.lcm(last, *prefix[: i + 1]) for i in range(len(prefix))]
    size = 2 * last
    table = [Fraction(0)] * size

    # options[i][e]: (weight, shift) pairs for symbol power e at prefix position i
    options: list[list[list[tuple[Fraction, int]]]] = []
    for i, di in enumerate(prefix):
        t = taus[i]
        per_e = []
        for e in range(m):
            tpow = Fraction(t) ** (e - 1)
            per_e.append(
                [
                    (tpow * bernoulli_poly(e, 1 - Fraction((2 * p + 1) * di, 2 * t)),
                     ((2 * p + 1) * di) % size)
                    for p in range(t // di)
                ]
            )
        options.append(per_e)

    for r in compositions(m - 1, m - 1):
        state = {last % size: Fraction(multinomial(m - 1, r))}
        for i, e in enumerate(r):
            nxt: dict[int, Fraction] = {}
            for res, acc in state.items():
                for w, sh in options[i][e]:
                    if not w:
                        continue
                    key = (res + sh) % size
                    nxt[key] = nxt.get(key, Fraction(0)) + acc * w
            state = nxt
            if not state:
                break
        for res, acc in state.items():
            table[res] += acc

    fact = math.factorial(m - 1)
    return PeriodicFn(last, [v / fact for v in table])


def extend_recursive(prev: QuasiPoly, d_new: int) -> QuasiPoly:
    """Grow a certificate by one more part.

    Coefficients R_1..R_{m-1} follow the period-lifted recursion over shifted
    samples of the previous level; the free coefficient R_m is the reachable
    partial sum plus the closure remainder. The previous certificate is only
    read through its coefficient functions, so its tabulation period does not
    matter.
    """
    (d_new,) = as_parts([d_new])
    parts = prev.parts + (d_new,)
    m = len(parts)
    tau = lcm_of(parts)
    delta = tau // d_new
    two_tau = 2 * tau

    # shift weights B_l(1 - (p + 1/2) d_new / tau), shared by every coefficient
    bvals = [
        [bernoulli_poly(l, 1 - Fraction((2 * p + 1) * d_new, 2 * tau)) for p in range(delta)]
        for l in range(m)
    ]

    coeffs: list[PeriodicFn] = []
    for j in range(1, m):
        table = [Fraction(0)] * two_tau
        for l in range(j):
            c = Fraction(d_new) ** (l - 1) * binomial(m - 1 - j + l, l) * Fraction(delta) ** (l - 1)
            prev_fn = prev.coeffs[j - l - 1]
            for p in range(delta):
                b = bvals[l][p]
                if not b:
                    continue
                w = c * b
                shift = (2 * p + 1) * d_new
                for rho in range(two_tau):
                    table[rho] += w * prev_fn.at_twice(rho - shift)
        coeffs.append(PeriodicFn(tau, [v / (m - j) for v in table]))

    table = [Fraction(0)] * two_tau
    for l in range(1, m):
        c = Fraction(tau) ** (l - 1) / l
        prev_fn = prev.coeffs[m - l - 1]
        for p in range(delta):
            b = bvals[l][p]
            if not b:
                continue
            w = c * b
            shift = (2 * p + 1) * d_new
            for rho in range(two_tau):
                table[rho] += w * prev_fn.at_twice(rho - shift)
    closure = closure_fn(parts)
    coeffs.append(
        PeriodicFn(tau, [table[rho] + closure.at_twice(rho) for rho in range(two_tau)])
    )
    return QuasiPoly(parts, tuple(coeffs), tau)


def build_recursive(parts: Sequence[int]) -> QuasiPoly:
    """Certificate by the one-part-at-a-time route."""
    d = as_parts(parts)
    cert = base_case(d[0])
    for dn in d[1:]:
        cert = extend_recursive(cert, dn)
    return cert


def build_explicit(parts: Sequence[int]) -> QuasiPoly:
    """Certificate in a single pass over pivots and shift compositions.

    For each pivot i the power bucket l collects, over compositions r of l on
    the other positions, the split weight times the product of per-position
    shift sums; the pivot contributes the divisibility indicator with its own
    half-shift. Each product is folded in the residue ring mod 2*d_i (see
    closure_fn) and then spread into the master table.
    """
    d = as_parts(parts)
    m = len(d)
    tau = lcm_of(d)
    two_tau = 2 * tau
    taus = tau_table(d)
    fact = math.factorial(m - 1)

    acc = [[Fraction(0)] * two_tau for _ in range(m)]
    for i in range(m):
        di = d[i]
        size = 2 * di
        others = [n for n in range(m) if n != i]

        options: list[list[list[tuple[Fraction, int]]]] = []
        for n in others:
            t = taus[i][n]
            dn = d[n]
            per_e = []
            for e in range(m):
                tpow = Fraction(t) ** (e - 1)
                per_e.append(
                    [
                        (tpow * bernoulli_poly(e, 1 - Fraction((2 * p + 1) * dn, 2 * t)),
                         ((2 * p + 1) * dn) % size)
                        for p in range(t // dn)
                    ]
                )
            options.append(per_e)

        for l in range(m):
            bucket = acc[l]
            for r in compositions(l, m - 1):
                state = {di % size: polypart.split_weight(l, m, i + 1, r)}
                for k, e in enumerate(r):
                    nxt: dict[int, Fraction] = {}
                    for res, a in state.items():
                        for w, sh in options[k][e]:
                            if not w:
                                continue
                            key = (res + sh) % size
                            nxt[key] = nxt.get(key, Fraction(0)) + a * w
                    state = nxt
                    if not state:
                        break
                for res, a in state.items():
                    for rho in range(res, two_tau, size):
                        bucket[rho] += a

    coeffs = []
    for l in range(m):
        scale = Fraction(binomial(m - 1, l), fact)
        coeffs.append(PeriodicFn(tau, [scale * v for v in acc[l]]))
    return QuasiPoly(d, tuple(coeffs), tau)
