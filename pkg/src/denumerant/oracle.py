"""Ground-truth counting: generating-function DP plus a brute-force cross-check.

Everything here is plain integer arithmetic and knows nothing about
certificates; the rest of the package is validated against this module.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import CapacityError, InputError
from .exactnum import HalfInt, HalfLike, as_parts

__all__ = ["CountTable", "count_dp", "count_enum", "shifted_q", "DEFAULT_GUARD_LIMIT", "GUARD_ENV"]

DEFAULT_GUARD_LIMIT = 10_000_000
GUARD_ENV = "RPF_GUARD_LIMIT"


@dataclass(frozen=True)
class CountTable:
    """Counts for one part list at n = 0..max_n."""

    parts: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        # counting convention: nothing to count below zero
        if n < 0:
            return 0
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def to_csv(self) -> str:
        lines = ["n,count"]
        lines.extend(f"{n},{c}" for n, c in enumerate(self.counts))
        return "\n".join(lines) + "\n"


def count_dp(parts, max_n: int) -> CountTable:
    """Coefficients of prod_i 1/(1 - t^(d_i)) up to t^max_n.

    One in-place convolution pass per part; linear in max_n per part.
    """
    d = as_parts(parts)
    if not isinstance(max_n, int) or max_n < 0:
        raise InputError(f"max_n must be a nonnegative integer, got {max_n!r}")
    counts = [0] * (max_n + 1)
    counts[0] = 1
    for di in d:
        for n in range(di, max_n + 1):
            counts[n] += counts[n - di]
    return CountTable(d, tuple(counts))


def _guard_limit(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(GUARD_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"{GUARD_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_GUARD_LIMIT


def count_enum(parts, n: int, guard_limit: int | None = None) -> int:
    """Count solution vectors by direct nested iteration.

    Deliberately naive and independent of count_dp. The work estimate
    prod(n // d_i + 1) is checked against the guard limit first; the limit
    comes from the argument, the RPF_GUARD_LIMIT environment variable, or the
    default, in that order.
    """
    d = as_parts(parts)
    if not isinstance(n, int):
        raise InputError(f"n must be an integer, got {n!r}")
    if n < 0:
        return 0
    limit = _guard_limit(guard_limit)
    box = math.prod(n // di + 1 for di in d)
    if box > limit:
        raise CapacityError(
            f"enumeration would visit up to {box} vectors, over the limit {limit}"
        )

    def rec(idx: int, rem: int) -> int:
        if idx == len(d):
            return 1 if rem == 0 else 0
        di = d[idx]
        return sum(rec(idx + 1, rem - x * di) for x in range(rem // di + 1))

    return rec(0, n)


def shifted_q(parts, s: HalfLike) -> int:
    """The counting side of the shifted frame: count at n = s - sum(parts)/2.

    Zero when that n is negative or off the lattice of integers.
    """
    d = as_parts(parts)
    sp = HalfInt.coerce(s)
    t = sp.twice - sum(d)  # twice the would-be n
    if t < 0 or t % 2:
        return 0
    n = t // 2
    return count_dp(d, n)[n]
