"""Exact integer kernels for ordered-block partition counting.

Everything here returns plain Python ints, so there is no overflow and no
rounding anywhere.  Rational values never escape the package: the few
computations elsewhere that pass through fractions assert an integral result
at the boundary and raise IntegralityError otherwise.
"""

from __future__ import annotations

import math
from typing import Iterable

__all__ = [
    "IntegralityError",
    "exact_div",
    "factorial",
    "binomial",
    "multinomial",
    "lah",
    "rlah",
    "lah_bell_number",
    "r_lah_bell_number",
]


class IntegralityError(ArithmeticError):
    """A computation that must produce an integer left a remainder behind."""


def exact_div(a: int, b: int) -> int:
    """a // b, raising IntegralityError unless b divides a exactly."""
    q, rem = divmod(a, b)
    if rem:
        raise IntegralityError(f"{a} is not divisible by {b}")
    return q


def _check_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def factorial(n: int) -> int:
    """n! for n >= 0."""
    _check_nonnegative(n=n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, defined as 0 whenever k < 0 or k > n."""
    _check_nonnegative(n=n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """(sum of parts)! / product(part!), computed as a product of binomials."""
    total = 0
    result = 1
    for part in parts:
        _check_nonnegative(part=part)
        total += part
        result *= math.comb(total, part)
    return result


def lah(n: int, k: int) -> int:
    """Ways to split an n-set into k nonempty linearly ordered blocks.

    Closed form (n!/k!) * C(n-1, k-1).  Conventions: lah(0, 0) = 1,
    lah(n, 0) = 0 for n >= 1, and lah(n, k) = 0 for k > n.
    """
    _check_nonnegative(n=n, k=k)
    if k > n:
        return 0
    if n == 0:
        return 1
    return exact_div(factorial(n), factorial(k)) * binomial(n - 1, k - 1)


def rlah(n: int, k: int, r: int) -> int:
    """Ordered-block splitting count with r distinguished extra elements.

    Counts partitions of an (n+r)-set into k+r nonempty linearly ordered
    blocks such that the r distinguished elements land in distinct blocks.
    Closed form (n!/k!) * C(n+2r-1, k+2r-1); agrees with lah when r = 0.
    """
    _check_nonnegative(n=n, k=k, r=r)
    if k > n:
        return 0
    if r == 0:
        return lah(n, k)
    return exact_div(factorial(n), factorial(k)) * binomial(n + 2 * r - 1, k + 2 * r - 1)


def lah_bell_number(n: int) -> int:
    """Total number of ordered-block partitions of an n-set: sum of lah(n, k)."""
    return sum(lah(n, k) for k in range(n + 1))


def r_lah_bell_number(n: int, r: int) -> int:
    """Row total of the r-extended triangle: sum of rlah(n, k, r) over k."""
    return sum(rlah(n, k, r) for k in range(n + 1))
