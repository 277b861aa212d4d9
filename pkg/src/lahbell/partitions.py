"""Streaming enumeration of the constraint sets behind the partition sums.

A PiWitness for (n, k) is a multiplicity vector (j_1, ..., j_{n-k+1}) with
sum(j_i) = k and sum(i * j_i) = n: j_i counts the blocks of size i in a
partition of an n-set into k nonempty blocks.

A LambdaWitness for (n, k, rho) is a pair of multiplicity vectors
(k_1, k_2, ...) and (r_0, r_1, ...) with sum(k_i) = k, sum(r_i) = rho and
sum over i >= 1 of i * (k_i + r_i) = n.  The r-side starts at index 0, a
weightless slot that absorbs distinguished blocks carrying no extra element.

Both enumerators are generators yielding witnesses in descending
lexicographic order on the dense tuple read from the lowest index upward
(k-part first, then r-part), so streams are reproducible and suitable for
golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exact_core import exact_div, factorial

__all__ = [
    "PiWitness",
    "LambdaWitness",
    "enumerate_pi",
    "enumerate_lambda",
    "lah_via_pi",
    "rlah_via_lambda",
]


def _trimmed(values: list[int]) -> tuple[int, ...]:
    end = len(values)
    while end > 0 and values[end - 1] == 0:
        end -= 1
    return tuple(values[:end])


@dataclass(frozen=True)
class PiWitness:
    """Block-size multiplicities (j_1, ..., j_{n-k+1}); j_i blocks of size i."""

    j: tuple[int, ...]


@dataclass(frozen=True)
class LambdaWitness:
    """Paired multiplicities: k_part at indices 1.., r_part at indices 0..

    Trailing zeros are trimmed on construction so equal witnesses compare
    and hash identically regardless of how densely they were built.
    """

    k_part: tuple[int, ...]
    r_part: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "k_part", _trimmed(list(self.k_part)))
        object.__setattr__(self, "r_part", _trimmed(list(self.r_part)))


def enumerate_pi(n: int, k: int) -> Iterator[PiWitness]:
    """Yield every PiWitness for (n, k), largest-first lexicographically.

    The stream is empty when k > n, and holds the single all-zero witness
    when n = k = 0.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return
    length = n - k + 1
    buf = [0] * length

    def rec(pos: int, units: int, weight: int) -> Iterator[PiWitness]:
        if pos > length:
            if units == 0 and weight == 0:
                yield PiWitness(tuple(buf))
            return
        hi = min(units, weight // pos)
        for v in range(hi, -1, -1):
            rest_units = units - v
            rest_weight = weight - v * pos
            # remaining slots sit at indices pos+1..length
            if rest_weight > rest_units * length:
                continue
            if rest_weight < rest_units * (pos + 1):
                continue
            buf[pos - 1] = v
            yield from rec(pos + 1, rest_units, rest_weight)
        buf[pos - 1] = 0

    yield from rec(1, k, n)


def enumerate_lambda(n: int, k: int, rho: int) -> Iterator[LambdaWitness]:
    """Yield every LambdaWitness for (n, k, rho), largest-first as documented.

    Empty when k > n.  For rho = 0 the r-part is forced to all zeros; for
    n = k = 0 the stream holds the single witness with r_0 = rho.
    """
    if n < 0 or k < 0 or rho < 0:
        raise ValueError("n, k and rho must be nonnegative")
    if k > n:
        return
    kbuf = [0] * n
    rbuf = [0] * (n + 1)

    def rec_r(i: int, units: int, weight: int) -> Iterator[LambdaWitness]:
        if i > n:
            if units == 0 and weight == 0:
                yield LambdaWitness(tuple(kbuf), tuple(rbuf))
            return
        hi = units if i == 0 else min(units, weight // i)
        for v in range(hi, -1, -1):
            rest_units = units - v
            rest_weight = weight - v * i
            if rest_weight > rest_units * n:
                continue
            if rest_weight < rest_units * (i + 1):
                continue
            rbuf[i] = v
            yield from rec_r(i + 1, rest_units, rest_weight)
        rbuf[i] = 0

    def rec_k(i: int, units: int, weight: int) -> Iterator[LambdaWitness]:
        if i > n:
            if units == 0:
                yield from rec_r(0, rho, weight)
            return
        hi = min(units, weight // i)
        for v in range(hi, -1, -1):
            rest_units = units - v
            rest_weight = weight - v * i
            if rest_weight > (rest_units + rho) * n:
                continue
            if rest_weight < rest_units * (i + 1):
                continue
            kbuf[i - 1] = v
            yield from rec_k(i + 1, rest_units, rest_weight)
        kbuf[i - 1] = 0

    yield from rec_k(1, k, n)


def lah_via_pi(n: int, k: int) -> int:
    """Partition-sum route to lah(n, k): sum over witnesses of n!/prod(j_i!)."""
    total = 0
    nf = factorial(n)
    for w in enumerate_pi(n, k):
        denom = 1
        for ji in w.j:
            if ji > 1:
                denom *= factorial(ji)
        total += exact_div(nf, denom)
    return total


def rlah_via_lambda(n: int, k: int, r: int) -> int:
    """Constraint-sum route to rlah(n, k, r).

    Sums n!/prod(k_i!) * (2r)!/prod(r_i!) over the (n, k, 2r) witnesses.
    """
    total = 0
    nf = factorial(n)
    rf = factorial(2 * r)
    for w in enumerate_lambda(n, k, 2 * r):
        dk = 1
        for v in w.k_part:
            if v > 1:
                dk *= factorial(v)
        dr = 1
        for v in w.r_part:
            if v > 1:
                dr *= factorial(v)
        total += exact_div(nf, dk) * exact_div(rf, dr)
    return total
