"""Truncated formal power series over the integer polynomial ring.

Storage convention: a series keeps, for each n up to its order, the value
n! times the t^n coefficient.  Every series used here has integer (or
integer-polynomial) entries on that scaled lattice, so the whole tower of
exponential generating functions stays inside exact integer arithmetic:

  - reading off an exponential coefficient is a direct lookup,
  - the Cauchy product becomes a binomial convolution,
  - the derivative becomes an index shift,
  - dividing the k-th power of a constant-term-zero series by k! is an
    exact division (the quotient coefficients are multinomial-weighted
    sums of integer products).

All values are immutable; operations return new series truncated to the
smaller operand order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .bell import FACTORIALS, ONES, SequenceSpec, complete_bell
from .exact_core import factorial
from .poly import ONE, ZERO, PolyAccumulator, SparsePolynomial, as_poly

__all__ = [
    "TruncatedSeries",
    "DerivativeCheck",
    "zero",
    "one",
    "from_sequence",
    "exp",
    "gf_expand",
    "faa_di_bruno_check",
    "GF_FAMILIES",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t truncated at `order`; coeffs[n] = n! * [t^n]."""

    order: int
    coeffs: tuple[SparsePolynomial, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    def egf_coefficient(self, n: int) -> SparsePolynomial:
        """n! times the t^n coefficient: a lattice lookup."""
        if n < 0 or n > self.order:
            raise ValueError(f"coefficient {n} exceeds series order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = PolyAccumulator()
            for i in range(m + 1):
                left = self.coeffs[i]
                right = other.coeffs[m - i]
                if left.is_zero or right.is_zero:
                    continue
                acc.add(left * right, comb(m, i))
            out.append(acc.build())
        return TruncatedSeries(n, tuple(out))

    def scale(self, value: Union[SparsePolynomial, int]) -> "TruncatedSeries":
        p = as_poly(value)
        return TruncatedSeries(self.order, tuple(c * p for c in self.coeffs))

    def pow(self, k: int) -> "TruncatedSeries":
        """k-th power by repeated multiplication; pow(0) is the unit series."""
        if k < 0:
            raise ValueError("series exponent must be nonnegative")
        result = one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def divide_exact(self, divisor: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.order, tuple(c.divide_exact(divisor) for c in self.coeffs)
        )

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dt; on the factorial lattice this is an index shift."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 series")
        return TruncatedSeries(self.order - 1, self.coeffs[1:])


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (ZERO,) * (order + 1))


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (ONE,) + (ZERO,) * order)


def from_sequence(
    spec: SequenceSpec, kind: str, start: int, order: int
) -> TruncatedSeries:
    """Lay sequence values along powers of t, beginning at t^start.

    kind "ordinary" puts spec(m+1) on t^(start+m); kind "egf" puts
    spec(m+1)/(start+m)! there instead.  Either way the lattice entries stay
    in the integer polynomial ring.
    """
    if kind not in ("ordinary", "egf"):
        raise ValueError(f"kind must be 'ordinary' or 'egf', got {kind!r}")
    if start not in (0, 1):
        raise ValueError(f"start must be 0 or 1, got {start}")
    coeffs = []
    for j in range(order + 1):
        m = j - start
        if m < 0:
            coeffs.append(ZERO)
            continue
        value = spec.at(m + 1)
        coeffs.append(value * factorial(j) if kind == "ordinary" else value)
    return TruncatedSeries(order, tuple(coeffs))


def exp(s: TruncatedSeries) -> TruncatedSeries:
    """Series exponential sum_k s^k / k!; s must have zero constant term.

    Each lattice coefficient of s^k is divisible by k! exactly, so the
    whole computation stays integral.
    """
    if not s.coeffs[0].is_zero:
        raise ValueError("series exponential requires a zero constant term")
    result = one(s.order)
    power = one(s.order)
    kfact = 1
    for k in range(1, s.order + 1):
        power = power * s
        kfact *= k
        result = result + power.divide_exact(kfact)
    return result


GF_FAMILIES = {
    "lah-bell": (),
    "r-lah-bell": ("r",),
    "lah": ("k",),
    "r-lah": ("k", "r"),
    "r-lah-bell-poly": ("r", "x"),
    "incomplete-generic": ("k", "r", "a", "b"),
    "complete-generic": ("r", "x", "a", "b"),
    "incomplete-r-bell": ("k", "rho", "a", "b"),
    "complete-r-bell": ("rho", "a", "b"),
}


def gf_expand(
    family: str,
    order: int,
    *,
    k: int | None = None,
    r: int | None = None,
    rho: int | None = None,
    x: Union[SparsePolynomial, int, None] = None,
    a: SequenceSpec | None = None,
    b: SequenceSpec | None = None,
) -> list[SparsePolynomial]:
    """Expand one generating-function family; returns lattice coefficients 0..order.

    Families and their required keyword parameters:
      lah-bell            ()       exp(t/(1-t))
      r-lah-bell          (r)      exp(t/(1-t)) / (1-t)^2r
      lah                 (k)      (1/k!) (t/(1-t))^k
      r-lah               (k, r)   (1/k!) (t/(1-t))^k / (1-t)^2r
      r-lah-bell-poly     (r, x)   exp(x t/(1-t)) / (1-t)^2r
      incomplete-generic  (k, r, a, b)    (1/k!) A(t)^k B(t)^2r, ordinary A, B
      complete-generic    (r, x, a, b)    exp(x A(t)) B(t)^2r,   ordinary A, B
      incomplete-r-bell   (k, rho, a, b)  (1/k!) A(t)^k B(t)^rho, egf A, B
      complete-r-bell     (rho, a, b)     exp(A(t)) B(t)^rho,     egf A, B

    where A lays the a-sequence from t^1 and B lays the b-sequence from t^0.
    Missing or extra parameters raise ValueError.
    """
    if family not in GF_FAMILIES:
        raise ValueError(f"unknown generating-function family: {family!r}")
    required = GF_FAMILIES[family]
    provided = {
        name: value
        for name, value in (("k", k), ("r", r), ("rho", rho), ("x", x), ("a", a), ("b", b))
        if value is not None
    }
    if set(provided) != set(required):
        raise ValueError(
            f"family {family!r} takes parameters {sorted(required)}, got {sorted(provided)}"
        )

    def core() -> TruncatedSeries:
        return from_sequence(ONES, "ordinary", 1, order)

    def geometric() -> TruncatedSeries:
        return from_sequence(ONES, "ordinary", 0, order)

    if family == "lah-bell":
        s = exp(core())
    elif family == "r-lah-bell":
        s = exp(core()) * geometric().pow(2 * r)
    elif family == "lah":
        s = core().pow(k).divide_exact(factorial(k))
    elif family == "r-lah":
        s = core().pow(k).divide_exact(factorial(k)) * geometric().pow(2 * r)
    elif family == "r-lah-bell-poly":
        s = exp(core().scale(x)) * geometric().pow(2 * r)
    elif family == "incomplete-generic":
        aser = from_sequence(a, "ordinary", 1, order)
        bser = from_sequence(b, "ordinary", 0, order)
        s = aser.pow(k).divide_exact(factorial(k)) * bser.pow(2 * r)
    elif family == "complete-generic":
        aser = from_sequence(a, "ordinary", 1, order)
        bser = from_sequence(b, "ordinary", 0, order)
        s = exp(aser.scale(x)) * bser.pow(2 * r)
    elif family == "incomplete-r-bell":
        aser = from_sequence(a, "egf", 1, order)
        bser = from_sequence(b, "egf", 0, order)
        s = aser.pow(k).divide_exact(factorial(k)) * bser.pow(rho)
    else:  # complete-r-bell
        aser = from_sequence(a, "egf", 1, order)
        bser = from_sequence(b, "egf", 0, order)
        s = exp(aser) * bser.pow(rho)
    return [s.egf_coefficient(n) for n in range(order + 1)]


@dataclass(frozen=True)
class DerivativeCheck:
    """Report comparing the two routes to an m-th derivative at 0."""

    m: int
    series_value: int
    partition_value: int

    @property
    def passed(self) -> bool:
        return self.series_value == self.partition_value

    def __bool__(self) -> bool:
        return self.passed


def faa_di_bruno_check(m: int, order: int | None = None) -> DerivativeCheck:
    """Check the m-th derivative of exp(t/(1-t)) at 0 two independent ways.

    Route one differentiates the series exponential m times and reads the
    constant term.  Route two evaluates the complete Bell sum at factorial
    arguments, which is what the chain rule for exp(f) prescribes when every
    derivative of f at 0 is j!.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if order is None:
        order = m
    if order < m:
        raise ValueError(f"order {order} is too small for m = {m}")
    s = exp(from_sequence(ONES, "ordinary", 1, order))
    for _ in range(m):
        s = s.derivative()
    series_value = s.coeffs[0].as_int()
    partition_value = complete_bell(m, FACTORIALS).as_int()
    return DerivativeCheck(m, series_value, partition_value)
