"""Partition-sum constructors for the Bell polynomial families.

Every constructor consumes SequenceSpec inputs, so the numeric and symbolic
paths share one implementation: pass a symbolic spec to get a polynomial in
the indexed variables, or ones/factorials/an explicit list to get a constant
polynomial carrying the corresponding number.

Two sum shapes appear throughout.  The plain shape runs over block-size
multiplicity vectors (j_i) with sum(i*j_i) = n; the extended shape runs over
paired vectors from enumerate_lambda, splitting weight between ordinary
blocks and a fixed number of distinguished ones.  Coefficients that involve
division are computed exactly: integer routes use exact_div, and the two
operations that genuinely need fractional intermediates accumulate
fractions.Fraction values and assert denominator 1 at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .exact_core import IntegralityError, exact_div, factorial, rlah
from .partitions import enumerate_lambda, enumerate_pi
from .poly import ONE, PolyAccumulator, SparsePolynomial, as_poly, const, var, Variable

__all__ = [
    "SequenceSpec",
    "ONES",
    "FACTORIALS",
    "incomplete_bell",
    "complete_bell",
    "incomplete_r_bell",
    "complete_r_bell",
    "incomplete_lah_bell",
    "complete_lah_bell",
    "incomplete_r_lah_bell",
    "complete_r_lah_bell",
    "lah_bell_polynomial",
    "complete_r_lah_bell_expansion",
    "moments_from_cumulants",
]

_SPEC_KINDS = ("ones", "factorials", "explicit", "symbolic", "uniform")


@dataclass(frozen=True)
class SequenceSpec:
    """Rule producing the i-th input value (i >= 1) for a polynomial family."""

    kind: str
    values: tuple[int, ...] = ()
    family: str = ""
    fill: SparsePolynomial | None = None

    def __post_init__(self) -> None:
        if self.kind not in _SPEC_KINDS:
            raise ValueError(f"unknown sequence kind: {self.kind!r}")

    @staticmethod
    def ones() -> "SequenceSpec":
        return SequenceSpec("ones")

    @staticmethod
    def factorials() -> "SequenceSpec":
        return SequenceSpec("factorials")

    @staticmethod
    def explicit(values: Sequence[int]) -> "SequenceSpec":
        return SequenceSpec("explicit", values=tuple(values))

    @staticmethod
    def symbolic(family: str) -> "SequenceSpec":
        Variable(family, 1)  # validates the family name
        return SequenceSpec("symbolic", family=family)

    @staticmethod
    def uniform(value: Union[SparsePolynomial, int]) -> "SequenceSpec":
        return SequenceSpec("uniform", fill=as_poly(value))

    def at(self, i: int) -> SparsePolynomial:
        """The i-th value as a polynomial (constant for numeric kinds)."""
        if i < 1:
            raise ValueError(f"sequence index starts at 1, got {i}")
        if self.kind == "ones":
            return ONE
        if self.kind == "factorials":
            return const(factorial(i))
        if self.kind == "explicit":
            if i > len(self.values):
                raise ValueError(
                    f"explicit sequence too short: need index {i}, have {len(self.values)}"
                )
            return const(self.values[i - 1])
        if self.kind == "symbolic":
            return var(Variable(self.family, i))
        assert self.fill is not None
        return self.fill


ONES = SequenceSpec.ones()
FACTORIALS = SequenceSpec.factorials()


class _RationalAccumulator:
    """Fraction-weighted polynomial sum that must end up integral."""

    __slots__ = ("_data",)

    def __init__(self) -> None:
        self._data: dict = {}

    def add(self, poly: SparsePolynomial, scale: Fraction) -> None:
        if not scale:
            return
        data = self._data
        for mono, coeff in poly.items():
            total = data.get(mono, 0) + coeff * scale
            if total:
                data[mono] = total
            elif mono in data:
                del data[mono]

    def build(self) -> SparsePolynomial:
        clean = {}
        for mono, value in self._data.items():
            frac = Fraction(value)
            if frac.denominator != 1:
                raise IntegralityError(
                    f"non-integer coefficient {frac} on {mono}"
                )
            clean[mono] = int(frac)
        return SparsePolynomial(clean)


def _exponent_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """Dense vectors (j_1, ..., j_n) with sum(i * j_i) = n, largest-first."""
    if n == 0:
        yield ()
        return
    buf = [0] * n

    def rec(i: int, weight: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            if weight == 0:
                yield tuple(buf)
            return
        for v in range(weight // i, -1, -1):
            buf[i - 1] = v
            yield from rec(i + 1, weight - v * i)
        buf[i - 1] = 0

    yield from rec(1, n)


def _power_product(spec: SequenceSpec, exponents: Sequence[int], start: int = 1) -> SparsePolynomial:
    product = ONE
    for i, e in enumerate(exponents, start):
        if e:
            product = product * spec.at(i) ** e
    return product


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of `parts` nonnegative ints summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def incomplete_bell(n: int, k: int, xs: SequenceSpec) -> SparsePolynomial:
    """Partial Bell polynomial: sum over (n, k) block-size witnesses of
    n!/(prod j_i! * prod (i!)^j_i) times prod xs(i)^j_i.

    Zero for k > n; the empty witness makes (0, 0) give 1.
    """
    acc = PolyAccumulator()
    nf = factorial(n)
    for w in enumerate_pi(n, k):
        denom = 1
        for i, ji in enumerate(w.j, 1):
            if ji:
                denom *= factorial(ji) * factorial(i) ** ji
        acc.add(_power_product(xs, w.j), exact_div(nf, denom))
    return acc.build()


def complete_bell(n: int, xs: SequenceSpec) -> SparsePolynomial:
    """Complete Bell polynomial: the same sum over all weights-n vectors.

    Enumerates sum(i * j_i) = n directly rather than grading by block count,
    so the decomposition into incomplete_bell values is a genuine cross-check.
    """
    acc = PolyAccumulator()
    nf = factorial(n)
    for j in _exponent_vectors(n):
        denom = 1
        for i, ji in enumerate(j, 1):
            if ji:
                denom *= factorial(ji) * factorial(i) ** ji
        acc.add(_power_product(xs, j), exact_div(nf, denom))
    return acc.build()


def incomplete_r_bell(
    n: int, k: int, rho: int, a: SequenceSpec, b: SequenceSpec
) -> SparsePolynomial:
    """Extended partial Bell polynomial with rho distinguished blocks.

    Sums, over the (n, k, rho) witnesses, the product of
    n!/prod(k_i!) * prod (a_i/i!)^k_i   and
    rho!/prod(r_i!) * prod (b_{i+1}/i!)^r_i.
    Fractional intermediates are exact and must cancel; a non-integer
    boundary coefficient raises IntegralityError.
    """
    acc = _RationalAccumulator()
    nf = factorial(n)
    rhof = factorial(rho)
    for w in enumerate_lambda(n, k, rho):
        dk = 1
        poly = ONE
        for i, v in enumerate(w.k_part, 1):
            if v:
                dk *= factorial(v) * factorial(i) ** v
                poly = poly * a.at(i) ** v
        dr = 1
        for i, v in enumerate(w.r_part):
            if v:
                dr *= factorial(v) * factorial(i) ** v
                poly = poly * b.at(i + 1) ** v
        acc.add(poly, Fraction(nf, dk) * Fraction(rhof, dr))
    return acc.build()


def complete_r_bell(n: int, rho: int, a: SequenceSpec, b: SequenceSpec) -> SparsePolynomial:
    """Sum of incomplete_r_bell(n, k, rho, a, b) over k = 0..n."""
    total = PolyAccumulator()
    for k in range(n + 1):
        total.add(incomplete_r_bell(n, k, rho, a, b))
    return total.build()


def incomplete_lah_bell(n: int, k: int, xs: SequenceSpec) -> SparsePolynomial:
    """Ordered-block partial Bell polynomial.

    Same witness set as incomplete_bell but with coefficient n!/prod(j_i!):
    the i! block weights of the ordered-block model cancel the 1/i! of the
    plain model, leaving an all-integer multinomial.
    """
    acc = PolyAccumulator()
    nf = factorial(n)
    for w in enumerate_pi(n, k):
        denom = 1
        for ji in w.j:
            if ji > 1:
                denom *= factorial(ji)
        acc.add(_power_product(xs, w.j), exact_div(nf, denom))
    return acc.build()


def complete_lah_bell(n: int, xs: SequenceSpec) -> SparsePolynomial:
    """Sum of the ordered-block shape over all weight-n vectors."""
    acc = PolyAccumulator()
    nf = factorial(n)
    for j in _exponent_vectors(n):
        denom = 1
        for ji in j:
            if ji > 1:
                denom *= factorial(ji)
        acc.add(_power_product(xs, j), exact_div(nf, denom))
    return acc.build()


def incomplete_r_lah_bell(
    n: int, k: int, r: int, a: SequenceSpec, b: SequenceSpec
) -> SparsePolynomial:
    """Ordered-block extended partial polynomial over (n, k, 2r) witnesses.

    Term coefficient n!/prod(k_i!) * (2r)!/prod(r_i!) on
    prod a_i^k_i * prod b_{i+1}^r_i; all-integer throughout.
    """
    acc = PolyAccumulator()
    nf = factorial(n)
    rf = factorial(2 * r)
    for w in enumerate_lambda(n, k, 2 * r):
        dk = 1
        poly = ONE
        for i, v in enumerate(w.k_part, 1):
            if v:
                if v > 1:
                    dk *= factorial(v)
                poly = poly * a.at(i) ** v
        dr = 1
        for i, v in enumerate(w.r_part):
            if v:
                if v > 1:
                    dr *= factorial(v)
                poly = poly * b.at(i + 1) ** v
        acc.add(poly, exact_div(nf, dk) * exact_div(rf, dr))
    return acc.build()


def complete_r_lah_bell(
    n: int,
    r: int,
    x: Union[SparsePolynomial, int],
    a: SequenceSpec,
    b: SequenceSpec,
) -> SparsePolynomial:
    """Sum over k of x^k times incomplete_r_lah_bell(n, k, r, a, b)."""
    xp = as_poly(x)
    total = PolyAccumulator()
    xpow = ONE
    for k in range(n + 1):
        total.add(xpow * incomplete_r_lah_bell(n, k, r, a, b))
        xpow = xpow * xp
    return total.build()


def lah_bell_polynomial(n: int, r: int, x: Union[SparsePolynomial, int]) -> SparsePolynomial:
    """Row polynomial of the r-extended triangle: sum of rlah(n, k, r) * x^k.

    Computed straight from the closed-form numbers, independently of the
    witness sums, so it can serve as an oracle for them.
    """
    xp = as_poly(x)
    total = PolyAccumulator()
    xpow = ONE
    for k in range(n + 1):
        total.add(xpow, rlah(n, k, r))
        xpow = xpow * xp
    return total.build()


def complete_r_lah_bell_expansion(
    n: int, r: int, xs: SequenceSpec, ys: SequenceSpec
) -> SparsePolynomial:
    """Direct double-sum expansion of the complete ordered-block polynomial.

    n! times the sum over k = 0..n of, for every multiplicity vector m with
    sum(i * m_i) = k, the term prod xs(i)^m_i / prod(m_i!), times, for every
    ordered 2r-tuple (l_1, ..., l_2r) summing to n - k, the factor
    prod ys(l_j + 1).  Agrees with complete_r_lah_bell at x = 1.
    """
    acc = _RationalAccumulator()
    nf = factorial(n)
    for k in range(n + 1):
        ytotals = PolyAccumulator()
        for comp in _compositions(n - k, 2 * r):
            ypoly = ONE
            for l in comp:
                ypoly = ypoly * ys.at(l + 1)
            ytotals.add(ypoly)
        ypart = ytotals.build()
        if ypart.is_zero:
            continue
        for m in _exponent_vectors(k):
            denom = 1
            for v in m:
                if v > 1:
                    denom *= factorial(v)
            acc.add(_power_product(xs, m) * ypart, Fraction(nf, denom))
    return acc.build()


def moments_from_cumulants(kappas: Sequence[int], n: int) -> int:
    """n-th raw moment from the first n cumulants via the complete Bell sum."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(kappas) < n:
        raise ValueError(f"need at least {n} cumulants, got {len(kappas)}")
    return complete_bell(n, SequenceSpec.explicit(tuple(kappas))).as_int()
