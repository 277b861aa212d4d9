"""Sparse multivariate polynomials with exact integer coefficients.

The variable universe is four indexed families (x1, x2, ..., a1, a2, ...,
b1, ..., y1, ...) plus one lone scalar indeterminate rendered as plain "x".
A Monomial maps variables to positive exponents; a SparsePolynomial maps
monomials to nonzero integer coefficients.  Values are immutable and every
operation returns a canonical result: no zero coefficients, no zero
exponents, variables ordered family-first then index.

Text and JSON renderings list terms in descending graded lexicographic
order, so equal polynomials always render identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .exact_core import exact_div

__all__ = [
    "Variable",
    "Monomial",
    "SparsePolynomial",
    "PolyAccumulator",
    "SCALAR_X",
    "ZERO",
    "ONE",
    "const",
    "var",
    "term",
    "as_poly",
]

_FAMILY_RANK = {"x": 0, "a": 1, "b": 2, "y": 3, "scalar": 4}
_INDEXED_FAMILIES = ("x", "a", "b", "y")


@dataclass(frozen=True)
class Variable:
    """One indeterminate: an indexed family member, or the lone scalar x."""

    family: str
    index: int = 1

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown variable family: {self.family!r}")
        if self.family == "scalar":
            if self.index != 1:
                raise ValueError("the scalar indeterminate carries no index")
        elif self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    @property
    def name(self) -> str:
        return "x" if self.family == "scalar" else f"{self.family}{self.index}"

    @classmethod
    def from_name(cls, name: str) -> "Variable":
        """Inverse of .name: 'x' is the scalar, 'a3' is family a index 3."""
        if name == "x":
            return SCALAR_X
        family, digits = name[:1], name[1:]
        if family in _INDEXED_FAMILIES and digits.isdigit() and not digits.startswith("0"):
            return cls(family, int(digits))
        raise ValueError(f"not a variable name: {name!r}")


SCALAR_X = Variable("scalar")


class Monomial:
    """A finite product of variable powers; the empty product is the unit."""

    __slots__ = ("_pairs", "_hash")

    def __init__(
        self,
        exponents: Union[Mapping[Variable, int], Iterable[tuple[Variable, int]]] = (),
    ) -> None:
        items = dict(exponents)
        for v, e in items.items():
            if not isinstance(v, Variable):
                raise TypeError(f"monomial keys must be Variable, got {type(v).__name__}")
            if e < 0:
                raise ValueError(f"negative exponent for {v.name}")
        self._pairs: tuple[tuple[Variable, int], ...] = tuple(
            sorted(((v, e) for v, e in items.items() if e), key=lambda p: p[0].sort_key)
        )
        self._hash = hash(self._pairs)

    @property
    def pairs(self) -> tuple[tuple[Variable, int], ...]:
        return self._pairs

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._pairs)

    @property
    def is_unit(self) -> bool:
        return not self._pairs

    def exponent(self, v: Variable) -> int:
        for w, e in self._pairs:
            if w == v:
                return e
        return 0

    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self._pairs)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        merged = {v: e for v, e in self._pairs}
        for v, e in other._pairs:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return Monomial({v: e * k for v, e in self._pairs})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        """Ascending sort by this key lists monomials in descending graded lex."""
        return (
            -self.degree,
            tuple((rank, idx, -e) for (rank, idx), e in ((v.sort_key, e) for v, e in self._pairs)),
        )

    def __str__(self) -> str:
        if not self._pairs:
            return "1"
        return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in self._pairs)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


_UNIT = Monomial()


class SparsePolynomial:
    """Immutable finite sum of integer-weighted monomials."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]]] = (),
    ) -> None:
        data: dict[Monomial, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in pairs:
            if not isinstance(mono, Monomial):
                raise TypeError("polynomial keys must be Monomial")
            if coeff:
                total = data.get(mono, 0) + coeff
                if total:
                    data[mono] = total
                elif mono in data:
                    del data[mono]
        self._terms = data

    @classmethod
    def _raw(cls, clean: dict[Monomial, int]) -> "SparsePolynomial":
        obj = object.__new__(cls)
        obj._terms = clean
        return obj

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical (descending graded lexicographic) order."""
        for mono in sorted(self._terms, key=Monomial.sort_key):
            yield mono, self._terms[mono]

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in arbitrary order, for order-insensitive consumers."""
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def variables(self) -> list[Variable]:
        seen = set()
        for mono in self._terms:
            seen.update(mono.variables())
        return sorted(seen, key=lambda v: v.sort_key)

    def as_int(self) -> int:
        """The value of a constant polynomial; error if any variable remains."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and _UNIT in self._terms:
            return self._terms[_UNIT]
        raise ValueError(f"polynomial is not constant: {self.to_text()}")

    def __add__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        other = as_poly(other)
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = data.get(mono, 0) + coeff
            if total:
                data[mono] = total
            elif mono in data:
                del data[mono]
        return SparsePolynomial._raw(data)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        return self + (-as_poly(other))

    def __rsub__(self, other: int) -> "SparsePolynomial":
        return as_poly(other) + (-self)

    def __mul__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return SparsePolynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        data: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                total = data.get(mono, 0) + c1 * c2
                if total:
                    data[mono] = total
                elif mono in data:
                    del data[mono]
        return SparsePolynomial._raw(data)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("polynomial exponent must be nonnegative")
        if k == 0:
            return ONE
        if len(self._terms) == 1:
            ((mono, coeff),) = self._terms.items()
            return SparsePolynomial._raw({mono**k: coeff**k})
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def divide_exact(self, divisor: int) -> "SparsePolynomial":
        """Divide every coefficient by divisor, requiring exactness."""
        return SparsePolynomial._raw(
            {m: exact_div(c, divisor) for m, c in self._terms.items()}
        )

    def substitute_all(
        self, mapping: Mapping[Variable, Union["SparsePolynomial", int]]
    ) -> "SparsePolynomial":
        """Replace every mapped variable by its polynomial value, in one pass."""
        values = {v: as_poly(p) for v, p in mapping.items()}
        acc = PolyAccumulator()
        for mono, coeff in self._terms.items():
            residual: dict[Variable, int] = {}
            piece = ONE
            for v, e in mono.pairs:
                if v in values:
                    piece = piece * values[v] ** e
                else:
                    residual[v] = e
            if residual:
                piece = piece * SparsePolynomial._raw({Monomial(residual): 1})
            acc.add(piece, coeff)
        return acc.build()

    def substitute(
        self, v: Variable, value: Union["SparsePolynomial", int]
    ) -> "SparsePolynomial":
        """Replace one variable; variables not present are a no-op."""
        return self.substitute_all({v: value})

    def evaluate(self, assignment: Mapping[Variable, int]) -> int:
        """Evaluate at integer values; every variable present must be covered."""
        for v in self.variables():
            if v not in assignment:
                raise ValueError(f"no value provided for variable {v.name}")
        total = 0
        for mono, coeff in self._terms.items():
            product = coeff
            for v, e in mono.pairs:
                product *= assignment[v] ** e
            total += product
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == as_poly(other)._terms
        if isinstance(other, SparsePolynomial):
            return self._terms == other._terms
        return NotImplemented

    def to_text(self) -> str:
        """Canonical human-readable form, '0' for the zero polynomial."""
        if not self._terms:
            return "0"
        out: list[str] = []
        for mono, coeff in self.terms():
            mag = abs(coeff)
            if mono.is_unit:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(f"-{body}" if coeff < 0 else body)
            else:
                out.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(out)

    def to_json_obj(self) -> dict:
        """JSON-ready form: {"terms": [{"coeff": "...", "monomial": {...}}, ...]}."""
        return {
            "terms": [
                {
                    "coeff": str(coeff),
                    "monomial": {v.name: e for v, e in mono.pairs},
                }
                for mono, coeff in self.terms()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "SparsePolynomial":
        terms = []
        for entry in obj["terms"]:
            mono = Monomial(
                {Variable.from_name(name): e for name, e in entry["monomial"].items()}
            )
            terms.append((mono, int(entry["coeff"])))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.to_text()!r})"


class PolyAccumulator:
    """Mutable builder that sums scaled polynomial contributions."""

    __slots__ = ("_data",)

    def __init__(self) -> None:
        self._data: dict[Monomial, int] = {}

    def add(self, poly: SparsePolynomial, scale: int = 1) -> None:
        if not scale:
            return
        data = self._data
        for mono, coeff in poly._terms.items():
            total = data.get(mono, 0) + coeff * scale
            if total:
                data[mono] = total
            elif mono in data:
                del data[mono]

    def build(self) -> SparsePolynomial:
        built = SparsePolynomial._raw(self._data)
        self._data = {}
        return built


def const(value: int) -> SparsePolynomial:
    """The constant polynomial with the given integer value."""
    if value == 0:
        return SparsePolynomial._raw({})
    return SparsePolynomial._raw({_UNIT: value})


def var(v: Union[Variable, str]) -> SparsePolynomial:
    """The polynomial consisting of a single variable."""
    if isinstance(v, str):
        v = Variable.from_name(v)
    return SparsePolynomial._raw({Monomial({v: 1}): 1})


def term(coeff: int, **exponents: int) -> SparsePolynomial:
    """One term from keyword exponents, e.g. term(3, x1=1, x2=1) = 3*x1*x2."""
    mono = Monomial({Variable.from_name(name): e for name, e in exponents.items()})
    return SparsePolynomial([(mono, coeff)])


def as_poly(value: Union[SparsePolynomial, int]) -> SparsePolynomial:
    """Coerce an int to a constant polynomial; pass polynomials through."""
    if isinstance(value, SparsePolynomial):
        return value
    if isinstance(value, int):
        return const(value)
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


ZERO = const(0)
ONE = const(1)
