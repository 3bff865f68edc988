"""Exact integer polynomial and truncated power-series arithmetic.

Small, purpose-built rings: dense univariate polynomials over the
integers (``IntPoly``), sparse bivariate polynomials (``BivarPoly``),
and power series in one variable with ``IntPoly`` coefficients truncated
past a fixed order (``TruncatedSeries``).  All arithmetic is exact; all
values are canonical (no trailing zero coefficients, sorted terms), so
equality is structural.

``rising_factorial(base, n)`` computes base (base+1) ... (base+n-1) for
any of these types (or plain ints); the empty product is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial in one variable; coeffs[k] multiplies the k-th power."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if any(not isinstance(c, int) for c in coeffs):
            raise ValueError("coefficients must be integers")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPoly(tuple(merged))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        if not self or not other:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    raise TypeError(f"cannot mix IntPoly with {type(value).__name__}")


@dataclass(frozen=True)
class BivarPoly:
    """Sparse polynomial in two variables; terms are ((xdeg, ydeg), coeff)."""

    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[tuple[int, int], int] = {}
        for key, coeff in self.terms:
            merged[tuple(key)] = merged.get(tuple(key), 0) + coeff
        cleaned = tuple(
            (key, coeff) for key, coeff in sorted(merged.items()) if coeff != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls(())

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls((((0, 0), 1),))

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls((((1, 0), 1),))

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls((((0, 1), 1),))

    @classmethod
    def from_mapping(cls, mapping: Mapping[tuple[int, int], int]) -> "BivarPoly":
        return cls(tuple(mapping.items()))

    def coefficient(self, xdeg: int, ydeg: int) -> int:
        for key, coeff in self.terms:
            if key == (xdeg, ydeg):
                return coeff
        return 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        other = _coerce_bivar(other)
        return BivarPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(tuple((key, -c) for key, c in self.terms))

    def __sub__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        return self + (-_coerce_bivar(other))

    def __mul__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        other = _coerce_bivar(other)
        acc: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self.terms:
            for (bx, by), bc in other.terms:
                key = (ax + bx, ay + by)
                acc[key] = acc.get(key, 0) + ac * bc
        return BivarPoly(tuple(acc.items()))

    __rmul__ = __mul__


def _coerce_bivar(value: Union[BivarPoly, int]) -> BivarPoly:
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, int):
        return BivarPoly((((0, 0), value),))
    raise TypeError(f"cannot mix BivarPoly with {type(value).__name__}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Series sum(coeffs[k] x^k, k = 0..cutoff); higher orders discarded."""

    cutoff: int
    coeffs: tuple[IntPoly, ...]

    def __post_init__(self) -> None:
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        if len(self.coeffs) != self.cutoff + 1:
            raise ValueError("need exactly cutoff + 1 coefficients")
        if any(not isinstance(c, IntPoly) for c in self.coeffs):
            raise ValueError("coefficients must be IntPoly")

    @classmethod
    def from_coeffs(
        cls, cutoff: int, coeffs: Iterable[Union[IntPoly, int]]
    ) -> "TruncatedSeries":
        padded = [_coerce(c) for c in coeffs][: cutoff + 1]
        padded += [IntPoly.zero()] * (cutoff + 1 - len(padded))
        return cls(cutoff, tuple(padded))

    @classmethod
    def zero(cls, cutoff: int) -> "TruncatedSeries":
        return cls.from_coeffs(cutoff, ())

    @classmethod
    def one(cls, cutoff: int) -> "TruncatedSeries":
        return cls.from_coeffs(cutoff, (1,))

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.cutoff != other.cutoff:
            raise ValueError("series have different cutoffs")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.cutoff, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.cutoff, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = [IntPoly.zero()] * (self.cutoff + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.cutoff + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.cutoff, tuple(out))

    def scale(self, factor: Union[IntPoly, int]) -> "TruncatedSeries":
        factor = _coerce(factor)
        return TruncatedSeries(self.cutoff, tuple(factor * c for c in self.coeffs))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        coeffs = (IntPoly.zero(),) * k + self.coeffs
        return TruncatedSeries(self.cutoff, coeffs[: self.cutoff + 1])

    def divide(self, den: "TruncatedSeries") -> "TruncatedSeries":
        """Exact quotient; the denominator's constant term must be 1."""
        self._check_compatible(den)
        if den.coeffs[0] != IntPoly.one():
            raise ValueError("denominator constant term must be exactly 1")
        quotient: list[IntPoly] = []
        for k in range(self.cutoff + 1):
            value = self.coeffs[k]
            for i in range(1, k + 1):
                if den.coeffs[i]:
                    value = value - den.coeffs[i] * quotient[k - i]
            quotient.append(value)
        return TruncatedSeries(self.cutoff, tuple(quotient))

    def specialize(self, x: int) -> tuple[int, ...]:
        """Evaluate each coefficient polynomial at ``x``."""
        return tuple(c(x) for c in self.coeffs)


def rising_factorial(base, n: int):
    """base (base+1) (base+2) ... (base+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(base, int):
        result = 1
    else:
        result = type(base).one()
    for i in range(n):
        result = result * (base + i)
    return result
