"""Exact rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator). Vectors are plain tuples of fractions; every helper here
returns a new tuple and never mutates its arguments.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
QVector = Tuple[Fraction, ...]
RationalLike = Union[int, str, Fraction]

__all__ = [
    "Rational",
    "QVector",
    "DomainError",
    "DimensionError",
    "rational_make",
    "to_rational",
    "vec",
    "zero",
    "check_dims",
    "convex_combine",
    "vector_linear",
    "vector_cwise_sup",
    "vector_cwise_inf",
    "neg",
    "add",
    "sub",
    "scale",
    "dot",
    "format_rational",
    "format_vector",
    "parse_rational",
    "parse_vector",
]


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class DimensionError(DomainError):
    """Vector dimensions do not agree."""


def rational_make(num: int, den: int) -> Fraction:
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        # floats would silently smuggle in binary rounding
        raise DomainError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"not a rational: {value!r}")


def vec(*coords: RationalLike) -> QVector:
    """Build a vector, e.g. ``vec(1, "1/2")``."""
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])  # type: ignore[assignment]
    return tuple(to_rational(c) for c in coords)


def zero(dim: int) -> QVector:
    return (Fraction(0),) * dim


def check_dims(*vectors: Sequence) -> int:
    dim = len(vectors[0])
    for v in vectors[1:]:
        if len(v) != dim:
            raise DimensionError(f"dimension mismatch: {dim} vs {len(v)}")
    return dim


def convex_combine(x: QVector, y: QVector, p: Fraction) -> QVector:
    """``p*x + (1-p)*y`` for ``p`` in [0, 1]."""
    check_dims(x, y)
    if not 0 <= p <= 1:
        raise DomainError(f"mixing weight {p} outside [0, 1]")
    if p == 1:
        return tuple(x)
    if p == 0:
        return tuple(y)
    q = 1 - p
    return tuple(p * a + q * b for a, b in zip(x, y))


def vector_linear(a: Fraction, x: QVector, b: Fraction, y: QVector) -> QVector:
    check_dims(x, y)
    return tuple(a * u + b * v for u, v in zip(x, y))


def vector_cwise_sup(x: QVector, y: QVector) -> QVector:
    check_dims(x, y)
    return tuple(u if u >= v else v for u, v in zip(x, y))


def vector_cwise_inf(x: QVector, y: QVector) -> QVector:
    check_dims(x, y)
    return tuple(u if u <= v else v for u, v in zip(x, y))


def neg(x: QVector) -> QVector:
    return tuple(-u for u in x)


def add(x: QVector, y: QVector) -> QVector:
    check_dims(x, y)
    return tuple(u + v for u, v in zip(x, y))


def sub(x: QVector, y: QVector) -> QVector:
    check_dims(x, y)
    return tuple(u - v for u, v in zip(x, y))


def scale(a: Fraction, x: QVector) -> QVector:
    return tuple(a * u for u in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    check_dims(x, y)
    return sum((u * v for u, v in zip(x, y)), Fraction(0))


def format_rational(q: Fraction) -> str:
    """Lossless text form: ``"a/b"`` or ``"a"`` for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vector(x: Iterable[Fraction]) -> list:
    return [format_rational(u) for u in x]


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise DomainError(f"expected rational string, got {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"malformed rational {text!r}") from None
    return rational_make(n, d)


def parse_vector(items: Iterable[Union[str, int]]) -> QVector:
    return tuple(parse_rational(t) for t in items)
