from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator


def format_rational(value: Fraction) -> str:
    """Render a rational as ``num/den``, always with a denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: Any) -> Fraction:
    """Accept Fractions, ints and ``num/den`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]
