"""Exact curvature of patterns and the classification tables.

Φ(x) = 1 − d_x/2 + Σ_{σ∋x} 1/deg(σ) depends only on the pattern of x.
Every sign decision here is made on Fractions.
"""

from fractions import Fraction
from typing import Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

from curvaplane.core.logging import get_logger
from curvaplane.curvature.models import Pattern, PatternClass, PositiveRow

logger = get_logger(__name__)

HALF = Fraction(1, 2)


def _row(prefix, k_min, k_max=None, constant=None, bound=None) -> PositiveRow:
    return PositiveRow(
        prefix=prefix,
        k_min=k_min,
        k_max=k_max,
        constant=None if constant is None else Fraction(constant),
        bound=None if bound is None else Fraction(bound),
    )


POSITIVE_TABLE: Tuple[PositiveRow, ...] = (
    _row((3, 3), 3, constant=Fraction(1, 6)),
    _row((3, 4), 4, constant=Fraction(1, 12)),
    _row((3, 5), 5, constant=Fraction(1, 30)),
    _row((3, 6), 6, constant=0),
    _row((3, 7), 7, 41, bound=Fraction(1, 1722)),
    _row((3, 8), 8, 23, bound=Fraction(1, 552)),
    _row((3, 9), 9, 17, bound=Fraction(1, 306)),
    _row((3, 10), 10, 14, bound=Fraction(1, 210)),
    _row((3, 11), 11, 13, bound=Fraction(1, 858)),
    _row((4, 4), 4, constant=0),
    _row((4, 5), 5, 19, bound=Fraction(1, 380)),
    _row((4, 6), 6, 11, bound=Fraction(1, 132)),
    _row((4, 7), 7, 9, bound=Fraction(1, 252)),
    _row((5, 5), 5, 9, bound=Fraction(1, 90)),
    _row((5, 6), 6, 7, bound=Fraction(1, 105)),
    _row((3, 3, 3), 3, constant=0),
    _row((3, 3, 4), 4, 11, bound=Fraction(1, 132)),
    _row((3, 3, 5), 5, 7, bound=Fraction(1, 105)),
    _row((3, 4, 4), 4, 5, bound=Fraction(1, 30)),
    _row((3, 3, 3, 3), 3, 5, bound=Fraction(1, 30)),
)

VANISHING_PATTERNS: Tuple[Tuple[int, ...], ...] = (
    (3, 7, 42),
    (3, 8, 24),
    (3, 9, 18),
    (3, 10, 15),
    (3, 12, 12),
    (4, 5, 20),
    (4, 6, 12),
    (4, 8, 8),
    (5, 5, 10),
    (6, 6, 6),
    (3, 3, 4, 12),
    (3, 3, 6, 6),
    (3, 4, 4, 6),
    (4, 4, 4, 4),
    (3, 3, 3, 3, 6),
    (3, 3, 3, 4, 4),
    (3, 3, 3, 3, 3, 3),
)


def pattern_curvature(degrees: Sequence[int]) -> Fraction:
    """Exact Φ of a pattern (order of the entries is irrelevant)."""
    phi = Fraction(1) - Fraction(len(degrees), 2)
    for d in degrees:
        phi += Fraction(1, d)
    return phi


def sign_of(value: Fraction) -> Literal["positive", "zero", "negative"]:
    if value > 0:
        return "positive"
    if value < 0:
        return "negative"
    return "zero"


def match_row(degrees: Sequence[int]) -> Optional[PositiveRow]:
    """The table row containing a sorted pattern, if any."""
    degrees = tuple(degrees)
    matches = [row for row in POSITIVE_TABLE if row.contains(degrees)]
    if len(matches) > 1:
        logger.warning(f"Pattern {degrees} matches {len(matches)} table rows")
    return matches[0] if matches else None


def classify_pattern(pattern: Pattern) -> PatternClass:
    """Exact sign of Φ plus the matching positive-table row and bound.

    The certified bound is the printed lower bound for bounded rows and the
    exact closed-form value for rows given by a formula.
    """
    degrees = pattern.degrees
    phi = pattern_curvature(degrees)
    sign = sign_of(phi)
    row = None
    bound = None
    if sign == "positive":
        row = match_row(degrees)
        if row is None:
            logger.warning(f"Positive pattern {pattern} has no table row (Φ = {phi})")
        elif row.bound is not None:
            bound = row.bound
        else:
            bound = row.closed_form(degrees[-1])
    return PatternClass(
        sign=sign,
        phi=phi,
        table_row=row,
        certified_bound=bound,
        vanishing_listed=degrees in VANISHING_PATTERNS,
    )


def _extend(
    prefix: Tuple[int, ...],
    partial: Fraction,
    length: int,
    max_degree: int,
) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    if len(prefix) == length:
        yield prefix, partial
        return
    remaining = length - len(prefix)
    start = prefix[-1] if prefix else 3
    for a in range(start, max_degree + 1):
        step = Fraction(1, a) - HALF
        # every later entry is >= a, so this is the largest Φ still reachable
        if partial + remaining * step < 0:
            break
        yield from _extend(prefix + (a,), partial + step, length, max_degree)


def enumerate_patterns(
    max_degree: int,
    lengths: Iterable[int] = (3, 4, 5, 6),
    sign: Literal["nonnegative", "positive", "zero"] = "nonnegative",
) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """All sorted patterns with entries in [3, max_degree] and Φ of the given sign.

    Lengths above 6 never have Φ >= 0 and may be omitted.

    Returns:
        (pattern, Φ) pairs in lexicographic order per length
    """
    found = []
    for length in lengths:
        for degrees, phi in _extend((), Fraction(1), length, max_degree):
            if sign == "positive" and phi <= 0:
                continue
            if sign == "zero" and phi != 0:
                continue
            found.append((degrees, phi))
    logger.info(f"Enumerated {len(found)} {sign} patterns with entries <= {max_degree}")
    return found
