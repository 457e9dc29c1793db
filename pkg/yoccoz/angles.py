"""
Exact external-ray angles on the circle R/Z and arcs between them.

Angles are reduced ``Fraction``s in [0, 1); nothing here touches floats.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from errors import ModelFormatError

Angle = Fraction
HALF = Fraction(1, 2)


def parse_angle(text: str) -> Angle:
    try:
        a = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ModelFormatError(f"not a rational angle: {text!r}")
    if not 0 <= a < 1:
        raise ModelFormatError(f"angle {a} is outside [0, 1)")
    return a


def double(a: Angle) -> Angle:
    return (2 * a) % 1


def preimages(a: Angle) -> Tuple[Angle, Angle]:
    """The two angles doubling to ``a``."""
    return a / 2, a / 2 + HALF


def rotate(a: Angle, by: Angle) -> Angle:
    return (a + by) % 1


@dataclass(frozen=True, order=True)
class Arc:
    """Open arc from ``start`` counterclockwise to ``end`` (wrapping through 0 when end <= start)."""
    start: Angle
    end: Angle

    @property
    def length(self) -> Angle:
        return (self.end - self.start) % 1 or Fraction(1)

    def contains(self, x: Angle) -> bool:
        offset = (x - self.start) % 1
        return 0 < offset < self.length

    def midpoint(self) -> Angle:
        return rotate(self.start, self.length / 2)

    def rotated(self, by: Angle) -> "Arc":
        return Arc(rotate(self.start, by), rotate(self.end, by))

    def meets(self, other: "Arc") -> bool:
        """Do the two open arcs overlap?"""
        return (other.start - self.start) % 1 < self.length or (self.start - other.start) % 1 < other.length

    def __str__(self) -> str:
        return f"({self.start},{self.end})"


def elementary_arcs(angles: Iterable[Angle]) -> List[Arc]:
    """Arcs between cyclically consecutive angles, ordered by start."""
    ordered = sorted(set(angles))
    if not ordered:
        return []
    return [Arc(a, b) for a, b in zip(ordered, ordered[1:] + ordered[:1])]


def sector(angles: Sequence[Angle], x: Angle) -> int:
    """
    Index of the complementary arc of the sorted ``angles`` holding x:
    sector i runs from angles[i] to angles[i+1], the last one wraps.
    """
    return (bisect_right(angles, x) - 1) % len(angles)


def unlinked(a: Sequence[Angle], b: Sequence[Angle]) -> bool:
    """Does all of b (off a) lie in a single complementary arc of a?"""
    ordered = sorted(a)
    sectors = {sector(ordered, x) for x in b if x not in ordered}
    return len(sectors) <= 1
