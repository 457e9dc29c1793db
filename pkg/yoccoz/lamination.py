"""
Co-landing classes of external angles and their pullback under doubling.

Depth 1 holds the seed: an invariant cycle of classes landing at the
alpha fixed point (or its cycle). Depth l+1 is the full preimage of depth
l, grouped into classes so that every group maps bijectively onto its
image class, no two chords cross, and no new class straddles the
critical diameter (the two halves of the characteristic arc's start).
"""

import logging
import threading
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from config import YOCCOZ_CONFIG
from errors import AmbiguousPullback, ModelFormatError, NoValidGrouping, PreconditionFailed
from yoccoz.angles import Angle, Arc, double, elementary_arcs, parse_angle, preimages, unlinked


@dataclass(frozen=True, order=True)
class AngleClass:
    """Angles whose rays land together, sorted; ``depth`` is where the class first appears."""
    angles: Tuple[Angle, ...]
    depth: int = field(default=1, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.angles)))
        if len(ordered) < 2:
            raise ModelFormatError(f"a class needs at least two distinct angles, got {list(map(str, self.angles))}")
        if any(not 0 <= a < 1 for a in ordered):
            raise ModelFormatError("angles must lie in [0, 1)")
        object.__setattr__(self, "angles", ordered)

    @property
    def key(self) -> FrozenSet[Angle]:
        return frozenset(self.angles)

    def doubled(self) -> FrozenSet[Angle]:
        return frozenset(double(a) for a in self.angles)

    def __len__(self) -> int:
        return len(self.angles)

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.angles) + "}"


def parse_classes(text: str) -> List[AngleClass]:
    """``"1/3,2/3"`` or several classes separated by ``;``."""
    classes = []
    for chunk in text.split(";"):
        if chunk.strip():
            classes.append(AngleClass(tuple(parse_angle(a) for a in chunk.split(","))))
    if not classes:
        raise ModelFormatError(f"no angle classes in {text!r}")
    return classes


def _compatible(a: AngleClass, b: AngleClass) -> bool:
    """Equal, or disjoint with uncrossed chords."""
    if a.key == b.key:
        return True
    if a.key & b.key:
        return False
    return unlinked(a.angles, b.angles)


def non_crossing(classes: Iterable[AngleClass]) -> bool:
    """
    Do the classes form a non-crossing family? One sweep around the circle:
    a class is open from its first angle to its last, and every angle met
    must belong to the innermost open class or start a new one.
    """
    owner: Dict[Angle, int] = {}
    sizes: List[int] = []
    for i, c in enumerate(dict.fromkeys(c.key for c in classes)):
        for a in c:
            if a in owner:
                return False
            owner[a] = i
        sizes.append(len(c))
    seen = [0] * len(sizes)
    stack: List[int] = []
    for a in sorted(owner):
        i = owner[a]
        if seen[i]:
            if stack[-1] != i:
                return False
        else:
            stack.append(i)
        seen[i] += 1
        if seen[i] == sizes[i]:
            stack.pop()
    return True


def validate_seed(classes: Sequence[AngleClass]) -> None:
    """Seeds are pairwise disjoint, unlinked, and permuted by doubling."""
    if not classes:
        raise PreconditionFailed("empty seed")
    for a, b in combinations(classes, 2):
        if a.key == b.key:
            raise PreconditionFailed(f"class {a} is listed twice")
        if not _compatible(a, b):
            raise PreconditionFailed(f"classes {a} and {b} overlap or cross")
    keys = {c.key for c in classes}
    for c in classes:
        if len(c.doubled()) != len(c) or c.doubled() not in keys:
            raise PreconditionFailed(f"doubling does not map {c} bijectively onto a seed class")


Grouping = Tuple[AngleClass, AngleClass]


def characteristic_arc(seed: Sequence[AngleClass]) -> Arc:
    """The shortest complementary arc of any seed class; the critical value sits behind it."""
    return min((arc for c in seed for arc in elementary_arcs(c.angles)), key=lambda arc: (arc.length, arc.start))


def critical_diameter(seed: Sequence[AngleClass]) -> Tuple[Angle, Angle]:
    """Both halves of the characteristic arc's start angle; groups may not straddle this chord."""
    return tuple(sorted(preimages(characteristic_arc(seed).start)))


def groupings(c: AngleClass, depth: int) -> List[Grouping]:
    """
    All splits of the preimages of ``c`` into two classes that each map
    bijectively onto c. The first angle's half-preimage always goes to
    the first group, so each split appears once.
    """
    pairs = [preimages(a) for a in c.angles]
    result = []
    for bits in product((0, 1), repeat=len(pairs) - 1):
        choice = (0,) + bits
        first = tuple(pair[b] for pair, b in zip(pairs, choice))
        second = tuple(pair[1 - b] for pair, b in zip(pairs, choice))
        result.append((AngleClass(first, depth), AngleClass(second, depth)))
    return result


class Lamination:
    """
    Classes depth by depth, pulled back lazily and cached. Levels must be
    built in order, which the cache enforces under a lock.
    """

    def __init__(self, seed: Sequence[AngleClass], max_joint_groupings: Optional[int] = None):
        validate_seed(seed)
        self.seed: Tuple[AngleClass, ...] = tuple(sorted(AngleClass(c.angles, 1) for c in seed))
        self.cycle_angles = {a: c for c in self.seed for a in c.angles}
        self.diameter = critical_diameter(self.seed)
        self.seed_keys = {c.key for c in self.seed}
        self.max_joint_groupings = (YOCCOZ_CONFIG["max_joint_groupings"]
                                    if max_joint_groupings is None else max_joint_groupings)
        self.logger = logging.getLogger(__name__)
        self._levels: Dict[int, Tuple[AngleClass, ...]] = {1: self.seed}
        self._lock = threading.Lock()

    def classes(self, depth: int) -> Tuple[AngleClass, ...]:
        if depth <= 0:
            return ()
        with self._lock:
            top = max(self._levels)
            while top < depth:
                self._levels[top + 1] = self.pullback(self._levels[top], top)
                top += 1
            return self._levels[depth]

    def angles(self, depth: int) -> List[Angle]:
        return sorted({a for c in self.classes(depth) for a in c.angles})

    def _admissible(self, group: AngleClass) -> bool:
        # a group meeting the cycle is the cycle class itself
        for a in group.angles:
            home = self.cycle_angles.get(a)
            if home is not None and home.key != group.key:
                return False
        return group.key in self.seed_keys or self._one_sided(group)

    def _one_sided(self, group: AngleClass) -> bool:
        """Angles off the critical diameter all lie on the same side of it."""
        lo, hi = self.diameter
        sides = {lo < a < hi for a in group.angles if a not in self.diameter}
        return len(sides) <= 1

    def pullback(self, context: Sequence[AngleClass], depth: int) -> Tuple[AngleClass, ...]:
        """Classes at depth + 1 from the classes at ``depth``."""
        known = {c.key: c for c in context}
        options: List[List[Grouping]] = []
        for c in context:
            valid = [
                (a, b) for a, b in groupings(c, depth + 1)
                if _compatible(a, b) and self._admissible(a) and self._admissible(b)
            ]
            if len(valid) > 1:
                valid = [(a, b) for a, b in valid
                         if all(_compatible(g, other) for g in (a, b) for other in context)]
            if not valid:
                raise NoValidGrouping(f"no grouping of the preimages of {c} survives", depth=depth + 1,
                                      cls=str(c))
            if len(valid) > 1:
                self.logger.debug(f"{c}: {len(valid)} groupings pass the local rules")
            options.append(valid)

        fixed = [g for opts in options if len(opts) == 1 for g in opts[0]]
        open_options = [opts for opts in options if len(opts) > 1]
        fixed = list(context) + fixed
        if not non_crossing(fixed):
            raise NoValidGrouping(f"forced groupings at depth {depth + 1} cross each other", depth=depth + 1)

        total = 1
        for opts in open_options:
            total *= len(opts)
        if total > self.max_joint_groupings:
            raise AmbiguousPullback(f"{total} joint groupings at depth {depth + 1} exceed the search budget",
                                    depth=depth + 1, combinations=total)

        solutions = []
        for combo in product(*open_options):
            chosen = [g for grouping in combo for g in grouping]
            if non_crossing(fixed + chosen):
                solutions.append(chosen)
                if len(solutions) > 1:
                    raise AmbiguousPullback(
                        f"several groupings are valid at depth {depth + 1}",
                        depth=depth + 1,
                        candidates=[[str(g) for g in s] for s in solutions],
                    )
        if not solutions:
            raise NoValidGrouping(f"no joint grouping is valid at depth {depth + 1}", depth=depth + 1)

        result: Dict[FrozenSet[Angle], AngleClass] = {}
        for group in fixed + solutions[0]:
            result.setdefault(group.key, known.get(group.key, group))
        classes = tuple(sorted(result.values()))
        self.logger.debug(f"depth {depth + 1}: {len(classes)} classes")
        return classes


def pullback(classes: Iterable[AngleClass], seed: Sequence[AngleClass], depth: int) -> Tuple[AngleClass, ...]:
    """One pullback step of ``classes`` at ``depth`` for the lamination seeded by ``seed``."""
    return Lamination(seed).pullback(tuple(classes), depth)
