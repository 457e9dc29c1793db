"""
Validation of tree-with-dynamics models on finite truncations.
"""

import logging
from collections import Counter
from typing import List, Set

from errors import LabError
from twd.models import ValidationReport, VertexRef, Violation, ViolationKind
from twd.tree import TreeModel

ANCESTOR_SLACK = 64  # extra levels walked up when looking for a common ancestor


class TreeValidator:
    """
    Checks a model against the tree-with-dynamics axioms:
    1. parent/children consistency (parents one level up, listed children)
    2. F shifts every level by the same H
    3. F preserves children
    4. sampled vertices share a common ancestor
    Every violation is reported with a witness vertex; nothing is raised.
    """

    def __init__(self, model: TreeModel):
        self.model = model
        self.logger = logging.getLogger(__name__)

    def validate(self, depth: int) -> ValidationReport:
        if depth < 1:
            raise ValueError(f"depth must be positive, got {depth}")

        violations: List[Violation] = []
        shifts: Counter = Counter()
        checked = 0
        lowest = -depth
        deepest = depth - 1
        if self.model.max_level is not None:
            deepest = min(deepest, self.model.max_level)

        sampled: List[VertexRef] = []
        for level in range(lowest, deepest + 1):
            for v in self.model.level_vertices(level):
                sampled.append(v)
                checked += 1
                self._check_vertex(v, violations, shifts)

        H = None
        if shifts:
            H = shifts.most_common(1)[0][0]
            for v in sampled:
                # witnesses for the minority shifts
                try:
                    shift = v.level - self.model.image(v).level
                except LabError:
                    continue
                if shift != H:
                    violations.append(Violation(
                        kind=ViolationKind.NON_UNIFORM_SHIFT, witness=str(v),
                        detail=f"F drops {shift} levels, most vertices drop {H}",
                    ))

        self._check_common_ancestor(sampled, lowest, violations)

        self.logger.debug(f"validated {checked} vertices of {self.model!r}: "
                          f"{len(violations)} violation(s)")
        return ValidationReport(depth=depth, H=H, vertices_checked=checked, violations=violations)

    def _check_vertex(self, v: VertexRef, violations: List[Violation], shifts: Counter):
        model = self.model

        try:
            p = model.parent(v)
        except LabError:
            p = None
        if p is not None:
            if p.level != v.level - 1:
                violations.append(Violation(kind=ViolationKind.PARENT_LEVEL, witness=str(v),
                                            detail=f"parent {p} is not one level up"))
            elif v not in model.children(p):
                violations.append(Violation(kind=ViolationKind.PARENT_CHILD, witness=str(v),
                                            detail=f"not listed among the children of {p}"))

        kids = model.children(v)
        for c in kids:
            if model.parent(c) != v:
                violations.append(Violation(kind=ViolationKind.PARENT_CHILD, witness=str(c),
                                            detail=f"listed under {v} but its parent is {model.parent(c)}"))

        try:
            fv = model.image(v)
        except LabError as e:
            violations.append(Violation(kind=ViolationKind.MISSING_IMAGE, witness=str(v), detail=str(e)))
            return
        shifts[v.level - fv.level] += 1

        image_children = None
        for c in kids:
            try:
                fc = model.image(c)
            except LabError:
                # reported when c itself is validated
                continue
            if image_children is None:
                image_children = model.children(fv)
            if fc not in image_children:
                violations.append(Violation(
                    kind=ViolationKind.CHILD_NOT_PRESERVED, witness=str(c),
                    detail=f"F({c}) = {fc} is not a child of F({v}) = {fv}",
                ))

    def _ancestor_at(self, v: VertexRef, level: int) -> VertexRef:
        """Walk up to ``level``, stopping early at a vertex without a parent."""
        while v.level > level:
            try:
                v = self.model.parent(v)
            except LabError:
                break
        return v

    def _check_common_ancestor(self, sampled: List[VertexRef], lowest: int,
                               violations: List[Violation]):
        if not sampled:
            return
        frontier: Set[VertexRef] = {self._ancestor_at(v, lowest) for v in sampled}

        for _ in range(ANCESTOR_SLACK):
            if len(frontier) == 1:
                return
            try:
                frontier = {self.model.parent(v) for v in frontier}
            except LabError:
                break
        if len(frontier) != 1:
            witness = sorted(frontier, key=str)[0]
            violations.append(Violation(
                kind=ViolationKind.NO_COMMON_ANCESTOR, witness=str(witness),
                detail=f"{len(frontier)} distinct ancestors remain",
            ))


def validate(model: TreeModel, depth: int) -> ValidationReport:
    return TreeValidator(model).validate(depth)


def check_polynomial_properties(model: TreeModel, depth: int) -> ValidationReport:
    """
    Extra properties of trees coming from polynomials: rooted,
    H >= 1 and no leaves inside the truncation.
    """
    report = validate(model, depth)
    extra: List[Violation] = []
    anchor = model.anchor()

    if report.H is not None and report.H < 1:
        extra.append(Violation(kind=ViolationKind.SHIFT_NOT_POSITIVE, witness=str(anchor),
                               detail=f"H = {report.H}"))

    for level in range(-depth, 1):
        if len(model.level_vertices(level)) != 1:
            extra.append(Violation(kind=ViolationKind.NOT_ROOTED, witness=f"level {level}",
                                   detail="more than one vertex at a level <= 0"))
            break

    deepest = depth - 1
    if model.max_level is not None:
        # the window edge is not a leaf
        deepest = min(deepest, model.max_level - 1)
    for level in range(-depth, deepest + 1):
        for v in model.level_vertices(level):
            if not model.children(v):
                extra.append(Violation(kind=ViolationKind.LEAF, witness=str(v)))

    return report.model_copy(update={"violations": report.violations + extra})
