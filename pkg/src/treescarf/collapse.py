"""Elementary collapses and collapsibility certificates.

An elementary collapse removes a *free pair*: a facet together with a
maximal proper face of it that lies in no other facet.  Collapsibility
claims are never returned as bare booleans; they come as an ordered step
sequence that ``verify_sequence`` can replay against the definition, so
every certificate is independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .complexes import Face, SimplicialComplex, face_key, vertex_key
from .errors import BadFacePairError, InvalidStepError, NotATreeError


@dataclass(frozen=True)
class CollapseStep:
    """One elementary collapse: remove ``coface`` and its free face."""

    free_face: Face
    coface: Face


@dataclass(frozen=True)
class CollapseSequence:
    """Ordered collapse steps and the complex they are claimed to reach."""

    steps: tuple[CollapseStep, ...]
    terminal: SimplicialComplex

    def __len__(self) -> int:
        return len(self.steps)


def _step_key(pair):
    free, coface = pair
    return (face_key(free), face_key(coface))


class _FaceSet:
    """Mutable face-set view of a complex while replaying collapses.

    Keeping the full face set lets every validity question reduce to
    one-vertex extensions: a face has a strict superface iff it has one of
    codimension 1 (downward closure).
    """

    __slots__ = ("faces", "universe")

    def __init__(self, complex_: SimplicialComplex):
        self.faces = set(complex_.faces())
        self.universe = set(complex_.vertices)

    def step_violation(self, step: CollapseStep) -> Optional[str]:
        """None when the step is valid now, else the violated condition."""
        free, coface = step.free_face, step.coface
        if not free:
            return "free face must be nonempty"
        if not (free < coface and len(free) == len(coface) - 1):
            return "free face is not a maximal proper face of the coface"
        if coface not in self.faces:
            return "coface is not a face of the complex"
        if free not in self.faces:
            return "free face is not a face of the complex"
        for v in self.universe - coface:
            if coface | {v} in self.faces:
                return "coface is not a facet"
        for v in self.universe - free:
            ext = free | {v}
            if ext != coface and ext in self.faces:
                return "free face lies in more than one facet"
        return None

    def apply(self, step: CollapseStep) -> None:
        self.faces.discard(step.coface)
        self.faces.discard(step.free_face)

    def free_pairs(self) -> list[tuple[Face, Face]]:
        pairs = []
        for free in self.faces:
            exts = [free | {v} for v in self.universe - free if free | {v} in self.faces]
            if len(exts) != 1:
                continue
            coface = exts[0]
            if not any(coface | {v} in self.faces for v in self.universe - coface):
                pairs.append((frozenset(free), frozenset(coface)))
        return sorted(pairs, key=_step_key)

    def to_complex(self) -> SimplicialComplex:
        maximal = [f for f in self.faces
                   if not any(f | {v} in self.faces for v in self.universe - f)]
        return SimplicialComplex._from_maximal(map(frozenset, maximal))


def free_pairs(complex_: SimplicialComplex) -> list[tuple[Face, Face]]:
    """All pairs (free face, facet) eligible for an elementary collapse."""
    return _FaceSet(complex_).free_pairs()


def elementary_collapse(complex_: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    """Remove the step's two faces; raises InvalidStepError when not free."""
    fs = _FaceSet(complex_)
    violation = fs.step_violation(step)
    if violation is not None:
        raise InvalidStepError(violation)
    fs.apply(step)
    return fs.to_complex()


def verify_sequence(complex_: SimplicialComplex,
                    sequence: CollapseSequence) -> tuple[bool, Optional[int]]:
    """Replay a certificate against the definition.

    Returns (True, None) when every step is valid in order and the final
    complex equals ``sequence.terminal``; otherwise (False, i) where i is
    the first invalid step, or len(steps) when only the terminal differs.
    """
    fs = _FaceSet(complex_)
    for i, step in enumerate(sequence.steps):
        if fs.step_violation(step) is not None:
            return False, i
        fs.apply(step)
    if fs.to_complex() != sequence.terminal:
        return False, len(sequence.steps)
    return True, None


def collapse_simplex_to_face(facet: Iterable[str], target: Iterable[str]) -> CollapseSequence:
    """Collapse the full simplex on ``facet`` down to the simplex on ``target``.

    Follows the inductive schedule: with the simplex's vertices ordered
    x_1..x_n so that x_n avoids the target, first collapse away the maximal
    face missing x_1, then eliminate each remaining maximal face F_i
    (i = 2..n-1) through the cascade of its intersections with earlier
    maximal faces, always paired against the same intersection extended by
    x_1; what is left is the simplex without x_n, and the construction
    recurses.  Each round halves toward the target, removing exactly two
    faces per step.
    """
    start = frozenset(facet)
    goal = frozenset(target)
    if not goal or not goal < start:
        raise BadFacePairError(
            "target must be a nonempty proper subset of the facet")
    steps = []
    cur = set(start)
    while cur != goal:
        x_last = max(cur - goal, key=vertex_key)
        x = sorted(cur - {x_last}, key=vertex_key) + [x_last]
        n = len(x)
        steps.append(CollapseStep(frozenset(cur - {x[0]}), frozenset(cur)))
        for i in range(2, n):
            # subsets of {x_2..x_{i-1}} in binary-counting order
            for code in range(1 << (i - 2)):
                dropped = {x[i - 1]}
                dropped.update(x[b + 1] for b in range(i - 2) if code >> b & 1)
                coface = frozenset(cur - dropped)
                steps.append(CollapseStep(coface - {x[0]}, coface))
        cur.discard(x_last)
    sequence = CollapseSequence(tuple(steps), SimplicialComplex([goal]))
    ok, bad = verify_sequence(SimplicialComplex([start]), sequence)
    if not ok:
        raise AssertionError(f"simplex collapse schedule failed at step {bad}")
    return sequence


def tree_collapse_certificate(complex_: SimplicialComplex) -> CollapseSequence:
    """A verified collapse of a simplicial tree down to a single point.

    Repeatedly takes the first leaf F with joint G, collapses the simplex
    on F onto F & G (those steps stay valid in the whole complex: each face
    they remove sticks out of every other facet), and continues on the
    complex without F.  The sequence length is (#faces - 1) / 2.

    Raises NotATreeError with the evidence when the input is empty,
    disconnected, or has a leafless subcollection.
    """
    if complex_.is_empty():
        raise NotATreeError("the empty complex cannot collapse to a point",
                            reason="empty")
    if not complex_.is_connected():
        raise NotATreeError("complex is not connected", reason="disconnected")
    forest, witness = complex_.is_forest()
    if not forest:
        raise NotATreeError("complex has a leafless subcollection",
                            witness=witness)
    steps: list[CollapseStep] = []
    cur = complex_
    while len(cur.facets) > 1:
        for f in cur.facets:
            leaf, joint = cur.is_leaf(f)
            if leaf:
                break
        steps.extend(collapse_simplex_to_face(f, f & joint).steps)
        cur = cur.remove_facet(f)
    last = cur.facets[0]
    if len(last) > 1:
        point = min(last, key=vertex_key)
        steps.extend(collapse_simplex_to_face(last, {point}).steps)
        cur = SimplicialComplex([{point}])
    sequence = CollapseSequence(tuple(steps), cur)
    ok, bad = verify_sequence(complex_, sequence)
    if not ok:
        raise AssertionError(f"tree collapse certificate failed at step {bad}")
    return sequence


def greedy_collapse(complex_: SimplicialComplex) -> tuple[CollapseSequence, SimplicialComplex]:
    """Apply the first free pair until none remain; heuristic only.

    Steps are taken in lexicographic face order, so the residual is
    reproducible.  A residual bigger than a point proves nothing about
    non-collapsibility.
    """
    fs = _FaceSet(complex_)
    steps = []
    while True:
        pairs = fs.free_pairs()
        if not pairs:
            break
        free, coface = pairs[0]
        step = CollapseStep(free, coface)
        fs.apply(step)
        steps.append(step)
    residual = fs.to_complex()
    return CollapseSequence(tuple(steps), residual), residual
