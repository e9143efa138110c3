"""Labeled complexes, the support criterion for resolutions, Betti numbers,
and Scarf complexes.

A labeled complex carries a bijection from vertices to the minimal
generators of a monomial ideal; each face is labeled by the lcm of its
vertex labels.  The chain complex of the labeled complex resolves the
quotient by the ideal exactly when every divisor subcomplex is empty or
acyclic, and the resolution is minimal exactly when no two nested faces
share a label.  For forests, acyclicity degrades to connectivity, which is
the fast path.

The multigraded Betti numbers are computed independently of any candidate
complex, from strict-divisor subcomplexes of the full simplex on the
generators; that oracle is what the support criterion's consequences are
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .complexes import Face, SimplicialComplex, face_sorted
from .errors import (NotAFaceError, NotAForestError, NotAResolutionError,
                     ScarfClosureError)
from .homology import QQ, FieldSpec, is_acyclic, reduced_ranks_from_faces
from .monomials import Monomial, MonomialIdeal, lcm


class LabeledComplex:
    """A simplicial complex with vertices labeled by minimal generators.

    ``variables`` fixes the ring's variable order (defaults to the sorted
    union of label variables); generator order is the complex's vertex
    order.
    """

    __slots__ = ("_complex", "_labels", "_variables", "_ideal")

    def __init__(self, complex_: SimplicialComplex,
                 labels: Mapping[str, Monomial],
                 variables: Optional[Iterable[str]] = None):
        self._complex = complex_
        self._labels = dict(labels)
        if set(self._labels) != set(complex_.vertices):
            raise ValueError("labels must cover exactly the vertex set")
        if variables is None:
            seen = set()
            for m in self._labels.values():
                seen.update(m.variables)
            variables = sorted(seen, key=lambda v: (len(v), v))
        self._variables = tuple(variables)
        self._ideal = MonomialIdeal(
            self._variables,
            [self._labels[v] for v in complex_.vertices])

    @property
    def complex(self) -> SimplicialComplex:
        return self._complex

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    def label(self, vertex: str) -> Monomial:
        return self._labels[vertex]

    def ideal(self) -> MonomialIdeal:
        """The ideal generated by the vertex labels, in vertex order."""
        return self._ideal

    def face_label(self, face: Iterable[str]) -> Monomial:
        """lcm of the labels of the face's vertices."""
        f = frozenset(face)
        if not f or not self._complex.has_face(f):
            raise NotAFaceError(f"{sorted(f)} is not a nonempty face")
        return lcm([self._labels[v] for v in f])

    def divisor_subcomplex(self, m: Monomial) -> SimplicialComplex:
        """Subcomplex induced on the vertices whose labels divide m."""
        return self._complex.induced(
            v for v in self._complex.vertices if self._labels[v].divides(m))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}:{self._labels[v]}" for v in self._complex.vertices)
        return f"LabeledComplex({pairs})"


def taylor_complex(ideal: MonomialIdeal) -> LabeledComplex:
    """The full simplex on the generators, labeled positionally 1..t."""
    names = [str(i + 1) for i in range(len(ideal.generators))]
    labels = dict(zip(names, ideal.generators))
    return LabeledComplex(SimplicialComplex([names]), labels, ideal.variables)


def supports_resolution(labeled: LabeledComplex,
                        field: FieldSpec = QQ) -> tuple[bool, Optional[Monomial]]:
    """Whether the labeled complex supports a free resolution of its ideal.

    Checks that the divisor subcomplex is empty or acyclic for every
    monomial; only lcms of generator subsets need checking, because the
    divisor subcomplex of any monomial is reproduced by the lcm of the
    labels dividing it.  On failure returns the lexicographically smallest
    failing degree under the ideal's variable order.
    """
    cache: dict = {}
    for m in labeled.ideal().lcm_lattice():
        sub = labeled.divisor_subcomplex(m)
        key = sub.vertices
        ok = cache.get(key)
        if ok is None:
            ok = cache[key] = is_acyclic(sub, field)
        if not ok:
            return False, m
    return True, None


def supports_resolution_tree(labeled: LabeledComplex) -> tuple[bool, Optional[Monomial]]:
    """Support check specialized to forests: connectivity replaces acyclicity.

    Induced subcomplexes of a forest are forests, and a forest is acyclic
    exactly when it is connected (or empty), so this agrees with
    ``supports_resolution`` on every forest input, failing degree included.
    Raises NotAForestError (with the leafless witness) otherwise.
    """
    forest, witness = labeled.complex.is_forest()
    if not forest:
        raise NotAForestError("tree criterion needs a forest", witness=witness)
    cache: dict = {}
    for m in labeled.ideal().lcm_lattice():
        sub = labeled.divisor_subcomplex(m)
        key = sub.vertices
        ok = cache.get(key)
        if ok is None:
            ok = cache[key] = sub.is_connected()
        if not ok:
            return False, m
    return True, None


def is_minimal(labeled: LabeledComplex) -> tuple[bool, Optional[tuple[Face, Face]]]:
    """No face shares its label with a maximal proper subface.

    Codimension-1 checking suffices: labels divide along inclusions, so an
    equality across any chain forces one at an adjacent step.  Returns the
    first violating (face, subface) pair in canonical face order.
    """
    label: dict = {}
    for face in labeled.complex.faces():
        names = face_sorted(face)
        if len(names) == 1:
            label[face] = labeled.label(names[0])
            continue
        sub_labels = [(face - {v}, label[face - {v}]) for v in names]
        mine = sub_labels[0][1]
        for _, l in sub_labels[1:]:
            mine = mine.lcm(l)
        label[face] = mine
        for sub, l in sub_labels:
            if l == mine:
                return False, (face, sub)
    return True, None


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti ranks and their aggregate vector.

    ``vector[0]`` counts the minimal generators, so ``vector[i]`` lines up
    with f_i of a supporting complex.  ``by_degree`` maps each monomial
    degree with some nonzero rank to its (beta_0, beta_1, ...) column.
    """

    by_degree: dict
    vector: tuple[int, ...]

    def rank(self, i: int, m: Monomial) -> int:
        col = self.by_degree.get(m, ())
        return col[i] if i < len(col) else 0


def betti_table(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Multigraded Betti numbers straight from the definition.

    For each lcm m of generator subsets, the rank in homological position i
    at degree m is the reduced homology rank, in dimension i-1, of the
    subcomplex of the full simplex on the generators spanned by the faces
    whose label *strictly* divides m (the empty face included).
    """
    gens = ideal.generators
    variables = ideal.variables
    t = len(gens)
    names = [str(i + 1) for i in range(t)]
    gvecs = [g.exponent_vector(variables) for g in gens]
    value_faces: dict[tuple, list[Face]] = {}
    subset_vec: list = [None] * (1 << t)
    for mask in range(1, 1 << t):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        vec = gvecs[i] if not rest else tuple(map(max, subset_vec[rest], gvecs[i]))
        subset_vec[mask] = vec
        value_faces.setdefault(vec, []).append(
            frozenset(names[j] for j in range(t) if mask >> j & 1))
    lattice = sorted(value_faces)
    zero = (0,) * len(variables)
    by_degree = {}
    vector: list[int] = []
    for vec in lattice:
        strict = [frozenset()] if vec != zero else []
        for other, fs in value_faces.items():
            if other != vec and all(a <= b for a, b in zip(other, vec)):
                strict.extend(fs)
        ranks = reduced_ranks_from_faces(strict, field)
        column = []
        for i in range(len(ranks.ranks)):
            r = ranks.rank(i - 1)
            column.append(r)
            if r:
                while len(vector) <= i:
                    vector.append(0)
                vector[i] += r
        if any(column):
            m = Monomial(dict(zip(variables, vec)))
            by_degree[m] = tuple(column)
    if not vector:
        vector = [t]  # only for the unit ideal, whose quotient is zero
    elif vector[0] != t:
        raise AssertionError("generator count disagrees with degree ranks")
    return BettiTable(by_degree, tuple(vector))


def scarf_complex(ideal: MonomialIdeal) -> LabeledComplex:
    """Faces of the full simplex on the generators whose label is unique.

    Vertices are named by generator position ("1".."t").  Every vertex
    survives (a vertex label equal to another face's label would contradict
    generator minimality) and the surviving face set is downward closed;
    both facts are verified, and a closure failure raises
    ScarfClosureError since it can only mean a logic bug.
    """
    gens = ideal.generators
    t = len(gens)
    names = [str(i + 1) for i in range(t)]
    gvecs = [g.exponent_vector(ideal.variables) for g in gens]
    subset_vec: list = [None] * (1 << t)
    counts: dict[tuple, int] = {}
    for mask in range(1, 1 << t):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        vec = gvecs[i] if not rest else tuple(map(max, subset_vec[rest], gvecs[i]))
        subset_vec[mask] = vec
        counts[vec] = counts.get(vec, 0) + 1
    kept = set()
    for mask in range(1, 1 << t):
        if counts[subset_vec[mask]] == 1:
            kept.add(frozenset(names[j] for j in range(t) if mask >> j & 1))
    for face in kept:
        if len(face) < 2:
            continue
        for v in face:
            if face - {v} not in kept:
                raise ScarfClosureError(
                    f"face {sorted(face)} kept but its subface misses {v}")
    for name in names:
        if frozenset({name}) not in kept:
            raise AssertionError("a generator vertex fell out of the Scarf complex")
    maximal = [f for f in kept if not any(f < g for g in kept)]
    complex_ = SimplicialComplex._from_maximal(maximal)
    return LabeledComplex(complex_, dict(zip(names, gens)), ideal.variables)


@dataclass(frozen=True)
class BettiFComparison:
    """Componentwise comparison of the Betti vector against the f-vector."""

    betti: tuple[int, ...]
    f_vector: tuple[int, ...]
    bounded: tuple[bool, ...]
    equal: bool


def compare_betti_f(labeled: LabeledComplex, field: FieldSpec = QQ) -> BettiFComparison:
    """Check beta_i <= f_i for a supporting labeled complex.

    Vectors are padded with zeros to a common length.  Raises
    NotAResolutionError when the complex does not support a resolution.
    """
    ok, failing = supports_resolution(labeled, field)
    if not ok:
        raise NotAResolutionError("complex does not support a resolution",
                                  failing_degree=failing)
    betti = betti_table(labeled.ideal(), field).vector
    fvec = labeled.complex.f_vector()
    width = max(len(betti), len(fvec))
    betti = betti + (0,) * (width - len(betti))
    fvec = fvec + (0,) * (width - len(fvec))
    bounded = tuple(b <= f for b, f in zip(betti, fvec))
    return BettiFComparison(betti, fvec, bounded, betti == fvec)
