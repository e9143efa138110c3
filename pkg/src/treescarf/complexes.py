"""Finite simplicial complexes over named vertices.

A complex is stored by its facets (the maximal faces); a set is a face
exactly when it is contained in some facet, so faces are only enumerated on
demand.  Faces are frozensets of vertex-name strings and the empty face has
dimension -1.  Every value is immutable after construction and every
operation is a pure function, so instances are safe to share between
threads.

The complex with no facets (the *empty complex*) is a legal value: it is
produced by facet removal and induced subcomplexes, and is connected and a
forest by convention.  It is not a legal constructor input.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from .errors import EmptyFaceError, EmptyInputError, NotAFacetError

Vertex = str
Face = frozenset


def vertex_key(name: Vertex) -> tuple[int, str]:
    """Sort key for vertex names: length first, then lexicographic.

    Keeps numeral names in natural order ("2" before "10").
    """
    return (len(name), name)


def face_sorted(face: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Vertices of a face in canonical order."""
    return tuple(sorted(face, key=vertex_key))


def face_key(face: Iterable[Vertex]):
    """Deterministic sort key for faces: dimension first, then vertex names."""
    names = face_sorted(face)
    return (len(names), tuple(vertex_key(v) for v in names))


def _as_face(vertices: Iterable[Vertex]) -> Face:
    face = frozenset(vertices)
    for v in face:
        if not isinstance(v, str) or not v:
            raise TypeError(f"vertex names must be nonempty strings, got {v!r}")
    return face


class SimplicialComplex:
    """A finite simplicial complex represented by its facets.

    The constructor accepts any list of candidate facets and discards the
    non-maximal ones, so ``SimplicialComplex([{1,2},{2}])`` has the single
    facet {1,2}.  Facets and vertices are kept in a canonical sorted order,
    which makes equality structural and every derived sequence
    deterministic.
    """

    __slots__ = ("_facets", "_vertices", "_faces")

    def __init__(self, candidate_facets: Iterable[Iterable[Vertex]]):
        candidates = [_as_face(f) for f in candidate_facets]
        if not candidates:
            raise EmptyInputError("a complex needs at least one facet")
        for f in candidates:
            if not f:
                raise EmptyFaceError("facets must be nonempty vertex sets")
        distinct = set(candidates)
        facets = [f for f in distinct
                  if not any(f < g for g in distinct)]
        self._init_canonical(facets)

    def _init_canonical(self, facets: Iterable[Face]) -> None:
        self._facets = tuple(sorted(facets, key=face_key))
        self._vertices = tuple(sorted(set().union(*self._facets), key=vertex_key)
                               ) if self._facets else ()
        self._faces = None

    @classmethod
    def _from_maximal(cls, facets: Iterable[Face]) -> "SimplicialComplex":
        # internal: facets already pairwise incomparable, possibly empty
        self = object.__new__(cls)
        self._init_canonical(facets)
        return self

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex with no facets."""
        return cls._from_maximal(())

    # -- basic queries ------------------------------------------------------

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    def is_empty(self) -> bool:
        return not self._facets

    def dimension(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        if not self._facets:
            return -1
        return max(len(f) for f in self._facets) - 1

    def has_face(self, vertices: Iterable[Vertex]) -> bool:
        """Face membership: contained in some facet.

        The empty face belongs to every nonempty complex.
        """
        face = frozenset(vertices)
        return any(face <= g for g in self._facets)

    def __contains__(self, vertices) -> bool:
        return self.has_face(vertices)

    def faces(self, include_empty: bool = False) -> list[Face]:
        """All faces in a deterministic order (dimension, then vertex names).

        The empty face is excluded unless ``include_empty`` is set.
        """
        if self._faces is None:
            found = set()
            for facet in self._facets:
                names = face_sorted(facet)
                for r in range(1, len(names) + 1):
                    found.update(map(frozenset, itertools.combinations(names, r)))
            self._faces = tuple(sorted(found, key=face_key))
        result = list(self._faces)
        if include_empty and self._facets:
            result.insert(0, frozenset())
        return result

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension, (f_0, f_1, ...); () for the empty complex."""
        counts: dict[int, int] = {}
        for face in self.faces():
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(d, 0) for d in range(max(counts) + 1))

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic, sum of (-1)^i f_i."""
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    # -- structural operations ------------------------------------------------

    def _require_facet(self, vertices: Iterable[Vertex]) -> Face:
        face = frozenset(vertices)
        if face not in self._facets:
            raise NotAFacetError(f"{sorted(face)} is not a facet")
        return face

    def remove_facet(self, facet: Iterable[Vertex]) -> "SimplicialComplex":
        """The complex generated by the remaining facets (possibly empty)."""
        face = self._require_facet(facet)
        return SimplicialComplex._from_maximal(
            g for g in self._facets if g != face)

    def induced(self, names: Iterable[Vertex]) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset: all faces inside it.

        Names outside the vertex set are ignored; callers pass divisor sets
        computed elsewhere.  The result may be disconnected or empty.
        """
        keep = frozenset(names) & set(self._vertices)
        cuts = {f & keep for f in self._facets} - {frozenset()}
        maximal = [f for f in cuts if not any(f < g for g in cuts)]
        return SimplicialComplex._from_maximal(maximal)

    # -- leaves, trees, forests ------------------------------------------------

    def is_leaf(self, facet: Iterable[Vertex]) -> tuple[bool, Optional[Face]]:
        """Whether a facet is a leaf, and a joint witnessing it.

        A facet F is a leaf when it is the only facet, or when some other
        facet G contains the whole intersection of F with the rest of the
        complex.  The joint returned is the first eligible facet in the
        canonical facet order (no joint for a lone facet).
        """
        face = self._require_facet(facet)
        others = [g for g in self._facets if g != face]
        if not others:
            return True, None
        boundary = frozenset().union(*(face & g for g in others))
        for g in others:
            if boundary <= g:
                return True, g
        return False, None

    def free_vertices(self, facet: Iterable[Vertex]) -> frozenset:
        """Vertices of the facet that belong to no other facet."""
        face = self._require_facet(facet)
        others = [g for g in self._facets if g != face]
        return face - frozenset().union(frozenset(), *others)

    def is_connected(self) -> bool:
        """Connectivity of the 1-skeleton.

        The empty complex and one-vertex complexes count as connected.
        """
        if len(self._facets) <= 1:
            return True
        remaining = list(self._facets)
        component = set(remaining.pop())
        while remaining:
            for i, f in enumerate(remaining):
                if f & component:
                    component |= f
                    del remaining[i]
                    break
            else:
                return False
        return True

    def is_forest(self) -> tuple[bool, Optional[tuple[Face, ...]]]:
        """Whether every nonempty subcollection has a leaf.

        This is the exhaustive definitional check over all 2^q - 1 facet
        subsets, iterated by increasing size, so a returned witness (a
        leafless subcollection) has minimal size.  Facets are handled as
        bit masks; Python ints keep this exact for any vertex count.
        """
        q = len(self._facets)
        if q == 0:
            return True, None
        index = {v: i for i, v in enumerate(self._vertices)}
        masks = [sum(1 << index[v] for v in f) for f in self._facets]
        inter = [[m & n for n in masks] for m in masks]
        for size in range(1, q + 1):
            for combo in itertools.combinations(range(q), size):
                if not _has_leaf(masks, inter, combo):
                    return False, tuple(self._facets[i] for i in combo)
        return True, None

    def is_tree(self) -> bool:
        """Connected and a forest."""
        return self.is_connected() and self.is_forest()[0]

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        inside = ", ".join("{%s}" % ",".join(face_sorted(f)) for f in self._facets)
        return f"SimplicialComplex<{inside}>"


def _has_leaf(masks, inter, combo) -> bool:
    # leaf test on the subcollection `combo` (indices into masks)
    if len(combo) == 1:
        return True
    for i in combo:
        row = inter[i]
        union = 0
        for h in combo:
            if h != i:
                union |= row[h]
        for j in combo:
            if j != i and union & ~masks[j] == 0:
                return True
    return False
