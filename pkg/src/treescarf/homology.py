"""Reduced simplicial homology ranks over an exact field.

Everything here is exact: ranks over the rationals come from fraction-free
integer elimination (Bareiss), ranks over GF(p) from modular elimination.
No floating point is used anywhere.

Chain complexes are built with the standard alternating-sign boundary over
the canonical vertex order, optionally augmented to dimension -1 (the empty
face), which is what makes the homology reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complexes import Face, SimplicialComplex, face_key, face_sorted


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")


QQ = FieldSpec(0)


# -- exact rank -----------------------------------------------------------------

def rank(matrix, field: FieldSpec = QQ) -> int:
    """Exact rank of a matrix (rows of ints or Fractions)."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    if field.characteristic == 0:
        cleared = []
        for r in rows:
            if all(isinstance(x, int) for x in r):
                cleared.append(r)
            else:
                fracs = [Fraction(x) for x in r]
                scale = 1
                for x in fracs:
                    scale = scale * x.denominator // _gcd(scale, x.denominator)
                cleared.append([int(x * scale) for x in fracs])
        return _rank_bareiss(cleared)
    return _rank_mod_p(rows, field.characteristic)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _rank_bareiss(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; the divisions are exact."""
    n_rows = len(m)
    n_cols = len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivval = m[r][c]
        for i in range(r + 1, n_rows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, n_cols):
                row[j] = (pivval * row[j] - f * m[r][j]) // prev
            row[c] = 0
        prev = pivval
        r += 1
        if r == n_rows:
            break
    return r


def rank_fraction_gauss(matrix) -> int:
    """Plain Gaussian elimination over Fractions; reference for _rank_bareiss."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, n_rows):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                for j in range(c, n_cols):
                    rows[i][j] -= f * rows[r][j]
        r += 1
        if r == n_rows:
            break
    return r


def _rank_mod_p(matrix, p: int) -> int:
    rows = [[int(x) % p for x in r] for r in matrix]
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(r + 1, n_rows):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


# -- chain complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class ChainComplex:
    """Bases (faces per dimension) and boundary matrices with +-1/0 entries.

    ``boundaries[d]`` maps dimension d to d-1, with rows indexed by
    ``bases[d-1]`` and columns by ``bases[d]``.  Dimension -1 holds the
    empty face when the complex is augmented.  The composition of
    consecutive boundaries is checked to be zero at construction time.
    """

    bases: dict
    boundaries: dict

    def __post_init__(self):
        for d, mat in self.boundaries.items():
            below = self.boundaries.get(d - 1)
            if below is None:
                continue
            for col in range(len(self.bases[d])):
                acc = [0] * len(self.bases[d - 2])
                for i, entry in enumerate(c[col] for c in mat):
                    if entry:
                        for k in range(len(acc)):
                            acc[k] += entry * below[k][i]
                if any(acc):
                    raise AssertionError("boundary maps do not compose to zero")


def chain_complex(complex_: SimplicialComplex, include_empty: bool = False) -> ChainComplex:
    """Chain complex of a simplicial complex; see chain_complex_from_faces."""
    return chain_complex_from_faces(complex_.faces(), include_empty)


def chain_complex_from_faces(faces: Iterable[Face], include_empty: bool = False) -> ChainComplex:
    """Chain complex of a downward-closed set of nonempty faces.

    With ``include_empty`` the augmentation map to dimension -1 is added
    (every vertex maps to the empty face with coefficient 1).
    """
    by_dim: dict[int, list[Face]] = {}
    for f in set(faces):
        by_dim.setdefault(len(f) - 1, []).append(f)
    bases = {d: tuple(sorted(fs, key=face_key)) for d, fs in by_dim.items()}
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in bases.items()}
    boundaries = {}
    for d in bases:
        if d == 0:
            continue
        rows = len(bases[d - 1])
        mat = [[0] * len(bases[d]) for _ in range(rows)]
        for col, face in enumerate(bases[d]):
            for k, v in enumerate(face_sorted(face)):
                mat[index[d - 1][face - {v}]][col] = (-1) ** k
        boundaries[d] = tuple(map(tuple, mat))
    if include_empty:
        bases[-1] = (frozenset(),)
        if 0 in bases:
            boundaries[0] = (tuple(1 for _ in bases[0]),)
    return ChainComplex(bases, boundaries)


# -- homology ranks -----------------------------------------------------------------

@dataclass(frozen=True)
class HomologyRanks:
    """Reduced homology ranks, indexed from dimension -1 upward.

    ``ranks[0]`` is the rank in dimension -1; trailing zeros are stripped,
    so the all-zero answer is the empty tuple.
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        rs = tuple(self.ranks)
        while rs and rs[-1] == 0:
            rs = rs[:-1]
        object.__setattr__(self, "ranks", rs)

    def rank(self, dim: int) -> int:
        idx = dim + 1
        if 0 <= idx < len(self.ranks):
            return self.ranks[idx]
        return 0

    def nonzero(self) -> dict[int, int]:
        return {i - 1: r for i, r in enumerate(self.ranks) if r}

    def is_zero(self) -> bool:
        return not self.ranks


def reduced_ranks_from_faces(faces: Iterable[Face], field: FieldSpec = QQ) -> HomologyRanks:
    """Reduced homology ranks of an explicit face set.

    The face set may contain the empty face.  A set with no faces at all
    (the void complex) has all ranks zero; the set containing only the
    empty face has rank 1 in dimension -1.  Any nonempty face set is
    implicitly augmented, which is what makes the answer reduced.
    """
    face_set = set(faces)
    nonempty = {f for f in face_set if f}
    if not face_set:
        return HomologyRanks(())
    if not nonempty:
        return HomologyRanks((1,))
    cc = chain_complex_from_faces(nonempty, include_empty=True)
    top = max(cc.bases)
    f_counts = {d: len(b) for d, b in cc.bases.items()}
    b_ranks = {d: rank(mat, field) for d, mat in cc.boundaries.items()}
    out = [1 - b_ranks.get(0, 0)]
    for d in range(0, top + 1):
        out.append(f_counts.get(d, 0) - b_ranks.get(d, 0) - b_ranks.get(d + 1, 0))
    return HomologyRanks(tuple(out))


def reduced_homology_ranks(complex_: SimplicialComplex, field: FieldSpec = QQ) -> HomologyRanks:
    """Reduced homology ranks of a complex; the empty complex is all zeros."""
    return reduced_ranks_from_faces(complex_.faces(), field)


def is_acyclic(complex_: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Empty, or all reduced homology ranks vanish over the field."""
    return complex_.is_empty() or reduced_homology_ranks(complex_, field).is_zero()
