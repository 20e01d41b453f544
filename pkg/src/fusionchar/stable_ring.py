"""The lattice R(F) of F-stable virtual characters of S.

Characters of S are integer vectors over Irr(S). Stability is a system of
linear equations (equal values on S-classes fused in G), and R(F) is its
integer kernel, stored as the rows of its Hermite normal form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .char_table import CharacterTable, ClassFunction, combination, irr_decompose, restrict
from .errors import CapacityError, DomainError, InconsistencyError
from .exact.cyclotomic import Cyclotomic
from .exact.intmat import (
    hnf_basis,
    int_det,
    int_matrix,
    lattice_index,
    rank,
    right_kernel,
    solve_left,
)
from .fusion import FusionData

DEFAULT_ATOM_CAP = 2_000_000
DEFAULT_CONE_CAP = 200_000


@dataclass(frozen=True, eq=False)
class StableBasis:
    fusion: FusionData
    irr_s: CharacterTable
    rows: np.ndarray  # basis elements as integer vectors over Irr(S)
    views: tuple  # the same elements as class functions on S
    class_values: np.ndarray  # values at the fully centralised reps (the F-character table)
    canonical: bool = True

    @property
    def rank(self) -> int:
        return self.rows.shape[0]

    def with_basis_change(self, U) -> "StableBasis":
        """The basis ``U @ rows`` for a unimodular integer matrix ``U``."""
        U = int_matrix(U)
        if abs(int_det(U)) != 1:
            raise DomainError("change of basis must be unimodular")
        return _make_basis(self.fusion, self.irr_s, U.dot(self.rows), canonical=False)


def stability_constraints(F: FusionData, irr_s: CharacterTable) -> np.ndarray:
    """Integer rows ``A`` with ``A @ a == 0`` iff ``sum(a_i chi_i)`` is F-stable.

    One cyclotomic equation per S-class fused into an F-class (against the
    block's first S-class), flattened to power-basis coordinates.
    """
    rows = []
    m = len(irr_s.irr)
    for block in F.s_class_blocks:
        first = block[0]
        for other in block[1:]:
            diffs = [(chi.values[first] - chi.values[other]).to_conductor(irr_s.conductor)
                     for chi in irr_s.irr]
            for t in range(len(diffs[0].coeffs)):
                row = [Fraction(d.coeffs[t]) for d in diffs]
                if any(row):
                    scale = math.lcm(*(x.denominator for x in row))
                    rows.append([int(x * scale) for x in row])
    return int_matrix(rows, (0, m))


def _make_basis(F: FusionData, irr_s: CharacterTable, rows, canonical: bool) -> StableBasis:
    rows = int_matrix(rows, (0, len(irr_s.irr)))
    views = tuple(combination(list(r), irr_s) for r in rows)
    s_idx = F.S.class_index
    cols = [s_idx[rep] for rep in F.reps]
    X = np.empty((len(views), len(cols)), dtype=object)
    for i, v in enumerate(views):
        for j, c in enumerate(cols):
            X[i, j] = v.values[c]
    return StableBasis(F, irr_s, rows, views, X, canonical)


def stable_basis(F: FusionData, irr_s: CharacterTable) -> StableBasis:
    """Canonical (HNF) basis of R(F)."""
    if irr_s.group is not F.S:
        raise DomainError("irr_s must be the character table of F's S")
    A = stability_constraints(F, irr_s)
    kernel = right_kernel(A, ncols=len(irr_s.irr))
    rows = hnf_basis(kernel)
    if rows.shape[0] != F.n_classes:
        raise InconsistencyError(
            f"rank of R(F) is {rows.shape[0]} but there are {F.n_classes} F-classes")
    B = _make_basis(F, irr_s, rows, canonical=True)
    for v in B.views:
        if not is_stable(v, F):
            raise InconsistencyError("basis element is not F-stable")
    return B


def is_stable(f: ClassFunction, F: FusionData) -> bool:
    return all(len({f.values[i] for i in block}) == 1 for block in F.s_class_blocks)


def coordinates(f: ClassFunction, B: StableBasis) -> list[int]:
    """Integer coordinates of an F-stable virtual character in the basis ``B``."""
    F = B.fusion
    if f.group is not F.S:
        raise DomainError("class function is not on S")
    if not is_stable(f, F):
        raise DomainError("class function is not F-stable")
    a, integral = irr_decompose(f, B.irr_s)
    if not integral:
        raise DomainError("class function is not a virtual character of S")
    c = solve_left(B.rows, a)
    if c is None or any(x.denominator != 1 for x in c):
        raise InconsistencyError("stable virtual character has no integer coordinates")
    return [int(x) for x in c]


def evaluate(coords, B: StableBasis) -> ClassFunction:
    """The class function ``sum(c_i * b_i)`` for basis elements ``b_i``."""
    return combination([int(x) for x in int_matrix([coords]).dot(B.rows)[0]], B.irr_s)


def restriction_sublattice_index(G, S, B: StableBasis, irr_g: CharacterTable):
    """Index of the span of ``{chi|_S : chi in Irr(G)}`` in R(F); ``None`` if infinite."""
    vecs = []
    for chi in irr_g.irr:
        a, integral = irr_decompose(restrict(chi, S), B.irr_s)
        if not integral:
            raise InconsistencyError("restriction is not a virtual character")
        vecs.append(a)
    return lattice_index(int_matrix(vecs, (0, B.rows.shape[1])), B.rows)


# indecomposable characters --------------------------------------------------------

@dataclass(frozen=True)
class IndecomposableSet:
    atoms: tuple  # coordinate vectors over Irr(S)
    degree_bound: int
    complete: bool  # the atoms are certified to be all of Ind(F)
    free_generation: bool | None  # None when the bound does not decide it
    n_stable: int  # nonzero stable characters of degree <= bound


def enumerate_stable_characters(B: StableBasis, degree_bound: int,
                                cap: int = DEFAULT_ATOM_CAP) -> list[tuple[int, ...]]:
    """All nonzero characters in R(F) with nonnegative Irr(S) coordinates and
    degree at most ``degree_bound``.

    Walks the HNF basis row by row; after fixing the first ``i`` coefficients
    every column left of the next pivot is final, which bounds the search.
    """
    H = B.rows if B.canonical else hnf_basis(B.rows)
    degs = [int(d) for d in B.irr_s.degrees]
    n, m = H.shape
    pivots = [next(j for j in range(m) if H[i, j]) for i in range(n)]
    bounds = pivots[1:] + [m]
    H = [list(map(int, r)) for r in H]
    found: list[tuple[int, ...]] = []
    nodes = 0

    def walk(i: int, v: list[int], done_deg: int):
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise CapacityError(f"atom enumeration exceeded {cap} nodes", partial=list(found))
        if i == n:
            if any(v):
                found.append(tuple(v))
            return
        p, h = pivots[i], H[i][pivots[i]]
        top = (degree_bound - done_deg) // degs[p]
        lo = -(v[p] // h)  # ceil(-v[p] / h)
        hi = (top - v[p]) // h
        for c in range(lo, hi + 1):
            w = [a + c * b for a, b in zip(v, H[i])] if c else list(v)
            fixed = w[p:bounds[i]]
            if any(x < 0 for x in fixed):
                continue
            deg = done_deg + sum(x * degs[p + k] for k, x in enumerate(fixed))
            if deg <= degree_bound:
                walk(i + 1, w, deg)

    walk(0, [0] * m, 0)
    return found


def _minimal_elements(vectors: list[tuple[int, ...]], degs: list[int]) -> list[tuple[int, ...]]:
    ordered = sorted(vectors, key=lambda v: (sum(a * d for a, d in zip(v, degs)), v))
    atoms: list[tuple[int, ...]] = []
    for v in ordered:
        if not any(all(a <= b for a, b in zip(atom, v)) for atom in atoms):
            atoms.append(v)
    return atoms


def _cone_is_orthant(A: list[tuple[int, ...]], cap: int) -> bool | None:
    """Whether ``t @ A >= 0`` forces ``t >= 0``, i.e. every real combination of
    the rows of ``A`` with nonnegative entries uses nonnegative coefficients.

    The cone ``{t : t @ A >= 0}`` is pointed; it equals the orthant iff all of
    its extreme rays are nonnegative. Rays are found from every choice of
    ``n-1`` tight coordinate constraints. ``None`` if the search exceeds ``cap``.
    """
    n, m = len(A), len(A[0])
    if n == 1:
        return True
    if math.comb(m, n - 1) > cap:
        return None
    cols = [[A[a][j] for a in range(n)] for j in range(m)]
    for subset in itertools.combinations(range(m), n - 1):
        K = right_kernel(int_matrix([cols[j] for j in subset]), ncols=n)
        if K.shape[0] != 1:
            continue
        r = [int(x) for x in K[0]]
        for sign in (1, -1):
            t = [sign * x for x in r]
            if all(sum(ti * cj for ti, cj in zip(t, c)) >= 0 for c in cols):
                if any(x < 0 for x in t):
                    return False
    return True


def indecomposables(F: FusionData, B: StableBasis, degree_bound: int | None = None,
                    cap: int = DEFAULT_ATOM_CAP) -> IndecomposableSet:
    """F-indecomposable characters of degree at most ``degree_bound``.

    An atom is a nonzero stable character (nonnegative over Irr(S)) that is
    not the sum of two such characters. Anything below an element of the
    search has smaller degree, so the atoms found are genuine elements of
    Ind(F). ``complete`` certifies that they are *all* of Ind(F): the atoms
    form a Z-basis of R(F) and every stable character has nonnegative
    coordinates in it. Raises :class:`CapacityError` (with a partial,
    incomplete set attached) when the search is too large.
    """
    if degree_bound is None:
        degree_bound = 2 * F.S.order
    if degree_bound < 1:
        raise DomainError("degree_bound must be at least 1")
    degs = [int(d) for d in B.irr_s.degrees]
    try:
        stable = enumerate_stable_characters(B, degree_bound, cap)
    except CapacityError as exc:
        atoms = _minimal_elements(exc.partial, degs)
        raise CapacityError(str(exc), partial=IndecomposableSet(
            tuple(atoms), degree_bound, False, None, len(exc.partial))) from None
    atoms = _minimal_elements(stable, degs)
    n = F.n_classes

    free: bool | None = None
    complete = False
    if len(atoms) > n:
        free = False
    elif atoms and rank(int_matrix(atoms)) == n:
        index = lattice_index(int_matrix(atoms), B.rows)
        if index != 1:
            free = False  # Ind(F) spans R(F), so more atoms lie beyond the bound
        else:
            cone = _cone_is_orthant(atoms, DEFAULT_CONE_CAP)
            if cone is True:
                free, complete = True, True
            elif cone is False:
                free = False
    return IndecomposableSet(tuple(atoms), degree_bound, complete, free, len(stable))
