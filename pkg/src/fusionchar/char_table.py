"""Ordinary character tables by the Dixon-Schneider method.

Central characters are found as common eigenvectors of the class
multiplication matrices over a prime field F_q with ``q = 1 mod e`` (``e`` the
group exponent); character values are then lifted back to Q(zeta_e) by
counting eigenvalue multiplicities of each representing matrix, which is an
inverse discrete Fourier transform over the powers of a class representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapacityError, DomainError, InconsistencyError
from .exact.cyclotomic import Cyclotomic, as_cyclotomic
from .perm_group import PermGroup, is_prime

PRIME_CAP = 2 ** 62


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Values of a class function, one per conjugacy class of ``group``."""

    group: PermGroup
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes):
            raise DomainError("one value per conjugacy class is required")
        object.__setattr__(self, "values", tuple(as_cyclotomic(v) for v in self.values))

    def __call__(self, x) -> Cyclotomic:
        return self.values[self.group.class_index[tuple(x)]]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _same(self, other: "ClassFunction") -> None:
        if other.group is not self.group:
            raise DomainError("class functions live on different groups")

    def __add__(self, other):
        self._same(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._same(other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash((id(self.group), self.values))

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conj() for v in self.values))

    def __repr__(self) -> str:
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: PermGroup
    irr: tuple
    conductor: int
    prime: int = 0

    @property
    def degrees(self) -> list[int]:
        return [chi.degree.to_rational() for chi in self.irr]

    def __len__(self) -> int:
        return len(self.irr)

    def __getitem__(self, i) -> ClassFunction:
        return self.irr[i]

    def __iter__(self):
        return iter(self.irr)

    def matrix(self) -> np.ndarray:
        out = np.empty((len(self.irr), len(self.group.conjugacy_classes)), dtype=object)
        for i, chi in enumerate(self.irr):
            for j, v in enumerate(chi.values):
                out[i, j] = v
        return out

    def to_json(self) -> str:
        from .serialize import dumps, table_to_dict

        return dumps(table_to_dict(self))


# class multiplication -----------------------------------------------------

def class_structure_constants(G: PermGroup) -> list[list[list[int]]]:
    """``a[i][j][k] = #{(x, y) in K_i x K_j : x*y = z}`` for fixed ``z`` in ``K_k``."""
    classes = G.conjugacy_classes
    idx = G.class_index
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, c in enumerate(classes):
        z = c.representative
        for x in G.elements:
            y = x.inverse() * z
            a[idx[x]][idx[y]][k] += 1
    return a


def class_mult_coefficients(G: PermGroup, i: int, j: int, k: int) -> int:
    classes = G.conjugacy_classes
    z = classes[k].representative
    Kj = classes[j].members
    return sum(1 for x in classes[i].members if x.inverse() * z in Kj)


# linear algebra over F_q --------------------------------------------------

def _rref_mod(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % q), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def _nullspace_mod(A: list[list[int]], q: int) -> list[list[int]]:
    """Basis of column vectors ``c`` with ``A c = 0`` over F_q."""
    n = len(A[0])
    R, pivots = _rref_mod(A, q)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(R, pivots):
            v[p] = -row[f] % q
        basis.append(v)
    return basis


def _split(space: list[list[int]], M: list[list[int]], q: int) -> list[list[list[int]]]:
    """Split an M-invariant subspace (rows in RREF) into eigenspaces of M."""
    basis, pivots = _rref_mod(space, q)
    d = len(basis)
    r = len(M)
    images = [[sum(M[i][k] * b[k] for k in range(r)) % q for i in range(r)] for b in basis]
    A = [[images[col][p] for col in range(d)] for p in pivots]  # A[a][col]
    parts = []
    found = 0
    for lam in range(q):
        shifted = [[(A[i][j] - (lam if i == j else 0)) % q for j in range(d)] for i in range(d)]
        null = _nullspace_mod(shifted, q)
        if null:
            vecs = [[sum(c[i] * basis[i][t] for i in range(d)) % q for t in range(r)] for c in null]
            parts.append(vecs)
            found += len(null)
            if found == d:
                break
    if found != d:
        raise InconsistencyError("class matrix not diagonalizable over F_q")
    return parts


# prime and root selection -------------------------------------------------

def choose_prime(order: int, e: int) -> int:
    """Smallest prime ``q = 1 (mod e)`` with ``q > 2*sqrt(order)``."""
    q = e + 1
    while not (q * q > 4 * order and is_prime(q)):
        q += e
        if q >= PRIME_CAP:
            raise CapacityError("no suitable prime below 2^62")
    return q


def primitive_root(q: int) -> int:
    factors = [r for r in range(2, q) if (q - 1) % r == 0 and is_prime(r)]
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in factors):
            return g
    return 1


# the algorithm --------------------------------------------------------------

def dixon_schneider(G: PermGroup) -> CharacterTable:
    """Exact ordinary character table of ``G``.

    Rows are sorted by degree, with the trivial character first among the
    linear ones, then by the canonical serialization of their values.
    """
    classes = G.conjugacy_classes
    r = len(classes)
    order = G.order
    e = G.exponent
    q = choose_prime(order, e)
    z = pow(primitive_root(q), (q - 1) // e, q)

    a = class_structure_constants(G)
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for j in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        Mj = [[a[i][j][k] % q for k in range(r)] for i in range(r)]
        new = []
        for s in spaces:
            new.extend([s] if len(s) == 1 else _split(s, Mj, q))
        spaces = new
    if len(spaces) != r or any(len(s) != 1 for s in spaces):
        raise InconsistencyError("class matrices failed to separate the characters")

    sizes = [c.size for c in classes]
    inv = G.inverse_classes
    orders = [c.element_order for c in classes]
    powers = {}
    for k, c in enumerate(classes):
        o = orders[k]
        powers[k] = [G.class_index[c.representative ** m] for m in range(o)]

    rows = []
    for (w,) in spaces:
        w0 = pow(w[0], -1, q)
        w = [x * w0 % q for x in w]
        s = sum(w[k] * w[inv[k]] * pow(sizes[k], -1, q) for k in range(r)) % q
        d2 = order * pow(s, -1, q) % q
        deg = next((d for d in range(1, math.isqrt(order) + 1) if d * d % q == d2), None)
        if deg is None:
            raise InconsistencyError("character degree failed to lift")
        modvals = [w[k] * deg * pow(sizes[k], -1, q) % q for k in range(r)]
        values = []
        for k in range(r):
            o = orders[k]
            zo = pow(z, e // o, q)
            o_inv = pow(o, -1, q)
            mult = {}
            for jexp in range(o):
                m = o_inv * sum(modvals[powers[k][t]] * pow(zo, (-jexp * t) % o, q) for t in range(o)) % q
                if m > deg:
                    raise InconsistencyError("eigenvalue multiplicity failed to lift")
                if m:
                    mult[jexp * (e // o)] = m
            values.append(Cyclotomic.from_exponents(e, mult))
        rows.append(values)

    rows.sort(key=lambda vals: _row_key(vals))
    irr = tuple(ClassFunction(G, tuple(v)) for v in rows)
    table = CharacterTable(G, irr, e, q)
    check_orthogonality(table)
    return table


def _row_key(vals: Sequence[Cyclotomic]):
    deg = vals[0].to_rational()
    trivial = all(v == 1 for v in vals)
    return (deg, not trivial, tuple(tuple(-c for c in v.coeffs) for v in vals))


def character_table(G: PermGroup) -> CharacterTable:
    """Cached :func:`dixon_schneider` (one table per group object)."""
    table = G.__dict__.get("_char_table")
    if table is None:
        table = dixon_schneider(G)
        G.__dict__["_char_table"] = table
    return table


def check_orthogonality(table: CharacterTable) -> None:
    """Assert both orthogonality relations and the degree sum exactly."""
    G = table.group
    classes = G.conjugacy_classes
    sizes = [c.size for c in classes]
    vals = [chi.values for chi in table.irr]
    conj = [[v.conj() for v in row] for row in vals]
    n = len(vals)
    if n != len(classes):
        raise InconsistencyError("table is not square")
    for i in range(n):
        for j in range(i, n):
            s = sum((vals[i][k] * conj[j][k] * sizes[k] for k in range(n)), Cyclotomic.rational(0))
            if s != (G.order if i == j else 0):
                raise InconsistencyError(f"row orthogonality fails for rows {i}, {j}")
    for k in range(n):
        for l in range(k, n):
            s = sum((vals[i][k] * conj[i][l] for i in range(n)), Cyclotomic.rational(0))
            if s != (classes[k].centralizer_order if k == l else 0):
                raise InconsistencyError(f"column orthogonality fails for classes {k}, {l}")
    if sum(d * d for d in table.degrees) != G.order:
        raise InconsistencyError("sum of squared degrees differs from |G|")


# operations on class functions ------------------------------------------------

def restrict(chi: ClassFunction, S: PermGroup) -> ClassFunction:
    G = chi.group
    if not S.is_subgroup_of(G):
        raise DomainError("restriction needs S recorded as a subgroup of the character's group")
    idx = G.class_index
    return ClassFunction(S, tuple(chi.values[idx[c.representative]] for c in S.conjugacy_classes))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    f._same(g)
    H = f.group
    total = sum(
        (c.size * a * b.conj() for c, a, b in zip(H.conjugacy_classes, f.values, g.values)),
        Cyclotomic.rational(0),
    )
    return total / H.order


def irr_decompose(f: ClassFunction, table: CharacterTable) -> tuple[list, bool]:
    """Coefficients ``<f, chi>`` over Irr and whether they are all integers.

    Integral coefficients are returned as ints, others as Cyclotomic values.
    """
    if f.group is not table.group:
        raise DomainError("class function and table are on different groups")
    coeffs = []
    integral = True
    for chi in table.irr:
        c = inner_product(f, chi)
        q = c.to_rational()
        if q is not None and Fraction(q).denominator == 1:
            coeffs.append(int(q))
        else:
            integral = False
            coeffs.append(c)
    return coeffs, integral


def regular_character(S: PermGroup) -> ClassFunction:
    return ClassFunction(S, (S.order,) + (0,) * (len(S.conjugacy_classes) - 1))


def trivial_character(S: PermGroup) -> ClassFunction:
    return ClassFunction(S, (1,) * len(S.conjugacy_classes))


def combination(coeffs: Sequence[int], table: CharacterTable) -> ClassFunction:
    """``sum(c_i * chi_i)`` over the rows of ``table``."""
    G = table.group
    r = len(G.conjugacy_classes)
    vals = [Cyclotomic.rational(0, table.conductor)] * r
    for c, chi in zip(coeffs, table.irr):
        if c:
            vals = [v + c * x for v, x in zip(vals, chi.values)]
    return ClassFunction(G, tuple(vals))
