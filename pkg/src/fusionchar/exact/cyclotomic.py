"""Exact arithmetic in cyclotomic fields Q(zeta_e).

An element is stored by its coordinates in the power basis
``1, z, ..., z^(phi(e)-1)`` of Q(zeta_e), reduced modulo the e-th cyclotomic
polynomial. Coordinates are ints when integral and Fractions otherwise, so the
usual case of algebraic-integer character values stays in fast int arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

import numpy as np


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        q = num[i + dn] // den[dn]
        quot[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    assert not any(num), "inexact polynomial division"
    return quot


@lru_cache(maxsize=None)
def _powers(e: int) -> tuple[tuple[int, ...], ...]:
    """Reduced power-basis coordinates of z^k for k = 0..e-1."""
    phi_poly = cyclotomic_polynomial(e)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^deg = -sum(phi_poly[:deg] x^i)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi_poly[i] for i, c in enumerate(cur)]
    return tuple(rows)


def degree(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


def _reduce_long(e: int, acc: Sequence) -> tuple:
    """Reduce a length-e exponent vector (mod x^e - 1) to power-basis coordinates."""
    table = _powers(e)
    deg = len(table[0])
    out = list(acc[:deg])
    for k in range(deg, e):
        a = acc[k]
        if a:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += a * t
    return tuple(_norm(c) for c in out)


class Cyclotomic:
    """An element of Q(zeta_e) with exact rational coordinates."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: Sequence | None = None, *, _reduced: bool = False):
        if e < 1:
            raise ValueError("conductor must be positive")
        self.e = e
        if coeffs is None:
            coeffs = ()
        if _reduced:
            self.coeffs = tuple(coeffs)
            return
        coeffs = [_norm(Fraction(c)) if not isinstance(c, int) else c for c in coeffs]
        n = degree(e)
        if len(coeffs) <= n:
            self.coeffs = tuple(coeffs) + (0,) * (n - len(coeffs))
        else:
            acc = [0] * e
            for k, c in enumerate(coeffs):
                acc[k % e] += c
            self.coeffs = _reduce_long(e, acc)

    # construction -----------------------------------------------------
    @classmethod
    def rational(cls, q, e: int = 1) -> "Cyclotomic":
        q = q if isinstance(q, int) else _norm(Fraction(q))
        return cls(e, (q,) + (0,) * (degree(e) - 1), _reduced=True)

    @classmethod
    def root_of_unity(cls, e: int, j: int = 1) -> "Cyclotomic":
        return cls(e, _powers(e)[j % e], _reduced=True)

    @classmethod
    def from_exponents(cls, e: int, exps: dict | Sequence) -> "Cyclotomic":
        """Sum of ``m_j * z^j`` given ``{j: m_j}`` or a length-e multiplicity list."""
        acc = [0] * e
        items = exps.items() if isinstance(exps, dict) else enumerate(exps)
        for j, m in items:
            acc[j % e] += m
        return cls(e, _reduce_long(e, acc), _reduced=True)

    # coercion ---------------------------------------------------------
    def to_conductor(self, E: int) -> "Cyclotomic":
        if E == self.e:
            return self
        if E % self.e:
            raise ValueError(f"conductor {self.e} does not divide {E}")
        step = E // self.e
        acc = [0] * E
        for i, c in enumerate(self.coeffs):
            if c:
                acc[i * step] += c
        return Cyclotomic(E, _reduce_long(E, acc), _reduced=True)

    def _long(self) -> list:
        acc = [0] * self.e
        acc[: len(self.coeffs)] = self.coeffs
        return acc

    @staticmethod
    def _coerce(a, b) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(b, Cyclotomic):
            if isinstance(b, (int, Rational)):
                b = Cyclotomic.rational(b, a.e)
            else:
                raise TypeError(f"cannot combine Cyclotomic with {type(b).__name__}")
        if a.e != b.e:
            E = math.lcm(a.e, b.e)
            a, b = a.to_conductor(E), b.to_conductor(E)
        return a, b

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._coerce(self, other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.e, tuple(_norm(x + y) for x, y in zip(a.coeffs, b.coeffs)), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, tuple(-c for c in self.coeffs), _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            return Cyclotomic(self.e, tuple(_norm(c * other) for c in self.coeffs), _reduced=True)
        try:
            a, b = self._coerce(self, other)
        except TypeError:
            return NotImplemented
        e = a.e
        acc = [0] * e
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        acc[(i + j) % e] += x * y
        return Cyclotomic(e, _reduce_long(e, acc), _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        a, b = self._coerce(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.e)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism ``z -> z^a`` (``gcd(a, e) = 1``)."""
        if math.gcd(a, self.e) != 1:
            raise ValueError(f"{a} is not a unit mod {self.e}")
        acc = [0] * self.e
        for i, c in enumerate(self.coeffs):
            if c:
                acc[(a * i) % self.e] += c
        return Cyclotomic(self.e, _reduce_long(self.e, acc), _reduced=True)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, ``z -> z^(e-1)``."""
        return self.galois(self.e - 1) if self.e > 2 else self

    conjugate = conj

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, by solving the multiplication-by-self system."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(Fraction(1) / Fraction(self.coeffs[0]), self.e)
        n = len(self.coeffs)
        cols = [(self * Cyclotomic.root_of_unity(self.e, i)).coeffs for i in range(n)]
        # augmented system M x = e_0, M[:, i] = coords of self * z^i
        rows = [[Fraction(cols[i][r]) for i in range(n)] + [Fraction(int(r == 0))] for r in range(n)]
        sol = _solve_fractions(rows, n)
        return Cyclotomic(self.e, [_norm(x) for x in sol], _reduced=True)

    # predicates and conversion ---------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral_coords(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_rational(self):
        """The rational value, or ``None`` when the element is not in Q."""
        if not self.is_rational():
            return None
        return self.coeffs[0]

    def __complex__(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.e), math.sin(2 * math.pi / self.e))
        return sum((complex(float(c)) * z ** i for i, c in enumerate(self.coeffs)), 0j)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            a, b = self._coerce(self, other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        # conductor-specific; equal values at different conductors may hash apart
        return hash((self.e, self.coeffs))

    def sort_key(self) -> tuple:
        return self.coeffs

    def __repr__(self) -> str:
        return f"Cyclotomic({self.e}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{self.e}" if i == 1 else f"z{self.e}^{i}")
            if i and c == 1:
                terms.append(mono)
            elif i and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _solve_fractions(rows: list[list[Fraction]], n: int) -> list[Fraction]:
    """Gauss-Jordan on an ``n x (n+1)`` augmented Fraction system (nonsingular)."""
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def cyclo_root_of_unity(e: int, j: int) -> Cyclotomic:
    return Cyclotomic.root_of_unity(e, j)


def cyclo_to_rational(z: Cyclotomic):
    return z.to_rational()


def as_cyclotomic(x, e: int = 1) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.rational(x, e)


def common_conductor(values) -> int:
    return math.lcm(1, *(v.e for v in values if isinstance(v, Cyclotomic)))


def cyclo_matrix(rows, e: int | None = None) -> np.ndarray:
    """Object array of Cyclotomic entries brought to one conductor."""
    flat = [x for row in rows for x in row]
    E = common_conductor(flat) if e is None else e
    out = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = as_cyclotomic(x, E).to_conductor(E)
    return out


def cyclo_conj_matrix(M: np.ndarray) -> np.ndarray:
    out = np.empty(M.shape, dtype=object)
    for idx, x in np.ndenumerate(M):
        out[idx] = as_cyclotomic(x).conj()
    return out


def _det_cofactor(M: list[list[Cyclotomic]]) -> Cyclotomic:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0] * 0


def _det_bareiss(M: list[list[Cyclotomic]]) -> Cyclotomic:
    n = len(M)
    A = [list(row) for row in M]
    sign = 1
    prev = Cyclotomic.rational(1, A[0][0].e)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not A[r][k].is_zero()), None)
            if swap is None:
                return A[0][0] * 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) / prev
            A[i][k] = A[i][k] * 0
        prev = pivot
    return A[n - 1][n - 1] * sign


def cyclo_det(M) -> Cyclotomic:
    """Exact determinant: cofactor expansion below dimension 6, Bareiss above."""
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return Cyclotomic.rational(1)
    rows = [list(r) for r in cyclo_matrix(M.tolist())]
    if n < 6:
        return _det_cofactor(rows)
    return _det_bareiss(rows)
