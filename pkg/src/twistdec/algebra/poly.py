"""Univariate and bivariate polynomials over a :class:`Field`."""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

import numpy as np

from .field import Field, FieldError

NEG_INF = -math.inf  # degree of the zero polynomial
ROOT_SCAN_CAP = 2**16
KARATSUBA_THRESHOLD = 32


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _school_mul(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def _vec_add(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return out


def _vec_sub(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, y in enumerate(b):
        out[i] = F.sub(out[i], y)
    return out


def _karatsuba(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < KARATSUBA_THRESHOLD or len(b) < KARATSUBA_THRESHOLD:
        return _school_mul(F, a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(F, a0, b0)
    z2 = _karatsuba(F, a1, b1)
    z1 = _karatsuba(F, _vec_add(F, a0, a1), _vec_add(F, b0, b1))
    z1 = _vec_sub(F, _vec_sub(F, z1, z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] = F.add(out[i], c)
    for i, c in enumerate(z1):
        if c:
            out[i + m] = F.add(out[i + m], c)
    for i, c in enumerate(z2):
        if c:
            out[i + 2 * m] = F.add(out[i + 2 * m], c)
    return out


class Poly:
    """Immutable polynomial with ascending, trailing-zero-free coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _normalize(field.coerce(c) for c in coeffs)

    @classmethod
    def _raw(cls, field: Field, coeffs: Iterable[int]) -> "Poly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = _normalize(coeffs)
        return obj

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls._raw(field, [0] * degree + [field.coerce(coeff)])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """First n coefficients, zero padded."""
        c = self.coeffs[:n]
        return c + (0,) * (n - len(c))

    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise FieldError(f"polynomials over {self.field} and {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                cs = str(c) if self.field.e == 1 else str(self.field.to_coeffs(c))
                terms.append(cs if i == 0 else f"{cs}x^{i}" if i > 1 else f"{cs}x")
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.field, _vec_add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.field, _vec_sub(self.field, self.coeffs, other.coeffs))

    def __neg__(self) -> "Poly":
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly._raw(self.field, ())
        return Poly._raw(self.field, _karatsuba(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "Poly":
        c = self.field.coerce(c)
        return Poly._raw(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def quotrem(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        inv_lead = F.inv(divisor.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = F.mul(rem[shift + dd], inv_lead)
            if c:
                quot[shift] = c
                for i, d in enumerate(divisor.coeffs):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, d))
        return Poly._raw(F, quot), Poly._raw(F, rem)

    def __floordiv__(self, other):
        return self.quotrem(other)[0]

    def __mod__(self, other):
        return self.quotrem(other)[1]

    def __pow__(self, n: int) -> "Poly":
        result = Poly._raw(self.field, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, a) -> int:
        return poly_eval(self, a)


def poly_eval(f: Poly, a) -> int:
    """Horner evaluation; returns the int encoding of f(a)."""
    F = f.field
    a = F.coerce(a)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def multipoint_eval(f: Poly, points) -> np.ndarray:
    F = f.field
    pts = np.asarray([F.coerce(x) for x in points] if not isinstance(points, np.ndarray) else points, dtype=np.int64)
    acc = np.zeros(pts.shape, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = F.vadd(F.vmul(acc, pts), c)
    return acc


def univariate_roots(f: Poly, cap: int = ROOT_SCAN_CAP) -> list[int]:
    """All roots of f by evaluating at every field element, ascending."""
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    F = f.field
    if F.q > cap:
        raise ValueError(f"root scan over {F} exceeds the cap q <= {cap}")
    if f.degree == 0:
        return []
    values = multipoint_eval(f, F.elements())
    return np.flatnonzero(values == 0).tolist()


class BiPoly:
    """Sparse Q(x, y) = sum q_ij x^i y^j, stored as {(i, j): q_ij != 0}."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[tuple[int, int], int] | None = None):
        self.field = field
        self.terms: dict[tuple[int, int], int] = {}
        for key, c in (terms or {}).items():
            c = field.coerce(c)
            if c:
                i, j = key
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                self.terms[(int(i), int(j))] = c

    @classmethod
    def from_dense(cls, field: Field, arr: np.ndarray) -> "BiPoly":
        """Build from arr[i, j] = coefficient of x^i y^j."""
        obj = cls.__new__(cls)
        obj.field = field
        ii, jj = np.nonzero(arr)
        obj.terms = {(int(i), int(j)): int(arr[i, j]) for i, j in zip(ii, jj)}
        return obj

    @classmethod
    def y_minus(cls, f: Poly) -> "BiPoly":
        """y - f(x)."""
        F = f.field
        terms = {(i, 0): F.neg(c) for i, c in enumerate(f.coeffs)}
        terms[(0, 1)] = 1
        return cls(F, terms)

    def to_dense(self) -> np.ndarray:
        if not self.terms:
            return np.zeros((1, 1), dtype=np.int64)
        dx = max(i for i, _ in self.terms) + 1
        dy = max(j for _, j in self.terms) + 1
        arr = np.zeros((dx, dy), dtype=np.int64)
        for (i, j), c in self.terms.items():
            arr[i, j] = c
        return arr

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        parts = [f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items())]
        return "BiPoly(" + (" + ".join(parts) or "0") + ")"

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        F = self.field
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = F.add(out.get(key, 0), F.mul(c1, c2))
        return BiPoly(F, out)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def wdeg(self, w: int) -> int:
        return wdeg(self, w)

    def __call__(self, a, b) -> int:
        F = self.field
        a, b = F.coerce(a), F.coerce(b)
        acc = 0
        for (i, j), c in self.terms.items():
            acc = F.add(acc, F.mul(c, F.mul(F.pow(a, i), F.pow(b, j))))
        return acc

    def y_coeffs(self) -> list[Poly]:
        """Q as sum_j Q_j(x) y^j; returns [Q_0, Q_1, ...]."""
        dy = self.y_degree
        cols: list[list[int]] = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            col = cols[j]
            if len(col) <= i:
                col.extend([0] * (i + 1 - len(col)))
            col[i] = c
        return [Poly._raw(self.field, col) for col in cols]

    def translate(self, a, r) -> "BiPoly":
        return bipoly_translate(self, a, r)

    def multiplicity(self, a, r) -> int:
        """Vanishing order at (a, r): minimal total degree of Q(x+a, y+r)."""
        t = bipoly_translate(self, a, r)
        if t.is_zero():
            return math.inf
        return min(i + j for i, j in t.terms)


def wdeg(Q: BiPoly, w: int) -> int:
    """(1, w)-weighted degree max(i + w*j)."""
    if Q.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    return max(i + w * j for i, j in Q.terms)


def taylor_shift_rows(F: Field, arr: np.ndarray, c: int) -> np.ndarray:
    """Return B with sum_i B[i] z^i = sum_i arr[i] (z + c)^i, along axis 0."""
    arr = np.asarray(arr, dtype=np.int64)
    out = arr.copy()
    if c == 0:
        return out
    n = out.shape[0]
    # repeated synthetic division: O(n^2) vector operations
    for k in range(n - 1):
        for j in range(n - 2, k - 1, -1):
            out[j] = F.vadd(out[j], F.vmul(out[j + 1], c))
    return out


def bipoly_translate(Q: BiPoly, a, r) -> BiPoly:
    """Q(x + a, y + r), exact, with binomial coefficients reduced mod p."""
    F = Q.field
    a, r = F.coerce(a), F.coerce(r)
    if Q.is_zero():
        return BiPoly(F)
    arr = Q.to_dense()
    arr = taylor_shift_rows(F, arr, a)
    arr = taylor_shift_rows(F, arr.T, r).T
    return BiPoly.from_dense(F, arr)


def compose(Q: BiPoly, f: Poly) -> Poly:
    """Q(x, f(x)), by Horner in y."""
    F = Q.field
    if f.field != F:
        raise FieldError("compose over different fields")
    cols = Q.y_coeffs()
    acc = Poly._raw(F, ())
    for Qj in reversed(cols):
        acc = acc * f + Qj
    return acc
