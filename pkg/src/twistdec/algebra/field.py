"""Finite fields GF(p^e) with integer-encoded elements.

An element of GF(p^e) is stored as the integer sum(c_i * p**i) of its
coefficient vector (c_0, ..., c_{e-1}) in the monomial basis 1, x, ..., x^{e-1}
modulo the field's defining polynomial.  For e == 1 this is just the residue.

Prime fields use plain modular arithmetic (p < 2**31, so products fit in
int64).  Extension fields are table driven (exp/log/Zech) and capped at
q <= 2**16.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

PRIME_CAP = 2**31
EXT_CAP = 2**16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial helpers over GF(p), coefficient lists low-to-high ------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pl_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pl_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pl_mod(out, f, p)


def _pl_powmod(a: list[int], n: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pl_mod(a, f, p)
    while n:
        if n & 1:
            result = _pl_mulmod(result, base, f, p)
        base = _pl_mulmod(base, base, f, p)
        n >>= 1
    return result


def _pl_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pl_mod(a, b, p)
    return a


def _pl_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` (ascending coefficients) over GF(p)."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    for r in prime_factors(n):
        h = _pl_powmod(x, p ** (n // r), f, p)
        g = _pl_gcd(_pl_sub(h, x, p), f, p)
        if len(g) > 1:
            return False
    return _pl_sub(_pl_powmod(x, p**n, f, p), x, p) == []


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over GF(p), in integer order.

    Candidates are ranked by sum(c_i p^i), i.e. by comparing the coefficient of
    x^{e-1} first; for (2, 3) this gives x^3 + x + 1.
    """
    for low in range(1, p**e):
        coeffs = [(low // p**i) % p for i in range(e)] + [1]
        if coeffs[0] and is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")  # pragma: no cover


# -- the field ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Field:
    """GF(p^e).  Build through :func:`field_make` so instances are shared."""

    p: int
    e: int
    modulus: tuple[int, ...] = ()
    _t: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise FieldError("extension degree must be >= 1")
        if self.e == 1:
            if self.p >= PRIME_CAP:
                raise FieldError(f"prime fields are capped at p < 2^31, got {self.p}")
        else:
            if self.p**self.e > EXT_CAP:
                raise FieldError(f"extension fields are capped at q <= 2^16, got {self.p}^{self.e}")
            if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree e")
            if not is_irreducible(self.modulus, self.p):
                raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")
            self._build_tables()

    # identity -------------------------------------------------------------

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.e, self.modulus) == (
            other.p,
            other.e,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    # encoding -------------------------------------------------------------

    def coerce(self, value) -> int:
        """Accept an int encoding, a coefficient list, or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, (list, tuple)):
            if self.e == 1 and len(value) == 1:
                value = value[0]
            else:
                return self.from_coeffs(value)
        v = int(value)
        if self.e == 1:
            return v % self.p
        if not 0 <= v < self.q:
            raise FieldError(f"{v} is not an element encoding of {self}")
        return v

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise FieldError(f"expected at most {self.e} coefficients")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def to_coeffs(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # scalar arithmetic on int encodings -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._t["log_l"]
        la = log[a]
        z = self._t["zech_l"][(log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._t["exp_l"][la + z]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self._t["neg_l"][a]

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log = self._t["log_l"]
        return self._t["exp_l"][log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        la = self._t["log_l"][a]
        return self._t["exp_l"][(self.q - 1 - la) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.e == 1:
            return pow(a, n, self.p)
        la = self._t["log_l"][a]
        return self._t["exp_l"][(la * n) % (self.q - 1)]

    def scalar(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return c % self.p

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # vectorised arithmetic on int64 arrays ----------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        a, b = np.broadcast_arrays(a, b)
        log, exp, zech = self._t["log"], self._t["exp"], self._t["zech"]
        la = log[a]
        z = zech[(log[b] - la) % (self.q - 1)]
        out = exp[np.where(z < 0, 0, la + z)]
        out = np.where(z < 0, 0, out)
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a) % self.p
        return self._t["neg"][a]

    def vsub(self, a, b) -> np.ndarray:
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        log, exp = self._t["log"], self._t["exp"]
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.e == 1:
            return self.vpow(a, self.p - 2)
        return self._t["exp"][(self.q - 1 - self._t["log"][a]) % (self.q - 1)]

    def vpow(self, a, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if n < 0:
            a, n = self.vinv(a), -n
        result = np.ones_like(a)
        base = a.copy()
        while n:
            if n & 1:
                result = self.vmul(result, base)
            base = self.vmul(base, base)
            n >>= 1
        return result

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over the field; inputs are int64 arrays."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for t in range(A.shape[1]):
            out = self.vadd(out, self.vmul(A[:, t : t + 1], B[t : t + 1, :]))
        return out

    def kernel_args(self):
        """Tuple consumed by the compiled kernels in :mod:`twistdec.kernels`."""
        if "kargs" not in self._t:
            if self.e == 1:
                empty = np.zeros(1, dtype=np.int64)
                args = (0, self.p, self.p - 1, empty, empty, empty, empty)
            else:
                args = (
                    2 if self.p == 2 else 1,
                    self.p,
                    self.q - 1,
                    self._t["exp"],
                    self._t["log"],
                    self._t["zech"],
                    self._t["neg"],
                )
            self._t["kargs"] = args
        return self._t["kargs"]

    # table construction ---------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pl_mulmod(self.to_coeffs(a), self.to_coeffs(b), list(self.modulus), self.p)
        return self.from_coeffs(prod)

    def _mul_matrix(self, a: int) -> np.ndarray:
        # column i holds the digits of a * x^i
        cols = [self.to_coeffs(self._mul_poly(a, self.p**i)) for i in range(self.e)]
        return np.array(cols, dtype=np.int64).T

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        order = q - 1
        factors = prime_factors(order)

        def power(a, n):
            result, base = 1, a
            while n:
                if n & 1:
                    result = self._mul_poly(result, base)
                base = self._mul_poly(base, base)
                n >>= 1
            return result

        gen = next(g for g in range(2, q) if all(power(g, order // r) != 1 for r in factors))

        # digits of gen^0 .. gen^(order-1) by doubling blocks
        weights = p ** np.arange(e, dtype=np.int64)
        block = np.zeros((1, e), dtype=np.int64)
        block[0, 0] = 1
        step = gen
        while block.shape[0] < order:
            mat = self._mul_matrix(step)
            block = np.vstack([block, (block @ mat.T) % p])
            step = self._mul_poly(step, step)
        exp = block[:order] @ weights
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(order, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:, None] // weights) % p
        neg = ((-digits) % p) @ weights
        plus_one = exp - (exp % p) + ((exp % p) + 1) % p
        zech = np.where(plus_one == 0, -1, log[plus_one])
        exp2 = np.concatenate([exp, exp])
        self._t.update(
            generator=gen,
            exp=exp2,
            log=log,
            zech=zech,
            neg=neg,
            exp_l=exp2.tolist(),
            log_l=log.tolist(),
            zech_l=zech.tolist(),
            neg_l=neg.tolist(),
        )


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> Field:
    """GF(p^e) with the smallest monic irreducible modulus (deterministic)."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if e < 1:
        raise FieldError("extension degree must be >= 1")
    if e == 1:
        return Field(p, 1)
    if p**e > EXT_CAP:
        raise FieldError(f"extension fields are capped at q <= 2^16, got {p}^{e}")
    return Field(p, e, smallest_irreducible(p, e))


def extension_field(base: Field, b: int) -> Field:
    """GF(q^b) for q = |base|, realised as GF(p^(e*b)).

    Blocks of b base symbols are identified with this field by concatenating
    their GF(p) digit vectors, which is the identification used by pack().
    """
    if b < 1:
        raise FieldError("block size must be >= 1")
    if b == 1:
        return base
    return field_make(base.p, base.e * b)


def pack(base: Field, ext: Field, blocks: Sequence[int]) -> int:
    """Identify b symbols of GF(q) with one symbol of GF(q^b).

    Symbol i of the block is the coefficient of x^i when ext has a prime base;
    in general the integer encoding is sum(block[i] * q**i).
    """
    b, rem = divmod(ext.e, base.e)
    if rem or ext.p != base.p:
        raise FieldError(f"{ext} is not an extension of {base}")
    if len(blocks) != b:
        raise FieldError(f"pack expects {b} symbols, got {len(blocks)}")
    q = base.q
    return sum(base.coerce(a) * q**i for i, a in enumerate(blocks))


def unpack(base: Field, ext: Field, x: int) -> tuple[int, ...]:
    b, rem = divmod(ext.e, base.e)
    if rem or ext.p != base.p:
        raise FieldError(f"{ext} is not an extension of {base}")
    x = ext.coerce(x)
    q = base.q
    return tuple((x // q**i) % q for i in range(b))


class FieldElement:
    """An element bound to its field, with operator arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.field.e == 1:
            return f"{self.value}"
        return f"{self.field!r}{self.field.to_coeffs(self.value)}"

    def to_wire(self):
        """Decimal integer for prime fields, little-endian coefficients otherwise."""
        if self.field.e == 1:
            return self.value
        return self.field.to_coeffs(self.value)
