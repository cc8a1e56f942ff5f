"""
Exact arithmetic in GF(q), q = p^m.

Elements are integers in [0, q).  For m > 1 the little-endian base-p digits
of an element are the coefficients c_0 + c_1 x + ... + c_{m-1} x^{m-1} of its
polynomial representative modulo a fixed monic irreducible polynomial.

Scalar operations live on :class:`Field` (``F.add(a, b)`` etc. on plain ints)
together with numpy-vectorized twins (``add_arr``, ``mul_arr``, ...) used by
the linear algebra layer.  :class:`FieldElem` wraps a value with its field for
the operator-overloading interface.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotAPrimePower, TooLarge, ValueOutOfField

MAX_ORDER = 65536


def _factor_prime_power(q):
    """Return (p, m) with q = p^m, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotAPrimePower(f"{q} has at least two distinct prime factors")
    return p, m


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists low degree first ---------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo b over GF(p); b must be nonzero."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - factor * bj) % p
        _poly_trim(a)
    return a


def is_irreducible(coeffs, p):
    """Trial division of a monic polynomial by every monic polynomial of degree <= m/2."""
    m = len(coeffs) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(coeffs, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m (low-degree coefficient first)."""
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """The finite field GF(q); build instances with :func:`field_new`."""

    def __init__(self, q, reduction_polynomial=None):
        if q > MAX_ORDER:
            raise TooLarge(f"q = {q} exceeds {MAX_ORDER}")
        p, m = _factor_prime_power(q)
        self.p, self.m, self.q = p, m, q
        self.reduction_polynomial = None
        self._powers = np.array([p ** j for j in range(m)], dtype=np.int64)
        if m > 1:
            poly = tuple(reduction_polynomial) if reduction_polynomial else smallest_irreducible(p, m)
            if len(poly) != m + 1 or poly[-1] != 1 or not is_irreducible(list(poly), p):
                raise ValueError(f"{poly} is not a monic irreducible polynomial of degree {m}")
            self.reduction_polynomial = poly
            self._build_log_tables()

    # -- construction helpers ---------------------------------------------

    def _digits_array(self, values):
        values = np.asarray(values, dtype=np.int64)
        return (values[..., None] // self._powers) % self.p

    def _mul_poly_scalar(self, a, b):
        """Slow reference product of two elements via polynomial arithmetic."""
        p, m = self.p, self.m
        da = [(a // p ** j) % p for j in range(m)]
        db = [(b // p ** j) % p for j in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, self.reduction_polynomial, p)
        return sum(c * p ** j for j, c in enumerate(rem))

    def _build_log_tables(self):
        q, p, m = self.q, self.p, self.m
        digits = self._digits_array(np.arange(q))
        order_needed = q - 1
        for g in range(2, q):
            # multiplication by g is GF(p)-linear: column j is g * x^j
            images = [self._mul_poly_scalar(g, p ** j) for j in range(m)]
            mat = self._digits_array(images).T  # m x m
            perm = ((digits @ mat.T) % p) @ self._powers
            perm = perm.tolist()
            exp = [1]
            x = perm[1]
            while x != 1:
                exp.append(x)
                x = perm[x]
            if len(exp) == order_needed:
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise AssertionError("no primitive element found")
        self.primitive_element = g
        self._exp = np.array(exp + exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[np.array(exp)] = np.arange(q - 1)
        self._log = log

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.reduction_polynomial)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.q})"

    def __call__(self, value):
        return FieldElem(self, self.check(value))

    def elements(self):
        return [FieldElem(self, v) for v in range(self.q)]

    def check(self, value):
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not an element of {self!r}")
            return value.value
        v = int(value)
        if not 0 <= v < self.q:
            raise ValueOutOfField(f"{value} is not in [0, {self.q})")
        return v

    # -- scalar arithmetic on encoded ints ------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return int(self.add_arr(a, b))

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return int(self.neg_arr(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # -- vectorized arithmetic on int64 arrays ----------------------------------

    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return ((self._digits_array(a) + self._digits_array(b)) % self.p) @ self._powers

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return ((-self._digits_array(a)) % self.p) @ self._powers

    def sub_arr(self, a, b):
        if self.p == 2:
            return np.asarray(a, dtype=np.int64) ^ np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.q == 2:
            return a & b
        if self.m == 1:
            return (a * b) % self.p
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)


@lru_cache(maxsize=None)
def field_new(q):
    """Return GF(q) with its deterministic reduction polynomial."""
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool):
        raise TypeError(f"field order must be an integer, got {q!r}")
    q = int(q)
    if q > MAX_ORDER:
        # report a bad factorization before size when both apply
        _factor_prime_power(q)
        raise TooLarge(f"q = {q} exceeds {MAX_ORDER}")
    return Field(q)


def as_field(field_or_q):
    if isinstance(field_or_q, Field):
        return field_or_q
    return field_new(field_or_q)


@dataclass(frozen=True)
class FieldElem:
    field: Field
    value: int

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.check(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElem(self.field, self._other(other)).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} in {self.field!r}"


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()
