"""Exact arithmetic in GF(p^e).

Elements are plain integers in [0, q).  The base-p digits of an element
(little-endian) are the coefficients of its residue polynomial in the
primitive-element basis.  Multiplication and inversion go through discrete
exp/log tables built at construction time; addition is digit-wise mod p.
"""

from __future__ import annotations

import functools

from .errors import NotPrime, NotPrimePower, OrderTooLarge

ORDER_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value, p, length):
    out = []
    for _ in range(length):
        out.append(value % p)
        value //= p
    return out


def _encode(digits, p):
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_mod(a, mod, p):
    # mod is monic
    a = list(a)
    while len(a) >= len(mod):
        c = a[-1]
        if c:
            shift = len(a) - len(mod)
            for i, y in enumerate(mod):
                a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    return _poly_trim(a)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of lower positive degree."""
    deg = len(poly) - 1
    for d in range(1, deg):
        for enc in range(p ** d):
            divisor = _digits(enc, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


class FieldSpec:
    """Immutable description of GF(p^e) with exp/log multiplication tables."""

    def __init__(self, p, e, modulus, primitive, exp_table, log_table):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = tuple(modulus)
        self.primitive = primitive
        self.exp_table = tuple(exp_table)
        self.log_table = tuple(log_table)
        self._np_tables = None

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    # -- element codecs -------------------------------------------------

    def decode(self, value):
        """Base-p digit vector (little-endian) of an element encoding."""
        return _digits(value, self.p, self.e)

    def encode(self, digits):
        return _encode(digits, self.p)

    def elements(self):
        return range(self.q)

    # -- field operations ----------------------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return _encode([(x + y) % p for x, y in zip(self.decode(a), self.decode(b))], p)

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        p = self.p
        return _encode([(x - y) % p for x, y in zip(self.decode(a), self.decode(b))], p)

    def neg(self, a):
        return self.sub(0, a)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.q - 1)]

    def pow(self, a, n):
        if n == 0:
            return 1
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] * n) % (self.q - 1)]

    # -- bulk operation tables (for vectorized codeword enumeration) ----

    def op_tables(self):
        """(add_table, mul_table) as q-by-q numpy arrays; built lazily."""
        if self._np_tables is None:
            import numpy as np

            q = self.q
            dt = np.uint8 if q <= 255 else np.uint16
            add = np.empty((q, q), dtype=dt)
            mul = np.empty((q, q), dtype=dt)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            self._np_tables = (add, mul)
        return self._np_tables


def _raw_mul(a, b, p, modulus):
    prod = _poly_mul(_poly_trim(_digits(a, p, len(modulus) - 1)),
                     _poly_trim(_digits(b, p, len(modulus) - 1)), p)
    return _encode(_poly_mod(prod, list(modulus), p) + [0] * len(modulus), p)


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int) -> FieldSpec:
    """Construct GF(p^e).

    The modulus is the irreducible monic degree-e polynomial with the smallest
    little-endian integer encoding of its non-leading coefficients; the
    primitive element is the smallest nonzero encoding of multiplicative order
    q-1.  Cached, so equal (p, e) always yield the identical FieldSpec object.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    q = p ** e
    if q > ORDER_CAP:
        raise OrderTooLarge(q, ORDER_CAP)

    modulus = None
    for enc in range(q):
        cand = _digits(enc, p, e) + [1]
        if _is_irreducible(cand, p):
            modulus = tuple(cand)
            break
    assert modulus is not None

    # smallest nonzero element of multiplicative order q-1
    primitive = None
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x = _raw_mul(x, g, p, modulus)
            order += 1
        if order == q - 1:
            primitive = g
            break
    assert primitive is not None

    exp_table = [0] * (q - 1)
    log_table = [0] * q
    x = 1
    for i in range(q - 1):
        exp_table[i] = x
        log_table[x] = i
        x = _raw_mul(x, primitive, p, modulus)
    return FieldSpec(p, e, modulus, primitive, exp_table, log_table)


def factor_prime_power(q: int):
    """Return (p, e) with q = p^e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(q)
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise NotPrimePower(q)
    return p, e


def field_from_order(q: int) -> FieldSpec:
    p, e = factor_prime_power(q)
    return make_field(p, e)
