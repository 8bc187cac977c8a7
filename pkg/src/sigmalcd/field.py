"""Exact arithmetic in small finite fields GF(p^e).

An element of GF(p^e) is its integer encoding sum(c_i * p^i) where
sum(c_i * x^i) is the canonical representative modulo the field's monic
irreducible modulus.  Operations accept plain ints or numpy integer arrays
and vectorize elementwise; a discrete-log table pair (exp/log) built once
at construction drives multiplication, inversion and powering.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    EmbeddingMissing,
    NotPrime,
    ReducibleModulus,
)

MAX_EXTENSION_DEGREE = 16
# tables are O(q) except the odd-p addition table, which is q*q
MAX_FIELD_SIZE = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
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


# ---------------------------------------------------------------------------
# dense polynomials over GF(p) as little-endian int tuples, used only for
# modulus selection and the build-time scalar multiply


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * inv_lb) % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * bj) % p
        a.pop()
    return _trim(a)


@functools.lru_cache(maxsize=None)
def _irreducibles(p: int, dmax: int):
    """All monic irreducible polynomials over GF(p) of degree 1..dmax."""
    out = []
    for d in range(1, dmax + 1):
        for idx in range(p**d):
            c = tuple((idx // p**i) % p for i in range(d)) + (1,)
            if not any(
                len(g) - 1 <= d // 2 and not _pmod(c, g, p) for g in out
            ):
                out.append(c)
    return tuple(out)


def _is_irreducible(f, p: int) -> bool:
    d = len(f) - 1
    if d < 1:
        return False
    return not any(not _pmod(f, g, p) for g in _irreducibles(p, d // 2))


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple:
    """Least monic irreducible of degree e, ordered by coefficient tuple
    with the constant term most significant."""
    for idx in range(p**e):
        c = tuple((idx // p ** (e - 1 - i)) % p for i in range(e)) + (1,)
        if _is_irreducible(c, p):
            return c
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------


class Field:
    """GF(p^e) with table-backed vectorized arithmetic on integer encodings."""

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if e < 1 or e > MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree {e} outside supported 1..{MAX_EXTENSION_DEGREE}")
        if p**e > MAX_FIELD_SIZE:
            raise ValueError(f"field size {p**e} exceeds table-backed limit {MAX_FIELD_SIZE}")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise DegreeMismatch(f"modulus must be monic of degree {e}, got {modulus}")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        q, N = self.q, self.q - 1
        arr = np.arange(q, dtype=np.int64)
        self.digits = np.stack([(arr // p**i) % p for i in range(e)], axis=1).astype(np.int8)
        self._p_powers = np.array([p**i for i in range(e)], dtype=np.int64)

        # discrete-log tables from a deterministic least generator
        exp = np.empty(max(N, 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        if N == 1:
            g = 1
            exp[0] = 1
            log[1] = 0
        else:
            prims = prime_factors(N)
            g = None
            for cand in range(2, q):
                if all(self._spow(cand, N // ell) != 1 for ell in prims):
                    g = cand
                    break
            assert g is not None, "multiplicative group has a generator"
            x = 1
            for i in range(N):
                exp[i] = x
                log[x] = i
                x = self._smul(x, g)
            assert x == 1 and log.min() >= -1 and (log[1:] >= 0).all()
        self.generator = g
        self._exp = exp
        self._log = log

        if p == 2:
            self._neg = arr.astype(np.int16)
            self._add_table = None
        else:
            self._neg = (((p - self.digits) % p).astype(np.int64) @ self._p_powers).astype(np.int16)
            s = (self.digits[:, None, :].astype(np.int16) + self.digits[None, :, :]) % p
            self._add_table = (s.astype(np.int64) @ self._p_powers).astype(np.int16)

    # build-time scalar multiply straight from the digit representation
    def _smul(self, a: int, b: int) -> int:
        p, e, mod = self.p, self.e, self.modulus
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for d in range(2 * e - 2, e - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(e):
                    prod[d - e + i] = (prod[d - e + i] - c * mod[i]) % p
        return sum(prod[i] * p**i for i in range(e))

    def _spow(self, a: int, k: int) -> int:
        out = 1
        base = a
        while k:
            if k & 1:
                out = self._smul(out, base)
            base = self._smul(base, base)
            k >>= 1
        return out

    # -- elementwise ops ----------------------------------------------------

    @staticmethod
    def _scalar(*inputs) -> bool:
        return all(isinstance(v, (int, np.integer)) for v in inputs)

    @staticmethod
    def _out(r, scalar: bool):
        return int(r) if scalar else np.asarray(r).astype(np.int16)

    def add(self, a, b):
        scalar = self._scalar(a, b)
        if self.p == 2:
            r = np.bitwise_xor(np.asarray(a), np.asarray(b))
        else:
            r = self._add_table[np.asarray(a), np.asarray(b)]
        return self._out(r, scalar)

    def neg(self, a):
        return self._out(self._neg[np.asarray(a)], self._scalar(a))

    def sub(self, a, b):
        scalar = self._scalar(a, b)
        return self._out(np.asarray(self.add(np.asarray(a), self._neg[np.asarray(b)])), scalar)

    def mul(self, a, b):
        scalar = self._scalar(a, b)
        aa, bb = np.asarray(a), np.asarray(b)
        r = self._exp[(self._log[aa] + self._log[bb]) % max(self.q - 1, 1)]
        r = np.where((aa == 0) | (bb == 0), 0, r)
        return self._out(r, scalar)

    def inv(self, a):
        scalar = self._scalar(a)
        aa = np.asarray(a)
        if np.any(aa == 0):
            raise DivisionByZero("inverse of zero")
        N = max(self.q - 1, 1)
        return self._out(self._exp[(N - self._log[aa]) % N], scalar)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        """a**k with 0**0 = 1; negative k inverts (errors on zero base)."""
        scalar = self._scalar(a)
        aa = np.asarray(a)
        N = max(self.q - 1, 1)
        if k < 0 and np.any(aa == 0):
            raise DivisionByZero("negative power of zero")
        r = self._exp[(self._log[aa] * (k % N)) % N]
        r = np.ones_like(r) if k == 0 else np.where(aa == 0, 0, r)
        return self._out(r, scalar)

    def frob(self, a, s: int = 1):
        """Entrywise Frobenius a -> a**(p**s)."""
        return self.pow(a, pow(self.p, s % self.e))

    def sum(self, arr, axis=None):
        arr = np.asarray(arr)
        if self.p == 2:
            r = np.bitwise_xor.reduce(arr, axis=axis if axis is not None else None)
            return r if isinstance(r, np.ndarray) else int(r)
        d = self.digits[arr].astype(np.int64)
        ax = tuple(range(arr.ndim)) if axis is None else axis
        s = d.sum(axis=ax) % self.p
        r = s @ self._p_powers
        return r.astype(np.int16) if isinstance(r, np.ndarray) else int(r)

    def dot(self, u, v):
        return self.sum(self.mul(u, v))

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.e:
            raise DegreeMismatch(f"{len(coeffs)} coefficients for degree-{self.e} field")
        return int(sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, x: int) -> tuple:
        return tuple(int(d) for d in self.digits[int(x)])

    def element_order(self, a: int) -> int:
        if int(a) == 0:
            raise DivisionByZero("order of zero")
        N = max(self.q - 1, 1)
        return N // math.gcd(N, int(self._log[int(a)]))

    # -- identity/equality --------------------------------------------------

    @property
    def gen(self) -> int:
        """Encoding of the class of x (extension fields only)."""
        return self.p if self.e > 1 else None

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


@functools.lru_cache(maxsize=None)
def _field_cached(p, e, modulus):
    return Field(p, e, modulus)


def field(p: int, e: int = 1, modulus=None) -> Field:
    """Interned Field factory; same arguments give the same object."""
    return _field_cached(p, e, None if modulus is None else tuple(int(c) for c in modulus))


class Embedding:
    """Field homomorphism GF(p^a) -> GF(p^b) for a | b.

    The class of x in the small field is sent to the root of the small
    modulus with least integer encoding in the big field; prime fields embed
    as constants.  `table` maps small encodings to big ones, `lift` inverts
    on the image.
    """

    def __init__(self, small: Field, big: Field):
        if small.p != big.p:
            raise EmbeddingMissing(f"no embedding {small} -> {big}: different characteristic")
        if big.e % small.e != 0:
            raise EmbeddingMissing(f"no embedding {small} -> {big}: {small.e} does not divide {big.e}")
        self.small = small
        self.big = big
        if small == big:
            table = np.arange(small.q, dtype=np.int16)
            self.root = small.gen
        elif small.e == 1:
            table = np.arange(small.q, dtype=np.int16)
            self.root = None
        else:
            z = np.arange(big.q, dtype=np.int16)
            acc = np.full(big.q, small.modulus[-1], dtype=np.int16)
            for c in reversed(small.modulus[:-1]):
                acc = big.add(big.mul(acc, z), int(c))
            roots = np.where(np.asarray(acc) == 0)[0]
            if roots.size == 0:
                raise EmbeddingMissing(f"{small} modulus has no root in {big}")
            self.root = int(roots.min())
            acc = np.zeros(small.q, dtype=np.int16)
            pw = 1
            for i in range(small.e):
                acc = big.add(acc, big.mul(small.digits[:, i].astype(np.int16), pw))
                pw = big.mul(pw, self.root)
            table = np.asarray(acc, dtype=np.int16)
        self.table = table
        inverse = np.full(big.q, -1, dtype=np.int32)
        inverse[table] = np.arange(small.q)
        assert np.count_nonzero(inverse >= 0) == small.q, "embedding must be injective"
        self._inverse = inverse

    def __call__(self, x):
        r = self.table[np.asarray(x)]
        return int(r) if isinstance(x, (int, np.integer)) else r.astype(np.int16)

    def lift(self, y):
        r = self._inverse[np.asarray(y)]
        if np.any(np.asarray(r) < 0):
            raise EmbeddingMissing("value outside the embedded subfield")
        return int(r) if isinstance(y, (int, np.integer)) else r.astype(np.int16)

    def eval_poly(self, coeffs, alpha: int) -> int:
        """Evaluate a small-field polynomial (little-endian encodings) at a
        big-field point."""
        acc = 0
        for c in reversed(np.asarray(coeffs, dtype=np.int64)):
            acc = self.big.add(self.big.mul(acc, int(alpha)), self.table[int(c)])
        return int(acc)


@functools.lru_cache(maxsize=None)
def embedding(small: Field, big: Field) -> Embedding:
    return Embedding(small, big)
