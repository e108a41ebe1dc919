"""Arithmetic in GF(2^n), 2 <= n <= 24, in a polynomial basis.

Elements are plain integers whose bit ``i`` is the coefficient of ``t^i``.
:class:`FieldSpec` owns the modulus and lazily builds log/antilog tables that
back both the scalar operations and the vectorised ``*_vec`` helpers used by
the table kernels.  :class:`FieldElement` is a thin typed wrapper for callers
that want operator syntax and field-mismatch checking.

Division by zero follows the ``1/0 := 0`` convention everywhere: ``inv(0)``
is ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

import numpy as np

from .errors import UsageError

MIN_DEGREE = 2
MAX_DEGREE = 24

# Smallest irreducible polynomial of each degree, by integer encoding.
DEFAULT_MODULI = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
}


def default_modulus(n: int) -> int:
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise UsageError(f"degree n={n} outside supported range [{MIN_DEGREE}, {MAX_DEGREE}]")
    return DEFAULT_MODULI[n]


def poly_mod(a: int, m: int) -> int:
    """Remainder of GF(2)[t] polynomial ``a`` modulo ``m``."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(m)//2."""
    n = m.bit_length() - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if poly_mod(m, p) == 0:
                return False
    return True


def _clmul_mod(x: int, y: int, n: int, m: int) -> int:
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if (x >> n) & 1:
            x ^= m
    return r


def _clpow_mod(x: int, e: int, n: int, m: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _clmul_mod(r, x, n, m)
        x = _clmul_mod(x, x, n, m)
        e >>= 1
    return r


def _prime_factors(q: int) -> list[int]:
    out = []
    p = 2
    while p * p <= q:
        if q % p == 0:
            out.append(p)
            while q % p == 0:
                q //= p
        p += 1
    if q > 1:
        out.append(q)
    return out


def _clmul_const_vec(xs: np.ndarray, k: int, n: int, m: int) -> np.ndarray:
    """Multiply every entry of ``xs`` by the constant ``k`` (shift-and-add)."""
    r = np.zeros_like(xs)
    a = xs.copy()
    for i in range(n):
        if (k >> i) & 1:
            r ^= a
        a <<= 1
        a ^= ((a >> n) & 1) * m
    return r


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^n) defined by a monic irreducible ``modulus`` of degree ``n``."""

    n: int
    modulus: int

    def __post_init__(self):
        if not MIN_DEGREE <= self.n <= MAX_DEGREE:
            raise UsageError(f"degree n={self.n} outside supported range [{MIN_DEGREE}, {MAX_DEGREE}]")
        if self.modulus.bit_length() - 1 != self.n:
            raise UsageError(f"modulus {self.modulus:#x} does not have degree {self.n}")
        if not is_irreducible(self.modulus):
            raise UsageError(f"modulus {self.modulus:#x} is reducible over GF(2)")

    @classmethod
    def default(cls, n: int) -> "FieldSpec":
        return get_field(n)

    @property
    def order(self) -> int:
        return 1 << self.n

    def __repr__(self):
        return f"FieldSpec(n={self.n}, modulus={self.modulus:#x})"

    # ---- tables -------------------------------------------------------------

    @cached_property
    def generator(self) -> int:
        """Smallest primitive element."""
        q = self.order - 1
        factors = _prime_factors(q)
        for g in range(2 if q > 1 else 1, self.order):
            if all(_clpow_mod(g, q // p, self.n, self.modulus) != 1 for p in factors):
                return g
        return 1  # pragma: no cover - GF(2^n)* is cyclic

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        n, m, q = self.n, self.modulus, self.order - 1
        g = self.generator
        exp = np.ones(1, dtype=np.int64)
        while exp.size < q:
            step = _clpow_mod(g, exp.size, n, m)
            exp = np.concatenate([exp, _clmul_const_vec(exp, step, n, m)])
        exp = exp[:q]
        log = np.zeros(self.order, dtype=np.int32)
        log[exp] = np.arange(q, dtype=np.int32)
        # doubled so log[x] + log[y] never needs a reduction
        return np.concatenate([exp, exp]).astype(np.int32), log

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    @cached_property
    def trace_mask(self) -> int:
        """Bit i set iff Tr(t^i) = 1; trace is then the parity of ``x & mask``."""
        mask = 0
        for i in range(self.n):
            y = 1 << i
            s = 0
            for _ in range(self.n):
                s ^= y
                y = _clmul_mod(y, y, self.n, self.modulus)
            if s == 1:
                mask |= 1 << i
        return mask

    # ---- scalar integer ops -----------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise UsageError(f"{x:#x} is not an element of GF(2^{self.n})")
        return x

    def mul_int(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        log = self.log_table
        return int(self.exp_table[int(log[x]) + int(log[y])])

    def inv_int(self, x: int) -> int:
        if x == 0:
            return 0
        q = self.order - 1
        return int(self.exp_table[(q - int(self.log_table[x])) % q])

    def pow_int(self, x: int, d: int) -> int:
        if d < 0:
            raise UsageError("negative exponent")
        if d == 0:
            return 1
        if x == 0:
            return 0
        q = self.order - 1
        return int(self.exp_table[(int(self.log_table[x]) * d) % q])

    def trace_int(self, x: int) -> int:
        return (x & self.trace_mask).bit_count() & 1

    # ---- vectorised ops ---------------------------------------------------

    def all_elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def mul_vec(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        log = self.log_table
        prod = self.exp_table[log[x].astype(np.int64) + log[y]].astype(np.int64)
        return np.where((x == 0) | (y == 0), 0, prod)

    def square_vec(self, x) -> np.ndarray:
        return self.mul_vec(x, x)

    def inv_vec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        q = self.order - 1
        out = self.exp_table[(q - self.log_table[x].astype(np.int64)) % q].astype(np.int64)
        return np.where(x == 0, 0, out)

    def pow_vec(self, x, d: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if d < 0:
            raise UsageError("negative exponent")
        if d == 0:
            return np.ones_like(x)
        q = self.order - 1
        e = d % q
        out = self.exp_table[(self.log_table[x].astype(np.int64) * e) % q].astype(np.int64)
        return np.where(x == 0, 0, out)

    def trace_vec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return (np.bitwise_count(x & self.trace_mask) & 1).astype(np.int64)

    # ---- element API ------------------------------------------------------

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self.check(int(value)), self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.order):
            yield FieldElement(v, self)


def get_field(n: int, modulus: int | None = None) -> FieldSpec:
    """Cached constructor so every caller shares one set of tables."""
    return _cached_field(n, default_modulus(n) if modulus is None else modulus)


@lru_cache(maxsize=None)
def _cached_field(n: int, modulus: int) -> FieldSpec:
    return FieldSpec(n, modulus)


def elements(spec: FieldSpec) -> Iterator["FieldElement"]:
    return spec.elements()


@dataclass(frozen=True)
class FieldElement:
    value: int
    spec: FieldSpec

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise UsageError(f"cannot combine field element with {type(other).__name__}")
        if other.spec != self.spec:
            raise UsageError(f"field mismatch: {self.spec} vs {other.spec}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.value ^ other.value, self.spec)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.spec.mul_int(self.value, other.value), self.spec)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return self * other.inv()

    def __pow__(self, d: int) -> "FieldElement":
        return FieldElement(self.spec.pow_int(self.value, d), self.spec)

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec.inv_int(self.value), self.spec)

    def trace(self) -> int:
        return self.spec.trace_int(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value:#x}"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def pow(x: FieldElement, d: int) -> FieldElement:  # noqa: A001
    return x ** d


def trace(x: FieldElement) -> int:
    return x.trace()
