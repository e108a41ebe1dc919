"""DDT, BCT and FBCT of functions over GF(2^n).

Single entries cost O(2^n) (BCT: O(2^n) for permutations) and work up to the
field's degree cap. Full tables and the brute-force FBCT spectrum cost
O(2^(3n)) and are refused above ``BRUTE_FORCE_MAX_N``. Power functions get an
O(2^(2n)) spectrum: substituting x = b*y and c = a/b turns the (a, b) equation
into the (c, 1) equation, so one count per ratio c suffices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .errors import CapacityError, UsageError
from .field import FieldElement, FieldSpec
from .parallel import map_chunks

BRUTE_FORCE_MAX_N = 9
DDT_MAX_N = 16


@dataclass(frozen=True, eq=False)
class BoxedFunction:
    """A map GF(2^n) -> GF(2^n), either x^d or an explicit lookup table."""

    spec: FieldSpec
    exponent: int | None = None
    table: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if (self.exponent is None) == (self.table is None):
            raise UsageError("give exactly one of exponent or table")
        if self.exponent is not None:
            if not 0 < self.exponent < self.spec.order:
                raise UsageError(f"exponent must lie in [1, 2^n - 1), got {self.exponent}")
        else:
            t = np.asarray(self.table, dtype=np.int64)
            if t.shape != (self.spec.order,):
                raise UsageError(f"lookup table needs exactly {self.spec.order} entries, got {t.size}")
            if t.min() < 0 or t.max() >= self.spec.order:
                raise UsageError("lookup table entries must be field elements")
            t.setflags(write=False)
            object.__setattr__(self, "table", t)

    @classmethod
    def power(cls, spec: FieldSpec, d: int) -> "BoxedFunction":
        return cls(spec, exponent=d)

    @classmethod
    def paper(cls, spec: FieldSpec) -> "BoxedFunction":
        """x^(2^(n-2) - 1)."""
        if spec.n < 3:
            raise UsageError("x^(2^(n-2)-1) needs n >= 3")
        return cls(spec, exponent=(1 << (spec.n - 2)) - 1)

    @classmethod
    def from_table(cls, spec: FieldSpec, values) -> "BoxedFunction":
        return cls(spec, table=np.asarray(values, dtype=np.int64))

    @property
    def is_power(self) -> bool:
        return self.exponent is not None

    @cached_property
    def lookup(self) -> np.ndarray:
        if self.table is not None:
            return self.table
        out = self.spec.pow_vec(self.spec.all_elements(), self.exponent)
        out.setflags(write=False)
        return out

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.spec != self.spec:
            raise UsageError(f"field mismatch: {x.spec} vs {self.spec}")
        if self.exponent is not None:
            return x ** self.exponent
        return FieldElement(int(self.table[x.value]), self.spec)

    def describe(self) -> str:
        return f"x^{self.exponent}" if self.is_power else "lookup-table"


@dataclass
class Spectrum:
    """Multiset of table values, as {value: frequency}."""

    n: int
    counts: dict[int, int]

    @classmethod
    def from_values(cls, n: int, values, weight: int = 1) -> "Spectrum":
        vals, freq = np.unique(np.asarray(values, dtype=np.int64), return_counts=True)
        return cls(n, {int(v): int(f) * weight for v, f in zip(vals, freq)})

    def merge(self, other: "Spectrum") -> "Spectrum":
        if other.n != self.n:
            raise UsageError("cannot merge spectra of different degrees")
        out = dict(self.counts)
        for v, f in other.counts.items():
            out[v] = out.get(v, 0) + f
        return Spectrum(self.n, out)

    def items(self) -> list[tuple[int, int]]:
        return sorted((v, f) for v, f in self.counts.items() if f)

    def __getitem__(self, value: int) -> int:
        return self.counts.get(value, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def values(self) -> list[int]:
        return [v for v, _ in self.items()]

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def to_json(self, spec: FieldSpec, function: str, **meta) -> str:
        doc = {
            "n": self.n,
            "modulus": f"{spec.modulus:#x}",
            "function": function,
            **meta,
            "spectrum": [[v, f] for v, f in self.items()],
        }
        return json.dumps(doc)

    def to_csv(self) -> str:
        lines = ["value,frequency"] + [f"{v},{f}" for v, f in self.items()]
        return "\n".join(lines) + "\n"


def _check_pair(F: BoxedFunction, a: FieldElement, b: FieldElement) -> tuple[int, int]:
    for e in (a, b):
        if e.spec != F.spec:
            raise UsageError(f"field mismatch: {e.spec} vs {F.spec}")
    return a.value, b.value


def _require_brute_force(F: BoxedFunction, what: str) -> None:
    if F.spec.n > BRUTE_FORCE_MAX_N:
        raise CapacityError(
            f"{what} is O(2^(3n)) and limited to n <= {BRUTE_FORCE_MAX_N}; "
            "use fbct_spectrum_power for power functions"
        )


def _nontrivial_mask(size: int) -> np.ndarray:
    a = np.arange(size)
    return (a[:, None] != 0) & (a[None, :] != 0) & (a[:, None] != a[None, :])


# ---- DDT --------------------------------------------------------------------

def ddt_entry(F: BoxedFunction, a: FieldElement, b: FieldElement) -> int:
    a, b = _check_pair(F, a, b)
    s = F.lookup
    xs = F.spec.all_elements()
    return int(np.count_nonzero((s[xs ^ a] ^ s) == b))


def ddt_table(F: BoxedFunction, threads=None, backend=None) -> np.ndarray:
    if F.spec.n > DDT_MAX_N:
        raise CapacityError(f"full DDT limited to n <= {DDT_MAX_N}")
    k = kernels.get(backend)
    s = F.lookup
    parts = map_chunks(lambda rows: k.ddt_rows(s, rows), F.spec.all_elements(), threads)
    return np.concatenate(parts)


def ddt_uniformity(F: BoxedFunction, threads=None, backend=None) -> int:
    if F.is_power:
        # DDT(a, b) = DDT(1, b / a^d): row a=1 carries every value
        k = kernels.get(backend)
        return int(k.ddt_rows(F.lookup, np.array([1], dtype=np.int64)).max())
    return int(ddt_table(F, threads, backend)[1:].max())


# ---- BCT --------------------------------------------------------------------

def bct_entry(F: BoxedFunction, a: FieldElement, b: FieldElement, backend=None) -> int:
    """Ordered pairs (x, y) with F(y)+F(x) = b and F(y+a)+F(x+a) = b."""
    a, b = _check_pair(F, a, b)
    return kernels.get(backend).bct_entry(F.lookup, a, b)


def bct_table(F: BoxedFunction, threads=None, backend=None) -> np.ndarray:
    _require_brute_force(F, "full BCT")
    k = kernels.get(backend)
    s = F.lookup
    parts = map_chunks(lambda rows: k.bct_rows(s, rows), F.spec.all_elements(), threads)
    return np.concatenate(parts)


# ---- FBCT -------------------------------------------------------------------

def fbct_entry(F: BoxedFunction, a: FieldElement, b: FieldElement) -> int:
    a, b = _check_pair(F, a, b)
    s = F.lookup
    xs = F.spec.all_elements()
    t = s ^ s[xs ^ a]
    return int(np.count_nonzero(t == t[xs ^ b]))


def fbct_table(F: BoxedFunction, threads=None, backend=None) -> np.ndarray:
    _require_brute_force(F, "full FBCT")
    k = kernels.get(backend)
    s = F.lookup
    xs = F.spec.all_elements()
    parts = map_chunks(lambda rows: k.fbct_block(s, rows, xs), xs, threads)
    return np.concatenate(parts)


def fbct_spectrum_bruteforce(F: BoxedFunction, threads=None, backend=None) -> Spectrum:
    return Spectrum.from_values(F.spec.n, fbct_table(F, threads, backend).ravel())


def fbct_ratio_counts(F: BoxedFunction, threads=None, backend=None) -> np.ndarray:
    """FBCT(c, 1) for every c; for a power function FBCT(a, b) = FBCT(a/b, 1)."""
    k = kernels.get(backend)
    s = F.lookup
    one = np.array([1], dtype=np.int64)
    # FBCT(1, c) = FBCT(c, 1) by the (a, b) <-> (b, a) symmetry
    parts = map_chunks(lambda cs: k.fbct_block(s, one, cs)[0], F.spec.all_elements(), threads)
    return np.concatenate(parts)


def _spectrum_from_ratios(spec: FieldSpec, counts: np.ndarray) -> Spectrum:
    size = spec.order
    spec_nt = Spectrum.from_values(spec.n, counts[2:], weight=size - 1)
    return spec_nt.merge(Spectrum(spec.n, {size: 3 * size - 2}))


def fbct_spectrum_power(d: int, spec: FieldSpec, threads=None, backend=None) -> Spectrum:
    F = BoxedFunction.power(spec, d)
    return _spectrum_from_ratios(spec, fbct_ratio_counts(F, threads, backend))


def fbct_uniformity(F: BoxedFunction, threads=None, backend=None) -> int:
    """Max FBCT entry over ab(a+b) != 0; 0 exactly for APN functions."""
    if F.is_power:
        return int(fbct_ratio_counts(F, threads, backend)[2:].max())
    table = fbct_table(F, threads, backend)
    return int(table[_nontrivial_mask(F.spec.order)].max())
