"""Root counts of quadratics and of quartics x^4 + a2 x^2 + a1 x + a0.

Quadratics are decided by a single trace. Quartics with a0*a1 != 0 are
classified through their companion cubic y^3 + a2 y + a1 (Leonard-Williams):
the cubic's factorisation plus the traces of w_i = a0 r_i^2 / a1^2 over its
roots r_i fix the quartic's factorisation pattern, hence its root count.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .field import FieldElement, FieldSpec

log = logging.getLogger(__name__)


def _same_field(*xs: FieldElement) -> FieldSpec:
    spec = xs[0].spec
    for x in xs[1:]:
        if x.spec != spec:
            raise UsageError(f"field mismatch: {x.spec} vs {spec}")
    return spec


def quadratic_root_count(a: FieldElement, b: FieldElement, c: FieldElement) -> int:
    """Number of roots of a x^2 + b x + c."""
    _same_field(a, b, c)
    if not a:
        raise UsageError("leading coefficient is zero; not a quadratic")
    if not b:
        return 1
    return 2 if (a * c * (b * b).inv()).trace() == 0 else 0


def poly_eval_all(spec: FieldSpec, coeffs) -> np.ndarray:
    """Evaluate sum coeffs[i] x^i at every field element (Horner)."""
    xs = spec.all_elements()
    acc = np.zeros_like(xs)
    for c in reversed([int(c) for c in coeffs]):
        acc = spec.mul_vec(acc, xs) ^ c
    return acc


def count_roots_exhaustive(spec: FieldSpec, coeffs) -> int:
    return int(np.count_nonzero(poly_eval_all(spec, coeffs) == 0))


def _deflate(spec: FieldSpec, coeffs: list[int], r: int) -> tuple[list[int], int]:
    """Synthetic division by (x + r); coefficients low to high."""
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] ^ spec.mul_int(carry, r)
        out[i - 1] = carry
    rem = coeffs[0] ^ spec.mul_int(carry, r)
    return out, rem


def cubic_roots(p: FieldElement, q: FieldElement) -> list[FieldElement]:
    """Roots of t^3 + p t + q with multiplicity, sorted by encoding."""
    spec = _same_field(p, q)
    coeffs = [q.value, p.value, 0, 1]
    distinct = np.flatnonzero(poly_eval_all(spec, coeffs) == 0)
    roots = []
    for r in distinct.tolist():
        poly, rem = coeffs, 0
        while len(poly) > 1:
            quot, rem = _deflate(spec, poly, r)
            if rem:
                break
            roots.append(r)
            poly = quot
    return [FieldElement(r, spec) for r in sorted(roots)]


@dataclass(frozen=True)
class QuarticShape:
    """x^4 + a2 x^2 + a1 x + a0."""

    a2: FieldElement
    a1: FieldElement
    a0: FieldElement

    def __post_init__(self):
        _same_field(self.a2, self.a1, self.a0)

    @property
    def spec(self) -> FieldSpec:
        return self.a2.spec

    @property
    def admissible(self) -> bool:
        return bool(self.a0) and bool(self.a1)

    def coeffs(self) -> list[int]:
        return [self.a0.value, self.a1.value, self.a2.value, 0, 1]


@dataclass(frozen=True)
class FactorPattern:
    """Degrees of the irreducible factors, plus the evidence that fixed them.

    ``case`` is the Leonard-Williams case number (1-5). ``pattern`` is None
    only for configurations the classification does not list, in which case
    ``root_count`` comes from an exhaustive scan.
    """

    pattern: tuple[int, ...] | None
    root_count: int
    cubic_pattern: tuple[int, ...]
    case: int | None = None
    omega_traces: tuple[int, ...] = ()
    degenerate: bool = False

    @property
    def label(self) -> str | None:
        return None if self.pattern is None else "+".join(map(str, self.pattern))


def _pattern_from_roots(root_count: int) -> tuple[int, ...] | None:
    return {4: (1, 1, 1, 1), 2: (1, 1, 2), 1: (1, 3)}.get(root_count)


def quartic_classify(q: QuarticShape, fallback: bool = False) -> FactorPattern:
    """Factorisation pattern of an admissible quartic (a0*a1 != 0).

    With ``fallback=True`` inadmissible inputs are counted exhaustively and
    flagged ``degenerate`` instead of raising.
    """
    spec = q.spec
    if not q.admissible:
        if not fallback:
            raise UsageError("quartic classification needs a0*a1 != 0")
        count = count_roots_exhaustive(spec, q.coeffs())
        return FactorPattern(None, count, (), degenerate=True)

    roots = cubic_roots(q.a2, q.a1)
    distinct = sorted({r.value for r in roots})
    scale = q.a0 * (q.a1 * q.a1).inv()
    traces = tuple((scale * r * r).trace() for r in (FieldElement(v, spec) for v in distinct))

    if len(distinct) != len(roots):
        # unreachable for a1 != 0: a double root r has r^2 = a2, so G(r) = a1
        count = count_roots_exhaustive(spec, q.coeffs())
        return FactorPattern(_pattern_from_roots(count), count, (), omega_traces=traces, degenerate=True)

    if len(roots) == 3:
        ones = sum(traces)
        if ones == 0:
            return FactorPattern((1, 1, 1, 1), 4, (1, 1, 1), 1, traces)
        if ones == 2:
            return FactorPattern((2, 2), 0, (1, 1, 1), 2, traces)
        count = count_roots_exhaustive(spec, q.coeffs())
        log.warning("unlisted trace combination %s for split companion cubic; %d roots by scan", traces, count)
        return FactorPattern(None, count, (1, 1, 1), None, traces)
    if len(roots) == 1:
        if traces[0] == 0:
            return FactorPattern((1, 1, 2), 2, (1, 2), 4, traces)
        return FactorPattern((4,), 0, (1, 2), 5, traces)
    # irreducible companion cubic: exactly one root, the rest an irreducible cubic
    return FactorPattern((1, 3), 1, (3,), 3, traces)


def quartic_root_count(q: QuarticShape) -> int:
    return quartic_classify(q).root_count
