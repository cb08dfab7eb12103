"""Generic f-divergence engine.

Any convex normalized generator with derivatives through order three drives
one trusted code path: the divergence itself, the first-derivative bound
functionals, the ratio-interval bounds A and B, and the third-derivative
gap bounds.  Every closed form elsewhere in the package can be cross-checked
against this engine.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from math import fsum
from typing import Callable

from .divergences import chi_squared, vajda_abs_chi
from .simplex import DistributionPair, RatioBounds

#: Points where convexity of a new generator is probed at construction.
CONVEXITY_PROBES = (0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0)

NORMALIZATION_TOL = 1e-12

#: Grid sizes for the third-derivative sign scan and supremum search.
SIGN_GRID = 33
SUP_GRID = 1025

#: |f'''| below this counts as zero in the sign scan.
D3_ZERO_TOL = 1e-14

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class GeneratorNotNormalized(ValueError):
    """f(1) differs from zero beyond tolerance."""


class GeneratorNotConvex(ValueError):
    """f'' is negative at a probe point."""


class DegenerateInterval(ValueError):
    """Ratio interval has r = R."""


class IntervalNotStraddlingOne(ValueError):
    """Ratio interval does not satisfy r < 1 < R."""


class NonMonotoneSecondDerivative(ValueError):
    """f''' changes sign on the ratio interval."""


@dataclass(frozen=True)
class GeneratorFunction:
    """A convex normalized generator f with derivatives through order 3.

    Derivatives are analytic maps supplied by the caller, not numeric
    differentiation: the bound formulas amplify derivative error.
    Normalization f(1) = 0 and convexity at the probe grid are checked at
    construction.
    """

    fn: Callable[[float], float]
    d1: Callable[[float], float]
    d2: Callable[[float], float]
    d3: Callable[[float], float]
    label: str

    def __post_init__(self) -> None:
        at_one = self.fn(1.0)
        if abs(at_one) > NORMALIZATION_TOL:
            raise GeneratorNotNormalized(
                f"{self.label}: f(1) = {at_one!r}, must vanish")
        for x in CONVEXITY_PROBES:
            if self.d2(x) < 0.0:
                raise GeneratorNotConvex(
                    f"{self.label}: f''({x}) = {self.d2(x)!r} < 0")


class GapTarget(enum.Enum):
    """Which first-derivative functional the gap bound is measured against."""

    HALF_E = "half_e"
    E_STAR = "e_star"


@dataclass(frozen=True)
class GapBounds:
    """Bundle of third-derivative gap bounds for one target.

    ``candidates`` are the three data-dependent bound terms (curvature
    term, third-derivative term, first-derivative term); ``cap_candidates``
    replace the data factors by their ratio-interval caps.  ``observed`` is
    the actual gap, which must not exceed ``minimum``.
    """

    target: GapTarget
    observed: float
    candidates: tuple[float, float, float]
    minimum: float
    cap_candidates: tuple[float, float, float]
    cap_minimum: float
    curvature_sign: int


def csiszar_divergence(pair: DistributionPair, gen: GeneratorFunction) -> float:
    """sum of q f(p/q); nonnegative for convex normalized f."""
    return fsum(q * gen.fn(p / q)
                for p, q in zip(pair.p.values, pair.q.values) if p != q)


def dragomir_e(pair: DistributionPair, gen: GeneratorFunction) -> float:
    """First-derivative upper functional: sum of (p - q) f'(p/q)."""
    return fsum((p - q) * gen.d1(p / q)
                for p, q in zip(pair.p.values, pair.q.values) if p != q)


def dragomir_e_star(pair: DistributionPair, gen: GeneratorFunction) -> float:
    """Midpoint-argument variant: sum of (p - q) f'((p + q)/(2q))."""
    return fsum((p - q) * gen.d1((p + q) / (2.0 * q))
                for p, q in zip(pair.p.values, pair.q.values) if p != q)


def bound_a(rb: RatioBounds, gen: GeneratorFunction) -> float:
    """Ratio-interval bound (R - r)(f'(R) - f'(r))/4, requires r < R."""
    if rb.r == rb.R:
        raise DegenerateInterval("bound requires r < R")
    return 0.25 * (rb.R - rb.r) * (gen.d1(rb.R) - gen.d1(rb.r))


def bound_b(rb: RatioBounds, gen: GeneratorFunction) -> float:
    """Chord bound ((R-1) f(r) + (1-r) f(R))/(R - r), requires r < 1 < R."""
    if not (rb.r < 1.0 < rb.R):
        raise IntervalNotStraddlingOne(
            f"bound requires r < 1 < R, got ({rb.r!r}, {rb.R!r})")
    return ((rb.R - 1.0) * gen.fn(rb.r)
            + (1.0 - rb.r) * gen.fn(rb.R)) / (rb.R - rb.r)


def _curvature_trend(gen: GeneratorFunction, r: float, R: float) -> int:
    """Sign of f''' sampled on [r, R]: -1 for decreasing f'', +1 for
    increasing.  Raises if the sampled sign is not uniform."""
    saw_pos = saw_neg = False
    step = (R - r) / (SIGN_GRID - 1)
    for i in range(SIGN_GRID):
        v = gen.d3(r + i * step)
        if abs(v) < D3_ZERO_TOL:
            continue
        if v > 0.0:
            saw_pos = True
        else:
            saw_neg = True
    if saw_pos and saw_neg:
        raise NonMonotoneSecondDerivative(
            f"{gen.label}: f''' changes sign on [{r}, {R}]")
    return -1 if saw_neg else 1


def _golden_max(g: Callable[[float], float], lo: float, hi: float) -> float:
    """Golden-section maximization of g on [lo, hi]."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    g1, g2 = g(x1), g(x2)
    for _ in range(80):
        if hi - lo <= 1e-13 * max(1.0, abs(lo), abs(hi)):
            break
        if g1 < g2:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + _GOLDEN * (hi - lo)
            g2 = g(x2)
        else:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - _GOLDEN * (hi - lo)
            g1 = g(x1)
    return max(g1, g2, g(lo), g(hi))


def d3_sup(gen: GeneratorFunction, rb: RatioBounds) -> float:
    """Supremum of |f'''| over [r, R]: dense grid plus golden-section
    refinement of the best cell."""
    r, R = rb.r, rb.R
    if r == R:
        return abs(gen.d3(r))
    step = (R - r) / (SUP_GRID - 1)
    best_val = -1.0
    best_i = 0
    for i in range(SUP_GRID):
        v = abs(gen.d3(r + i * step))
        if v > best_val:
            best_val, best_i = v, i
    lo = r + max(best_i - 1, 0) * step
    hi = r + min(best_i + 1, SUP_GRID - 1) * step
    refined = _golden_max(lambda x: abs(gen.d3(x)), lo, hi)
    return max(best_val, refined)


def theorem33_bounds(pair: DistributionPair, rb: RatioBounds,
                     gen: GeneratorFunction, target: GapTarget) -> GapBounds:
    """Third-derivative bounds on the gap between the divergence and its
    first-derivative functional (half of E, or the midpoint variant E*).

    Requires r < 1 < R and a monotone second derivative (checked by sign
    sampling of f'''; bounded variation and essential boundedness of f'''
    remain the caller's responsibility).  Returns the three data-dependent
    bound candidates, their minimum, and the ratio-interval-only caps.
    """
    target = GapTarget(target)
    r, R = rb.r, rb.R
    if not (r < 1.0 < R):
        raise IntervalNotStraddlingOne(
            f"gap bounds require r < 1 < R, got ({r!r}, {R!r})")
    k = _curvature_trend(gen, r, R)
    sup3 = d3_sup(gen, rb)
    chi2 = chi_squared(pair)
    abs_chi3 = vajda_abs_chi(pair, 3.0)
    variation = vajda_abs_chi(pair, 1.0)
    div = csiszar_divergence(pair, gen)
    if target is GapTarget.HALF_E:
        observed = abs(div - 0.5 * dragomir_e(pair, gen))
        third_factor, first_factor = 1.0 / 12.0, 1.0
    else:
        observed = abs(div - dragomir_e_star(pair, gen))
        third_factor, first_factor = 1.0 / 24.0, 0.5
    curvature = k * (gen.d2(R) - gen.d2(r))
    d1_spread = gen.d1(R) - gen.d1(r)
    candidates = (
        curvature * chi2 / 8.0,
        third_factor * sup3 * abs_chi3,
        first_factor * d1_spread * variation,
    )
    width = R - r
    caps = (
        curvature * (width * width / 4.0) / 8.0,
        third_factor * sup3 * (width ** 3 / 8.0),
        first_factor * d1_spread * (width / 2.0),
    )
    return GapBounds(target, observed, candidates, min(candidates),
                     caps, min(caps), k)


def kl_generator() -> GeneratorFunction:
    """x ln x, generating the Kullback-Leibler relative information."""
    return GeneratorFunction(
        fn=lambda x: x * math.log(x),
        d1=lambda x: math.log(x) + 1.0,
        d2=lambda x: 1.0 / x,
        d3=lambda x: -1.0 / (x * x),
        label="kl",
    )


def reverse_kl_generator() -> GeneratorFunction:
    """-ln x, generating the reversed relative information."""
    return GeneratorFunction(
        fn=lambda x: -math.log(x),
        d1=lambda x: -1.0 / x,
        d2=lambda x: 1.0 / (x * x),
        d3=lambda x: -2.0 / (x * x * x),
        label="reverse_kl",
    )


def pearson_chi2_generator() -> GeneratorFunction:
    """(x - 1)^2, generating the Pearson chi-square divergence."""
    return GeneratorFunction(
        fn=lambda x: (x - 1.0) * (x - 1.0),
        d1=lambda x: 2.0 * (x - 1.0),
        d2=lambda x: 2.0,
        d3=lambda x: 0.0,
        label="pearson_chi2",
    )


def hellinger_generator() -> GeneratorFunction:
    """(sqrt(x) - 1)^2 / 2, generating the Hellinger discrimination."""
    return GeneratorFunction(
        fn=lambda x: 0.5 * (math.sqrt(x) - 1.0) ** 2,
        d1=lambda x: 0.5 * (1.0 - 1.0 / math.sqrt(x)),
        d2=lambda x: 0.25 * x ** -1.5,
        d3=lambda x: -0.375 * x ** -2.5,
        label="hellinger",
    )


def builtin_generators(
    s_values: tuple[float, ...] = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0),
) -> dict[str, GeneratorFunction]:
    """Registry of the stock generators plus the unified AG/JS family at
    the given parameter values, keyed by label."""
    from .type_s import generator as ag_js_generator

    gens = [kl_generator(), reverse_kl_generator(), pearson_chi2_generator(),
            hellinger_generator()]
    gens.extend(ag_js_generator(s) for s in s_values)
    return {g.label: g for g in gens}
