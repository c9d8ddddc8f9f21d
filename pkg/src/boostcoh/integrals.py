"""Momentum-moment integrals of the Wigner half-angle against |psi(p)|^2.

The three moments

    I1 = int |psi(p)|^2 cos^2(phi/2) dp
    I2 = int |psi(p)|^2 sin(phi/2) cos(phi/2) dp
    I3 = int |psi(p)|^2 sin^2(phi/2) dp

are evaluated two ways:

* exactly, by Gauss-Hermite quadrature in kappa = p/sigma, where the
  integrand is (kappa^2n e^{-kappa^2} / Gamma(n+1/2)) times a smooth
  bounded factor -- precisely the Gauss-Hermite weight;
* perturbatively, by the O((sigma/m)^2) closed forms: for integer n,
  I1 = 1 - F, I2 = 0, I3 = F with
  F = ((2n+1)/8) ((cosh a - 1)/(cosh a + 1)) (sigma/m)^2.

For a pair of boosted particles the same machinery yields the per-particle
moments (J_i, K_i, L_i); only the boost differs between the two particles,
so no separate entry points are needed.

The quadrature normalization 1/Gamma(n+1/2) is folded into the kappa-space
sum in log space, which keeps large n from overflowing sigma^(2n+1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .core import BoostParams, WavePacket, gamma_half_integer
from .wigner import _perp_components

__all__ = [
    "MomentIntegrals",
    "PerturbativeFactor",
    "QuadratureToleranceError",
    "gauss_hermite_nodes",
    "moments_quadrature",
    "f_factor",
    "moments_perturbative",
    "i2_parity_term",
    "i2_bracket_magnitude",
    "n_bounds",
]

MIN_ORDER = 2
MAX_ORDER = 256

Scenario = Literal["single_boost", "dual_boost"]


class QuadratureToleranceError(RuntimeError):
    """Adaptive quadrature hit the order cap before meeting the tolerance.

    Carries the best estimate and the last achieved delta so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, best: "MomentIntegrals", delta: float, rtol: float):
        self.best = best
        self.delta = delta
        self.rtol = rtol
        super().__init__(
            f"quadrature did not converge: delta {delta:.3e} > rtol {rtol:.3e}"
        )


@dataclass(frozen=True)
class MomentIntegrals:
    """The (I1, I2, I3) triple, tagged with how it was obtained."""

    i1: float
    i2: float
    i3: float
    method: Literal["quadrature", "perturbative"]

    def __post_init__(self) -> None:
        if self.method not in ("quadrature", "perturbative"):
            raise ValueError(f"unknown method {self.method!r}")
        if abs(self.i1 + self.i3 - 1.0) > 1e-10:
            raise ValueError(f"i1 + i3 = {self.i1 + self.i3}, expected 1 within 1e-10")
        if not -1e-12 <= self.i1 <= 1.0 + 1e-12 or not -1e-12 <= self.i3 <= 1.0 + 1e-12:
            raise ValueError("i1 and i3 must lie in [0, 1]")
        if abs(self.i2) > 0.5 + 1e-12:
            raise ValueError(f"|i2| must not exceed 1/2, got {self.i2}")


@dataclass(frozen=True)
class PerturbativeFactor:
    """The boost-induced mixing weight F (or F_i for one of two particles)."""

    f: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.f) or self.f < 0.0:
            raise ValueError(f"F must be finite and nonnegative, got {self.f}")


@lru_cache(maxsize=32)
def _gh_cached(order: int) -> tuple[np.ndarray, np.ndarray]:
    try:
        nodes, weights = np.polynomial.hermite.hermgauss(order)
    except np.linalg.LinAlgError as exc:  # tridiagonal eigen iteration failed
        raise RuntimeError(f"Gauss-Hermite construction failed at order {order}") from exc
    # Enforce exact +/- node pairing so odd integrands cancel bitwise.
    nodes = (nodes - nodes[::-1]) / 2.0
    weights = (weights + weights[::-1]) / 2.0
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_hermite_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for int f(k) e^{-k^2} dk =~ sum w_i f(k_i).

    Built from the symmetric-tridiagonal (Golub-Welsch) eigenvalue
    construction; sum of weights equals sqrt(pi).  Arrays are cached and
    read-only.
    """
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise ValueError(f"order must be an integer, got {order!r}")
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [{MIN_ORDER}, {MAX_ORDER}], got {order}")
    return _gh_cached(int(order))


def _symmetric_sum(terms: np.ndarray) -> float:
    # Summing t + reversed(t) first makes odd integrands vanish exactly.
    return float(np.sum(terms + terms[::-1]) / 2.0)


def _moments_at_order(pkt: WavePacket, boost: BoostParams, order: int):
    kappa, w = gauss_hermite_nodes(order)
    k2 = kappa * kappa
    if pkt.n == 0:
        poly = np.full_like(kappa, 1.0 / gamma_half_integer(0))
    else:
        # kappa^2n / Gamma(n + 1/2) in log space; exp(-inf) = 0 handles a
        # kappa = 0 node (odd orders) for n > 0.
        with np.errstate(divide="ignore"):
            poly = np.exp(pkt.n * np.log(k2) - math.lgamma(pkt.n + 0.5))
    base = w * poly
    cos2, sin2, sincos = _perp_components(
        boost.sinh_alpha, boost.cosh_alpha, pkt.sigma_over_m * kappa
    )
    return (
        _symmetric_sum(base * cos2),
        _symmetric_sum(base * sincos),
        _symmetric_sum(base * sin2),
    )


def moments_quadrature(
    pkt: WavePacket,
    boost: BoostParams,
    order: int = 16,
    *,
    rtol: float = 1e-12,
    max_order: int = MAX_ORDER,
    adaptive: bool = True,
) -> MomentIntegrals:
    """Evaluate (I1, I2, I3) on Gauss-Hermite nodes.

    Starting from ``order``, the order is doubled until two successive
    evaluations agree to ``rtol`` (relative, floored at 1 in the
    denominator) or ``max_order`` is exceeded, in which case
    :class:`QuadratureToleranceError` carries the best estimate.  With
    ``adaptive=False`` a single fixed-order evaluation is returned.
    """
    i1, i2, i3 = _moments_at_order(pkt, boost, order)
    if not adaptive:
        return MomentIntegrals(i1=i1, i2=i2, i3=i3, method="quadrature")

    max_order = min(max_order, MAX_ORDER)
    delta = math.inf
    while order * 2 <= max_order:
        order *= 2
        j1, j2, j3 = _moments_at_order(pkt, boost, order)
        delta = max(
            abs(j1 - i1) / max(1.0, abs(j1)),
            abs(j2 - i2) / max(1.0, abs(j2)),
            abs(j3 - i3) / max(1.0, abs(j3)),
        )
        i1, i2, i3 = j1, j2, j3
        if delta < rtol:
            return MomentIntegrals(i1=i1, i2=i2, i3=i3, method="quadrature")
    raise QuadratureToleranceError(
        best=MomentIntegrals(i1=i1, i2=i2, i3=i3, method="quadrature"),
        delta=delta,
        rtol=rtol,
    )


def f_factor(n: int, boost: BoostParams, sigma_over_m: float) -> PerturbativeFactor:
    """F = ((2n+1)/8) ((cosh a - 1)/(cosh a + 1)) (sigma/m)^2.

    Valid for integer n >= 0 in the narrow-packet regime sigma/m < 1.
    Emits a warning when F > 1, where the perturbative I1 = 1 - F would
    leave [0, 1] and the expansion has manifestly broken down.
    """
    _check_n(n)
    if not 0.0 < sigma_over_m < 1.0:
        raise ValueError(f"sigma/m must lie in (0, 1), got {sigma_over_m}")
    f = ((2 * n + 1) / 8.0) * _boost_ratio(boost) * sigma_over_m**2
    if f > 1.0:
        warnings.warn(
            f"F = {f:.4g} > 1: perturbative I1 = 1 - F leaves [0, 1]",
            stacklevel=2,
        )
    return PerturbativeFactor(f=f)


def moments_perturbative(n: int, boost: BoostParams, sigma_over_m: float) -> MomentIntegrals:
    """The integer-n closed forms (1 - F, 0, F)."""
    f = f_factor(n, boost, sigma_over_m).f
    return MomentIntegrals(i1=1.0 - f, i2=0.0, i3=f, method="perturbative")


def i2_parity_term(n: int, boost: BoostParams, sigma_over_m: float) -> float:
    """The closed-form I2, which vanishes for every integer n.

    The O(sigma/m) bracket it multiplies survives only for the half-odd
    parity factor (1 - (-1)^(2n))/2; see :func:`i2_bracket_magnitude` for
    the diagnostic magnitude.
    """
    _check_n(n)
    del boost, sigma_over_m
    return 0.0


def i2_bracket_magnitude(n: int, boost: BoostParams, sigma_over_m: float) -> float:
    """[Gamma(n+1)/Gamma(n+1/2)] sinh(a) / (2 (cosh(a) + 1)) (sigma/m).

    Diagnostic only: the parity prefactor kills this term for integer n.
    The Gamma ratio is built by recurrence to stay finite for large n.
    """
    _check_n(n)
    ratio = 1.0 / math.sqrt(math.pi)  # Gamma(1)/Gamma(1/2)
    for i in range(1, n + 1):
        ratio *= i / (i - 0.5)
    return ratio * boost.sinh_alpha / (2.0 * (boost.cosh_alpha + 1.0)) * sigma_over_m


def n_bounds(sigma_over_m: float, scenario: Scenario) -> tuple[float, float]:
    """Allowed range (lower, upper] of the generalization exponent n.

    The lower bound -1/2 is open; it keeps the maximal coherence at or
    below unity.  The upper bound keeps the limiting coherence nonnegative:
    3 (m/sigma)^2 - 1/2 with one boosted particle, half that budget per
    particle when both are boosted.
    """
    if not 0.0 < sigma_over_m < 1.0:
        raise ValueError(f"sigma/m must lie in (0, 1), got {sigma_over_m}")
    inv2 = (1.0 / sigma_over_m) ** 2
    if scenario == "single_boost":
        upper = 3.0 * inv2 - 0.5
    elif scenario == "dual_boost":
        upper = 1.5 * inv2 - 0.5
    else:
        raise ValueError(f"unknown scenario {scenario!r}")
    return (-0.5, upper)


def _boost_ratio(boost: BoostParams) -> float:
    return (boost.cosh_alpha - 1.0) / (boost.cosh_alpha + 1.0)


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
