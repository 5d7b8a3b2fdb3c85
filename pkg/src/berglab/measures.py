"""Quadrature rules and samplers for the weighted disk measure.

The measure on the unit disk is dA_alpha(z) = (alpha-1)(1-|z|^2)^(alpha-2) dA(z)
with dA normalized area; it is a probability measure for alpha > 1.  In the
radial-squared coordinate t = |z|^2 the density is (alpha-1)(1-t)^(alpha-2) on
[0, 1], so the radial factor is a Gauss-Jacobi rule (weight exponent alpha-2
at the right endpoint, 0 at the left) mapped to [0, 1] and normalized to total
mass one.  The angular factor is the M-point equispaced rule on the circle.

Monte Carlo sampling uses the counter-based Philox generator so that a sample
is a pure function of (seed, stream_id, index): results do not depend on chunk
sizes or thread schedules.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

__all__ = [
    "ALPHA_MIN",
    "DiskRule",
    "PolydiscRule",
    "McSampler",
    "radial_rule",
    "circle_rule",
    "disk_rule",
    "polydisc_rule",
    "disk_integral",
    "angular_count_for",
    "stream_for",
]

# API boundary for the weight parameter; the measure degenerates as alpha -> 1.
ALPHA_MIN = 1.0 + 1e-6

_MASK64 = 0xFFFFFFFFFFFFFFFF


def check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not (a >= ALPHA_MIN):
        raise ValueError(f"alpha must be >= {ALPHA_MIN}, got {alpha}")
    return a


def radial_rule(alpha: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss rule for the density (alpha-1)(1-t)^(alpha-2) dt on [0, 1].

    Returns (t_nodes, weights) with weights summing to 1; exact for
    polynomials in t of degree <= 2*nodes - 1.
    """
    a = check_alpha(alpha)
    if nodes < 1:
        raise ValueError("nodes must be >= 1")
    x, w = roots_jacobi(nodes, a - 2.0, 0.0)
    t = 0.5 * (x + 1.0)
    weights = (a - 1.0) * 2.0 ** (1.0 - a) * w
    return t, weights


def circle_rule(count: int) -> tuple[np.ndarray, float]:
    """Equispaced angles on [0, 2 pi) with uniform weight 1/count."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return 2.0 * np.pi * np.arange(count) / count, 1.0 / count


def angular_count_for(degree: int, p: float, floor: int = 257) -> int:
    """Default angular point count; alias-free for integer p/2 powers."""
    return max(floor, 4 * degree * math.ceil(max(p, 2.0) / 2.0) + 1)


@dataclass(frozen=True, eq=False)
class DiskRule:
    """Tensor radial x angular rule for one disk factor."""

    alpha: float
    radial_nodes: np.ndarray   # squared radii, strictly inside (0, 1)
    radial_weights: np.ndarray
    angular_count: int

    def __post_init__(self) -> None:
        t, w = self.radial_nodes, self.radial_weights
        if len(t) != len(w) or len(t) == 0:
            raise ValueError("node/weight length mismatch")
        if not (np.all(t > 0.0) and np.all(t < 1.0)):
            raise ValueError("radial nodes must lie strictly inside (0, 1)")
        if not np.all(w > 0.0):
            raise ValueError("radial weights must be positive")
        if abs(w.sum() - 1.0) > 1e-13:
            raise ValueError(f"radial weights sum to {w.sum()!r}, expected 1")
        if self.angular_count < 1:
            raise ValueError("angular_count must be >= 1")

    @property
    def node_count(self) -> int:
        return len(self.radial_nodes)

    def points(self) -> np.ndarray:
        """Complex grid of shape (radial, angular)."""
        theta, _ = circle_rule(self.angular_count)
        return np.sqrt(self.radial_nodes)[:, None] * np.exp(1j * theta)[None, :]


@dataclass(frozen=True, eq=False)
class PolydiscRule:
    """Product of per-variable disk rules (same alpha in every factor)."""

    factors: tuple[DiskRule, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("at least one factor required")
        alphas = {r.alpha for r in self.factors}
        if len(alphas) != 1:
            raise ValueError("mixed alpha across factors")

    @property
    def nvars(self) -> int:
        return len(self.factors)

    @property
    def alpha(self) -> float:
        return self.factors[0].alpha


def disk_rule(
    alpha: float,
    nodes: int = 64,
    angles: int | None = None,
    degree: int = 0,
    p: float = 2.0,
) -> DiskRule:
    """Build a disk rule; angular count defaults to angular_count_for."""
    t, w = radial_rule(alpha, nodes)
    m = angles if angles is not None else angular_count_for(degree, p)
    return DiskRule(float(alpha), t, w, int(m))


def polydisc_rule(
    alpha: float, nvars: int, nodes: int = 64, angles: int | tuple[int, ...] = 257
) -> PolydiscRule:
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    if isinstance(angles, int):
        angles = (angles,) * nvars
    if len(angles) != nvars:
        raise ValueError("angles length mismatch")
    t, w = radial_rule(alpha, nodes)
    return PolydiscRule(
        tuple(DiskRule(float(alpha), t, w, int(m)) for m in angles)
    )


def disk_integral(integrand, rule: DiskRule) -> float:
    """Integrate a pointwise function of z over dA_alpha with the given rule.

    The integrand must accept a complex ndarray and return real values.
    """
    z = rule.points()
    vals = np.asarray(integrand(z), dtype=float)
    if vals.shape != z.shape:
        raise ValueError("integrand must evaluate elementwise")
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite integrand value at a quadrature node")
    return float(rule.radial_weights @ vals.mean(axis=1))


# ----------------------------------------------------------------- sampling


def stream_for(label: str) -> int:
    """Stable 64-bit stream id from a text label."""
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


@dataclass(frozen=True)
class McSampler:
    """Deterministic sampler for the product measure dA_alpha on D^nvars.

    Each sample point is a pure function of (seed, stream_id, index).  The
    radial-squared coordinate uses the inverse CDF t = 1 - (1-u)^(1/(alpha-1));
    the angle is uniform.
    """

    alpha: float
    nvars: int
    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        check_alpha(self.alpha)
        if self.nvars < 1:
            raise ValueError("nvars must be >= 1")

    def _words_per_sample(self) -> int:
        need = 2 * self.nvars
        return -(-need // 4) * 4  # padded to the Philox counter granularity

    def sample_block(self, start: int, count: int) -> np.ndarray:
        """Samples with indices start .. start+count-1, shape (count, nvars)."""
        if start < 0 or count < 0:
            raise ValueError("start and count must be nonnegative")
        if count == 0:
            return np.empty((0, self.nvars), dtype=complex)
        wps = self._words_per_sample()
        key = np.array([(self.seed ^ self.stream_id) & _MASK64, 0], dtype=np.uint64)
        gen = np.random.Philox(counter=start * (wps // 4), key=key)
        raw = gen.random_raw(count * wps).reshape(count, wps)
        unit = (raw >> np.uint64(11)) * 2.0 ** -53
        theta = 2.0 * np.pi * unit[:, 0 : 2 * self.nvars : 2]
        u = unit[:, 1 : 2 * self.nvars : 2]
        t = 1.0 - np.power(1.0 - u, 1.0 / (self.alpha - 1.0))
        return np.sqrt(t) * np.exp(1j * theta)

    def sample_point(self, index: int) -> np.ndarray:
        return self.sample_block(index, 1)[0]


def unit_uniforms(seed: int, label: str, count: int) -> np.ndarray:
    """count uniforms in [0, 1) from the labeled Philox stream."""
    key = np.array([(seed ^ stream_for(label)) & _MASK64, 0], dtype=np.uint64)
    gen = np.random.Philox(counter=0, key=key)
    return (gen.random_raw(count) >> np.uint64(11)) * 2.0 ** -53
