"""Deterministic random polynomial corpora for the verification drivers.

Two kinds are available:

* ``unit-box``: every coefficient with multi-index of total degree up to
  max_degree, real and imaginary parts uniform on [-1, 1).
* ``zero-free``: constant term 1, remaining coefficients damped and rescaled
  so that sum_{gamma != 0} |c_gamma| 2^{|gamma|} <= 0.8.  Such a polynomial
  has no zeros on the closed polydisc of radius 2, so |P|^p is smooth on the
  integration domain for every p > 0 and quadrature converges spectrally.
  This is the corpus to use when a check needs tight tolerances at
  non-even p.

Both kinds are pure functions of (count, nvars, max_degree, seed, kind): the
coefficients come from one labeled counter-based stream.
"""
from __future__ import annotations

import itertools

from .measures import unit_uniforms
from .poly import ComplexPolynomial

__all__ = ["multi_indices", "random_polynomials"]


def multi_indices(nvars: int, max_degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples with total degree <= max_degree, sorted."""
    out = [
        g
        for g in itertools.product(range(max_degree + 1), repeat=nvars)
        if sum(g) <= max_degree
    ]
    return sorted(out)


def random_polynomials(
    count: int,
    nvars: int,
    max_degree: int,
    seed: int,
    kind: str = "unit-box",
) -> list[ComplexPolynomial]:
    if count < 0:
        raise ValueError("count must be nonnegative")
    if nvars < 1 or max_degree < 0:
        raise ValueError("need nvars >= 1 and max_degree >= 0")
    if kind not in ("unit-box", "zero-free"):
        raise ValueError(f"unknown corpus kind {kind!r}")
    gammas = multi_indices(nvars, max_degree)
    label = f"corpus/{kind}/n{nvars}/d{max_degree}"
    draws = unit_uniforms(seed, label, 2 * count * len(gammas))
    polys = []
    pos = 0
    for _ in range(count):
        coeffs = {}
        for g in gammas:
            re = 2.0 * draws[pos] - 1.0
            im = 2.0 * draws[pos + 1] - 1.0
            pos += 2
            coeffs[g] = complex(re, im)
        if kind == "zero-free":
            zero = (0,) * nvars
            weighted = 0.0
            for g, c in coeffs.items():
                if g != zero:
                    coeffs[g] = c * 2.0 ** (-sum(g))
                    weighted += abs(coeffs[g]) * 2.0 ** sum(g)
            scale = 0.8 / weighted if weighted > 0.8 else 1.0
            for g in coeffs:
                coeffs[g] = coeffs[g] * scale if g != zero else 1.0 + 0j
        polys.append(ComplexPolynomial.from_terms(nvars, coeffs))
    return polys
