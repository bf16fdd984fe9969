"""Rectangular-window waveform atoms and their inner products with step functions.

An atom with scale t > 0, frequency xi and centre u is

    G(x) = (1 / sqrt t) rect((x - u) / t) exp(2 pi i xi x),

a unit-norm window of width t. Because step functions are constant on unit
cells, <f, G> reduces to a finite sum of closed-form integrals: one per cell
that overlaps the window. The helpers here expose those pieces individually
(the per-cell integral, the short-window two-cell case, the partial-coverage
window profile and the alternating two-cell case) because the maximizer and
the verification sweeps each lean on a different one.

All inner products are taken against the conjugate of G, so the xi-dependent
phase enters as exp(-2 pi i xi x); moduli are unaffected.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import StepFunction, as_values

__all__ = [
    "WaveformAtom",
    "atom_value",
    "overlap_interval",
    "cell_overlap_integral",
    "inner_product",
    "two_cell_modulus",
    "partial_window_modulus",
    "alternating_pair_modulus",
]


@dataclass(frozen=True)
class WaveformAtom:
    """Window parameters (scale, frequency, centre). Scale must be positive."""

    t: float
    xi: float
    u: float

    def __post_init__(self):
        for name in ("t", "xi", "u"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise ValueError(f"non-finite atom parameter {name}")
        if self.t <= 0:
            raise ValueError("atom scale t must be positive")

    @property
    def window(self) -> tuple[float, float]:
        half = self.t / 2.0
        return (self.u - half, self.u + half)


def atom_value(atom: WaveformAtom, x: float) -> complex:
    """G(x) itself. Used by the quadrature cross-checks in the test suite."""
    lo, hi = atom.window
    if x < lo or x > hi:
        return 0.0
    return cmath.exp(2j * math.pi * atom.xi * x) / math.sqrt(atom.t)


def overlap_interval(j: int, atom: WaveformAtom):
    """Intersection of cell j with the atom window, or None when disjoint.

    Touching at a single point counts as empty: the integral over it is zero
    either way, and callers can then assume lo < hi.
    """
    lo = max(j - 0.5, atom.window[0])
    hi = min(j + 0.5, atom.window[1])
    if hi <= lo:
        return None
    return (lo, hi)


def _segment_integral(lo: float, hi: float, xi: float) -> complex:
    # integral of exp(-2 pi i xi x) over [lo, hi], written as a phase times a
    # sinc so that nothing cancels as xi -> 0 or as hi -> lo
    if hi <= lo:
        return 0.0
    if xi == 0.0:
        return hi - lo
    g = math.pi * xi
    return cmath.exp(-1j * g * (lo + hi)) * (math.sin(g * (hi - lo)) / g)


def cell_overlap_integral(j: int, atom: WaveformAtom) -> complex:
    """Integral of the conjugated oscillation over cell j's overlap with the window.

    This is the weight multiplying a_j in <f, G> before the 1/sqrt(t)
    normalisation. Zero when the cell misses the window entirely.
    """
    seg = overlap_interval(j, atom)
    if seg is None:
        return 0.0
    return _segment_integral(seg[0], seg[1], atom.xi)


def inner_product(f: StepFunction, atom: WaveformAtom) -> complex:
    """<f, G> = (1 / sqrt t) sum_j a_j * cell_overlap_integral(j)."""
    a = f.coefficients
    wlo, whi = atom.window
    first = max(f.origin, math.ceil(wlo - 0.5))
    last = min(f.origin + a.size - 1, math.floor(whi + 0.5))
    acc = 0.0 + 0.0j
    for j in range(first, last + 1):
        c = a[j - f.origin]
        if c != 0.0:
            acc += c * cell_overlap_integral(j, atom)
    return acc / math.sqrt(atom.t)


def two_cell_modulus(xi: float, s: float, t: float, left: float, right: float) -> float:
    """|<f, G>| for a window of scale t <= 1 straddling one cell boundary.

    The window covers the last s units of the cell holding `left` and the
    first t - s units of the cell holding `right`. Requires 0 <= s <= t <= 1
    with t > 0; windows this short never meet a third cell.
    """
    if not (0.0 <= s <= t <= 1.0) or t == 0.0:
        raise ValueError("outside the short-window region 0 <= s <= t <= 1")
    if xi == 0.0:
        return abs(left * s + right * (t - s)) / math.sqrt(t)
    g = math.pi * xi
    z = left * (math.sin(g * s) / g) + right * cmath.exp(-1j * g * t) * (
        math.sin(g * (t - s)) / g
    )
    return abs(z) / math.sqrt(t)


def partial_window_modulus(s: float, t: float, n: int, k: int, seq) -> float:
    """Unmodulated window profile at scale t, k <= t <= k + 1, anchored at cell n.

    The window covers the last s units of cell n - 1, all of cells
    n .. n + k - 1, and the first t - s - k units of cell n + k, so

        psi(s, t) = |a_{n-1} s + (a_n + .. + a_{n+k-1}) + a_{n+k} (t - s - k)| / sqrt t.

    The admissible region is the closed triangle 0 <= s <= t - k,
    k <= t <= k + 1 (t > 0). Indices falling outside the sequence contribute 0.
    """
    a = as_values(seq)
    n = int(n)
    k = int(k)
    if k < 0:
        raise ValueError("negative cell count k")
    if t <= 0.0 or not (k <= t <= k + 1):
        raise ValueError("scale t outside [k, k + 1]")
    if not (0.0 <= s <= t - k):
        raise ValueError("offset s outside [0, t - k]")
    N = a.size

    def cell(j: int) -> float:
        return float(a[j - 1]) if 1 <= j <= N else 0.0

    lo = max(n, 1)
    hi = min(n + k - 1, N)
    middle = float(a[lo - 1 : hi].sum()) if lo <= hi else 0.0
    total = cell(n - 1) * s + middle + cell(n + k) * (t - s - k)
    return abs(total) / math.sqrt(t)


def alternating_pair_modulus(a: float, t: float, delta: float, xi: float) -> float:
    """|<f, G>| for the two-cell sign flip f = -a on [1/2, 3/2], +a on [3/2, 5/2].

    The window is [u - t/2, u + t/2] with u = 1 + delta, so delta measures the
    centre's offset from the left cell's midpoint. Valid while the window
    still meets the support, i.e. |delta| <= (t + 1) / 2. Exact for every
    scale t > 0: each cell contributes a sinc-type term, combined with the
    phase between the two overlap midpoints.
    """
    t = float(t)
    delta = float(delta)
    if not (math.isfinite(a) and math.isfinite(t) and math.isfinite(delta) and math.isfinite(xi)):
        raise ValueError("non-finite input")
    if t <= 0.0:
        raise ValueError("scale t must be positive")
    if abs(delta) > (t + 1.0) / 2.0:
        raise ValueError("window offset outside the covered range")
    wlo = 1.0 + delta - t / 2.0
    whi = 1.0 + delta + t / 2.0
    # per-cell overlap widths and midpoints; cells are [0.5, 1.5] and [1.5, 2.5]
    lo1, hi1 = max(wlo, 0.5), min(whi, 1.5)
    lo2, hi2 = max(wlo, 1.5), min(whi, 2.5)
    w1 = max(hi1 - lo1, 0.0)
    w2 = max(hi2 - lo2, 0.0)
    if xi == 0.0:
        return abs(a) * abs(w2 - w1) / math.sqrt(t)
    g = math.pi * xi
    s1 = math.sin(g * w1) / g
    s2 = math.sin(g * w2) / g
    gap = (lo2 + hi2 - lo1 - hi1) / 2.0  # distance between overlap midpoints
    mod2 = s1 * s1 + s2 * s2 - 2.0 * s1 * s2 * math.cos(2.0 * g * gap)
    return abs(a) * math.sqrt(max(mod2, 0.0)) / math.sqrt(t)
