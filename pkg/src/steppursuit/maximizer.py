"""Best cell-aligned window of a sequence.

Over all contiguous windows of a length-N sequence, find the one maximising
|a_n + .. + a_{n+L-1}| / sqrt(L). This is the exact argmax of |<f, G>| over
the whole unmodulated dictionary restricted to (and in fact attained at)
windows that start and end on cell boundaries, which is what makes greedy
pursuit over step functions cheap: no continuous search is needed.

`best_window` is the production routine (prefix sums, O(N^2), vectorised per
length). `brute_force_best` recomputes every window sum independently with
compensated summation and exists only to cross-check it. `three_term_max`
evaluates a third formulation, a pointwise maximum of three window families
indexed by (n, k), that must agree with both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import as_values
from .dictionary import WaveformAtom

__all__ = [
    "WindowAtom",
    "ScoredAtom",
    "best_window",
    "best_window_single_signed",
    "brute_force_best",
    "three_term_max",
]


@dataclass(frozen=True)
class WindowAtom:
    """Cell-aligned window: cells start .. start + length - 1, 1-based."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("window start must be >= 1")
        if self.length < 1:
            raise ValueError("window length must be >= 1")

    def as_waveform(self) -> WaveformAtom:
        """The same window as a continuous atom: scale L, centre mid-window."""
        return WaveformAtom(float(self.length), 0.0, self.start + (self.length - 1) / 2.0)


@dataclass(frozen=True)
class ScoredAtom:
    """A window with its score |signed_sum| / sqrt(length)."""

    atom: WindowAtom
    value: float
    signed_sum: float


def _prefix(a: np.ndarray) -> np.ndarray:
    p = np.empty(a.size + 1)
    p[0] = 0.0
    np.cumsum(a, out=p[1:])
    return p


def best_window(seq) -> ScoredAtom:
    """Globally best window, ties broken toward smaller length then smaller start.

    One prefix-sum pass, then for each length L a vectorised scan of all
    N - L + 1 window sums. Lengths are visited in increasing order and only a
    strictly larger value displaces the incumbent, which realises the
    tie-break ordering.
    """
    a = as_values(seq)
    N = a.size
    p = _prefix(a)
    best_val = -1.0
    best_len = 0
    for L in range(1, N + 1):
        sums = p[L:] - p[: N - L + 1]
        mag = max(sums.max(), -sums.min())
        val = mag / math.sqrt(L)
        if val > best_val:
            best_val = val
            best_len = L
    sums = p[best_len:] - p[: N - best_len + 1]
    i = int(np.abs(sums).argmax())  # argmax returns the first index on ties
    signed = float(sums[i])
    return ScoredAtom(
        WindowAtom(i + 1, best_len), abs(signed) / math.sqrt(best_len), signed
    )


def best_window_single_signed(seq) -> ScoredAtom:
    """best_window for sequences with no sign change.

    When all values share a sign the window score over the full modulated
    dictionary is maximised at xi = 0 on a cell-aligned window, so the search
    below is exhaustive for that case. Mixed signs are rejected.
    """
    a = as_values(seq)
    if not (np.all(a >= 0.0) or np.all(a <= 0.0)):
        raise ValueError(
            "mixed-sign input: requires all values non-negative or all non-positive"
        )
    return best_window(a)


def brute_force_best(seq) -> ScoredAtom:
    """Reference implementation: every window summed from scratch with fsum.

    No prefix sums, so rounding errors do not correlate with best_window's.
    Quadratic in a stronger sense (O(N^3) additions); intended for N up to a
    few hundred.
    """
    a = as_values(seq)
    N = a.size
    vals = a.tolist()
    best_val = -1.0
    best = None
    for L in range(1, N + 1):
        root = math.sqrt(L)
        for n in range(1, N - L + 2):
            ssum = math.fsum(vals[n - 1 : n - 1 + L])
            v = abs(ssum) / root
            if v > best_val:
                best_val = v
                best = (n, L, ssum)
    n, L, ssum = best
    return ScoredAtom(WindowAtom(n, L), best_val, ssum)


def three_term_max(seq) -> float:
    """Max over n and k >= 0 of three window families:

        |a_n + .. + a_{n+k}|     / sqrt(k + 1)
        |a_n + .. + a_{n+k-1}|   / sqrt(k)          (k >= 1 only)
        |a_{n-1} + .. + a_{n+k-1}| / sqrt(k + 1)

    with 1 <= n <= N - k and out-of-range indices contributing zero terms.
    Every contiguous window appears in the first family, so this equals
    best_window(seq).value; the redundant families re-derive the same optimum
    from windows anchored one cell off.
    """
    a = as_values(seq)
    N = a.size
    p = _prefix(a)
    best = 0.0
    for k in range(N):
        n = np.arange(1, N - k + 1)
        r1 = np.abs(p[n + k] - p[n - 1]) / math.sqrt(k + 1)
        best = max(best, float(r1.max()))
        if k >= 1:
            r2 = np.abs(p[n + k - 1] - p[n - 1]) / math.sqrt(k)
            best = max(best, float(r2.max()))
        # third family: indices n-1 .. n+k-1, empty after clipping when
        # n == 1 and k == 0
        lo = np.maximum(n - 1, 1)
        hi = n + k - 1
        s3 = np.where(lo > hi, 0.0, p[hi] - p[lo - 1])
        r3 = np.abs(s3) / math.sqrt(k + 1)
        best = max(best, float(r3.max()))
    return best
