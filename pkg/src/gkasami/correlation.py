"""Full periodic correlation distributions of a family, two ways.

The brute engine walks every ordered (i, j, shift) triple and computes the
inner product as period - 2 * popcount(s_i XOR rotate(s_j, shift)) on the
bit-packed sequences.  The spectral engine never touches sequence bits: the
correlation of two members at a given shift equals a Walsh-transform value
of one quadratic form (minus one), where the form's parameters are simple
shift-twisted combinations of the two tags.  For the part-one grid, which
covers all of E x F, a fixed shift makes the twisted parameters sweep the
whole grid bijectively, so whole blocks reduce to precomputed per-lambda
column histograms of the spectra cache; the small completion part is looked
up triple by triple.  Both engines produce identical exact histograms.

Histograms count all ordered triples including the in-phase ones; the
maximum-correlation statistic excludes i = j at shift 0 by removing one
period-value count per family member.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import theory
from .families import BinarySequence, FamilyKind, SequenceFamily
from .histogram import ValueHistogram
from .quadform import SpectraCache

BRUTE_DEFAULT_MAX_N = 6


class LengthMismatch(ValueError):
    """Raised when correlating sequences of different periods."""


def rotate(bits: int, tau: int, length: int) -> int:
    """Cyclic left rotation: bit t of the result is bit (t + tau) of the input."""
    tau %= length
    mask = (1 << length) - 1
    return ((bits >> tau) | (bits << (length - tau))) & mask


def correlate(s1: BinarySequence, s2: BinarySequence, tau: int) -> int:
    """sum_t (-1)^(s1(t) + s2(t + tau)), exact."""
    if s1.length != s2.length:
        raise LengthMismatch(f"{s1.length} != {s2.length}")
    if not 0 <= tau < s1.length:
        raise ValueError(f"tau = {tau} out of range")
    return s1.length - 2 * (s1.bits ^ rotate(s2.bits, tau, s2.length)).bit_count()


@dataclass
class CorrelationReport:
    n: int
    k: int
    kind: FamilyKind
    engine: str
    family_size: int
    period: int
    histogram: ValueHistogram
    r_max: int

    def to_json_dict(self, predicted: ValueHistogram | None = None) -> dict:
        match = None
        if predicted is not None:
            match = self.histogram == predicted
        return {
            "n": self.n,
            "k": self.k,
            "kind": self.kind.value,
            "engine": self.engine,
            "family_size": self.family_size,
            "period": self.period,
            "histogram": self.histogram.to_json_dict()["entries"],
            "r_max": self.r_max,
            "predicted": None if predicted is None else predicted.to_json_dict()["entries"],
            "match": match,
        }


def r_max(report: CorrelationReport) -> int:
    """Largest |value| over all triples except the in-phase autocorrelations."""
    return _r_max_from_histogram(report.histogram, report.period, report.family_size)


def _r_max_from_histogram(hist: ValueHistogram, period: int, size: int) -> int:
    rest = dict(hist.counts)
    inphase = rest.get(period, 0)
    if inphase < size:
        raise ValueError("histogram lacks the in-phase autocorrelation counts")
    if inphase == size:
        rest.pop(period)
    else:
        rest[period] = inphase - size
    return ValueHistogram(rest).max_abs_value()


def _report(family: SequenceFamily, engine: str, hist: ValueHistogram) -> CorrelationReport:
    period = family.period
    if hist.total() != family.size**2 * period:
        raise AssertionError("histogram does not cover all ordered triples")
    return CorrelationReport(
        n=family.params.ctx.n,
        k=family.params.k,
        kind=family.params.kind,
        engine=engine,
        family_size=family.size,
        period=period,
        histogram=hist,
        r_max=_r_max_from_histogram(hist, period, family.size),
    )


# -- brute engine --------------------------------------------------------


def _weight_counts_block(seq_bits: list[int], rot_flat: list[int], lo: int, hi: int) -> Counter:
    counts: Counter = Counter()
    for i in range(lo, hi):
        a = seq_bits[i]
        counts.update((a ^ r).bit_count() for r in rot_flat)
    return counts


def full_distribution_brute(family: SequenceFamily, jobs: int = 1) -> CorrelationReport:
    """Histogram over all ordered triples by direct bit-packed inner products."""
    period = family.period
    seqs = family.all_sequences()
    seq_bits = [s.bits for s in seqs]
    rot_flat = [rotate(b, tau, period) for b in seq_bits for tau in range(period)]
    m = len(seq_bits)
    if jobs > 1 and m > 1:
        bounds = np.linspace(0, m, min(jobs, m) + 1).astype(int)
        weight_counts: Counter = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_weight_counts_block, seq_bits, rot_flat, int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:])
                if hi > lo
            ]
            for fut in futures:
                weight_counts.update(fut.result())
    else:
        weight_counts = _weight_counts_block(seq_bits, rot_flat, 0, m)
    hist = ValueHistogram({period - 2 * w: c for w, c in weight_counts.items()})
    return _report(family, "brute", hist)


# -- spectral engine -------------------------------------------------------


def full_distribution_spectral(family: SequenceFamily) -> CorrelationReport:
    """Histogram via the shift-to-transform parameter map and cached spectra."""
    params = family.params
    ctx, k = params.ctx, params.k
    order, group = ctx.order, ctx.group_order
    cache = SpectraCache(ctx, k)
    e1 = (1 << k) + 1
    e2 = (1 << ctx.half) + 1
    taus = np.arange(group, dtype=np.int64)
    twist_q = ctx.antilog[(e1 * taus) % group]  # alpha^(tau * (2^k + 1))
    twist_n = ctx.antilog[(e2 * taus) % group]  # beta^tau
    walsh: Counter = Counter()

    if params.kind == FamilyKind.SMALL_KASAMI:
        # part one is the gamma = 0 slice; look triples up directly
        deltas = np.array([s.tag.delta for s in family.part1], dtype=np.int64)
        cidx = ctx.subfield_index
        zero_plane = cache.values[0]  # (|F|, 2^n)
        for tau in range(group):
            a1 = 1 ^ int(ctx.antilog[tau])
            c1 = deltas[:, None] ^ ctx.scale_vec(int(twist_n[tau]), deltas)[None, :]
            vals, cnts = np.unique(zero_plane[cidx[c1], a1], return_counts=True)
            for v, c in zip(vals, cnts):
                walsh[int(v)] += int(c)
    else:
        # part one covers all of E x F: for a fixed shift the twisted tag
        # combinations sweep the grid bijectively, once per opposing tag,
        # so each block is a multiple of a per-lambda column histogram.
        grid = 1 << (3 * ctx.half)
        m2 = len(family.part2)
        col = cache.column_histogram
        for tau in range(group):
            a1 = 1 ^ int(ctx.antilog[tau])  # in-phase tau = 0 gives a1 = 0
            for v, c in col(a1).items():
                walsh[v] += c * grid
        h1 = col(1)
        for v, c in h1.items():
            walsh[v] += c * m2 * group
        for tau in range(group):
            a3 = int(ctx.antilog[tau])
            for v, c in col(a3).items():
                walsh[v] += c * m2
        # completion-vs-completion block stays a direct lookup
        tags2 = [s.tag for s in family.part2]
        cidx = ctx.subfield_index
        lam0 = cache.values[:, :, 0]
        for t1 in tags2:
            for t2 in tags2:
                b4 = t1.zeta ^ ctx.scale_vec(t2.zeta, twist_q)
                c4 = t1.eta ^ ctx.scale_vec(t2.eta, twist_n)
                vals, cnts = np.unique(lam0[b4, cidx[c4]], return_counts=True)
                for v, c in zip(vals, cnts):
                    walsh[int(v)] += int(c)

    hist = ValueHistogram({v - 1: c for v, c in walsh.items()})
    return _report(family, "spectral", hist)


def predicted_histogram(family: SequenceFamily) -> ValueHistogram:
    """The exact closed-form histogram this family must produce."""
    n = family.params.ctx.n
    if family.params.kind == FamilyKind.SMALL_KASAMI:
        return theory.small_kasami_correlation(n)
    return theory.family_correlation_histogram(n)
