"""Quadratic forms tr(b*x^(2^k+1)) + tr_half(c*x^(2^{n/2}+1)) on GF(2^n).

Evaluates the forms, computes their symplectic ranks and exact Walsh
(trace-transform) spectra, and tabulates spectrum-value distributions over
parameter sets.  The fast transform works on the plain +-1 truth table with
a Hadamard butterfly and then reindexes through the dual-basis permutation
stored on the field context, so spectra are always indexed directly by
lambda as a field element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf2n import FieldCtx, TooLarge, gf2_kernel_basis
from .histogram import ValueHistogram

# full-grid spectra caches are capped at n = 10 (~134 MB of int32)
SPECTRA_CACHE_MAX_N = 10
_BLOCK_BYTES_CAP = 2 << 30


class InvalidK(ValueError):
    """Raised when k is incompatible with n (need gcd(n/2 - k, n) = 1)."""


class ZeroForm(ValueError):
    """Raised when an operation needs a nonzero quadratic form but b = c = 0."""


def valid_k(n: int, k: int) -> bool:
    """True iff the exponent parameter k is admissible for degree n.

    Equivalent conditions: gcd(n/2 - k, n) = 1, or gcd(k, n) = 2 for n/2 odd
    and gcd(k, n) = 1 for n/2 even.  k = n/2 is never admissible.
    """
    if not 1 <= k <= n - 1:
        return False
    return math.gcd(n // 2 - k, n) == 1


def require_valid_k(n: int, k: int) -> None:
    if not valid_k(n, k):
        want = 2 if (n // 2) % 2 == 1 else 1
        raise InvalidK(
            f"k = {k} invalid for n = {n}: need gcd(k, n) = {want} "
            f"(equivalently gcd(n/2 - k, n) = 1)"
        )


@dataclass(frozen=True)
class QuadFormParams:
    """Parameters of one quadratic form: ctx, exponent k, b in E, c in F."""

    ctx: FieldCtx
    k: int
    b: int
    c: int

    def __post_init__(self):
        require_valid_k(self.ctx.n, self.k)
        if not self.ctx.in_subfield(self.c):
            raise ValueError(f"c = {self.c} is not in the subfield")
        if not 0 <= self.b < self.ctx.order:
            raise ValueError(f"b = {self.b} out of range")


def eval_f(params: QuadFormParams, x: int) -> int:
    """The form's value at a single point, as an int 0 or 1."""
    ctx = params.ctx
    t1 = ctx.trace(ctx.mul(params.b, ctx.pow(x, (1 << params.k) + 1)))
    t2 = int(ctx.trh[ctx.mul(params.c, ctx.pow(x, (1 << ctx.half) + 1))])
    return t1 ^ t2


def truth_table(params: QuadFormParams) -> np.ndarray:
    """uint8 array of the form's values over all of E, indexed by x."""
    ctx = params.ctx
    n, group = ctx.n, ctx.group_order
    e1 = (1 << params.k) + 1
    e2 = (1 << ctx.half) + 1
    lx = ctx.log[np.arange(1, ctx.order)]
    tt = np.zeros(ctx.order, dtype=np.uint8)
    if params.b:
        tt[1:] ^= ctx.tr1[ctx.antilog[(ctx.log[params.b] + e1 * lx) % group]]
    if params.c:
        tt[1:] ^= ctx.trh[ctx.antilog[(ctx.log[params.c] + e2 * lx) % group]]
    return tt


def walsh_point(params: QuadFormParams, lam: int) -> int:
    """Exact transform value sum_x (-1)^(f(x) + tr(lam*x)) by direct summation."""
    ctx = params.ctx
    tt = truth_table(params)
    if lam:
        tt = tt ^ ctx.tr1[ctx.scale_all(lam)]
    return int(ctx.order - 2 * int(tt.sum()))


def fwht_inplace(a: np.ndarray) -> None:
    """In-place Walsh-Hadamard butterfly along the last axis (a power of 2)."""
    m = a.shape[-1]
    flat = a.reshape(-1, m)
    h = 1
    while h < m:
        blk = flat.reshape(-1, m // (2 * h), 2, h)
        x = blk[:, :, 0, :].copy()
        y = blk[:, :, 1, :]
        blk[:, :, 0, :] = x + y
        blk[:, :, 1, :] = x - y
        h *= 2


def walsh_spectrum(params: QuadFormParams) -> np.ndarray:
    """Full spectrum as an int64 array indexed by lambda.

    Pointwise equal to walsh_point; computed in O(n * 2^n) by the fast
    butterfly over the truth table plus the dual-basis reindexing.
    """
    ctx = params.ctx
    w = (1 - 2 * truth_table(params).astype(np.int64))
    fwht_inplace(w)
    return w[ctx.walsh_perm]


def symplectic_rank(params: QuadFormParams) -> int:
    """Rank of the form's symplectic bilinear pairing.

    Equals n minus the GF(2)-dimension of the kernel of the linearized map
    L(z) = b^(2^{n-k}) z^(2^{n-k}) + b z^(2^k) + c z^(2^{n/2}),
    which is exactly the radical { z : f(x)+f(z)+f(x+z) = 0 for all x }.
    """
    ctx = params.ctx
    if params.b == 0 and params.c == 0:
        raise ZeroForm("rank is undefined for the zero form")
    n, k = ctx.n, params.k
    bq = ctx.frobenius(params.b, n - k)

    def lin_map(z: int) -> int:
        return (
            ctx.mul(bq, ctx.frobenius(z, n - k))
            ^ ctx.mul(params.b, ctx.frobenius(z, k))
            ^ ctx.mul(params.c, ctx.frobenius(z, ctx.half))
        )

    images = [lin_map(1 << j) for j in range(n)]
    return n - len(gf2_kernel_basis(images, n))


def spectra_block(
    ctx: FieldCtx, k: int, b_list, c_list
) -> np.ndarray:
    """Spectra of all forms with b in b_list, c in c_list.

    Returns an int32 array of shape (len(b_list), len(c_list), 2^n) whose
    last axis is indexed by lambda.
    """
    require_valid_k(ctx.n, k)
    b_list = [int(b) for b in b_list]
    c_list = [int(c) for c in c_list]
    order, group = ctx.order, ctx.group_order
    if len(b_list) * len(c_list) * order * 4 > _BLOCK_BYTES_CAP:
        raise TooLarge(
            f"spectra block of {len(b_list)}x{len(c_list)}x{order} exceeds the memory cap"
        )
    e1 = (1 << k) + 1
    e2 = (1 << ctx.half) + 1
    lx = ctx.log[np.arange(1, order)]
    p1 = (e1 * lx) % group
    p2 = (e2 * lx) % group
    u = np.zeros((len(b_list), order), dtype=np.uint8)
    for i, b in enumerate(b_list):
        if b:
            u[i, 1:] = ctx.tr1[ctx.antilog[(ctx.log[b] + p1) % group]]
    v = np.zeros((len(c_list), order), dtype=np.uint8)
    for j, c in enumerate(c_list):
        if not ctx.in_subfield(c):
            raise ValueError(f"c = {c} is not in the subfield")
        if c:
            v[j, 1:] = ctx.trh[ctx.antilog[(ctx.log[c] + p2) % group]]
    w = 1 - 2 * (u[:, None, :] ^ v[None, :, :]).astype(np.int32)
    fwht_inplace(w)
    return w[..., ctx.walsh_perm]


class SpectraCache:
    """All spectra over the full parameter grid E x F, plus per-lambda histograms.

    values[b, ci, lam] is the transform of the (b, c_i) form at lambda, with
    c_i the i-th subfield element in increasing order.  Immutable once built;
    safe to share.
    """

    def __init__(self, ctx: FieldCtx, k: int):
        if ctx.n > SPECTRA_CACHE_MAX_N:
            raise TooLarge(
                f"full spectra cache limited to n <= {SPECTRA_CACHE_MAX_N}, got n = {ctx.n}"
            )
        self.ctx = ctx
        self.k = k
        self.values = spectra_block(ctx, k, range(ctx.order), ctx.subfield_elements)
        self.values.setflags(write=False)
        uniq, inv = np.unique(self.values, return_inverse=True)
        codes = inv.reshape(-1, ctx.order)
        per_col = np.empty((ctx.order, len(uniq)), dtype=np.int64)
        for lam in range(ctx.order):
            per_col[lam] = np.bincount(codes[:, lam], minlength=len(uniq))
        self._uniq = [int(x) for x in uniq]
        self._per_col = per_col

    def point(self, b: int, c: int, lam: int) -> int:
        ci = int(self.ctx.subfield_index[c])
        if ci < 0:
            raise ValueError(f"c = {c} is not in the subfield")
        return int(self.values[b, ci, lam])

    def column_histogram(self, lam: int) -> dict[int, int]:
        """Distribution of transform values over all (b, c) at this lambda."""
        col = self._per_col[lam]
        return {v: int(c) for v, c in zip(self._uniq, col) if c}


def spectrum_distribution(
    ctx: FieldCtx,
    k: int,
    b_set,
    c_set,
    lambda_set,
    multiplicity: int = 1,
) -> ValueHistogram:
    """Histogram of transform values over b_set x c_set x lambda_set.

    Every triple is counted `multiplicity` times; counts are exact ints.
    """
    if multiplicity < 1:
        raise ValueError("multiplicity must be >= 1")
    block = spectra_block(ctx, k, sorted(set(b_set)), sorted(set(c_set)))
    lam = np.array(sorted(set(lambda_set)), dtype=np.int64)
    sub = block[:, :, lam]
    vals, cnts = np.unique(sub, return_counts=True)
    return ValueHistogram.from_pairs(
        (int(v), int(c) * multiplicity) for v, c in zip(vals, cnts)
    )
