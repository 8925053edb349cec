"""Construction of the sequence families and per-sequence imbalance.

Three kinds share one container:

* the generalized family for an admissible exponent parameter k, whose
  members come in two parts -- the (gamma, delta) sequences indexed by all
  of E x F, and the (zeta, eta) sequences indexed by a small completion set
  Gamma x Delta;
* the classical large Kasami set, which is the same construction with
  k = n/2 + 1;
* the small Kasami set, which lives inside part one as the gamma = 0 slice.

Sequences are bit-packed into Python ints, LSB = t = 0, so correlation
inner loops reduce to XOR plus popcount.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .gf2n import FieldCtx
from .quadform import InvalidK, require_valid_k


class FamilyKind(str, enum.Enum):
    GENERALIZED = "fk"
    SMALL_KASAMI = "small-kasami"
    LARGE_KASAMI = "large-kasami"


@dataclass(frozen=True)
class FamilyParams:
    ctx: FieldCtx
    k: int
    kind: FamilyKind

    def __post_init__(self):
        require_valid_k(self.ctx.n, self.k)
        if self.kind == FamilyKind.LARGE_KASAMI and self.k != self.ctx.half + 1:
            raise InvalidK("the large Kasami set fixes k = n/2 + 1")


def family_params(
    ctx: FieldCtx, kind: FamilyKind | str, k: int | None = None
) -> FamilyParams:
    """Resolve parameters; the large Kasami set forces k = n/2 + 1, and the
    small set (which has no quadratic-exponent term) defaults k the same way."""
    kind = FamilyKind(kind)
    if kind == FamilyKind.LARGE_KASAMI or (kind == FamilyKind.SMALL_KASAMI and k is None):
        k = ctx.half + 1
    if k is None:
        raise InvalidK("kind 'fk' needs an explicit k")
    return FamilyParams(ctx, k, kind)


@dataclass(frozen=True)
class SequenceTag:
    """Construction parameters of one sequence; only the active pair is set."""

    variant: str  # "gamma-delta" or "zeta-eta"
    gamma: int | None = None
    delta: int | None = None
    zeta: int | None = None
    eta: int | None = None

    @classmethod
    def gamma_delta(cls, gamma: int, delta: int) -> "SequenceTag":
        return cls("gamma-delta", gamma=gamma, delta=delta)

    @classmethod
    def zeta_eta(cls, zeta: int, eta: int) -> "SequenceTag":
        return cls("zeta-eta", zeta=zeta, eta=eta)

    def pair(self) -> tuple[int, int]:
        if self.variant == "gamma-delta":
            return self.gamma, self.delta
        return self.zeta, self.eta

    def to_json_dict(self, ctx: FieldCtx) -> dict:
        a, b = self.pair()
        names = ("gamma", "delta") if self.variant == "gamma-delta" else ("zeta", "eta")
        return {
            "variant": self.variant,
            names[0]: ctx.element_label(a),
            names[1]: ctx.element_label(b),
        }


@dataclass(frozen=True)
class BinarySequence:
    """Bit-packed sequence of period 2^n - 1 (LSB of bits = t = 0)."""

    bits: int
    length: int
    tag: SequenceTag

    def bit(self, t: int) -> int:
        return (self.bits >> (t % self.length)) & 1

    def to01(self) -> str:
        return "".join(str(self.bit(t)) for t in range(self.length))

    def to_hex(self) -> str:
        nbytes = (self.length + 7) // 8
        return self.bits.to_bytes(nbytes, "little").hex()


@dataclass
class SequenceFamily:
    params: FamilyParams
    part1: list[BinarySequence]
    part2: list[BinarySequence]

    @property
    def size(self) -> int:
        return len(self.part1) + len(self.part2)

    @property
    def period(self) -> int:
        return self.params.ctx.group_order

    def all_sequences(self) -> list[BinarySequence]:
        return self.part1 + self.part2


def gamma_delta_sets(ctx: FieldCtx) -> tuple[list[int], list[int]]:
    """The completion index sets (Gamma, Delta) for part two.

    n/2 odd:  Gamma = {1}, Delta = all of F (zero first, then increasing
    powers of beta).  n/2 even: Gamma = {1, alpha, alpha^2}, Delta = the
    first (2^{n/2} - 1)/3 powers of beta starting at beta^0 = 1.
    """
    if (ctx.half % 2) == 1:
        gamma = [1]
        delta = [0] + [ctx.pow(ctx.beta, j) for j in range((1 << ctx.half) - 1)]
    else:
        gamma = [1, ctx.alpha, ctx.mul(ctx.alpha, ctx.alpha)]
        delta = [ctx.pow(ctx.beta, j) for j in range(((1 << ctx.half) - 1) // 3)]
    return gamma, delta


def sequence_term(params: FamilyParams, tag: SequenceTag, t: int) -> int:
    """One bit straight from the defining trace formulas (the slow path)."""
    ctx = params.ctx
    if not 0 <= t < ctx.group_order:
        raise ValueError(f"t = {t} out of range")
    x = ctx.pow(ctx.alpha, t)
    xq = ctx.pow(x, (1 << params.k) + 1)
    xn = ctx.pow(x, (1 << ctx.half) + 1)
    if tag.variant == "gamma-delta":
        inner = x ^ ctx.mul(tag.gamma, xq)
        return ctx.trace(inner) ^ int(ctx.trh[ctx.mul(tag.delta, xn)])
    return ctx.trace(ctx.mul(tag.zeta, xq)) ^ int(ctx.trh[ctx.mul(tag.eta, xn)])


def _pack(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def build_family(params: FamilyParams) -> SequenceFamily:
    """Materialize every sequence of the family, bit-packed.

    Part one iterates gamma over E in integer order and delta over F in
    increasing order; part two follows the (Gamma, Delta) listing.  For the
    small Kasami set, part one holds the 2^{n/2} sequences tagged
    (gamma = 0, delta = eta) and part two is empty.
    """
    ctx, k = params.ctx, params.k
    group = ctx.group_order
    t = np.arange(group, dtype=np.int64)
    e1 = (1 << k) + 1
    e2 = (1 << ctx.half) + 1
    log_a = t % group
    log_q = (e1 * t) % group
    log_n = (e2 * t) % group
    a_of_t = ctx.antilog[log_a]

    def gd_bits(gamma: int, delta: int) -> np.ndarray:
        inner = a_of_t.copy()
        if gamma:
            inner = inner ^ ctx.antilog[(ctx.log[gamma] + log_q) % group]
        u = ctx.tr1[inner]
        if delta:
            u = u ^ ctx.trh[ctx.antilog[(ctx.log[delta] + log_n) % group]]
        return u

    def ze_bits(zeta: int, eta: int) -> np.ndarray:
        u = np.zeros(group, dtype=np.uint8)
        if zeta:
            u = ctx.tr1[ctx.antilog[(ctx.log[zeta] + log_q) % group]]
        if eta:
            u = u ^ ctx.trh[ctx.antilog[(ctx.log[eta] + log_n) % group]]
        return u

    part1: list[BinarySequence] = []
    part2: list[BinarySequence] = []
    if params.kind == FamilyKind.SMALL_KASAMI:
        for eta in ctx.subfield_elements:
            eta = int(eta)
            part1.append(
                BinarySequence(_pack(gd_bits(0, eta)), group, SequenceTag.gamma_delta(0, eta))
            )
    else:
        subfield = [int(c) for c in ctx.subfield_elements]
        for gamma in range(ctx.order):
            for delta in subfield:
                part1.append(
                    BinarySequence(
                        _pack(gd_bits(gamma, delta)),
                        group,
                        SequenceTag.gamma_delta(gamma, delta),
                    )
                )
        gset, dset = gamma_delta_sets(ctx)
        for zeta in gset:
            for eta in dset:
                part2.append(
                    BinarySequence(
                        _pack(ze_bits(zeta, eta)), group, SequenceTag.zeta_eta(zeta, eta)
                    )
                )
    return SequenceFamily(params, part1, part2)


def imbalance(seq: BinarySequence) -> int:
    """(#zeros - #ones) over one period; always odd because the period is."""
    return seq.length - 2 * seq.bits.bit_count()


# -- export formats -----------------------------------------------------

FORMATS = ("bits", "hex", "json")


def format_sequence(seq: BinarySequence, fmt: str, ctx: FieldCtx) -> str:
    if fmt == "bits":
        return seq.to01()
    if fmt == "hex":
        return seq.to_hex()
    if fmt == "json":
        return json.dumps(
            {"tag": seq.tag.to_json_dict(ctx), "hex": seq.to_hex()},
            separators=(",", ":"),
        )
    raise ValueError(f"unknown format {fmt!r}; know {FORMATS}")


def write_family(family: SequenceFamily, fmt: str, stream) -> int:
    """Write one sequence per line; returns the number of lines."""
    ctx = family.params.ctx
    count = 0
    for seq in family.all_sequences():
        stream.write(format_sequence(seq, fmt, ctx))
        stream.write("\n")
        count += 1
    return count
