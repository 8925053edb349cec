import math

import numpy as np
import pytest

from gkasami import quadform as qf
from gkasami import theory
from gkasami.gf2n import TooLarge, make_field
from gkasami.histogram import ValueHistogram


def test_predict_populations_symbolic():
    # every predictor must account for exactly its population, for both parities
    for n in (4, 6, 8, 10):
        m = n // 2
        odd = m % 2 == 1
        M = theory.family_size(n)
        pop = {
            "walsh-full": 1 << (5 * m),
            "walsh-c-at0": (1 << m) - 1,
            "walsh-c-at1": (1 << m) - 1,
            "code-weights": 1 << (5 * m),
            "theta-root-counts": (1 << n) - 1,
        }
        if odd:
            pop.update({
                "walsh-b-at1-odd": (1 << n) - 1,
                "walsh-bc-at0-odd": ((1 << n) - 1) * ((1 << m) - 1),
                "walsh-bc-at1-odd": ((1 << n) - 1) * ((1 << m) - 1),
                "walsh-family-mix-odd": (1 << (3 * m)) + (1 << m),
                "family-corr-odd": M * M * ((1 << n) - 1),
                "imbalance-odd": M,
            })
        else:
            pop.update({
                "walsh-b-at0-even": (1 << n) - 1,
                "walsh-b-at1-even": (1 << n) - 1,
                "walsh-bc-at0-even": ((1 << n) - 1) * ((1 << m) - 1),
                "walsh-bc-at1-even": ((1 << n) - 1) * ((1 << m) - 1),
                "walsh-family-mix-even": ((1 << n) + (1 << m) - 1)
                * ((1 << (3 * m)) + (1 << m) - 1),
                "family-corr-even": M * M * ((1 << n) - 1),
                "imbalance-even": M,
            })
        for name, want in pop.items():
            assert theory.predict(name, n).histogram.total() == want, (name, n)


def test_predict_spot_values():
    odd_form = theory.predict("family-corr-odd", 6, 2).histogram
    assert odd_form.counts[-9] == 2_853_064
    assert odd_form.counts[63] == 520
    even_form = theory.predict("family-corr-even", 4, 1).histogram
    assert even_form.counts[3] == 18_418
    assert even_form.counts[15] == 67
    roots = theory.predict("theta-root-counts", 6).histogram
    assert roots.counts == {3: 36, 0: 27}
    assert theory.three_root_theta_count(10) == 660
    assert theory.three_root_theta_count(8) == (2**9 - 2) // 3


def test_predict_parity_and_name_errors():
    with pytest.raises(theory.ParityMismatch):
        theory.predict("family-corr-odd", 4)
    with pytest.raises(theory.ParityMismatch):
        theory.predict("walsh-b-at0-even", 6)
    with pytest.raises(KeyError):
        theory.predict("no-such-form", 6)


def test_family_dispatch_helpers():
    assert theory.family_correlation_histogram(6) == theory.predict("family-corr-odd", 6).histogram
    assert theory.family_correlation_histogram(8) == theory.predict("family-corr-even", 8).histogram
    assert theory.imbalance_histogram(4) == theory.predict("imbalance-even", 4).histogram


def test_six_valued_support():
    for n in (4, 6, 8, 10):
        m = n // 2
        hist = theory.family_correlation_histogram(n)
        assert set(hist.counts) == {
            (1 << n) - 1, -1,
            (1 << m) - 1, -(1 << m) - 1,
            (1 << (m + 1)) - 1, -(1 << (m + 1)) - 1,
        }


def test_small_set_histogram_population():
    for n in (4, 6, 8):
        h = theory.small_kasami_correlation(n)
        M = 1 << (n // 2)
        assert h.total() == M * M * ((1 << n) - 1)
        assert h.counts[(1 << n) - 1] == M


def test_build_code_n4(ctx4):
    code = theory.build_code(ctx4, 1)
    assert code.length == 15 and code.dimension == 10
    assert code.weight_histogram.total() == 1 << 10
    assert set(code.weight_histogram.counts) == {0, 4, 6, 8, 10, 12}
    assert code.weight_histogram == theory.predict("code-weights", 4).histogram


def test_build_code_n6(ctx6):
    code = theory.build_code(ctx6, 2)
    assert code.weight_histogram.counts[32] == 15_183
    assert code.weight_histogram == theory.predict("code-weights", 6).histogram


def test_code_guard():
    with pytest.raises(TooLarge):
        theory.build_code(make_field(10), 2)


def test_codeword_linearity(ctx4):
    code = theory.build_code(ctx4, 1)
    rng = np.random.RandomState(2)
    for _ in range(20):
        g1, d1 = int(rng.randint(0, 16)), int(rng.randint(0, 16))
        g2, d2 = int(rng.randint(0, 16)), int(rng.randint(0, 16))
        e1 = int(ctx4.subfield_elements[rng.randint(0, 4)])
        e2 = int(ctx4.subfield_elements[rng.randint(0, 4)])
        lhs = code.codeword(g1, d1, e1) ^ code.codeword(g2, d2, e2)
        assert lhs == code.codeword(g1 ^ g2, d1 ^ d2, e1 ^ e2)


def test_codeword_distinctness(ctx4):
    code = theory.build_code(ctx4, 1)
    words = {
        code.codeword(g, d, int(e))
        for g in range(16)
        for d in range(16)
        for e in ctx4.subfield_elements
    }
    assert len(words) == 1 << 10


def test_weight_transform_correspondence(ctx4, ctx6):
    # codeword weights and transform values are the same data: v = 2^n - 2w
    for ctx, k in ((ctx4, 1), (ctx6, 2)):
        code = theory.build_code(ctx, k)
        remapped = ValueHistogram(
            {ctx.order - 2 * w: c for w, c in code.weight_histogram.counts.items()}
        )
        full = qf.spectrum_distribution(
            ctx, k, range(ctx.order), ctx.subfield_elements, range(ctx.order)
        )
        assert remapped == full


def test_dual_weights(ctx4, ctx6):
    for ctx, k in ((ctx4, 1), (ctx6, 2)):
        code = theory.build_code(ctx, k)
        assert theory.dual_weight(code, 0) == 1
        assert theory.dual_low_weights(code, 3) == [0, 0, 0]
    with pytest.raises(ValueError):
        theory.dual_low_weights(code, 5)


def test_dual_weight_rejects_corrupt_enumerator(ctx4):
    code = theory.build_code(ctx4, 1)
    broken = theory.CodeSpec(
        ctx=code.ctx,
        k=code.k,
        length=code.length,
        dimension=code.dimension,
        weight_histogram=ValueHistogram({0: 1, 7: 1}),
    )
    with pytest.raises(theory.NonIntegerResult):
        theory.dual_weight(broken, 1)


def test_krawtchouk_orthogonality_spot():
    # sum_i C(m, i) K_j(i) = 0 for j >= 1 (transform of the full space)
    m = 15
    for j in (1, 2, 3):
        assert sum(math.comb(m, i) * theory.krawtchouk(j, i, m) for i in range(m + 1)) == 0
