import json

import pytest

from gkasami import correlation as corr
from gkasami import families as fam
from gkasami import theory
from gkasami.histogram import ValueHistogram

EXAMPLE_N4 = {15: 67, -1: 28598, 3: 18418, -5: 11044, 7: 6902, -9: 2306}


def brute_correlate(s1, s2, tau):
    """Independent oracle: sum the +-1 products term by term."""
    total = 0
    for t in range(s1.length):
        total += (-1) ** (s1.bit(t) ^ s2.bit((t + tau) % s2.length))
    return total


def test_correlate_matches_termwise_sum(family4):
    seqs = family4.all_sequences()
    for s1, s2 in [(seqs[0], seqs[0]), (seqs[1], seqs[40]), (seqs[66], seqs[3])]:
        for tau in range(s1.length):
            assert corr.correlate(s1, s2, tau) == brute_correlate(s1, s2, tau)


def test_correlate_in_phase(family6):
    for s in family6.all_sequences()[::50]:
        assert corr.correlate(s, s, 0) == 63


def test_m_sequence_autocorrelation(family6):
    base = family6.part1[0]  # the (0, 0) tag
    for tau in range(1, 63):
        assert corr.correlate(base, base, tau) == -1


def test_correlate_symmetry(family4):
    seqs = family4.all_sequences()
    n = seqs[0].length
    for i, j in [(0, 5), (12, 33), (7, 64)]:
        for tau in range(n):
            assert corr.correlate(seqs[i], seqs[j], tau) == corr.correlate(
                seqs[j], seqs[i], (n - tau) % n
            )


def test_correlate_errors(family4, family6):
    with pytest.raises(corr.LengthMismatch):
        corr.correlate(family4.part1[0], family6.part1[0], 0)
    with pytest.raises(ValueError):
        corr.correlate(family4.part1[0], family4.part1[1], 15)


def test_brute_histogram_n4(family4):
    report = corr.full_distribution_brute(family4)
    assert report.histogram.counts == EXAMPLE_N4
    assert report.histogram.total() == 67 * 67 * 15
    assert report.r_max == 9
    assert report.histogram.counts[15] == report.family_size
    # odd period, +-1 summands: every correlation value is odd
    assert all(v % 2 != 0 for v in report.histogram.counts)


def test_engines_identical_all_kinds_n4(ctx4):
    for kind in fam.FamilyKind:
        family = fam.build_family(fam.family_params(ctx4, kind, 1 if kind == fam.FamilyKind.GENERALIZED else None))
        rb = corr.full_distribution_brute(family)
        rs = corr.full_distribution_spectral(family)
        assert rb.histogram == rs.histogram
        assert rb.r_max == rs.r_max
        a = rb.to_json_dict()
        b = rs.to_json_dict()
        a.pop("engine"), b.pop("engine")
        assert json.dumps(a) == json.dumps(b)


def test_jobs_do_not_change_brute_result(family4):
    one = corr.full_distribution_brute(family4, jobs=1)
    two = corr.full_distribution_brute(family4, jobs=2)
    assert one.histogram == two.histogram


def test_small_set_engines_and_prediction(ctx6):
    family = fam.build_family(fam.family_params(ctx6, "small-kasami"))
    rb = corr.full_distribution_brute(family)
    rs = corr.full_distribution_spectral(family)
    assert rb.histogram == rs.histogram == theory.small_kasami_correlation(6)
    assert rb.r_max == 9 == theory.small_set_r_max_expected(6)
    # three-valued off-phase: -1 and +-2^{n/2} - 1
    offphase = set(rb.histogram.counts) - {63}
    assert offphase == {-1, 7, -9}


def test_r_max_bookkeeping():
    # the in-phase count is removed before taking the maximum
    hist = ValueHistogram({15: 3, -9: 5, -1: 7})
    assert corr._r_max_from_histogram(hist, 15, 3) == 9
    # an excess period-value count survives as a genuine correlation
    hist2 = ValueHistogram({15: 4, -9: 5})
    assert corr._r_max_from_histogram(hist2, 15, 3) == 15
    with pytest.raises(ValueError):
        corr._r_max_from_histogram(ValueHistogram({-1: 5}), 15, 1)


def test_r_max_function_recomputes(family4):
    report = corr.full_distribution_spectral(family4)
    assert corr.r_max(report) == report.r_max == 9


def test_report_json_shape(family4):
    report = corr.full_distribution_spectral(family4)
    obj = report.to_json_dict(corr.predicted_histogram(family4))
    assert obj["match"] is True
    assert obj["engine"] == "spectral"
    assert obj["kind"] == "fk"
    assert obj["family_size"] == 67 and obj["period"] == 15
    assert obj["histogram"][0] == {"value": 15, "count": "67"}
    assert obj["predicted"] is not None
    # counts serialize as decimal strings
    assert all(isinstance(e["count"], str) for e in obj["histogram"])


def test_report_without_prediction(family4):
    obj = corr.full_distribution_spectral(family4).to_json_dict()
    assert obj["predicted"] is None and obj["match"] is None


def test_rotate():
    # bit t of the rotation is bit t+tau of the original
    bits = 0b000000000000101
    rot = corr.rotate(bits, 2, 15)
    seq = fam.BinarySequence(bits, 15, fam.SequenceTag.gamma_delta(0, 0))
    rotseq = fam.BinarySequence(rot, 15, seq.tag)
    for t in range(15):
        assert rotseq.bit(t) == seq.bit((t + 2) % 15)
