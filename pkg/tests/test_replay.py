"""Witness replay: every emitted verdict must re-verify from raw tables."""

import dataclasses

from nilary import (
    Witness,
    classify_ring,
    full_report,
    make_zn,
    replay_report,
    replay_verdict,
    zero_ideal,
)
from nilary.classify import is_completely_nilary, is_nilary


def test_all_small_corpus_reports_replay(small_rings):
    for r in small_rings:
        for report in full_report(r):
            results = replay_report(r, report)
            bad = [name for name, ok in results.items() if not ok]
            assert not bad, (r.label, report.ideal_elements, bad)


def test_tampered_element_witness_fails(z6):
    v = is_completely_nilary(zero_ideal(z6))
    assert not v.holds
    good = v.witness
    assert replay_verdict(z6, (0,), "completely_nilary", False, good)
    # (2,4): product is 2, not in {0}, so no counterexample
    assert not replay_verdict(
        z6, (0,), "completely_nilary", False, dataclasses.replace(good, b=4)
    )
    # (1,3): product 3 is nonzero, again no counterexample
    assert not replay_verdict(
        z6, (0,), "completely_nilary", False, dataclasses.replace(good, a=1)
    )


def test_tampered_ideal_witness_fails(z6):
    v = is_nilary(zero_ideal(z6))
    assert not v.holds
    assert replay_verdict(z6, (0,), "nilary", False, v.witness)
    swapped = dataclasses.replace(v.witness, j=(0, 1), k=(0, 3))
    assert not replay_verdict(z6, (0,), "nilary", False, swapped)  # {0,1} not an ideal
    shrunk = dataclasses.replace(v.witness, j=(0, 2, 4), k=(0, 2, 4))
    assert not replay_verdict(z6, (0,), "nilary", False, shrunk)  # product not in {0}


def test_false_exponent_fails():
    z12 = make_zn(12)
    rep = full_report(z12)[2]  # ideal {0,4,8}
    v = rep.verdicts["completely_semiprime"]
    assert not v.holds and v.witness.n == 2
    wrong_exponent = dataclasses.replace(v.witness, n=3)
    assert not replay_verdict(z12, rep.ideal_elements, "completely_semiprime", False, wrong_exponent)


def test_true_verdict_with_leftover_witness_fails(z6):
    assert not replay_verdict(z6, (0,), "nilary", True, Witness.pair(2, 3))
    assert replay_verdict(z6, (0,), "nilary", True, Witness.none())


def test_na_replay(z6):
    full = tuple(range(6))
    assert replay_verdict(z6, full, "weakly_nilary", False, Witness.none(), na=True)
    assert not replay_verdict(z6, (0,), "weakly_nilary", False, Witness.none(), na=True)


def test_improper_prime_replay(z6):
    rep = classify_ring(make_zn(1))
    assert replay_report(make_zn(1), rep) == {name: True for name in rep.verdicts}
