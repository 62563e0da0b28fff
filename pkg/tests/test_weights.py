"""The ring-axiom checker: the coprime indicator passes, everything else breaks."""

import math

import pytest

from unitring import mfunc, weights


def test_coprime_weight_satisfies_all_axioms():
    report = weights.check_ring_axioms(weights.coprime_weight(), bound=60)
    assert report.all_pass, str(report)
    assert set(report.checks) == set(report.AXIOMS)


def test_ones_weight_fails_distributivity():
    report = weights.check_ring_axioms(weights.ones_weight(), bound=30)
    chk = report.checks["distributivity"]
    assert not chk.passed
    assert chk.witness is not None
    # the smallest counterexample: p = 2 with the split 1 + 1 = 2
    assert chk.witness == (2, 1, 1)
    for name in ("commutativity", "stability", "neutral-element", "associativity-cocycle"):
        assert report.checks[name].passed, name


def test_ones_distributivity_witness_replays():
    # replay the reported counterexample through the actual convolution
    report = weights.check_ring_axioms(weights.ones_weight(), bound=30)
    p, l, f = report.checks["distributivity"].witness
    q = p ** (l + f)
    W = weights.ones_weight()
    ind_l = mfunc.indicator([(p, l)])
    ind_f = mfunc.indicator([(p, f)])
    ind_q = mfunc.indicator([(p, l + f)])
    left = mfunc.w_convolve(ind_l, ind_f, W)(q) * ind_q(q)
    right = mfunc.w_convolve(
        mfunc.pointwise_product(ind_l, ind_q), mfunc.pointwise_product(ind_f, ind_q), W
    )(q)
    assert abs(left - right) > 1e-9


def test_scaled_coprime_fails_neutral_element():
    report = weights.check_ring_axioms(weights.scaled_coprime_weight(2.0), bound=20)
    chk = report.checks["neutral-element"]
    assert not chk.passed
    assert chk.witness == (1, 2)
    assert not report.all_pass


def test_weight_rule_values():
    W = weights.coprime_weight()
    assert W.rule(3, 4) == 1
    assert W.rule(6, 4) == 0
    ones = weights.ones_weight()
    assert ones.rule(6, 4) == 1


def test_table_weight_missing_pairs_are_zero():
    W = weights.table_weight({(1, 1): 1 + 0j, (2, 3): 1 + 0j}, label="tiny")
    assert W.rule(2, 3) == 1
    assert W.rule(3, 2) == 0
    assert W.rule(50, 50) == 0


def test_load_weight_table(tmp_path):
    path = tmp_path / "w.txt"
    lines = ["# coprime indicator on a small box"]
    for a in range(1, 13):
        for b in range(1, 13):
            lines.append(f"{a} {b} {1.0 if math.gcd(a, b) == 1 else 0.0} 0.0")
    path.write_text("\n".join(lines) + "\n")
    W = weights.load_weight_table(str(path))
    assert W.rule(3, 4) == 1
    assert W.rule(6, 4) == 0
    assert W.rule(100, 100) == 0  # outside the table
    report = weights.check_ring_axioms(W, bound=12)
    assert report.all_pass, str(report)


def test_load_weight_table_rejects_garbage(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 three 0\n")
    with pytest.raises(ValueError):
        weights.load_weight_table(str(path))


def test_check_ring_axioms_rejects_tiny_bound():
    with pytest.raises(ValueError):
        weights.check_ring_axioms(weights.coprime_weight(), bound=1)


def test_report_renders_every_axiom():
    report = weights.check_ring_axioms(weights.coprime_weight(), bound=12)
    text = str(report)
    for name in report.AXIOMS:
        assert name in text
