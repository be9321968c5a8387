"""Hilbert tables, root-multiset dimension counts, growth verdicts."""

from fractions import Fraction

import pytest

from hopfmin.datum import (
    datum_from_q_matrix,
    positive_roots,
    preset_cartan,
    preset_reductive,
)
from hopfmin.growth import (
    EXPONENTIAL_SUSPECTED,
    FINITE,
    INCONCLUSIVE,
    POLYNOMIAL,
    compute_blocks,
    dominance_label,
    dominance_verdict,
    growth_classify,
    hilbert_table,
    kostant_dims,
)
from hopfmin.scalars import QQ
from hopfmin.shapovalov import BlockSizeError
from hopfmin.words import multidegrees_up_to


def test_kostant_dims_by_hand():
    roots = positive_roots("A2")
    assert kostant_dims(roots, (0, 0)) == 1
    assert kostant_dims(roots, (1, 0)) == 1
    assert kostant_dims(roots, (1, 1)) == 2
    assert kostant_dims(roots, (2, 1)) == 2
    assert kostant_dims(roots, (2, 2)) == 3
    b2 = positive_roots("B2")
    assert kostant_dims(b2, (1, 1)) == 2
    assert kostant_dims(b2, (2, 1)) == 3
    assert kostant_dims(b2, (2, 2)) == 4


def test_hilbert_table_reductive():
    q = ((Fraction(1),) * 3,) * 3
    d = datum_from_q_matrix(q, QQ)
    table = hilbert_table(d, 6)
    assert all(b.rank == 1 for b in table.blocks)
    assert table.totals() == (1, 3, 6, 10, 15, 21, 28)


def test_hilbert_table_matches_kostant_a2():
    d = preset_cartan("A2")
    roots = positive_roots("A2")
    table = hilbert_table(d, 5)
    for b in table.blocks:
        assert b.rank == kostant_dims(roots, b.deg)
    assert table.totals() == (1, 2, 4, 6, 9, 12)


def test_compute_blocks_parallel_matches_serial():
    d = preset_cartan("A2")
    degs = multidegrees_up_to(2, 5)
    serial = compute_blocks(d, degs, jobs=1)
    parallel = compute_blocks(d, degs, jobs=2)
    assert serial == parallel


def test_compute_blocks_guard_names_block():
    d = preset_reductive("A2")
    degs = multidegrees_up_to(d.m, 8)
    with pytest.raises(BlockSizeError) as exc:
        compute_blocks(d, degs, block_limit=100)
    assert exc.value.size > 100


def test_growth_finite():
    v = growth_classify((1, 1, 1, 0, 0, 0, 0))
    assert v.kind == FINITE
    assert v.evidence["last_nonzero_degree"] == 2


def test_growth_polynomial_constant_and_linear():
    v = growth_classify((1,) * 7)
    assert (v.kind, v.degree) == (POLYNOMIAL, 0)
    v = growth_classify(tuple(range(1, 10)))
    assert (v.kind, v.degree) == (POLYNOMIAL, 1)
    v = growth_classify(tuple((k + 1) * (k + 2) // 2 for k in range(9)))
    assert (v.kind, v.degree) == (POLYNOMIAL, 2)


def test_growth_polynomial_period_two():
    # quasi-polynomial totals whose differences oscillate with period two
    v = growth_classify((1, 2, 2, 3, 3, 4, 4))
    assert (v.kind, v.degree) == (POLYNOMIAL, 1)
    assert v.evidence["mode"] == "alternating"


def test_growth_exponential_suspected():
    v = growth_classify((1, 2, 4, 8, 16, 32, 64))
    assert v.kind == EXPONENTIAL_SUSPECTED
    v = growth_classify((1, 2, 4, 6, 9, 12, 16, 20, 25))
    assert v.kind != EXPONENTIAL_SUSPECTED


def test_growth_inconclusive():
    v = growth_classify((1, 2, 4))
    assert v.kind == INCONCLUSIVE
    assert "need totals" in v.evidence["reason"]
    v = growth_classify((1, 5, 2, 9, 3, 7, 8))
    assert v.kind == INCONCLUSIVE


def test_growth_window_validation():
    with pytest.raises(ValueError):
        growth_classify((1, 1, 1), window=0)


def test_dominance_labels():
    fin = growth_classify((1, 1, 0, 0, 0, 0, 0))
    assert dominance_label(fin, 6).startswith("dominant at truncation 6")
    poly = growth_classify((1,) * 7)
    assert "polynomial of degree 0" in dominance_label(poly, 6)
    exp = growth_classify((1, 2, 4, 8, 16, 32, 64))
    assert dominance_label(exp, 6).startswith("not dominant")
    unk = growth_classify((1, 2, 4))
    assert dominance_label(unk, 2).startswith("undetermined")


def test_dominance_verdict_end_to_end():
    q = ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))
    d = datum_from_q_matrix(q, QQ)
    report = dominance_verdict(d, 6)
    assert report.verdict.kind == POLYNOMIAL
    assert report.verdict.degree == 1
    assert report.dominance.startswith("dominant")
