"""Degeneracy locus thresholds and Betti calculators."""

import json
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from degenloci.errors import OutsideValidityError
from degenloci.loci import (
    AmbientData,
    GrassmannBundle,
    LagrangianBundle,
    MorphismSetup,
    betti_degeneracy,
    betti_orthogonal_special,
    betti_skew,
    epsilon_general,
    epsilon_skew,
    expected_dimension_general,
    expected_dimension_skew,
    fibration_ambient,
    fibration_betti,
    max_lefschetz_general,
    max_lefschetz_skew,
    skew_to_orthogonal,
    thresholds_report,
    verify_growth_inequalities,
    verify_growth_sweep,
)


def partitions_upto(weight, max_part, max_len):
    """Brute-force partition list; max_len None means unbounded."""
    if weight == 0:
        return [()]
    if max_part == 0 or max_len == 0:
        return []
    out = []
    for p in range(min(weight, max_part), 0, -1):
        for rest in partitions_upto(weight - p, p,
                                    None if max_len is None else max_len - 1):
            out.append((p,) + rest)
    return out


# ---------------------------------------------------------------------------
# ambient data


def test_ambient_constructors():
    pt = AmbientData.point()
    assert (pt.dim, pt.betti) == (0, (1,))
    p2 = AmbientData.projective_space(2)
    assert p2.betti == (1, 0, 1, 0, 1)
    ab = AmbientData.abelian_variety(1)
    assert ab.betti == (1, 2, 1)
    assert AmbientData.abelian_variety(2).betti == tuple(comb(4, p) for p in range(5))


def test_ambient_padding_and_truncation():
    padded = AmbientData(1, (1,))
    assert padded.betti == (1, 0, 0)
    trimmed = AmbientData(0, (1, 0, 0))
    assert trimmed.betti == (1,)
    assert padded.h(2) == 0
    assert padded.h(99) == 0
    assert padded.h(-1) == 0


def test_ambient_rejects_bad_data():
    with pytest.raises(ValueError):
        AmbientData(-1, (1,))
    with pytest.raises(ValueError):
        AmbientData(1, (0, 1))          # b_0 = 0
    with pytest.raises(ValueError):
        AmbientData(1, (1, 0, 0, 5))    # class above twice the dimension
    with pytest.raises(ValueError):
        AmbientData(1, (1, -2))


# ---------------------------------------------------------------------------
# morphism setups


def test_setup_general():
    s = MorphismSetup("general", e=3, f=4, r=2)
    assert s.max_rank == 3
    assert MorphismSetup("general", e=3, f=4, r=2, max_rank=2).max_rank == 2
    for bad in (
        dict(e=3, f=2, r=1),            # e > f
        dict(e=3, f=4, r=4),            # r > e
        dict(e=3, f=4, r=2, max_rank=1),
        dict(e=3, f=4, r=2, max_rank=4),
        dict(f=4, r=1),                 # missing e
    ):
        with pytest.raises(ValueError):
            MorphismSetup("general", **bad)


def test_setup_skew():
    s = MorphismSetup("skew", e=7, r=2)
    assert s.max_rank == 6
    assert MorphismSetup("skew", e=7, r=2, max_rank=4).max_rank == 4
    for bad in (
        dict(e=7, r=4),                 # 2r > e
        dict(e=7, r=2, max_rank=5),     # odd bound
        dict(e=7, r=3, max_rank=4),     # below 2r
        dict(e=7, f=7, r=2),            # f forbidden
    ):
        with pytest.raises(ValueError):
            MorphismSetup("skew", **bad)


def test_setup_orthogonal():
    s = MorphismSetup("orthogonal", r=3, ambient_jump=1)
    assert s.ambient_jump == 1
    assert MorphismSetup("orthogonal", r=2).ambient_jump == 0
    for bad in (
        dict(r=3),                      # r - 0 odd
        dict(r=3, ambient_jump=4),      # jump > r
        dict(e=3, r=3, ambient_jump=1),
    ):
        with pytest.raises(ValueError):
            MorphismSetup("orthogonal", **bad)
    with pytest.raises(ValueError):
        MorphismSetup("mystery", r=1)


# ---------------------------------------------------------------------------
# allowances and Lefschetz thresholds


def test_epsilon_sequences_frozen():
    assert [epsilon_general(m) for m in range(10)] == [1, 2, 0, 1, 0, 1, 0, 1, 0, 1]
    assert [epsilon_skew(m) for m in range(12)] == [1, 2, 3, 4, 0, 1, 2, 3, 0, 1, 2, 3]
    with pytest.raises(ValueError):
        epsilon_general(-1)
    with pytest.raises(ValueError):
        epsilon_skew(-1)


def test_expected_dimensions():
    assert expected_dimension_general(10, 3, 4, 2) == 8
    assert expected_dimension_skew(10, 6, 2) == 9
    assert expected_dimension_skew(10, 6, 0) == -5


def test_max_lefschetz_values():
    assert max_lefschetz_general(10, 3, 4, 2) == 3
    assert max_lefschetz_skew(10, 6, 2) == 7
    assert max_lefschetz_general(0, 1, 1, 0) is None


def test_max_lefschetz_monotone_in_dimension():
    prev = -1
    for dim_x in range(0, 30):
        m = max_lefschetz_general(dim_x, 4, 5, 3)
        if m is not None:
            assert m >= prev
            prev = m
    prev = -1
    for dim_x in range(0, 40):
        m = max_lefschetz_skew(dim_x, 8, 3)
        if m is not None:
            assert m >= prev
            prev = m


def test_thresholds_report_skew_frozen():
    rep = thresholds_report(MorphismSetup("skew", e=6, r=2), 10)
    assert rep.expected_dimension == 9
    assert rep.expected_codimension == 1
    assert rep.max_lefschetz == 7
    assert rep.connectivity_offset == 1
    assert rep.connected_if_dim_above == 1
    assert rep.epsilon_table[:6] == [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0], [5, 1]]
    obj = rep.to_json_obj()
    json.dumps(obj)
    assert obj["max_lefschetz"] == 7


def test_thresholds_report_general_frozen():
    rep = thresholds_report(MorphismSetup("general", e=3, f=4, r=2), 10)
    assert rep.expected_dimension == 8
    assert rep.expected_codimension == 2
    assert rep.max_lefschetz == 3
    assert rep.connectivity_offset == 2


def test_thresholds_report_orthogonal():
    rep = thresholds_report(MorphismSetup("orthogonal", r=3, ambient_jump=1), 12)
    assert rep.expected_codimension == 3
    assert rep.epsilon_table == []
    assert rep.max_lefschetz is None
    assert rep.connectivity_offset == 3
    assert any("no Lefschetz" in note for note in rep.notes)


def test_thresholds_notes_follow_flags():
    setup = MorphismSetup("general", e=2, f=2, r=1,
                          lower_locus_empty=False, amplitude_assumed=False)
    rep = thresholds_report(setup, 5)
    assert any("lower locus" in n for n in rep.notes)
    assert any("conjectural" in n for n in rep.notes)
    with pytest.raises(ValueError):
        thresholds_report(setup, -1)


# ---------------------------------------------------------------------------
# growth inequalities


def test_growth_general_passes():
    rep = verify_growth_inequalities("general", 4, 2, f=5)
    assert rep.passed and rep.failure is None
    assert rep.checked == {"codimension_gap": 6, "allowance": 101}


def test_growth_skew_passes():
    rep = verify_growth_inequalities("skew", 8, 3)
    assert rep.passed
    assert rep.checked["codimension_gap"] == 10


def test_growth_rejects_bad_shapes():
    with pytest.raises(ValueError):
        verify_growth_inequalities("general", 4, 2)          # missing f
    with pytest.raises(ValueError):
        verify_growth_inequalities("general", 4, 4, f=5)     # r = e
    with pytest.raises(ValueError):
        verify_growth_inequalities("skew", 8, 3, f=9)
    with pytest.raises(ValueError):
        verify_growth_inequalities("skew", 7, 3)             # e < 2r + 2
    with pytest.raises(ValueError):
        verify_growth_inequalities("orthogonal", 4, 2)


def test_growth_sweep_small():
    rep = verify_growth_sweep(6, 50)
    assert rep.passed, rep.failure
    assert set(rep.checked) == {"general_gap", "skew_gap",
                                "general_allowance", "skew_allowance"}
    assert rep.checked["general_allowance"] == 51


# ---------------------------------------------------------------------------
# Betti tables of loci


def test_betti_degeneracy_frozen():
    table = betti_degeneracy(AmbientData.projective_space(10), 3, 3, 2)
    assert table.valid_below == 9
    assert dict(table.entries) == {0: 1, 2: 2, 4: 3, 6: 3, 8: 3}
    assert table.rank(1) == 0
    with pytest.raises(OutsideValidityError):
        table.rank(9)
    assert table.rank_or_none(9) is None


def test_betti_degeneracy_validity_clamps_at_zero():
    table = betti_degeneracy(AmbientData.projective_space(2), 3, 4, 1)
    assert table.valid_below == 0
    assert table.entries == {}


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3),
       st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=4))
def test_betti_degeneracy_matches_enumeration(r, extra_e, dim_n, genus):
    e = r + extra_e
    f = e + 1
    ambient = AmbientData.abelian_variety(genus) if dim_n > 6 \
        else AmbientData.projective_space(dim_n)
    table = betti_degeneracy(ambient, e, f, r)
    for p in range(table.valid_below):
        expected = sum(
            ambient.h(p - 2 * q) * len(partitions_upto(q, r, e - r))
            for q in range(p // 2 + 1)
        )
        assert table.rank(p) == expected


def test_ample_section_keeps_ambient_betti():
    ambient = AmbientData.abelian_variety(3)
    table = betti_degeneracy(ambient, 1, 1, 0)
    assert table.valid_below == ambient.dim - 1
    for p in range(table.valid_below):
        assert table.rank(p) == ambient.h(p)


def test_betti_skew_frozen_and_reduction():
    ambient = AmbientData.projective_space(8)
    table = betti_skew(ambient, 4, 1)
    # codim C(2,2) = 1; shifts of 4 per box with parts <= 1
    assert table.valid_below == 7
    assert dict(table.entries) == {0: 1, 2: 1, 4: 2, 6: 2}
    base = betti_degeneracy(ambient, 1, 1, 0)
    zero_rank = betti_skew(ambient, 2, 0)
    assert zero_rank.valid_below == base.valid_below
    assert dict(zero_rank.entries) == dict(base.entries)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3),
       st.integers(min_value=1, max_value=8))
def test_betti_skew_matches_enumeration(r, slack, dim_n):
    e = 2 * r + slack
    ambient = AmbientData.projective_space(dim_n)
    table = betti_skew(ambient, e, r)
    for p in range(table.valid_below):
        expected = sum(
            ambient.h(p - 4 * q) * len(partitions_upto(q, r, None))
            for q in range(p // 4 + 1)
        )
        assert table.rank(p) == expected


def test_betti_parity_follows_ambient():
    table = betti_degeneracy(AmbientData.projective_space(12), 4, 5, 2)
    assert all(p % 2 == 0 for p in table.entries)


def test_betti_orthogonal_special():
    even = betti_orthogonal_special(AmbientData.projective_space(20), "even")
    assert even.valid_below == 5
    assert dict(even.entries) == {0: 1, 2: 1, 4: 2}
    odd = betti_orthogonal_special(AmbientData.projective_space(9), "odd")
    assert odd.valid_below == 5
    assert dict(odd.entries) == {0: 1, 2: 1, 4: 2}
    tight = betti_orthogonal_special(AmbientData.projective_space(9), "even")
    assert tight.valid_below == 0
    assert tight.entries == {}
    with pytest.raises(ValueError):
        betti_orthogonal_special(AmbientData.point(), "generic")


def test_skew_to_orthogonal():
    assert skew_to_orthogonal(6, 2) == (2, 1)
    assert skew_to_orthogonal(7, 2) == (3, 3)
    assert skew_to_orthogonal(4, 2) == (0, 0)
    with pytest.raises(ValueError):
        skew_to_orthogonal(3, 2)


# ---------------------------------------------------------------------------
# fibrations


def test_fibration_over_point_is_the_fiber():
    table = fibration_betti(AmbientData.point(), GrassmannBundle(2, 4))
    assert dict(table.entries) == {0: 1, 2: 1, 4: 2, 6: 1, 8: 1}
    assert table.valid_below is None
    lag = fibration_betti(AmbientData.point(), LagrangianBundle(2))
    assert dict(lag.entries) == {0: 1, 2: 1, 4: 1, 6: 1}


def test_fibration_tower_matches_product():
    # a tower of two line bundles over P^1 has the Poincare polynomial of
    # (P^1)^3 regardless of twisting
    base = AmbientData.projective_space(1)
    tower = fibration_ambient(fibration_ambient(base, GrassmannBundle(1, 2)),
                              GrassmannBundle(1, 2))
    assert tower.dim == 3
    expected = [0] * 7
    for a in range(2):
        for b in range(2):
            for c in range(2):
                expected[2 * (a + b + c)] += 1
    assert list(tower.betti) == expected


def test_fibration_betti_total_is_product_of_totals():
    base = AmbientData.abelian_variety(2)
    fiber = LagrangianBundle(3)
    total = fibration_ambient(base, fiber)
    assert total.dim == base.dim + 6
    assert sum(total.betti) == sum(base.betti) * 2 ** 3


def test_fibration_bundle_validation():
    with pytest.raises(ValueError):
        GrassmannBundle(3, 2)
    with pytest.raises(ValueError):
        LagrangianBundle(-1)


# ---------------------------------------------------------------------------
# serialization


def test_betti_table_serialization():
    table = betti_degeneracy(AmbientData.projective_space(6), 2, 2, 1)
    obj = table.to_json_obj()
    json.dumps(obj)
    assert obj["valid_below"] == table.valid_below
    assert obj["betti"] == table.as_pairs()
    assert "rank < r locus is empty" in obj["assumptions"]
    csv = table.to_csv()
    assert csv.splitlines()[0] == "degree,rank"
