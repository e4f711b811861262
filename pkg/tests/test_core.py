import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexcircle import (
    EpsilonClass,
    InvariantTuple,
    NotAdmissible,
    ObstructionTerm,
    Regime,
    SeifertPair,
    canonicalize,
    equivalent,
    fiber_space_summary,
    singular_point_count,
    validate,
)
from alexcircle.core import absorb_empty_sf_blocks, b_regime, is_canonical

from helpers import T, shuffled, valid_tuples


# -- validate ----------------------------------------------------------------

def test_f_component_forces_b_zero():
    tup = T(b=1, regime="free", f=1)
    report = validate(tup)
    assert not report.ok
    assert report.rules == {"b_regime"}


def test_empty_tuple_is_valid():
    assert validate(T()).ok


def test_n3_genus_floor():
    report = validate(T(epsilon="n3", g=1))
    assert report.rules == {"genus_floor"}


def test_odd_k():
    report = validate(T(f=1, k1=1))
    # k = 1 is odd; a k > 0 tuple would also need class o
    assert "k_parity" in report.rules
    assert report.rules <= {"k_parity", "epsilon_k"}


def test_non_coprime_pair():
    report = validate(T(seifert=[(4, 2)]))
    assert report.rules == {"seifert_coprime"}


def test_report_lists_every_rule():
    tup = T(b=3, regime="free", epsilon="n4", g=1, f=1, k1=1, seifert=[(4, 2)], r=[3])
    rules = validate(tup).rules
    assert {"genus_floor", "k_parity", "epsilon_k", "seifert_coprime", "singular_even", "singular_length", "b_regime"} <= rules


def test_validate_accepts_garbage_without_raising():
    tup = InvariantTuple(
        b="x", epsilon="p7", g=-2, census=T().census, seifert=("bad",), singular=T().singular
    )
    report = validate(tup)
    assert not report.ok
    assert {"b_regime", "epsilon_tag", "genus_range", "seifert_range"} <= report.rules


def test_negative_counts():
    report = validate(T(f=-1))
    assert "count_range" in report.rules


def test_zero_singular_entry_strict_vs_lenient():
    tup = T(f=0, s=1, r=[0])
    assert validate(tup).rules == {"singular_positive"}
    report = validate(tup, lenient=True)
    assert report.ok
    assert report.coercions
    assert report.subject == T(f=1)


def test_lenient_twisted_zero_becomes_twisted_f():
    tup = T(epsilon="o", f=1, k1=1, s=1, k3=1, q=[0])
    fixed, notes = absorb_empty_sf_blocks(tup)
    assert fixed == T(epsilon="o", f=2, k1=2)
    assert len(notes) == 1
    assert validate(fixed).ok


def test_b_regimes():
    odd = [SeifertPair(3, 1)]
    two = [SeifertPair(2, 1)]
    assert b_regime(EpsilonClass.O1, 0, 0, 0, odd) is Regime.FREE
    assert b_regime(EpsilonClass.O2, 0, 0, 0, odd) is Regime.MOD_TWO
    assert b_regime(EpsilonClass.O2, 0, 0, 0, two) is Regime.FORCED_ZERO
    assert b_regime(EpsilonClass.N2, 0, 0, 0, two) is Regime.FREE
    assert b_regime(EpsilonClass.N1, 0, 1, 0, odd) is Regime.FORCED_ZERO
    assert b_regime(EpsilonClass.O1, 0, 0, 1, odd) is Regime.FORCED_ZERO


def test_mod_two_value_range():
    assert validate(T(b=1, epsilon="o2", g=1)).ok
    assert validate(T(b=2, epsilon="o2", g=1)).rules == {"b_regime"}
    assert validate(T(b=-7, epsilon="o1", g=0)).ok


def test_stale_regime_is_a_violation():
    tup = T(b=0, epsilon="o1", regime="mod_two")
    assert validate(tup).rules == {"b_regime"}


# -- canonicalize / equivalent ---------------------------------------------

def test_canonicalize_sorts_r_list():
    tup = T(s=2, r=[4, 2])
    assert canonicalize(tup) == T(s=2, r=[2, 4])


def test_canonicalize_sorts_pairs():
    assert canonicalize(T(seifert=[(3, 1), (2, 1)])).seifert == (SeifertPair(2, 1), SeifertPair(3, 1))


def test_canonicalize_rejects_invalid():
    with pytest.raises(NotAdmissible) as info:
        canonicalize(T(f=1, k1=1))
    assert "k_parity" in info.value.report.rules


def test_equivalent_examples():
    assert equivalent(T(s=2, r=[2, 4]), T(s=2, r=[4, 2]))
    assert not equivalent(T(seifert=[(3, 1)]), T(seifert=[(3, 2)]))
    a = T(b=2, seifert=[(5, 2), (3, 1)])
    assert equivalent(a, a)


def test_equivalent_matches_field_comparison():
    # oracle: compare sorted field lists directly
    a, b = T(seifert=[(3, 1)]), T(seifert=[(3, 2)])
    fa = [sorted((p.alpha, p.beta) for p in a.seifert)]
    fb = [sorted((p.alpha, p.beta) for p in b.seifert)]
    assert (fa == fb) == equivalent(a, b)


@settings(max_examples=300)
@given(valid_tuples)
def test_canonicalize_idempotent(tup):
    c = canonicalize(tup)
    assert canonicalize(c) == c
    assert is_canonical(c)


@settings(max_examples=200)
@given(valid_tuples, st.randoms(use_true_random=False))
def test_equivalent_ignores_multiset_order(tup, rng):
    assert equivalent(tup, shuffled(tup, rng))


@settings(max_examples=200)
@given(valid_tuples)
def test_collapse_rule_and_singular_points(tup):
    assert (tup.k > 0) == (tup.epsilon in (EpsilonClass.O, EpsilonClass.N))
    count = singular_point_count(tup)
    assert count % 2 == 0
    assert (tup.s == 0) == (count == 0)


# -- singular points / fiber space -----------------------------------------

@pytest.mark.parametrize(
    "tup, expected",
    [
        (T(s=1, r=[2]), 2),
        (T(epsilon="o", s=3, k3=1, f=1, k1=1, r=[2, 4], q=[2]), 8),
        (T(), 0),
    ],
)
def test_singular_point_count(tup, expected):
    assert singular_point_count(tup) == expected


def test_fiber_space_annulus():
    summary = fiber_space_summary(T(f=2))
    assert summary.boundary_circle_count == 2
    assert summary.euler_characteristic == 0
    assert summary.orientable


def test_fiber_space_mobius():
    summary = fiber_space_summary(T(epsilon="n1", g=1, s=1, r=[2], seifert=[(3, 1)] * 3))
    assert (summary.boundary_circle_count, summary.interior_exceptional_count) == (1, 3)
    assert summary.euler_characteristic == 0
    assert not summary.orientable


def test_fiber_space_sphere():
    summary = fiber_space_summary(T())
    assert (summary.boundary_circle_count, summary.euler_characteristic) == (0, 2)


def test_obstruction_reduced_representative():
    assert ObstructionTerm(3, Regime.MOD_TWO).reduced() == ObstructionTerm(1, Regime.MOD_TWO)
    assert ObstructionTerm(3, Regime.FREE).reduced().value == 3


def test_replace_rederives_regime():
    tup = T(b=0)
    assert tup.b.regime is Regime.FREE
    assert tup.replace(f=1).b.regime is Regime.FORCED_ZERO


def test_equivalence_transitive_on_shuffles():
    rng = random.Random(7)
    base = T(epsilon="o", f=2, k1=1, s=2, k3=1, r=[2], q=[4], seifert=[(5, 2), (3, 1), (5, 1)])
    a, b, c = (shuffled(base, rng) for _ in range(3))
    assert equivalent(a, b) and equivalent(b, c) and equivalent(a, c)
