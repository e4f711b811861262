import pytest
from hypothesis import given, settings

from alexcircle import (
    EpsilonClass,
    ManifoldInvariants,
    NotAdmissible,
    ObstructionTerm,
    Regime,
    ReductionInconsistency,
    canonicalize,
    equivalent,
    is_manifold,
    reduce_to_manifold,
    singular_point_count,
)
from alexcircle.reduce import _check_manifold, canonical_reduction

from helpers import T, valid_tuples


def test_manifold_input_is_unchanged():
    tup = T(epsilon="o", g=1, f=2, k1=1, t=1, k2=1, seifert=[(3, 1), (5, 2)])
    result = reduce_to_manifold(tup)
    assert result.summand_count == 0
    assert result.manifold.as_tuple() == tup


def test_single_sf_block():
    result = reduce_to_manifold(T(f=1, s=1, r=[2]))
    m = result.manifold
    assert (m.b.value, m.epsilon, m.g) == (0, EpsilonClass.O1, 0)
    assert m.f_pairs == (2, 0)
    assert m.t_pairs == (0, 0)
    assert m.seifert == ()
    assert result.summand_count == 1


def test_twisted_sf_block_moves_into_twisted_f():
    result = reduce_to_manifold(T(epsilon="o", f=0, t=1, k2=1, s=2, k3=1, r=[2], q=[4]))
    assert result.manifold.f_pairs == (2, 1)
    assert result.summand_count == 3


def test_is_manifold():
    assert is_manifold(T(f=1))
    assert not is_manifold(T(s=1, r=[2]))
    rewrapped = reduce_to_manifold(T(s=1, r=[2])).manifold.as_tuple()
    assert is_manifold(rewrapped)


def test_invalid_input():
    with pytest.raises(NotAdmissible):
        reduce_to_manifold(T(f=1, k1=1))
    with pytest.raises(NotAdmissible):
        is_manifold(T(epsilon="n4", g=0))


def test_inconsistent_manifold_surfaces_loudly():
    # Not reachable from a valid tuple; exercise the guard directly.
    bad = ManifoldInvariants(
        b=ObstructionTerm(1, Regime.FORCED_ZERO), epsilon=EpsilonClass.O2, g=1,
        f_pairs=(1, 0), t_pairs=(0, 0), seifert=(),
    )
    with pytest.raises(ReductionInconsistency):
        _check_manifold(bad, T())


def test_from_tuple_rejects_singular_tuples():
    with pytest.raises(ValueError):
        ManifoldInvariants.from_tuple(T(s=1, r=[2]))


@settings(max_examples=300)
@given(valid_tuples)
def test_reduction_laws(tup):
    result = reduce_to_manifold(tup)
    m = result.manifold
    assert (m.epsilon, m.g, m.t_pairs, m.seifert) == (tup.epsilon, tup.g, (tup.t, tup.k2), tup.seifert)
    assert m.f_pairs == (tup.f + tup.s, tup.k1 + tup.k3)
    assert 2 * result.summand_count == singular_point_count(tup)
    assert m.validate().ok
    again = reduce_to_manifold(m.as_tuple())
    assert again.manifold == m
    assert again.summand_count == 0


@settings(max_examples=100)
@given(valid_tuples)
def test_equivalent_tuples_reduce_alike(tup):
    shuffled = tup.replace(seifert=tup.seifert[::-1], r=tup.r[::-1], q=tup.q[::-1])
    assert equivalent(tup, shuffled)
    assert canonical_reduction(tup) == canonical_reduction(shuffled)
    plain = reduce_to_manifold(shuffled).manifold.as_tuple()
    assert canonicalize(plain) == canonical_reduction(tup).manifold.as_tuple()
