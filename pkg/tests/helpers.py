"""Shared strategies and builders for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from alexcircle import Bounds, InvariantTuple, random_valid

T = InvariantTuple.build

# Wider than the acceptance census so random tuples hit every regime.
WIDE = Bounds(max_g=3, max_f=3, max_t=3, max_s=3, max_n=3, max_alpha=7, max_singular_entry=6, max_abs_b=3)
CENSUS = Bounds(max_g=2, max_f=2, max_t=2, max_s=2, max_n=2, max_alpha=5, max_singular_entry=4, max_abs_b=2)

seeds = st.integers(min_value=0, max_value=2**64 - 1)
valid_tuples = seeds.map(lambda s: random_valid(s, WIDE))


def shuffled(tup: InvariantTuple, rng: random.Random) -> InvariantTuple:
    """Same tuple with the Seifert, r and q multisets permuted."""
    seifert, r, q = list(tup.seifert), list(tup.r), list(tup.q)
    rng.shuffle(seifert)
    rng.shuffle(r)
    rng.shuffle(q)
    return tup.replace(seifert=seifert, r=r, q=q)
