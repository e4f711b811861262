"""Deliberately naive census oracle.

Shares no code with the package: plain nested loops over ordered sequences,
an admissibility predicate written out rule by rule, and deduplication by
sorting the multiset slots into a hashable key.  Keys have the shape

    (b, epsilon, g, f, k1, t, k2, s, k3, seifert, r, q)

with seifert a sorted tuple of (alpha, beta) pairs and r, q sorted tuples.
"""

from math import gcd

EPSILONS = ("o1", "o2", "n1", "n2", "n3", "n4", "o", "n")
FLOOR = {"o1": 0, "o2": 1, "n1": 1, "n2": 1, "n3": 2, "n4": 3, "o": 0, "n": 1}


def header_ok(eps, g, f, k1, t, k2, s, k3):
    if k1 > f or k2 > t or k3 > s:
        return False
    k = k1 + k2 + k3
    if k % 2 == 1:
        return False
    if k > 0 and eps not in ("o", "n"):
        return False
    if k == 0 and eps in ("o", "n"):
        return False
    return g >= FLOOR[eps]


def pair_ok(alpha, beta):
    return alpha >= 2 and 0 < beta < alpha and gcd(alpha, beta) == 1


def entry_ok(x):
    return x >= 2 and x % 2 == 0


def b_ok(b, eps, f, t, s, pairs):
    if f + t + s > 0:
        return b == 0
    if eps in ("o2", "n1", "n3", "n4"):
        if any(a == 2 for a, _ in pairs):
            return b == 0
        return b in (0, 1)
    return True


def ordered_sequences(items, length):
    if length == 0:
        yield ()
        return
    for head in items:
        for rest in ordered_sequences(items, length - 1):
            yield (head,) + rest


def naive_census(max_g, max_f, max_t, max_s, max_n, max_alpha, max_entry, max_abs_b):
    all_pairs = [(a, b) for a in range(2, max_alpha + 1) for b in range(1, a)]
    good_pairs = [p for p in all_pairs if pair_ok(*p)]
    entries = [x for x in range(0, max_entry + 1) if entry_ok(x)]
    seen = set()
    for eps in EPSILONS:
        for g in range(max_g + 1):
            for f in range(max_f + 1):
                for k1 in range(max_f + 1):
                    for t in range(max_t + 1):
                        for k2 in range(max_t + 1):
                            for s in range(max_s + 1):
                                for k3 in range(max_s + 1):
                                    if not header_ok(eps, g, f, k1, t, k2, s, k3):
                                        continue
                                    for n in range(max_n + 1):
                                        for pairs in ordered_sequences(good_pairs, n):
                                            for r in ordered_sequences(entries, s - k3):
                                                for q in ordered_sequences(entries, k3):
                                                    for b in range(-max_abs_b, max_abs_b + 1):
                                                        if not b_ok(b, eps, f, t, s, pairs):
                                                            continue
                                                        seen.add((
                                                            b, eps, g, f, k1, t, k2, s, k3,
                                                            tuple(sorted(pairs)),
                                                            tuple(sorted(r)),
                                                            tuple(sorted(q)),
                                                        ))
    return seen


def key_of(tup):
    """Oracle key of a package tuple, read through its public fields only."""
    return (
        tup.b.value,
        tup.epsilon.value,
        tup.g,
        tup.f, tup.k1, tup.t, tup.k2, tup.s, tup.k3,
        tuple(sorted((p.alpha, p.beta) for p in tup.seifert)),
        tuple(sorted(tup.r)),
        tuple(sorted(tup.q)),
    )
