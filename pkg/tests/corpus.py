"""Seeded random monomial ideals for the property and acceptance suites."""

import random

from sympow import AmbientRing, MonomialIdeal

NAMES = ("x", "y", "z", "w", "v", "u")


def random_ideal(rng, max_vars=4, max_gens=5, max_exp=3, squarefree=False, min_vars=1):
    n = rng.randint(min_vars, max_vars)
    ring = AmbientRing(NAMES[:n])
    top = 1 if squarefree else max_exp
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            v = tuple(rng.randint(0, top) for _ in range(n))
            if any(v):
                gens.append(v)
        if gens:
            return MonomialIdeal(ring, gens)


def corpus(count, seed, **kw):
    rng = random.Random(seed)
    return [random_ideal(rng, **kw) for _ in range(count)]
