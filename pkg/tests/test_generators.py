import itertools
import random
from fractions import Fraction

import pytest

from warpdeg.diagram import DiagramError, parse, reverse_all, serialize
from warpdeg.generators import chain, hopf, pretzel_odd, random_diagram, torus_2p
from warpdeg.normalize import based_count
from warpdeg.verify import alternating_components, linking_number
from warpdeg.warping import d_min

from conftest import HOPF, TREFOIL

import oracles


def test_torus_small_cases():
    assert serialize(torus_2p(2)) == HOPF
    assert serialize(torus_2p(3)) == TREFOIL
    assert hopf() == torus_2p(2)
    assert linking_number(torus_2p(2), 0, 1) == 1
    assert linking_number(torus_2p(-2), 0, 1) == -1


@pytest.mark.parametrize("p", [1, 3, 5, 7, 9])
def test_torus_knot_degree(p):
    D = torus_2p(p)
    assert D.r == 1 and D.c == p
    assert d_min(D)[0] == (p - 1) // 2 == oracles.brute_knot_min(D)


def test_torus_errors():
    with pytest.raises(DiagramError):
        torus_2p(0)


def test_pretzel_examples():
    D = pretzel_odd([1, 1, 1])
    assert D.c == 3 and d_min(D)[0] == 1 == oracles.brute_knot_min(D)
    D = pretzel_odd([3, 3, 3])
    assert D.c == 9 and alternating_components(D) == [True]
    assert d_min(D)[0] == 4
    with pytest.raises(DiagramError):
        pretzel_odd([2, 3, 3])
    with pytest.raises(DiagramError):
        pretzel_odd([3, 3])


def _signed_formula(entries, c):
    eps = [1 if e > 0 else -1 for e in entries]
    return Fraction(c, 2) + sum(Fraction((-1) ** k * e, 2) for k, e in enumerate(eps))


@pytest.mark.parametrize("seed", range(25))
def test_pretzel_symmetry_and_signed_count(seed):
    rng = random.Random(seed)
    m = rng.choice([1, 3, 5])
    entries = [rng.choice([1, 3, 5]) * rng.choice([1, -1]) for _ in range(m)]
    D = pretzel_odd(entries)
    assert D.r == 1 and D.c == sum(abs(e) for e in entries)
    assert d_min(D)[0] == d_min(reverse_all(D))[0]
    # the signed based count is attained from some base on D and on -D
    target = _signed_formula(entries, D.c)
    n = len(D.components[0])
    assert target in {based_count(D, b) for b in range(n)}
    assert target in {based_count(reverse_all(D), b) for b in range(n)}


def test_pretzel_same_sign_is_alternating():
    for ns in itertools.product([1, 3], repeat=3):
        for s in (1, -1):
            D = pretzel_odd([s * n for n in ns])
            assert alternating_components(D) == [True]
            assert sum(d_min(X)[0] for X in (D, reverse_all(D))) + 1 == D.c


def test_chain():
    D = chain(4)
    assert D.r == 4 and D.c == 6
    assert [linking_number(D, i, i + 1) for i in range(3)] == [1, 1, 1]
    assert linking_number(D, 0, 2) == 0


def test_random_determinism_and_validity():
    assert random_diagram(7, 9, 3) == random_diagram(7, 9, 3)
    assert random_diagram(0, 0, 3) == parse("-\n-\n-")
    for seed in range(200):
        D = random_diagram(seed, 10, seed % 4 + 1)
        assert parse(serialize(D)) == D
        assert D.c <= 10
        E = random_diagram(seed, 10, seed % 4 + 1, linking_consistent=True)
        assert E.warnings() == []


def test_random_exact_count():
    assert random_diagram(3, 0, 2, c=5).c == 5
