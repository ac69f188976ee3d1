import itertools
import random

import pytest

from subsemi.permgroup import (
    PermGroup, identity_perm, invert_perm, multiply_perm, perm_order)


def naive_elements(degree, gens):
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = multiply_perm(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def eval_word(degree, gens, word):
    acc = identity_perm(degree)
    for j in word:
        acc = multiply_perm(acc, gens[j])
    return acc


def test_perm_helpers():
    assert multiply_perm((1, 0, 2), (0, 2, 1)) == (2, 0, 1)
    assert invert_perm((1, 2, 0)) == (2, 0, 1)
    assert perm_order((1, 2, 0)) == 3
    assert perm_order(identity_perm(4)) == 1


def test_symmetric_group_3():
    G = PermGroup.from_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert G.order() == 6
    for p in itertools.permutations(range(3)):
        assert G.contains(tuple(p))


def test_trivial_and_identity_generators():
    G = PermGroup(3)
    assert G.order() == 1
    assert G.contains((0, 1, 2))
    assert not G.contains((1, 0, 2))
    H = PermGroup.from_generators(3, [(0, 1, 2)])
    assert H.order() == 1


def test_group_of_the_transformation_example():
    # the two permutation generators of the running example generate a
    # group of order 12 on five points
    G = PermGroup.from_generators(5, [(0, 2, 1, 3, 4), (1, 2, 0, 4, 3)])
    assert G.order() == 12


def test_factorize_words_use_generator_indices():
    gens = [(1, 0, 2, 3), (1, 2, 3, 0)]
    G = PermGroup.from_generators(4, gens)
    rng = random.Random(1)
    elems = sorted(naive_elements(4, gens))
    for p in rng.sample(elems, 10):
        word = G.factorize(p)
        assert eval_word(4, gens, word) == p


def test_factorize_rejects_outsiders():
    from subsemi.permgroup import NotInGroup
    C4 = PermGroup.from_generators(4, [(1, 2, 3, 0)])
    assert C4.order() == 4
    with pytest.raises(NotInGroup):
        C4.factorize((1, 0, 2, 3))
    with pytest.raises(NotInGroup):
        C4.factorize((1, 0))


def test_against_naive_enumeration():
    rng = random.Random(5)
    for trial in range(30):
        degree = rng.randint(1, 6)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = list(range(degree))
            rng.shuffle(p)
            gens.append(tuple(p))
        G = PermGroup.from_generators(degree, gens)
        elems = naive_elements(degree, gens)
        assert G.order() == len(elems)
        universe = [tuple(p) for p in itertools.permutations(range(degree))]
        for p in universe:
            assert G.contains(p) == (p in elems)
            if p in elems:
                assert eval_word(degree, gens, G.factorize(p)) == p


def test_transversals_cover_the_group():
    rng = random.Random(11)
    for trial in range(20):
        degree = rng.randint(2, 6)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = list(range(degree))
            rng.shuffle(p)
            gens.append(tuple(p))
        G = PermGroup.from_generators(degree, gens)
        elems = naive_elements(degree, gens)
        sub = PermGroup.from_generators(degree, [rng.choice(sorted(elems))])
        subels = {p for p in elems if sub.contains(p)}
        left = G.left_transversal(sub)
        right = G.right_transversal(sub)
        assert len(left) == len(right) == G.order() // sub.order()
        assert {multiply_perm(c, s) for c in left for s in subels} == elems
        assert {multiply_perm(s, c) for c in right for s in subels} == elems


def test_intersection():
    rng = random.Random(23)
    for trial in range(20):
        degree = rng.randint(1, 5)
        universe = [tuple(p) for p in itertools.permutations(range(degree))]

        def rand_group():
            gens = []
            for _ in range(rng.randint(1, 2)):
                p = list(range(degree))
                rng.shuffle(p)
                gens.append(tuple(p))
            return PermGroup.from_generators(degree, gens)

        G, H = rand_group(), rand_group()
        I = G.intersection(H)
        both = {p for p in universe if G.contains(p) and H.contains(p)}
        assert I.order() == len(both)
        for p in universe:
            assert I.contains(p) == (p in both)


def test_intersection_words_evaluate_in_the_smaller_operand():
    G = PermGroup.from_generators(4, [(1, 0, 2, 3), (0, 2, 1, 3)])
    H = PermGroup.from_generators(4, [(1, 2, 0, 3), (1, 0, 3, 2)])
    I = G.intersection(H)
    small = G if G.order() <= H.order() else H
    for perm, word in zip(I.gens, I.words):
        assert eval_word(4, list(small.gens), word) == perm
