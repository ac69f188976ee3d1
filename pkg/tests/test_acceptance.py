"""The ten headline checks.  The hook in conftest prints one PASS/FAIL
line per criterion after the run."""

import itertools
import random

from subsemi import classes as cl
from subsemi import elements as el
from subsemi.engine import Semigroup
from subsemi.oracle import (TooManyElements, exhaustive_closure, oracle_dorder,
                            oracle_green, oracle_idempotents, oracle_is_regular)
from subsemi.orbits import graph_sccs
from subsemi.permgroup import PermGroup, identity_perm, multiply_perm

from conftest import S_GENS, T_GENS, rand_gens, rand_perm

T_REP_KERNELS = {
    (1, 2, 3, 4, 5),
    (1, 2, 2, 3, 3),
    (1, 1, 2, 3, 3),
    (1, 2, 2, 2, 2),
    (1, 2, 1, 3, 3),
    (1, 2, 2, 1, 1),
    (1, 1, 2, 1, 1),
    (1, 1, 1, 2, 2),
    (1, 1, 2, 2, 2),
    (1, 2, 1, 1, 1),
    (1, 1, 1, 1, 1),
    (1, 2, 1, 2, 2),
}

S_LAMBDA_SCCS = {
    frozenset({(1, 2, 3, 4, 5, 6, 7, 8, 9)}): 12,
    frozenset({(2, 5, 6), (1, 4, 7)}): 6,
    frozenset({(1, 2, 3), (4, 6, 8), (5, 7, 9)}): 6,
    frozenset({(t,) for t in range(1, 10)}): 1,
    frozenset({()}): 1,
}


def test_criterion_01_size_of_the_transformation_example():
    s = Semigroup(T_GENS)
    assert s.size() == 75
    assert [n for _, n in s.size_breakdown()] == [12, 18, 42, 3]


def test_criterion_02_representatives_of_the_transformation_example():
    s = Semigroup(T_GENS)
    assert len(s.reps) == 12
    assert {el.rho_value(r.elt) for r in s.reps} == T_REP_KERNELS
    closure = exhaustive_closure(T_GENS)
    rmap = {}
    for c, members in enumerate(oracle_green(closure, "R")):
        for i in members:
            rmap[closure[0][i]] = c
    assert len({rmap[r.elt] for r in s.reps}) == 12
    assert len(graph_sccs(s.G)[1]) == 5


def test_criterion_03_lambda_orbit_of_the_transformation_example():
    s = Semigroup(T_GENS)
    assert len(s.lam.values) == 8
    shape = sorted((len(scc), s.lam.scc_stabiliser(sid).order())
                   for sid, scc in enumerate(s.lam.sccs))
    assert shape == [(1, 6), (1, 12), (3, 1), (3, 2)]


def test_criterion_04_size_of_the_pperm_example_in_both_modes():
    generic = Semigroup(S_GENS, "generic")
    inverse = Semigroup(S_GENS, "inverse")
    assert generic.size() == 172
    assert inverse.size() == 172
    assert generic.nr_classes("R") == 16
    assert len(generic.lam.values) == 16
    found = {}
    for sid, scc in enumerate(generic.lam.sccs):
        key = frozenset(generic.lam.values[p] for p in scc)
        found[key] = generic.lam.scc_stabiliser(sid).order()
    assert found == S_LAMBDA_SCCS


def test_criterion_05_rclass_of_x1x3x4():
    s = Semigroup(S_GENS)
    y = s.evaluate((0, 2, 3))
    rec = cl.make_rclass_record(y, s.lam, s.rho)
    assert cl.rclass_size(rec) == 9
    listed = set()
    for tau in range(1, 10):
        img = [0] * 9
        img[1] = tau
        listed.add(el.PartialPerm(img))
    assert set(cl.rclass_elements(rec)) == listed
    drec = cl.make_dclass_record(y, s.lam, s.rho)
    assert cl.dclass_size(drec) == 81
    rrecs = cl.rclasses_of_dclass(drec)
    assert len(rrecs) == 9
    # one R-class per singleton domain, jointly covering the rank-one layer
    assert {el.rho_value(rr.rep) for rr in rrecs} == {(d,) for d in range(1, 10)}
    covered = set()
    for rr in rrecs:
        covered |= set(cl.rclass_elements(rr))
    rank_one = set()
    for d in range(9):
        for tau in range(1, 10):
            img = [0] * 9
            img[d] = tau
            rank_one.add(el.PartialPerm(img))
    assert covered == rank_one


def test_criterion_06_membership_goldens():
    t = Semigroup(T_GENS)
    stranger = el.Transformation([1, 2, 3, 3, 1])
    assert t.lam.lookup(el.lambda_value(stranger)) is not None
    assert t.rho.lookup(el.rho_value(stranger)) is None
    assert not t.contains(stranger)
    assert t.contains(el.Transformation([2, 3, 3, 2, 2]))
    s = Semigroup(S_GENS)
    probe = el.PartialPerm([5, 7, 9, 0, 0, 0, 0, 0, 0])
    rec3 = cl.make_rclass_record(S_GENS[2], s.lam, s.rho)
    rec4 = cl.make_rclass_record(S_GENS[3], s.lam, s.rho)
    assert not cl.rclass_contains(rec3, probe)
    assert cl.rclass_contains(rec4, probe)


def test_criterion_07_factorization_soundness():
    rng = random.Random(7)
    for gens in (T_GENS, S_GENS):
        s = Semigroup(gens)
        for _ in range(100):
            word = tuple(rng.randrange(len(gens))
                         for _ in range(rng.randint(1, 12)))
            x = s.evaluate(word)
            assert s.evaluate(s.factorize(x)) == x
    t = Semigroup(T_GENS)
    y = el.Transformation([2, 3, 3, 2, 2])
    assert t.evaluate(t.factorize(y)) == y


def compare_with_oracle(s, closure):
    elements = closure[0]
    assert s.size() == len(elements)
    for which in "RLHD":
        assert s.nr_classes(which) == len(oracle_green(closure, which))
    assert len(s.idempotents()) == len(oracle_idempotents(closure))
    assert s.is_regular_semigroup() == oracle_is_regular(closure)
    dclasses, leq = oracle_dorder(closure)
    dmap = {}
    for d, members in enumerate(dclasses):
        for i in members:
            dmap[elements[i]] = d
    trans = {}
    for x in elements:
        a = s.dclass_of(x)
        assert a is not None
        assert trans.setdefault(a, dmap[x]) == dmap[x]
    order = s.dclass_partial_order()
    assert order.n == len(dclasses) == len(trans)
    assert {(trans[a], trans[b]) for a, b in order.leq} == leq


def test_criterion_08_oracle_equivalence():
    rng = random.Random(88)
    counts = dict.fromkeys("tpbr", 0)
    attempt = 0
    while min(counts.values()) < 50:
        kind = "tpbr"[attempt % 4]
        attempt += 1
        if counts[kind] >= 50:
            continue
        if kind in ("t", "p"):
            gens = rand_gens(rng, kind, degree=rng.randint(2, 6))
        elif kind == "b":
            gens = rand_gens(rng, kind, degree=rng.randint(2, 4))
        else:
            gens = rand_gens(rng, kind)
        try:
            closure = exhaustive_closure(gens, cap=6000)
        except TooManyElements:
            continue
        compare_with_oracle(Semigroup(gens), closure)
        counts[kind] += 1
    assert sum(counts.values()) >= 200


def test_criterion_09_closure_equivalence():
    rng = random.Random(909)
    for trial in range(50):
        kind = "tpbr"[trial % 4]
        gens = rand_gens(rng, kind, count=rng.randint(2, 4))
        cut = rng.randrange(1, len(gens))
        grown = Semigroup(gens[:cut]).closure(gens[cut:])
        fresh = Semigroup(gens)
        assert grown.size() == fresh.size()
        for which in "RLHD":
            assert grown.nr_classes(which) == fresh.nr_classes(which)
        assert set(grown.idempotents()) == set(fresh.idempotents())
        assert grown.is_regular_semigroup() == fresh.is_regular_semigroup()
        trans = {}
        for r in grown.reps:
            b = fresh.dclass_of(r.elt)
            assert b is not None
            assert trans.setdefault(grown.dclass_of(r.elt), b) == b
        go = grown.dclass_partial_order()
        fo = fresh.dclass_partial_order()
        assert go.n == fo.n == len(trans)
        assert {(trans[a], trans[b]) for a, b in go.leq} == fo.leq


def naive_perm_closure(degree, gens):
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


def eval_perm_word(degree, gens, word):
    acc = identity_perm(degree)
    for j in word:
        acc = multiply_perm(acc, gens[j])
    return acc


def test_criterion_10_perm_group_core():
    rng = random.Random(10)
    for trial in range(50):
        degree = rng.randint(1, 5)
        gens = [rand_perm(rng, degree) for _ in range(rng.randint(1, 3))]
        G = PermGroup.from_generators(degree, gens)
        elems = naive_perm_closure(degree, gens)
        assert G.order() == len(elems)
        for p in itertools.permutations(range(degree)):
            assert G.contains(tuple(p)) == (tuple(p) in elems)
        for p in elems:
            assert eval_perm_word(degree, gens, G.factorize(p)) == p
        sub_gens = [rng.choice(sorted(elems)) for _ in range(2)]
        H = PermGroup.from_generators(degree, sub_gens)
        sub = naive_perm_closure(degree, sub_gens)
        left = G.left_transversal(H)
        assert len(left) == len(elems) // len(sub)
        assert {multiply_perm(c, h) for c in left for h in sub} == elems
        right = G.right_transversal(H)
        assert {multiply_perm(h, c) for c in right for h in sub} == elems
        other_gens = [rand_perm(rng, degree) for _ in range(2)]
        K = PermGroup.from_generators(degree, other_gens)
        both = elems & naive_perm_closure(degree, other_gens)
        inter = G.intersection(K)
        assert inter.order() == len(both)
        assert all(inter.contains(p) for p in both)
