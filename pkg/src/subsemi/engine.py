"""Enumeration engine.

A semigroup given by generators is decomposed into R-classes: one
representative per class, each rectified so its lambda value sits at
the anchor point of its scc in the lambda orbit.  New candidates
x_j . y_l are recognised by a rho value bucket, an scc check, and a
coset test against the stabiliser group, so the element set itself is
never listed.  The left Cayley graph on representatives (G) carries the
D-class structure.
"""

from collections import deque

from . import classes as cl
from . import elements as el
from .orbits import Orbit, graph_sccs


class ModeViolation(ValueError):
    pass


class NotAnElement(ValueError):
    pass


def _kind_inverse(x):
    if isinstance(x, el.PartialPerm):
        return x.inverse()
    if isinstance(x, el.Bipartition):
        return x.star()
    raise ModeViolation("inverse mode needs partial perms or bipartitions")


class RepRecord:
    __slots__ = ("elt", "v", "w", "seed_gen", "k", "scc", "lam_pt", "rho_pt",
                 "stab", "wkinv")

    def __init__(self, elt, v, w, seed_gen, k, scc, lam_pt, rho_pt, stab, wkinv):
        self.elt = elt
        self.v = v
        self.w = w
        self.seed_gen = seed_gen
        self.k = k
        self.scc = scc
        self.lam_pt = lam_pt
        self.rho_pt = rho_pt
        self.stab = stab
        self.wkinv = wkinv


class DOrder:
    """Partial order on D-classes: leq holds pairs (a, b) with D_a <= D_b
    (reflexive), hasse holds cover edges (upper, lower)."""

    def __init__(self, n, leq, hasse):
        self.n = n
        self.leq = leq
        self.hasse = hasse


_safe_weak_inverse = cl.safe_weak_inverse


class Semigroup:
    def __init__(self, gens, mode="generic"):
        gens = list(gens)
        if not gens:
            raise el.ElementError("need at least one generator")
        if mode not in ("generic", "regular", "inverse"):
            raise ValueError("mode must be generic, regular or inverse")
        kind = el.kind_of(gens[0])
        for x in gens[1:]:
            if el.kind_of(x) != kind:
                raise el.ElementError("generators are of mixed kinds")
        self.X = gens
        self.kind = kind
        self.mode = mode
        if mode == "inverse":
            inv = [_kind_inverse(x) for x in gens]
            self.lam = Orbit(gens, [(el.lambda_value(x), g) for g, x in enumerate(gens)],
                             "right", kind=kind)
            self.rho = Orbit(gens, [(el.lambda_value(inv[g]), g) for g in range(len(gens))],
                             "left", action=lambda v, j: el.act_lambda(v, inv[j]),
                             kind=kind)
        else:
            self.lam = Orbit(gens, [(el.lambda_value(x), g) for g, x in enumerate(gens)],
                             "right", kind=kind)
            self.rho = Orbit(gens, [(el.rho_value(x), g) for g, x in enumerate(gens)],
                             "left", kind=kind)
        self.reps = []
        self.G = []
        self.rho_index = {}
        self._rep_word_cache = {}
        self._dscc_cache = None
        self._danchor_cache = {}
        self._dorder_cache = None
        if mode == "generic":
            self._enumerate_generic()
        else:
            self._enumerate_by_rho()
            self._verify_mode()

    # ----- enumeration -----

    def _locate_or_add(self, q, parent, genlab, seed_gen):
        k = self.lam.lookup(el.lambda_value(q))
        sid = self.lam.scc_of[k]
        _, ub = self.lam.rect_elts(k)
        y = el.multiply(q, ub)
        rho_pt = self.rho.lookup(el.rho_value(y))
        bucket = self.rho_index.setdefault(rho_pt, [])
        for l in bucket:
            r = self.reps[l]
            if r.scc == sid and r.stab.contains(el.mu(r.elt, el.multiply(r.wkinv, y))):
                return l
        idx = len(self.reps)
        self.reps.append(RepRecord(y, parent, genlab, seed_gen, k, sid,
                                   self.lam.scc_rep(sid), rho_pt,
                                   self.lam.scc_stabiliser(sid),
                                   _safe_weak_inverse(y)))
        self.G.append([None] * len(self.X))
        bucket.append(idx)
        return idx

    def _enumerate_generic(self):
        for g, x in enumerate(self.X):
            self._locate_or_add(x, None, None, g)
        l = 0
        while l < len(self.reps):
            for j in range(len(self.X)):
                if self.G[l][j] is None:
                    q = el.multiply(self.X[j], self.reps[l].elt)
                    self.G[l][j] = self._locate_or_add(q, l, j, None)
            l += 1

    def _enumerate_by_rho(self):
        """Regular and inverse modes: one representative per rho orbit point,
        built along the rho Schreier forest with no duplicate search."""
        rep_of = [None] * len(self.rho.values)
        for pt in range(len(self.rho.values)):
            if self.rho.parent[pt] is None:
                g = self.rho.seed_gen[pt]
                q = self.X[g]
                parent, lab, seed = None, None, g
            else:
                pp = self.rho.parent[pt]
                lab = self.rho.label[pt]
                parent = rep_of[pp]
                q = el.multiply(self.X[lab], self.reps[parent].elt)
                seed = None
            k = self.lam.lookup(el.lambda_value(q))
            sid = self.lam.scc_of[k]
            _, ub = self.lam.rect_elts(k)
            y = el.multiply(q, ub)
            idx = len(self.reps)
            self.reps.append(RepRecord(y, parent, lab, seed, k, sid,
                                       self.lam.scc_rep(sid), pt,
                                       self.lam.scc_stabiliser(sid),
                                       _safe_weak_inverse(y)))
            rep_of[pt] = idx
            self.rho_index[pt] = [idx]
        for rec in self.reps:
            self.G.append([rep_of[self.rho.graph[rec.rho_pt][j]]
                           for j in range(len(self.X))])

    def _verify_mode(self):
        if self.mode == "inverse":
            for x in self.X:
                if not self.contains(_kind_inverse(x)):
                    raise ModeViolation("a generator's inverse is missing")
        for l in range(len(self.reps)):
            if not cl.rclass_is_regular(self._rclass_record(l)):
                raise ModeViolation("an R-class is not regular")

    # ----- structure queries -----

    def size(self):
        return sum(r.stab.order() * len(self.lam.sccs[r.scc]) for r in self.reps)

    def size_breakdown(self):
        """(lambda scc id, subtotal) pairs, ordered by scc id."""
        by = {}
        for r in self.reps:
            by[r.scc] = by.get(r.scc, 0) + r.stab.order() * len(self.lam.sccs[r.scc])
        return sorted(by.items())

    def _locate(self, y):
        if isinstance(y, el.FormalIdentity) or el.kind_of(y) != self.kind:
            return None
        k = self.lam.lookup(el.lambda_value(y))
        if k is None:
            return None
        rho_pt = self.rho.lookup(el.rho_value(y))
        if rho_pt is None:
            return None
        sid = self.lam.scc_of[k]
        _, ub = self.lam.rect_elts(k)
        y2 = el.multiply(y, ub)
        for l in self.rho_index.get(rho_pt, ()):
            r = self.reps[l]
            if r.scc != sid:
                continue
            g = el.mu(r.elt, el.multiply(r.wkinv, y2))
            if r.stab.contains(g):
                return l, g, k
        return None

    def contains(self, y):
        return self._locate(y) is not None

    def _rep_word(self, l):
        stack = []
        cur = l
        while cur is not None and cur not in self._rep_word_cache:
            stack.append(cur)
            cur = self.reps[cur].v
        while stack:
            i = stack.pop()
            r = self.reps[i]
            if r.v is None:
                base = (r.seed_gen,)
            else:
                base = (r.w,) + self._rep_word_cache[r.v]
            self._rep_word_cache[i] = base + self.lam.pullback_word(r.k)
        return self._rep_word_cache[l]

    def factorize(self, y):
        """Word over the generators (0-based indices) whose product is y."""
        loc = self._locate(y)
        if loc is None:
            raise NotAnElement("element is not in the semigroup")
        l, g, k = loc
        r = self.reps[l]
        word = self._rep_word(l) + r.stab.factorize(g) \
            + self.lam.trace_within_scc(r.lam_pt, k)
        return word

    def evaluate(self, word):
        return self.lam.eval_word(word)

    def _rclass_record(self, l):
        r = self.reps[l]
        return cl.RClassRecord(r.elt, self.lam, self.rho, r.scc, r.rho_pt,
                               r.stab, r.wkinv)

    def rclass_records(self):
        return [self._rclass_record(l) for l in range(len(self.reps))]

    def idempotents(self):
        out = []
        for l in range(len(self.reps)):
            out.extend(cl.rclass_idempotents(self._rclass_record(l)))
        return out

    def is_regular_semigroup(self):
        if any(len(b) > 1 for b in self.rho_index.values()):
            return False
        return all(cl.rclass_is_regular(self._rclass_record(l))
                   for l in range(len(self.reps)))

    # ----- D-classes -----

    def _dsccs(self):
        if self._dscc_cache is None:
            self._dscc_cache = graph_sccs(self.G)
        return self._dscc_cache

    def _danchor(self, did):
        if did not in self._danchor_cache:
            scc_of, sccs = self._dsccs()
            rep = self.reps[sccs[did][0]].elt
            self._danchor_cache[did] = cl.make_dclass_record(rep, self.lam, self.rho)
        return self._danchor_cache[did]

    def dclass_of(self, y):
        loc = self._locate(y)
        if loc is None:
            return None
        return self._dsccs()[0][loc[0]]

    def nr_classes(self, which):
        scc_of, sccs = self._dsccs()
        if which == "R":
            return len(self.reps)
        if which == "D":
            return len(sccs)
        if which == "L":
            return sum(cl.nr_lclasses_of_dclass(self._danchor(d))
                       for d in range(len(sccs)))
        if which == "H":
            return sum(len(sccs[d]) * cl.nr_lclasses_of_dclass(self._danchor(d))
                       for d in range(len(sccs)))
        raise ValueError("which must be R, L, H or D")

    def dclass_partial_order(self):
        if self._dorder_cache is not None:
            return self._dorder_cache
        scc_of, sccs = self._dsccs()
        nd = len(sccs)
        edges = [set() for _ in range(nd)]
        for d, members in enumerate(sccs):
            for l in members:
                for j in range(len(self.X)):
                    d2 = scc_of[self.G[l][j]]
                    if d2 != d:
                        edges[d].add(d2)
            for lrec in cl.lclasses_of_dclass(self._danchor(d)):
                for j in range(len(self.X)):
                    loc = self._locate(el.multiply(lrec.rep, self.X[j]))
                    d2 = scc_of[loc[0]]
                    if d2 != d:
                        edges[d].add(d2)
        leq = set()
        for b in range(nd):
            seen = {b}
            queue = deque([b])
            while queue:
                c = queue.popleft()
                for d in edges[c]:
                    if d not in seen:
                        seen.add(d)
                        queue.append(d)
            for a in seen:
                leq.add((a, b))
        hasse = []
        for a, b in sorted(leq):
            if a == b:
                continue
            if not any(c != a and c != b and (a, c) in leq and (c, b) in leq
                       for c in range(nd)):
                hasse.append((b, a))
        self._dorder_cache = DOrder(nd, leq, hasse)
        return self._dorder_cache

    # ----- growth -----

    def closure(self, new_gens):
        """Engine for the semigroup generated by X plus new_gens.  In generic
        mode the orbits and representatives are extended in place of a fresh
        run; other modes re-enumerate."""
        for v in new_gens:
            if el.kind_of(v) != self.kind:
                raise el.ElementError("new generator of a different kind")
        fresh = []
        for v in new_gens:
            if all(v != x for x in self.X) and all(v != f for f in fresh):
                fresh.append(v)
        if not fresh:
            return self
        if self.mode != "generic":
            return Semigroup(self.X + fresh, self.mode)
        return Semigroup._closed(self, fresh)

    @classmethod
    def _closed(cls, old, fresh):
        self = cls.__new__(cls)
        m0 = len(old.X)
        self.X = old.X + fresh
        self.kind = old.kind
        self.mode = "generic"
        self.lam = old.lam.copy()
        self.lam.extend(fresh, [(el.lambda_value(v), m0 + i) for i, v in enumerate(fresh)])
        self.rho = old.rho.copy()
        self.rho.extend(fresh, [(el.rho_value(v), m0 + i) for i, v in enumerate(fresh)])
        self.reps = []
        self.G = []
        self.rho_index = {}
        self._rep_word_cache = {}
        self._dscc_cache = None
        self._danchor_cache = {}
        self._dorder_cache = None
        iota = []
        for rec in old.reps:
            if rec.v is None:
                q = self.X[rec.seed_gen]
                parent = None
            else:
                parent = iota[rec.v]
                q = el.multiply(self.X[rec.w], self.reps[parent].elt)
            iota.append(self._locate_or_add(q, parent, rec.w, rec.seed_gen))
        for l, row in enumerate(old.G):
            for j in range(m0):
                if row[j] is None:
                    continue
                tgt = iota[row[j]]
                cur = self.G[iota[l]][j]
                if cur is None:
                    self.G[iota[l]][j] = tgt
                else:
                    assert cur == tgt
        for i, v in enumerate(fresh):
            self._locate_or_add(v, None, None, m0 + i)
        l = 0
        while l < len(self.reps):
            for j in range(len(self.X)):
                if self.G[l][j] is None:
                    q = el.multiply(self.X[j], self.reps[l].elt)
                    self.G[l][j] = self._locate_or_add(q, l, j, None)
            l += 1
        return self


def enumerate_semigroup(gens, mode="generic"):
    return Semigroup(gens, mode)
