"""Permutation groups on 0-based points, with words attached to generators.

Permutations are plain tuples.  Every generator carries a word (a tuple
of caller-chosen labels) and every word the group hands back is a plain
concatenation of generator words: inverses are realised as powers, so
words stay valid in contexts where the labelled objects cannot be
inverted.
"""

from collections import deque


class NotInGroup(ValueError):
    pass


class NotASubgroup(ValueError):
    pass


class GroupTooLarge(ValueError):
    pass


def identity_perm(n):
    return tuple(range(n))


def multiply_perm(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def invert_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_order(p):
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            length += 1
            j = p[j]
        if length > 1:
            order = _lcm(order, length)
    return order


def _lcm(a, b):
    import math

    return a * b // math.gcd(a, b)


def _inverse_word(perm, word):
    return word * (perm_order(perm) - 1)


class _Level:
    def __init__(self, point):
        self.point = point
        self.transversal = {}


class PermGroup:
    """Stabiliser chain built deterministically: base points are the first
    moved points, orbits are filled breadth first."""

    def __init__(self, degree, gens_with_words=()):
        self.degree = degree
        self.gens = []
        self.words = []
        ident = identity_perm(degree)
        for perm, word in gens_with_words:
            perm = tuple(perm)
            if len(perm) != degree:
                raise ValueError("generator degree mismatch")
            if perm != ident:
                self.gens.append(perm)
                self.words.append(tuple(word))
        self.levels = []
        self._build(list(zip(self.gens, self.words)))

    @classmethod
    def from_generators(cls, degree, perms):
        """Build from bare permutations; the word of the k-th one is (k,)."""
        return cls(degree, [(p, (k,)) for k, p in enumerate(perms)])

    def _build(self, gens):
        ident = identity_perm(self.degree)
        while gens:
            point = next(p for p in range(self.degree)
                         if any(g[p] != p for g, _ in gens))
            level = _Level(point)
            level.transversal[point] = (ident, ())
            order_pts = [point]
            queue = deque([point])
            while queue:
                p = queue.popleft()
                rep, rep_word = level.transversal[p]
                for g, w in gens:
                    q = g[p]
                    if q not in level.transversal:
                        level.transversal[q] = (multiply_perm(rep, g), rep_word + w)
                        order_pts.append(q)
                        queue.append(q)
            self.levels.append(level)
            nxt = []
            seen = set()
            for p in order_pts:
                rep, rep_word = level.transversal[p]
                for g, w in gens:
                    t, t_word = level.transversal[g[p]]
                    s = multiply_perm(multiply_perm(rep, g), invert_perm(t))
                    if s != ident and s not in seen:
                        seen.add(s)
                        nxt.append((s, rep_word + w + _inverse_word(t, t_word)))
            gens = nxt

    def order(self):
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def _sift(self, perm):
        used = []
        g = perm
        for level in self.levels:
            q = g[level.point]
            if q not in level.transversal:
                return g, None
            t, t_word = level.transversal[q]
            used.append(t_word)
            g = multiply_perm(g, invert_perm(t))
        return g, used

    def contains(self, perm):
        if len(perm) != self.degree:
            return False
        residue, used = self._sift(tuple(perm))
        return used is not None and residue == identity_perm(self.degree)

    def factorize(self, perm):
        """A word over the generator labels whose product is perm."""
        if len(perm) != self.degree:
            raise NotInGroup("%r has the wrong degree" % (perm,))
        residue, used = self._sift(tuple(perm))
        if used is None or residue != identity_perm(self.degree):
            raise NotInGroup("%r is not in the group" % (perm,))
        word = ()
        for t_word in reversed(used):
            word += t_word
        return word

    def _elements_with_words(self, cap):
        ident = identity_perm(self.degree)
        out = {ident: ()}
        queue = deque([ident])
        while queue:
            e = queue.popleft()
            w = out[e]
            for g, gw in zip(self.gens, self.words):
                f = multiply_perm(e, g)
                if f not in out:
                    if len(out) >= cap:
                        raise GroupTooLarge("more than %d elements" % (cap,))
                    out[f] = w + gw
                    queue.append(f)
        return out

    def _check_subgroup(self, sub):
        if sub.degree != self.degree:
            raise NotASubgroup("degree mismatch")
        for g in sub.gens:
            if not self.contains(g):
                raise NotASubgroup("%r is not in the supergroup" % (g,))

    def left_transversal(self, sub):
        """Coset representatives, one per coset c.sub, identity first."""
        self._check_subgroup(sub)
        reps = [identity_perm(self.degree)]
        queue = deque(reps)
        target = self.order() // sub.order()
        while queue and len(reps) < target:
            r = queue.popleft()
            for g in self.gens:
                c = multiply_perm(g, r)
                if all(not sub.contains(multiply_perm(invert_perm(r2), c)) for r2 in reps):
                    reps.append(c)
                    queue.append(c)
                    if len(reps) == target:
                        break
        assert len(reps) == target
        return reps

    def right_transversal(self, sub):
        """Coset representatives, one per coset sub.c, identity first."""
        self._check_subgroup(sub)
        reps = [identity_perm(self.degree)]
        queue = deque(reps)
        target = self.order() // sub.order()
        while queue and len(reps) < target:
            r = queue.popleft()
            for g in self.gens:
                c = multiply_perm(r, g)
                if all(not sub.contains(multiply_perm(c, invert_perm(r2))) for r2 in reps):
                    reps.append(c)
                    queue.append(c)
                    if len(reps) == target:
                        break
        assert len(reps) == target
        return reps

    def intersection(self, other, cap=10 ** 6):
        """Intersection as a new group; words of the result come from the
        smaller operand.  Enumerates the smaller group, so refuses to run
        past cap elements."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        small, big = (self, other) if self.order() <= other.order() else (other, self)
        if small.order() > cap:
            raise GroupTooLarge("intersection would enumerate %d elements" % small.order())
        pairs = [(e, w) for e, w in small._elements_with_words(cap).items()
                 if big.contains(e)]
        return PermGroup(self.degree, pairs)

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, self.order())
