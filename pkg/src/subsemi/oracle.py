"""Brute force reference implementations.

Everything here enumerates the whole subsemigroup and reads the answer
off the Cayley graphs.  It exists to cross-check the orbit based
machinery on small inputs; nothing in the main code path depends on it.
"""

from collections import deque

from .elements import multiply


class TooManyElements(ValueError):
    pass


def exhaustive_closure(gens, cap=200000):
    """All products of the generators.

    Returns (elements, right, left): elements is a list starting with the
    distinct generators, right[i][k] is the index of elements[i] * gens[k]
    and left[i][k] the index of gens[k] * elements[i].
    """
    gens = list(gens)
    index = {}
    elements = []
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    right = []
    i = 0
    while i < len(elements):
        row = []
        for g in gens:
            y = multiply(elements[i], g)
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise TooManyElements("closure has more than %d elements" % cap)
                j = len(elements)
                index[y] = j
                elements.append(y)
            row.append(j)
        right.append(row)
        i += 1
    left = [[index[multiply(g, x)] for g in gens] for x in elements]
    return elements, right, left


def _sccs(adj):
    """Strongly connected components of adj (list of neighbour lists).
    Returns a component id per node; ids are renumbered so that component
    k is the one whose smallest node is k-th smallest."""
    n = len(adj)
    comp = [-1] * n
    low = [0] * n
    num = [-1] * n
    counter = [0]
    stack = []
    on_stack = [False] * n
    ncomp = [0]

    for root in range(n):
        if num[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                num[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if num[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], num[w])
            if recurse:
                continue
            if low[v] == num[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp[0]
                    if w == v:
                        break
                ncomp[0] += 1
            work.pop()
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    first = {}
    for v in range(n):
        first.setdefault(comp[v], v)
    order = sorted(first, key=first.get)
    relabel = {old: new for new, old in enumerate(order)}
    return [relabel[c] for c in comp], len(order)


def _group(labels):
    classes = {}
    for i, c in enumerate(labels):
        classes.setdefault(c, []).append(i)
    return [classes[c] for c in sorted(classes)]


def oracle_green(closure, which):
    """Green's classes of an exhaustive closure, as lists of element indices
    ordered by smallest member.  which is one of 'R', 'L', 'H', 'D'."""
    elements, right, left = closure
    n = len(elements)
    rlab, _ = _sccs(right)
    llab, _ = _sccs(left)
    if which == "R":
        return _group(rlab)
    if which == "L":
        return _group(llab)
    if which == "H":
        pair_ids = {}
        hlab = []
        for i in range(n):
            key = (rlab[i], llab[i])
            if key not in pair_ids:
                pair_ids[key] = len(pair_ids)
            hlab.append(pair_ids[key])
        return _group(hlab)
    if which == "D":
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        by_r = {}
        by_l = {}
        for i in range(n):
            by_r.setdefault(rlab[i], []).append(i)
            by_l.setdefault(llab[i], []).append(i)
        for members in list(by_r.values()) + list(by_l.values()):
            for j in members[1:]:
                parent[find(j)] = find(members[0])
        return _group([find(i) for i in range(n)])
    raise ValueError("which must be R, L, H or D")


def oracle_dorder(closure):
    """D-classes plus the containment order S1.x.S1 >= S1.y.S1.

    Returns (dclasses, leq) where leq is the set of pairs (a, b) with
    D_a <= D_b, indices into dclasses."""
    elements, right, left = closure
    dclasses = oracle_green(closure, "D")
    dlab = [0] * len(elements)
    for did, members in enumerate(dclasses):
        for i in members:
            dlab[i] = did
    nd = len(dclasses)
    succ = [set() for _ in range(nd)]
    for i in range(len(elements)):
        for j in right[i] + left[i]:
            if dlab[j] != dlab[i]:
                succ[dlab[i]].add(dlab[j])
    leq = set()
    for b in range(nd):
        seen = {b}
        queue = deque([b])
        while queue:
            c = queue.popleft()
            for d in succ[c]:
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        for a in seen:
            leq.add((a, b))
    return dclasses, leq


def oracle_idempotents(closure):
    elements = closure[0]
    return [i for i, x in enumerate(elements) if multiply(x, x) == x]


def oracle_is_regular(closure):
    """Every element is regular iff every R-class contains an idempotent."""
    elements, right, left = closure
    rlab, nr = _sccs(right)
    has_idem = [False] * nr
    for i in oracle_idempotents(closure):
        has_idem[rlab[i]] = True
    return all(has_idem)
