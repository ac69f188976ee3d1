"""Orbits of lambda or rho values under the generators, with Schreier words.

A right orbit tracks lambda values under v -> lambda(x . s); a left orbit
tracks rho values under v -> rho(s . x).  Points are discovered breadth
first in (point, generator) order.  All words handed out are tuples of
0-based generator indices in product order: (a, b, c) always denotes the
element x_a . x_b . x_c, whichever side the orbit acts on.
"""

from collections import deque

from . import elements as el
from .permgroup import PermGroup, perm_order


def graph_sccs(adj):
    """Strongly connected components of adj (a list of neighbour lists).
    Returns (scc_of, sccs) with components sorted by smallest member and
    each component listed in ascending order."""
    n = len(adj)
    comp = [-1] * n
    low = [0] * n
    num = [-1] * n
    counter = 0
    stack = []
    on_stack = [False] * n
    raw = []
    for start in range(n):
        if num[start] != -1:
            continue
        work = [(start, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                num[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if num[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], num[w])
            if advanced:
                continue
            if low[v] == num[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = len(raw)
                    members.append(w)
                    if w == v:
                        break
                raw.append(sorted(members))
            work.pop()
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    order = sorted(range(len(raw)), key=lambda c: raw[c][0])
    relabel = {old: new for new, old in enumerate(order)}
    return [relabel[c] for c in comp], [raw[old] for old in order]


class Orbit:
    def __init__(self, gens, seeds, side, action=None, kind=None):
        """seeds is a list of (value, generator index) pairs; duplicate
        values keep the first generator.  action(value, j) may override the
        default act_lambda/act_rho action."""
        if side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        self.side = side
        self.gens = list(gens)
        self.kind = kind if kind is not None else el.kind_of(self.gens[0])
        self._custom_action = action is not None
        if action is None:
            if side == "right":
                action = lambda v, j: el.act_lambda(v, self.gens[j])
            else:
                action = lambda v, j: el.act_rho(self.gens[j], v)
        self.action = action
        self.values = []
        self.index = {}
        self.parent = []
        self.label = []
        self.seed_gen = []
        self.graph = []
        self._formal = el.FormalIdentity()
        self._scc_data = None
        self._stab_cache = {}
        self._anchor_cache = {}
        self._rect_cache = {}
        self._pullback_cache = {}
        for value, g in seeds:
            self._add_point(value, None, None, g)
        self._bfs(0)

    def _add_point(self, value, parent, label, seed_gen):
        if value in self.index:
            return self.index[value]
        idx = len(self.values)
        self.index[value] = idx
        self.values.append(value)
        self.parent.append(parent)
        self.label.append(label)
        self.seed_gen.append(seed_gen)
        self.graph.append([None] * len(self.gens))
        return idx

    def _bfs(self, start):
        p = start
        while p < len(self.values):
            v = self.values[p]
            for j in range(len(self.gens)):
                if self.graph[p][j] is not None:
                    continue
                w = self.action(v, j)
                q = self.index.get(w)
                if q is None:
                    q = self._add_point(w, p, j, None)
                self.graph[p][j] = q
            p += 1

    def __len__(self):
        return len(self.values)

    def lookup(self, value):
        return self.index.get(value)

    def _climb(self, i):
        labels = []
        while self.parent[i] is not None:
            labels.append(self.label[i])
            i = self.parent[i]
        return labels, i

    def trace(self, i):
        """Word applied to i's seed value to reach value i (no seed factor)."""
        labels, _ = self._climb(i)
        if self.side == "right":
            return tuple(reversed(labels))
        return tuple(labels)

    def anchor_word(self, i):
        """Word of an element whose lambda (or rho) value is value i."""
        labels, root = self._climb(i)
        g = self.seed_gen[root]
        if self.side == "right":
            return (g,) + tuple(reversed(labels))
        return tuple(labels) + (g,)

    def eval_word(self, word):
        out = self._formal
        for j in word:
            out = el.multiply(out, self.gens[j])
        return out

    def anchor_elt(self, i):
        if i not in self._anchor_cache:
            self._anchor_cache[i] = self.eval_word(self.anchor_word(i))
        return self._anchor_cache[i]

    # ----- strongly connected components and in-scc trees -----

    def _sccs(self):
        if self._scc_data is not None:
            return self._scc_data
        scc_of, sccs = graph_sccs(self.graph)
        trees = [self._scc_trees(members) for members in sccs]
        self._scc_data = (scc_of, sccs, trees)
        return self._scc_data

    def _scc_trees(self, members):
        inside = set(members)
        rep = members[0]
        fwd = {rep: None}
        queue = deque([rep])
        while queue:
            p = queue.popleft()
            for j in range(len(self.gens)):
                q = self.graph[p][j]
                if q in inside and q not in fwd:
                    fwd[q] = (p, j)
                    queue.append(q)
        radj = {p: [] for p in members}
        for p in members:
            for j in range(len(self.gens)):
                q = self.graph[p][j]
                if q in inside:
                    radj[q].append((p, j))
        rev = {rep: None}
        stack = [rep]
        while stack:
            v = stack.pop()
            for p, j in reversed(radj[v]):
                if p not in rev:
                    rev[p] = (v, j)
                    stack.append(p)
        assert len(fwd) == len(members) and len(rev) == len(members)
        return fwd, rev

    @property
    def scc_of(self):
        return self._sccs()[0]

    @property
    def sccs(self):
        return self._sccs()[1]

    def scc_rep(self, sid):
        return self.sccs[sid][0]

    def _app_within_scc(self, i, k):
        """Generator labels, in application order, moving value i to value k
        through the scc representative."""
        scc_of, sccs, trees = self._sccs()
        sid = scc_of[i]
        assert scc_of[k] == sid
        fwd, rev = trees[sid]
        up = []
        p = i
        while rev[p] is not None:
            q, j = rev[p]
            up.append(j)
            p = q
        down = []
        p = k
        while fwd[p] is not None:
            q, j = fwd[p]
            down.append(j)
            p = q
        return up + list(reversed(down))

    def trace_within_scc(self, i, k):
        """Word of an element carrying value i to value k inside their scc."""
        app = self._app_within_scc(i, k)
        if self.side == "right":
            return tuple(app)
        return tuple(reversed(app))

    def scc_anchor_word(self, sid):
        return self.anchor_word(self.scc_rep(sid))

    def scc_anchor_elt(self, sid):
        return self.anchor_elt(self.scc_rep(sid))

    # ----- pullback (vw) words and stabiliser groups -----

    def rect_elts(self, point, root=None):
        """(u, ubar) for moving the scc anchor at root to point and back:
        anchor.u has value point (right side), and anchor.u.ubar = anchor."""
        sid = self.scc_of[point]
        if root is None:
            root = self.scc_rep(sid)
        key = (point, root)
        if key not in self._rect_cache:
            anchor = self.anchor_elt(root)
            u = self.eval_word(self.trace_within_scc(root, point))
            if self.side == "right":
                ub = el.ubar(anchor, u)
            else:
                ub = el.ubar_left(anchor, u)
            self._rect_cache[key] = (u, ub)
        return self._rect_cache[key]

    def pullback_word(self, point, root=None):
        """Word b with value(point) . b back at root and anchor.u.b = anchor;
        the positive stand-in for ubar, built from a power of the loop."""
        sid = self.scc_of[point]
        if root is None:
            root = self.scc_rep(sid)
        key = (point, root)
        if key not in self._pullback_cache:
            anchor = self.anchor_elt(root)
            u_word = self.trace_within_scc(root, point)
            psi = self.trace_within_scc(point, root)
            if self.side == "right":
                loop = el.mu(anchor, self.eval_word(u_word + psi))
            else:
                loop = el.nu(anchor, self.eval_word(psi + u_word))
            o = perm_order(loop)
            self._pullback_cache[key] = psi + (u_word + psi) * (o - 1)
        return self._pullback_cache[key]

    def scc_stabiliser(self, sid, root_point=None):
        """Group of permutations induced on the points of the anchor value by
        elements stabilising it, one Schreier generator per in-scc edge."""
        cached = root_point is None or root_point == self.scc_rep(sid)
        if cached and sid in self._stab_cache:
            return self._stab_cache[sid]
        root = self.scc_rep(sid) if root_point is None else root_point
        anchor = self.anchor_elt(root)
        members = self.sccs[sid]
        inside = set(members)
        pairs = []
        for p in members:
            u, _ = self.rect_elts(p, root)
            u_word = self.trace_within_scc(root, p)
            for j in range(len(self.gens)):
                q = self.graph[p][j]
                if q not in inside:
                    continue
                _, ub = self.rect_elts(q, root)
                if self.side == "right":
                    t = el.multiply(el.multiply(u, self.gens[j]), ub)
                    perm = el.mu(anchor, t)
                    word = u_word + (j,) + self.pullback_word(q, root)
                else:
                    t = el.multiply(el.multiply(ub, self.gens[j]), u)
                    perm = el.nu(anchor, t)
                    word = self.pullback_word(q, root) + (j,) + u_word
                pairs.append((perm, word))
        seen = set()
        uniq = []
        for perm, word in pairs:
            if perm not in seen:
                seen.add(perm)
                uniq.append((perm, word))
        if self.side == "right":
            degree = el.lambda_points(self.kind, self.values[root])
        else:
            degree = el.rho_points(self.kind, self.values[root])
        group = PermGroup(degree, uniq)
        if cached:
            self._stab_cache[sid] = group
        return group

    # ----- growth for closures -----

    def copy(self):
        """Independent copy with empty caches; the original stays usable.
        Only orbits with the standard action can be copied."""
        if self._custom_action:
            raise ValueError("cannot copy an orbit with a custom action")
        new = Orbit.__new__(Orbit)
        new.side = self.side
        new.gens = list(self.gens)
        new.kind = self.kind
        new._custom_action = False
        if new.side == "right":
            new.action = lambda v, j: el.act_lambda(v, new.gens[j])
        else:
            new.action = lambda v, j: el.act_rho(new.gens[j], v)
        new.values = list(self.values)
        new.index = dict(self.index)
        new.parent = list(self.parent)
        new.label = list(self.label)
        new.seed_gen = list(self.seed_gen)
        new.graph = [list(row) for row in self.graph]
        new._formal = el.FormalIdentity()
        new._scc_data = None
        new._stab_cache = {}
        new._anchor_cache = {}
        new._rect_cache = {}
        new._pullback_cache = {}
        return new

    def extend(self, new_gens, new_seeds):
        """Add generators and seed values; existing point indices are kept,
        scc data and caches are rebuilt lazily."""
        old_n = len(self.values)
        self.gens.extend(new_gens)
        m = len(self.gens)
        for row in self.graph:
            row.extend([None] * (m - len(row)))
        self._scc_data = None
        self._stab_cache = {}
        self._anchor_cache = {}
        self._rect_cache = {}
        self._pullback_cache = {}
        for p in range(old_n):
            v = self.values[p]
            for j in range(m):
                if self.graph[p][j] is None:
                    w = self.action(v, j)
                    q = self.index.get(w)
                    if q is None:
                        q = self._add_point(w, p, j, None)
                    self.graph[p][j] = q
        for value, g in new_seeds:
            self._add_point(value, None, None, g)
        self._bfs(old_n)

    def to_dot(self, fmt=str):
        lines = ["digraph orbit {"]
        for i, v in enumerate(self.values):
            lines.append('  p%d [label="%s"];' % (i, fmt(v)))
        for i, row in enumerate(self.graph):
            for j, q in enumerate(row):
                lines.append('  p%d -> p%d [label="x%d"];' % (i, q, j + 1))
        lines.append("}")
        return "\n".join(lines)


def enumerate_component(gens, seeds, side, action=None, kind=None):
    return Orbit(gens, seeds, side, action=action, kind=kind)


def trace(o, i):
    return o.trace(i)


def scc_decompose(o):
    return o.scc_of, o.sccs


def trace_within_scc(o, i, k):
    return o.trace_within_scc(i, k)


def scc_stabiliser(o, sid, root_point=None):
    return o.scc_stabiliser(sid, root_point)
