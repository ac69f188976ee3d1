"""Element kinds and the pointwise operations the orbit machinery is built on.

Four kinds are supported: transformations and partial permutations of
{1..n}, bipartitions of {1..n, -1..-n}, and elements of a Rees 0-matrix
semigroup over a permutation group.  Every kind provides the same small
vocabulary: multiplication, a lambda value (right invariant), a rho
value (left invariant), actions on those values, weak inverses, the
local inverses ubar/ubar_left, and the faithful group actions mu/nu on
the points of a lambda or rho value.
"""


class ElementError(ValueError):
    pass


class NotInStabiliser(ElementError):
    """mu or nu was asked for an element that moves the anchor value."""


class NoWeakInverse(ElementError):
    pass


class UbarUndefined(ElementError):
    pass


class ParseError(ValueError):
    pass


def _pmul(p, q):
    return tuple(q[i] for i in p)


def _pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _pid(n):
    return tuple(range(n))


class FormalIdentity:
    """Adjoined identity, used as the empty word and as a neutral ubar."""

    def __eq__(self, other):
        return isinstance(other, FormalIdentity)

    def __hash__(self):
        return hash(FormalIdentity)

    def __repr__(self):
        return "FormalIdentity()"


class Transformation:
    def __init__(self, img):
        img = tuple(img)
        n = len(img)
        if n == 0 or any(not (1 <= v <= n) for v in img):
            raise ElementError("bad transformation image %r" % (img,))
        self.img = img

    @property
    def degree(self):
        return len(self.img)

    def __eq__(self, other):
        return isinstance(other, Transformation) and self.img == other.img

    def __hash__(self):
        return hash(("t", self.img))

    def __repr__(self):
        return "Transformation(%r)" % (list(self.img),)


class PartialPerm:
    """Partial permutation, image tuple with 0 marking undefined points."""

    def __init__(self, img):
        img = tuple(img)
        n = len(img)
        vals = [v for v in img if v != 0]
        if n == 0 or any(not (0 <= v <= n) for v in img) or len(set(vals)) != len(vals):
            raise ElementError("bad partial perm image %r" % (img,))
        self.img = img

    @property
    def degree(self):
        return len(self.img)

    def domain(self):
        return tuple(i + 1 for i, v in enumerate(self.img) if v != 0)

    def image(self):
        return tuple(sorted(v for v in self.img if v != 0))

    def inverse(self):
        out = [0] * len(self.img)
        for i, v in enumerate(self.img):
            if v != 0:
                out[v - 1] = i + 1
        return PartialPerm(out)

    def __eq__(self, other):
        return isinstance(other, PartialPerm) and self.img == other.img

    def __hash__(self):
        return hash(("p", self.img))

    def __repr__(self):
        return "PartialPerm(%r)" % (list(self.img),)


def _canon(tup):
    ids = {}
    out = []
    for b in tup:
        if b not in ids:
            ids[b] = len(ids) + 1
        out.append(ids[b])
    return tuple(out)


class Bipartition:
    """Partition of {1..n, -1..-n}, stored as a canonical 2n-tuple of block
    ids: positions 0..n-1 hold the blocks of 1..n, positions n..2n-1 the
    blocks of -1..-n, ids numbered by first occurrence."""

    def __init__(self, blocks):
        seen = {}
        for bid, block in enumerate(blocks):
            for p in block:
                if p == 0 or p in seen:
                    raise ElementError("bad bipartition blocks %r" % (blocks,))
                seen[p] = bid
        n = max(abs(p) for p in seen) if seen else 0
        if n == 0 or len(seen) != 2 * n:
            raise ElementError("bad bipartition blocks %r" % (blocks,))
        payload = [seen[i + 1] for i in range(n)] + [seen[-(i + 1)] for i in range(n)]
        self.payload = _canon(payload)
        self.n = n

    @classmethod
    def from_tuple(cls, tup):
        obj = cls.__new__(cls)
        obj.payload = _canon(tuple(tup))
        obj.n = len(tup) // 2
        return obj

    @property
    def degree(self):
        return self.n

    def blocks(self):
        by_id = {}
        n = self.n
        for pos, b in enumerate(self.payload):
            pt = pos + 1 if pos < n else -(pos - n + 1)
            by_id.setdefault(b, []).append(pt)
        return [by_id[b] for b in sorted(by_id)]

    def star(self):
        n = self.n
        return Bipartition.from_tuple(self.payload[n:] + self.payload[:n])

    def __eq__(self, other):
        return isinstance(other, Bipartition) and self.payload == other.payload

    def __hash__(self):
        return hash(("b", self.payload))

    def __repr__(self):
        return "Bipartition(%r)" % (self.blocks(),)


def _transverse_count(payload):
    n = len(payload) // 2
    return len(set(payload[:n]) & set(payload[n:]))


def _bipartition_mult(x, y):
    n = x.n
    parent = list(range(3 * n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    first = {}
    for pos, b in enumerate(x.payload):
        node = pos if pos < n else n + (pos - n)
        if ("x", b) in first:
            union(first[("x", b)], node)
        else:
            first[("x", b)] = node
    for pos, b in enumerate(y.payload):
        node = n + pos if pos < n else 2 * n + (pos - n)
        if ("y", b) in first:
            union(first[("y", b)], node)
        else:
            first[("y", b)] = node
    out = [find(i) for i in range(n)] + [find(2 * n + i) for i in range(n)]
    return Bipartition.from_tuple(out)


class RZMSContext:
    """Shape of a Rees 0-matrix semigroup: index sets I and J, a degree for
    the permutation entries, and the J x I structure matrix (None = zero)."""

    def __init__(self, nr_i, nr_j, degree, matrix):
        matrix = tuple(tuple(row) for row in matrix)
        if len(matrix) != nr_j or any(len(row) != nr_i for row in matrix):
            raise ElementError("structure matrix is not %d x %d" % (nr_j, nr_i))
        for row in matrix:
            for p in row:
                if p is not None and (len(p) != degree or sorted(p) != list(range(degree))):
                    raise ElementError("bad matrix entry %r" % (p,))
        if any(all(p is None for p in row) for row in matrix) or any(
                all(row[i] is None for row in matrix) for i in range(nr_i)):
            raise ElementError("every row and column needs a nonzero entry")
        self.nr_i = nr_i
        self.nr_j = nr_j
        self.degree = degree
        self.matrix = matrix

    def entry(self, j, i):
        return self.matrix[j - 1][i - 1]

    def zero(self):
        return RZMSElement(self, 0, None, 0)

    def __eq__(self, other):
        return (isinstance(other, RZMSContext)
                and (self.nr_i, self.nr_j, self.degree, self.matrix)
                == (other.nr_i, other.nr_j, other.degree, other.matrix))

    def __hash__(self):
        return hash(("ctx", self.nr_i, self.nr_j, self.degree, self.matrix))

    def __repr__(self):
        return "RZMSContext(%d, %d, degree=%d)" % (self.nr_i, self.nr_j, self.degree)


class RZMSElement:
    """Triple (i, g, j) of a Rees 0-matrix semigroup, or its zero (i = j = 0)."""

    def __init__(self, ctx, i, g, j):
        if i == 0:
            g, j = None, 0
        else:
            if not (1 <= i <= ctx.nr_i and 1 <= j <= ctx.nr_j):
                raise ElementError("rzms indices (%r, %r) out of range" % (i, j))
            g = tuple(g)
            if sorted(g) != list(range(ctx.degree)):
                raise ElementError("bad rzms group entry %r" % (g,))
        self.ctx = ctx
        self.i = i
        self.g = g
        self.j = j

    @property
    def is_zero(self):
        return self.i == 0

    def __eq__(self, other):
        return (isinstance(other, RZMSElement) and self.ctx == other.ctx
                and (self.i, self.g, self.j) == (other.i, other.g, other.j))

    def __hash__(self):
        return hash(("r", self.i, self.g, self.j))

    def __repr__(self):
        if self.is_zero:
            return "RZMSElement(zero)"
        return "RZMSElement(%d, %r, %d)" % (self.i, self.g, self.j)


def kind_of(x):
    """Dispatch handle for h_class_is_group and friends: a (class, degree)
    pair, or the shared context for Rees 0-matrix elements."""
    if isinstance(x, RZMSElement):
        return x.ctx
    return (type(x), x.degree)


def multiply(a, b):
    if isinstance(a, FormalIdentity):
        return b
    if isinstance(b, FormalIdentity):
        return a
    if isinstance(a, Transformation) and isinstance(b, Transformation):
        if a.degree != b.degree:
            raise ElementError("degree mismatch")
        return Transformation(tuple(b.img[v - 1] for v in a.img))
    if isinstance(a, PartialPerm) and isinstance(b, PartialPerm):
        if a.degree != b.degree:
            raise ElementError("degree mismatch")
        return PartialPerm(tuple(b.img[v - 1] if v != 0 else 0 for v in a.img))
    if isinstance(a, Bipartition) and isinstance(b, Bipartition):
        if a.n != b.n:
            raise ElementError("degree mismatch")
        return _bipartition_mult(a, b)
    if isinstance(a, RZMSElement) and isinstance(b, RZMSElement):
        if a.ctx != b.ctx:
            raise ElementError("context mismatch")
        if a.is_zero or b.is_zero:
            return a.ctx.zero()
        p = a.ctx.entry(a.j, b.i)
        if p is None:
            return a.ctx.zero()
        return RZMSElement(a.ctx, a.i, _pmul(_pmul(a.g, p), b.g), b.j)
    raise ElementError("cannot multiply %r and %r" % (a, b))


def lambda_value(x):
    """Right invariant: image set, image set, the idempotent x*x, or the
    column index j (0 for the zero element)."""
    if isinstance(x, Transformation):
        return tuple(sorted(set(x.img)))
    if isinstance(x, PartialPerm):
        return x.image()
    if isinstance(x, Bipartition):
        return multiply(x.star(), x).payload
    if isinstance(x, RZMSElement):
        return x.j
    raise ElementError("no lambda value for %r" % (x,))


def rho_value(x):
    """Left invariant: kernel, domain set, the idempotent xx*, or the row
    index i (0 for the zero element)."""
    if isinstance(x, Transformation):
        return _canon(x.img)
    if isinstance(x, PartialPerm):
        return x.domain()
    if isinstance(x, Bipartition):
        return multiply(x, x.star()).payload
    if isinstance(x, RZMSElement):
        return x.i
    raise ElementError("no rho value for %r" % (x,))


def act_lambda(v, s):
    """Value of lambda(x.s) given v = lambda(x)."""
    if isinstance(s, FormalIdentity):
        return v
    if isinstance(s, Transformation):
        return tuple(sorted({s.img[a - 1] for a in v}))
    if isinstance(s, PartialPerm):
        return tuple(sorted(s.img[a - 1] for a in v if s.img[a - 1] != 0))
    if isinstance(s, Bipartition):
        return lambda_value(multiply(Bipartition.from_tuple(v), s))
    if isinstance(s, RZMSElement):
        if v == 0 or s.is_zero or s.ctx.entry(v, s.i) is None:
            return 0
        return s.j
    raise ElementError("cannot act on lambda value with %r" % (s,))


def act_rho(s, v):
    """Value of rho(s.x) given v = rho(x)."""
    if isinstance(s, FormalIdentity):
        return v
    if isinstance(s, Transformation):
        return _canon(tuple(v[a - 1] for a in s.img))
    if isinstance(s, PartialPerm):
        return tuple(a for a in s.domain() if s.img[a - 1] in v)
    if isinstance(s, Bipartition):
        return rho_value(multiply(s, Bipartition.from_tuple(v)))
    if isinstance(s, RZMSElement):
        if v == 0 or s.is_zero or s.ctx.entry(s.j, v) is None:
            return 0
        return s.i
    raise ElementError("cannot act on rho value with %r" % (s,))


def lambda_points(kind, v):
    """Number of points mu permutes for an element with lambda value v."""
    if isinstance(kind, RZMSContext):
        return 0 if v == 0 else kind.degree
    cls, _ = kind
    if cls is Transformation or cls is PartialPerm:
        return len(v)
    if cls is Bipartition:
        return _transverse_count(v)
    raise ElementError("unknown kind %r" % (kind,))


def rho_points(kind, v):
    if isinstance(kind, RZMSContext):
        return 0 if v == 0 else kind.degree
    cls, _ = kind
    if cls is Transformation:
        return max(v)
    if cls is PartialPerm:
        return len(v)
    if cls is Bipartition:
        return _transverse_count(v)
    raise ElementError("unknown kind %r" % (kind,))


def weak_inverse(x):
    """Some x' with x.x'.x = x and x'.x.x' = x'."""
    if isinstance(x, Transformation):
        img = x.img
        lo = min(img)
        out = [lo] * x.degree
        for j in range(x.degree - 1, -1, -1):
            out[img[j] - 1] = j + 1
        xp = multiply(multiply(Transformation(out), x), Transformation(out))
        assert multiply(multiply(x, xp), x) == x
        return xp
    if isinstance(x, PartialPerm):
        return x.inverse()
    if isinstance(x, Bipartition):
        return x.star()
    if isinstance(x, RZMSElement):
        if x.is_zero:
            raise NoWeakInverse("the zero element has no weak inverse")
        ctx = x.ctx
        k = next(k for k in range(1, ctx.nr_i + 1) if ctx.entry(x.j, k) is not None)
        l = next(l for l in range(1, ctx.nr_j + 1) if ctx.entry(l, x.i) is not None)
        g = _pmul(_pmul(_pinv(ctx.entry(x.j, k)), _pinv(x.g)), _pinv(ctx.entry(l, x.i)))
        return RZMSElement(ctx, k, g, l)
    raise NoWeakInverse("no weak inverse for %r" % (x,))


def ubar(x, s):
    """An element u with x.s.u = x, valid when lambda(x.s) and lambda(x)
    lie in a common scc of the lambda orbit."""
    if isinstance(s, FormalIdentity):
        return FormalIdentity()
    if isinstance(x, Transformation):
        xs = multiply(x, s)
        out = list(range(1, x.degree + 1))
        for j in range(x.degree):
            out[xs.img[j] - 1] = x.img[j]
        u = Transformation(out)
    elif isinstance(x, PartialPerm):
        u = s.inverse()
        xs = multiply(x, s)
    elif isinstance(x, Bipartition):
        xs = multiply(x, s)
        u = multiply(xs.star(), x)
    elif isinstance(x, RZMSElement):
        xs = multiply(x, s)
        if x.is_zero or s.is_zero or xs.is_zero:
            raise UbarUndefined("ubar through the zero element")
        ctx = x.ctx
        m = next(m for m in range(1, ctx.nr_i + 1) if ctx.entry(xs.j, m) is not None)
        g = _pmul(_pmul(_pinv(ctx.entry(xs.j, m)), _pinv(s.g)), _pinv(ctx.entry(x.j, s.i)))
        u = RZMSElement(ctx, m, g, x.j)
    else:
        raise UbarUndefined("no ubar for %r" % (x,))
    assert multiply(xs, u) == x
    return u


def ubar_left(x, s):
    """An element u with u.s.x = x, valid when rho(s.x) and rho(x) lie in a
    common scc of the rho orbit."""
    if isinstance(s, FormalIdentity):
        return FormalIdentity()
    if isinstance(x, Transformation):
        sx = multiply(s, x)
        pre = {}
        for p in range(x.degree - 1, -1, -1):
            pre[sx.img[p]] = p + 1
        try:
            u = Transformation(tuple(pre[v] for v in x.img))
        except KeyError:
            raise UbarUndefined("rho(s.x) not equivalent to rho(x)")
    elif isinstance(x, PartialPerm):
        sx = multiply(s, x)
        u = multiply(x, sx.inverse())
    elif isinstance(x, Bipartition):
        sx = multiply(s, x)
        u = multiply(x, sx.star())
    elif isinstance(x, RZMSElement):
        sx = multiply(s, x)
        if x.is_zero or s.is_zero or sx.is_zero:
            raise UbarUndefined("ubar through the zero element")
        ctx = x.ctx
        e = next(e for e in range(1, ctx.nr_j + 1) if ctx.entry(e, s.i) is not None)
        g = _pmul(_pmul(_pinv(ctx.entry(s.j, x.i)), _pinv(s.g)), _pinv(ctx.entry(e, s.i)))
        u = RZMSElement(ctx, x.i, g, e)
    else:
        raise UbarUndefined("no ubar for %r" % (x,))
    assert multiply(u, sx) == x
    return u


def mu(x, t):
    """Permutation induced by t on the points of lambda(x), defined when t
    stabilises that value; depends on x only through lambda(x)."""
    if isinstance(x, Transformation):
        pts = sorted(set(x.img))
        pos = {a: k for k, a in enumerate(pts)}
        if isinstance(t, FormalIdentity):
            return _pid(len(pts))
        out = []
        for a in pts:
            b = t.img[a - 1]
            if b not in pos:
                raise NotInStabiliser("image moved off itself")
            out.append(pos[b])
        if len(set(out)) != len(pts):
            raise NotInStabiliser("image not permuted")
        return tuple(out)
    if isinstance(x, PartialPerm):
        pts = x.image()
        pos = {a: k for k, a in enumerate(pts)}
        if isinstance(t, FormalIdentity):
            return _pid(len(pts))
        out = []
        for a in pts:
            b = t.img[a - 1]
            if b not in pos:
                raise NotInStabiliser("image moved off itself")
            out.append(pos[b])
        if len(set(out)) != len(pts):
            raise NotInStabiliser("image not permuted")
        return tuple(out)
    if isinstance(x, Bipartition):
        e = Bipartition.from_tuple(lambda_value(x))
        d = _transverse_count(e.payload)
        if isinstance(t, FormalIdentity):
            return _pid(d)
        f = multiply(e, t)
        if lambda_value(f) != e.payload:
            raise NotInStabiliser("lambda value moved")
        n = e.n
        tb = sorted(set(e.payload[:n]) & set(e.payload[n:]))
        minus_of = {}
        for k, b in enumerate(tb):
            minus_of[frozenset(q for q in range(n) if e.payload[n + q] == b)] = k
        out = []
        for b in tb:
            p = e.payload.index(b)
            fb = f.payload[p]
            key = frozenset(q for q in range(n) if f.payload[n + q] == fb)
            out.append(minus_of[key])
        assert len(set(out)) == d
        return tuple(out)
    if isinstance(x, RZMSElement):
        if x.is_zero:
            return ()
        if isinstance(t, FormalIdentity):
            return _pid(x.ctx.degree)
        if t.is_zero or t.j != x.j:
            raise NotInStabiliser("column moved")
        p = x.ctx.entry(x.j, t.i)
        if p is None:
            raise NotInStabiliser("product is zero")
        return _pmul(p, t.g)
    raise ElementError("no mu for %r" % (x,))


def nu(x, t):
    """Permutation induced by t on the points of rho(x), defined when t
    stabilises that value; depends on x only through rho(x).  Composes
    forwards: nu(x, t).nu(x, t') = nu(x, t.t')."""
    if isinstance(x, Transformation):
        ker = rho_value(x)
        m = max(ker)
        if isinstance(t, FormalIdentity):
            return _pid(m)
        out = [None] * m
        for i in range(x.degree):
            c = ker[i] - 1
            c2 = ker[t.img[i] - 1] - 1
            if out[c] is None:
                out[c] = c2
            elif out[c] != c2:
                raise NotInStabiliser("kernel not respected")
        if None in out or len(set(out)) != m:
            raise NotInStabiliser("kernel classes not permuted")
        return tuple(out)
    if isinstance(x, PartialPerm):
        dom = x.domain()
        pos = {a: k for k, a in enumerate(dom)}
        if isinstance(t, FormalIdentity):
            return _pid(len(dom))
        out = []
        for a in dom:
            b = t.img[a - 1]
            if b not in pos:
                raise NotInStabiliser("domain moved off itself")
            out.append(pos[b])
        if len(set(out)) != len(dom):
            raise NotInStabiliser("domain not permuted")
        return tuple(out)
    if isinstance(x, Bipartition):
        if isinstance(t, FormalIdentity):
            return _pid(_transverse_count(rho_value(x)))
        return _pinv(mu(x.star(), t.star()))
    if isinstance(x, RZMSElement):
        if x.is_zero:
            return ()
        if isinstance(t, FormalIdentity):
            return _pid(x.ctx.degree)
        if t.is_zero or t.i != x.i:
            raise NotInStabiliser("row moved")
        p = x.ctx.entry(t.j, x.i)
        if p is None:
            raise NotInStabiliser("product is zero")
        return _pmul(t.g, p)
    raise ElementError("no nu for %r" % (x,))


def psi_embed(x, xp, s):
    """Image of s under the embedding that carries the left stabiliser group
    of x over to permutations of the points of lambda(x); xp is a weak
    inverse of x."""
    return mu(x, multiply(multiply(xp, s), x))


def h_class_is_group(kind, l, r):
    """Whether the H-class with lambda value l and rho value r is a group."""
    if isinstance(kind, RZMSContext):
        if l == 0 or r == 0:
            return l == r
        return kind.entry(l, r) is not None
    cls, _ = kind
    if cls is Transformation:
        if max(r) != len(l):
            return False
        return len({r[a - 1] for a in l}) == len(l)
    if cls is PartialPerm:
        return l == r
    if cls is Bipartition:
        if _transverse_count(l) != _transverse_count(r):
            return False
        el = Bipartition.from_tuple(l)
        er = Bipartition.from_tuple(r)
        return _transverse_count(multiply(er, el).payload) == _transverse_count(l)
    raise ElementError("unknown kind %r" % (kind,))


def h_class_idempotent(kind, l, r):
    """The idempotent of a group H-class, given by its lambda and rho values."""
    if not h_class_is_group(kind, l, r):
        raise ElementError("H-class (%r, %r) is not a group" % (l, r))
    if isinstance(kind, RZMSContext):
        if l == 0:
            return kind.zero()
        return RZMSElement(kind, r, _pinv(kind.entry(l, r)), l)
    cls, degree = kind
    if cls is Transformation:
        target = {r[a - 1]: a for a in l}
        return Transformation(tuple(target[c] for c in r))
    if cls is PartialPerm:
        out = [0] * degree
        for a in l:
            out[a - 1] = a
        return PartialPerm(out)
    if cls is Bipartition:
        return multiply(Bipartition.from_tuple(r), Bipartition.from_tuple(l))
    raise ElementError("unknown kind %r" % (kind,))


def parse_cycles(text, degree):
    text = text.strip()
    if text in ("()", "e", "id"):
        return _pid(degree)
    out = list(range(degree))
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("bad cycle notation %r" % (text,))
    for part in text[1:-1].split(")("):
        pts = part.replace(",", " ").split()
        try:
            cyc = [int(p) for p in pts]
        except ValueError:
            raise ParseError("bad cycle %r" % (part,))
        if any(not (1 <= p <= degree) for p in cyc) or len(set(cyc)) != len(cyc):
            raise ParseError("cycle %r out of range for degree %d" % (part, degree))
        for k, p in enumerate(cyc):
            out[p - 1] = cyc[(k + 1) % len(cyc)] - 1
    perm = tuple(out)
    if sorted(perm) != list(range(degree)):
        raise ParseError("cycles %r overlap" % (text,))
    return perm


def format_cycles(perm):
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) if parts else "()"


def parse_element(text, ctx=None):
    """Parse one element line: 't [..]', 'p [..]', 'b [[..], ..]' or
    'r (i, cycles, j)' / 'r 0' (the latter two need a context)."""
    import ast

    text = text.strip()
    if len(text) < 2 or text[1] not in " \t":
        raise ParseError("expected a kind letter then a payload: %r" % (text,))
    kind, payload = text[0], text[1:].strip()
    if kind in ("t", "p", "b"):
        try:
            data = ast.literal_eval(payload)
        except (ValueError, SyntaxError):
            raise ParseError("bad payload %r" % (payload,))
        try:
            if kind == "t":
                return Transformation(data)
            if kind == "p":
                return PartialPerm(data)
            return Bipartition(data)
        except ElementError as err:
            raise ParseError(str(err))
    if kind == "r":
        if ctx is None:
            raise ParseError("an 'r' element needs an rzms block first")
        if payload == "0":
            return ctx.zero()
        if not (payload.startswith("(") and payload.endswith(")")):
            raise ParseError("bad rzms element %r" % (payload,))
        parts = [p.strip() for p in payload[1:-1].split(",")]
        if len(parts) != 3:
            raise ParseError("bad rzms element %r" % (payload,))
        try:
            i, j = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError("bad rzms indices in %r" % (payload,))
        g = parse_cycles(parts[1], ctx.degree)
        try:
            return RZMSElement(ctx, i, g, j)
        except ElementError as err:
            raise ParseError(str(err))
    raise ParseError("unknown element kind %r" % (kind,))


def format_element(x):
    if isinstance(x, Transformation):
        return "t %r" % (list(x.img),)
    if isinstance(x, PartialPerm):
        return "p %r" % (list(x.img),)
    if isinstance(x, Bipartition):
        return "b %r" % (x.blocks(),)
    if isinstance(x, RZMSElement):
        if x.is_zero:
            return "r 0"
        return "r (%d, %s, %d)" % (x.i, format_cycles(x.g), x.j)
    raise ElementError("cannot format %r" % (x,))
