"""Green's class records and the class level queries built on them.

A record pins a class by a representative plus the orbit data needed to
answer questions about it: the scc and stabiliser group on the lambda
side for an R-class, on the rho side for an L-class, and both groups
(re-rooted at the representative's own points) for H- and D-classes.
"""

from . import elements as el
from .permgroup import PermGroup, multiply_perm


def safe_weak_inverse(x):
    """Weak inverse, with the formal identity standing in for the zero of a
    Rees 0-matrix semigroup (which has no weak inverse of its own)."""
    if isinstance(x, el.RZMSElement) and x.is_zero:
        return el.FormalIdentity()
    return el.weak_inverse(x)


class RClassRecord:
    def __init__(self, rep, lam, rho, scc_id, rho_pt, stab, rep_weak_inverse):
        self.rep = rep
        self.lam = lam
        self.rho = rho
        self.scc_id = scc_id
        self.lam_pt = lam.scc_rep(scc_id)
        self.rho_pt = rho_pt
        self.stab = stab
        self.rep_weak_inverse = rep_weak_inverse
        self.kind = el.kind_of(rep)


def make_rclass_record(y, lam, rho):
    """R-class handle for y; the representative is rectified so its lambda
    value sits at the scc's anchor point."""
    k = lam.lookup(el.lambda_value(y))
    sid = lam.scc_of[k]
    _, ub = lam.rect_elts(k)
    rep = el.multiply(y, ub)
    rho_pt = rho.lookup(el.rho_value(rep))
    return RClassRecord(rep, lam, rho, sid, rho_pt,
                        lam.scc_stabiliser(sid), safe_weak_inverse(rep))


class LClassRecord:
    def __init__(self, rep, lam, rho, scc_id, lam_pt, stab, rep_weak_inverse):
        self.rep = rep
        self.lam = lam
        self.rho = rho
        self.scc_id = scc_id
        self.rho_pt = rho.scc_rep(scc_id)
        self.lam_pt = lam_pt
        self.stab = stab
        self.rep_weak_inverse = rep_weak_inverse
        self.kind = el.kind_of(rep)


def make_lclass_record(y, lam, rho):
    k = rho.lookup(el.rho_value(y))
    sid = rho.scc_of[k]
    _, ub = rho.rect_elts(k)
    rep = el.multiply(ub, y)
    lam_pt = lam.lookup(el.lambda_value(rep))
    return LClassRecord(rep, lam, rho, sid, lam_pt,
                        rho.scc_stabiliser(sid), safe_weak_inverse(rep))


class AnchoredRecord:
    """Shared data for H- and D-class queries: both stabiliser groups are
    re-rooted at the representative's own lambda and rho points, and the
    rho side group is carried over to lambda points through psi_embed."""

    def __init__(self, rep, lam, rho):
        self.rep = rep
        self.lam = lam
        self.rho = rho
        self.kind = el.kind_of(rep)
        self.lam_pt = lam.lookup(el.lambda_value(rep))
        self.rho_pt = rho.lookup(el.rho_value(rep))
        self.lam_scc = lam.scc_of[self.lam_pt]
        self.rho_scc = rho.scc_of[self.rho_pt]
        self.rep_weak_inverse = safe_weak_inverse(rep)
        self.sx = lam.scc_stabiliser(self.lam_scc, root_point=self.lam_pt)
        self.xs = rho.scc_stabiliser(self.rho_scc, root_point=self.rho_pt)
        pairs = []
        for word in self.xs.words:
            t = rho.eval_word(word)
            pairs.append((el.psi_embed(rep, self.rep_weak_inverse, t), word))
        self.psi = PermGroup(self.sx.degree, pairs)
        self.inter = self.sx.intersection(self.psi)
        self._sx_transversal = None

    def sx_transversal(self):
        if self._sx_transversal is None:
            self._sx_transversal = self.sx.left_transversal(self.inter)
        return self._sx_transversal


def make_hclass_record(y, lam, rho):
    return AnchoredRecord(y, lam, rho)


def make_dclass_record(y, lam, rho):
    return AnchoredRecord(y, lam, rho)


def rclass_size(rec):
    return rec.stab.order() * len(rec.lam.sccs[rec.scc_id])


def rclass_elements(rec):
    """All elements, one H-class at a time across the lambda scc."""
    out = []
    group = rec.stab._elements_with_words(rec.stab.order())
    for k in rec.lam.sccs[rec.scc_id]:
        u, _ = rec.lam.rect_elts(k)
        for word in group.values():
            s = rec.lam.eval_word(word)
            out.append(el.multiply(el.multiply(rec.rep, s), u))
    return out


def rclass_contains(rec, y):
    if el.kind_of(y) != rec.kind:
        return False
    if el.rho_value(y) != el.rho_value(rec.rep):
        return False
    k = rec.lam.lookup(el.lambda_value(y))
    if k is None or rec.lam.scc_of[k] != rec.scc_id:
        return False
    _, ub = rec.lam.rect_elts(k)
    y2 = el.multiply(y, ub)
    g = el.mu(rec.rep, el.multiply(rec.rep_weak_inverse, y2))
    return rec.stab.contains(g)


def rclass_is_regular(rec):
    lv = el.lambda_value(rec.rep)
    sid = rec.rho.scc_of[rec.rho_pt]
    return any(el.h_class_is_group(rec.kind, lv, rec.rho.values[w])
               for w in rec.rho.sccs[sid])


def rclass_idempotents(rec):
    """Idempotents of the R-class, swept along the lambda scc against the
    fixed rho value of the representative."""
    rv = el.rho_value(rec.rep)
    out = []
    for w in rec.lam.sccs[rec.scc_id]:
        lv = rec.lam.values[w]
        if el.h_class_is_group(rec.kind, lv, rv):
            out.append(el.h_class_idempotent(rec.kind, lv, rv))
    return out


def lclass_size(rec):
    return rec.stab.order() * len(rec.rho.sccs[rec.scc_id])


def lclass_elements(rec):
    out = []
    group = rec.stab._elements_with_words(rec.stab.order())
    for k in rec.rho.sccs[rec.scc_id]:
        u, _ = rec.rho.rect_elts(k)
        for word in group.values():
            s = rec.rho.eval_word(word)
            out.append(el.multiply(u, el.multiply(s, rec.rep)))
    return out


def lclass_contains(rec, y):
    if el.kind_of(y) != rec.kind:
        return False
    if el.lambda_value(y) != el.lambda_value(rec.rep):
        return False
    k = rec.rho.lookup(el.rho_value(y))
    if k is None or rec.rho.scc_of[k] != rec.scc_id:
        return False
    _, ub = rec.rho.rect_elts(k)
    y2 = el.multiply(ub, y)
    g = el.nu(rec.rep, el.multiply(y2, rec.rep_weak_inverse))
    return rec.stab.contains(g)


def lclass_is_regular(rec):
    rv = el.rho_value(rec.rep)
    sid = rec.lam.scc_of[rec.lam_pt]
    return any(el.h_class_is_group(rec.kind, rec.lam.values[w], rv)
               for w in rec.lam.sccs[sid])


def lclass_idempotents(rec):
    """Idempotents of the L-class, swept along the rho scc against the
    fixed lambda value of the representative."""
    lv = el.lambda_value(rec.rep)
    out = []
    for w in rec.rho.sccs[rec.scc_id]:
        rv = rec.rho.values[w]
        if el.h_class_is_group(rec.kind, lv, rv):
            out.append(el.h_class_idempotent(rec.kind, lv, rv))
    return out


def hclass_size(rec):
    return rec.inter.order()


def dclass_size(rec):
    r_size = rec.sx.order() * len(rec.lam.sccs[rec.lam_scc])
    l_size = rec.xs.order() * len(rec.rho.sccs[rec.rho_scc])
    return r_size * l_size // rec.inter.order()


def nr_rclasses_of_dclass(rec):
    return len(rec.rho.sccs[rec.rho_scc]) * (rec.psi.order() // rec.inter.order())


def nr_lclasses_of_dclass(rec):
    return len(rec.lam.sccs[rec.lam_scc]) * (rec.sx.order() // rec.inter.order())


def dclass_contains(rec, y):
    if el.kind_of(y) != rec.kind:
        return False
    k1 = rec.lam.lookup(el.lambda_value(y))
    if k1 is None or rec.lam.scc_of[k1] != rec.lam_scc:
        return False
    k2 = rec.rho.lookup(el.rho_value(y))
    if k2 is None or rec.rho.scc_of[k2] != rec.rho_scc:
        return False
    _, ub1 = rec.lam.rect_elts(k1, rec.lam_pt)
    y1 = el.multiply(y, ub1)
    _, ub2 = rec.rho.rect_elts(k2, rec.rho_pt)
    y2 = el.multiply(ub2, y1)
    g = el.mu(rec.rep, el.multiply(rec.rep_weak_inverse, y2))
    for c in rec.sx_transversal():
        if rec.psi.contains(multiply_perm(g, c)):
            return True
    return False


def rclasses_of_dclass(rec):
    """One R-class record per R-class of the D-class; representatives are
    u.s.rep with u walking the rho scc and s pulled back from a transversal
    of the intersection inside the carried-over rho side group."""
    out = []
    for c in rec.psi.left_transversal(rec.inter):
        word = rec.psi.factorize(c)
        s = rec.rho.eval_word(word)
        base = el.multiply(s, rec.rep)
        for i in rec.rho.sccs[rec.rho_scc]:
            u, _ = rec.rho.rect_elts(i, rec.rho_pt)
            out.append(make_rclass_record(el.multiply(u, base), rec.lam, rec.rho))
    return out


def lclasses_of_dclass(rec):
    """One L-class record per L-class of the D-class; representatives are
    rep.s.u with u walking the lambda scc and s pulled back from a
    transversal of the intersection inside the lambda side group."""
    out = []
    for c in rec.sx_transversal():
        word = rec.sx.factorize(c)
        s = rec.lam.eval_word(word)
        base = el.multiply(rec.rep, s)
        for i in rec.lam.sccs[rec.lam_scc]:
            u, _ = rec.lam.rect_elts(i, rec.lam_pt)
            out.append(make_lclass_record(el.multiply(base, u), rec.lam, rec.rho))
    return out
