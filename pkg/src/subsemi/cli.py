"""Command line interface.

Most subcommands read a generator file (see examples/) and answer a
structure question about the semigroup those elements generate: size,
class counts, membership, factorization, idempotents, regularity, or
the partial order of D-classes as a DOT digraph.  `selftest` runs a
built in suite of known answers plus seeded randomized comparisons
against the exhaustive oracle.

Exit codes: 0 on success, 1 for a semantically negative answer
(membership/regularity false, factorization of a non-element) or a
failed selftest, 2 for usage and parse errors.
"""

import argparse
import random
import sys

from . import elements as el
from . import oracle
from .elements import ParseError, format_element, parse_cycles, parse_element
from .engine import ModeViolation, NotAnElement, Semigroup

MODES = ("generic", "regular", "inverse")


def _content(raw):
    return raw.split("#", 1)[0].strip()


def _parse_rzms_block(lines, i, path):
    degree = None
    rows = []
    while i < len(lines):
        lineno = i + 1
        line = _content(lines[i])
        i += 1
        if not line:
            continue
        if line == "rzms end":
            if degree is None or not rows:
                raise ParseError("%s:%d: rzms block needs a degree and rows" % (path, lineno))
            try:
                ctx = el.RZMSContext(len(rows[0]), len(rows), degree, rows)
            except el.ElementError as err:
                raise ParseError("%s:%d: %s" % (path, lineno, err))
            return ctx, i
        parts = line.split(None, 1)
        if parts[0] == "degree" and len(parts) == 2:
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError("%s:%d: bad degree %r" % (path, lineno, parts[1]))
            continue
        if parts[0] == "row" and len(parts) == 2:
            if degree is None:
                raise ParseError("%s:%d: degree must come before the rows" % (path, lineno))
            row = []
            for entry in parts[1].split("|"):
                entry = entry.strip()
                if entry == "0":
                    row.append(None)
                else:
                    try:
                        row.append(parse_cycles(entry, degree))
                    except ParseError as err:
                        raise ParseError("%s:%d: %s" % (path, lineno, err))
            if rows and len(row) != len(rows[0]):
                raise ParseError("%s:%d: rows have different lengths" % (path, lineno))
            rows.append(row)
            continue
        raise ParseError("%s:%d: unexpected line in rzms block: %r" % (path, lineno, line))
    raise ParseError("%s: rzms block never ends" % (path,))


def load_gens_file(path):
    """Read a generator file: comment and blank lines, an optional 'mode'
    directive, an optional rzms block, then one element per line.
    Returns (generators, context or None, mode or None)."""
    try:
        with open(path) as handle:
            lines = handle.read().splitlines()
    except OSError as err:
        raise ParseError(str(err))
    gens = []
    ctx = None
    mode = None
    i = 0
    while i < len(lines):
        lineno = i + 1
        line = _content(lines[i])
        i += 1
        if not line:
            continue
        parts = line.split(None, 1)
        if parts[0] == "mode" and len(parts) == 2:
            if parts[1] not in MODES:
                raise ParseError("%s:%d: unknown mode %r" % (path, lineno, parts[1]))
            mode = parts[1]
            continue
        if line == "rzms begin":
            if ctx is not None:
                raise ParseError("%s:%d: a second rzms block" % (path, lineno))
            ctx, i = _parse_rzms_block(lines, i, path)
            continue
        try:
            gens.append(parse_element(line, ctx))
        except ParseError as err:
            raise ParseError("%s:%d: %s" % (path, lineno, err))
    if not gens:
        raise ParseError("%s: no generators" % (path,))
    return gens, ctx, mode


def format_word(word):
    return " ".join("x%d" % (j + 1) for j in word)


def dorder_dot(dorder):
    out = ["digraph dclasses {"]
    for d in range(dorder.n):
        out.append("  D%d;" % d)
    for upper, lower in dorder.hasse:
        out.append("  D%d -> D%d;" % (upper, lower))
    out.append("}")
    return "\n".join(out) + "\n"


T_GENS = [el.Transformation(t) for t in (
    [1, 3, 2, 4, 5], [2, 3, 1, 5, 4], [1, 3, 3, 2, 2])]
S_GENS = [el.PartialPerm(p) for p in (
    [4, 6, 8, 1, 5, 2, 7, 3, 9],
    [5, 7, 9, 2, 4, 1, 6, 3, 8],
    [0, 5, 0, 0, 6, 2, 0, 0, 0],
    [3, 1, 2, 0, 0, 0, 0, 0, 0])]


def _rand_transformation(rng, n):
    return el.Transformation([rng.randint(1, n) for _ in range(n)])


def _rand_pperm(rng, n):
    k = rng.randint(0, n)
    out = [0] * n
    for d, v in zip(rng.sample(range(n), k), rng.sample(range(1, n + 1), k)):
        out[d] = v
    return el.PartialPerm(out)


def _rand_bipartition(rng, n):
    return el.Bipartition.from_tuple(tuple(rng.randint(1, n) for _ in range(2 * n)))


def _rand_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def _rand_rzms_context(rng):
    nr_i = rng.randint(1, 3)
    nr_j = rng.randint(1, 3)
    degree = rng.randint(1, 4)
    matrix = [[_rand_perm(rng, degree) if rng.random() < 0.6 else None
               for _ in range(nr_i)] for _ in range(nr_j)]
    for j in range(nr_j):
        if all(p is None for p in matrix[j]):
            matrix[j][rng.randrange(nr_i)] = _rand_perm(rng, degree)
    for i in range(nr_i):
        if all(row[i] is None for row in matrix):
            matrix[rng.randrange(nr_j)][i] = _rand_perm(rng, degree)
    return el.RZMSContext(nr_i, nr_j, degree, matrix)


def _rand_rzms_element(rng, ctx):
    if rng.random() < 0.1:
        return ctx.zero()
    return el.RZMSElement(ctx, rng.randint(1, ctx.nr_i),
                          _rand_perm(rng, ctx.degree), rng.randint(1, ctx.nr_j))


def _rand_gens(rng, kind):
    if kind == "t":
        return [_rand_transformation(rng, 4) for _ in range(rng.randint(1, 3))]
    if kind == "p":
        return [_rand_pperm(rng, 4) for _ in range(rng.randint(1, 3))]
    if kind == "b":
        return [_rand_bipartition(rng, 3) for _ in range(rng.randint(1, 3))]
    ctx = _rand_rzms_context(rng)
    return [_rand_rzms_element(rng, ctx) for _ in range(rng.randint(1, 3))]


def run_selftest(seed, out=None):
    out = out if out is not None else sys.stdout
    failures = []

    def check(cond, label):
        if not cond:
            failures.append(label)

    T = Semigroup(T_GENS)
    check(T.size() == 75, "size of T")
    check([n for _, n in T.size_breakdown()] == [12, 18, 42, 3], "size breakdown of T")
    check(T.nr_classes("R") == 12, "R-class count of T")
    check(T.nr_classes("D") == 5, "D-class count of T")
    y = el.Transformation([2, 3, 3, 2, 2])
    check(T.contains(y), "membership of a known element of T")
    check(T.evaluate(T.factorize(y)) == y, "factorization round trip in T")
    check(not T.contains(el.Transformation([1, 2, 3, 3, 1])),
          "rejection of a foreign kernel")
    print("fixed checks on T done", file=out)

    S = Semigroup(S_GENS, mode="inverse")
    check(S.size() == 172, "size of S in inverse mode")
    check(Semigroup(S_GENS).size() == 172, "size of S in generic mode")
    check(S.nr_classes("R") == 16, "R-class count of S")
    probe = el.PartialPerm([5, 7, 9, 0, 0, 0, 0, 0, 0])
    check(S.contains(probe), "membership of a known element of S")
    check(S.evaluate(S.factorize(probe)) == probe, "factorization round trip in S")
    print("fixed checks on S done", file=out)

    rng = random.Random(seed)
    for round_no in range(2):
        for kind in ("t", "p", "b", "r"):
            gens = _rand_gens(rng, kind)
            sem = Semigroup(gens)
            closure = oracle.exhaustive_closure(gens)
            tag = "random %s #%d" % (kind, round_no)
            check(sem.size() == len(closure[0]), "%s: size" % tag)
            for which in "RLHD":
                check(sem.nr_classes(which) == len(oracle.oracle_green(closure, which)),
                      "%s: %s-class count" % (tag, which))
            check(sem.is_regular_semigroup() == oracle.oracle_is_regular(closure),
                  "%s: regularity" % tag)
            check(len(sem.idempotents()) == len(oracle.oracle_idempotents(closure)),
                  "%s: idempotent count" % tag)
    print("randomized oracle comparisons done (seed %d)" % seed, file=out)

    if failures:
        for label in failures:
            print("selftest FAILED: %s" % label, file=out)
        return 1
    print("selftest ok", file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="subsemi",
        description="structure of a finitely generated subsemigroup")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, element=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("gens_file", help="generator file")
        p.add_argument("--mode", choices=MODES, default=None,
                       help="enumeration mode for files without a mode directive")
        if element:
            p.add_argument("element", help="element, same syntax as in the file")
        return p

    add("size", "number of elements")
    add("classes", "number of R-, L-, H- and D-classes")
    add("contains", "is the element in the semigroup", element=True)
    add("factorize", "write the element as a word in the generators", element=True)
    add("idempotents", "list the idempotents, one per line")
    add("regular", "is the semigroup regular")
    p = add("dorder", "partial order of D-classes as a DOT digraph")
    p.add_argument("--dot", metavar="PATH", default=None,
                   help="write the digraph here instead of stdout")
    p = sub.add_parser("selftest", help="run the built in checks")
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return run_selftest(args.seed)
    try:
        gens, ctx, file_mode = load_gens_file(args.gens_file)
        mode = file_mode or args.mode or "generic"
        sem = Semigroup(gens, mode)
        if args.command == "size":
            print(sem.size())
            return 0
        if args.command == "classes":
            for which in "RLHD":
                print("%s-classes: %d" % (which, sem.nr_classes(which)))
            return 0
        if args.command == "contains":
            found = sem.contains(parse_element(args.element, ctx))
            print("true" if found else "false")
            return 0 if found else 1
        if args.command == "factorize":
            y = parse_element(args.element, ctx)
            try:
                word = sem.factorize(y)
            except NotAnElement:
                print("not an element", file=sys.stderr)
                return 1
            print(format_word(word))
            return 0
        if args.command == "idempotents":
            for e in sem.idempotents():
                print(format_element(e))
            return 0
        if args.command == "regular":
            flag = sem.is_regular_semigroup()
            print("true" if flag else "false")
            return 0 if flag else 1
        if args.command == "dorder":
            dot = dorder_dot(sem.dclass_partial_order())
            if args.dot is None:
                sys.stdout.write(dot)
            else:
                with open(args.dot, "w") as handle:
                    handle.write(dot)
            return 0
        raise AssertionError(args.command)
    except ParseError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except ModeViolation as err:
        print("mode violation: %s" % err, file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
