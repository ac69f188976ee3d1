"""Shared test data: the two running examples and random samplers."""

from subsemi import elements as el

T_GENS = [el.Transformation(t) for t in (
    [1, 3, 2, 4, 5], [2, 3, 1, 5, 4], [1, 3, 3, 2, 2])]

S_GENS = [el.PartialPerm(p) for p in (
    [4, 6, 8, 1, 5, 2, 7, 3, 9],
    [5, 7, 9, 2, 4, 1, 6, 3, 8],
    [0, 5, 0, 0, 6, 2, 0, 0, 0],
    [3, 1, 2, 0, 0, 0, 0, 0, 0])]


def rand_transformation(rng, n):
    return el.Transformation([rng.randint(1, n) for _ in range(n)])


def rand_pperm(rng, n):
    k = rng.randint(0, n)
    out = [0] * n
    for d, v in zip(rng.sample(range(n), k), rng.sample(range(1, n + 1), k)):
        out[d] = v
    return el.PartialPerm(out)


def rand_bipartition(rng, n):
    return el.Bipartition.from_tuple(tuple(rng.randint(1, n) for _ in range(2 * n)))


def rand_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def rand_rzms_context(rng, max_side=3, max_degree=4):
    nr_i = rng.randint(1, max_side)
    nr_j = rng.randint(1, max_side)
    degree = rng.randint(1, max_degree)
    matrix = [[rand_perm(rng, degree) if rng.random() < 0.6 else None
               for _ in range(nr_i)] for _ in range(nr_j)]
    for j in range(nr_j):
        if all(p is None for p in matrix[j]):
            matrix[j][rng.randrange(nr_i)] = rand_perm(rng, degree)
    for i in range(nr_i):
        if all(row[i] is None for row in matrix):
            matrix[rng.randrange(nr_j)][i] = rand_perm(rng, degree)
    return el.RZMSContext(nr_i, nr_j, degree, matrix)


def rand_rzms_element(rng, ctx):
    if rng.random() < 0.1:
        return ctx.zero()
    return el.RZMSElement(ctx, rng.randint(1, ctx.nr_i),
                          rand_perm(rng, ctx.degree), rng.randint(1, ctx.nr_j))


def rand_gens(rng, kind, degree=4, count=None):
    count = count or rng.randint(1, 3)
    if kind == "t":
        return [rand_transformation(rng, degree) for _ in range(count)]
    if kind == "p":
        return [rand_pperm(rng, degree) for _ in range(count)]
    if kind == "b":
        return [rand_bipartition(rng, degree) for _ in range(count)]
    ctx = rand_rzms_context(rng)
    return [rand_rzms_element(rng, ctx) for _ in range(count)]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid:
                name = nodeid.split("::")[-1]
                rows.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, verdict in sorted(rows):
            terminalreporter.write_line("%s  %s" % (verdict, name))
