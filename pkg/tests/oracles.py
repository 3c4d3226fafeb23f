"""Slow reference implementations used to cross-check the package.

Everything here is plain nested loops over Python lists, deliberately
sharing no code with twistalg.
"""
from itertools import permutations, product


def lattice_ops(n, le):
    """meet/join tables from an order given as a predicate ``le(x, y)``."""
    def glb(x, y):
        lower = [z for z in range(n) if le(z, x) and le(z, y)]
        return next(z for z in lower if all(le(w, z) for w in lower))

    def lub(x, y):
        upper = [z for z in range(n) if le(x, z) and le(y, z)]
        return next(z for z in upper if all(le(z, w) for w in upper))

    meet = [[glb(x, y) for y in range(n)] for x in range(n)]
    join = [[lub(x, y) for y in range(n)] for x in range(n)]
    return meet, join


def chain_ops(n):
    return lattice_ops(n, lambda x, y: x <= y)


def diamond_ops():
    # 0 < a, b < 1 with a, b incomparable; indices 0 a b 1
    up = {0: {0, 1, 2, 3}, 1: {1, 3}, 2: {2, 3}, 3: {3}}
    return lattice_ops(4, lambda x, y: y in up[x])


def is_semi_heyting(n, meet, imp, top):
    for x in range(n):
        if imp[x][x] != top:
            return False
        for y in range(n):
            if meet[x][imp[x][y]] != meet[x][y]:
                return False
            for z in range(n):
                if meet[x][imp[y][z]] != meet[x][imp[meet[x][y]][meet[x][z]]]:
                    return False
    return True


def is_heyting(n, meet, imp, top):
    return is_semi_heyting(n, meet, imp, top) and all(
        imp[meet[x][y]][x] == top for x in range(n) for y in range(n)
    )


def semi_heyting_tables(n, meet, top):
    """Every implication table; cells are pre-filtered by x & (x => y) = x & y."""
    cells = [(x, y) for x in range(n) for y in range(n)]
    choices = []
    for x, y in cells:
        if x == y:
            choices.append([top])
        else:
            choices.append([v for v in range(n) if meet[x][v] == meet[x][y]])
    out = []
    for vals in product(*choices):
        imp = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
        if is_semi_heyting(n, meet, imp, top):
            out.append(imp)
    return out


def semi_heyting_tables_unfiltered(n, meet, top):
    """Every table with no pruning at all (feasible only for n <= 3)."""
    out = []
    for vals in product(range(n), repeat=n * n):
        imp = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
        if is_semi_heyting(n, meet, imp, top):
            out.append(imp)
    return out


def ifilters(n, meet, join, imp, bottom, top):
    """All subsets satisfying IF1-IF3, as sorted tuples."""
    star = [imp[x][bottom] for x in range(n)]
    dense = {x for x in range(n) if star[x] == bottom}
    found = []
    for bits in range(1 << n):
        F = {x for x in range(n) if bits >> x & 1}
        if top not in F:
            continue
        if any(meet[x][y] not in F for x in F for y in F):
            continue
        if any(join[x][y] not in F for x in F for y in range(n)):
            continue
        if not dense <= F:
            continue
        ok = all(
            join[imp[x][z]][meet[x][t]] in F
            for z in range(n)
            for t in range(n)
            if join[z][t] in F
            for x in range(n)
        )
        if ok:
            found.append(tuple(sorted(F)))
    return found


def isomorphic(n, tables_a, tables_b):
    """Is there a permutation carrying each table of a onto the matching table of b?"""
    for p in permutations(range(n)):
        good = True
        for ta, tb in zip(tables_a, tables_b):
            if isinstance(ta[0], list):
                if any(p[ta[x][y]] != tb[p[x]][p[y]] for x in range(n) for y in range(n)):
                    good = False
                    break
            elif any(p[ta[x]] != tb[p[x]] for x in range(n)):
                good = False
                break
        if good:
            return p
    return None
