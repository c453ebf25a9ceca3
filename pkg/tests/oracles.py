"""Brute-force reference computations, kept independent of the library code.

Sets are plain sorted tuples of ints here; nothing from ``zsets`` is imported.
"""

from itertools import combinations, permutations


def ifunc(a, b, n):
    bs = set(b)
    return tuple(sum(1 for k in a if (k + d) % n in bs) for d in range(n))


def ivec(a, n):
    out = [0] * n
    for x in a:
        for y in a:
            out[(y - x) % n] += 1
    return tuple(out)


def icontent(a, n):
    iv = ivec(a, n)
    digits = list(iv[1 : n // 2 + 1])
    if n % 2 == 0:
        digits[-1] //= 2
    return tuple(digits)


def dihedral_images(a, n):
    out = []
    for t in range(n):
        out.append(tuple(sorted((x + t) % n for x in a)))
        out.append(tuple(sorted((t - x) % n for x in a)))
    return out


def canonical(a, n):
    return min(dihedral_images(a, n))


def classes(n, k):
    return sorted({canonical(c, n) for c in combinations(range(n), k)})


def tuples(n, k):
    """Homometric tuples as sorted lists of canonical tuples, via plain dicts."""
    cells = {}
    for c in classes(n, k):
        cells.setdefault(icontent(c, n), []).append(c)
    return sorted(sorted(v) for v in cells.values() if len(v) >= 2)


def group_closure(gens):
    """All products of the generators (tuples of images), by breadth-first search."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    todo = [ident]
    while todo:
        x = todo.pop()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def graph_aut_count(n, edges, colors):
    es = {frozenset(e) for e in edges}
    count = 0
    for p in permutations(range(n)):
        if any(colors[i] != colors[p[i]] for i in range(n)):
            continue
        if all(frozenset((p[u], p[v])) in es for u, v in edges):
            count += 1
    return count


def family_aut_count(n, blocks):
    """Point permutations mapping a set family onto itself."""
    fam = {frozenset(b) for b in blocks}
    return sum(
        1
        for p in permutations(range(n))
        if all(frozenset(p[x] for x in b) in fam for b in fam)
    )
