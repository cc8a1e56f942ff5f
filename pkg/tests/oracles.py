"""Brute-force reference computations, deliberately independent of the library's algorithms.

Only the scalar field arithmetic is shared; everything else (codeword lists,
spans, independence, homology ranks) is recomputed here from definitions.
"""

import itertools


def all_codewords(field, generator_rows):
    rows = [list(r) for r in generator_rows]
    n = len(rows[0]) if rows else 0
    words = set()
    for coeffs in itertools.product(range(field.q), repeat=len(rows)):
        w = [0] * n
        for c, row in zip(coeffs, rows):
            w = [field.add(x, field.mul(c, y)) for x, y in zip(w, row)]
        words.add(tuple(w))
    return words


def span(field, vectors, n):
    out = {tuple([0] * n)}
    for v in vectors:
        new = set()
        for w in out:
            for c in range(field.q):
                new.add(tuple(field.add(x, field.mul(c, y)) for x, y in zip(w, v)))
        out = new
    return frozenset(out)


def subspaces(field, words, n, dim):
    """All dim-dimensional subspaces spanned by codewords, each as a frozenset of vectors."""
    words = [w for w in words if any(w)]
    size = field.q ** dim
    found = set()
    for combo in itertools.combinations(words, dim):
        s = span(field, combo, n)
        if len(s) == size:
            found.add(s)
    return found


def supp(vectors):
    return frozenset(j + 1 for v in vectors for j, x in enumerate(v) if x)


def brute_hierarchy(field, generator_rows):
    rows = [list(r) for r in generator_rows]
    n = len(rows[0])
    words = all_codewords(field, rows)
    k = len(rows)
    return tuple(min(len(supp(s)) for s in subspaces(field, words, n, i)) for i in range(1, k + 1))


def dependent_sets_from_codewords(words, n):
    """tau is dependent in the parity-check matroid iff a nonzero codeword lives inside tau."""
    supports = {supp([w]) for w in words if any(w)}
    return lambda tau: any(s <= tau for s in supports)


def brute_nullity(words, q):
    """nullity(sigma) = dim of the subcode supported inside sigma = log_q #{c : Supp(c) <= sigma}."""
    supports = [supp([w]) for w in words]

    def nullity(sigma):
        count = sum(1 for s in supports if s <= sigma)
        d = 0
        while q ** d < count:
            d += 1
        assert q ** d == count
        return d

    return nullity


def minimal_nullity_sets(nullity, n, i):
    """Full 2^n sweep for inclusion-minimal sets of nullity exactly i."""
    out = set()
    for r in range(n + 1):
        for combo in itertools.combinations(range(1, n + 1), r):
            s = frozenset(combo)
            if nullity(s) == i and all(nullity(s - {x}) == i - 1 for x in s):
                out.add(s)
    return out


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def reduced_homology(faces, j, p):
    """dim H~_j over GF(p) for a complex given as a set of sorted tuples (must include () unless void)."""
    def of_size(s):
        return sorted(f for f in faces if len(f) == s)

    def bd_rank(upper, lower):
        if not upper or not lower:
            return 0
        idx = {f: r for r, f in enumerate(lower)}
        mat = [[0] * len(upper) for _ in lower]
        for c, f in enumerate(upper):
            for pos in range(len(f)):
                mat[idx[f[:pos] + f[pos + 1:]]][c] = (-1) ** pos % p
        return rank_mod_p(mat, p)

    here = of_size(j + 1)
    if not here:
        return 0
    return len(here) - bd_rank(here, of_size(j)) - bd_rank(of_size(j + 2), here)


def brute_betti_table(words, n, p=2):
    """Hochster's formula evaluated on every subset of the ground set."""
    dependent = dependent_sets_from_codewords(words, n)
    table = {}
    for r in range(n + 1):
        for sigma in itertools.combinations(range(1, n + 1), r):
            faces = {
                t for s in range(r + 1) for t in itertools.combinations(sigma, s)
                if not dependent(frozenset(t))
            }
            for i in range(0, r + 1):
                b = reduced_homology(faces, r - i - 1, p)
                if b:
                    table[(i, frozenset(sigma))] = b
    return table
