"""Shared brute-force oracles and small example matroids for tests.

Everything here is deliberately independent of the library internals:
independence is re-derived from first principles (cycle search, Gaussian
elimination, size bounds), axioms are checked over all pairs without the
size-adjacent reduction, and ranks come from exhaustive enumeration.
"""

import random
from fractions import Fraction
from itertools import chain, combinations

from matroidlc import SparsePolynomial, from_independence_family, graphic, linear, uniform


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


# -- axiom oracle (all pairs, no reductions) -----------------------------


def brute_axiom_failure(family):
    """Return None when the family is a matroid, else the failed axiom.

    Checks downward closure via all subsets of every member, and the
    exchange property on every pair with |T| > |S|, not only adjacent
    sizes.
    """
    family = {frozenset(s) for s in family}
    if not family:
        return "nonempty"
    for t in family:
        for s in powerset(t):
            if frozenset(s) not in family:
                return "downward-closure"
    for s in family:
        for t in family:
            if len(t) > len(s) and not any(s | {i} in family for i in t - s):
                return "exchange"
    return None


def brute_rank(family, subset):
    subset = frozenset(subset)
    return max(len(s) for s in family if frozenset(s) <= subset)


# -- independence oracles per construction ---------------------------------


def has_cycle(edges):
    """Multigraph cycle test: a forest has |E| = |V| - #components."""
    if any(u == v for u, v in edges):
        return True
    vertices = {u for e in edges for u in e}
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    components = 0
    for start in vertices:
        if start in seen:
            continue
        components += 1
        seen.add(start)
        stack = [start]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return len(edges) != len(vertices) - components


def forest_independence_family(n_edges, edges):
    """All cycle-free edge subsets, via the brute cycle test."""
    out = set()
    for subset in powerset(range(n_edges)):
        chosen = [edges[i] for i in subset]
        if not has_cycle(chosen):
            out.add(frozenset(i + 1 for i in subset))
    return out


def gaussian_rank(columns, modulus):
    """Column rank by plain row-echelon elimination, no pivots cached."""
    if not columns:
        return 0
    height = len(columns[0])
    width = len(columns)
    if modulus:
        matrix = [[int(columns[j][i]) % modulus for j in range(width)] for i in range(height)]
    else:
        matrix = [[Fraction(columns[j][i]) for j in range(width)] for i in range(height)]
    rank = 0
    col = 0
    while rank < len(matrix) and col < width:
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        inv = pow(lead, -1, modulus) if modulus else 1 / lead
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col] * inv
                for c in range(col, width):
                    val = matrix[r][c] - factor * matrix[rank][c]
                    matrix[r][c] = val % modulus if modulus else val
        rank += 1
        col += 1
    return rank


def linear_independence_family(columns, modulus):
    out = set()
    for subset in powerset(range(len(columns))):
        chosen = [columns[i] for i in subset]
        if not chosen or gaussian_rank(chosen, modulus) == len(chosen):
            out.add(frozenset(i + 1 for i in subset))
    return out


# -- example matroids ------------------------------------------------------


def parallel_pair_plus_free():
    """Elements 1,2 parallel, element 3 free; counts (1, 3, 2, 0)."""
    return from_independence_family(3, [[], [1], [2], [3], [1, 3], [2, 3]])


def k3():
    return graphic(3, [(1, 2), (1, 3), (2, 3)])


def k4():
    return graphic(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def single_loop():
    return from_independence_family(1, [[]])


def zoo():
    """A spread of small matroids across all four constructions."""
    return [
        uniform(0, 2),
        uniform(1, 2),
        uniform(2, 2),
        uniform(2, 3),
        uniform(3, 5),
        single_loop(),
        parallel_pair_plus_free(),
        k3(),
        k4(),
        graphic(3, [(1, 2), (1, 2), (2, 3), (3, 3)]),
        linear([[1, 0], [0, 1], [1, 1]], 2),
        linear([[0, 0], [1, 2], [2, 4], [1, 0]], 5),
        linear([[Fraction(1, 2), 0], [1, 1], [0, 3]], 0),
    ]


# -- random generators (seeded, reused by acceptance tests) -------------------


def random_homogeneous_polynomial(rng: random.Random, nvars, degree, max_terms=8):
    """Random homogeneous polynomial with positive rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = [0] * nvars
        for _ in range(degree):
            exp[rng.randrange(nvars)] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + Fraction(rng.randint(1, 9), rng.randint(1, 4))
    return SparsePolynomial(nvars, terms)


def random_positive_point(rng: random.Random, nvars):
    return tuple(Fraction(rng.randint(1, 8), rng.randint(1, 4)) for _ in range(nvars))
