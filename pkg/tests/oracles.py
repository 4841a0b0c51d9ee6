"""Slow, independent reference implementations used only by the tests.

None of these share code with the package: determinants by cofactor
expansion, solves by Cramer's rule, fundamental cycles by exhaustive search,
Zariski decompositions by trying every support.
"""

import functools
import itertools
from fractions import Fraction

import numpy as np


def det(M):
    """Laplace expansion along the first row (exact, fine for n <= 6)."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * Fraction(M[0][j]) * det(minor)
    return total


def cramer(M, b):
    d = det(M)
    if d == 0:
        return None
    out = []
    for j in range(len(M)):
        Mj = [row[:j] + [b[i]] + row[j + 1:] for i, row in enumerate(M)]
        out.append(det(Mj) / d)
    return out


def principal(M, idx):
    return [[M[i][j] for j in idx] for i in idx]


def negative_definite_all_minors(M):
    """-M positive definite iff every principal minor of -M is positive."""
    n = len(M)
    neg = [[-x for x in row] for row in M]
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            if det(principal(neg, idx)) <= 0:
                return False
    return True


def brute_fundamental_cycle(rows, max_coeff=6):
    """Smallest non-zero effective Z (entries <= max_coeff) with Z.C_i <= 0."""
    M = np.array(rows, dtype=np.int64)
    grid = _grid(len(rows), max_coeff)
    anti_nef = grid[(grid @ M <= 0).all(axis=1)]
    if len(anti_nef) == 0:
        return None
    best = anti_nef[anti_nef.sum(axis=1).argmin()]
    # minimality in the componentwise order, not just in total degree
    if not (anti_nef >= best).all(axis=1).all():
        raise AssertionError("anti-nef cycles have no componentwise minimum")
    return [int(x) for x in best]


@functools.lru_cache(maxsize=None)
def _grid(n, max_coeff):
    g = np.array(list(itertools.product(range(max_coeff + 1), repeat=n)), dtype=np.int64)
    return g[g.any(axis=1)]


def zariski_by_subsets(M, pairings):
    """Every N (as a tuple) obtained from some support S with M_S negative
    definite, N_S solving (D - N).C_i = 0 on S, N >= 0 and D - N nef."""
    n = len(M)
    found = set()
    for k in range(n + 1):
        for S in itertools.combinations(range(n), k):
            if S and not negative_definite_all_minors(principal(M, S)):
                continue
            N = [Fraction(0)] * n
            if S:
                sol = cramer(principal(M, S), [pairings[i] for i in S])
                for i, c in zip(S, sol):
                    N[i] = c
            if any(c < 0 for c in N):
                continue
            P = [pairings[i] - sum(M[i][j] * N[j] for j in range(n)) for i in range(n)]
            if any(p < 0 for p in P):
                continue
            if any(P[i] != 0 for i in S):
                continue
            found.add(tuple(N))
    return found


def chain_orbits(n, max_weight):
    """Chains of length n up to reversal, counted by brute force."""
    seen = set()
    for t in itertools.product(range(2, max_weight + 1), repeat=n):
        seen.add(min(t, t[::-1]))
    return seen


def tree_canonical(weights, edges):
    """Weighted unrooted-tree canonical string (AHU on the tree centre)."""
    n = len(weights)
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)

    def enc(v, parent):
        kids = sorted(enc(u, v) for u in adj[v] if u != parent)
        return f"({weights[v]}{''.join(kids)})"

    # centres: peel leaves
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return min(enc(c, -1) for c in layer)
