"""Brute-force reference computations used as test oracles.

Nothing here goes through the package's enumeration, action or linear
algebra code: determinants come from cofactor expansion, forms are compared
through their value tables, and explicit groups only borrow `FiniteGroup`
as a multiplication-table container.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from extorb.groups import FiniteGroup


def det(a, p):
    n = len(a)
    if n == 1:
        return a[0][0] % p
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total += (-1) ** j * a[0][j] * det(minor, p)
    return total % p


@lru_cache(maxsize=None)
def gl(m, p):
    """Every invertible m x m matrix over F_p as a numpy stack."""
    out = []
    for entries in itertools.product(range(p), repeat=m * m):
        a = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
        if det(a, p):
            out.append(a)
    return np.array(out, dtype=np.int64).reshape(-1, m, m)


def vectors(m, p=2):
    """All of F_p^m as rows, in lexicographic order."""
    return np.array(list(itertools.product(range(p), repeat=m)), dtype=np.int64).reshape(-1, m)


def quad_table(terms, m):
    """Values of sum x_i x_j over (i, j) in terms on every vector of F_2^m."""
    v = vectors(m)
    out = np.zeros(len(v), dtype=np.int64)
    for i, j in terms:
        out ^= v[:, i] & v[:, j]
    return out


def vector_index(m, p=2):
    w = p ** np.arange(m - 1, -1, -1)
    return lambda rows: rows @ w


def table_orbit_images(tables, m):
    """tables: (n, 2^m) value tables.  Returns (|GL_m|, n, 2^m) with the
    tables precomposed with every g in GL_m."""
    v = vectors(m)
    idx = vector_index(m)
    g = gl(m, 2)
    moved = np.einsum("gij,vj->gvi", g, v) % 2  # g v for every g and v
    pos = idx(moved)  # (G, V)
    return np.asarray(tables)[:, pos].transpose(1, 0, 2)


def joint_order_f2(tables, m):
    """#{(g, u) in GL_m x GL_n : sum_i u_ij Q_i(g v) = Q_j(v) for all v, j}."""
    tables = np.asarray(tables)
    n = len(tables)
    moved = table_orbit_images(tables, m)  # (G, n, V)
    us = gl(n, 2)
    count = 0
    for lo in range(0, len(moved), 512):
        mixed = np.einsum("uij,giv->gujv", us, moved[lo:lo + 512]) % 2  # (g, U, n, V)
        count += int((mixed == tables[None, None]).all(axis=(2, 3)).sum())
    return count


def stab_order_f2(tables, m):
    moved = table_orbit_images(tables, m)
    return int((moved == np.asarray(tables)[None]).all(axis=(1, 2)).sum())


def form_orbits_f2(m):
    """Partition of all quadratic forms in m variables into GL_m(F_2) orbits,
    forms keyed by their value tables."""
    pairs = [(i, j) for i in range(m) for j in range(i, m)]
    seen, orbits = {}, []
    g = gl(m, 2)
    v = vectors(m)
    pos = vector_index(m)(np.einsum("gij,vj->gvi", g, v) % 2)
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        terms = [ij for ij, b in zip(pairs, bits) if b]
        t = quad_table(terms, m)
        key = t.tobytes()
        if key in seen:
            continue
        members = {tuple(t[row]) for row in pos}
        k = len(orbits)
        for mem in members:
            seen[np.array(mem, dtype=np.int64).tobytes()] = k
        orbits.append(members)
    return orbits


def alt_joint_order(components, m, n, p):
    """Joint stabilizer order for odd-p classes given as (A, b) pairs with A
    antisymmetric and b a vector: #{(g, u) : sum_i u_ij (g^T A_i g, g^T b_i) = (A_j, b_j)}."""
    A = np.array([c[0] for c in components], dtype=np.int64) % p  # (n, m, m)
    b = np.array([c[1] for c in components], dtype=np.int64) % p  # (n, m)
    count = 0
    us = gl(n, p)
    for g in gl(m, p):
        ga = np.einsum("ki,nkl,lj->nij", g, A, g) % p
        gb = (b @ g) % p
        ma = np.einsum("uij,ikl->ujkl", us, ga) % p
        mb = np.einsum("uij,ik->ujk", us, gb) % p
        ok = (ma == A[None]).all(axis=(1, 2, 3)) & (mb == b[None]).all(axis=(1, 2))
        count += int(ok.sum())
    return count


def c_chi_bruteforce(p):
    """Pairs (s, t) in GL_2(F_p)^2 with X^((s q)_0) = t X^(q_0) t^-1 for every q,
    where X sends c -> c + d, d -> d, and the second generator acts trivially."""
    g = gl(2, p)
    X = np.array([[1, 0], [1, 1]])
    powers = [np.linalg.matrix_power(X, k) % p for k in range(p)]
    qs = vectors(2, p)
    chi_q = np.array([powers[q[0]] for q in qs])  # (Q, 2, 2)
    count, members = 0, []
    for s in g:
        targets = np.array([powers[(s @ q)[0] % p] for q in qs])  # chi(s q)
        lhs = np.einsum("tij,qjk->tqik", g, chi_q) % p
        rhs = np.einsum("qij,tjk->tqik", targets, g) % p
        ok = (lhs == rhs).all(axis=(1, 2, 3))
        count += int(ok.sum())
        members += [(s, t) for t in g[ok]]
    return count, members


# -- explicit small groups ------------------------------------------------------------

def cyclic(n):
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def product(*factors):
    elems = list(itertools.product(*[range(g.order) for g in factors]))
    return FiniteGroup.from_elements(
        elems, lambda a, b: tuple(g.mul(x, y) for g, x, y in zip(factors, a, b)),
        identity=tuple(g.identity for g in factors))


def perms(gens):
    """Closure of a set of permutations given as tuples."""
    n = len(gens[0])
    ident = tuple(range(n))
    elems, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple(a[g[i]] for i in range(n))
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    elems = sorted(elems)
    return FiniteGroup.from_elements(elems, lambda a, b: tuple(a[b[i]] for i in range(n)), identity=ident)


QUAT = {  # unit quaternions as (sign, axis) with axis in 1, i, j, k
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternions():
    elems = [(s, a) for s in (1, -1) for a in "1ijk"]

    def mul(x, y):
        s, a = QUAT[x[1], y[1]]
        return (x[0] * y[0] * s, a)

    return FiniteGroup.from_elements(elems, mul, identity=(1, "1"))


def pauli():
    base = [np.eye(2, dtype=complex), np.array([[0, 1], [1, 0]], dtype=complex),
            np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]], dtype=complex)]
    elems = [ph * b for ph in (1, 1j, -1, -1j) for b in base]

    def key(a):
        return tuple(np.round(a, 6).ravel().tolist())

    return FiniteGroup.from_elements(elems, lambda a, b: a @ b, key=key, identity=np.eye(2, dtype=complex))


def aut_count(group: FiniteGroup, gens):
    """|Aut(group)| by trying every image of a generating tuple."""
    n = group.order
    steps, seen, frontier = [], {group.identity}, [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for k, x in enumerate(gens):
                h = group.mul(g, x)
                if h not in seen:
                    seen.add(h)
                    steps.append((h, g, k))
                    nxt.append(h)
        frontier = nxt
    if len(seen) != n:
        raise ValueError("tuple does not generate")
    count = 0
    for imgs in itertools.product(range(n), repeat=len(gens)):
        phi = {group.identity: group.identity}
        for h, g, k in steps:
            phi[h] = group.mul(phi[g], imgs[k])
        if len(set(phi.values())) != n:
            continue
        if all(phi[group.mul(g, x)] == group.mul(phi[g], imgs[k]) for g in range(n) for k, x in enumerate(gens)):
            count += 1
    return count
