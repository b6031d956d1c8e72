"""Degree-two classes over F_p: quadratic forms over F_2 and, for odd p,
(alternating 2-form, Bockstein 1-form) pairs.

Both component types are immutable and expose the same small surface
(``p``, ``m``, ``vector``, ``from_vector``, ``change_basis``), so the
extension-class and orbit code can treat them uniformly.

The action of GL_m on components is fixed as ``(s.q)(v) = q(s^-1 v)``
(``convention="inverse"``); ``convention="transpose"`` gives the
alternative ``(s.q)(v) = q(s^T v)``.  Both are left actions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

import numpy as np

from . import fp
from .errors import DegenerateForm, InputError, WitnessSearchCapExceeded, ZeroForm
from .fp import FpMatrix, Subspace

CONVENTIONS = ("inverse", "transpose")
WITNESS_MAX_M = 4


@lru_cache(maxsize=None)
def quad_pairs(m: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(m) for j in range(i, m))


@lru_cache(maxsize=None)
def alt_pairs(m: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(m) for j in range(i + 1, m))


def coefficient_dim(p: int, m: int) -> int:
    """Dimension of H^2((Z/p)^m; F_p)."""
    return len(quad_pairs(m)) if p == 2 else len(alt_pairs(m)) + m


def acting_matrix(s: FpMatrix, convention: str = "inverse") -> FpMatrix:
    """The matrix h with (s.q)(v) = q(h v)."""
    if convention == "inverse":
        return fp.mat_inv(s)
    if convention == "transpose":
        return s.T
    raise InputError(f"unknown convention {convention!r}")


def _check_action(s: FpMatrix, p: int, m: int):
    if s.p != p:
        raise InputError(f"matrix over F_{s.p} acting on a class over F_{p}")
    if s.rows != m or s.cols != m:
        raise InputError(f"{s.rows}x{s.cols} matrix acting on forms in {m} variables")


@dataclass(frozen=True)
class QuadraticFormF2:
    """Q = sum_{i<=j} c_ij x_i x_j over F_2; coefficients in quad_pairs order."""

    m: int
    coeffs: tuple[int, ...]

    p = 2

    def __post_init__(self):
        coeffs = tuple(int(c) & 1 for c in self.coeffs)
        if len(coeffs) != len(quad_pairs(self.m)):
            raise InputError(f"{len(coeffs)} coefficients for a form in {self.m} variables")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_terms(cls, m: int, terms) -> QuadraticFormF2:
        """Build from an iterable of 0-based (i, j) monomials; repeats cancel."""
        index = {ij: k for k, ij in enumerate(quad_pairs(m))}
        c = [0] * len(index)
        for i, j in terms:
            i, j = min(i, j), max(i, j)
            if not 0 <= i <= j < m:
                raise InputError(f"variable index out of range for m={m}")
            c[index[i, j]] ^= 1
        return cls(m, tuple(c))

    @classmethod
    def zero(cls, m: int) -> QuadraticFormF2:
        return cls(m, (0,) * len(quad_pairs(m)))

    @classmethod
    def from_vector(cls, p: int, m: int, vec) -> QuadraticFormF2:
        if p != 2:
            raise InputError("quadratic forms are only used over F_2")
        return cls(m, tuple(vec))

    @classmethod
    def from_upper(cls, c) -> QuadraticFormF2:
        """From any square matrix C with Q(v) = v^T C v (folded to upper form)."""
        c = np.asarray(c) % 2
        m = c.shape[0]
        return cls(m, tuple(int(c[i, i]) if i == j else int(c[i, j] + c[j, i]) for i, j in quad_pairs(m)))

    @property
    def vector(self) -> tuple[int, ...]:
        return self.coeffs

    def coeff(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return self.coeffs[quad_pairs(self.m).index((i, j))]

    def terms(self) -> list[tuple[int, int]]:
        return [ij for ij, c in zip(quad_pairs(self.m), self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def upper(self) -> np.ndarray:
        c = np.zeros((self.m, self.m), dtype=np.int64)
        for (i, j), v in zip(quad_pairs(self.m), self.coeffs):
            c[i, j] = v
        return c

    def __call__(self, v) -> int:
        return sum(c & v[i] & v[j] for (i, j), c in zip(quad_pairs(self.m), self.coeffs)) & 1

    def __add__(self, other: QuadraticFormF2) -> QuadraticFormF2:
        if other.m != self.m:
            raise InputError("adding forms in different numbers of variables")
        return QuadraticFormF2(self.m, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> QuadraticFormF2:
        return self if k % 2 else QuadraticFormF2.zero(self.m)

    def change_basis(self, s: FpMatrix, convention: str = "inverse") -> QuadraticFormF2:
        _check_action(s, 2, self.m)
        h = acting_matrix(s, convention).to_numpy()
        return QuadraticFormF2.from_upper(h.T @ self.upper() @ h)

    def values(self) -> np.ndarray:
        """Q(v) for every v in F_2^m, with v encoded as an integer (bit i = v_i)."""
        if self.m > 24:
            raise InputError("exhaustive evaluation limited to m <= 24")
        vals = np.zeros(1, dtype=np.uint8)
        idx = np.zeros(1, dtype=np.int64)
        for k in range(self.m):
            mask = sum(1 << j for j in range(k) if self.coeff(j, k))
            par = np.bitwise_count(idx & mask).astype(np.uint8) & 1
            vals = np.concatenate([vals, vals ^ par ^ self.coeff(k, k)])
            idx = np.concatenate([idx, idx | (1 << k)])
        return vals

    def __str__(self):
        from .expr import format_component
        return format_component(self)


@dataclass(frozen=True)
class AlternatingBockstein:
    """Odd-p degree-two class: sum l_ij x_i^x_j (i<j) plus sum b_i beta(x_i)."""

    p: int
    m: int
    alt: tuple[int, ...]
    bock: tuple[int, ...]

    def __post_init__(self):
        p = fp.check_prime(self.p)
        if p == 2:
            raise InputError("alternating/Bockstein components need an odd prime")
        alt = tuple(int(a) % p for a in self.alt)
        bock = tuple(int(b) % p for b in self.bock)
        if len(alt) != len(alt_pairs(self.m)) or len(bock) != self.m:
            raise InputError(f"wrong coefficient counts for m={self.m}")
        object.__setattr__(self, "alt", alt)
        object.__setattr__(self, "bock", bock)

    @classmethod
    def zero(cls, p: int, m: int) -> AlternatingBockstein:
        return cls(p, m, (0,) * len(alt_pairs(m)), (0,) * m)

    @classmethod
    def from_terms(cls, p: int, m: int, wedges=(), bocksteins=()) -> AlternatingBockstein:
        """wedges: (i, j, coeff) with x_i^x_j = -x_j^x_i; bocksteins: (i, coeff)."""
        index = {ij: k for k, ij in enumerate(alt_pairs(m))}
        alt = [0] * len(index)
        bock = [0] * m
        for i, j, c in wedges:
            if i == j:
                continue
            if i > j:
                i, j, c = j, i, -c
            alt[index[i, j]] += c
        for i, c in bocksteins:
            bock[i] += c
        return cls(p, m, tuple(alt), tuple(bock))

    @classmethod
    def from_vector(cls, p: int, m: int, vec) -> AlternatingBockstein:
        k = len(alt_pairs(m))
        vec = tuple(vec)
        return cls(p, m, vec[:k], vec[k:])

    @property
    def vector(self) -> tuple[int, ...]:
        return self.alt + self.bock

    def is_zero(self) -> bool:
        return not any(self.vector)

    def antisym(self) -> np.ndarray:
        a = np.zeros((self.m, self.m), dtype=np.int64)
        for (i, j), v in zip(alt_pairs(self.m), self.alt):
            a[i, j] = v
            a[j, i] = -v
        return a

    def __add__(self, other: AlternatingBockstein) -> AlternatingBockstein:
        if (other.p, other.m) != (self.p, self.m):
            raise InputError("adding classes with different (p, m)")
        return AlternatingBockstein.from_vector(self.p, self.m, (a + b for a, b in zip(self.vector, other.vector)))

    def scale(self, k: int) -> AlternatingBockstein:
        return AlternatingBockstein.from_vector(self.p, self.m, (k * a for a in self.vector))

    def change_basis(self, s: FpMatrix, convention: str = "inverse") -> AlternatingBockstein:
        _check_action(s, self.p, self.m)
        h = acting_matrix(s, convention).to_numpy()
        a = h.T @ self.antisym() @ h
        b = h.T @ np.array(self.bock, dtype=np.int64)
        return AlternatingBockstein(self.p, self.m, tuple(int(a[i, j]) for i, j in alt_pairs(self.m)),
                                    tuple(int(x) for x in b))

    def __str__(self):
        from .expr import format_component
        return format_component(self)


ClassComponent = Union[QuadraticFormF2, AlternatingBockstein]


def zero_component(p: int, m: int) -> ClassComponent:
    return QuadraticFormF2.zero(m) if p == 2 else AlternatingBockstein.zero(p, m)


def component_from_vector(p: int, m: int, vec) -> ClassComponent:
    if p == 2:
        return QuadraticFormF2.from_vector(2, m, vec)
    return AlternatingBockstein.from_vector(p, m, vec)


def change_basis(q: ClassComponent, s: FpMatrix, convention: str = "inverse") -> ClassComponent:
    return q.change_basis(s, convention)


# -- invariants of quadratic forms ---------------------------------------------

@dataclass(frozen=True)
class FormTriple:
    dim: int
    bilrad_dim: int
    arf: int

    def __post_init__(self):
        if not 0 <= self.bilrad_dim <= self.dim or self.arf not in (1, -1, 0):
            raise InputError(f"invalid triple {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.dim, self.bilrad_dim, self.arf)


def bilinear_of(q: QuadraticFormF2) -> FpMatrix:
    """Matrix of B(x, y) = Q(x+y) + Q(x) + Q(y)."""
    c = q.upper()
    return FpMatrix.from_numpy((c + c.T) % 2, 2)


def _bil(q: QuadraticFormF2, u, v) -> int:
    return (q(tuple(a ^ b for a, b in zip(u, v))) + q(u) + q(v)) & 1


def bilrad(q: QuadraticFormF2) -> Subspace:
    return fp.kernel(bilinear_of(q))


def rad(q: QuadraticFormF2) -> Subspace:
    # Q is additive on bilrad, so rad is the kernel of a linear functional there.
    w = bilrad(q)
    vals = [q(b) for b in w.basis]
    if not any(vals):
        return w
    k0 = vals.index(1)
    pivot = w.basis[k0]
    vecs = [tuple(a ^ (val & b) for a, b in zip(vec, pivot))
            for k, (vec, val) in enumerate(zip(w.basis, vals)) if k != k0]
    return Subspace.span(vecs, 2, q.m)


def arf_democratic(q: QuadraticFormF2) -> int:
    """+1 if Q vanishes on a majority of V, -1 if it is 1 on a majority, 0 on a tie."""
    vals = q.values()
    ones = int(vals.sum())
    zeros = len(vals) - ones
    return (zeros > ones) - (ones > zeros)


def symplectic_decomposition(q: QuadraticFormF2, rng: random.Random | None = None):
    """Greedy symplectic basis for B.

    Returns ``(pairs, radical_basis)`` where B(u_i, v_i) = 1, distinct pairs
    are orthogonal, and radical_basis spans bilrad(q).  Without ``rng`` every
    choice is the lexicographically least admissible vector of the current
    working basis; with ``rng`` the working basis is randomly re-mixed first.
    """
    m = q.m
    work = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    if rng is not None:
        while True:
            g = FpMatrix(2, m, m, tuple(rng.randrange(2) for _ in range(m * m)))
            if g.is_invertible():
                break
        work = [g.row(i) for i in range(m)]
        rng.shuffle(work)
    pairs = []
    while True:
        work.sort(key=lambda v: v[::-1])
        found = None
        for a, u in enumerate(work):
            for b, v in enumerate(work):
                if _bil(q, u, v):
                    found = (a, b)
                    break
            if found:
                break
        if found is None:
            return pairs, work
        u, v = work[found[0]], work[found[1]]
        rest = []
        for k, w in enumerate(work):
            if k in found:
                continue
            bu, bv = _bil(q, w, u), _bil(q, w, v)
            rest.append(tuple(x ^ (bv & a) ^ (bu & b) for x, a, b in zip(w, u, v)))
        pairs.append((u, v))
        work = rest


def arf_symplectic(q: QuadraticFormF2, rng: random.Random | None = None) -> int:
    pairs, radical = symplectic_decomposition(q, rng)
    if radical:
        raise DegenerateForm(f"bilinear radical has dimension {len(radical)}")
    total = sum(q(u) & q(v) for u, v in pairs) & 1
    return -1 if total else 1


def classify(q: QuadraticFormF2) -> FormTriple:
    return FormTriple(q.m, bilrad(q).dim, arf_democratic(q))


def standard_form(kind: str, m: int, total: int | None = None) -> QuadraticFormF2:
    """Dickson forms; ``total`` pads with unused trailing variables."""
    total = m if total is None else total
    if total < m:
        raise InputError("padding smaller than the form")
    if kind in ("plus", "minus"):
        if m % 2:
            raise InputError(f"{kind} standard form needs m even, got {m}")
        terms = [(i, i + 1) for i in range(0, m, 2)]
        if kind == "minus" and m:
            terms += [(m - 2, m - 2), (m - 1, m - 1)]
    elif kind == "odd":
        if m % 2 == 0:
            raise InputError(f"odd standard form needs m odd, got {m}")
        terms = [(0, 0)] + [(i, i + 1) for i in range(1, m, 2)]
    else:
        raise InputError(f"unknown standard form kind {kind!r}")
    return QuadraticFormF2.from_terms(total, terms)


def standard_for_triple(t: FormTriple) -> QuadraticFormF2:
    """The padded Dickson form with a given classification triple."""
    if t.arf == 0:
        if t.bilrad_dim == 0:
            raise InputError(f"no quadratic form has triple {t.as_tuple()}")
        d = t.dim - t.bilrad_dim + 1
        return standard_form("odd", d, t.dim)
    d = t.dim - t.bilrad_dim
    if d == 0:
        if t.arf != 1:
            raise InputError(f"no quadratic form has triple {t.as_tuple()}")
        return QuadraticFormF2.zero(t.dim)
    return standard_form("plus" if t.arf == 1 else "minus", d, t.dim)


def standard_label(q: QuadraticFormF2) -> str:
    t = classify(q)
    if q.is_zero():
        return "zero form"
    if t.arf == 0:
        d = t.dim - t.bilrad_dim + 1
        name = f"Phi_{d} (odd standard)"
    else:
        d = t.dim - t.bilrad_dim
        name = f"Phi_{d}^{'+' if t.arf == 1 else '-'}"
    if d < t.dim:
        name += f" in {d} of {t.dim} variables"
    return name


def equivalent(q1: QuadraticFormF2, q2: QuadraticFormF2, witness: bool = False,
               convention: str = "inverse"):
    """Equivalence under GL_m(F_2); with ``witness`` returns (verdict, s or None)."""
    if q1.m != q2.m:
        raise InputError("forms in different numbers of variables")
    same = classify(q1) == classify(q2)
    if not witness:
        return same
    if q1.m > WITNESS_MAX_M:
        raise WitnessSearchCapExceeded(fp.gl_order(q1.m, 2), fp.gl_order(WITNESS_MAX_M, 2), "witness search")
    if not same:
        return False, None
    for s in fp.gl_enumerate(q1.m, 2, cap=None):
        if q1.change_basis(s, convention) == q2:
            return True, s
    raise AssertionError("equivalent forms without a witness")


def _add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def reduce_to_standard(q: QuadraticFormF2, convention: str = "inverse"):
    """Return (s, standard) with s.q = standard, a padded Dickson form."""
    if q.is_zero():
        raise ZeroForm("the zero form has no standard reduction")
    pairs, radical = symplectic_decomposition(q)
    anisotropic_bilrad = next((w for w in radical if q(w)), None)
    rad_basis = [w if not q(w) else _add(w, anisotropic_bilrad) for w in radical if w is not anisotropic_bilrad]

    hyperbolic, aniso = [], []
    for u, v in pairs:
        qu, qv = q(u), q(v)
        if qu and qv:
            if anisotropic_bilrad is not None:
                hyperbolic.append((_add(u, anisotropic_bilrad), _add(v, anisotropic_bilrad)))
            else:
                aniso.append((u, v))
        elif qv:
            hyperbolic.append((u, _add(u, v)))
        elif qu:
            hyperbolic.append((_add(u, v), v))
        else:
            hyperbolic.append((u, v))
    # two anisotropic planes make two hyperbolic ones
    while len(aniso) >= 2:
        (u1, v1), (u2, v2) = aniso.pop(), aniso.pop()
        a = _add(u1, u2)
        hyperbolic.append((a, _add(v1, a)))
        d = _add(v1, v2)
        hyperbolic.append((_add(u2, d), d))

    cols = []
    if anisotropic_bilrad is not None:
        cols.append(anisotropic_bilrad)
    for u, v in hyperbolic + aniso:
        cols += [u, v]
    d = len(cols)
    cols += rad_basis
    if anisotropic_bilrad is not None:
        standard = standard_form("odd", d, q.m)
    else:
        standard = standard_form("minus" if aniso else "plus", d, q.m)
    basis = FpMatrix.from_rows(cols, 2).T  # columns are the new basis vectors
    # s.q = q o h with h the new-basis matrix
    s = fp.mat_inv(basis) if convention == "inverse" else basis.T
    if q.change_basis(s, convention) != standard:
        raise AssertionError("reduction failed to reach the standard form")
    return s, standard


def direct_sum(q1: QuadraticFormF2, q2: QuadraticFormF2) -> QuadraticFormF2:
    terms = q1.terms() + [(i + q1.m, j + q1.m) for i, j in q2.terms()]
    return QuadraticFormF2.from_terms(q1.m + q2.m, terms)


def arf_direct_sum_check(q1: QuadraticFormF2, q2: QuadraticFormF2) -> bool | None:
    """Arf of an orthogonal sum is the product of the summands' Arf values.

    None when a summand has Arf 0 (the additive rule does not apply).
    """
    a1, a2 = arf_democratic(q1), arf_democratic(q2)
    if a1 == 0 or a2 == 0:
        return None
    return arf_democratic(direct_sum(q1, q2)) == a1 * a2


def all_forms(m: int) -> Iterator[QuadraticFormF2]:
    n = len(quad_pairs(m))
    for k in range(1 << n):
        yield QuadraticFormF2(m, tuple((k >> (n - 1 - i)) & 1 for i in range(n)))


def basis_map(images: Sequence[Sequence[int]], p: int = 2) -> FpMatrix:
    """The element of GL_m sending basis vector i of V to images[i]
    (so images become the columns)."""
    return FpMatrix.from_rows(images, p).T


def substitution(rows: Sequence[Sequence[int]], p: int = 2) -> FpMatrix:
    """The s whose action on forms substitutes variables: x_i becomes
    sum_j rows[i][j] x_j.  Under the default convention that is s = T^-1
    with T the matrix of rows."""
    return fp.mat_inv(FpMatrix.from_rows(rows, p))
