"""Exact linear algebra over prime fields and enumeration of GL_m(F_p).

Two layers live here.  `FpMatrix` and `Subspace` are small immutable value
types with pure-Python arithmetic, used wherever single matrices are handled.
The ``batch_*`` / ``gl_batches`` functions work on stacks of matrices held in
numpy integer arrays of shape ``(K, m, m)`` and are what the orbit engine
uses to sweep whole general linear groups.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapExceeded, InputError, SingularMatrix

MAX_PRIME = 97
DEFAULT_CAP = 30_000_000
BATCH_SIZE = 1 << 17


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not 2 <= p <= MAX_PRIME or not is_prime(int(p)):
        raise InputError(f"p must be a prime <= {MAX_PRIME}, got {p!r}")
    return int(p)


@lru_cache(maxsize=None)
def inverse_table(p: int) -> tuple[int, ...]:
    """inverse_table(p)[a] is a^-1 mod p (0 for a = 0)."""
    return (0,) + tuple(pow(a, p - 2, p) for a in range(1, p))


@dataclass(frozen=True)
class FpScalar:
    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise InputError(f"prime mismatch {self.p} vs {other.p}")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return FpScalar(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar(self.value - self._coerce(other), self.p)

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __mul__(self, other):
        return FpScalar(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def inverse(self) -> FpScalar:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return FpScalar(inverse_table(self.p)[self.value], self.p)

    def __truediv__(self, other):
        return self * FpScalar(self._coerce(other), self.p).inverse()

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# -- row reduction on plain tuples ------------------------------------------

def rref(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None):
    """Reduced row echelon form mod p.

    Returns ``(nonzero_rows, pivot_columns)`` with rows as tuples.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    inv = inverse_table(p)
    work = [[int(x) % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        k = inv[work[r][c]]
        work[r] = [(x * k) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient_dim stored by its reduced echelon basis."""

    p: int
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...] = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], p: int, ambient_dim: int) -> Subspace:
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        basis, pivots = rref(vectors, p, ambient_dim)
        return cls(p, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> Subspace:
        return cls(p, ambient_dim, (), ())

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> Subspace:
        eye = [tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)]
        return cls.span(eye, p, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.p ** self.dim

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        residual = [int(x) % self.p for x in v]
        for row, c in zip(self.basis, self.pivots):
            f = residual[c]
            if f:
                residual = [(a - f * b) % self.p for a, b in zip(residual, row)]
        return not any(residual)

    __contains__ = contains

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of v in the echelon basis (v must lie in the subspace)."""
        if not self.contains(v):
            raise InputError(f"{tuple(v)} is not in the subspace")
        return tuple(int(v[c]) % self.p for c in self.pivots)

    def elements(self) -> Iterator[tuple[int, ...]]:
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            v = [0] * self.ambient_dim
            for k, row in zip(coeffs, self.basis):
                if k:
                    v = [(a + k * b) % self.p for a, b in zip(v, row)]
            yield tuple(v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p, self.ambient_dim, self.basis) == (other.p, other.ambient_dim, other.basis)

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis))

    def issubset(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)


# -- matrices ------------------------------------------------------------------

@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        entries = tuple(int(x) % self.p for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise InputError(f"{len(entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int) -> FpMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged rows")
        return cls(p, len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, m: int, p: int) -> FpMatrix:
        return cls(p, m, m, tuple(int(i == j) for i in range(m) for j in range(m)))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls(p, rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_numpy(cls, a, p: int) -> FpMatrix:
        a = np.asarray(a)
        return cls(p, a.shape[0], a.shape[1], tuple(int(x) for x in a.ravel()))

    @classmethod
    def from_json(cls, obj: dict) -> FpMatrix:
        return cls(obj["p"], obj["rows"], obj["cols"], tuple(obj["entries"]))

    def to_json(self) -> dict:
        return {"p": self.p, "rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> FpMatrix:
        return FpMatrix(self.p, self.cols, self.rows,
                        tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        return mat_mul(self, other)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) % self.p for i in range(self.rows))

    def scale(self, k: int) -> FpMatrix:
        return FpMatrix(self.p, self.rows, self.cols, tuple(k * x for x in self.entries))

    def inverse(self) -> FpMatrix:
        return mat_inv(self)

    def det(self) -> int:
        if not self.is_square:
            raise InputError("determinant of a non-square matrix")
        p, m = self.p, self.rows
        inv = inverse_table(p)
        work = self.to_rows()
        d = 1
        for c in range(m):
            piv = next((i for i in range(c, m) if work[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                work[c], work[piv] = work[piv], work[c]
                d = -d
            d = d * work[c][c] % p
            k = inv[work[c][c]]
            for i in range(c + 1, m):
                f = work[i][c] * k % p
                if f:
                    work[i] = [(a - f * b) % p for a, b in zip(work[i], work[c])]
        return d % p

    def is_invertible(self) -> bool:
        return self.is_square and rank(self) == self.rows

    def order(self, limit: int = 10**6) -> int:
        """Multiplicative order of an invertible matrix."""
        eye = FpMatrix.identity(self.rows, self.p)
        x, k = self, 1
        while x != eye:
            x = x @ self
            k += 1
            if k > limit:
                raise InputError("matrix order exceeds limit")
        return k

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_rows())


def _check_same_p(a: FpMatrix, b: FpMatrix):
    if a.p != b.p:
        raise InputError(f"prime mismatch {a.p} vs {b.p}")


def mat_mul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    _check_same_p(a, b)
    if a.cols != b.rows:
        raise InputError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    p = a.p
    bcols = [b.col(j) for j in range(b.cols)]
    out = tuple(sum(x * y for x, y in zip(a.row(i), bc)) % p for i in range(a.rows) for bc in bcols)
    return FpMatrix(p, a.rows, b.cols, out)


def mat_inv(a: FpMatrix) -> FpMatrix:
    if not a.is_square:
        raise InputError("inverse of a non-square matrix")
    m, p = a.rows, a.p
    aug = [list(a.row(i)) + [int(i == j) for j in range(m)] for i in range(m)]
    reduced, pivots = rref(aug, p, 2 * m)
    if pivots[:m] != tuple(range(m)) or len(reduced) < m:
        raise SingularMatrix("matrix is singular over F_%d" % p)
    return FpMatrix(p, m, m, tuple(x for r in reduced for x in r[m:]))


def rank(a: FpMatrix) -> int:
    return len(rref(a.to_rows(), a.p, a.cols)[0])


def kernel(a: FpMatrix) -> Subspace:
    """Right null space {x : a x = 0}."""
    reduced, pivots = rref(a.to_rows(), a.p, a.cols)
    p, n = a.p, a.cols
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(reduced, pivots):
            v[c] = (-row[f]) % p
        vecs.append(v)
    return Subspace.span(vecs, p, n)


def solve_affine(a: FpMatrix, b: Sequence[int]):
    """Solve a x = b.

    Returns ``(particular, kernel_subspace)`` or ``None`` when the system is
    inconsistent.  The particular solution sets all free variables to 0.
    """
    if len(b) != a.rows:
        raise InputError(f"right-hand side has length {len(b)}, expected {a.rows}")
    p, n = a.p, a.cols
    aug = [list(a.row(i)) + [int(b[i])] for i in range(a.rows)]
    reduced, pivots = rref(aug, p, n + 1)
    if n in pivots:
        return None
    x = [0] * n
    for row, c in zip(reduced, pivots):
        x[c] = row[n]
    return tuple(x), kernel(a)


# -- general linear groups --------------------------------------------------------

def gl_order(m: int, p: int) -> int:
    if m < 0:
        raise InputError("m must be non-negative")
    out = 1
    for i in range(m):
        out *= p**m - p**i
    return out


def check_cap(needed: int, cap: int | None, what: str = "enumeration"):
    if cap is not None and needed > cap:
        raise CapExceeded(needed, cap, what)


def digits(idx: np.ndarray, p: int, count: int) -> np.ndarray:
    """Base-p digits of each index, most significant first: shape (K, count)."""
    out = np.empty((idx.shape[0], count), dtype=np.int32)
    rem = idx.copy()
    for k in range(count - 1, -1, -1):
        out[:, k] = rem % p
        rem //= p
    return out


def batch_inverse(a: np.ndarray, p: int):
    """Gauss-Jordan on a stack of square matrices mod p.

    Returns ``(invertible_mask, inverses)``; rows of ``inverses`` for singular
    inputs are garbage.
    """
    k, m, _ = a.shape
    inv = np.array(inverse_table(p), dtype=np.int32)
    aug = np.zeros((k, m, 2 * m), dtype=np.int32)
    aug[:, :, :m] = a % p
    aug[:, np.arange(m), m + np.arange(m)] = 1
    alive = np.ones(k, dtype=bool)
    ar = np.arange(k)
    for c in range(m):
        nz = aug[:, c:, c] != 0
        alive &= nz.any(axis=1)
        piv = nz.argmax(axis=1) + c
        swap = piv != c
        if swap.any():
            idx = ar[swap]
            top = aug[idx, c].copy()
            aug[idx, c] = aug[idx, piv[swap]]
            aug[idx, piv[swap]] = top
        aug[:, c] = aug[:, c] * inv[aug[:, c, c]][:, None] % p
        f = aug[:, :, c].copy()
        f[:, c] = 0
        aug = (aug - f[:, :, None] * aug[:, c][:, None, :]) % p
    return alive, aug[:, :, m:]


def candidate_count(m: int, p: int) -> int:
    return p ** (m * m)


def index_chunks(m: int, p: int, chunks: int) -> list[tuple[int, int]]:
    """Split the candidate index range [0, p^(m*m)) into contiguous pieces."""
    total = candidate_count(m, p)
    chunks = max(1, min(chunks, total))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(chunks)]


def gl_batches(m: int, p: int, cap: int | None = DEFAULT_CAP, start: int = 0,
               stop: int | None = None, batch_size: int = BATCH_SIZE, with_inverse: bool = False):
    """Yield stacks of invertible m x m matrices in entry-lexicographic order.

    Only candidates with row-major index in [start, stop) are considered, so
    contiguous index ranges partition the group.  With ``with_inverse`` each
    item is ``(mats, inverses)``.
    """
    p = check_prime(p)
    check_cap(gl_order(m, p), cap, f"GL_{m}(F_{p})")
    total = candidate_count(m, p)
    stop = total if stop is None else min(stop, total)
    if m == 0:
        if start == 0 and stop >= 1:
            empty = np.zeros((1, 0, 0), dtype=np.int32)
            yield (empty, empty) if with_inverse else empty
        return
    for lo in range(start, stop, batch_size):
        hi = min(lo + batch_size, stop)
        mats = digits(np.arange(lo, hi, dtype=np.int64), p, m * m).reshape(-1, m, m)
        ok, invs = batch_inverse(mats, p)
        if not ok.any():
            continue
        if with_inverse:
            yield mats[ok], invs[ok]
        else:
            yield mats[ok]


def gl_enumerate(m: int, p: int, cap: int | None = DEFAULT_CAP, chunk: int = 0,
                 chunks: int = 1) -> Iterator[FpMatrix]:
    """Each element of GL_m(F_p) exactly once, in entry-lexicographic order.

    ``chunk``/``chunks`` select one of ``chunks`` contiguous slices; the
    concatenation of all slices in chunk order is the full stream.
    """
    lo, hi = index_chunks(m, p, chunks)[chunk] if m else (0, 1)
    if m == 0 and chunk:
        return
    for batch in gl_batches(m, p, cap, lo, hi):
        for a in batch:
            yield FpMatrix(p, m, m, tuple(int(x) for x in a.ravel()))


def unitriangular(m: int, p: int) -> Iterator[FpMatrix]:
    """Upper unitriangular matrices, a Sylow p-subgroup of GL_m(F_p)."""
    slots = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for vals in itertools.product(range(p), repeat=len(slots)):
        e = [[int(i == j) for j in range(m)] for i in range(m)]
        for (i, j), v in zip(slots, vals):
            e[i][j] = v
        yield FpMatrix.from_rows(e, p)
