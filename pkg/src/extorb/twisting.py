"""Pairs in Aut(Q) x Aut(N) that preserve a twisting chi: Q -> Aut(N).

Q = F_p^m and N = F_p^n are elementary abelian, so chi is determined by the
images of the basis vectors of Q, which must commute and have order dividing
p.  Matrices act on column vectors (column i is the image of basis vector i).
A pair (sigma, tau) preserves chi when chi(sigma q) = tau chi(q) tau^-1 for
every q; it suffices to check a basis of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import fp
from .errors import InputError
from .fp import FpMatrix, Subspace
from .groups import FiniteGroup
from .orbits import Config, StabilizerReport, _config


@dataclass(frozen=True)
class TwistingMap:
    p: int
    q_rank: int
    n_rank: int
    images: tuple[FpMatrix, ...]

    def __post_init__(self):
        fp.check_prime(self.p)
        imgs = tuple(self.images)
        if len(imgs) != self.q_rank:
            raise InputError(f"need {self.q_rank} images, got {len(imgs)}")
        ident = FpMatrix.identity(self.n_rank, self.p)
        for g in imgs:
            if g.p != self.p or g.rows != self.n_rank or g.cols != self.n_rank:
                raise InputError("twisting image has the wrong size or prime")
            if not g.is_invertible():
                raise InputError("twisting image is not invertible")
            if _power(g, self.p) != ident:
                raise InputError("twisting image does not have order dividing p")
        for i, a in enumerate(imgs):
            for b in imgs[i + 1:]:
                if a @ b != b @ a:
                    raise InputError("twisting images do not commute")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def trivial(cls, p: int, q_rank: int, n_rank: int) -> TwistingMap:
        return cls(p, q_rank, n_rank, (FpMatrix.identity(n_rank, p),) * q_rank)

    def is_trivial(self) -> bool:
        ident = FpMatrix.identity(self.n_rank, self.p)
        return all(g == ident for g in self.images)

    def __call__(self, q: Sequence[int]) -> FpMatrix:
        """chi(q) for q given by coordinates in the basis of Q."""
        out = FpMatrix.identity(self.n_rank, self.p)
        for g, c in zip(self.images, q):
            out = out @ _power(g, int(c) % self.p)
        return out

    def kernel(self) -> Subspace:
        ident = FpMatrix.identity(self.n_rank, self.p)
        full = Subspace.full(self.p, self.q_rank)
        return Subspace.span([q for q in full.elements() if self(q) == ident], self.p, self.q_rank)

    def to_json(self) -> dict:
        return {"p": self.p, "q_rank": self.q_rank, "n_rank": self.n_rank,
                "images": [g.to_json() for g in self.images]}

    @classmethod
    def from_json(cls, obj: dict) -> TwistingMap:
        return cls(obj["p"], obj["q_rank"], obj["n_rank"], tuple(FpMatrix.from_json(g) for g in obj["images"]))


def _power(g: FpMatrix, k: int) -> FpMatrix:
    out = FpMatrix.identity(g.rows, g.p)
    for _ in range(k):
        out = out @ g
    return out


def _check_pair(chi: TwistingMap, sigma: FpMatrix, tau: FpMatrix):
    if sigma.p != chi.p or sigma.rows != chi.q_rank or sigma.cols != chi.q_rank:
        raise InputError(f"sigma must be {chi.q_rank}x{chi.q_rank} over F_{chi.p}")
    if tau.p != chi.p or tau.rows != chi.n_rank or tau.cols != chi.n_rank:
        raise InputError(f"tau must be {chi.n_rank}x{chi.n_rank} over F_{chi.p}")


def c_chi_membership(chi: TwistingMap, sigma: FpMatrix, tau: FpMatrix) -> bool:
    """Whether chi(sigma q) = tau chi(q) tau^-1 on every basis vector q of Q."""
    _check_pair(chi, sigma, tau)
    if not sigma.is_invertible() or not tau.is_invertible():
        return False
    for i, g in enumerate(chi.images):
        if chi(sigma.col(i)) @ tau != tau @ g:
            return False
    return True


def _tau_solutions(chi: TwistingMap, sigma: FpMatrix, affine_cap: int) -> np.ndarray:
    """All invertible tau with tau chi(e_i) = chi(sigma e_i) tau, as an (K, n, n) stack."""
    p, n = chi.p, chi.n_rank
    eye = np.eye(n, dtype=np.int64)
    rows = []
    for i, g in enumerate(chi.images):
        h = chi(sigma.col(i)).to_numpy()
        # vec(tau g - h tau) = (g^T kron I - I kron h) vec(tau), with row-major vec
        rows.append(np.kron(eye, g.to_numpy().T) - np.kron(h, eye))
    if rows:
        system = FpMatrix.from_numpy(np.vstack(rows) % p, p)
        ker = fp.kernel(system)
    else:
        ker = Subspace.full(p, n * n)
    fp.check_cap(p ** ker.dim, affine_cap, "tau solution space")
    if ker.dim == 0:
        return np.zeros((0, n, n), dtype=np.int64)
    basis = np.array(ker.basis, dtype=np.int64)
    combos = fp.digits(np.arange(p ** ker.dim, dtype=np.int64), p, ker.dim).astype(np.int64)
    taus = (combos @ basis % p).reshape(-1, n, n)
    ok, _ = fp.batch_inverse(taus, p)
    return taus[ok]


def c_chi(chi: TwistingMap, cap: int | None = None, config: Config | None = None) -> StabilizerReport:
    """C_chi as a stabilizer-style report of (sigma, tau) pairs.

    sigma runs over GL_m; for each one the admissible tau form the invertible
    part of a linear solution space.
    """
    config = _config(config, cap)
    p, m, n = chi.p, chi.q_rank, chi.n_rank
    fp.check_cap(fp.gl_order(m, p), config.cap, f"GL_{m}(F_{p})")
    count, elems = 0, []
    for sigma in fp.gl_enumerate(m, p, config.cap):
        taus = _tau_solutions(chi, sigma, config.affine_cap)
        count += len(taus)
        if elems is not None:
            elems.extend((sigma, FpMatrix(p, n, n, tuple(int(x) for x in t.ravel()))) for t in taus)
            if len(elems) > config.element_cap:
                elems = None
    return StabilizerReport("joint", count, elems, "enumeration+solve")


def c_chi_group(report: StabilizerReport) -> FiniteGroup:
    return report.group()


def preserves_kernel(chi: TwistingMap, sigma: FpMatrix) -> bool:
    ker = chi.kernel()
    return all(sigma.apply(v) in ker for v in ker.basis)
