"""Stabilizers, orbits and the intersection orbit group of an extension class.

Everything here is exact and exhaustive.  The expensive step is a single
sweep over GL_m(F_p) (see `scan`); the Aut(N) side is never enumerated
jointly with it.  For each s we compute s.[E] and test whether it lies in
the right orbit [E].GL_n, which happens exactly when the components of
s.[E] span the same subspace of H^2(V; F_p) as those of [E].  So

    |(GL_m x GL_n)_[E]| = #{s : span(s.[E]) = span([E])} * |Aut(N)_[E]|

and the distinct classes s.[E] met along the way are the elements of the
intersection orbit group.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import fp
from .classes import ExtensionClass, act_v, pair_act, right_act_n
from .errors import CapExceeded, InputError, WellDefinednessViolation
from .forms import alt_pairs, quad_pairs
from .fp import FpMatrix
from .groups import FiniteGroup, GroupId, identify_group

CHUNK_CANDIDATES = 1 << 21
TABLE_CAP = 1 << 20


def env_cap() -> int:
    raw = os.environ.get("EXTORB_CAP")
    if raw:
        try:
            return int(float(raw))
        except ValueError:
            raise InputError(f"EXTORB_CAP must be a number, got {raw!r}") from None
    return fp.DEFAULT_CAP


@dataclass(frozen=True)
class Config:
    cap: int = field(default_factory=env_cap)
    affine_cap: int = 10**6
    element_cap: int = 10**4
    workers: int = 1
    convention: str = "inverse"
    # fixed work unit, so results never depend on the worker count
    chunk_candidates: int = CHUNK_CANDIDATES


def _config(config: Config | None, cap: int | None = None, **overrides) -> Config:
    config = config or Config()
    if cap is not None:
        overrides["cap"] = cap
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **overrides) if overrides else config


# -- vectorised action on coefficient vectors --------------------------------------

class _Kernel:
    """Applies a stack of acting matrices h to the components of one class."""

    def __init__(self, p: int, m: int, vecs: np.ndarray):
        self.p, self.m = p, m
        self.vecs = np.asarray(vecs, dtype=np.int64)
        self.n = self.vecs.shape[0]
        if p == 2:
            pairs = quad_pairs(m)
            self.I = np.array([i for i, _ in pairs], dtype=np.intp)
            self.J = np.array([j for _, j in pairs], dtype=np.intp)
            self.mats = np.zeros((self.n, m, m), dtype=np.int64)
            self.mats[:, self.I, self.J] = self.vecs
        else:
            pairs = alt_pairs(m)
            k = len(pairs)
            self.I = np.array([i for i, _ in pairs], dtype=np.intp)
            self.J = np.array([j for _, j in pairs], dtype=np.intp)
            self.mats = np.zeros((self.n, m, m), dtype=np.int64)
            self.mats[:, self.I, self.J] = self.vecs[:, :k]
            self.mats[:, self.J, self.I] = -self.vecs[:, :k]
            self.bock = self.vecs[:, k:]
        basis, pivots = fp.rref(self.vecs.tolist(), p, self.vecs.shape[1])
        self.basis = np.array(basis, dtype=np.int64).reshape(len(basis), self.vecs.shape[1])
        self.pivots = np.array(pivots, dtype=np.intp)

    def transform(self, h: np.ndarray) -> np.ndarray:
        """(K, n, D) coefficient vectors of the forms v -> X_i(h v)."""
        p = self.p
        h = h.astype(np.int64)
        t = np.einsum("nab,kbj->knaj", self.mats, h)
        full = np.einsum("kai,knaj->knij", h, t) % p
        if p == 2:
            diag = self.I == self.J
            out = full[:, :, self.I, self.J] + np.where(diag, 0, full[:, :, self.J, self.I])
            return out % 2
        alt = full[:, :, self.I, self.J]
        bock = np.einsum("kai,na->kni", h, self.bock) % p
        return np.concatenate([alt, bock], axis=2) % p

    def in_span(self, out: np.ndarray) -> np.ndarray:
        """Mask of rows whose every component lies in the span of [E]."""
        if len(self.pivots) == 0:
            return ~out.any(axis=(1, 2))
        coords = out[:, :, self.pivots]
        resid = (out - coords @ self.basis) % self.p
        return ~resid.any(axis=(1, 2))


def _acting(mats, invs, convention: str):
    if convention == "inverse":
        return invs
    if convention == "transpose":
        return mats.transpose(0, 2, 1)
    raise InputError(f"unknown convention {convention!r}")


def _row_keys(p, m, n, rows: np.ndarray) -> list[bytes]:
    head = bytes((p, m, n))
    flat = rows.reshape(rows.shape[0], -1).astype(np.uint8)
    return [head + r.tobytes() for r in flat]


def _unique_first_second(rows: np.ndarray):
    """For stacked rows: unique rows in order of first appearance, with the
    index of the first and (if any) second appearance."""
    flat = np.ascontiguousarray(rows.reshape(rows.shape[0], -1).astype(np.uint8))
    void = flat.view(np.dtype((np.void, flat.shape[1]))).ravel()
    _, first, inverse = np.unique(void, return_index=True, return_inverse=True)
    inverse = inverse.ravel()
    second = np.full(len(first), -1)
    is_first = np.zeros(len(void), dtype=bool)
    is_first[first] = True
    rest = np.nonzero(~is_first)[0]
    if len(rest):
        groups, pos = np.unique(inverse[rest], return_index=True)
        second[groups] = rest[pos]
    order = np.argsort(first, kind="stable")
    return first[order], second[order]


def _scan_chunk(task):
    p, m, n, vecs, convention, lo, hi, keep = task
    kern = _Kernel(p, m, vecs)
    target = kern.vecs[None]
    stab_count = compat_count = 0
    stab, compat = [], []
    reps = {}
    for mats, invs in fp.gl_batches(m, p, None, lo, hi, with_inverse=True):
        out = kern.transform(_acting(mats, invs, convention))
        fixed = (out == target).all(axis=(1, 2))
        stab_count += int(fixed.sum())
        if stab is not None:
            stab.extend(mats[fixed].reshape(-1, m * m).tolist())
            if len(stab) > keep:
                stab = None
        ok = kern.in_span(out)
        idx = np.nonzero(ok)[0]
        if not len(idx):
            continue
        compat_count += len(idx)
        if compat is not None:
            compat.extend(mats[idx].reshape(-1, m * m).tolist())
            if len(compat) > keep:
                compat = None
        rows = out[idx]
        first, second = _unique_first_second(rows)
        keys = _row_keys(p, m, n, rows[first])
        for key, f, s in zip(keys, first, second):
            a = mats[idx[f]].reshape(-1).tolist()
            b = mats[idx[s]].reshape(-1).tolist() if s >= 0 else None
            if key not in reps:
                reps[key] = [rows[f].reshape(-1).tolist(), a, b]
            elif reps[key][2] is None:
                reps[key][2] = a
    return stab_count, stab, compat_count, compat, reps


def run_tasks(fn, tasks: Sequence, workers: int):
    """Map fn over tasks, in order, optionally in a process pool."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


def gl_tasks(m: int, p: int, chunk_candidates: int = CHUNK_CANDIDATES):
    total = fp.candidate_count(m, p)
    return fp.index_chunks(m, p, max(1, math.ceil(total / chunk_candidates)))


@dataclass
class ScanResult:
    e: ExtensionClass
    stab_count: int
    stab_elements: list[FpMatrix] | None
    compat_count: int
    compat_elements: list[FpMatrix] | None
    # ordered by least representative: (class, first rep, second rep or None)
    omega_reps: list[tuple[ExtensionClass, FpMatrix, FpMatrix | None]]


_SCAN_CACHE: dict = {}


def clear_cache():
    _SCAN_CACHE.clear()


def scan(e: ExtensionClass, config: Config | None = None) -> ScanResult:
    """One sweep over GL_m(F_p) collecting everything the engine needs."""
    config = _config(config)
    p, m, n = e.p, e.m, e.n
    fp.check_cap(fp.gl_order(m, p), config.cap, f"GL_{m}(F_{p})")
    ck = (e.key(), config.convention, config.element_cap, config.chunk_candidates, config.workers)
    if ck in _SCAN_CACHE:
        return _SCAN_CACHE[ck]
    vecs = e.matrix().T
    tasks = [(p, m, n, vecs, config.convention, lo, hi, config.element_cap) for lo, hi in gl_tasks(m, p, config.chunk_candidates)]
    parts = run_tasks(_scan_chunk, tasks, config.workers)

    stab_count = compat_count = 0
    stab, compat = [], []
    reps: dict = {}
    for sc, st, cc, co, rp in parts:
        stab_count += sc
        compat_count += cc
        stab = None if stab is None or st is None else stab + st
        compat = None if compat is None or co is None else compat + co
        for key, (vec, a, b) in rp.items():
            if key not in reps:
                reps[key] = [vec, a, b]
            elif reps[key][2] is None:
                reps[key][2] = a
    keep = config.element_cap
    stab = None if stab is None or len(stab) > keep else stab
    compat = None if compat is None or len(compat) > keep else compat

    def mat(flat):
        return FpMatrix(p, m, m, tuple(flat))

    omega_reps = []
    for vec, a, b in reps.values():
        cls = ExtensionClass.from_matrix(p, m, np.array(vec).reshape(n, -1).T)
        omega_reps.append((cls, mat(a), mat(b) if b is not None else None))
    result = ScanResult(e, stab_count, None if stab is None else [mat(x) for x in stab], compat_count,
                        None if compat is None else [mat(x) for x in compat], omega_reps)
    if len(_SCAN_CACHE) > 64:
        _SCAN_CACHE.clear()
    _SCAN_CACHE[ck] = result
    return result


def matrix_group(factors: Sequence[Sequence[FpMatrix]], elements: Sequence | None = None) -> FiniteGroup:
    """Multiplication table of a finite group of matrix tuples, given as one
    list per factor (element i is the tuple of the i-th entries)."""
    p = factors[0][0].p
    stacks = [np.array([x.to_numpy() for x in f], dtype=np.int64) for f in factors]
    width = sum(s.shape[1] * s.shape[2] for s in stacks)
    if width * math.log2(p) > 62:
        return FiniteGroup.from_elements(list(zip(*factors)), lambda x, y: tuple(a @ b for a, b in zip(x, y)))
    weights = p ** np.arange(width, dtype=np.int64)

    def codes(mats):
        flat = np.concatenate([m.reshape(m.shape[0], -1) for m in mats], axis=1)
        return flat @ weights

    base = codes(stacks)
    order = np.argsort(base)
    if len(np.unique(base)) != len(base):
        raise InputError("repeated group elements")
    table = []
    for i in range(len(base)):
        prods = [(s[i][None] @ s) % p for s in stacks]
        c = codes(prods)
        pos = np.searchsorted(base, c, sorter=order)
        pos = np.minimum(pos, len(base) - 1)
        idx = order[pos]
        if (base[idx] != c).any():
            raise InputError("element set is not closed under multiplication")
        table.append(idx.tolist())
    n = len(base)
    ident = next(i for i in range(n) if table[i] == list(range(n)))
    return FiniteGroup(table, ident, list(elements) if elements is not None else list(range(n)))


# -- reports ----------------------------------------------------------------------------

@dataclass
class StabilizerReport:
    side: str
    order: int
    elements: list | None
    method: str

    def group(self) -> FiniteGroup:
        if self.elements is None:
            raise InputError("stabilizer elements were not retained (raise the element cap)")
        if self.side == "joint":
            return matrix_group([[s for s, _ in self.elements], [t for _, t in self.elements]], self.elements)
        return matrix_group([self.elements], self.elements)

    def identify(self) -> GroupId:
        return identify_group(self.group())

    def contains(self, element) -> bool:
        if self.elements is None:
            raise InputError("stabilizer elements were not retained")
        return element in self.elements

    def to_json(self) -> dict:
        out = {"side": self.side, "order": str(self.order), "method": self.method}
        if self.elements is not None and self.side != "joint":
            out["elements"] = [x.to_json() for x in self.elements]
        elif self.elements is not None:
            out["elements"] = [{"s": s.to_json(), "t": t.to_json()} for s, t in self.elements]
        return out


def stabilizer_v(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> StabilizerReport:
    """Aut(V)_[E]: the intersection of the componentwise stabilizers."""
    res = scan(e, _config(config, cap))
    return StabilizerReport("V", res.stab_count, res.stab_elements, "enumeration")


def _kernel_coset(e: ExtensionClass, config: Config):
    """All k in GL_n with [E].k = [E], as I + M with the columns of M in ker([E])."""
    p, n = e.p, e.n
    ker = fp.kernel(FpMatrix.from_numpy(e.matrix(), p))
    d = ker.dim
    fp.check_cap(p ** (d * n), config.affine_cap, "affine kernel space")
    if d == 0:
        return np.eye(n, dtype=np.int64)[None]
    kbasis = np.array(ker.basis, dtype=np.int64).reshape(d, n)
    combos = fp.digits(np.arange(p ** (d * n), dtype=np.int64), p, d * n).reshape(-1, n, d).astype(np.int64)
    # column j of M is combos[:, j, :] @ kbasis
    cols = combos @ kbasis  # (K, n_cols, n)
    ks = (np.eye(n, dtype=np.int64)[None] + cols.transpose(0, 2, 1)) % p
    ok, _ = fp.batch_inverse(ks, p)
    return ks[ok]


def stabilizer_n(e: ExtensionClass, cap: int | None = None, config: Config | None = None,
                 method: str = "auto") -> StabilizerReport:
    """Aut(N)_[E] = {t in GL_n : [E].t^-1 = [E]}."""
    config = _config(config, cap)
    p, n = e.p, e.n
    if method in ("auto", "structural"):
        try:
            ks = _kernel_coset(e, config)
        except CapExceeded:
            if method == "structural":
                raise
        else:
            elems = None
            if len(ks) <= config.element_cap:
                elems = [FpMatrix(p, n, n, tuple(int(x) for x in k.ravel())) for k in ks]
            return StabilizerReport("N", len(ks), elems, "structural")
    fp.check_cap(fp.gl_order(n, p), config.cap, f"GL_{n}(F_{p})")
    E = e.matrix()
    count, elems = 0, []
    for batch in fp.gl_batches(n, p, None):
        fixed = ((E[None] @ batch) % p == E[None]).all(axis=(1, 2))
        count += int(fixed.sum())
        if elems is not None:
            elems.extend(batch[fixed])
            if len(elems) > config.element_cap:
                elems = None
    if elems is not None:
        elems = [FpMatrix(p, n, n, tuple(int(x) for x in k.ravel())) for k in elems]
    return StabilizerReport("N", count, elems, "enumeration")


def stab_n_order_formula(e: ExtensionClass) -> int:
    """p^(r(n-r)) |GL_{n-r}| with r the rank of the component span."""
    r = e.rank()
    return e.p ** (r * (e.n - r)) * fp.gl_order(e.n - r, e.p)


def right_orbit_witness(src: ExtensionClass, dst: ExtensionClass) -> FpMatrix | None:
    """An invertible u with src.u = dst, or None if dst is not in src.GL_n."""
    p, n = src.p, src.n
    span = dst.span()
    if src.span() != span:
        return None
    r = span.dim
    R = [[v[c] for c in span.pivots] for v in (comp.vector for comp in dst.components)]
    Rs = [[v[c] for c in span.pivots] for v in (comp.vector for comp in src.components)]

    def extend(coords):
        rows = [tuple(coords[j][i] for j in range(n)) for i in range(r)]
        for k in range(n):
            unit = tuple(int(i == k) for i in range(n))
            if len(fp.rref(rows + [unit], p, n)[0]) > len(rows):
                rows.append(unit)
        return FpMatrix.from_rows(rows, p)

    u = fp.mat_inv(extend(Rs)) @ extend(R)
    if right_act_n(src, u) != dst:
        raise AssertionError("right-orbit witness construction failed")
    return u


def joint_stabilizer(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> StabilizerReport:
    """(GL_m x GL_n)_[E], the image of rho for trivial twisting."""
    config = _config(config, cap)
    res = scan(e, config)
    sn = stabilizer_n(e, config=config)
    order = res.compat_count * sn.order
    elems = None
    if order <= config.element_cap and res.compat_elements is not None and sn.elements is not None:
        elems = []
        for s in res.compat_elements:
            moved = act_v(s, e, config.convention)
            u0 = right_orbit_witness(moved, e)
            for k in sn.elements:
                t = fp.mat_inv(u0 @ k)
                elems.append((s, t))
    return StabilizerReport("joint", order, elems, "enumeration+solve")


def orbit(e: ExtensionClass, side: str = "V", cap: int | None = None,
          config: Config | None = None) -> frozenset[ExtensionClass]:
    """The orbit GL_m.[E] (side "V") or [E].GL_n (side "N")."""
    config = _config(config, cap)
    p, m, n = e.p, e.m, e.n
    keys: set[bytes] = set()
    if side == "V":
        fp.check_cap(fp.gl_order(m, p), config.cap, f"GL_{m}(F_{p})")
        kern = _Kernel(p, m, e.matrix().T)
        for mats, invs in fp.gl_batches(m, p, None, with_inverse=True):
            out = kern.transform(_acting(mats, invs, config.convention))
            keys.update(_row_keys(p, m, n, out))
    elif side == "N":
        fp.check_cap(fp.gl_order(n, p), config.cap, f"GL_{n}(F_{p})")
        E = e.matrix()
        for batch in fp.gl_batches(n, p, None):
            out = ((E[None] @ batch) % p).transpose(0, 2, 1)
            keys.update(_row_keys(p, m, n, out))
    else:
        raise InputError(f"side must be 'V' or 'N', got {side!r}")
    return frozenset(decode_key(k) for k in keys)


def decode_key(key: bytes) -> ExtensionClass:
    p, m, n = key[0], key[1], key[2]
    flat = np.frombuffer(key[3:], dtype=np.uint8).astype(np.int64)
    return ExtensionClass.from_matrix(p, m, flat.reshape(n, -1).T)


# -- intersection orbit group -------------------------------------------------------------

@dataclass
class OmegaGroup:
    base: ExtensionClass
    elements: list[ExtensionClass]
    reps_left: list[FpMatrix]
    mult_table: list[list[int]] | None
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def group(self) -> FiniteGroup:
        if self.mult_table is None:
            raise InputError("multiplication table not computed (omega too large)")
        return FiniteGroup(self.mult_table, self.identity, self.elements)

    def identify(self) -> GroupId:
        return identify_group(self.group())

    def index(self, cls: ExtensionClass) -> int:
        return self.elements.index(cls)

    def to_json(self) -> dict:
        return {"order": self.order, "elements": [str(x) for x in self.elements],
                "reps_left": [a.to_json() for a in self.reps_left], "identity": self.identity,
                "mult_table": self.mult_table}


def _products_to_index(e, mats_a, mats_b, index, convention):
    """Index (in `index`) of (a b).[E] for each pair of the two stacks."""
    p, m, n = e.p, e.m, e.n
    prods = (mats_a[:, None] @ mats_b[None]) % p
    prods = prods.reshape(-1, m, m)
    kern = _Kernel(p, m, e.matrix().T)
    ok, invs = fp.batch_inverse(prods, p)
    out = kern.transform(_acting(prods, invs, convention))
    keys = _row_keys(p, m, n, out)
    try:
        return [index[k] for k in keys]
    except KeyError:
        raise WellDefinednessViolation("product left the intersection orbit group") from None


def omega(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> OmegaGroup:
    """Omega([E]) = GL_m.[E] intersected with [E].GL_n, with (a[E])(a'[E]) = (aa')[E]."""
    config = _config(config, cap)
    res = scan(e, config)
    elements = [c for c, _, _ in res.omega_reps]
    reps = [a for _, a, _ in res.omega_reps]
    if len(elements) * res.stab_count != res.compat_count:
        raise WellDefinednessViolation("omega elements are not equally represented")
    index = {c.key(): i for i, c in enumerate(elements)}
    table = None
    k = len(elements)
    if k * k <= TABLE_CAP:
        A = np.array([a.to_numpy() for a in reps], dtype=np.int64)
        flat = _products_to_index(e, A, A, index, config.convention)
        table = [flat[i * k:(i + 1) * k] for i in range(k)]
        alt_idx = [i for i, (_, _, b) in enumerate(res.omega_reps) if b is not None]
        if alt_idx:
            B = np.array([res.omega_reps[i][2].to_numpy() for i in alt_idx], dtype=np.int64)
            left = _products_to_index(e, B, A, index, config.convention)
            right = _products_to_index(e, A, B, index, config.convention)
            for r, i in enumerate(alt_idx):
                for j in range(k):
                    if left[r * k + j] != table[i][j] or right[j * len(alt_idx) + r] != table[j][i]:
                        raise WellDefinednessViolation(f"product of elements {i} and {j} depends on representatives")
    return OmegaGroup(e, elements, reps, table, index[e.key()])


def omega_restricted(e: ExtensionClass, a_elements: Sequence[FpMatrix], convention: str = "inverse") -> OmegaGroup:
    """Omega for a subgroup A of GL_m given by its elements (B stays GL_n)."""
    base_span = e.span()
    found: dict[bytes, int] = {}
    elements, reps = [], []
    for a in a_elements:
        moved = act_v(a, e, convention)
        if moved.span() == base_span and moved.key() not in found:
            found[moved.key()] = len(elements)
            elements.append(moved)
            reps.append(a)
    table = [[found[act_v(x @ y, e, convention).key()] for y in reps] for x in reps]
    return OmegaGroup(e, elements, reps, table, found[e.key()])


# -- orders ------------------------------------------------------------------------------

@dataclass
class ImRhoReport:
    e: ExtensionClass
    stab_v: int
    stab_n: int
    omega: int
    joint: int
    omega_label: str | None = None
    elapsed_ms: float | None = None

    @property
    def order(self) -> int:
        return self.stab_v * self.stab_n * self.omega

    def to_json(self, timing: bool = False) -> dict:
        return {"order": str(self.order), "label": self.omega_label,
                "breakdown": {"stab_v": str(self.stab_v), "stab_n": str(self.stab_n), "omega": str(self.omega)},
                "method": "enumeration+solve",
                "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None}


def im_rho_order(e: ExtensionClass, cap: int | None = None, config: Config | None = None,
                 label: bool = True) -> ImRhoReport:
    """|Im(rho)| = |Aut(V)_[E]| * |Aut(N)_[E]| * |Omega([E])|, cross-checked
    against the joint stabilizer order."""
    t0 = time.perf_counter()
    config = _config(config, cap)
    sv = stabilizer_v(e, config=config)
    sn = stabilizer_n(e, config=config)
    om = omega(e, config=config)
    joint = joint_stabilizer(e, config=config)
    if sv.order * sn.order * om.order != joint.order:
        raise WellDefinednessViolation("product formula disagrees with the joint stabilizer order")
    om_label = None
    if label and om.mult_table is not None:
        om_label = om.identify().label
    return ImRhoReport(e, sv.order, sn.order, om.order, joint.order, om_label, (time.perf_counter() - t0) * 1000)


@dataclass
class DivisibilityReport:
    omega: int
    left_orbit: int
    right_orbit: int

    @property
    def gcd(self) -> int:
        return math.gcd(self.left_orbit, self.right_orbit)

    @property
    def divides(self) -> bool:
        return self.gcd % self.omega == 0


def divisibility_check(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> DivisibilityReport:
    """|Omega| divides gcd(|GL_m.[E]|, |[E].GL_n|) (orbit sizes by orbit-stabilizer)."""
    config = _config(config, cap)
    sv = stabilizer_v(e, config=config)
    sn = stabilizer_n(e, config=config)
    om = omega(e, config=config)
    rep = DivisibilityReport(om.order, fp.gl_order(e.m, e.p) // sv.order, fp.gl_order(e.n, e.p) // sn.order)
    if not rep.divides:
        raise AssertionError(f"|Omega| = {rep.omega} does not divide gcd {rep.gcd}")
    return rep


def normalizer_quotient_order(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> int:
    """|N_A(A_x) / A_x| for A = GL_m, by exhaustive conjugation (small m only)."""
    config = _config(config, cap)
    sv = stabilizer_v(e, config=config)
    if sv.elements is None:
        raise InputError("stabilizer too large to list")
    members = set(sv.elements)
    count = 0
    for g in fp.gl_enumerate(e.m, e.p, config.cap):
        gi = fp.mat_inv(g)
        if all(g @ x @ gi in members for x in sv.elements):
            count += 1
    return count // sv.order


def linear_action_matrix(e_shape: tuple[int, int, int], s: FpMatrix, t: FpMatrix, convention: str = "inverse") -> FpMatrix:
    """Matrix of [E] -> (s, t)[E] on the flattened coefficient space F_p^(nD)."""
    p, m, n = e_shape
    D = ExtensionClass.zero(p, m, n).dim
    cols = []
    for k in range(n * D):
        flat = np.zeros(n * D, dtype=np.int64)
        flat[k] = 1
        basis_cls = ExtensionClass.from_matrix(p, m, flat.reshape(n, D).T)
        cols.append(pair_act(s, t, basis_cls, convention).matrix().T.ravel())
    return FpMatrix.from_numpy(np.array(cols).T, p)


def fixed_classes(subgroup_gens: Sequence[tuple[FpMatrix, FpMatrix]], p: int, m: int, n: int,
                  cap: int | None = None, convention: str = "inverse") -> list[ExtensionClass]:
    """Every class fixed by the subgroup generated by the given (s, t) pairs.

    The fixed set is the common kernel of (L_g - I) over the generators' linear
    actions, so it is a subspace; its elements are listed in coefficient order.
    Use ``ExtensionClass.is_zero`` to pick out non-split classes.
    """
    cap = env_cap() if cap is None else cap
    D = ExtensionClass.zero(p, m, n).dim
    size = n * D
    rows = []
    for s, t in subgroup_gens:
        L = linear_action_matrix((p, m, n), s, t, convention).to_numpy()
        rows.extend(((L - np.eye(size, dtype=np.int64)) % p).tolist())
    fixed = fp.kernel(FpMatrix.from_rows(rows, p)) if rows else fp.Subspace.full(p, size)
    fp.check_cap(p ** fixed.dim, cap, "fixed-class listing")
    out = [ExtensionClass.from_matrix(p, m, np.array(v).reshape(n, D).T) for v in fixed.elements()]
    return sorted(out, key=lambda c: c.key())
