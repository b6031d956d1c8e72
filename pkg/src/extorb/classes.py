"""Extension classes [E] in H^2(V; N) for elementary abelian V = F_p^m and
N = F_p^n, stored as n-tuples of degree-two components.

Aut(V) = GL_m acts on the left, componentwise.  Aut(N) = GL_n acts by mixing
components: ``act_n(t, e)`` is ``e . t^-1``, the j-th output component being
``sum_i (t^-1)_ij X_i``.  Together ``pair_act(s, t, e) = s e t^-1`` is a
left action of GL_m x GL_n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import fp
from .errors import InputError
from .expr import format_component, parse_component
from .forms import (AlternatingBockstein, ClassComponent, QuadraticFormF2, alt_pairs, coefficient_dim,
                    component_from_vector, quad_pairs, zero_component)
from .fp import FpMatrix


@dataclass(frozen=True)
class ExtensionClass:
    p: int
    m: int
    n: int
    components: tuple[ClassComponent, ...]

    def __post_init__(self):
        fp.check_prime(self.p)
        comps = tuple(self.components)
        if self.n < 1:
            raise InputError("an extension class needs n >= 1 components")
        if len(comps) != self.n:
            raise InputError(f"expected {self.n} components, got {len(comps)}")
        kind = QuadraticFormF2 if self.p == 2 else AlternatingBockstein
        for c in comps:
            if not isinstance(c, kind) or c.p != self.p or c.m != self.m:
                raise InputError(f"component {c!r} does not match (p={self.p}, m={self.m})")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: ClassComponent) -> ExtensionClass:
        first = components[0]
        return cls(first.p, first.m, len(components), tuple(components))

    @classmethod
    def zero(cls, p: int, m: int, n: int) -> ExtensionClass:
        return cls(p, m, n, (zero_component(p, m),) * n)

    @classmethod
    def from_matrix(cls, p: int, m: int, coeffs) -> ExtensionClass:
        """From a (D, n) coefficient matrix whose columns are the components."""
        coeffs = np.asarray(coeffs)
        return cls(p, m, coeffs.shape[1], tuple(component_from_vector(p, m, coeffs[:, j]) for j in range(coeffs.shape[1])))

    @property
    def dim(self) -> int:
        """Dimension D of the coefficient space H^2(V; F_p)."""
        return coefficient_dim(self.p, self.m)

    def matrix(self) -> np.ndarray:
        """(D, n) integer matrix with the component coefficient vectors as columns."""
        return np.array([c.vector for c in self.components], dtype=np.int64).reshape(self.n, self.dim).T

    def key(self) -> bytes:
        """Canonical byte encoding, usable for hashing and set membership."""
        return encode_key(self.p, self.m, self.n, self.matrix().T.ravel())

    def span(self) -> fp.Subspace:
        return fp.Subspace.span([c.vector for c in self.components], self.p, self.dim)

    def rank(self) -> int:
        return self.span().dim

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __str__(self):
        return print_class(self)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "n": self.n, "components": [component_to_json(c) for c in self.components]}

    @classmethod
    def from_json(cls, obj: dict) -> ExtensionClass:
        p, m, n = obj["p"], obj["m"], obj["n"]
        comps = tuple(component_from_json(c, p, m) for c in obj["components"])
        return cls(p, m, n, comps)


def encode_key(p: int, m: int, n: int, flat) -> bytes:
    return bytes((p, m, n)) + bytes(int(x) for x in flat)


def component_to_json(c: ClassComponent) -> dict:
    if isinstance(c, QuadraticFormF2):
        return {"p": 2, "m": c.m, "coeffs": [[i + 1, j + 1, 1] for i, j in c.terms()]}
    return {"p": c.p, "m": c.m,
            "alt": [[i + 1, j + 1, v] for (i, j), v in zip(alt_pairs(c.m), c.alt) if v],
            "bock": list(c.bock)}


def component_from_json(obj: dict, p: int | None = None, m: int | None = None) -> ClassComponent:
    cp, cm = obj["p"], obj["m"]
    if (p is not None and cp != p) or (m is not None and cm != m):
        raise InputError("component JSON does not match the class (p, m)")
    if cp == 2:
        index = {ij: k for k, ij in enumerate(quad_pairs(cm))}
        coeffs = [0] * len(index)
        for i, j, c in obj["coeffs"]:
            i, j = sorted((i - 1, j - 1))
            coeffs[index[i, j]] ^= c & 1
        return QuadraticFormF2(cm, tuple(coeffs))
    wedges = [(i - 1, j - 1, v) for i, j, v in obj.get("alt", [])]
    bocks = list(enumerate(obj.get("bock", [0] * cm)))
    return AlternatingBockstein.from_terms(cp, cm, wedges, bocks)


def parse_class(text: str, p: int, m: int, n: int) -> ExtensionClass:
    """Parse ';'-separated components, e.g. ``"xy; yz"``."""
    if n < 1:
        raise InputError("an extension class needs n >= 1 components")
    parts = text.split(";")
    if len(parts) != n:
        raise InputError(f"expected {n} ';'-separated components, got {len(parts)}")
    return ExtensionClass(p, m, n, tuple(parse_component(part, p, m) for part in parts))


def print_class(e: ExtensionClass) -> str:
    return "; ".join(format_component(c) for c in e.components)


def dumps(e: ExtensionClass) -> str:
    return json.dumps(e.to_json(), sort_keys=True)


# -- actions -----------------------------------------------------------------------

def _check_v(s: FpMatrix, e: ExtensionClass):
    if s.p != e.p or s.rows != e.m or s.cols != e.m:
        raise InputError(f"GL_{s.rows}(F_{s.p}) element cannot act on a class with (p, m) = ({e.p}, {e.m})")


def _check_n(t: FpMatrix, e: ExtensionClass):
    if t.p != e.p or t.rows != e.n or t.cols != e.n:
        raise InputError(f"GL_{t.rows}(F_{t.p}) element cannot act on a class with (p, n) = ({e.p}, {e.n})")


def act_v(s: FpMatrix, e: ExtensionClass, convention: str = "inverse") -> ExtensionClass:
    _check_v(s, e)
    return ExtensionClass(e.p, e.m, e.n, tuple(c.change_basis(s, convention) for c in e.components))


def right_act_n(e: ExtensionClass, u: FpMatrix) -> ExtensionClass:
    """e . u: the j-th component becomes sum_i u_ij X_i (a right action)."""
    _check_n(u, e)
    mixed = e.matrix() @ u.to_numpy() % e.p
    return ExtensionClass.from_matrix(e.p, e.m, mixed)


def act_n(t: FpMatrix, e: ExtensionClass) -> ExtensionClass:
    _check_n(t, e)
    return right_act_n(e, fp.mat_inv(t))


def pair_act(s: FpMatrix, t: FpMatrix, e: ExtensionClass, convention: str = "inverse") -> ExtensionClass:
    """(s, t)[E] = [s E t^-1]."""
    return act_n(t, act_v(s, e, convention))


def n_automorphism(t: FpMatrix) -> FpMatrix:
    """The automorphism of N (columns are images of basis vectors) by which
    ``act_n(t, .)`` transforms a class: applying it to the N-coefficients of
    [E] gives ``act_n(t, [E])``.  It is t^-T."""
    return fp.mat_inv(t).T


def class_action_matrix(tau: FpMatrix) -> FpMatrix:
    """Inverse of `n_automorphism`: the t with ``n_automorphism(t) == tau``."""
    return fp.mat_inv(tau.T)
