"""End-to-end golden checks: compute every catalogued claim and compare."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog, fp
from .classes import n_automorphism, pair_act, parse_class
from .expr import parse_form
from .forms import change_basis
from .fp import FpMatrix
from .orbits import Config, im_rho_order, joint_stabilizer, stabilizer_v
from .twisting import c_chi, c_chi_membership, preserves_kernel
from .wells import aut_order, is_p_power


@dataclass
class Check:
    target: str
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        return f"{mark} {self.name}: expected {self.expected}, got {self.got}"

    def to_json(self) -> dict:
        return {"target": self.target, "name": self.name, "expected": _js(self.expected), "got": _js(self.got),
                "ok": self.ok}


def _js(v):
    return str(v) if isinstance(v, int) and not isinstance(v, bool) else v


def _entry_checks(target: str, entry: catalog.CatalogEntry, config: Config) -> list[Check]:
    r = im_rho_order(entry.cls, config=config)
    got = {"stab_v": r.stab_v, "stab_n": r.stab_n, "omega": r.omega, "im_rho": r.order, "joint": r.joint,
           "omega_label": r.omega_label}
    out = []
    for key, want in entry.expected.items():
        if key == "aut_order":
            val = aut_order(entry.cls, config=config, identify=False).aut_order
        elif key == "label":
            val = joint_stabilizer(entry.cls, config=config).identify().label
        elif key == "stab_label":
            val = stabilizer_v(entry.cls, config=config).identify().label
        else:
            val = got[key]
        out.append(Check(target, f"{entry.name} [{entry.cls}] {key}", want, val))
    return out


def simultaneous(config: Config) -> list[Check]:
    t = "simultaneous-cases"
    out = []
    for form, want in [("x^2 + yz", 6), ("xy", 8), ("x^2 + xy + y^2", 24), ("x^2", 24)]:
        got = stabilizer_v(parse_class(form, 2, 3, 1), config=config).order
        out.append(Check(t, f"isotropy of {form} in GL_3(F_2)", want, got))
    for e in catalog.simultaneous_cases():
        out += _entry_checks(t, e, config)
    return out


def pair_table(config: Config) -> list[Check]:
    t = "pair-table"
    out = []
    for e in catalog.pair_table():
        out += _entry_checks(t, e, config)
    return out


def pair_table_rows(config: Config) -> dict[int, list[tuple[str, int]]]:
    """Column -> [(Y, computed |Im(rho)|)] for the three-column printout."""
    cols: dict[int, list] = {}
    for e in catalog.pair_table():
        col = e.notes["column"]
        cols.setdefault(col, []).append((str(e.cls.components[1]), im_rho_order(e.cls, config=config).order))
    return cols


def standard_tuples(config: Config) -> list[Check]:
    t = "standard-tuples"
    out = []
    for e in catalog.standard_tuples():
        out += _entry_checks(t, e, config)
        m, k, n = e.notes["m"], e.notes["k"], e.notes["n"]
        r = im_rho_order(e.cls, config=config)
        if k == n:
            claim = m < 3 and n < 3
        elif k == 0:
            claim = m < 2 and n < 3
        else:
            claim = m < 4 and n < 4
        out.append(Check(t, f"{e.name} Im(rho) is a 2-group", claim, is_p_power(r.order, 2)))
    return out


def examples(config: Config) -> list[Check]:
    t = "examples"
    out = []
    for p in (5, 3):
        out += _entry_checks(t, catalog.order_p_squared_class(p), config)
    printed = catalog.order_p_squared_class(3, "printed")
    js = joint_stabilizer(printed.cls, config=config).order
    out.append(Check(t, f"{printed.name} stabilizer strictly larger than GL_2(F_3)", True, js > fp.gl_order(2, 3)))
    out += _entry_checks(t, printed, config)

    u5 = catalog.u5_class()
    out += _entry_checks(t, u5, config)
    (a_s, a_t), (b_s, b_t) = catalog.u5_generators()
    for nm, (s, tt) in [("A", (a_s, a_t)), ("B", (b_s, b_t))]:
        out.append(Check(t, f"u5 generator {nm} fixes the class", True, pair_act(s, tt, u5.cls) == u5.cls))
    ident4, ident3 = FpMatrix.identity(4, 2), FpMatrix.identity(3, 2)
    out.append(Check(t, "u5 A^4 = B^2 = 1", True,
                     _pow(a_s, 4) == ident4 and _pow(a_t, 4) == ident3 and b_s @ b_s == ident4 and b_t @ b_t == ident3))
    out.append(Check(t, "u5 BAB = A^-1", True,
                     b_s @ a_s @ b_s == fp.mat_inv(a_s) and b_t @ a_t @ b_t == fp.mat_inv(a_t)))

    red = catalog.reduction_example()
    out += _entry_checks(t, red, config)
    s1, s2 = catalog.reduction_witnesses()
    out.append(Check(t, "sigma1 takes xy + y^2 to xy", "xy", str(change_basis(parse_form("xy + y^2", 2), s1))))
    out.append(Check(t, "sigma2 takes x^2 + y^2 + yz + z^2 to x^2 + yz", "x^2 + yz",
                     str(change_basis(parse_form("x^2 + y^2 + yz + z^2", 3), s2))))
    return out


def applications(config: Config, slow: bool = False) -> list[Check]:
    t = "applications"
    out = []
    for n, p in [(1, 3), (1, 5), (1, 7)] + ([(2, 3)] if slow else []):
        out += _entry_checks(t, catalog.extraspecial_class(n, p), config)

    w2 = catalog.w_group_class(2)
    out += _entry_checks(t, w2, config)
    js = joint_stabilizer(w2.cls, config=config)
    proj = {s for s, _ in js.elements}
    out.append(Check(t, "w-group-2 projection to GL_2(F_2) is bijective", True,
                     len(proj) == len(js.elements) == fp.gl_order(2, 2)))
    out += _entry_checks(t, catalog.w_group_class(1), config)

    u4 = catalog.u4_class()
    out += _entry_checks(t, u4, config)
    chi = catalog.u4_twisting()
    for nm, (s, tt) in zip(("involution", "order-three"), catalog.u4_generators()):
        out.append(Check(t, f"u4 {nm} pair fixes the class", True, pair_act(s, tt, u4.cls) == u4.cls))
        out.append(Check(t, f"u4 {nm} pair, extended by the identity on x14, lies in C_chi", True,
                         c_chi_membership(chi, s, _extend_identity(n_automorphism(tt)))))

    e2 = catalog.maximal_class_e2_class(5)
    out += _entry_checks(t, e2, config)
    js = joint_stabilizer(e2.cls, config=config)
    out.append(Check(t, "maximal-class E2 stabilizer is {(sigma, tau): tau = det sigma}", True,
                     all(n_automorphism(tt)[0, 0] == s.det() for s, tt in js.elements)))
    chi = catalog.maximal_class_twisting(5)
    cc = c_chi(chi, config=config)
    out.append(Check(t, "maximal-class C_chi order", catalog.maximal_class_c_chi_order(5), cc.order))
    out.append(Check(t, "maximal-class C_chi members satisfy t = 0, k = v/s", True,
                     all(s[0, 1] == 0 and tt[0, 1] == 0 and s[0, 0] * tt[0, 0] % 5 == tt[1, 1] for s, tt in cc.elements)))
    out.append(Check(t, "maximal-class C_chi preserves ker(chi)", True,
                     all(preserves_kernel(chi, s) for s, _ in cc.elements)))
    return out


def _pow(a: FpMatrix, k: int) -> FpMatrix:
    out = FpMatrix.identity(a.rows, a.p)
    for _ in range(k):
        out = out @ a
    return out


def _extend_identity(t: FpMatrix) -> FpMatrix:
    """Block diagonal (t, 1)."""
    n = t.rows
    rows = [list(t.row(i)) + [0] for i in range(n)] + [[0] * n + [1]]
    return FpMatrix.from_rows(rows, t.p)


TARGETS: dict[str, Callable[..., list[Check]]] = {
    "simultaneous-cases": simultaneous,
    "pair-table": pair_table,
    "standard-tuples": standard_tuples,
    "examples": examples,
    "applications": applications,
}


def run(target: str, config: Config | None = None, slow: bool = False) -> list[Check]:
    config = config or Config()
    if target == "all":
        return [c for name in TARGETS for c in run(name, config, slow)]
    if target == "applications":
        return applications(config, slow)
    return TARGETS[target](config)
