"""Order bookkeeping for Aut(G) of a central extension N -> G -> V with
trivial twisting: |Aut_N(G)| = |Hom(V, N)| * |Im(rho)|."""

from __future__ import annotations

from dataclasses import dataclass

from . import fp
from .classes import ExtensionClass
from .groups import GroupId, identify_group
from .orbits import Config, _config, im_rho_order, joint_stabilizer


def hom_order(m: int, n: int, p: int) -> int:
    """|Hom(F_p^m, F_p^n)| = p^(mn)."""
    return p ** (m * n)


def p_part(x: int, p: int) -> tuple[int, int]:
    """Split x = p^a * u with p not dividing u; returns (a, u)."""
    a = 0
    while x % p == 0 and x:
        x //= p
        a += 1
    return a, x


def factored(x: int, p: int) -> str:
    a, u = p_part(x, p)
    return f"{p}^{a} * {u}"


def is_p_power(x: int, p: int) -> bool:
    return p_part(x, p)[1] == 1


@dataclass
class AutOrderReport:
    p: int
    m: int
    n: int
    hom_order: int
    stab_v_order: int
    stab_n_order: int
    omega_order: int
    im_rho_order: int
    aut_order: int
    n_characteristic_assumed: bool
    image_id: GroupId | None = None

    def __post_init__(self):
        assert self.im_rho_order == self.stab_v_order * self.stab_n_order * self.omega_order
        assert self.aut_order == self.hom_order * self.im_rho_order

    @property
    def what(self) -> str:
        return "|Aut(G)|" if self.n_characteristic_assumed else "|Aut_N(G)|"

    def to_json(self) -> dict:
        return {
            "p": self.p, "m": self.m, "n": self.n,
            "hom_order": str(self.hom_order),
            "stab_v_order": str(self.stab_v_order),
            "stab_n_order": str(self.stab_n_order),
            "omega_order": str(self.omega_order),
            "im_rho_order": str(self.im_rho_order),
            "aut_order": str(self.aut_order),
            "aut_order_factored": factored(self.aut_order, self.p),
            "n_characteristic_assumed": self.n_characteristic_assumed,
            "image_id": self.image_id.to_json() if self.image_id else None,
        }


def aut_order(e: ExtensionClass, n_characteristic: bool = False, cap: int | None = None,
              config: Config | None = None, identify: bool = True) -> AutOrderReport:
    """The full order ledger for [E].  ``aut_order`` is |Aut_N(G)|; it is
    |Aut(G)| only when the caller asserts that N is characteristic in G."""
    config = _config(config, cap)
    r = im_rho_order(e, config=config, label=False)
    image = None
    if identify:
        js = joint_stabilizer(e, config=config)
        if js.elements is not None:
            image = identify_group(js.group())
    return AutOrderReport(e.p, e.m, e.n, hom_order(e.m, e.n, e.p), r.stab_v, r.stab_n, r.omega, r.order,
                          hom_order(e.m, e.n, e.p) * r.order, n_characteristic, image)


@dataclass
class SemisimpleReport:
    p: int
    image_order: int
    image_is_p_group: bool
    image_id: GroupId | None
    normal_sylow_order: int | None
    quotient_id: GroupId | None

    def lines(self) -> list[str]:
        out = [f"F_{self.p}Aut_N(G) and F_{self.p}Im(rho) have the same semisimple quotient",
               f"|Im(rho)| = {factored(self.image_order, self.p)}"]
        if self.image_id is not None:
            out.append(f"Im(rho): {self.image_id.label}")
        if self.image_is_p_group:
            out.append("image is a p-group: the semisimple quotient is F_p (trivial module only)")
        elif self.normal_sylow_order is not None:
            out.append(f"normal Sylow {self.p}-subgroup of order {self.normal_sylow_order}; "
                       f"p'-quotient {self.quotient_id.label if self.quotient_id else '?'}")
        else:
            out.append(f"no normal Sylow {self.p}-subgroup")
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "image_order": str(self.image_order), "image_is_p_group": self.image_is_p_group,
                "image_id": self.image_id.to_json() if self.image_id else None,
                "normal_sylow_order": self.normal_sylow_order,
                "quotient_id": self.quotient_id.to_json() if self.quotient_id else None}


def semisimple_report(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> SemisimpleReport:
    """Group-level data about the semisimple quotient of F_p Aut_N(G), which
    agrees with that of F_p Im(rho) because the kernel is a p-group."""
    config = _config(config, cap)
    js = joint_stabilizer(e, config=config)
    p = e.p
    pgroup = is_p_power(js.order, p)
    image_id = sylow_order = quotient_id = None
    if js.elements is not None:
        g = js.group()
        image_id = identify_group(g)
        sylow = g.normal_sylow(p)
        if sylow is not None:
            sylow_order = len(sylow)
            quotient_id = identify_group(g.quotient(sylow))
    return SemisimpleReport(p, js.order, pgroup, image_id, sylow_order, quotient_id)


def sylow_order_check(e: ExtensionClass, cap: int | None = None, config: Config | None = None) -> bool:
    """|Aut_N(G)|_p = |Hom(V,N)| * |GL_m|_p * |GL_n|_p, compared on p-parts of
    orders.  Meant for classes fixed by a Sylow-type subgroup."""
    rep = aut_order(e, cap=cap, config=config, identify=False)
    p = e.p
    lhs = p_part(rep.aut_order, p)[0]
    rhs = p_part(rep.hom_order, p)[0] + p_part(fp.gl_order(e.m, p), p)[0] + p_part(fp.gl_order(e.n, p), p)[0]
    return lhs == rhs
