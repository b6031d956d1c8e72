"""Named extension classes with the orders and group types they are known
to have.  Each entry's ``expected`` mapping is the golden data for tests and
for ``extorb reproduce``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import fp
from .classes import ExtensionClass, parse_class
from .errors import InputError
from .forms import AlternatingBockstein, QuadraticFormF2, basis_map, quad_pairs, substitution
from .fp import FpMatrix
from .twisting import TwistingMap


@dataclass
class CatalogEntry:
    name: str
    cls: ExtensionClass
    expected: dict = field(default_factory=dict)
    source: str = ""
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "class": self.cls.to_json(), "text": str(self.cls),
                "expected": {k: (str(v) if isinstance(v, int) else v) for k, v in self.expected.items()},
                "source": self.source, "notes": self.notes}


def _mat(rows, p=2) -> FpMatrix:
    return FpMatrix.from_rows(rows, p)


# -- odd primes ---------------------------------------------------------------------

def sp_order(n: int, p: int) -> int:
    """|Sp(2n, F_p)| = p^(n^2) prod_{i=1..n} (p^(2i) - 1)."""
    out = p ** (n * n)
    for i in range(1, n + 1):
        out *= p ** (2 * i) - 1
    return out


def extraspecial_class(n: int, p: int) -> CatalogEntry:
    """Extraspecial group of order p^(2n+1) and exponent p: the class
    x1&x2 + x3&x4 + ... with values in Z/p."""
    fp.check_prime(p)
    if p == 2 or n < 1:
        raise InputError("extraspecial class needs an odd prime and n >= 1")
    comp = AlternatingBockstein.from_terms(p, 2 * n, [(2 * i, 2 * i + 1, 1) for i in range(n)])
    return CatalogEntry(f"extraspecial-n{n}-p{p}", ExtensionClass.of(comp),
                        {"joint": (p - 1) * sp_order(n, p)},
                        f"extraspecial group of order {p}^{2 * n + 1}, exponent {p}")


def order_p_squared_class(p: int, variant: str = "with_bockstein") -> CatalogEntry:
    """The group <a, b, c | a^(p^2) = b^(p^2) = c^p = 1, c = [b, a], c central>,
    viewed as an extension of V = <a, b> mod Frattini by N = <a^p, b^p, c>.

    ``printed`` keeps only the commutator component (0, 0, x&y); ``with_bockstein``
    also records the p-th powers, giving (beta x, beta y, x&y).
    """
    fp.check_prime(p)
    if p == 2:
        raise InputError("needs an odd prime")
    wedge = AlternatingBockstein.from_terms(p, 2, [(0, 1, 1)])
    zero = AlternatingBockstein.zero(p, 2)
    if variant == "printed":
        comps = (zero, zero, wedge)
        expected = {"joint": fp.gl_order(2, p) * p ** 2 * fp.gl_order(2, p), "omega": p - 1}
    elif variant == "with_bockstein":
        comps = (AlternatingBockstein.from_terms(p, 2, bocksteins=[(0, 1)]),
                 AlternatingBockstein.from_terms(p, 2, bocksteins=[(1, 1)]), wedge)
        order = fp.gl_order(2, p)
        expected = {"im_rho": order, "aut_order": p ** 6 * order, "stab_n": 1}
    else:
        raise InputError(f"variant must be 'printed' or 'with_bockstein', got {variant!r}")
    return CatalogEntry(f"order-p2-generators-p{p}-{variant.replace('_', '-')}", ExtensionClass.of(*comps),
                        expected, "two generators of order p^2 with central commutator of order p",
                        {"variant": variant, "N basis": "a^p, b^p, c"})


def maximal_class_e2_class(p: int = 5) -> CatalogEntry:
    """Bottom layer x&y of the order-p^4 group <a,b,c,d | c = [b,a], d = [c,a]>."""
    comp = AlternatingBockstein.from_terms(p, 2, [(0, 1, 1)])
    return CatalogEntry(f"maximal-class-e2-p{p}", ExtensionClass.of(comp), {"joint": fp.gl_order(2, p)},
                        "order p^4 group of maximal class, first central layer")


def maximal_class_twisting(p: int = 5) -> TwistingMap:
    """chi(a) : c -> c + d, d -> d and chi(b) = id, on N = <c, d>."""
    return TwistingMap(p, 2, 2, (basis_map([[1, 1], [0, 1]], p), FpMatrix.identity(2, p)))


def maximal_class_c_chi_order(p: int) -> int:
    """sigma = [[k, 0], [m, n]], tau = [[s, 0], [u, v]] with k = v/s."""
    return (p - 1) ** 3 * p * p


# -- p = 2 --------------------------------------------------------------------------

def w_group_class(n: int) -> CatalogEntry:
    """Universal W-group on n generators: every monomial x_i x_j (i <= j) as a component."""
    if n < 1:
        raise InputError("n >= 1")
    comps = []
    for i, j in quad_pairs(n):
        comps.append(QuadraticFormF2.from_terms(n, [(i, j)]))
    return CatalogEntry(f"w-group-{n}", ExtensionClass.of(*comps), {"im_rho": fp.gl_order(n, 2)},
                        f"universal W-group on {n} generators")


def u4_class() -> CatalogEntry:
    return CatalogEntry("u4", parse_class("xy; yz", 2, 3, 2), {"joint": 6, "label": "S3", "im_rho": 6},
                        "upper unitriangular 4x4 over F_2 modulo the centre",
                        {"V basis": "x12, x23, x34 (variables x, y, z)", "N basis": "x13, x24"})


def u4_generators() -> tuple[tuple[FpMatrix, FpMatrix], tuple[FpMatrix, FpMatrix]]:
    """The involution pair and the order-three pair fixing the u4 class.

    Matrices send basis vectors to columns: x12 <-> x34 with x13 <-> x24, and
    x12 -> x12 + x34, x34 -> x12 with x13 -> x24, x24 -> x13 + x24."""
    inv = (basis_map([[0, 0, 1], [0, 1, 0], [1, 0, 0]]), basis_map([[0, 1], [1, 0]]))
    three = (basis_map([[1, 0, 1], [0, 1, 0], [1, 0, 0]]), basis_map([[0, 1], [1, 1]]))
    return inv, three


def u4_twisting() -> TwistingMap:
    """Conjugation of x12, x23, x34 on the Frattini subgroup <x13, x24, x14>."""
    return TwistingMap(2, 3, 3, (basis_map([[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
                                 FpMatrix.identity(3, 2),
                                 basis_map([[1, 0, 1], [0, 1, 0], [0, 0, 1]])))


def u5_class() -> CatalogEntry:
    return CatalogEntry("u5", parse_class("x1*x2; x2*x3; x3*x4", 2, 4, 3),
                        {"joint": 8, "label": "D8", "aut_order": 2 ** 15},
                        "upper unitriangular 5x5 over F_2 modulo the third mod-2 central term",
                        {"V basis": "x12, x23, x34, x45 as x1..x4", "N basis": "x13, x24, x35"})


def u5_generators() -> tuple[tuple[FpMatrix, FpMatrix], tuple[FpMatrix, FpMatrix]]:
    """Generators A (order 4) and B (order 2) of the u5 stabilizer."""
    a = (_mat([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 1, 0]]), _mat([[0, 0, 1], [1, 1, 0], [1, 0, 0]]))
    b = (_mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]]), _mat([[1, 0, 0], [0, 1, 1], [0, 0, 1]]))
    return a, b


SIMULTANEOUS_CASES = [
    ("xy; xy", {"stab_v": 8, "stab_n": 2, "omega": 1, "im_rho": 16}),
    ("x^2 + xy + y^2; x^2 + xy + y^2", {"stab_v": 24, "stab_n": 2, "omega": 1, "im_rho": 48}),
    ("x^2 + yz; x^2 + yz", {"stab_v": 6, "stab_n": 2, "omega": 1, "im_rho": 12}),
    ("x^2; x^2", {"stab_v": 24, "stab_n": 2, "omega": 1, "im_rho": 48}),
    ("x^2 + yz; x^2 + xy + y^2", {"stab_v": 2, "stab_n": 1, "omega": 1, "im_rho": 2}),
    ("xy; x^2 + xy + y^2", {"stab_v": 8, "stab_n": 1, "omega": 1, "im_rho": 8, "stab_label": "D8"}),
    ("xy; x^2 + yz", {"stab_v": 1, "stab_n": 1, "omega": 2, "im_rho": 2, "omega_label": "Z/2"}),
    ("xy; yz", {"stab_v": 1, "stab_n": 1, "omega": 6, "im_rho": 6}),
]


def simultaneous_cases() -> list[CatalogEntry]:
    """Pairs of forms in three variables that are simultaneously standard."""
    return [CatalogEntry(f"simultaneous-{i + 1}", parse_class(text, 2, 3, 2), dict(exp),
                         "pair of simultaneously standard forms in x, y, z")
            for i, (text, exp) in enumerate(SIMULTANEOUS_CASES)]


PAIR_TABLE = {
    2: ["x^2 + xz + yz", "x^2 + xy + xz + z^2", "x^2 + xz + yz + z^2", "x^2 + xy + y^2 + yz",
        "x^2 + xy + yz", "x^2 + xy + xz + y^2"],
    3: ["xy + xz + y^2", "x^2 + xy + xz + y^2 + yz", "xz + y^2 + yz", "xy + xz + z^2",
        "x^2 + xy + y^2 + z^2", "x^2 + xz + y^2 + z^2", "x^2 + xy + z^2", "xz + y^2 + yz + z^2",
        "x^2 + xz + y^2", "x^2 + xy + xz + yz + z^2", "xy + y^2 + yz + z^2", "xy + yz + z^2"],
    4: ["x^2 + yz + z^2", "xy + xz + y^2 + yz + z^2", "xy + xz + yz", "xz + y^2 + z^2",
        "x^2 + y^2 + yz", "xy + z^2", "xy + y^2 + z^2", "x^2 + y^2 + yz + z^2", "xz + y^2"],
}
PAIR_TABLE_BREAKDOWN = {2: (1, 2), 3: (1, 3), 4: (2, 2)}  # column -> (|stab|, |Omega|)
PAIR_TABLE_X = "x^2 + yz"


def pair_table() -> list[CatalogEntry]:
    """(x^2 + yz, Y) for the 27 forms Y equivalent to x^2 + yz but not
    simultaneously standard with it, grouped by |Im(rho)|."""
    out = []
    for col, ys in PAIR_TABLE.items():
        stab, om = PAIR_TABLE_BREAKDOWN[col]
        for row, y in enumerate(ys):
            out.append(CatalogEntry(f"pair-table-{col}-{row + 1}", parse_class(f"{PAIR_TABLE_X}; {y}", 2, 3, 2),
                                    {"im_rho": col, "stab_v": stab, "stab_n": 1, "omega": om},
                                    "pair with first form x^2 + yz", {"column": col, "row": row + 1}))
    return out


def reduction_example() -> CatalogEntry:
    return CatalogEntry("reduction-example", parse_class("xy + y^2; x^2 + y^2 + yz + z^2", 2, 3, 2),
                        {"stab_v": 2, "stab_n": 1, "omega": 2, "im_rho": 4, "omega_label": "Z/2"},
                        "pair reduced to standard forms separately")


def reduction_witnesses() -> tuple[FpMatrix, FpMatrix]:
    """sigma1 (basis map y -> x + y, on two variables) takes xy + y^2 to xy;
    sigma2 (substitution x -> x + y + z) takes x^2 + y^2 + yz + z^2 to x^2 + yz."""
    return basis_map([[1, 0], [1, 1]]), substitution([[1, 1, 1], [0, 1, 0], [0, 0, 1]])


# -- standard tuples ------------------------------------------------------------------

def orthogonal_order(sign: int, m: int) -> int:
    """|O_m^{+/-}(F_2)| for even m = 2r:
    2 (2^r -/+ 1) prod_{i=1}^{r-1} (2^(2i) - 1) 2^(2i)."""
    if m % 2:
        raise InputError("orthogonal group order needs even m")
    r = m // 2
    out = 2 * (2 ** r - sign)
    for i in range(1, r):
        out *= (2 ** (2 * i) - 1) * 2 ** (2 * i)
    return out


def unipotent_block_order(n: int, fixed: int) -> int:
    """Order of (I_fixed 0; * GL_{n-fixed}) over F_2: 2^(fixed (n - fixed)) |GL_{n-fixed}|."""
    return 2 ** (fixed * (n - fixed)) * fp.gl_order(n - fixed, 2)


def standard_tuple(m: int, k: int, n: int) -> CatalogEntry:
    """(X,...,X, Y,...,Y) with k copies of Phi_m^+ followed by n - k of Phi_m^-."""
    from .forms import standard_form
    x, y = standard_form("plus", m), standard_form("minus", m)
    cls = ExtensionClass.of(*([x] * k + [y] * (n - k)))
    if k in (0, n):
        exp = {"stab_v": orthogonal_order(1 if k else -1, m), "stab_n": unipotent_block_order(n, 1)}
    else:
        exp = {"stab_n": unipotent_block_order(n, 2)}
    exp["omega"] = 1
    return CatalogEntry(f"standard-tuple-m{m}-k{k}-n{n}", cls, exp, "tuple of standard plus and minus forms",
                        {"m": m, "k": k, "n": n})


def standard_tuples(ms=(2, 4), max_n: int = 3) -> list[CatalogEntry]:
    return [standard_tuple(m, k, n) for m in ms for n in range(1, max_n + 1) for k in range(n + 1)]


# -- registry --------------------------------------------------------------------------

_REGISTRY: dict[str, Callable[[], CatalogEntry]] = {
    "extraspecial-n1-p3": lambda: extraspecial_class(1, 3),
    "extraspecial-n1-p5": lambda: extraspecial_class(1, 5),
    "extraspecial-n1-p7": lambda: extraspecial_class(1, 7),
    "extraspecial-n2-p3": lambda: extraspecial_class(2, 3),
    "order-p2-generators-p3-printed": lambda: order_p_squared_class(3, "printed"),
    "order-p2-generators-p3-with-bockstein": lambda: order_p_squared_class(3),
    "order-p2-generators-p5-printed": lambda: order_p_squared_class(5, "printed"),
    "order-p2-generators-p5-with-bockstein": lambda: order_p_squared_class(5),
    "maximal-class-e2-p5": lambda: maximal_class_e2_class(5),
    "w-group-1": lambda: w_group_class(1),
    "w-group-2": lambda: w_group_class(2),
    "u4": u4_class,
    "u5": u5_class,
    "reduction-example": reduction_example,
}


def _all_entries() -> dict[str, Callable[[], CatalogEntry]]:
    reg = dict(_REGISTRY)
    for e in simultaneous_cases() + pair_table() + standard_tuples():
        reg[e.name] = (lambda e=e: e)
    return reg


def names() -> list[str]:
    return list(_all_entries())


def get(name: str) -> CatalogEntry:
    reg = _all_entries()
    if name not in reg:
        raise InputError(f"unknown catalog entry {name!r}; try 'extorb catalog list'")
    return reg[name]()


def entries() -> list[CatalogEntry]:
    return [f() for f in _all_entries().values()]
