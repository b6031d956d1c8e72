"""Small explicit finite groups: multiplication tables, fingerprints, and
naming of isomorphism types up to order 16."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import InputError, UnlabeledOrder

LABEL_MAX_ORDER = 16

# (order, element-order counts) -> label, non-abelian groups only.  Order 16
# has two fingerprints shared by two groups each; those stay unlabeled.
_NONABELIAN = {
    (6, ((1, 1), (2, 3), (3, 2))): "S3",
    (8, ((1, 1), (2, 5), (4, 2))): "D8",
    (8, ((1, 1), (2, 1), (4, 6))): "Q8",
    (10, ((1, 1), (2, 5), (5, 4))): "D10",
    (12, ((1, 1), (2, 3), (3, 8))): "A4",
    (12, ((1, 1), (2, 7), (3, 2), (6, 2))): "D12",
    (12, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))): "Dic12",
    (14, ((1, 1), (2, 7), (7, 6))): "D14",
    (16, ((1, 1), (2, 9), (4, 2), (8, 4))): "D16",
    (16, ((1, 1), (2, 5), (4, 6), (8, 4))): "SD16",
    (16, ((1, 1), (2, 1), (4, 10), (8, 4))): "Q16",
    (16, ((1, 1), (2, 3), (4, 4), (8, 8))): "M16",
    (16, ((1, 1), (2, 11), (4, 4))): "Z/2 x D8",
}


@dataclass(frozen=True)
class GroupId:
    order: int
    abelian: bool
    element_orders: tuple[tuple[int, int], ...]
    label: str

    @property
    def named(self) -> bool:
        return not self.label.startswith("order-")

    def to_json(self) -> dict:
        return {"order": self.order, "abelian": self.abelian, "label": self.label,
                "element_orders": {str(k): v for k, v in self.element_orders}}


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _abelian_label(order: int, counts: dict[int, int]) -> str:
    """Elementary-divisor name of an abelian group from its element orders."""
    if order == 1:
        return "1"
    if order in counts:
        return f"Z/{order}"
    parts = []
    for q in sorted(set(_prime_factors(order))):
        # elements killed by q^k number q^(sum_i min(k, lambda_i))
        logs, k = [], 0
        while True:
            k += 1
            killed = sum(c for o, c in counts.items() if (q**k) % o == 0 and all(f == q for f in _prime_factors(o)))
            e = round(math.log(killed, q))
            logs.append(e)
            if k > 1 and logs[-1] == logs[-2]:
                break
        # number of cyclic factors of size >= q^k is logs[k-1] - logs[k-2]
        prev, ge = 0, []
        for e in logs:
            ge.append(e - prev)
            prev = e
        for k in range(len(ge)):
            exact = ge[k] - (ge[k + 1] if k + 1 < len(ge) else 0)
            parts += [q ** (k + 1)] * exact
    return " x ".join(f"Z/{d}" for d in sorted(parts))


class FiniteGroup:
    """A finite group given by an explicit multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0, elements: Sequence | None = None):
        self.table = [list(row) for row in table]
        self.identity = identity
        self.elements = list(elements) if elements is not None else list(range(len(self.table)))

    @classmethod
    def from_elements(cls, elements: Sequence, mul: Callable, key: Callable[[object], Hashable] = lambda x: x,
                      identity=None) -> FiniteGroup:
        index = {key(x): i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise InputError("repeated group elements")
        table = []
        for a in elements:
            row = []
            for b in elements:
                k = key(mul(a, b))
                if k not in index:
                    raise InputError("element set is not closed under multiplication")
                row.append(index[k])
            table.append(row)
        if identity is None:
            ident = next(i for i in range(len(elements)) if all(table[i][j] == j for j in range(len(elements))))
        else:
            ident = index[key(identity)]
        return cls(table, ident, elements)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def element_orders(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.element_order(i) for i in range(self.order)).items()))

    def check_axioms(self) -> bool:
        n, t, e = self.order, self.table, self.identity
        if any(t[e][i] != i or t[i][e] != i for i in range(n)):
            return False
        if any(sorted(row) != list(range(n)) for row in t):
            return False
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def is_p_group(self, p: int) -> bool:
        return set(_prime_factors(self.order)) <= {p}

    def p_elements(self, p: int) -> list[int]:
        return [i for i in range(self.order) if set(_prime_factors(self.element_order(i))) <= {p}]

    def normal_sylow(self, p: int) -> list[int] | None:
        """The Sylow p-subgroup if it is normal (equivalently, unique), else None."""
        sylow_order = 1
        n = self.order
        while n % p == 0:
            sylow_order *= p
            n //= p
        cand = self.p_elements(p)
        if len(cand) != sylow_order:
            return None
        s = set(cand)
        if any(self.table[a][b] not in s for a in cand for b in cand):
            return None
        return cand

    def quotient(self, normal: Sequence[int]) -> FiniteGroup:
        nset = set(normal)
        coset_of, reps = {}, []
        for g in range(self.order):
            if g in coset_of:
                continue
            idx = len(reps)
            reps.append(g)
            for h in nset:
                coset_of[self.table[g][h]] = idx
        table = [[coset_of[self.table[a][b]] for b in reps] for a in reps]
        return FiniteGroup(table, coset_of[self.identity], reps)

    def fingerprint(self):
        return (self.order, self.is_abelian(), self.element_orders())

    def identify(self, strict: bool = False) -> GroupId:
        return identify_group(self, strict)


def identify_group(group: FiniteGroup, strict: bool = False) -> GroupId:
    """Name the isomorphism type from (order, abelian?, element-order counts)."""
    order, abelian, orders = group.fingerprint()
    label = None
    if order <= LABEL_MAX_ORDER:
        if abelian:
            label = _abelian_label(order, dict(orders))
        else:
            label = _NONABELIAN.get((order, orders))
    if label is None:
        if strict:
            raise UnlabeledOrder((order, abelian, orders))
        label = f"order-{order}"
    return GroupId(order, abelian, orders, label)
