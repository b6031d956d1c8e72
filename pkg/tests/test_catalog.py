import json

import pytest

from extorb import catalog, fp
from extorb.classes import ExtensionClass, parse_class, print_class
from extorb.errors import InputError
from extorb.reproduce import _entry_checks
from extorb.orbits import Config

SLOW = {"extraspecial-n2-p3"}


def params():
    out = []
    for name in catalog.names():
        marks = [pytest.mark.slow] if name in SLOW else []
        out.append(pytest.param(name, marks=marks, id=name))
    return out


@pytest.mark.parametrize("name", catalog.names())
def test_round_trip(name):
    e = catalog.get(name)
    c = e.cls
    assert parse_class(print_class(c), c.p, c.m, c.n) == c
    assert ExtensionClass.from_json(json.loads(json.dumps(c.to_json()))) == c
    js = e.to_json()
    assert js["name"] == name and js["text"] == print_class(c)


@pytest.mark.parametrize("name", params())
def test_expected_values(name):
    entry = catalog.get(name)
    bad = [c.line() for c in _entry_checks("catalog", entry, Config()) if not c.ok]
    assert not bad


def test_registry():
    names = catalog.names()
    assert len(names) == len(set(names))
    assert sum(n.startswith("pair-table-") for n in names) == 27
    assert sum(n.startswith("simultaneous-") for n in names) == 8
    with pytest.raises(InputError):
        catalog.get("no-such-entry")


def test_formulas():
    assert catalog.sp_order(1, 3) == 24 and catalog.sp_order(2, 3) == 51840
    assert [catalog.orthogonal_order(s, m) for m in (2, 4) for s in (1, -1)] == [2, 6, 72, 120]
    assert catalog.unipotent_block_order(3, 1) == 4 * fp.gl_order(2, 2)
    assert catalog.maximal_class_c_chi_order(5) == 1600
    with pytest.raises(InputError):
        catalog.orthogonal_order(1, 3)
    with pytest.raises(InputError):
        catalog.extraspecial_class(1, 2)


def test_constructions():
    assert print_class(catalog.extraspecial_class(2, 5).cls) == "x1&x2 + x3&x4"
    assert print_class(catalog.order_p_squared_class(3).cls) == "beta(x); beta(y); x&y"
    assert print_class(catalog.order_p_squared_class(3, "printed").cls) == "0; 0; x&y"
    assert print_class(catalog.w_group_class(2).cls) == "x^2; xy; y^2"
    assert print_class(catalog.u5_class().cls) == "x1*x2; x2*x3; x3*x4"
    with pytest.raises(InputError):
        catalog.order_p_squared_class(3, "other")


def test_printed_order_p_squared_variant_has_larger_stabilizer():
    from extorb.orbits import joint_stabilizer
    printed = catalog.order_p_squared_class(3, "printed").cls
    assert joint_stabilizer(printed).order > fp.gl_order(2, 3)
