import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from extorb import fp
from extorb.errors import DegenerateForm, InputError, WitnessSearchCapExceeded, ZeroForm
from extorb.expr import parse_form
from extorb.forms import (AlternatingBockstein, FormTriple, QuadraticFormF2, all_forms, arf_democratic,
                          arf_direct_sum_check, arf_symplectic, basis_map, bilinear_of, bilrad, change_basis, classify,
                          equivalent, rad, reduce_to_standard, standard_for_triple, standard_form, standard_label,
                          substitution)
from extorb.fp import FpMatrix


@st.composite
def forms(draw, m=None):
    m = m or draw(st.integers(1, 5))
    n = m * (m + 1) // 2
    return QuadraticFormF2(m, tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))))


_GL = {m: list(fp.gl_enumerate(m, 2)) for m in (3, 4)}


def gl2_elements(m):
    return st.sampled_from(_GL[m])


def q(text, m=3):
    return parse_form(text, m)


def test_values_match_bruteforce_evaluation():
    for f in all_forms(3):
        table = oracles.quad_table(f.terms(), 3)
        # values() indexes vectors by bit i = v_i, the oracle lexicographically (v_0 most significant)
        vals = f.values()
        for k, v in enumerate(oracles.vectors(3)):
            assert vals[sum(int(b) << i for i, b in enumerate(v))] == table[k] == f(tuple(v))


def test_bilinear_and_radicals():
    assert bilinear_of(q("xy")) == FpMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]], 2)
    assert bilrad(q("x^2 + yz")).basis == ((1, 0, 0),)
    assert rad(q("x^2 + yz")).dim == 0
    assert rad(q("xy")).basis == ((0, 0, 1),)
    assert rad(q("x^2 + xy + y^2")).dim == 1


@given(forms())
def test_radical_inside_bilinear_radical(f):
    r, b = rad(f), bilrad(f)
    assert r.issubset(b)
    assert b.dim - r.dim in (0, 1)
    assert all(f(v) == 0 for v in r.elements())


def test_arf_examples():
    assert arf_democratic(q("xy", 2)) == 1
    assert arf_democratic(q("x^2 + xy + y^2", 2)) == -1
    assert arf_democratic(q("x^2 + yz")) == 0
    assert arf_symplectic(parse_form("x1*x2 + x3*x4", 4)) == 1
    assert arf_symplectic(parse_form("x1*x2 + x3^2 + x3*x4 + x4^2", 4)) == -1
    with pytest.raises(DegenerateForm):
        arf_symplectic(q("x^2 + yz"))


@given(forms(m=4), st.integers(0, 10 ** 6))
def test_symplectic_arf_independent_of_basis_choice(f, seed):
    if bilrad(f).dim:
        return
    assert arf_symplectic(f, random.Random(seed)) == arf_symplectic(f) == arf_democratic(f)


def test_classify_examples():
    assert classify(q("x^2 + yz")).as_tuple() == (3, 1, 0)
    assert classify(q("xy")).as_tuple() == (3, 1, 1)
    assert classify(q("x^2 + xy + y^2")).as_tuple() == (3, 1, -1)
    assert classify(q("x^2")).as_tuple() == (3, 3, 0)
    assert classify(QuadraticFormF2.zero(3)).as_tuple() == (3, 3, 1)
    with pytest.raises(InputError):
        FormTriple(2, 3, 0)


def test_standard_forms_and_labels():
    assert str(standard_form("plus", 4)) == "x1*x2 + x3*x4"
    assert str(standard_form("minus", 2)) == "x^2 + xy + y^2"
    assert str(standard_form("odd", 3)) == "x^2 + yz"
    assert standard_label(q("x^2 + yz")) == "Phi_3 (odd standard)"
    assert standard_label(q("xy")) == "Phi_2^+ in 2 of 3 variables"
    with pytest.raises(InputError):
        standard_form("plus", 3)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_every_triple_has_its_standard_form(m):
    for f in all_forms(m):
        if f.is_zero():
            continue
        t = classify(f)
        assert classify(standard_for_triple(t)) == t


def test_change_basis_examples():
    swap = basis_map([[0, 1], [1, 0]])
    assert str(change_basis(q("x^2 + xy", 2), swap)) == "xy + y^2"
    s1 = basis_map([[1, 0], [1, 1]])
    assert str(change_basis(q("xy + y^2", 2), s1)) == "xy"
    s2 = substitution([[1, 1, 1], [0, 1, 0], [0, 0, 1]])
    assert str(change_basis(q("x^2 + y^2 + yz + z^2"), s2)) == "x^2 + yz"


@given(forms(m=3), gl2_elements(3), gl2_elements(3))
def test_left_action_laws(f, a, b):
    for conv in ("inverse", "transpose"):
        assert f.change_basis(a @ b, conv) == f.change_basis(b, conv).change_basis(a, conv)
    assert f.change_basis(FpMatrix.identity(3, 2)) == f


@given(forms(m=3), gl2_elements(3))
def test_action_is_precomposition(f, s):
    # (s.f)(v) = f(s^-1 v) under the default convention
    g = f.change_basis(s)
    inv = fp.mat_inv(s)
    for v in oracles.vectors(3):
        assert g(tuple(v)) == f(inv.apply(tuple(v)))


@given(forms(m=4), gl2_elements(4))
def test_classification_invariant(f, s):
    assert classify(f.change_basis(s)) == classify(f)
    assert classify(f.change_basis(s, "transpose")) == classify(f)


@given(forms(m=5))
def test_reduce_to_standard(f):
    if f.is_zero():
        with pytest.raises(ZeroForm):
            reduce_to_standard(f)
        return
    for conv in ("inverse", "transpose"):
        s, std = reduce_to_standard(f, conv)
        assert f.change_basis(s, conv) == std
        assert classify(std) == classify(f)


def test_reduce_examples():
    s, std = reduce_to_standard(parse_form("x1*x2 + x3*x4", 4))
    assert s == FpMatrix.identity(4, 2) and str(std) == "x1*x2 + x3*x4"
    assert str(reduce_to_standard(q("xy + y^2", 2))[1]) == "xy"


def test_equivalence_with_witness():
    ok, s = equivalent(q("x^2 + y^2 + yz + z^2"), q("x^2 + yz"), witness=True)
    assert ok and q("x^2 + y^2 + yz + z^2").change_basis(s) == q("x^2 + yz")
    assert equivalent(q("xy"), q("x^2 + yz"), witness=True) == (False, None)
    assert equivalent(q("xy"), q("xz"))
    with pytest.raises(WitnessSearchCapExceeded):
        equivalent(QuadraticFormF2.zero(6), QuadraticFormF2.zero(6), witness=True)


def test_arf_direct_sum():
    plus, minus = standard_form("plus", 2), standard_form("minus", 2)
    assert arf_direct_sum_check(plus, minus)
    assert arf_direct_sum_check(minus, minus)
    assert arf_direct_sum_check(standard_form("odd", 1), plus) is None


@given(forms(m=2), forms(m=2))
def test_arf_multiplicative(a, b):
    assert arf_direct_sum_check(a, b) in (True, None)


def test_alternating_bockstein_change_of_basis():
    # x&y scales by the inverse determinant under the default convention
    w = AlternatingBockstein.from_terms(5, 2, [(0, 1, 1)])
    for s in fp.gl_enumerate(2, 5):
        moved = w.change_basis(s)
        assert moved.alt == ((pow(s.det(), -1, 5)),)
        assert w.change_basis(s, "transpose").alt == (s.det(),)
    b = AlternatingBockstein.from_terms(3, 2, bocksteins=[(0, 1)])
    swap = basis_map([[0, 1], [1, 0]], 3)
    assert b.change_basis(swap).bock == (0, 1)
