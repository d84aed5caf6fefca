from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtriang.cyclotomic import CycScalar, root_of_unity
from qtriang.groups import bundled_group, CATALOG_NAMES
from qtriang.hopf import GATensor, first_difference


def koszul_tensor():
    g = bundled_group("Z2")
    h = Fraction(1, 2)
    return GATensor(g, 2, {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): -h})


def test_unit_laws():
    g = bundled_group("S3")
    unit = GATensor.unit(g, 2)
    x = GATensor(g, 2, {(1, 3): CycScalar.one(), (2, 2): root_of_unity(3)})
    assert unit * x == x
    assert x * unit == x


def test_group_element_inverse_product():
    g = bundled_group("D4")
    for a in g.elements():
        prod = GATensor.basis(g, a) * GATensor.basis(g, g.inverses[a])
        assert prod == GATensor.unit(g, 1)


def test_koszul_squares_to_unit():
    r = koszul_tensor()
    assert (r * r).is_unit()


def test_mismatched_operands_rejected():
    z2 = bundled_group("Z2")
    z3 = bundled_group("Z3")
    with pytest.raises(ValueError):
        GATensor.unit(z2, 2) * GATensor.unit(z2, 1)
    with pytest.raises(ValueError):
        GATensor.unit(z2, 1) * GATensor.unit(z3, 1)


def test_coproduct_of_grouplike():
    g = bundled_group("S3")
    x = GATensor.basis(g, 3)
    assert x.coproduct(1) == GATensor.basis(g, 3, 3)
    unit3 = GATensor.unit(g, 2).coproduct(1)
    assert unit3 == GATensor.unit(g, 3)


def test_coproduct_identity_on_koszul():
    r = koszul_tensor()
    r12 = r.embed_legs((1, 2), 3)
    r13 = r.embed_legs((1, 3), 3)
    assert r.coproduct(2) == r13 * r12


def test_counit_examples():
    g = bundled_group("S3")
    x = GATensor.basis(g, 4)
    assert x.counit(1) == GATensor(g, 0, {(): CycScalar.one()})
    r = koszul_tensor()
    assert r.counit(1).is_unit()
    assert r.counit(2).is_unit()
    y = GATensor.basis(g, 2).scale(2) - GATensor.basis(g, 5)
    assert y.counit(1) == GATensor(g, 0, {(): CycScalar.one()})


def test_antipode_examples():
    g = bundled_group("Q8")
    x = GATensor.basis(g, 2)  # the element i
    assert x.antipode(1) == GATensor.basis(g, 3)  # its inverse -i
    r = koszul_tensor()
    assert r.antipode(1) == r.inverse()
    assert r.antipode(1).antipode(1) == r


def test_leg_out_of_range():
    r = koszul_tensor()
    for bad in (0, 3):
        with pytest.raises(ValueError):
            r.coproduct(bad)
        with pytest.raises(ValueError):
            r.counit(bad)
        with pytest.raises(ValueError):
            r.antipode(bad)


def test_permute_legs():
    r = koszul_tensor()
    assert r.swap() == r
    g = bundled_group("S3")
    x = GATensor.basis(g, 1, 2, 3)
    assert x.permute_legs((1, 2, 0)) == GATensor.basis(g, 2, 3, 1)
    assert x.permute_legs((1, 0, 2)).permute_legs((1, 0, 2)) == x
    with pytest.raises(ValueError):
        x.permute_legs((0, 0, 1))


def test_embed_legs_golden():
    r = koszul_tensor()
    g = r.group
    h = Fraction(1, 2)
    expected = GATensor(
        g, 3, {(0, 0, 0): h, (0, 0, 1): h, (1, 0, 0): h, (1, 0, 1): -h}
    )
    assert r.embed_legs((1, 3), 3) == expected
    assert GATensor.unit(g, 2).embed_legs((1, 3), 3) == GATensor.unit(g, 3)
    assert r.embed_legs((1, 2), 3) == r @ GATensor.unit(g, 1)
    with pytest.raises(ValueError):
        r.embed_legs((2, 2), 3)


def test_adjoint_action():
    s3 = bundled_group("S3")
    x = GATensor.basis(s3, 3)  # a 3-cycle
    conj = x.adjoint_action(2, 1)  # conjugate by a transposition
    assert conj == GATensor.basis(s3, 4)
    # identity and central conjugators act trivially
    assert x.adjoint_action(0, 1) == x
    q8 = bundled_group("Q8")
    center = GATensor.basis(q8, 1)
    for g in q8.elements():
        assert center.adjoint_action(g, 1) == center


def test_is_grouplike():
    g = bundled_group("S3")
    assert GATensor.basis(g, 2).is_grouplike()
    two = GATensor.basis(g, 2) + GATensor.basis(g, 3)
    assert not two.is_grouplike()
    assert not GATensor.basis(g, 2).scale(2).is_grouplike()


def test_projector_is_not_invertible():
    g = bundled_group("Z2")
    h = Fraction(1, 2)
    proj = GATensor(g, 2, {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): h})
    assert not proj.is_invertible()
    with pytest.raises(ValueError):
        proj.inverse()


def test_inverse_of_scaled_grouplike():
    g = bundled_group("Q8")
    x = GATensor.basis(g, 4).scale(root_of_unity(3))
    inv = x.inverse()
    assert (x * inv).is_unit()
    assert (inv * x).is_unit()


def test_first_difference_reports_smallest_key():
    g = bundled_group("Z2")
    a = GATensor(g, 1, {(0,): 1, (1,): 2})
    b = GATensor(g, 1, {(0,): 1, (1,): 3})
    key, left, right = first_difference(a, b)
    assert key == (1,)
    assert left == 2 and right == 3
    assert first_difference(a, a) is None


_names = st.sampled_from(CATALOG_NAMES)
_coeff = st.sampled_from(
    [CycScalar.one(), CycScalar.rational(-2), root_of_unity(3), root_of_unity(4, 3)]
)


@st.composite
def _arity1(draw):
    g = bundled_group(draw(_names))
    n_terms = draw(st.integers(1, 3))
    terms = {}
    for _ in range(n_terms):
        terms[(draw(st.integers(0, g.size - 1)),)] = draw(_coeff)
    return GATensor(g, 1, terms)


@settings(max_examples=40, deadline=None)
@given(_arity1())
def test_bialgebra_axioms_on_random_tensors(x):
    g = x.group
    # coassociativity and cocommutativity
    assert x.coproduct(1).coproduct(1) == x.coproduct(1).coproduct(2)
    assert x.coproduct(1).permute_legs((1, 0)) == x.coproduct(1)
    # counitarity
    assert x.coproduct(1).counit(1) == x
    assert x.coproduct(1).counit(2) == x
    # antipode axiom: multiplying the two legs of (I x S)(coproduct) gives
    # the counit times the unit
    ant = x.coproduct(1).antipode(2)
    collapsed = GATensor(
        g, 1, [((g.table[a][b],), c) for (a, b), c in ant.terms.items()]
    )
    eps = x.counit(1).terms.get((), CycScalar.zero())
    assert collapsed == GATensor.unit(g, 1).scale(eps)
    # antipode is an involution here
    assert x.antipode(1).antipode(1) == x


@settings(max_examples=30, deadline=None)
@given(_arity1(), _arity1(), _arity1())
def test_multiplication_properties(x, y, z):
    if x.group != y.group or y.group != z.group:
        return
    g = x.group
    unit = GATensor.unit(g, 1)
    assert unit * x == x
    assert x * unit == x
    assert (x * y) * z == x * (y * z)
    assert (x * y).counit(1) == GATensor(
        g, 0, {(): x.counit(1).coeff(()) * y.counit(1).coeff(())}
    )
