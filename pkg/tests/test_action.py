import pytest

from quadrics.errors import InvalidPrimePower, NotAMember, NotOnQuadric, TooLarge
from quadrics.fields import Field
from quadrics.quadform import GroupElement, SplitSpace, dickson, reflection_matrix
from quadrics.quadric import base_point, count_closed_form, enumerate_quadric
from quadrics.action import (
    GroupContext,
    act,
    enumerate_group,
    enumerate_isometries,
    group_order,
    in_o_odd,
    in_so_even_stab,
    in_so_odd,
    orbit,
    reflection_generators,
    so_model_closure,
    stabilizer,
    verify_homogeneous,
    verify_similitude_orbit,
)

F2 = Field.prime(2)
F3 = Field.prime(3)
F4 = Field.extension(2, 2)
F5 = Field.prime(5)


def ctx2():
    return GroupContext(F2, 1)


def ctx3():
    return GroupContext(F3, 1)


# -- membership ---------------------------------------------------------------

def test_context_invariants():
    c = ctx3()
    assert c.space.eval_q(c.one) == F3.one
    assert c.space.trace(c.one) == F3.element(2)
    assert c.space.eval_q(c.x0) == F3.zero
    assert c.space.trace(c.x0) == F3.one
    # q restricted to the even slots is the split even form
    even = c.even_space
    for v in even.enumerate_vectors():
        ambient = [0] * c.dim
        for a, i in enumerate(c.even_slots):
            ambient[i] = v.raws[a]
        assert c.space.raw_q(tuple(ambient)) == even.raw_q(v.raws)


def test_in_o_odd():
    c = ctx3()
    assert in_o_odd(c, GroupElement.identity(F3, 4))
    r = reflection_matrix(c.space, c.space.vector([0, 1, 0, 2]))   # t = 0, q = 2
    assert in_o_odd(c, r)
    assert not in_o_odd(c, GroupElement.scalar(F3, 4, 2))


def test_in_so_odd():
    c = ctx3()
    u = c.space.vector([0, 1, 0, 2])
    v = c.space.vector([1, 0, 1, 0])
    ru, rv = reflection_matrix(c.space, u), reflection_matrix(c.space, v)
    assert in_so_odd(c, ru * rv)
    assert not in_so_odd(c, ru)          # single reflection has Dickson 1
    assert in_so_odd(c, GroupElement.identity(F3, 4))


def test_in_so_even_stab():
    c = ctx3()
    assert in_so_even_stab(c, GroupElement.identity(F3, 4))
    swap = GroupElement.of(F3, [[0, 1], [1, 0]])    # e_1 <-> e_{n+2} on V_2
    extended = c.extend_even(swap)
    assert dickson(c.space, extended) == 1
    assert not in_so_even_stab(c, extended)
    pair = reflection_matrix(c.even_space, c.even_space.vector([1, 1])) * \
        reflection_matrix(c.even_space, c.even_space.vector([1, 2]))
    assert in_so_even_stab(c, c.extend_even(pair))


def test_act():
    c = ctx3()
    x0 = base_point(c.space)
    identity = GroupElement.identity(F3, 4)
    assert act(c, identity, x0) == x0
    g = reflection_matrix(c.space, c.space.vector([0, 1, 0, 2])) * \
        reflection_matrix(c.space, c.space.vector([1, 0, 1, 0]))
    image = act(c, g, x0)
    assert image.w == c.space.basis_vector(1)
    with pytest.raises(NotAMember):
        act(c, reflection_matrix(c.space, c.space.vector([0, 1, 0, 2])), x0)
    with pytest.raises(NotOnQuadric):
        act(ctx2(), identity, x0)


@pytest.mark.parametrize("field,n", [(F2, 1), (F3, 1), (F4, 1), (F2, 2)])
def test_act_preserves_quadric_exhaustive(field, n):
    from quadrics.quadric import is_on_quadric
    c = GroupContext(field, n)
    members = enumerate_group(c, "so_odd")
    points = enumerate_quadric(c.space)
    for m in members:
        for p in points:
            image = act(c, m, p)
            assert is_on_quadric(c.space, image.w)
            assert c.space.trace(m.apply(p.w)) == c.space.trace(p.w)


def test_dickson_unrestricted_stabilizer_is_extended_even_o_group():
    # both inclusions between the x_0-stabilizer of the 1-fixing isometry
    # group and the identity-extension of the full even orthogonal group
    for field, n in [(F2, 1), (F3, 1)]:
        c = GroupContext(field, n)
        o_model = enumerate_group(c, "o_odd")
        stab = {m for m in o_model if m.apply(c.x0) == c.x0}
        extended = {c.extend_even(m) for m in enumerate_isometries(c.even_space)}
        assert extended <= stab
        assert stab <= extended
        assert len(stab) == 2 * group_order("even_split", n, field.q)


# -- generators -----------------------------------------------------------------

def test_reflection_generators_f2():
    c = ctx2()
    gens = reflection_generators(c)
    assert len(gens) == 4
    vecs = {g.column(0) for g in gens}  # distinct matrices
    assert len(gens) == len(set(gens))
    for g in gens:
        assert g.apply(c.one) == c.one
        assert dickson(c.space, g) == 1


def test_generator_count_f3():
    c = ctx3()
    gens = reflection_generators(c)
    # 27 trace-0 directions with leading coefficient 1; 9 have q = 0
    assert len(gens) == len(set(gens))
    for g in gens:
        assert g.apply(c.one) == c.one


# -- enumeration ------------------------------------------------------------------

def test_o_model_counts():
    # isometries fixing 1, Dickson unrestricted: twice the SO-model order
    assert len(enumerate_group(ctx2(), "o_odd")) == 12
    assert len(enumerate_group(ctx3(), "o_odd")) == 48


def test_so_model_counts_and_agreement():
    for c, expected in [(ctx2(), 6), (ctx3(), 24)]:
        direct = enumerate_group(c, "so_odd", method="direct")
        closure = enumerate_group(c, "so_odd", method="closure")
        assert len(direct) == expected
        assert direct == closure


@pytest.mark.parametrize("make_ctx", [ctx2, ctx3])
def test_so_model_is_closed_under_product_and_inverse(make_ctx):
    c = make_ctx()
    members = enumerate_group(c, "so_odd")
    mset = set(members)
    for a in members:
        assert a.inverse() in mset
        for b in members:
            assert a * b in mset


def test_enumerate_even_groups():
    so2 = enumerate_isometries(SplitSpace.even(F3, 1), dickson_value=0)
    assert len(so2) == 2
    assert {m.rows for m in so2} == {((1, 0), (0, 1)), ((2, 0), (0, 2))}
    o2 = enumerate_isometries(SplitSpace.even(F3, 1))
    assert len(o2) == 4
    so4 = enumerate_isometries(SplitSpace.even(F2, 2), dickson_value=0)
    assert len(so4) == 36


def test_enumerate_guard():
    with pytest.raises(TooLarge):
        enumerate_isometries(SplitSpace.even(F5, 3))


def test_closure_matches_direct_so5_f2():
    c = GroupContext(F2, 2)
    els, gens = so_model_closure(c)
    assert len(els) == 720
    direct = enumerate_isometries(c.space, fix_one=True, dickson_value=0, force=True)
    assert {m.rows for m in direct} == els


# -- orbits and stabilizers ---------------------------------------------------------

@pytest.mark.parametrize("field,n,expected", [(F2, 1, 6), (F3, 1, 12), (F2, 2, 20)])
def test_orbit_covers_quadric(field, n, expected):
    c = GroupContext(field, n)
    orb = orbit(c)
    assert len(orb) == expected
    assert {p.w for p in orb} == {p.w for p in enumerate_quadric(c.space)}


@pytest.mark.parametrize("field,n,expected", [(F2, 1, 1), (F3, 1, 2), (F2, 2, 36)])
def test_stabilizer_orders(field, n, expected):
    c = GroupContext(field, n)
    stab = stabilizer(c, base_point(c.space))
    assert len(stab) == expected
    assert expected == group_order("even_split", n, field.q)


def test_stabilizer_equals_extended_even_group():
    for field, n in [(F2, 1), (F3, 1), (F2, 2)]:
        c = GroupContext(field, n)
        stab = set(stabilizer(c, base_point(c.space)))
        extended = {c.extend_even(m)
                    for m in enumerate_isometries(c.even_space, dickson_value=0)}
        assert stab == extended


# -- orders ------------------------------------------------------------------------

def test_group_order_values():
    assert group_order("odd", 1, 2) == 6
    assert group_order("odd", 1, 3) == 24
    assert group_order("odd", 2, 2) == 720
    assert group_order("odd", 2, 3) == 51840
    assert group_order("even_split", 1, 3) == 2
    assert group_order("even_split", 2, 2) == 36
    assert group_order("even_split", 2, 3) == 576


def test_group_order_ratio_is_point_count():
    for n in range(1, 7):
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert group_order("odd", n, q) % group_order("even_split", n, q) == 0
            ratio = group_order("odd", n, q) // group_order("even_split", n, q)
            assert ratio == count_closed_form(n, q)


def test_group_order_rejects_bad_input():
    with pytest.raises(InvalidPrimePower):
        group_order("odd", 1, 6)
    with pytest.raises(InvalidPrimePower):
        group_order("even_split", 0, 3)


# -- verification reports -------------------------------------------------------------

@pytest.mark.parametrize("field,n,orbit_size,stab_size",
                         [(F2, 1, 6, 1), (F3, 1, 12, 2), (F2, 2, 20, 36)])
def test_verify_homogeneous(field, n, orbit_size, stab_size):
    report = verify_homogeneous(field, n)
    assert report["pass"]
    assert report["orbit_size"] == orbit_size
    assert report["stab_size"] == stab_size
    assert report["orbit_size"] * report["stab_size"] == report["group_size"]


def test_verify_similitude_orbit():
    rep4 = verify_similitude_orbit(F4, 1)
    assert rep4["pass"] and rep4["orbit_size"] == rep4["nonzero_norm_vectors"] == 180
    rep3 = verify_similitude_orbit(F3, 1)
    assert rep3["pass"]
    assert rep3["orbit_size"] == 24 and rep3["nonzero_norm_vectors"] == 48
