import pytest

from rbgroups import families
from rbgroups.labels import iso_label
from rbgroups.perm import PermError


def test_cyclic():
    G = families.cyclic(6).group
    assert G.order() == 6 and G.is_abelian()
    assert iso_label(G) == "Z6"


def test_klein():
    G = families.klein().group
    assert G.order() == 4
    assert all(g.order() <= 2 for g in G.elements)


def test_dihedral():
    built = families.dihedral(5)
    G = built.group
    assert G.order() == 10 and not G.is_abelian()
    assert built.r.order() == 5 and built.s.order() == 2
    assert built.s * built.r * built.s == built.r.inverse()


def test_generalized_quaternion():
    built = families.generalized_quaternion(3)  # Q12
    G = built.group
    assert G.order() == 12
    # the unique involution is central
    invs = [g for g in G.elements if g.order() == 2]
    assert len(invs) == 1
    z = invs[0]
    assert all(z * g == g * z for g in G.elements)
    assert built.s * built.s == z
    assert built.s.inverse() * built.r * built.s == built.r.inverse()


def test_q8_label():
    G = families.generalized_quaternion(2).group
    assert iso_label(G) == "Q8"


def test_symmetric_and_alternating():
    assert families.symmetric(4).group.order() == 24
    assert families.alternating(4).group.order() == 12
    A5 = families.alternating(5).group
    assert A5.order() == 60
    assert all(g.is_even() for g in A5.elements)


def test_alternating_large_is_generator_only():
    A9 = families.alternating(9).group
    assert not A9.enumerated
    assert A9.order() == 181440


def test_alternating_on_points():
    K = families.alternating_on_points(9, tuple(range(7)))
    assert K.order() == 2520
    assert all(g[i] == i for g in K.generators for i in (7, 8))


def test_parse_group_spec():
    assert families.parse_group_spec("D:8").group.order() == 8
    assert families.parse_group_spec("Q:8").group.order() == 8
    assert families.parse_group_spec("Z:5").group.order() == 5
    assert families.parse_group_spec("S:4").group.order() == 24
    assert families.parse_group_spec("A:4").group.order() == 12
    with pytest.raises(PermError):
        families.parse_group_spec("X:3")
    with pytest.raises(PermError):
        families.parse_group_spec("D:7")
