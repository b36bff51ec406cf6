"""Subgroup lattice enumeration and the classical named subgroups."""

import pytest

from formalab import (
    all_subgroups,
    catalog_group,
    catalog_groups,
    centre,
    core,
    fitting_subgroup,
    frattini_subgroup,
    hall,
    hypercentre,
    is_nilpotent,
    is_soluble,
    maximal_subgroups,
    minimal_normal_subgroups,
    named_subgroup,
    nilpotent_length,
    normal_subgroups,
    section_centralizer,
    socle,
    sylow,
    upper_central_series,
)
from formalab.errors import NotSoluble
from formalab.lattice import (
    derived_series,
    derived_subgroup,
    fitting_via_lattice,
    o_pi,
    subgroup_as_group,
)


def test_s3_has_six_subgroups(s3):
    assert len(all_subgroups(s3).subgroups) == 6


def test_s4_has_thirty_subgroups(s4):
    assert len(all_subgroups(s4).subgroups) == 30


def test_subgroup_orders_divide(s4):
    for s in all_subgroups(s4).subgroups:
        assert 24 % s.order == 0


def test_normal_subgroups_of_s4(s4):
    assert sorted(n.order for n in normal_subgroups(s4)) == [1, 4, 12, 24]


def test_minimal_normal(s4, sl23):
    assert [m.order for m in minimal_normal_subgroups(s4)] == [4]
    assert [m.order for m in minimal_normal_subgroups(sl23)] == [2]


def test_maximal_subgroups_of_a4(a4):
    assert sorted(m.order for m in maximal_subgroups(a4)) == [3, 3, 3, 3, 4]


def test_core_of_point_stabilizer(s4):
    stab = [s for s in all_subgroups(s4).subgroups if s.order == 6][0]
    assert core(s4, stab).order == 1


def test_centre_examples(q8, s3, sl23):
    assert centre(q8).order == 2
    assert centre(s3).order == 1
    assert centre(sl23).order == 2


def test_upper_central_series_q8(q8):
    assert [t.order for t in upper_central_series(q8)] == [1, 2, 8]
    assert hypercentre(q8).order == 8


def test_hypercentre_of_s4_trivial(s4):
    assert hypercentre(s4).order == 1


def test_derived_series(s4):
    assert [t.order for t in derived_series(s4)] == [24, 12, 4, 1]


def test_derived_subgroup_of_sl23(sl23):
    assert derived_subgroup(sl23).order == 8


def test_solubility():
    assert is_soluble(catalog_group("S4"))
    assert not is_soluble(catalog_group("A5"))
    assert not is_soluble(catalog_group("S5"))


def test_fitting_both_routes_agree():
    for name in ("S3", "S4", "SL(2,3)", "A5", "D12", "C3:C8"):
        G = catalog_group(name)
        assert fitting_subgroup(G).bits == fitting_via_lattice(G).bits


def test_fitting_is_nilpotent_catalogwide():
    # classical sanity: Fitting nilpotent + normal, Frattini below Fitting
    from formalab.groups import is_normal
    for G in catalog_groups():
        fit = fitting_subgroup(G)
        sub, _ = subgroup_as_group(G, fit)
        assert is_nilpotent(sub)
        assert is_normal(G, fit)
        assert frattini_subgroup(G).issubset(fit)


def test_frattini_examples(s4, q8):
    assert frattini_subgroup(s4).order == 1
    assert frattini_subgroup(q8).order == 2


def test_socle(s4, sl23):
    assert socle(s4).order == 4
    assert socle(sl23).order == 2


def test_nilpotent_length():
    assert nilpotent_length(catalog_group("C12")) == 1
    assert nilpotent_length(catalog_group("S3")) == 2
    assert nilpotent_length(catalog_group("S4")) == 3
    with pytest.raises(NotSoluble):
        nilpotent_length(catalog_group("A5"))


def test_o_pi(s4, sl23):
    assert o_pi(s4, {2}).order == 4
    assert o_pi(s4, {3}).order == 1
    assert o_pi(sl23, {2}).order == 8


def test_sylow_and_hall(s4):
    assert sylow(s4, 2).order == 8
    assert sylow(s4, 3).order == 3
    assert hall(s4, {2}).order == 8
    assert hall(s4, {2, 3}).order == 24
    # S4 has no Hall {3}-complement of order 3 paired with... but {3} Hall = Sylow
    assert hall(s4, {3}).order == 3


def test_hall_missing_in_a5():
    A5 = catalog_group("A5")
    assert hall(A5, {3, 5}) is None


def test_named_subgroup_dispatch(s4):
    assert named_subgroup(s4, "derived").order == 12
    assert named_subgroup(s4, "centre").order == 1
    assert named_subgroup(s4, "fitting").order == 4
    assert named_subgroup(s4, "frattini").order == 1
    assert named_subgroup(s4, "hypercentre_inf").order == 1
    assert named_subgroup(s4, "O_pi", pi={2}).order == 4
    assert named_subgroup(s4, "O_pprime_p", p=2).order == 4
    assert named_subgroup(s4, "O_pprime_p", p=3).order == 12
    assert named_subgroup(s4, "socle").order == 4


def test_section_centralizer(s4):
    V = minimal_normal_subgroups(s4)[0]
    C = section_centralizer(s4, V, s4.trivial_subgroup())
    assert C.order == 4
