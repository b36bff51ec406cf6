"""Chief series, centrality of chief factors, and hypercentre computations."""

import pytest

from formalab import (
    NA,
    NIL,
    SUP,
    SYLTOWER,
    catalog_group,
    chief_series,
    chief_series_through,
    is_f_central,
    is_f_central_satellite,
    is_f_central_semidirect,
    minimal_normal_subgroups,
    p_nilp,
    z_f,
    z_pi_f,
    z_pi_f_oracle,
)
from formalab.chiefs import ChiefFactor
from formalab.errors import NotNormal, PreconditionViolated
from formalab.lattice import hypercentre


def test_chief_series_of_s4(s4):
    cs = chief_series(s4)
    assert [t.order for t in cs.terms] == [1, 4, 12, 24]
    assert [f.order for f in cs.factors] == [4, 3, 2]


def test_chief_series_through(s4):
    A4n = [n for n in chief_series(s4).terms if n.order == 12][0]
    cs = chief_series_through(s4, A4n)
    assert any(t.bits == A4n.bits for t in cs.terms)


def test_series_through_requires_normal(s4):
    from formalab import generated_subgroup
    H = generated_subgroup(s4, [s4.gen_idx[1]])
    with pytest.raises(NotNormal):
        chief_series_through(s4, H)


def test_jordan_hoelder_factor_multiset():
    # the factor-order multiset is series-independent
    for name in ("S4", "SL(2,3)", "S3xS3", "C2xS4", "Ex1.2"):
        G = catalog_group(name)
        first = sorted(f.order for f in chief_series(G, "first").factors)
        last = sorted(f.order for f in chief_series(G, "last").factors)
        assert first == last


def test_chief_factor_validation(s4):
    V = minimal_normal_subgroups(s4)[0]
    with pytest.raises(PreconditionViolated):
        ChiefFactor(s4, V, V)


def test_centrality_verdicts_on_s4(s4):
    cs = chief_series(s4)
    verdicts = [is_f_central(s4, f, SUP) for f in cs.factors]
    # the order-4 factor is the only non-central one for supersolubility
    assert verdicts == [False, True, True]
    # only the top factor S4/A4 is central in its quotient
    assert [is_f_central(s4, f, NIL) for f in cs.factors] == [False, False, True]


def test_dual_oracle_agreement_spot(s4, sl23):
    for G in (s4, sl23):
        for fac in chief_series(G).factors:
            for F in (NIL, SUP, NA, p_nilp(2)):
                assert (is_f_central_satellite(G, fac, F)
                        == is_f_central_semidirect(G, fac, F))


def test_syltower_centrality_uses_semidirect(s3):
    fac = chief_series(s3).factors[0]
    assert fac.order == 3
    assert is_f_central(s3, fac, SYLTOWER) == is_f_central_semidirect(
        s3, fac, SYLTOWER)


def test_z_nil_is_hypercentre(q8, s4, sl23):
    for G in (q8, s4, sl23):
        assert z_f(G, NIL).bits == hypercentre(G).bits


def test_z_sup_examples(s4, s3):
    assert z_f(s4, SUP).order == 1
    assert z_pi_f(s4, SUP, {3}).order == 24   # only 3-chief factors constrained
    assert z_pi_f(s4, SUP, {2}).order == 1
    assert z_f(s3, SUP).order == 6


def test_pi_monotonicity(s4, sl23):
    # enlarging pi can only shrink the hypercentre
    for G in (s4, sl23):
        for F in (NIL, SUP, NA):
            big = z_pi_f(G, F, {2, 3}).order
            assert z_pi_f(G, F, {2}).order >= big
            assert z_pi_f(G, F, {3}).order >= big


def test_absorb_schedule_independence():
    for name in ("S4", "SL(2,3)", "S3xS3", "Q8xS3"):
        G = catalog_group(name)
        for F in (NIL, SUP, NA):
            ref = z_f(G, F).bits
            assert z_pi_f(G, F, absorb="first").bits == ref
            assert z_pi_f(G, F, absorb="last").bits == ref


def test_oracle_agreement_spot():
    for name in ("S4", "SL(2,3)", "C3:C8", "D12", "S3xC4"):
        G = catalog_group(name)
        for F in (NIL, SUP, NA, p_nilp(2)):
            assert z_pi_f(G, F).bits == z_pi_f_oracle(G, F).bits
            assert z_pi_f(G, F, {2}).bits == z_pi_f_oracle(G, F, {2}).bits


def test_z_on_member_is_whole_group(q8, s3):
    assert z_f(q8, NIL).order == 8
    assert z_f(s3, NA).order == 6
