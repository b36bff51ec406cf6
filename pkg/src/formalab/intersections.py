"""F-maximal subgroups, Int_F(G), K-F-subnormality, and Int*_F(G)."""

from __future__ import annotations

from dataclasses import dataclass

from .formations import FormationSpec, is_member
from .groups import Group, SubgroupSet, quotient_group
from .lattice import all_subgroups, core, subgroup_as_group, translate_into


@dataclass(frozen=True)
class FMaxReport:
    """All F-maximal subgroups of one group plus the derived intersections."""

    formation: FormationSpec
    f_maximal: tuple[SubgroupSet, ...]
    knormal_flags: tuple[bool, ...]
    int_f: SubgroupSet
    int_star: SubgroupSet


def _in_formation(G: Group, H: SubgroupSet, F: FormationSpec) -> bool:
    sub, _ = subgroup_as_group(G, H)
    return is_member(F, sub)


def f_maximal_subgroups(G: Group, F: FormationSpec) -> list[SubgroupSet]:
    """Inclusion-maximal members of {H <= G : H in F}."""
    key = ("f_maximal", F)
    if key in G._cache:
        return G._cache[key]
    members = [s for s in all_subgroups(G).subgroups if _in_formation(G, s, F)]
    out = [s for s in members
           if not any(s.bits != t.bits and s.bits & t.bits == s.bits
                      for t in members)]
    G._cache[key] = out
    return out


def _intersection(G: Group, family) -> SubgroupSet:
    bits = (1 << G.n) - 1  # empty intersection is G by convention
    for s in family:
        bits &= s.bits
    return SubgroupSet(G, bits, check=False)


def int_f(G: Group, F: FormationSpec) -> SubgroupSet:
    """Intersection of all F-maximal subgroups; always normal in G."""
    from .groups import is_normal
    res = _intersection(G, f_maximal_subgroups(G, F))
    assert is_normal(G, res), "Int_F must be conjugation-invariant"
    return res


def _step_admissible(G: Group, A: SubgroupSet, B: SubgroupSet,
                     F: FormationSpec) -> bool:
    """A < B is a valid chain step: A normal in B, or B/core_B(A) in F."""
    key = ("kstep", A.bits, B.bits, F)
    if key in G._cache:
        return G._cache[key]
    c = core(G, A, within=B)
    if c.bits == A.bits:  # core equals A means A is normal in B
        res = True
    else:
        qkey = ("kquot", B.bits, c.bits, F)
        if qkey in G._cache:
            res = G._cache[qkey]
        else:
            bgrp, _ = subgroup_as_group(G, B)
            quot = quotient_group(bgrp, translate_into(G, B, c)).target
            res = is_member(F, quot)
            G._cache[qkey] = res
    G._cache[key] = res
    return res


def is_k_f_subnormal(G: Group, H: SubgroupSet, F: FormationSpec) -> bool:
    """Reachability of G from H through normal-or-core-quotient-in-F steps."""
    if H.order == G.n:
        return True
    lat = all_subgroups(G)
    chain = [s for s in lat.subgroups if H.bits & s.bits == H.bits]
    full_bits = (1 << G.n) - 1
    reached = {H.bits}
    frontier = [H]
    while frontier:
        A = frontier.pop()
        for B in chain:
            if B.bits in reached or A.bits & B.bits != A.bits or A.bits == B.bits:
                continue
            if _step_admissible(G, A, B, F):
                if B.bits == full_bits:
                    return True
                reached.add(B.bits)
                frontier.append(B)
    return False


def int_star_f(G: Group, F: FormationSpec) -> SubgroupSet:
    """Intersection of the non-K-F-subnormal F-maximal subgroups."""
    family = [s for s in f_maximal_subgroups(G, F)
              if not is_k_f_subnormal(G, s, F)]
    return _intersection(G, family)


def f_max_report(G: Group, F: FormationSpec) -> FMaxReport:
    fmax = tuple(f_maximal_subgroups(G, F))
    flags = tuple(is_k_f_subnormal(G, s, F) for s in fmax)
    return FMaxReport(
        formation=F,
        f_maximal=fmax,
        knormal_flags=flags,
        int_f=_intersection(G, fmax),
        int_star=_intersection(G, [s for s, fl in zip(fmax, flags) if not fl]),
    )
