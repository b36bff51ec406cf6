"""Chief series, F-centrality of chief factors, and the hypercentre Z_piF.

Centrality is computed by two independent routes: the canonical-satellite
test on G/C_G(H/K), and direct construction of (H/K) x| (G/C_G(H/K))
followed by a formation membership test.  Their agreement on the whole
catalog is one of the acceptance gates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotNormal, PreconditionViolated
from .formations import FormationSpec, is_member, satellite_member
from .groups import (
    Group,
    SubgroupSet,
    bits_of,
    closure_elements,
    conjugacy_classes,
    is_normal,
    quotient_group,
    semidirect_product,
)
from .lattice import (
    normal_subgroups,
    prime_factors,
    section_centralizer,
    subgroup_as_group,
    translate_into,
)


@dataclass(frozen=True)
class ChiefFactor:
    """A chief factor H/K of G: both normal, nothing normal strictly between."""

    G: Group
    H: SubgroupSet
    K: SubgroupSet

    def __post_init__(self):
        if not (self.K < self.H):
            raise PreconditionViolated("need K < H")

    @property
    def order(self) -> int:
        return self.H.order // self.K.order

    @property
    def primes(self) -> tuple[int, ...]:
        return prime_factors(self.order)


@dataclass(frozen=True)
class ChiefSeries:
    G: Group
    terms: tuple[SubgroupSet, ...]

    @property
    def factors(self) -> tuple[ChiefFactor, ...]:
        return tuple(ChiefFactor(self.G, h, k)
                     for k, h in zip(self.terms, self.terms[1:]))


def minimal_normals_over(G: Group, Z: SubgroupSet) -> list[SubgroupSet]:
    """Lifts of the minimal normal subgroups of G/Z, in canonical order.

    Each candidate is Z together with the G-conjugacy class of one element
    outside Z; minimal candidates are exactly the lifted minimal normals.
    """
    key = ("min_norm_over", Z.bits)
    if key in G._cache:
        return G._cache[key]
    cands: dict[int, SubgroupSet] = {}
    for cls in conjugacy_classes(G):
        x = int(cls[0])
        if Z.contains(x):
            continue
        elems = closure_elements(G, np.concatenate([Z.elements, cls]))
        b = bits_of(elems)
        if b not in cands:
            cands[b] = SubgroupSet(G, b, check=False)
    mins = [s for s in cands.values()
            if not any(t.bits != s.bits and t.bits & s.bits == t.bits
                       for t in cands.values())]
    mins.sort(key=lambda s: (s.order, s.bits))
    G._cache[key] = mins
    return mins


def chief_series(G: Group, choose: str = "first") -> ChiefSeries:
    """Ascending chief series built from canonically-least minimal normals.

    `choose="last"` picks the canonically-greatest minimal normal at each
    step instead; used to exercise Jordan-Hoelder independence.
    """
    return chief_series_through(G, G.trivial_subgroup(), choose=choose)


def chief_series_through(G: Group, N: SubgroupSet,
                         choose: str = "first") -> ChiefSeries:
    """Chief series of G passing through the normal subgroup N."""
    if not is_normal(G, N):
        raise NotNormal("series can only be routed through a normal subgroup")
    pick = 0 if choose == "first" else -1
    terms = [G.trivial_subgroup()]
    while terms[-1].order < G.n:
        cur = terms[-1]
        mins = minimal_normals_over(G, cur)
        if cur.bits & N.bits == cur.bits and cur.bits != N.bits:
            inside = [m for m in mins if m.issubset(N)]
            terms.append(inside[pick])
        else:
            terms.append(mins[pick])
    return ChiefSeries(G, tuple(terms))


# -- centrality -------------------------------------------------------------

def _quotient_by(G: Group, N: SubgroupSet):
    key = ("quot", N.bits)
    if key not in G._cache:
        G._cache[key] = quotient_group(G, N)
    return G._cache[key]


def is_f_central_satellite(G: Group, fac: ChiefFactor,
                           F: FormationSpec) -> bool:
    """Satellite route: G/C_G(H/K) in F(p) for every p dividing |H/K|."""
    C = section_centralizer(G, fac.H, fac.K)
    A = _quotient_by(G, C).target
    return all(satellite_member(F, p, A) for p in fac.primes)


def is_f_central_semidirect(G: Group, fac: ChiefFactor,
                            F: FormationSpec) -> bool:
    """Definition route: build (H/K) x| (G/C_G(H/K)) and test membership.

    Raises ClosureCapExceeded when the product is too large; callers may
    fall back to the satellite route.
    """
    C = section_centralizer(G, fac.H, fac.K)
    qa = _quotient_by(G, C)
    A = qa.target
    hgrp, hel = subgroup_as_group(G, fac.H)
    qv = quotient_group(hgrp, translate_into(G, fac.H, fac.K))
    V = qv.target
    # conjugation action of A on V via coset representatives
    vreps = np.array([hel[int(np.flatnonzero(qv.proj == i)[0])]
                      for i in range(V.n)], dtype=np.intp)
    areps = np.array([int(np.flatnonzero(qa.proj == i)[0])
                      for i in range(A.n)], dtype=np.intp)
    hpos = {int(e): i for i, e in enumerate(hel)}
    action = np.empty((A.n, V.n), dtype=np.intp)
    for ai, g in enumerate(areps):
        conj = G.mul[G.mul[g, vreps], G.inv[g]]
        action[ai] = qv.proj[[hpos[int(c)] for c in conj]]
    prod = semidirect_product(V, A, action, name="section-extension")
    return is_member(F, prod)


def is_f_central(G: Group, fac: ChiefFactor, F: FormationSpec) -> bool:
    key = ("central", fac.H.bits, fac.K.bits, F)
    if key in G._cache:
        return G._cache[key]
    if F.has_satellite:
        res = is_f_central_satellite(G, fac, F)
    else:
        res = is_f_central_semidirect(G, fac, F)
    G._cache[key] = res
    return res


# -- hypercentre ------------------------------------------------------------

def _restrict_pi(G: Group, pi) -> frozenset[int]:
    gp = prime_factors(G.n)
    if pi is None:
        return frozenset(gp)
    return frozenset(pi) & frozenset(gp)


def z_pi_f(G: Group, F: FormationSpec, pi=None, absorb: str = "all") -> SubgroupSet:
    """The piF-hypercentre: fixed point of absorbing exempt/central factors.

    pi=None means all primes dividing |G|.  `absorb` controls the
    absorption schedule ("all" per round, or "first"/"last" one at a
    time); the result is schedule-independent, which the tests assert.
    """
    pi = _restrict_pi(G, pi)
    Z = G.trivial_subgroup()
    while Z.order < G.n:
        mins = minimal_normals_over(G, Z)
        if absorb == "last":
            mins = list(reversed(mins))
        passing = []
        for N in mins:
            fac = ChiefFactor(G, N, Z)
            if not (set(fac.primes) & pi) or is_f_central(G, fac, F):
                passing.append(N)
                if absorb != "all":
                    break
        if not passing:
            break
        elems = np.concatenate([Z.elements] + [N.elements for N in passing])
        Z = SubgroupSet(G, bits_of(closure_elements(G, elems)), check=False)
    return Z


def z_f(G: Group, F: FormationSpec) -> SubgroupSet:
    return z_pi_f(G, F, None)


def z_pi_f_oracle(G: Group, F: FormationSpec, pi=None) -> SubgroupSet:
    """Brute-force reading: join of all normal piF-hypercentral subgroups."""
    pi = _restrict_pi(G, pi)
    passing = [G.trivial_subgroup()]
    for N in normal_subgroups(G):
        if N.order == 1:
            continue
        series = chief_series_through(G, N)
        ok = True
        for fac in series.factors:
            if not fac.H.issubset(N):
                break
            if set(fac.primes) & pi and not is_f_central(G, fac, F):
                ok = False
                break
        if ok:
            passing.append(N)
    elems = np.concatenate([s.elements for s in passing])
    return SubgroupSet(G, bits_of(closure_elements(G, elems)), check=False)
