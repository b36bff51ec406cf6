"""Exhaustive subgroup lattices and the classical distinguished subgroups.

Lattice enumeration seeds with all cyclic subgroups and closes under
pairwise join; everything is deduplicated by canonical bitmask.  The
element-level helpers (derived series, centre, O_p, ...) deliberately do
not require a lattice so that formation membership tests stay cheap.
"""

from __future__ import annotations

from math import lcm

import numpy as np

from .errors import NotSoluble, PreconditionViolated, SubgroupCountCapExceeded
from .groups import (
    Group,
    QuotientMap,
    SubgroupSet,
    bits_of,
    class_of,
    closure_elements,
    conjugacy_classes,
    element_orders,
    is_normal,
    quotient_group,
)

SUBGROUP_CAP = 20000


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def pi_part(n: int, pi) -> int:
    """Largest divisor of n with all prime factors in pi."""
    part = 1
    for p in prime_factors(n):
        if p in pi:
            while n % p == 0:
                n //= p
                part *= p
    return part


class Lattice:
    """All subgroups of a group, in increasing-order-then-bitmask order."""

    def __init__(self, parent: Group, subgroups: list[SubgroupSet]):
        self.parent = parent
        self.subgroups = subgroups
        self._index = {s.bits: i for i, s in enumerate(subgroups)}
        self.normal_flags = [is_normal(parent, s) for s in subgroups]

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, sub: SubgroupSet) -> int:
        return self._index[sub.bits]

    def member(self, bits: int) -> SubgroupSet:
        return self.subgroups[self._index[bits]]

    def normal_members(self) -> list[SubgroupSet]:
        return [s for s, f in zip(self.subgroups, self.normal_flags) if f]

    def members_above(self, sub: SubgroupSet) -> list[SubgroupSet]:
        """All lattice members containing `sub` (inclusive)."""
        return [s for s in self.subgroups if sub.bits & s.bits == sub.bits]

    def containment(self) -> list[tuple[int, int]]:
        """Strict-containment pairs (i, j) with subgroup i < subgroup j."""
        if "containment" not in self.parent._cache:
            pairs = []
            for i, a in enumerate(self.subgroups):
                for j, b in enumerate(self.subgroups):
                    if a.order < b.order and a.bits & b.bits == a.bits:
                        pairs.append((i, j))
            self.parent._cache["containment"] = pairs
        return self.parent._cache["containment"]


def all_subgroups(G: Group, cap: int = SUBGROUP_CAP) -> Lattice:
    """Complete subgroup lattice of G (cached on the group)."""
    if "lattice" in G._cache:
        return G._cache["lattice"]
    cyc: dict[int, np.ndarray] = {}
    for x in range(1, G.n):
        c = closure_elements(G, [x])
        cyc.setdefault(bits_of(c), c)
    cyclic = list(cyc.items())
    found: dict[int, np.ndarray] = {1: np.array([0], dtype=np.intp)}
    found.update(cyc)
    queue = list(cyclic)
    while queue:
        hb, hel = queue.pop()
        for cb, cel in cyclic:
            if cb & hb == cb:
                continue
            j = closure_elements(G, np.concatenate([hel, cel]))
            jb = bits_of(j)
            if jb not in found:
                if len(found) >= cap:
                    raise SubgroupCountCapExceeded(
                        f"{G.name} has more than {cap} subgroups")
                found[jb] = j
                queue.append((jb, j))
    full = (1 << G.n) - 1
    if full not in found:  # trivial group
        found[full] = np.arange(G.n)
    subs = [SubgroupSet(G, b, check=False) for b in found]
    subs.sort(key=lambda s: (s.order, s.bits))
    lat = Lattice(G, subs)
    G._cache["lattice"] = lat
    return lat


def join(G: Group, *subs: SubgroupSet) -> SubgroupSet:
    elems = np.concatenate([s.elements for s in subs]) if subs else [0]
    return SubgroupSet(G, bits_of(closure_elements(G, elems)), check=False)


def normal_subgroups(G: Group) -> list[SubgroupSet]:
    return all_subgroups(G).normal_members()


def maximal_subgroups(G: Group, within: SubgroupSet | None = None) -> list[SubgroupSet]:
    """Inclusion-maximal proper subgroups of `within` (default: of G)."""
    if within is None:
        within = G.full_subgroup()
    cands = [s for s in all_subgroups(G).subgroups
             if s.bits != within.bits and s.bits & within.bits == s.bits]
    out = []
    for s in cands:
        if not any(s.bits != t.bits and s.bits & t.bits == s.bits for t in cands):
            out.append(s)
    return out


def minimal_normal_subgroups(G: Group) -> list[SubgroupSet]:
    nontriv = [s for s in normal_subgroups(G) if 1 < s.order]
    return [s for s in nontriv
            if not any(t.order > 1 and t.bits != s.bits and t.bits & s.bits == t.bits
                       for t in nontriv)]


def core(G: Group, H: SubgroupSet, within: SubgroupSet | None = None) -> SubgroupSet:
    """Intersection of all conjugates of H by elements of `within` (default G)."""
    key = ("core", H.bits, within.bits if within else None)
    if key in G._cache:
        return G._cache[key]
    hel = H.elements
    conj_by = range(G.n) if within is None else within.elements
    cur = H.bits
    for g in conj_by:
        conj = G.mul[G.mul[g, hel], G.inv[g]]
        cur &= bits_of(conj)
        if cur == 1:
            break
    res = SubgroupSet(G, cur, check=False)
    G._cache[key] = res
    return res


def section_centralizer(G: Group, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    """C_G(H/K) = { g : [g, h] in K for all h in H }."""
    if not (K.issubset(H) and is_normal(G, K) and is_normal(G, H)):
        raise PreconditionViolated("need K <= H with both normal in G")
    key = ("sec_cent", H.bits, K.bits)
    if key in G._cache:
        return G._cache[key]
    hel = H.elements
    kmask = np.zeros(G.n, dtype=bool)
    kmask[K.elements] = True
    hinv = G.inv[hel]
    members = []
    for g in range(G.n):
        comm = G.mul[G.mul[G.mul[g, hel], G.inv[g]], hinv]
        if kmask[comm].all():
            members.append(g)
    res = SubgroupSet(G, bits_of(members), check=False)
    G._cache[key] = res
    return res


# -- element-level structural subgroups (no lattice required) ---------------

def derived_subgroup(G: Group) -> SubgroupSet:
    if "derived" not in G._cache:
        idx = np.arange(G.n)
        a = G.mul                       # a[x,y] = xy
        b = G.mul.T                     # b[x,y] = yx
        comms = np.unique(G.mul[a, G.inv[b]])   # (xy)(yx)^-1 = x y x^-1 y^-1
        G._cache["derived"] = SubgroupSet(
            G, bits_of(closure_elements(G, comms)), check=False)
    return G._cache["derived"]


def derived_series(G: Group) -> list[SubgroupSet]:
    series = [G.full_subgroup()]
    cur = derived_subgroup(G)
    while cur.bits != series[-1].bits:
        series.append(cur)
        sub, el = subgroup_as_group(G, cur)
        dsub = derived_subgroup(sub)
        cur = SubgroupSet(G, bits_of(el[dsub.elements]), check=False)
    return series


def is_soluble(G: Group) -> bool:
    if "soluble" not in G._cache:
        G._cache["soluble"] = derived_series(G)[-1].order == 1
    return G._cache["soluble"]


def centre(G: Group) -> SubgroupSet:
    if "centre" not in G._cache:
        members = np.flatnonzero((G.mul == G.mul.T).all(axis=1))
        G._cache["centre"] = SubgroupSet(G, bits_of(members), check=False)
    return G._cache["centre"]


def upper_central_series(G: Group) -> list[SubgroupSet]:
    """1 = Z_0 <= Z_1 <= ... up to the stable term Z_inf."""
    if "ucs" not in G._cache:
        series = [G.trivial_subgroup()]
        while True:
            z = series[-1]
            if z.order == G.n:
                break
            qm = quotient_group(G, z)
            zq = centre(qm.target)
            nxt = qm.preimage_of(zq)
            if nxt.bits == z.bits:
                break
            series.append(nxt)
        G._cache["ucs"] = series
    return G._cache["ucs"]


def hypercentre(G: Group) -> SubgroupSet:
    return upper_central_series(G)[-1]


def is_nilpotent(G: Group) -> bool:
    return hypercentre(G).order == G.n


def is_p_group(G: Group, p: int) -> bool:
    return G.n == 1 or prime_factors(G.n) == (p,)


def is_pi_group(G: Group, pi) -> bool:
    return all(p in pi for p in prime_factors(G.n))


def group_exponent(G: Group) -> int:
    return lcm(*element_orders(G).tolist()) if G.n > 1 else 1


def is_abelian(G: Group) -> bool:
    return bool(np.array_equal(G.mul, G.mul.T))


def o_pi(G: Group, pi) -> SubgroupSet:
    """Largest normal pi-subgroup: product of pi-group normal closures."""
    pi = frozenset(pi)
    key = ("o_pi", pi)
    if key in G._cache:
        return G._cache[key]
    orders = element_orders(G)
    acc = np.array([0], dtype=np.intp)
    acc_bits = 1
    for cls in conjugacy_classes(G):
        x = int(cls[0])
        if x == 0 or (acc_bits >> x) & 1:
            continue
        if any(p not in pi for p in prime_factors(int(orders[x]))):
            continue
        nc = closure_elements(G, cls)
        if all(p in pi for p in prime_factors(nc.size)):
            acc = closure_elements(G, np.concatenate([acc, nc]))
            acc_bits = bits_of(acc)
    res = SubgroupSet(G, acc_bits, check=False)
    G._cache[key] = res
    return res


def o_p(G: Group, p: int) -> SubgroupSet:
    return o_pi(G, (p,))


def fitting_subgroup(G: Group) -> SubgroupSet:
    """Product of the O_p over the primes dividing |G| (lattice-free)."""
    if "fitting" not in G._cache:
        parts = [o_p(G, p).elements for p in prime_factors(G.n)]
        elems = closure_elements(G, np.concatenate(parts)) if parts else [0]
        G._cache["fitting"] = SubgroupSet(G, bits_of(elems), check=False)
    return G._cache["fitting"]


def nilpotent_length(G: Group) -> int:
    """Length of the iterated-Fitting series; 0 for the trivial group."""
    if not is_soluble(G):
        raise NotSoluble(f"{G.name} is not soluble")
    r = 0
    Q = G
    while Q.n > 1:
        f = fitting_subgroup(Q)
        Q = quotient_group(Q, f).target
        r += 1
    return r


# -- lattice-backed named subgroups ----------------------------------------

def subgroup_as_group(G: Group, H: SubgroupSet) -> tuple[Group, np.ndarray]:
    """Reindex a subgroup as a standalone Group.

    Returns (group, elems) where elems[i] is the parent index of the
    subgroup's element i; sorted ascending so identity stays at 0.
    """
    key = ("as_group", H.bits)
    if key not in G._cache:
        el = H.elements
        sub_mul = np.searchsorted(el, G.mul[np.ix_(el, el)])
        sub = Group(sub_mul, f"{G.name}[{H.order}]",
                    provenance=f"subgroup of {G.name}")
        G._cache[key] = (sub, el)
    return G._cache[key]


def translate_into(G: Group, H: SubgroupSet, S: SubgroupSet) -> SubgroupSet:
    """Express S <= H as a SubgroupSet of the standalone group for H."""
    sub, el = subgroup_as_group(G, H)
    if not S.issubset(H):
        raise PreconditionViolated("S must be contained in H")
    return SubgroupSet(sub, bits_of(np.searchsorted(el, S.elements)), check=False)


def translate_out(G: Group, H: SubgroupSet, S_sub: SubgroupSet) -> SubgroupSet:
    sub, el = subgroup_as_group(G, H)
    return SubgroupSet(G, bits_of(el[S_sub.elements]), check=False)


def frattini_subgroup(G: Group) -> SubgroupSet:
    maxes = maximal_subgroups(G)
    bits = (1 << G.n) - 1
    for m in maxes:
        bits &= m.bits
    return SubgroupSet(G, bits, check=False)


def socle(G: Group) -> SubgroupSet:
    mins = minimal_normal_subgroups(G)
    return join(G, *mins) if mins else G.trivial_subgroup()


def fitting_via_lattice(G: Group) -> SubgroupSet:
    """Join of all normal nilpotent subgroups (independent of fitting_subgroup)."""
    nil = []
    for s in normal_subgroups(G):
        sub, _ = subgroup_as_group(G, s)
        if is_nilpotent(sub):
            nil.append(s)
    return join(G, *nil)


def o_pprime_p(G: Group, p: int) -> SubgroupSet:
    pp = [q for q in prime_factors(G.n) if q != p]
    opp = o_pi(G, pp) if pp else G.trivial_subgroup()
    qm = quotient_group(G, opp)
    return qm.preimage_of(o_p(qm.target, p))


def named_subgroup(G: Group, kind: str, pi=None, p: int | None = None) -> SubgroupSet:
    """Dispatch for the classical distinguished subgroups."""
    if kind == "derived":
        return derived_subgroup(G)
    if kind == "centre":
        return centre(G)
    if kind == "fitting":
        return fitting_via_lattice(G)
    if kind == "frattini":
        return frattini_subgroup(G)
    if kind == "hypercentre_inf":
        return hypercentre(G)
    if kind == "O_pi":
        if not pi:
            raise PreconditionViolated("O_pi needs a nonempty prime set")
        return o_pi(G, pi)
    if kind == "O_pprime_p":
        if p is None:
            raise PreconditionViolated("O_pprime_p needs a prime")
        return o_pprime_p(G, p)
    if kind == "socle":
        return socle(G)
    raise PreconditionViolated(f"unknown subgroup kind {kind!r}")


def sylow(G: Group, p: int) -> SubgroupSet:
    """First subgroup (canonical order) whose order is the p-part of |G|."""
    target = pi_part(G.n, (p,))
    for s in all_subgroups(G).subgroups:
        if s.order == target:
            return s
    raise AssertionError("Sylow subgroup missing from lattice")  # unreachable


def hall(G: Group, pi) -> SubgroupSet | None:
    """A Hall pi-subgroup if one exists in the lattice, else None."""
    target = pi_part(G.n, frozenset(pi))
    for s in all_subgroups(G).subgroups:
        if s.order == target:
            return s
    return None
