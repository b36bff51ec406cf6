"""Built-in formations: membership, residuals, and local satellite tables.

Satellite values are membership predicates, not symbolic class algebra:
each F(p) entry is a concrete test such as "G/O_p(G) is abelian of
exponent dividing p-1".  The chief-central module cross-checks every
table entry against the semidirect-product definition of centrality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NoSatellite, NotSoluble, PreconditionViolated
from .groups import Group, SubgroupSet, element_orders, quotient_group
from .lattice import (
    derived_subgroup,
    group_exponent,
    is_abelian,
    is_nilpotent,
    is_p_group,
    is_pi_group,
    is_soluble,
    nilpotent_length,
    normal_subgroups,
    o_p,
    pi_part,
    prime_factors,
    subgroup_as_group,
)

_SATELLITE_FREE = ("SylTower", "AExp")
_UNSATURATED = ("AExp",)
_TAGS = ("Triv", "All", "Sol", "Nil", "Sup", "pSup", "pNilp", "pDec",
         "PiClosed", "GPi", "SPi", "AExp", "NA", "NilPow", "SylTower")


@dataclass(frozen=True)
class FormationSpec:
    """Tagged descriptor of one built-in formation."""

    tag: str
    p: int | None = None
    pi: frozenset[int] | None = field(default=None)
    r: int | None = None
    exp: int | None = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise PreconditionViolated(f"unknown formation tag {self.tag!r}")
        if self.tag in ("pSup", "pNilp", "pDec") and (
                self.p is None or prime_factors(self.p) != (self.p,)):
            raise PreconditionViolated(f"{self.tag} needs a prime parameter")
        if self.tag in ("PiClosed", "GPi", "SPi") and not self.pi:
            raise PreconditionViolated(f"{self.tag} needs a nonempty prime set")
        if self.tag == "NilPow" and (self.r is None or self.r < 0):
            raise PreconditionViolated("NilPow needs a length r >= 0")
        if self.tag == "AExp" and (self.exp is None or self.exp < 1):
            raise PreconditionViolated("AExp needs a positive exponent")

    @property
    def hereditary(self) -> bool:
        return True

    @property
    def saturated(self) -> bool:
        return self.tag not in _UNSATURATED

    @property
    def has_satellite(self) -> bool:
        return self.tag not in _SATELLITE_FREE

    @property
    def cli_name(self) -> str:
        if self.tag in ("pSup", "pNilp", "pDec"):
            return f"{self.tag.lower()}:{self.p}"
        if self.tag in ("PiClosed", "GPi", "SPi"):
            return f"{self.tag.lower()}:{','.join(map(str, sorted(self.pi)))}"
        if self.tag == "NilPow":
            return f"nilpow:{self.r}"
        if self.tag == "AExp":
            return f"aexp:{self.exp}"
        return self.tag.lower()

    def __str__(self) -> str:
        return self.cli_name


TRIV = FormationSpec("Triv")
ALL = FormationSpec("All")
SOL = FormationSpec("Sol")
NIL = FormationSpec("Nil")
SUP = FormationSpec("Sup")
NA = FormationSpec("NA")
SYLTOWER = FormationSpec("SylTower")


def p_sup(p: int) -> FormationSpec:
    return FormationSpec("pSup", p=p)


def p_nilp(p: int) -> FormationSpec:
    return FormationSpec("pNilp", p=p)


def p_dec(p: int) -> FormationSpec:
    return FormationSpec("pDec", p=p)


def pi_closed(pi) -> FormationSpec:
    return FormationSpec("PiClosed", pi=frozenset(pi))


def g_pi(pi) -> FormationSpec:
    return FormationSpec("GPi", pi=frozenset(pi))


def s_pi(pi) -> FormationSpec:
    return FormationSpec("SPi", pi=frozenset(pi))


def a_exp(n: int) -> FormationSpec:
    return FormationSpec("AExp", exp=n)


def nil_pow(r: int) -> FormationSpec:
    return FormationSpec("NilPow", r=r)


def parse_formation(text: str) -> FormationSpec:
    """Parse CLI names like `sup`, `pnilp:3`, `piclosed:2,3`, `nilpow:2`."""
    name, _, arg = text.strip().lower().partition(":")
    simple = {"triv": TRIV, "all": ALL, "sol": SOL, "nil": NIL, "sup": SUP,
              "na": NA, "syltower": SYLTOWER}
    if name in simple:
        return simple[name]
    try:
        if name == "psup":
            return p_sup(int(arg))
        if name == "pnilp":
            return p_nilp(int(arg))
        if name == "pdec":
            return p_dec(int(arg))
        if name == "piclosed":
            return pi_closed(int(v) for v in arg.split(","))
        if name == "gpi":
            return g_pi(int(v) for v in arg.split(","))
        if name == "spi":
            return s_pi(int(v) for v in arg.split(","))
        if name == "nilpow":
            return nil_pow(int(arg))
        if name == "aexp":
            return a_exp(int(arg))
    except ValueError as exc:
        raise PreconditionViolated(f"bad formation parameter in {text!r}") from exc
    raise PreconditionViolated(f"unknown formation {text!r}")


# -- membership -------------------------------------------------------------

def _pi_elements_form_normal_hall(G: Group, pi) -> bool:
    """True iff the pi-elements form a subgroup of full pi-part order."""
    pi = frozenset(pi)
    orders = element_orders(G)
    mask = np.array([all(q in pi for q in prime_factors(int(o))) for o in orders])
    elems = np.flatnonzero(mask)
    if elems.size != pi_part(G.n, pi):
        return False
    return bool(mask[G.mul[np.ix_(elems, elems)]].all())


def _chief_factor_orders(G: Group) -> list[int]:
    from .chiefs import chief_series  # deferred: chiefs imports this module
    return [f.order for f in chief_series(G).factors]


def is_member(F: FormationSpec, G: Group) -> bool:
    """Membership of G in the built-in formation F."""
    key = ("member", F)
    if key in G._cache:
        return G._cache[key]
    res = _is_member(F, G)
    G._cache[key] = res
    return res


def _is_member(F: FormationSpec, G: Group) -> bool:
    tag = F.tag
    if tag == "Triv":
        return G.n == 1
    if tag == "All":
        return True
    if tag == "Sol":
        return is_soluble(G)
    if tag == "Nil":
        return is_nilpotent(G)
    if tag == "Sup":
        return all(prime_factors(o) == (o,) for o in _chief_factor_orders(G))
    if tag == "pSup":
        return all(o == F.p for o in _chief_factor_orders(G) if o % F.p == 0)
    if tag == "pNilp":
        pprime = [q for q in prime_factors(G.n) if q != F.p]
        return _pi_elements_form_normal_hall(G, pprime)
    if tag == "pDec":
        pprime = [q for q in prime_factors(G.n) if q != F.p]
        return (_pi_elements_form_normal_hall(G, (F.p,))
                and _pi_elements_form_normal_hall(G, pprime))
    if tag == "PiClosed":
        return _pi_elements_form_normal_hall(G, F.pi)
    if tag == "GPi":
        return is_pi_group(G, F.pi)
    if tag == "SPi":
        return is_pi_group(G, F.pi) and is_soluble(G)
    if tag == "AExp":
        return is_abelian(G) and F.exp % group_exponent(G) == 0
    if tag == "NA":
        sub, _ = subgroup_as_group(G, derived_subgroup(G))
        return is_nilpotent(sub)
    if tag == "NilPow":
        if not is_soluble(G):
            return False
        return nilpotent_length(G) <= F.r
    if tag == "SylTower":
        primes = sorted(prime_factors(G.n), reverse=True)
        return all(_pi_elements_form_normal_hall(G, primes[:i])
                   for i in range(1, len(primes)))
    raise PreconditionViolated(f"unhandled tag {tag!r}")


# -- residuals --------------------------------------------------------------

def residual(G: Group, F: FormationSpec) -> SubgroupSet:
    """Intersection of all normal N with G/N in F."""
    key = ("residual", F)
    if key in G._cache:
        return G._cache[key]
    bits = (1 << G.n) - 1
    for N in normal_subgroups(G):
        if bits & N.bits == bits:
            continue  # intersection already inside N
        if is_member(F, quotient_group(G, N).target):
            bits &= N.bits
    res = SubgroupSet(G, bits, check=False)
    # menu formations are closed under subdirect products, so G/G^F is in F
    assert is_member(F, quotient_group(G, res).target), \
        f"residual postcondition failed for {F} on {G.name}"
    G._cache[key] = res
    return res


# -- canonical local satellites --------------------------------------------

def _p_residual_quotient(G: Group, p: int) -> Group:
    return quotient_group(G, o_p(G, p)).target


def satellite_member(F: FormationSpec, p: int, G: Group) -> bool:
    """Membership of G in the canonical local satellite value F(p)."""
    if not F.has_satellite:
        raise NoSatellite(f"{F} has no local satellite table")
    key = ("sat", F, p)
    if key in G._cache:
        return G._cache[key]
    res = _satellite_member(F, p, G)
    G._cache[key] = res
    return res


def _abelian_of_exponent_dividing(G: Group, m: int) -> bool:
    if m <= 0:
        return G.n == 1
    return is_abelian(G) and m % group_exponent(G) == 0


def _satellite_member(F: FormationSpec, p: int, G: Group) -> bool:
    tag = F.tag
    if tag == "Triv":
        return False
    if tag == "All":
        return True
    if tag == "Sol":
        return is_soluble(G)
    if tag == "Nil":
        return is_p_group(G, p)
    if tag == "Sup":
        return _abelian_of_exponent_dividing(_p_residual_quotient(G, p), p - 1)
    if tag == "pSup":
        if p == F.p:
            return _abelian_of_exponent_dividing(_p_residual_quotient(G, p), p - 1)
        return is_member(F, G)
    if tag == "pNilp":
        if p == F.p:
            return is_p_group(G, p)
        return is_member(F, G)
    if tag == "pDec":
        if p == F.p:
            return is_p_group(G, p)
        return G.n % F.p != 0
    if tag == "PiClosed":
        if p in F.pi:
            return is_member(F, G)
        return all(q not in F.pi for q in prime_factors(G.n))
    if tag == "GPi":
        return p in F.pi and is_pi_group(G, F.pi)
    if tag == "SPi":
        return p in F.pi and is_pi_group(G, F.pi) and is_soluble(G)
    if tag == "NA":
        return is_abelian(_p_residual_quotient(G, p))
    if tag == "NilPow":
        if F.r == 0:
            return False
        return is_member(nil_pow(F.r - 1), _p_residual_quotient(G, p))
    raise PreconditionViolated(f"unhandled tag {tag!r}")
