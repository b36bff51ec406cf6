"""Exception hierarchy shared by all formalab modules."""


class FormalabError(Exception):
    """Base class for all errors raised by formalab."""


class InvalidPermutation(FormalabError):
    """A generator is not a valid permutation of {1..degree}."""


class ClosureCapExceeded(FormalabError):
    """A constructed group would exceed the configured order cap."""


class NotNormal(FormalabError):
    """A quotient was requested by a non-normal subgroup."""


class NotAutomorphism(FormalabError):
    """A semidirect-product action image is not an automorphism."""


class NotActionHomomorphism(FormalabError):
    """A semidirect-product action is not a homomorphism into Aut(N)."""


class RelationMismatch(FormalabError):
    """Generator matrices do not extend to a homomorphism."""


class IsoCapExceeded(FormalabError):
    """Isomorphism testing was requested above the supported order cap."""


class SubgroupCountCapExceeded(FormalabError):
    """Subgroup enumeration found more subgroups than the configured cap."""


class PreconditionViolated(FormalabError):
    """An operation was called with arguments outside its contract."""


class NotSoluble(FormalabError):
    """A soluble-only invariant was requested for an insoluble group."""


class NoSatellite(FormalabError):
    """The formation has no built-in local satellite table."""


class ConstructionFailed(FormalabError):
    """A fixed catalog construction failed its post-hoc verification."""
