"""Exception types shared across the package."""


class TaupolyError(Exception):
    """Base class for all package-specific errors."""


class UsageError(TaupolyError):
    """Malformed user input (bad diagram string, bad flag combination)."""


class NotAVertex(TaupolyError):
    """A vertex label was requested that the diagram does not contain."""


class NotAModule(TaupolyError):
    """A complex operation needed a module vertex but got a shifted projective."""


class RankOutOfRange(TaupolyError):
    """A rank outside the supported bounds of a closed formula."""


class RankTooLarge(TaupolyError):
    """An enumeration was requested beyond its feasible size bound."""


class MalformedPath(TaupolyError):
    """A lattice path whose step counts do not fit the requested rectangle."""


class InsufficientTerms(TaupolyError):
    """Not enough coefficient polynomials supplied for the requested order."""


class FeatureDisabled(TaupolyError):
    """A computation gated behind an explicit opt-in flag (full E8 enumeration)."""


class NegativeExt(TaupolyError):
    """Internal consistency failure: an extension-space dimension came out negative."""


class ConventionError(TaupolyError):
    """Internal consistency failure: a sign or transpose convention failed validation."""


class ImpurityError(TaupolyError):
    """A compatibility complex produced a maximal face of the wrong size.

    This should be unreachable for the hereditary algebras in scope; the run
    aborts rather than report a polynomial built on a broken complex.
    """
