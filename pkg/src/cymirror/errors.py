"""Error taxonomy for the exact series engine."""


class CymirrorError(Exception):
    """Base class for all package-specific errors."""


class DivisionByNonUnit(CymirrorError):
    """Series division where the divisor's constant term is zero."""


class NonUnitConstant(CymirrorError):
    """Operation requires a series with constant term 1."""


class NonZeroConstant(CymirrorError):
    """Operation requires a series with constant term 0."""


class NonUnitLinearTerm(CymirrorError):
    """Series reversion requires a nonzero linear coefficient."""


class WUnderflow(CymirrorError):
    """A w-coefficient beyond the effective w-order was requested."""


class DimensionMismatch(CymirrorError):
    """Operation restricted to a specific complete-intersection dimension."""


class UnsupportedMultidegree(CymirrorError):
    """Operation defined only for specific multidegrees."""


class RecursionSingularity(CymirrorError):
    """A coefficient equation in a differential recursion degenerated."""


class UnknownSuite(CymirrorError):
    """Verification suite name not recognized."""


class UnknownDimension(CymirrorError):
    """No fixture table exists for the requested dimension."""
