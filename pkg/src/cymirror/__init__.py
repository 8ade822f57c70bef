"""Exact-arithmetic genus-one Gromov-Witten engine for Calabi-Yau
complete intersections in projective space."""

from cymirror.errors import (
    CymirrorError,
    DivisionByNonUnit,
    NonUnitConstant,
    NonZeroConstant,
    NonUnitLinearTerm,
    WUnderflow,
    DimensionMismatch,
    UnsupportedMultidegree,
    RecursionSingularity,
    UnknownSuite,
    UnknownDimension,
)
from cymirror.series import QSeries, WQSeries, rational

__version__ = "0.1.0"

__all__ = [
    "CymirrorError",
    "DivisionByNonUnit",
    "NonUnitConstant",
    "NonZeroConstant",
    "NonUnitLinearTerm",
    "WUnderflow",
    "DimensionMismatch",
    "UnsupportedMultidegree",
    "RecursionSingularity",
    "UnknownSuite",
    "UnknownDimension",
    "QSeries",
    "WQSeries",
    "rational",
    "__version__",
]
