"""Multidegrees of Calabi-Yau complete intersections in projective space.

A transverse intersection of hypersurfaces of degrees ``(a_1, ..., a_l)``
in P^{n-1} is Calabi-Yau exactly when ``a_1 + ... + a_l = n``.  A degree-one
factor just cuts the ambient space down to a smaller projective space, so
degree-one entries are dropped on normalization and only the essential
degrees ``a_k >= 2`` are kept, sorted ascending.
"""

from math import comb

from cymirror.errors import UnknownDimension, UnsupportedMultidegree
from cymirror.series import rational

_ZERO = rational(0)


class MultiDegree:
    """Sorted tuple of essential hypersurface degrees plus derived constants.

    ``dropped_ones`` records how many degree-one factors were removed, so
    callers that accept raw user input can mention the rewrite.
    """

    def __init__(self, degrees):
        if isinstance(degrees, MultiDegree):
            degrees = degrees.a
        kept = []
        dropped = 0
        for value in degrees:
            if isinstance(value, bool) or not isinstance(value, int):
                raise UnsupportedMultidegree(
                    f"degrees must be integers, got {value!r}"
                )
            if value < 1:
                raise UnsupportedMultidegree(
                    f"degrees must be positive, got {value}"
                )
            if value == 1:
                dropped += 1
            else:
                kept.append(value)
        if not kept:
            raise UnsupportedMultidegree(
                "all degrees are 1; the intersection is a projective space"
            )
        self.a = tuple(sorted(kept))
        self.dropped_ones = dropped

    @property
    def l(self):
        return len(self.a)

    @property
    def n(self):
        """Dimension of the ambient projective space plus one."""
        return sum(self.a)

    @property
    def dim(self):
        """Complex dimension of the complete intersection."""
        return self.n - 1 - self.l

    @property
    def prod_a(self):
        out = 1
        for a_k in self.a:
            out *= a_k
        return out

    @property
    def a_pow_a(self):
        """The product of a_k**a_k, the critical coefficient of q."""
        out = 1
        for a_k in self.a:
            out *= a_k**a_k
        return out

    def chern_coefficients(self, pmax):
        return chern_coeffs(self, pmax)

    @property
    def eps0(self):
        """Normalized coefficient multiplying log I_0 in the genus-one
        potential; vanishes with eps1 exactly when the invariants do."""
        return self.chern_coefficients(self.dim)[self.dim]

    @property
    def eps1(self):
        if self.dim == 0:
            return _ZERO
        return self.chern_coefficients(self.dim - 1)[self.dim - 1]

    def __eq__(self, other):
        if isinstance(other, MultiDegree):
            return self.a == other.a
        if isinstance(other, tuple):
            return self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a)

    def __iter__(self):
        return iter(self.a)

    def __str__(self):
        return ",".join(str(a_k) for a_k in self.a)

    def __repr__(self):
        return f"MultiDegree({list(self.a)})"


def chern_coeffs(md, pmax):
    """Expansion coefficients of (1+w)^n / prod_k (1 + a_k w) up to w^pmax.

    These control which shifted periods enter the genus-one potential and
    with what weights.
    """
    md = md if isinstance(md, MultiDegree) else MultiDegree(md)
    out = [rational(comb(md.n, p)) for p in range(pmax + 1)]
    for a_k in md.a:
        for p in range(1, pmax + 1):
            out[p] = out[p] - a_k * out[p - 1]
    return out


def enumerate_multidegrees(dim):
    """All essential multidegrees with the given complete-intersection
    dimension, ordered by number of factors and then lexicographically."""
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise UnknownDimension(f"dimension must be a non-negative integer, got {dim!r}")
    found = []
    for l in range(1, dim + 2):
        n = dim + 1 + l
        found.extend(MultiDegree(p) for p in _partitions(n, l, 2))
    return found


def _partitions(total, parts, least):
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest
