"""Exact truncated power series in one and two variables.

All coefficients are arbitrary-precision rationals, stored in lowest terms;
there is no floating point anywhere.  A series is a value: every operation
returns a new object and never mutates its operands.

Truncation semantics: a ``QSeries`` of order D carries the coefficients of
q^0 .. q^D and nothing beyond; binary operations silently align to the
minimum order of the operands, and equality compares the overlapping known
region only.  ``WQSeries`` does the same in both variables, and additionally
tracks ``effective_w_order``: divisions by w lose the top of the w-window
one row at a time, and any request past the effective order raises
``WUnderflow`` instead of returning garbage.
"""

import numbers

from .errors import (
    DivisionByNonUnit,
    NonUnitConstant,
    NonUnitLinearTerm,
    NonZeroConstant,
    WUnderflow,
)

try:
    from gmpy2 import mpq as rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as rational

_ZERO = rational(0)
_ONE = rational(1)


def _coerce(value):
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed")
    return rational(value)


def _is_scalar(value):
    return isinstance(value, (int, str, numbers.Rational)) or type(value) is type(_ZERO)


class QSeries:
    """Truncated univariate power series with exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [_coerce(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) < order + 1:
            coeffs.extend([_ZERO] * (order + 1 - len(coeffs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs[: order + 1]))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors

    @classmethod
    def zero(cls, order):
        return cls([_ZERO], order=order)

    @classmethod
    def one(cls, order):
        return cls([_ONE], order=order)

    @classmethod
    def identity(cls, order):
        """The series q."""
        return cls([_ZERO, _ONE], order=order)

    @classmethod
    def monomial(cls, coeff, degree, order):
        coeffs = [_ZERO] * (degree + 1)
        coeffs[degree] = _coerce(coeff)
        return cls(coeffs, order=order)

    # -- basic access

    def __getitem__(self, d):
        return self.coeffs[d]

    def constant(self):
        return self.coeffs[0]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return QSeries(self.coeffs[: order + 1], order=order)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if d == 0 else f"{c}*q^{d}")
            if len(terms) == 4:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body}; order={self.order})"

    # -- equality on the overlapping known region

    def __eq__(self, other):
        if _is_scalar(other):
            other = QSeries([other], order=self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    __hash__ = None

    # -- ring arithmetic

    def _align(self, other):
        if _is_scalar(other):
            other = QSeries([other], order=self.order)
        elif not isinstance(other, QSeries):
            return None, None
        m = min(self.order, other.order)
        return self.truncate(m) if self.order > m else self, (
            other.truncate(m) if other.order > m else other
        )

    def __add__(self, other):
        f, g = self._align(other)
        if f is None:
            return NotImplemented
        return QSeries([a + b for a, b in zip(f.coeffs, g.coeffs)], order=f.order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], order=self.order)

    def __sub__(self, other):
        f, g = self._align(other)
        if f is None:
            return NotImplemented
        return QSeries([a - b for a, b in zip(f.coeffs, g.coeffs)], order=f.order)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            return QSeries([a * c for a in self.coeffs], order=self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        f, g = self._align(other)
        m = f.order
        out = [_ZERO] * (m + 1)
        for i, a in enumerate(f.coeffs):
            if a == 0:
                continue
            for j in range(m + 1 - i):
                b = g.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return QSeries(out, order=m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            if c == 0:
                raise ZeroDivisionError("division of a series by zero")
            return QSeries([a / c for a in self.coeffs], order=self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        f, g = self._align(other)
        if g.coeffs[0] == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        m = f.order
        g0 = g.coeffs[0]
        out = []
        for d in range(m + 1):
            s = f.coeffs[d]
            for j in range(1, d + 1):
                if g.coeffs[j] != 0 and out[d - j] != 0:
                    s -= g.coeffs[j] * out[d - j]
            out.append(s / g0)
        return QSeries(out, order=m)

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return QSeries([other], order=self.order) / self
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (QSeries.one(self.order) / self) ** (-k)
        result = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- transcendental operations on the unit group

    def log(self):
        if self.coeffs[0] != 1:
            raise NonUnitConstant("log requires constant term 1")
        return (self.d_q() / self).integrate_q()

    def exp(self):
        if self.coeffs[0] != 0:
            raise NonZeroConstant("exp requires constant term 0")
        out = [_ONE]
        for d in range(1, self.order + 1):
            s = _ZERO
            for j in range(1, d + 1):
                if self.coeffs[j] != 0:
                    s += j * self.coeffs[j] * out[d - j]
            out.append(s / d)
        return QSeries(out, order=self.order)

    def pow_rational(self, r):
        if self.coeffs[0] != 1:
            raise NonUnitConstant("rational powers require constant term 1")
        r = _coerce(r)
        return (self.log() * r).exp()

    # -- calculus in the scaling derivative D = q d/dq

    def d_q(self):
        return QSeries([c * d for d, c in enumerate(self.coeffs)], order=self.order)

    def integrate_q(self):
        if self.coeffs[0] != 0:
            raise NonZeroConstant("integrate_q requires zero constant term")
        out = [_ZERO] + [c / d for d, c in enumerate(self.coeffs) if d]
        return QSeries(out, order=self.order)

    # -- composition and reversion

    def compose(self, g):
        if not isinstance(g, QSeries):
            raise TypeError("compose expects a QSeries")
        if g.coeffs[0] != 0:
            raise NonZeroConstant("inner series must have zero constant term")
        m = min(self.order, g.order)
        g = g.truncate(m)
        out = QSeries.zero(m)
        for k in range(min(self.order, m), -1, -1):
            out = out * g + self.coeffs[k]
        return out

    def revert(self):
        """Compositional inverse, by Newton iteration with order doubling."""
        if self.coeffs[0] != 0:
            raise NonZeroConstant("reversion requires zero constant term")
        if self.coeffs[1] == 0:
            raise NonUnitLinearTerm("reversion requires a nonzero linear term")
        m = self.order
        q = QSeries.identity(m)
        # ordinary derivative g'(q), same truncation window
        deriv = QSeries(
            [(d + 1) * self.coeffs[d + 1] for d in range(m)] + [_ZERO], order=m
        )
        h = QSeries([_ZERO, _ONE / self.coeffs[1]], order=m)
        accurate = 1
        while accurate < m:
            h = h - (self.compose(h) - q) / deriv.compose(h)
            accurate *= 2
        return h


def _promote(value, w_order, q_order):
    if isinstance(value, WQSeries):
        return value
    if isinstance(value, QSeries):
        rows = [value.coeffs] + [(_ZERO,) * (value.order + 1)] * w_order
        return WQSeries(rows, w_order=w_order, q_order=value.order)
    if _is_scalar(value):
        return _promote(QSeries([value], order=q_order), w_order, q_order)
    return None


class WQSeries:
    """Truncated bivariate series in (w, q) with exact rational coefficients.

    ``rows[i][j]`` is the coefficient of w^i q^j.  ``effective_w_order``
    starts at ``w_order`` and drops by one with every division by w.
    """

    __slots__ = ("w_order", "q_order", "rows", "effective_w_order")

    def __init__(self, rows, w_order=None, q_order=None, effective_w_order=None):
        rows = [list(r) for r in rows]
        if w_order is None:
            w_order = len(rows) - 1
        if q_order is None:
            q_order = max((len(r) for r in rows), default=1) - 1
        if w_order < 0 or q_order < 0:
            raise ValueError("orders must be non-negative")
        full = []
        for i in range(w_order + 1):
            row = [_coerce(c) for c in (rows[i] if i < len(rows) else [])]
            row = row[: q_order + 1]
            row.extend([_ZERO] * (q_order + 1 - len(row)))
            full.append(tuple(row))
        if effective_w_order is None:
            effective_w_order = w_order
        if effective_w_order > w_order:
            raise ValueError("effective_w_order cannot exceed w_order")
        object.__setattr__(self, "w_order", w_order)
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(self, "rows", tuple(full))
        object.__setattr__(self, "effective_w_order", effective_w_order)

    def __setattr__(self, name, value):
        raise AttributeError("WQSeries is immutable")

    # -- constructors

    @classmethod
    def from_q_jets(cls, jets, w_order, q_order, effective_w_order=None):
        """Build from per-q-degree w-jets: jets[d][i] is the w^i part of q^d."""
        rows = [
            [jets[d][i] if d < len(jets) and i < len(jets[d]) else _ZERO
             for d in range(q_order + 1)]
            for i in range(w_order + 1)
        ]
        return cls(rows, w_order=w_order, q_order=q_order,
                   effective_w_order=effective_w_order)

    @classmethod
    def one(cls, w_order, q_order):
        return cls([[_ONE]], w_order=w_order, q_order=q_order)

    def __repr__(self):
        return (
            f"WQSeries(w_order={self.w_order}, q_order={self.q_order}, "
            f"effective_w_order={self.effective_w_order})"
        )

    # -- access

    def extract_w(self, p):
        """The q-series coefficient of w^p."""
        if p < 0 or p > self.effective_w_order:
            raise WUnderflow(
                f"w^{p} requested but only orders <= {self.effective_w_order} are known"
            )
        return QSeries(self.rows[p], order=self.q_order)

    def eval_w0(self):
        return self.extract_w(0)

    def column(self, d):
        return tuple(self.rows[i][d] for i in range(self.w_order + 1))

    def __eq__(self, other):
        other = _promote(other, self.w_order, self.q_order)
        if other is None:
            return NotImplemented
        mw = min(self.effective_w_order, other.effective_w_order)
        mq = min(self.q_order, other.q_order)
        return all(
            self.rows[i][: mq + 1] == other.rows[i][: mq + 1] for i in range(mw + 1)
        )

    __hash__ = None

    # -- arithmetic

    def _align(self, other):
        other = _promote(other, self.w_order, self.q_order)
        if other is None:
            return None, None, None, None, None
        mw = min(self.w_order, other.w_order)
        me = min(self.effective_w_order, other.effective_w_order)
        mq = min(self.q_order, other.q_order)
        return self, other, mw, mq, me

    def __add__(self, other):
        f, g, mw, mq, me = self._align(other)
        if f is None:
            return NotImplemented
        rows = [
            [f.rows[i][j] + g.rows[i][j] for j in range(mq + 1)]
            for i in range(mw + 1)
        ]
        return WQSeries(rows, w_order=mw, q_order=mq, effective_w_order=me)

    __radd__ = __add__

    def __neg__(self):
        rows = [[-c for c in row] for row in self.rows]
        return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                        effective_w_order=self.effective_w_order)

    def __sub__(self, other):
        promoted = _promote(other, self.w_order, self.q_order)
        if promoted is None:
            return NotImplemented
        return self.__add__(-promoted)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            rows = [[a * c for a in row] for row in self.rows]
            return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                            effective_w_order=self.effective_w_order)
        f, g, mw, mq, me = self._align(other)
        if f is None:
            return NotImplemented
        rows = [[_ZERO] * (mq + 1) for _ in range(mw + 1)]
        for i1 in range(mw + 1):
            frow = f.rows[i1]
            for j1 in range(mq + 1):
                a = frow[j1]
                if a == 0:
                    continue
                for i2 in range(mw + 1 - i1):
                    grow = g.rows[i2]
                    row = rows[i1 + i2]
                    for j2 in range(mq + 1 - j1):
                        b = grow[j2]
                        if b != 0:
                            row[j1 + j2] += a * b
        return WQSeries(rows, w_order=mw, q_order=mq, effective_w_order=me)

    __rmul__ = __mul__

    def _w_jet_mul(self, a, b, mw):
        out = [_ZERO] * (mw + 1)
        for i, ai in enumerate(a[: mw + 1]):
            if ai == 0:
                continue
            for j in range(mw + 1 - i):
                if b[j] != 0:
                    out[i + j] += ai * b[j]
        return out

    def _w_jet_inv(self, a, mw):
        if a[0] == 0:
            raise DivisionByNonUnit("divisor's w-jet has zero constant term")
        out = [_ONE / a[0]]
        for i in range(1, mw + 1):
            s = _ZERO
            for j in range(1, i + 1):
                if a[j] != 0:
                    s += a[j] * out[i - j]
            out.append(-s / a[0])
        return out

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            # w-independent divisor: divide each row as a q-series
            if other.constant() == 0:
                raise DivisionByNonUnit("divisor has zero constant term")
            mq = min(self.q_order, other.order)
            rows = [
                (QSeries(row, order=self.q_order).truncate(mq) / other).coeffs
                for row in self.rows
            ]
            return WQSeries(rows, w_order=self.w_order, q_order=mq,
                            effective_w_order=self.effective_w_order)
        if _is_scalar(other):
            c = _coerce(other)
            if c == 0:
                raise ZeroDivisionError("division of a series by zero")
            rows = [[a / c for a in row] for row in self.rows]
            return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                            effective_w_order=self.effective_w_order)
        f, g, mw, mq, me = self._align(other)
        if f is None:
            return NotImplemented
        if g.rows[0][0] == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        g_cols = [[g.rows[i][d] for i in range(mw + 1)] for d in range(mq + 1)]
        inv0 = self._w_jet_inv(g_cols[0], mw)
        out_cols = []
        for d in range(mq + 1):
            col = [f.rows[i][d] for i in range(mw + 1)]
            for j in range(1, d + 1):
                prod = self._w_jet_mul(g_cols[j], out_cols[d - j], mw)
                col = [a - b for a, b in zip(col, prod)]
            out_cols.append(self._w_jet_mul(col, inv0, mw))
        rows = [[out_cols[d][i] for d in range(mq + 1)] for i in range(mw + 1)]
        return WQSeries(rows, w_order=mw, q_order=mq, effective_w_order=me)

    def __rtruediv__(self, other):
        promoted = _promote(other, self.w_order, self.q_order)
        if promoted is None:
            return NotImplemented
        return promoted / self

    # -- structure maps

    def d_q(self):
        rows = [[c * d for d, c in enumerate(row)] for row in self.rows]
        return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                        effective_w_order=self.effective_w_order)

    def mul_w(self):
        """Multiply by w: rows shift up; the former top row falls outside the
        window, which the effective order accounts for."""
        rows = [[_ZERO] * (self.q_order + 1)] + [list(r) for r in self.rows[:-1]]
        eff = min(self.effective_w_order + 1, self.w_order)
        return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                        effective_w_order=eff)

    def d_w(self):
        """The operator D + w, with D = q d/dq."""
        return self.d_q() + self.mul_w()

    def divide_by_w(self):
        if self.effective_w_order < 0:
            raise WUnderflow("no known w-orders remain")
        if any(c != 0 for c in self.rows[0]):
            raise WUnderflow("cannot divide by w: the w^0 row is nonzero")
        rows = [list(r) for r in self.rows[1:]] + [[_ZERO] * (self.q_order + 1)]
        return WQSeries(rows, w_order=self.w_order, q_order=self.q_order,
                        effective_w_order=self.effective_w_order - 1)

    # -- transcendental operations

    def log(self):
        if self.rows[0][0] != 1:
            raise NonUnitConstant("log requires constant term 1")
        mw, mq = self.w_order, self.q_order
        # q^0 column: finite Mercator series of a nilpotent w-jet
        col0 = [self.rows[i][0] for i in range(mw + 1)]
        u = [_ZERO] + col0[1:]
        log0 = [_ZERO] * (mw + 1)
        term = [_ONE] + [_ZERO] * mw
        for m in range(1, mw + 1):
            term = self._w_jet_mul(term, u, mw)
            sign = _ONE if m % 2 else -_ONE
            for i in range(mw + 1):
                log0[i] += sign * term[i] / m
        # higher columns from the logarithmic derivative
        g = self.d_q() / self
        rows = [
            [log0[i]] + [g.rows[i][d] / d for d in range(1, mq + 1)]
            for i in range(mw + 1)
        ]
        return WQSeries(rows, w_order=mw, q_order=mq,
                        effective_w_order=self.effective_w_order)

    def exp(self):
        if self.rows[0][0] != 0:
            raise NonZeroConstant("exp requires constant term 0")
        mw, mq = self.w_order, self.q_order
        # split off the q^0 column (nilpotent in w) and exponentiate it
        col0 = [self.rows[i][0] for i in range(mw + 1)]
        exp0 = [_ZERO] * (mw + 1)
        term = [_ONE] + [_ZERO] * mw
        fact = 1
        for m in range(mw + 1):
            for i in range(mw + 1):
                exp0[i] += term[i] / fact
            term = self._w_jet_mul(term, col0, mw)
            fact *= m + 1
        plus_cols = [[self.rows[i][d] for i in range(mw + 1)] for d in range(mq + 1)]
        plus_cols[0] = [_ZERO] * (mw + 1)
        out_cols = [[_ONE] + [_ZERO] * mw]
        for d in range(1, mq + 1):
            acc = [_ZERO] * (mw + 1)
            for j in range(1, d + 1):
                scaled = [j * c for c in plus_cols[j]]
                prod = self._w_jet_mul(scaled, out_cols[d - j], mw)
                acc = [a + b for a, b in zip(acc, prod)]
            out_cols.append([c / d for c in acc])
        final_cols = [self._w_jet_mul(exp0, col, mw) for col in out_cols]
        rows = [[final_cols[d][i] for d in range(mq + 1)] for i in range(mw + 1)]
        return WQSeries(rows, w_order=mw, q_order=mq,
                        effective_w_order=self.effective_w_order)

    def pow_rational(self, r):
        if self.rows[0][0] != 1:
            raise NonUnitConstant("rational powers require constant term 1")
        return (self.log() * _coerce(r)).exp()


# functional aliases matching the operation names used throughout


def log_series(f):
    return f.log()


def exp_series(f):
    return f.exp()


def pow_rational(f, r):
    return f.pow_rational(r)


def d_q(f):
    return f.d_q()


def integrate_q(f):
    return f.integrate_q()


def compose(f, g):
    return f.compose(g)


def revert(g):
    return g.revert()


def extract_w(f, p):
    return f.extract_w(p)


def divide_by_w(f):
    return f.divide_by_w()


def eval_w0(f):
    return f.eval_w0()
