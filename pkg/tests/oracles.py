"""Independent reference implementations used to pin expected test values.

Everything in this module is deliberately naive: plain ``fractions.Fraction``
on plain lists, direct textbook formulas, and no imports from the package
under test.  Slow is fine; independent is the point.

Univariate series are lists ``c[d]`` of coefficients of q^d.
Bivariate series are nested lists ``c[i][j]`` for w^i q^j.
"""

from fractions import Fraction
from math import comb, factorial, prod


def _fr(x, den=None):
    """Coerce to a Fraction backed by plain ints.

    Fraction(mpq) keeps gmpy2 integers inside, and comparing those hybrids
    back against mpq raises SystemError.  Routing through int avoids that.
    """
    f = Fraction(x) if den is None else Fraction(x, den)
    return Fraction(int(f.numerator), int(f.denominator))


# ---------------------------------------------------------------------------
# univariate convolution algebra


def conv_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += _fr(ai) * _fr(bj)
    return out


def conv_inv(g, order):
    """Reciprocal of a series with nonzero constant term."""
    g0 = _fr(g[0])
    assert g0 != 0
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / g0
    for d in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, d + 1):
            if j < len(g):
                s += _fr(g[j]) * out[d - j]
        out[d] = -s / g0
    return out


def conv_pow(a, k, order):
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(k):
        out = conv_mul(out, a, order)
    return out


def mercator_log(f, order):
    """log of a unit series as the finite sum of (-1)^(m+1) (f-1)^m / m."""
    assert _fr(f[0]) == 1
    u = [_fr(c) for c in f[: order + 1]]
    u[0] = Fraction(0)
    out = [Fraction(0)] * (order + 1)
    term = [Fraction(1)] + [Fraction(0)] * order
    for m in range(1, order + 1):
        term = conv_mul(term, u, order)
        sign = 1 if m % 2 else -1
        for d in range(order + 1):
            out[d] += sign * term[d] / m
    return out


def taylor_exp(f, order):
    """exp of a series with zero constant term as the finite Taylor sum."""
    assert _fr(f[0]) == 0
    out = [Fraction(0)] * (order + 1)
    term = [Fraction(1)] + [Fraction(0)] * order
    fact = 1
    for m in range(order + 1):
        for d in range(order + 1):
            out[d] += term[d] / fact
        term = conv_mul(term, f, order)
        fact *= m + 1
    return out


def binomial_coefficients(r, c, order):
    """Coefficients of (1 + c*q)^r for rational r via the binomial series."""
    r = _fr(r)
    c = _fr(c)
    out = [Fraction(1)]
    coeff = Fraction(1)
    for k in range(1, order + 1):
        coeff *= (r - (k - 1)) / k
        out.append(coeff * c**k)
    return out


def compose_series(f, g, order):
    """f(g(q)) for g with zero constant term, by Horner evaluation."""
    assert _fr(g[0]) == 0
    out = [Fraction(0)] * (order + 1)
    for k in range(min(len(f) - 1, order), -1, -1):
        out = conv_mul(out, g, order)
        out[0] += _fr(f[k])
    return out


def lagrange_revert(g, order):
    """Compositional inverse via the Lagrange inversion formula.

    [Q^d] g^(-1) = (1/d) [q^(d-1)] (q/g(q))^d.
    """
    assert _fr(g[0]) == 0 and _fr(g[1]) != 0
    base = conv_inv([_fr(g[k + 1]) for k in range(len(g) - 1)], order)
    out = [Fraction(0)] * (order + 1)
    for d in range(1, order + 1):
        out[d] = conv_pow(base, d, order)[d - 1] / d
    return out


# ---------------------------------------------------------------------------
# bivariate (w, q) convolution algebra


def conv2_mul(a, b, w_order, q_order):
    out = [[Fraction(0)] * (q_order + 1) for _ in range(w_order + 1)]
    for i1, row1 in enumerate(a[: w_order + 1]):
        for j1, c1 in enumerate(row1[: q_order + 1]):
            if c1 == 0:
                continue
            for i2, row2 in enumerate(b[: w_order + 1 - i1]):
                for j2, c2 in enumerate(row2[: q_order + 1 - j1]):
                    out[i1 + i2][j1 + j2] += _fr(c1) * _fr(c2)
    return out


def conv2_log(f, w_order, q_order):
    """Bivariate Mercator log; (f - 1) is nilpotent in the truncation window."""
    assert _fr(f[0][0]) == 1
    u = [[_fr(c) for c in row] for row in f]
    u[0][0] = Fraction(0)
    out = [[Fraction(0)] * (q_order + 1) for _ in range(w_order + 1)]
    term = [[Fraction(0)] * (q_order + 1) for _ in range(w_order + 1)]
    term[0][0] = Fraction(1)
    for m in range(1, w_order + q_order + 1):
        term = conv2_mul(term, u, w_order, q_order)
        sign = 1 if m % 2 else -1
        for i in range(w_order + 1):
            for j in range(q_order + 1):
                out[i][j] += sign * term[i][j] / m
    return out


# ---------------------------------------------------------------------------
# domain-specific direct formulas


def i0_by_factorials(a, order):
    """Degree-0 I-function coefficients prod_k (a_k d)! / (d!)^n."""
    n = sum(a)
    return [
        Fraction(prod(factorial(ak * d) for ak in a), factorial(d) ** n)
        for d in range(order + 1)
    ]


def mirror_exponent_numerator(a, order):
    """The harmonic double sum q-series whose quotient by I_0 is the
    mirror-map exponent."""
    n = sum(a)
    out = [Fraction(0)]
    for d in range(1, order + 1):
        front = Fraction(prod(factorial(ak * d) for ak in a), factorial(d) ** n)
        harm = sum(
            (_fr(ak, r) for ak in a for r in range(d + 1, ak * d + 1)),
            Fraction(0),
        )
        out.append(front * harm)
    return out


def chern_jet(a, pmax):
    """Coefficients of (1+w)^n / prod_k (1 + a_k w) to order pmax."""
    n = sum(a)
    num = [_fr(comb(n, p)) for p in range(pmax + 1)]
    den = [Fraction(1)] + [Fraction(0)] * pmax
    for ak in a:
        den = conv_mul(den, [Fraction(1), _fr(ak)], pmax)
    return conv_mul(num, conv_inv(den, pmax), pmax)


def eps_hypersurface(n):
    """Residue closed forms for the two epsilon constants when l = 1."""
    e0 = _fr(n * n - 1 + (1 - n) ** n, n * n)
    e1 = Fraction((n - 2) * (n + 1), 2 * n) + _fr(1 - (1 - n) ** n, n**3)
    return e0, e1


def eps_threefold(a):
    """Triple-sum closed forms for the epsilon constants when dim = 3."""
    n = sum(a)
    l = len(a)
    s1 = sum(a)
    s2 = sum(
        a[r1] * a[r2] for r1 in range(l) for r2 in range(r1, l)
    )
    s3 = sum(
        a[r1] * a[r2] * a[r3]
        for r1 in range(l)
        for r2 in range(r1, l)
        for r3 in range(r2, l)
    )
    e0 = (
        Fraction(n * (n - 1) * (n - 2), 6)
        - _fr(n * (n - 1), 2) * s1
        + n * s2
        - s3
    )
    e1 = _fr(n * (n - 1), 2) - n * s1 + s2
    return e0, e1


def elementary_symmetric(vals, k):
    vals = [_fr(v) for v in vals]
    out = [Fraction(1)] + [Fraction(0)] * len(vals)
    for v in vals:
        for i in range(len(vals), 0, -1):
            out[i] += out[i - 1] * v
    return out[k]


def schubert_lines(a):
    """Number of lines on a complete intersection 3-fold by Schubert calculus.

    Expands prod_k prod_{j=0}^{a_k} ((a_k - j) x + j y) and reads off the
    coefficient of the rectangular Schur polynomial for the Grassmannian of
    lines: A[n-2][n-2] - A[n-1][n-3].
    """
    n = sum(a)
    poly = {(0, 0): Fraction(1)}
    for ak in a:
        for j in range(ak + 1):
            new = {}
            for (i1, j1), c in poly.items():
                if ak - j:
                    key = (i1 + 1, j1)
                    new[key] = new.get(key, Fraction(0)) + c * (ak - j)
                if j:
                    key = (i1, j1 + 1)
                    new[key] = new.get(key, Fraction(0)) + c * j
            poly = new
    aa = poly.get((n - 2, n - 2), Fraction(0))
    ab = poly.get((n - 1, n - 3), Fraction(0))
    return aa - ab


def divisors(d):
    return [k for k in range(1, d + 1) if d % k == 0]


def genus0_forward(n0, dmax):
    """Divisor-sum map from genus-0 BPS to genus-0 GW values."""
    return {
        d: sum(_fr(n0[d // k], k**3) for k in divisors(d))
        for d in range(1, dmax + 1)
    }


def genus1_forward(n1, n0, dmax):
    """Divisor-sum map from BPS to genus-1 GW values."""
    return {
        d: sum(
            (_fr(n1[d // k]) + _fr(n0[d // k], 12)) / k
            for k in divisors(d)
        )
        for d in range(1, dmax + 1)
    }


def torus_cover_series(k, order):
    """Coefficients of -sum_r log(1 - Q^(k r)) up to Q^order."""
    out = [Fraction(0)] * (order + 1)
    for r in range(1, order // k + 1):
        for m in range(1, order // (k * r) + 1):
            out[k * r * m] += Fraction(1, m)
    return out
