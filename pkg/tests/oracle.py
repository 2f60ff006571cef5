"""Dense sympy oracles, independent of the sparse code paths under test."""

import sympy

from nilcentral import UTMatrix


def dense(a):
    """Full r x r sympy Matrix of a UTMatrix or InvTriMatrix (over Q)."""
    r = a.ctx.r
    m = sympy.zeros(r, r)
    for (i, j), v in a.entries.items():
        m[i - 1, j - 1] = sympy.Rational(v.numerator, v.denominator)
    return m


def from_dense(ctx, m):
    entries = {}
    for i in range(ctx.r):
        for j in range(ctx.r):
            if m[i, j] != 0:
                assert j > i, "oracle produced a non strictly-upper entry"
                entries[(i + 1, j + 1)] = sympy_to_fraction(m[i, j])
    return UTMatrix(ctx, entries)


def sympy_to_fraction(x):
    from fractions import Fraction

    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def unit_dense(r, i, j):
    m = sympy.zeros(r, r)
    m[i - 1, j - 1] = 1
    return m


def symbolic_map_space_dimension(r, kind):
    """Dimension of {linear f : [f(x), x] in Z (or = 0) for all x}, via symbolic polynomials.

    The map has n^2 indeterminate coefficients, x has n indeterminate entries;
    every monomial coefficient of the forbidden entries of [f(x), x] must vanish.
    """
    pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    n = len(pairs)
    xs = sympy.symbols(f"x0:{n}")
    ms = sympy.symbols(f"m0:{n * n}")
    X = sympy.zeros(r, r)
    for k, (i, j) in enumerate(pairs):
        X[i - 1, j - 1] = xs[k]
    FX = sympy.zeros(r, r)
    for s, (i, j) in enumerate(pairs):
        FX[i - 1, j - 1] = sum(ms[k * n + s] * xs[k] for k in range(n))
    C = (FX * X - X * FX).expand()
    eqs = []
    for a in range(r):
        for b in range(r):
            if kind == "centralizing" and (a, b) == (0, r - 1):
                continue
            if C[a, b] != 0:
                eqs.extend(sympy.Poly(C[a, b], *xs).coeffs())
    if not eqs:
        return n * n
    A, _ = sympy.linear_eq_to_matrix(eqs, ms)
    return n * n - A.rank()
