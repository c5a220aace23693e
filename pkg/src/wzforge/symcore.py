"""Exact polynomial and rational-function utilities.

All polynomials are sympy expressions over the rationals in an arbitrary
set of symbols.  There is a single polynomial type; the "main variable"
of an operation is always an explicit argument.  Canonical forms use
graded lexicographic order over the sorted symbol list.
"""

from __future__ import annotations

import sympy as sp
from sympy import Poly

from .errors import NotLinearSplit

__all__ = [
    "grlex_key",
    "normalize_rational",
    "poly_gcd",
    "resultant",
    "integer_shift_set",
    "rational_linear_factorization",
]


def _sorted_gens(*exprs):
    syms = set()
    for e in exprs:
        syms |= sp.sympify(e).free_symbols
    return tuple(sorted(syms, key=lambda s: s.name))


def grlex_key(expr):
    """Leading coefficient of expr under grlex over its sorted symbols."""
    expr = sp.expand(expr)
    gens = _sorted_gens(expr)
    if not gens:
        return sp.Rational(expr)
    p = Poly(expr, *gens)
    monoms = sorted(p.monoms(), key=lambda m: (sum(m), m), reverse=True)
    return p.coeff_monomial(monoms[0])


def normalize_rational(expr):
    """Canonical num/den pair for a rational function.

    Both parts have integer content 1 and the denominator has positive
    leading coefficient under grlex.  Returns (constant, num, den) with
    expr == constant * num / den and constant a sympy Rational.
    """
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    num = sp.expand(num)
    den = sp.expand(den)
    if num == 0:
        return sp.Integer(0), sp.Integer(0), sp.Integer(1)
    cn, pn = sp.factor_list(num)[0], None
    # primitive parts via Poly.primitive over all symbols
    def prim(e):
        gens = _sorted_gens(e)
        if not gens:
            return sp.Rational(e), sp.Integer(1)
        c, p = Poly(e, *gens).primitive()
        return sp.Rational(c), p.as_expr()

    cn, pn = prim(num)
    cd, pd = prim(den)
    lk = grlex_key(pd)
    if lk < 0:
        pd = sp.expand(-pd)
        pn = sp.expand(-pn)
    return sp.Rational(cn, 1) / sp.Rational(cd, 1), pn, pd


def poly_gcd(a, b, main_var):
    """GCD of two polynomials, primitive in main_var and sign-normalized.

    gcd(0, 0) is defined as 0.  Symbols other than main_var are treated
    as transcendental parameters.
    """
    a = sp.expand(a)
    b = sp.expand(b)
    if a == 0 and b == 0:
        return sp.Integer(0)
    g = sp.gcd(a, b)
    g = sp.expand(g)
    if g.free_symbols:
        p = Poly(g, main_var)
        cont, _ = p.primitive()
        if cont.free_symbols or cont != 1:
            g = sp.expand(sp.cancel(g / cont))
        # strip parameter-only content so the result is primitive in main_var
        coeffs = Poly(g, main_var).all_coeffs()
        pc = sp.Integer(0)
        for c in coeffs:
            pc = sp.gcd(pc, c)
        if pc != 1 and pc != 0:
            g = sp.expand(sp.cancel(g / pc))
    if grlex_key(g) < 0:
        g = sp.expand(-g)
    return g


def resultant(a, b, var):
    """Sylvester resultant eliminating var.

    Convention: Res(a, b) = lc(b)^deg(a) * prod a(beta) over the roots
    beta of b, so Res(k - 1, k - j) == j - 1.
    """
    a = sp.expand(a)
    b = sp.expand(b)
    da = sp.degree(a, var) if a.has(var) else 0
    db = sp.degree(b, var) if b.has(var) else 0
    if da == 0 and db == 0:
        return sp.Integer(1)
    if da == 0:
        return sp.expand(a ** db)
    if db == 0:
        return sp.expand(b ** da)
    return sp.expand(sp.resultant(b, a, var))


def integer_shift_set(a, b, var, bound=None):
    """All j >= 0 such that gcd(a(var), b(var + j)) is nonconstant.

    Symbolic parameters are treated generically: j qualifies only when
    the resultant in j vanishes identically as a polynomial in the
    parameters.  The result is finite and superset-safe.
    """
    j = sp.Dummy("j", integer=True)
    res = resultant(a, b.subs(var, var + j), var)
    res = sp.expand(res)
    if res == 0:
        # degenerate (can happen only for zero input); no shifts reported
        return set()
    params = sorted(res.free_symbols - {j}, key=lambda s: s.name)
    if params:
        coeffs = Poly(res, *params).coeffs()
    else:
        coeffs = [res]
    # common integer roots of all coefficient polynomials in j
    g = sp.Integer(0)
    for c in coeffs:
        g = sp.gcd(g, sp.expand(c))
    g = sp.expand(g)
    if not g.has(j):
        return set()
    out = set()
    for root, _ in Poly(g, j).ground_roots().items():
        if root.is_integer and root >= 0:
            out.add(int(root))
    return out


def rational_linear_factorization(p, var):
    """Write p = constant * prod (var - root_i) with roots rational in
    the remaining parameters.

    Raises NotLinearSplit when p has an irreducible factor of degree
    >= 2 in var.  Factors free of var are folded into the constant.
    """
    p = sp.expand(p)
    if p == 0:
        raise ValueError("cannot factor the zero polynomial")
    const, factors = sp.factor_list(p)
    constant = sp.Rational(const)
    roots = []
    for fac, mult in factors:
        if not fac.has(var):
            constant = constant * fac ** mult
            continue
        if sp.degree(fac, var) >= 2:
            raise NotLinearSplit(f"irreducible factor {fac} of degree >= 2 in {var}")
        c1 = fac.coeff(var, 1)
        c0 = fac.coeff(var, 0)
        if c1.has(var) or sp.expand(fac - c1 * var - c0) != 0:
            raise NotLinearSplit(f"factor {fac} is not linear in {var}")
        root = sp.cancel(-c0 / c1)
        for _ in range(mult):
            roots.append(root)
            constant = constant * c1
    roots.sort(key=sp.default_sort_key)
    return sp.cancel(constant), roots
