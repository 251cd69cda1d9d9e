#!/usr/bin/env python3
"""Regenerates the frozen expected values used by the C++ unit tests.

Every value comes from sympy's own series expansion of the closed-form
generating function (transcendental functions kept symbolic), so it shares
no code path with the truncated-EGF machinery under test.

    python3 tests/oracles/frozen_values.py
"""
from itertools import combinations

import sympy as sp

t, x, z = sp.symbols("t x z")


def egf(expr, order):
    s = sp.series(expr, t, 0, order + 1).removeO()
    return [sp.nsimplify(sp.factorial(n) * s.coeff(t, n)) for n in range(order + 1)]


def multi_li(ks, zz, order):
    total = 0
    r = len(ks)
    for ms in combinations(range(1, order + 1), r):
        term = zz ** ms[-1]
        for m, k in zip(ms, ks):
            term /= sp.Integer(m) ** k
        total += term
    return total


def show(label, values):
    print(f"{label}: [{', '.join(str(v) for v in values)}]")


N = 8
u = 1 - sp.exp(-t)
show("bernoulli", egf(t / (sp.exp(t) - 1), 12))
show("euler_genocchi", egf(2 / (sp.exp(t) + 1), 10))
show("euler_secant", egf(1 / sp.cosh(t), 12))
show("poly_bernoulli k=2", egf(multi_li([2], u, N + 1) / u, N))
show("poly_bernoulli k=-2", egf(multi_li([-2], u, N + 1) / u, N))
show("poly_bernoulli k=2 x=1/3",
     egf(multi_li([2], u, N + 1) / u * sp.exp(sp.Rational(1, 3) * t), N))
show("poly_euler k=2 x=1/2",
     egf(2 * multi_li([2], u, N + 1) / (1 + sp.exp(t)) * sp.exp(t / 2), N))
show("poly_euler k=-1 x=0", egf(2 * multi_li([-1], u, N + 1) / (1 + sp.exp(t)), N))
show("sasaki k=2",
     egf(multi_li([2], 1 - sp.exp(-4 * t), N + 1) / (4 * t * sp.cosh(t)), N))
show("multi_poly_bernoulli (1,1)", egf(multi_li([1, 1], u, N + 2) / u**2, N))
show("multi_poly_bernoulli (2,-1)", egf(multi_li([2, -1], u, N + 2) / u**2, N))
show("multi_poly_euler (1,1) x=0",
     egf(2 * multi_li([1, 1], u, N) / (1 + sp.exp(t)) ** 2, N))
show("multi_poly_euler (2,1,-1) x=1/2",
     egf(2 * multi_li([2, 1, -1], u, N) / (1 + sp.exp(t)) ** 3 * sp.exp(3 * t / 2), N))
al, be, ga = sp.Rational(2), sp.Rational(-1, 3), sp.Rational(3, 2)
s = al + be
show("multi_poly_euler_xab (1,2) x=1/5 alpha=2 beta=-1/3",
     egf(2 * multi_li([1, 2], 1 - sp.exp(-s * t), N)
         / (sp.exp(-al * t) + sp.exp(be * t)) ** 2 * sp.exp(2 * t / 5), N))
show("poly_euler_abc k=2 x=1/2 alpha=2 beta=-1/3 gamma=3/2",
     egf(2 * multi_li([2], 1 - sp.exp(-s * t), N + 1)
         / (sp.exp(-al * t) + sp.exp(be * t)) * sp.exp(ga * t / 2), N))
