"""Independent oracle for values frozen into the C++ tests.

Uses sympy/mpmath only; nothing here imports or mirrors the C++ code.
Run: python3 tests/oracles/freeze_values.py
"""
from fractions import Fraction
from itertools import product
from math import comb
import mpmath as mp
import sympy as sp

mp.mp.dps = 40
z = sp.symbols("z")


def p_weight(i, n):
    return (sp.Rational(i * (n - i), n - 1)
            - (sp.Rational(n, 2) - i) * (z - i) / (n - 2)
            + sp.Rational(2 * n, (n - 1) * (n - 2)) * (z - i) ** 2)


def piece(n, k, weighted):
    s = 0
    for i in range(k + 1):
        term = (-1) ** i * comb(n, i) * (z - i) ** (n - 3)
        s += term * p_weight(i, n) if weighted else term
    return sp.Poly(sp.expand(s), z)


print("-- piece polynomials (ascending coefficients)")
for n in (4, 5, 6, 7):
    for k in range((n + 1) // 2):
        print(n, k, "S1", [str(c) for c in reversed(piece(n, k, True).all_coeffs())])
        print(n, k, "S2", [str(c) for c in reversed(piece(n, k, False).all_coeffs())])

print("-- point values")
print("S1 n=4 z=2", piece(4, 1, True).eval(2))
print("S1 n=5 z=3/2", piece(5, 1, True).eval(sp.Rational(3, 2)))
print("S1 n=4 z=3/2", piece(4, 1, True).eval(sp.Rational(3, 2)))
print("S1 n=4 z=7/4", piece(4, 1, True).eval(sp.Rational(7, 4)))
print("S2 n=4 z=7/4", piece(4, 1, False).eval(sp.Rational(7, 4)))
print("p(1,5) at 2", p_weight(1, 5).subs(z, 2))

print("-- real roots per piece (sympy real_roots)")
for n in (4, 5, 6, 7, 8):
    for weighted, name in ((True, "S1"), (False, "S2")):
        roots = []
        for k in range((n + 1) // 2):
            hi = min(k + 1, sp.Rational(n, 2))
            for r in sp.Poly(piece(n, k, weighted)).real_roots():
                v = sp.N(r, 20)
                if k < v < hi or (v == k and k > 0) or (v == hi == sp.Rational(n, 2)):
                    roots.append(v)
        print(n, name, sorted(set(roots)))


def vertex_volume(a, t):
    a = [mp.mpf(x) for x in a]
    n = len(a)
    b = sum(a) / 2 - t
    norm = mp.sqrt(sum(x * x for x in a))
    prod = mp.fprod(a)
    s = mp.mpf(0)
    for v in product((0, 1), repeat=n):
        av = sum(ai * vi for ai, vi in zip(a, v))
        if av <= b:
            s += (-1) ** sum(v) * (b - av) ** (n - 1)
    return norm * s / (mp.factorial(n - 1) * prod)


print("-- volumes")
for n, t in ((2, 0), (3, 0), (6, 0.7), (6, 0.3), (4, 0.25)):
    a = [1 / mp.sqrt(n)] * n
    print(n, t, mp.nstr(vertex_volume(a, mp.mpf(t)), 20))

print("-- quintic sinc integral")
f = lambda s: 2 * mp.sinc(s) ** 5 - mp.cos(s) * mp.sinc(s) ** 4 - mp.sinc(s) ** 3
print(mp.nstr(mp.quad(f, mp.linspace(0, 2 * mp.pi, 9)), 20))

print("-- closed forms")
r4 = (17 + mp.cbrt(17 - 12 * mp.sqrt(2)) + mp.cbrt(17 + 12 * mp.sqrt(2))) / 12
th = mp.atan(5 * mp.sqrt(11) / 7) / 3
r6 = mp.mpf(12) / 5 - mp.mpf(3) / 5 * mp.cos(th) + 3 * mp.sqrt(3) / 5 * mp.sin(th)
print("rho4-", mp.nstr(r4, 20), "rho6o", mp.nstr(r6, 20), "rho5o", mp.nstr((5 + mp.sqrt(5)) / 4, 20))
print("rho6o residual", mp.nstr(10 * r6**3 - 72 * r6**2 + 162 * r6 - 114, 5))
