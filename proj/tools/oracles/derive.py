"""Symbolic reference values for the unit tests.

Run from the repository root:  python3 tools/oracles/derive.py > tests/oracle_values.hpp
"""
import sympy as sp

s, u1, u2, x = sp.symbols("s u1 u2 x", real=True)
P = 30


def num(v):
    return sp.N(v, P)


def fmt(v):
    return "{:.17e}".format(float(num(v)))


def frenet(alpha):
    d1 = [sp.diff(c, s) for c in alpha]
    d2 = [sp.diff(c, s, 2) for c in alpha]
    d3 = [sp.diff(c, s, 3) for c in alpha]
    kappa = sp.sqrt(d2[1] ** 2 + d2[2] ** 2)
    tau = sp.Matrix([d1, d2, d3]).det() / kappa**2
    return sp.simplify(kappa), sp.simplify(tau)


def darboux(X, tr):
    Xs = [c.subs({u1: tr[0], u2: tr[1]}) for c in X]
    xu1 = [sp.diff(c, u1) for c in X]
    xu2 = [sp.diff(c, u2) for c in X]
    ny = xu2[0] * xu1[2] - xu1[0] * xu2[2]
    nz = xu1[0] * xu2[1] - xu2[0] * xu1[1]
    w = sp.sqrt(ny**2 + nz**2)
    n = [0, (ny / w).subs({u1: tr[0], u2: tr[1]}), (nz / w).subs({u1: tr[0], u2: tr[1]})]
    T = [sp.diff(c, s) for c in Xs]
    Tp = [sp.diff(c, s) for c in T]
    Q = [0, n[2], -n[1]]
    dot = lambda a, b: a[1] * b[1] + a[2] * b[2]
    kg = dot(Tp, Q)
    kn = dot(Tp, n)
    tg = dot([sp.diff(c, s) for c in Q], n)
    return T, kg, kn, tg


out = []
emit = out.append
emit("#pragma once")
emit("")
emit("// Generated by tools/oracles/derive.py (sympy). Do not edit.")
emit("")
emit("namespace oracle {")
emit("")

# jets: f(x) = sin(x)^2 exp(x) / (1 + x^2) at x = 0.7, derivatives 0..3
f = sp.sin(x) ** 2 * sp.exp(x) / (1 + x**2)
vals = [sp.diff(f, x, k).subs(x, sp.Rational(7, 10)) for k in range(4)]
emit("// sin(x)^2 * exp(x) / (1 + x^2) at x = 0.7, derivatives 0..3")
emit("inline constexpr double kJetA[4] = {" + ", ".join(fmt(v) for v in vals) + "};")
g = sp.sqrt(1 + x**3) * sp.log(2 + sp.cos(x)) + sp.tan(x / 3) ** sp.Rational(5, 2)
vals = [sp.diff(g, x, k).subs(x, sp.Rational(13, 10)) for k in range(4)]
emit("// sqrt(1 + x^3) * log(2 + cos(x)) + tan(x/3)^2.5 at x = 1.3")
emit("inline constexpr double kJetB[4] = {" + ", ".join(fmt(v) for v in vals) + "};")
h = sp.sinh(x) * sp.cosh(2 * x) - x ** (-2)
vals = [sp.diff(h, x, k).subs(x, sp.Rational(-6, 5)) for k in range(4)]
emit("// sinh(x) * cosh(2x) - x^-2 at x = -1.2")
emit("inline constexpr double kJetC[4] = {" + ", ".join(fmt(v) for v in vals) + "};")

# second order partials: F(u1, u2) = exp(u1 u2) sin(u1 - u2^2) at (0.4, -0.9)
F = sp.exp(u1 * u2) * sp.sin(u1 - u2**2)
at = {u1: sp.Rational(2, 5), u2: sp.Rational(-9, 10)}
parts = [F, sp.diff(F, u1), sp.diff(F, u2), sp.diff(F, u1, 2), sp.diff(F, u1, u2), sp.diff(F, u2, 2)]
emit("// exp(u1 u2) sin(u1 - u2^2) at (0.4, -0.9): value, d1, d2, d11, d12, d22")
emit("inline constexpr double kJet2[6] = {" + ", ".join(fmt(p.subs(at)) for p in parts) + "};")
emit("")

# Frenet of the cubic: closed forms
k, t = frenet([s, s**2 / 2, s**3 / 6])
emit(f"// alpha = (s, s^2/2, s^3/6): kappa = {k}, tau = {t}")
assert sp.simplify(k - sp.sqrt(1 + s**2)) == 0
assert sp.simplify(t - 1 / (1 + s**2)) == 0

# Frenet of a transcendental curve
k, t = frenet([s, sp.sin(s) + s**2, sp.exp(s / 2) - s**3])
pts = [sp.Rational(-1, 2), sp.Rational(3, 10), sp.Rational(6, 5)]
emit("// alpha = (s, sin(s) + s^2, exp(s/2) - s^3) at s = -0.5, 0.3, 1.2: {s, kappa, tau}")
emit("inline constexpr double kCurve[3][3] = {")
for p in pts:
    emit("    {" + ", ".join([fmt(p), fmt(k.subs(s, p)), fmt(t.subs(s, p))]) + "},")
emit("};")
emit("")

# Darboux apparatus on a sheared surface
pc = sp.Rational(3, 10)
X = [u1 + pc * u2, u1 * u2 + sp.sin(u2), u1**2 - u2**2 / 2]
q = s**2 / 2 + s / 4
tr = [s - pc * q, q]
T, kg, kn, tg = darboux(X, tr)
assert sp.simplify(T[0] - 1) == 0
emit("// X = (u1 + 0.3 u2, u1 u2 + sin(u2), u1^2 - u2^2/2), u2 = s^2/2 + s/4, u1 = s - 0.3 u2")
emit("// at s = -0.6, 0.2, 0.9: {s, kg, kn, tau_g}")
emit("inline constexpr double kDarboux[3][4] = {")
for p in [sp.Rational(-3, 5), sp.Rational(1, 5), sp.Rational(9, 10)]:
    emit("    {" + ", ".join([fmt(p), fmt(kg.subs(s, p)), fmt(kn.subs(s, p)), fmt(tg.subs(s, p))]) + "},")
emit("};")
emit("")

# cylinder helix
Xc = [u1, sp.sin(u2), sp.cos(u2)]
_, kg, kn, tg = darboux(Xc, [s, s])
kg, kn, tg = (sp.simplify(e) for e in (kg, kn, tg))
emit(f"// cylinder (u1, sin u2, cos u2), trace (s, s): kg = {kg}, kn = {kn}, tau_g = {tg}")
emit(f"inline constexpr double kHelix[3] = {{{fmt(kg)}, {fmt(kn)}, {fmt(tg)}}};")
emit("")

# isotropic surface of revolution normal, g = s^3/3 + s, c = 2, at (s, t) = (0.8, -1.1)
c = 2
gs = s**3 / 3 + s
t_ = sp.symbols("t", real=True)
Xi = [u1 + c * u2, u1 * u2 + c * u2**2 / 2, gs.subs(s, u1)]
xu1 = [sp.diff(e, u1) for e in Xi]
xu2 = [sp.diff(e, u2) for e in Xi]
ny = xu2[0] * xu1[2] - xu1[0] * xu2[2]
nz = xu1[0] * xu2[1] - xu2[0] * xu1[1]
w = sp.sqrt(ny**2 + nz**2)
at = {u1: sp.Rational(4, 5), u2: sp.Rational(-11, 10)}
emit("// isotropic revolution of g = s^3/3 + s with c = 2, unit normal (y, z) at (s, t) = (0.8, -1.1)")
emit(f"inline constexpr double kIsoNormal[2] = {{{fmt((ny / w).subs(at))}, {fmt((nz / w).subs(at))}}};")
emit("")
emit("}  // namespace oracle")
print("\n".join(out))
