#!/usr/bin/env python3
"""Brute-force reference values for the correlator engine.

Evaluates the residue recursion directly with sympy: correlators are kept as
whole global rational expressions (the deck transformations of the test curves
are global rational involutions), residues are extracted through exact Laurent
coefficients, and the log-containing kernel factor is expanded by explicit
Taylor composition (which also avoids principal-branch artifacts at negative
expansion points).

Run:  python3 reference_correlators.py [airy|gwp1|checks]
"""

import sys
import itertools
import sympy as sp

t = sp.Symbol('t')


# ---------------------------------------------------------------- series utils

def laurent_coeffs(expr, z, a, need_min, need_max):
    """Exact Laurent coefficients of a rational expr at z=a, as dict k->coeff.

    Other free symbols are treated as transcendental constants.
    """
    e = sp.cancel(sp.together(expr.subs(z, a + t)))
    num, den = sp.fraction(e)
    pn = sp.Poly(num, t)
    pd = sp.Poly(den, t)
    # strip t^m from den
    m = 0
    cs = pd.all_coeffs()[::-1]  # ascending
    while m < len(cs) and cs[m] == 0:
        m += 1
    unit = cs[m:]
    order = need_max + m + 1
    inv = [sp.cancel(1 / unit[0])]
    for k in range(1, order + 1):
        s = sp.Integer(0)
        for j in range(1, min(k, len(unit) - 1) + 1):
            s += unit[j] * inv[k - j]
        inv.append(sp.cancel(-s * inv[0]))
    nc = pn.all_coeffs()[::-1]
    out = {}
    for k in range(need_min, need_max + 1):
        kk = k + m  # index into num*inv product
        if kk < 0:
            continue
        s = sp.Integer(0)
        for j in range(0, kk + 1):
            cn = nc[j] if j < len(nc) else sp.Integer(0)
            if cn != 0 and (kk - j) < len(inv):
                s += cn * inv[kk - j]
        out[k] = sp.cancel(s)
    return out


def series_mul(A, B, lo, hi):
    out = {}
    for ka, va in A.items():
        if va == 0:
            continue
        for kb, vb in B.items():
            k = ka + kb
            if lo <= k <= hi and vb != 0:
                out[k] = out.get(k, 0) + va * vb
    return out


def series_pow_list(base, maxpow, lo, hi):
    """base as dict; returns [1, base, base^2, ...] up to maxpow."""
    res = [{0: sp.Integer(1)}]
    for _ in range(maxpow):
        res.append(series_mul(res[-1], base, lo, hi))
    return res


def invert_series(A, lo_result, hi_result):
    """1/A for a Laurent dict with exact leading term."""
    m = min(k for k, v in A.items() if v != 0)
    unit = {k - m: v for k, v in A.items()}
    order = hi_result + m + 1
    inv = {0: sp.cancel(1 / unit[0])}
    for k in range(1, order + 1):
        s = sp.Integer(0)
        for j in range(1, k + 1):
            if j in unit and (k - j) in inv:
                s += unit[j] * inv[k - j]
        inv[k] = sp.cancel(-s * inv[0])
    return {k - m: v for k, v in inv.items() if lo_result <= k - m <= hi_result}


# ---------------------------------------------------------------- recursion

class Curve:
    def __init__(self, x, y_taylor, z, ram):
        """ram: list of (a, sigma expression in z).

        y_taylor(a, order) must return the Taylor coefficients [c1, c2, ...] of
        y at a with the constant dropped; y enters the recursion only through
        y(sigma(z)) - y(z), so the constant (and any branch) cancels.
        """
        self.x, self.z, self.ram = x, z, ram
        self.y_taylor = y_taylor
        self.dx = sp.cancel(sp.diff(x, z))


def pole_order_at(expr, z, a):
    e = sp.cancel(sp.together(expr.subs(z, a + t)))
    _, den = sp.fraction(e)
    cs = sp.Poly(den, t).all_coeffs()[::-1]
    m = 0
    while m < len(cs) and cs[m] == 0:
        m += 1
    return m


def kernel_G(curve, a, sigma, hi):
    """G(t) = 1/((y - y(sigma))(t) * x'(a+t)) as Laurent dict on [-2, hi].

    The denominator sign goes with the omega01 = +y dx convention; flipping it
    to (y(sigma) - y) multiplies every omega_{g,n} by (-1)^n.  The +y dx sign
    is the one under which the expansion coefficients of the x = z + 1/z,
    y = log z correlators reproduce the stationary Gromov-Witten numbers
    <tau_{2d-2}(omega)>_{0,1} = 1/(d!)^2 and <tau_2(omega)>_{1,1} = 1/24.
    """
    z = curve.z
    sig_shift = laurent_coeffs(sigma - a, z, a, 0, hi + 4)
    ycoef = curve.y_taylor(a, hi + 5)
    pows = series_pow_list(sig_shift, len(ycoef), 0, hi + 4)
    ydiff = {}
    for k, c in enumerate(ycoef, start=1):
        for kk, vv in pows[k].items():
            ydiff[kk] = ydiff.get(kk, 0) - c * vv
        ydiff[k] = ydiff.get(k, 0) + c
    xp = laurent_coeffs(curve.dx, z, a, -2, hi + 4)
    prod = series_mul(ydiff, xp, -4, hi + 4)
    return invert_series(prod, -2, hi)


def residue_term(curve, a, sigma, W, w):
    """Res_{z=a} [ (1/(w-z) - 1/(w-a)) / ((y(sig)-y) dx) * W(z) ].

    W is a rational expression in z (and spectator symbols).
    """
    z = curve.z
    mW = pole_order_at(W, z, a)
    G = kernel_G(curve, a, sigma, mW)
    Wc = laurent_coeffs(W, z, a, -mW, 1)
    GW = series_mul(G, Wc, -mW - 2, -2)
    # (1/(w-z) - 1/(w-a)) = sum_{k>=1} t^k / (w-a)^{k+1}
    res = sp.Integer(0)
    for k in range(1, mW + 3):
        c = GW.get(-1 - k)
        if c is not None and c != 0:
            res += c / (w - a) ** (k + 1)
    return res


def omega02(u, v):
    return 1 / (u - v) ** 2


def eval_omega(store, g, args):
    n = len(args)
    if g == 0 and n == 2:
        return omega02(args[0], args[1])
    if g == 0 and n < 2:
        raise RuntimeError("unstable (0,<=1) must not appear")
    return store[(g, n)](*args)


def tr_step(curve, store, g, syms):
    z = curve.z
    w, passive = syms[0], list(syms[1:])
    n = len(passive)
    total = sp.Integer(0)
    for a, sigma in curve.ram:
        big = sp.Integer(0)
        if g >= 1:
            big += eval_omega(store, g - 1, [z, sigma] + passive)
        for g1 in range(0, g + 1):
            g2 = g - g1
            for r in range(0, n + 1):
                for Z1 in itertools.combinations(range(n), r):
                    Z2 = [i for i in range(n) if i not in Z1]
                    if (g1 == 0 and len(Z1) == 0) or (g2 == 0 and len(Z2) == 0):
                        continue
                    w1 = eval_omega(store, g1, [z] + [passive[i] for i in Z1])
                    w2 = eval_omega(store, g2, [sigma] + [passive[i] for i in Z2])
                    big += w1 * w2
        # every bracket term carries exactly one sigma-slot; substituting the
        # deck transformation pulls back that slot's differential, so the
        # Jacobian sigma'(z) multiplies the scalar part once.
        big = sp.diff(sigma, z) * big
        total += residue_term(curve, a, sigma, sp.cancel(sp.together(big)), w)
    return sp.cancel(sp.together(total))


# ---------------------------------------------------------------- output

def pole_decompose(expr, syms, points):
    terms = {(): expr}
    for s in syms:
        new_terms = {}
        for key, e in terms.items():
            e = sp.apart(sp.cancel(e), s)
            for term in sp.Add.make_args(e):
                num, den = sp.fraction(sp.together(term))
                poly = sp.Poly(den, s)
                if poly.degree() == 0:
                    raise RuntimeError(f"polynomial part in {s}: {term}")
                found = None
                for pi, p in enumerate(points):
                    for k in range(1, 40):
                        if sp.expand(den - poly.LC() * (s - p) ** k) == 0:
                            found = (pi, k)
                            break
                    if found:
                        break
                if not found:
                    raise RuntimeError(f"unrecognized denominator {den}")
                pi, k = found
                assert k >= 2, f"residue term found: {term}"
                coeff = sp.cancel(num / poly.LC())
                if s in coeff.free_symbols:
                    raise RuntimeError("mixed term after apart")
                nk = key + ((pi, k),)
                new_terms[nk] = sp.cancel(new_terms.get(nk, 0) + coeff)
        terms = new_terms
    return {k: v for k, v in terms.items() if sp.cancel(v) != 0}


def show(name, dec):
    print(f"--- {name}")
    for key in sorted(dec.keys()):
        print(f"    {key} : {sp.nsimplify(dec[key])}")
    sys.stdout.flush()


# ---------------------------------------------------------------- curves

def run_airy():
    z = sp.Symbol('z')
    curve = Curve(x=z ** 2,
                  y_taylor=lambda a, order: [sp.Integer(1)] + [sp.Integer(0)] * (order - 1),
                  z=z, ram=[(sp.Integer(0), -z)])
    pts = [sp.Integer(0)]
    syms = sp.symbols('w s1 s2 s3')
    store = {}

    o03 = tr_step(curve, store, 0, list(syms[:3]))
    store[(0, 3)] = sp.Lambda(tuple(syms[:3]), o03)
    show("airy w03", pole_decompose(o03, syms[:3], pts))

    o11 = tr_step(curve, store, 1, [syms[0]])
    store[(1, 1)] = sp.Lambda((syms[0],), o11)
    show("airy w11", pole_decompose(o11, syms[:1], pts))

    o04 = tr_step(curve, store, 0, list(syms[:4]))
    store[(0, 4)] = sp.Lambda(tuple(syms[:4]), o04)
    show("airy w04", pole_decompose(o04, syms[:4], pts))

    o12 = tr_step(curve, store, 1, list(syms[:2]))
    store[(1, 2)] = sp.Lambda(tuple(syms[:2]), o12)
    show("airy w12", pole_decompose(o12, syms[:2], pts))

    o21 = tr_step(curve, store, 2, [syms[0]])
    show("airy w21", pole_decompose(o21, syms[:1], pts))


def log_taylor(a, order):
    # Taylor coefficients of log z at a, constant dropped
    return [sp.Rational((-1) ** (k - 1), k) / a ** k for k in range(1, order + 1)]


def run_gwp1():
    z = sp.Symbol('z')
    curve = Curve(x=z + 1 / z, y_taylor=log_taylor, z=z,
                  ram=[(sp.Integer(1), 1 / z), (sp.Integer(-1), 1 / z)])
    pts = [sp.Integer(1), sp.Integer(-1)]
    syms = sp.symbols('w s1 s2 s3')
    w = syms[0]
    store = {}

    # Passive slots are frozen at rational sample points; the printed values
    # are pole-part slices in the remaining variable w.
    P1, P2, P3 = sp.Integer(3), sp.Integer(5), sp.Integer(7)

    o03 = tr_step(curve, store, 0, list(syms[:3]))
    store[(0, 3)] = sp.Lambda(tuple(syms[:3]), o03)
    show("gwp1 w03(w,3,5)", pole_decompose(o03.subs({syms[1]: P1, syms[2]: P2}), syms[:1], pts))

    o11 = tr_step(curve, store, 1, [w])
    store[(1, 1)] = sp.Lambda((w,), o11)
    show("gwp1 w11", pole_decompose(o11, syms[:1], pts))
    tau_extract(curve, o11, w)

    o12 = tr_step(curve, store, 1, list(syms[:2]))
    store[(1, 2)] = sp.Lambda(tuple(syms[:2]), o12)
    show("gwp1 w12(w,3)", pole_decompose(o12.subs({syms[1]: P1}), syms[:1], pts))

    o21 = tr_step(curve, store, 2, [w])
    show("gwp1 w21", pole_decompose(o21, syms[:1], pts))

    o04 = tr_step(curve, store, 0, [w, P1, P2, P3])
    show("gwp1 w04(w,3,5,7)", pole_decompose(o04, syms[:1], pts))

    # LogTR correction for omega_{g,1}: at both L-points dx and dy have poles,
    # so the added residues must vanish; check at z=0 for g=1,2.
    dx = sp.diff(curve.x, z)
    dxop = lambda h: sp.cancel(sp.diff(h, z) / dx)
    a = sp.Integer(0)
    alpha = sp.Integer(1)  # Res_0 dz/z
    # csch(v) - 1/v = -v/6 + 7 v^3/360 - ...
    csch_coeff = {1: sp.Rational(-1, 6), 3: sp.Rational(7, 360)}
    for g in [1, 2]:
        pw = 2 * g - 1
        f = sp.log(z - a)
        h = f
        for _ in range(pw):
            h = dxop(h)
        expr = sp.diff(csch_coeff[pw] * h / (2 * alpha) ** pw, z)
        ker_t = laurent_coeffs(sp.cancel(expr), z, a, -30, 8)
        res = sp.Integer(0)
        for k in range(1, 30):
            c = ker_t.get(-1 - k)
            if c:
                res += c / (w - a) ** (k + 1)
        print(f"gwp1 logtr g={g} contribution at 0: {sp.cancel(res)}  (expect 0)")

def tau_extract(curve, o11, w):
    # tau extraction: omega_{g,n} ~ (-1)^n sum <prod tau> prod (a_i+1)! x^{-a_i-2} dx
    z = curve.z
    dx = sp.diff(curve.x, z)
    v, wch = sp.symbols('v wch')
    wser = v
    for _ in range(10):
        wser = sp.expand(v * (1 + wser ** 2))
        wser = sp.series(wser, v, 0, 10).removeO()
    F = sp.cancel(o11 / dx.subs(z, w))
    Fv = sp.cancel(F.subs(w, 1 / wch)).subs(wch, wser)
    ser = sp.series(sp.expand(Fv * (-1 / v ** 2)), v, 0, 7).removeO()
    ser = sp.expand(ser)
    # omega_{g,n}/prod dv_i = sum <prod tau_{a_i}> prod (a_i+1)! v_i^{a_i}
    # (the (-1)^n of the dictionary cancels against dx = -dv/v^2 per slot)
    print("gwp1 omega11 dv-coefficients in v=1/x:")
    for k in range(0, 7):
        print(f"   [v^{k}] = {sp.nsimplify(ser.coeff(v, k))}")
    for a in [0, 2, 4]:
        taua = sp.cancel(ser.coeff(v, a) / sp.factorial(a + 1))
        print(f"gwp1 <tau_{a}>_(1,1) = {taua}")

    E = sp.log(1 / (1 + wch ** 2))  # y - log x on the z->oo branch
    Ev = sp.series(E.subs(wch, wser), v, 0, 6).removeO()
    ser01 = sp.expand(sp.series(sp.expand(Ev * (-1 / v ** 2)), v, 0, 5).removeO())
    print("gwp1 (omega01 - log x dx) dv-coefficients:")
    for k in range(0, 5):
        print(f"   [v^{k}] = {sp.nsimplify(ser01.coeff(v, k))}")
    for a in [0, 2]:
        taua = sp.cancel(ser01.coeff(v, a) / sp.factorial(a + 1))
        print(f"gwp1 <tau_{a}>_(0,1) = {taua}   (expect 1/(d!)^2, a=2d-2)")
    sys.stdout.flush()


def run_checks():
    w = sp.Symbol('w')
    ser = w
    for _ in range(6):
        ser = sp.series(sp.expand(w - ser ** 2), w, 0, 6).removeO()
    print(f"reversion of t+t^2: {sp.expand(ser)}")


if __name__ == '__main__':
    which = sys.argv[1] if len(sys.argv) > 1 else 'all'
    if which in ('checks', 'all'):
        run_checks()
    if which in ('airy', 'all'):
        run_airy()
    if which in ('gwp1', 'all'):
        run_gwp1()
