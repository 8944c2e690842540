#!/usr/bin/env python3
"""Assembly of the Kaula expansion vs the paper's printed secular/resonant forms."""
import math
from math import sqrt, sin, cos, pi, factorial

def binom_gen(a, k):
    if k < 0: return 0.0
    r = 1.0
    for j in range(k):
        r *= (a - j) / (j + 1)
    return r

def F_nmp(n, m, p, inc):
    k = (n - m) // 2
    total = 0.0
    for w in range(0, min(p, k) + 1):
        pref = factorial(2*n - 2*w) / (factorial(w) * factorial(n - w)
                * factorial(n - m - 2*w) * 2.0**(2*n - 2*w))
        s_sum = 0.0
        for s in range(0, m + 1):
            c_sum = 0.0
            for c in range(0, n - m - 2*w + s + 1):
                t = p - w - c
                if t < 0 or t > m - s: continue
                c_sum += binom_gen(n - m - 2*w + s, c) * binom_gen(m - s, t) * (-1.0)**(c - k)
            s_sum += binom_gen(m, s) * cos(inc)**s * c_sum
        total += pref * sin(inc)**(n - m - 2*w) * s_sum
    return total

def G_npq(n, p, q, e, kmax=12):
    if p <= n / 2: pp, qp = p, q
    else: pp, qp = n - p, -q
    beta = e / (1 + sqrt(1 - e*e))
    x = (n - 2*pp + qp) * e / (2*beta) if beta != 0 else 0.0
    total = 0.0
    for k in range(0, kmax + 1):
        h = k + qp if qp > 0 else k
        P = sum(binom_gen(2*pp - 2*n, h - r) * ((-1.0)**r / factorial(r)) * x**r for r in range(h+1))
        h = k if qp > 0 else k - qp
        Q = sum(binom_gen(-2*pp, h - r) * (1.0 / factorial(r)) * x**r for r in range(h+1))
        total += P * Q * beta**(2*k)
    return (-1.0)**abs(q) * (1 + beta*beta)**n * beta**abs(q) * total

print("G_310 vs 1+2e^2+239/64 e^4:")
for e in (0.05, 0.1, 0.3):
    print(f"  e={e}: {G_npq(3,1,0,e):.8f} vs {1+2*e*e+239/64*e**4:.8f}")
print("G_31-1 vs e(1-e^2)^-5/2? and other secular closed forms:")
for e in (0.05, 0.2):
    print(f"  e={e}: G_31-1={G_npq(3,1,-1,e):.8f};  e(1-e^2)^-5/2={e*(1-e*e)**-2.5:.8f}")
    print(f"        G_41-2={G_npq(4,1,-2,e):.8f};  (3e^2/2)(1-e^2)^-7/2={1.5*e*e*(1-e*e)**-3.5:.8f}")
    print(f"        G_420 ={G_npq(4,2,0,e):.8f};  (1+3e^2/2)(1-e^2)^-7/2={(1+1.5*e*e)*(1-e*e)**-3.5:.8f}")

# ---- full assembly: R_earth term sums vs printed expansions ----
mu, RE = 398600.4418, 6378.1363
# table 1 (printed J values, 1e-6 units) and lambdas in deg
J = {(2,0):1082.6261,(2,1):0.001807,(2,2):1.81559,(3,0):-2.53241,(3,1):2.20947,
     (3,2):0.37445,(3,3):0.22139,(4,0):-1.619331,(4,1):0.67864,(4,2):0.16759,
     (4,3):0.060421,(4,4):0.007644}
lam = {(2,0):0,(2,1):-81.5116,(2,2):75.0715,(3,0):0,(3,1):186.9692,(3,2):72.8111,
       (3,3):80.9928,(4,0):0,(4,1):41.4529,(4,2):121.0589,(4,3):56.1784,(4,4):-14.6491}

def psi(n,m,p,q, M, om, Om, th):
    return (n-2*p)*om + (n-2*p+q)*M + m*(Om-th) - m*math.radians(lam[(n,m)])

def assemble(kind, a, e, inc, M, om, Om, th, qmax=8):
    """kind: 'sec', 'res11', 'res21'. Sum of matching terms of R_earth."""
    tot = 0.0
    for n in range(2, 5):
        for m in range(0, n+1):
            for p in range(0, n+1):
                for q in range(-qmax, qmax+1):
                    if kind == 'sec':
                        ok = (m == 0 and n-2*p+q == 0)
                    elif kind == 'res11':
                        ok = (m > 0 and n-2*p+q == m)
                    else:
                        ok = (m > 0 and 2*(n-2*p+q) == m)
                    if not ok: continue
                    Jv = J[(n,m)]*1e-6
                    coeff = mu*RE**n/a**(n+1) * Jv * F_nmp(n,m,p,inc) * G_npq(n,p,q,e)
                    ang = psi(n,m,p,q,M,om,Om,th)
                    tot += coeff * (cos(ang) if (n-m)%2==0 else sin(ang))
    return tot

def printed_sec(a, e, inc, om):
    s, c = sin(inc), cos(inc)
    J2, J3, J4 = J[(2,0)]*1e-6, J[(3,0)]*1e-6, J[(4,0)]*1e-6
    r = mu*RE**2*J2/a**3*(0.75*s*s-0.5)*(1-e*e)**-1.5
    r += 2*mu*RE**3*J3/a**4*(15/16*s**3-0.75*s)*e*(1-e*e)**-2.5*sin(om)
    r += mu*RE**4*J4/a**5*((-35/32*s**4+15/16*s*s)*1.5*e*e*(1-e*e)**-3.5*cos(2*om)
        +(105/64*s**4-15/8*s*s+3/8)*(1+1.5*e*e)*(1-e*e)**-3.5)
    return r

def printed_res11(a, e, inc, M, om, Om, th):
    s, c = sin(inc), cos(inc)
    l = lambda nm: math.radians(lam[nm])
    r = 0.0
    J22,J21,J31,J32,J33,J41,J42,J43,J44 = (J[(2,2)]*1e-6,J[(2,1)]*1e-6,J[(3,1)]*1e-6,
        J[(3,2)]*1e-6,J[(3,3)]*1e-6,J[(4,1)]*1e-6,J[(4,2)]*1e-6,J[(4,3)]*1e-6,J[(4,4)]*1e-6)
    r += mu*RE**2*J22/a**3*(0.75*(1+c)**2*(1-2.5*e*e)*cos(2*(M-th+om+Om-l((2,2))))
         + 27/8*e*e*s*s*cos(2*(M-th+Om-l((2,2)))))
    r += mu*RE**2*J21/a**3*(0.75*s*(1+c)*(-e/2)*cos(M-th+2*om+Om-l((2,1)))
         + 1.5*e*(-1.5*s*c)*cos(M-th+Om-l((2,1))))
    r += mu*RE**3*J31/a**4*(-15/16*s*s*(1+c)*(e*e/8)*cos(M-th+3*om+Om-l((3,1)))
         + (15/16*s*s*(1+3*c)-0.75*(1+c))*(1+2*e*e)*cos(M-th+om+Om-l((3,1)))
         + (15/16*s*s*(1-3*c)-0.75*(1-c))*(11*e*e/8)*cos(M-th-om+Om-l((3,1))))
    r += mu*RE**3*J32/a**4*(-15/8*s*(1+c)**2*e*sin(2*M-2*th+3*om+2*Om-2*l((3,2)))
         + 45/8*s*(1-2*c-3*c*c)*e*sin(2*M-2*th+om+2*Om-2*l((3,2))))
    r += mu*RE**3*J33/a**4*(15/8*(1+c)**3*(1-6*e*e)*cos(3*(M-th+om+Om-l((3,3))))
         + 45/8*s*s*(1+c)*(53*e*e/8)*cos(3*M-3*th+om+3*Om-3*l((3,3))))
    r += mu*RE**4*J41/a**5*((35/16*s**3*(1+2*c)-15/8*(1+c)*s)*(e/2)*sin(M-th+2*om+Om-l((4,1)))
         + c*(15/4*s-105/16*s**3)*(5*e/2)*sin(M-th+Om-l((4,1))))
    r += mu*RE**4*J42/a**5*(-105/32*s*s*(1+c)**2*(e*e/2)*cos(2*(M-th+2*om+Om-l((4,2))))
         + (105/8*s*s*c*(1+c)-15/8*(1+c)**2)*(1+e*e)*cos(2*(M-th+om+Om-l((4,2))))
         + (105/16*s*s*(1-3*c*c)-15/4*s*s)*(5*e*e)*cos(2*(M-th+Om-l((4,2)))))
    r += mu*RE**4*J43/a**5*(105/16*s*(1+c)**3*(-1.5*e)*sin(3*M-3*th+4*om+3*Om-3*l((4,3)))
         + 105/8*s*(1-3*c*c-2*c**3)*(4.5*e)*sin(3*M-3*th+2*om+3*Om-3*l((4,3))))
    r += mu*RE**4*J44/a**5*(105/16*(1+c)**4*(1-11*e*e)*cos(4*(M-th+om+Om-l((4,4))))
         + 105/4*s*s*(1+c)**2*(53*e*e/4)*cos(4*M-4*th+2*om+4*Om-4*l((4,4))))
    return r

def printed_res21(a, e, inc, M, om, Om, th):
    s, c = sin(inc), cos(inc)
    l = lambda nm: math.radians(lam[nm])
    J22,J32,J42,J44 = J[(2,2)]*1e-6,J[(3,2)]*1e-6,J[(4,2)]*1e-6,J[(4,4)]*1e-6
    r = 0.0
    r += mu*RE**2*J22/a**3*(0.75*(1+c)**2*(-e/2+e**3/16)*cos(M-2*th+2*om+2*Om-2*l((2,2)))
        + 1.5*s*s*(1.5*e+27/16*e**3)*cos(M-2*th+2*Om-2*l((2,2)))
        + 0.75*(1-c)**2*(67*e**3/48)*cos(M-2*th-2*om+2*Om-2*l((2,2))))
    r += mu*RE**3*J32/a**4*(15/8*s*(1+c)**2*(e*e/8+e**4/48)*sin(M-2*th+3*om+2*Om-2*l((3,2)))
        + 15/8*s*(1-2*c-3*c*c)*(1+2*e*e+239/64*e**4)*sin(M-2*th+om+2*Om-2*l((3,2)))
        - 15/8*s*(1+2*c-3*c*c)*(11*e*e/8+49/16*e**4)*sin(M-2*th-om+2*Om-2*l((3,2)))
        - 15/8*s*(1-c)**2*(131/128*e**4)*sin(M-2*th-3*om+2*Om-2*l((3,2))))
    r += mu*RE**4*J42/a**5*(105/32*s*s*(1+c)**2*(19/48*e**3)*cos(M-2*th+4*om+2*Om-2*l((4,2)))
        + (105/8*s*s*c*(1+c)-15/8*(1+c)**2)*(e/2+33/16*e**3)*cos(M-2*th+2*om+2*Om-2*l((4,2)))
        + (105/16*s*s*(1-3*c*c)-15/4*s*s)*(5*e/2+135/16*e**3)*cos(M-2*th+2*Om-2*l((4,2)))
        - (105/8*s*s*c*(1-c)+15/8*(1-c)**2)*(49/48*e**3)*cos(M-2*th-2*om+2*Om-2*l((4,2))))
    r += mu*RE**4*J44/a**5*(105/16*(1+c)**4*(e*e/2-e**4/3)*cos(2*(M-2*th+2*om+2*Om-2*l((4,4))))
        + 105/4*s*s*(1+c)**2*(1+e*e+65/16*e**4)*cos(2*(M-2*th+om+2*Om-2*l((4,4))))
        + 315/8*s**4*(5*e*e+155/12*e**4)*cos(2*(M-2*th+2*Om-2*l((4,4))))
        + 105/4*s*s*(1-c)**2*(67/48*e**4)*cos(2*(M-2*th-om+2*Om-2*l((4,4)))))
    return r

import random
random.seed(7)
print("\n== secular assembly vs printed (rel diff; expect O(e^3)-ish scaled) ==")
for e in (0.01, 0.1, 0.3):
    a = 42164.0; inc, M, om, Om, th = 0.7, 1.1, 0.45, 2.2, 0.9
    got = assemble('sec', a, e, inc, M, om, Om, th)
    ref = printed_sec(a, e, inc, om)
    print(f"  e={e}: assembled={got:.10e} printed={ref:.10e} diff={abs(got-ref):.2e}")
print("== 1:1 assembly vs printed (O(e^2) truncation) ==")
for e in (0.005, 0.05, 0.2):
    a = 42164.0
    for _ in range(2):
        inc, M, om, Om, th = random.uniform(0.05,3.0), random.uniform(0,6), random.uniform(0,6), random.uniform(0,6), random.uniform(0,6)
        got = assemble('res11', a, e, inc, M, om, Om, th)
        ref = printed_res11(a, e, inc, M, om, Om, th)
        print(f"  e={e}: diff={abs(got-ref):.3e}  (scale {abs(ref):.3e})")
print("== 2:1 assembly vs printed (O(e^4) truncation) ==")
for e in (0.005, 0.1, 0.3):
    a = 26561.8
    for _ in range(2):
        inc, M, om, Om, th = random.uniform(0.05,3.0), random.uniform(0,6), random.uniform(0,6), random.uniform(0,6), random.uniform(0,6)
        got = assemble('res21', a, e, inc, M, om, Om, th)
        ref = printed_res21(a, e, inc, M, om, Om, th)
        print(f"  e={e}: diff={abs(got-ref):.3e}  (scale {abs(ref):.3e})")
