#!/usr/bin/env python3
"""Reference values computed with mpmath; writes tests/data/oracle_values.json.

Run from the repository root:  python3 tests/oracle/generate_oracles.py
"""
import json
import math
import os
import sys

import mpmath as mp

mp.mp.dps = 20

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "data", "oracle_values.json")


def f(x):
    return float(x)


def bessel_table():
    rows = []
    for nu in [0.5, 1.5, 2, 5, 10.25, 50.5, 120, 500]:
        for z in [0.01, 1, 10, 100, 1000]:
            nu_m, z_m = mp.mpf(nu), mp.mpf(z)
            i = mp.besseli(nu_m, z_m)
            k = mp.besselk(nu_m, z_m)
            di = mp.besseli(nu_m - 1, z_m) - nu_m / z_m * i
            dk = -mp.besselk(nu_m - 1, z_m) - nu_m / z_m * k
            rows.append({"nu": nu, "z": z, "log_i": f(mp.log(i)), "log_k": f(mp.log(k)),
                         "di_over_i": f(di / i), "dk_over_k": f(dk / k)})
    return rows


def gamma_zeta():
    g = [{"x": x, "gamma": f(mp.gamma(x)), "log_gamma": f(mp.log(abs(mp.gamma(x))))}
         for x in [0.5, 1, 3.7, 10.1, -2.5, -0.3, 150.5]]
    z = [{"s": s, "zeta": f(mp.zeta(s))} for s in [-3.5, -1, 0, 0.5, 2, 3, 4.5, 10, 17]]
    e = [{"s": s, "eta": f(mp.altzeta(s))} for s in [0, 0.5, 1, 2, 3.5]]
    return g, z, e


def lambda_table():
    out = []
    for mu, nu in [(0, 1), (1, 1), (2, 2), (3, 1), (1.5, 3), (4, 2)]:
        v = mp.quad(lambda u: u**mu / (mp.e**u + 1)**nu, [0, 1, 10, mp.inf])
        out.append({"mu": mu, "nu": nu, "value": f(v)})
    return out


def bc_alpha_beta(pol, bc, D):
    # (alpha, beta) per polarization and boundary condition
    if pol == "te":
        return (1, 0) if bc == "pc" else (mp.mpf(4 - D) / 2, 1)
    return (mp.mpf(D - 2) / 2, 1) if bc == "pc" else (1, 0)


def degeneracy(pol, l, D):
    if pol == "tm":
        return (2 * l + D - 2) * math.factorial(l + D - 3) // (math.factorial(D - 2) * math.factorial(l))
    return (l * (l + D - 2) * (2 * l + D - 2) * math.factorial(l + D - 4)
            // (math.factorial(D - 3) * math.factorial(l + 1)))


def robin(alpha, beta, nu, z, kind):
    if kind == "i":
        b = mp.besseli(nu, z)
        db = mp.besseli(nu - 1, z) - nu / z * b
    else:
        b = mp.besselk(nu, z)
        db = -mp.besselk(nu - 1, z) - nu / z * b
    return alpha * b + beta * z * db


def m_ratio(pol, bc, D, l, a1, a2, xi):
    nu = l + mp.mpf(D - 2) / 2
    a_in, b_in = bc_alpha_beta(pol, bc[0], D)
    a_out, b_out = bc_alpha_beta(pol, bc[1], D)
    num = robin(a_in, b_in, nu, a1 * xi, "i") * robin(a_out, b_out, nu, a2 * xi, "k")
    den = robin(a_in, b_in, nu, a1 * xi, "k") * robin(a_out, b_out, nu, a2 * xi, "i")
    return num / den


def static_m(pol, bc, D, l, a1, a2):
    nu = l + mp.mpf(D - 2) / 2
    a_in, b_in = bc_alpha_beta(pol, bc[0], D)
    a_out, b_out = bc_alpha_beta(pol, bc[1], D)
    # small-argument limit of the Robin combinations
    ci = (a_in + b_in * nu) / (a_in - b_in * nu)
    co = (a_out - b_out * nu) / (a_out + b_out * nu)
    return ci * co * (mp.mpf(a1) / a2) ** (2 * nu)


def l_sum(term, tol):
    total = mp.mpf(0)
    l = 1
    quiet = 0
    while quiet < 4:
        t = term(l)
        total += t
        quiet = quiet + 1 if abs(t) <= tol * abs(total) else 0
        l += 1
    return total


def zero_T(D, bc, eps, pol):
    a1, a2 = mp.mpf(1), 1 + mp.mpf(eps)

    def term(l):
        g = lambda x: mp.log1p(-m_ratio(pol, bc, D, l, a1, a2, x))
        nu = l + (D - 2) / 2.0
        pts = [0, nu / 8, nu / 2, nu, 2 * nu, 4 * nu, 8 * nu + 20, 32 * nu + 60, mp.inf]
        return degeneracy(pol, l, D) * mp.quad(g, pts) / (2 * mp.pi)

    return l_sum(term, mp.mpf(10) ** -16)


def classical(D, bc, eps, pol):
    a1, a2 = mp.mpf(1), 1 + mp.mpf(eps)
    return l_sum(lambda l: degeneracy(pol, l, D) * mp.log1p(-static_m(pol, bc, D, l, a1, a2)) / 2,
                 mp.mpf(10) ** -18)


def free(D, bc, eps, pol, T):
    a1, a2 = mp.mpf(1), 1 + mp.mpf(eps)
    total = classical(D, bc, eps, pol) * T
    p = 1
    while True:
        xi = 2 * mp.pi * p * T
        t = T * l_sum(lambda l: degeneracy(pol, l, D) * mp.log1p(-m_ratio(pol, bc, D, l, a1, a2, xi)),
                      mp.mpf(10) ** -16)
        total += t
        if abs(t) <= mp.mpf(10) ** -16 * abs(total):
            break
        p += 1
    return total


def energies():
    out = []
    cases = [("zero_T", 3, ("pc", "pc"), 1.0, 0.0),
             ("zero_T", 3, ("pc", "ip"), 1.0, 0.0),
             ("zero_T", 4, ("pc", "ip"), 1.0, 0.0),
             ("zero_T", 5, ("ip", "pc"), 1.0, 0.0),
             ("zero_T", 5, ("ip", "ip"), 2.0, 0.0),
             ("classical", 3, ("pc", "pc"), 0.5, 0.0),
             ("classical", 3, ("pc", "ip"), 0.5, 0.0),
             ("classical", 4, ("ip", "pc"), 0.2, 0.0),
             ("classical", 6, ("ip", "ip"), 0.3, 0.0),
             ("free", 3, ("pc", "pc"), 1.0, 0.5),
             ("free", 4, ("pc", "ip"), 1.0, 1.0)]
    for kind, D, bc, eps, T in cases:
        vals = {}
        for pol in ("te", "tm"):
            if kind == "zero_T":
                vals[pol] = zero_T(D, bc, eps, pol)
            elif kind == "classical":
                vals[pol] = classical(D, bc, eps, pol)
            else:
                vals[pol] = free(D, bc, eps, pol, mp.mpf(T))
        out.append({"kind": kind, "D": D, "bc_inner": bc[0], "bc_outer": bc[1], "eps": eps, "T": T,
                    "te": f(vals["te"]), "tm": f(vals["tm"]), "total": f(vals["te"] + vals["tm"])})
        print(out[-1], file=sys.stderr)
    return out


def plates_and_pfa():
    out = []
    for D in [3, 4, 5, 6]:
        for mixed in (False, True):
            zt = (D - 1) * mp.gamma(mp.mpf(D + 1) / 2) / (2 ** (D + 1) * mp.pi ** (mp.mpf(D + 1) / 2)) * mp.zeta(D + 1)
            ht = (D - 1) * mp.gamma(mp.mpf(D) / 2) / (2 ** D * mp.pi ** (mp.mpf(D) / 2)) * mp.zeta(D)
            if mixed:
                zt *= 1 - mp.mpf(2) ** -D
                ht *= 1 - mp.mpf(2) ** (1 - D)
            else:
                zt, ht = -zt, -ht
            d = mp.mpf("0.1")
            area = 2 * mp.pi ** (mp.mpf(D) / 2) / mp.gamma(mp.mpf(D) / 2)
            out.append({"D": D, "mixed": mixed, "d": 0.1, "T": 0.7,
                        "plate_zero_T": f(zt / d**D), "plate_high_T": f(ht * mp.mpf("0.7") / d ** (D - 1)),
                        "pfa_zero_T": f(area * zt / d**D), "pfa_high_T": f(area * ht * mp.mpf("0.7") / d ** (D - 1))})
    return out


def thermal():
    out = []
    for D in [3, 4, 5, 7]:
        base = mp.gamma(mp.mpf(D + 1) / 2) / mp.gamma(mp.mpf(D) / 2) * mp.zeta(D + 1) / mp.sqrt(mp.pi)
        out.append({"D": D,
                    "pc_te": f(-D * (D - 1) / 2 * base), "pc_tm": f(D * (D - 1) * base),
                    "ip_te": f(mp.mpf(D * (D - 1)) / (D - 2) * base), "ip_tm": f(-D * base),
                    "pfa_force": f(-2 * (D - 1) * base),
                    "exact_force_pc": f(-mp.mpf(D * D * (D - 1)) / 2 * base),
                    "exact_force_ip": f(-mp.mpf(D * D) / (D - 2) * base)})
    return out


def main():
    g, z, e = gamma_zeta()
    data = {
        "generator": "tests/oracle/generate_oracles.py",
        "mpmath_version": mp.__version__,
        "dps": mp.mp.dps,
        "bessel": bessel_table(),
        "gamma": g,
        "zeta": z,
        "eta": e,
        "lambda": lambda_table(),
        "plates": plates_and_pfa(),
        "thermal_leading": thermal(),
        "degeneracy": [{"D": 10, "l": 50, "te": str(degeneracy("te", 50, 10)), "tm": str(degeneracy("tm", 50, 10))},
                       {"D": 16, "l": 37, "te": str(degeneracy("te", 37, 16)), "tm": str(degeneracy("tm", 37, 16))}],
        "energies": energies(),
    }
    with open(OUT, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
