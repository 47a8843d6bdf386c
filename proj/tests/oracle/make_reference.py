#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp from mpmath at 40 significant digits.

The values here are computed without any code from the C++ library, so the
unit tests compare two independent implementations.
"""
import pathlib

import mpmath as mp

mp.mp.dps = 40

OUT = pathlib.Path(__file__).resolve().parent.parent / "reference_values.hpp"


def r(v):
    return mp.nstr(mp.mpf(v), 20, min_fixed=-1, max_fixed=-1) if v != 0 else "0.0"


def bessel_rows():
    nus = [0, mp.mpf("5e-6"), mp.mpf("0.25"), mp.mpf("0.5"), mp.mpf("0.65"), 1 - mp.mpf("1e-5"),
           1 - mp.mpf("5e-6"), 1, 1 + mp.mpf("5e-6"), 1 + mp.mpf("1e-5"), mp.mpf("1.5"), 2,
           mp.mpf("2.25"), mp.mpf("3.35"), 4, mp.mpf("5.5"), mp.mpf("8.15")]
    xs = [mp.mpf("0.01"), mp.mpf("0.1"), mp.mpf("0.5"), 1, mp.mpf("1.999"), 2, mp.mpf("2.001"),
          5, 10, 20, 45, 80]
    k_rows, i_rows = [], []
    for nu in nus:
        for x in xs:
            k_rows.append((nu, x, mp.besselk(nu, x)))
            if x <= 45:
                i_rows.append((nu, x, mp.besseli(nu, x)))
    return k_rows, i_rows


def hyp_rows():
    rows = []
    for a in [mp.mpf("0.5"), 1, mp.mpf("1.65"), mp.mpf("2.25"), mp.mpf("7.5")]:
        for x in [0, mp.mpf("0.3"), 1, mp.mpf("4.5"), 16, 100, -mp.mpf("2.5"), -20]:
            rows.append((a, x, mp.hyp0f1(a, x)))
    crows = []
    for a in [mp.mpf("1.25"), mp.mpf("2.5")]:
        for z in [mp.mpc("0.3", "0.4"), mp.mpc("-1.2", "2.0"), mp.mpc("3", "-4")]:
            v = mp.hyp0f1(a, z)
            crows.append((a, z.real, z.imag, v.real, v.imag))
    return rows, crows


def ladder_norm_sq(p, j, n):
    nu = mp.mpf(p) / 2 + j
    odd = n % 2
    return mp.mpf(2) ** n * mp.factorial((n - odd) // 2) * mp.rf(nu, (n + odd) // 2)


def coherent_norm(p, j, alpha):
    total, n = mp.mpf(0), 0
    x = abs(alpha) ** 2
    while True:
        term = x ** n / ladder_norm_sq(p, j, n)
        total += term
        if n > 10 and term < mp.mpf(10) ** -45 * total:
            return total
        n += 1


def coherent_overlap(p, j, ap, a):
    total, n = mp.mpc(0), 0
    z = mp.conj(ap) * a
    while True:
        term = z ** n / ladder_norm_sq(p, j, n)
        total += term
        if n > 10 and abs(term) < mp.mpf(10) ** -45 * abs(total):
            break
        n += 1
    return total / mp.sqrt(coherent_norm(p, j, ap) * coherent_norm(p, j, a))


def coherent_rows():
    rows, orows = [], []
    for p in ["1.3", "2", "2.5", "4.7"]:
        for j in [0, 1, 3]:
            for a in [mp.mpc("0.3", 0), mp.mpc("0.6", "-0.8"), mp.mpc("-2", "1"), mp.mpc("0", "4")]:
                rows.append((mp.mpf(p), j, a.real, a.imag, coherent_norm(mp.mpf(p), j, a)))
            ap, a = mp.mpc("0.5", "0.2"), mp.mpc("-0.3", "1.1")
            v = coherent_overlap(mp.mpf(p), j, ap, a)
            orows.append((mp.mpf(p), j, ap.real, ap.imag, a.real, a.imag, v.real, v.imag))
    return rows, orows


def measure(kind, p, j, rho):
    nu = mp.mpf(p) / 2 + j
    x = mp.mpf(rho) ** 2
    order = nu - 1 if kind == "I" else nu
    return 4 * (x / 2) ** nu * mp.besselk(order, x)


def measure_rows():
    rows = []
    for kind in ["I", "II"]:
        for p in ["1.3", "2", "3", "4.7"]:
            for j in [0, 2]:
                for rho in ["0.001", "0.2", "1", "2.5", "6"]:
                    rows.append((kind, mp.mpf(p), j, mp.mpf(rho), measure(kind, p, j, rho)))
    return rows


def moment_rows():
    rows = []
    for kind in ["I", "II"]:
        for p in ["1.3", "2.5", "3"]:
            for j in [0, 1]:
                for n in [0, 2, 5]:
                    nu = mp.mpf(p) / 2 + j
                    power = 4 * n + 1 if kind == "I" else 4 * n + 3
                    f = lambda rho: rho ** power * measure(kind, p, j, rho)
                    val = mp.quad(f, [0, 1, 3, 6, mp.inf])
                    rows.append((kind, mp.mpf(p), j, n, val))
    return rows


def gamma_rows():
    rows = []
    for x in ["0.1", "0.5", "1", "1.3", "2.75", "7.5", "10", "23.4", "49.5"]:
        x = mp.mpf(x)
        rows.append((x, mp.gamma(x), mp.loggamma(x), mp.digamma(x)))
    prow = []
    for a, m in [("0.65", 3), ("2.25", 10), ("1.5", 40), ("7.35", 80)]:
        prow.append((mp.mpf(a), m, mp.log(mp.rf(mp.mpf(a), m))))
    return rows, prow


def emit():
    k_rows, i_rows = bessel_rows()
    h_rows, hc_rows = hyp_rows()
    c_rows, o_rows = coherent_rows()
    g_rows, p_rows = gamma_rows()
    m_rows = measure_rows()
    mo_rows = moment_rows()
    out = ["// Generated by tests/oracle/make_reference.py (mpmath, 40 digits). Do not edit.",
           "#pragma once", "", "namespace ref {", ""]

    def table(decl, rows, fmt):
        out.append(f"inline constexpr {decl}[] = {{")
        for row in rows:
            out.append("    {" + fmt(row) + "},")
        out.append("};")
        out.append("")

    out.append("struct Triple { double a, b, value; };")
    out.append("struct ComplexHyp { double a, zr, zi, re, im; };")
    out.append("struct Norm { double p; int j; double ar, ai, value; };")
    out.append("struct Overlap { double p; int j; double apr, api, ar, ai, re, im; };")
    out.append("struct Gamma { double x, gamma, log_gamma, digamma; };")
    out.append("struct Poch { double a; int m; double log_value; };")
    out.append("struct Measure { bool kind_one; double p; int j; double rho, value; };")
    out.append("struct Moment { bool kind_one; double p; int j; int n; double value; };")
    out.append("")
    table("Triple bessel_k", k_rows, lambda t: ", ".join(map(r, t)))
    table("Triple bessel_i", i_rows, lambda t: ", ".join(map(r, t)))
    table("Triple hyp0f1", h_rows, lambda t: ", ".join(map(r, t)))
    table("ComplexHyp hyp0f1_complex", hc_rows, lambda t: ", ".join(map(r, t)))
    table("Norm coherent_norm", c_rows,
          lambda t: f"{r(t[0])}, {t[1]}, {r(t[2])}, {r(t[3])}, {r(t[4])}")
    table("Overlap coherent_overlap", o_rows,
          lambda t: f"{r(t[0])}, {t[1]}, " + ", ".join(map(r, t[2:])))
    table("Gamma gamma", g_rows, lambda t: ", ".join(map(r, t)))
    table("Poch log_pochhammer", p_rows, lambda t: f"{r(t[0])}, {t[1]}, {r(t[2])}")
    table("Measure measure", m_rows,
          lambda t: f"{'true' if t[0] == 'I' else 'false'}, {r(t[1])}, {t[2]}, {r(t[3])}, {r(t[4])}")
    table("Moment moment", mo_rows,
          lambda t: f"{'true' if t[0] == 'I' else 'false'}, {r(t[1])}, {t[2]}, {t[3]}, {r(t[4])}")
    out.append("}  // namespace ref")
    OUT.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    emit()
