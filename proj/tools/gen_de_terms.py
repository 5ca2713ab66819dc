#!/usr/bin/env python3
"""Expand the three order-2 equations into monomial lists under data/de/.

Each term is {coeff, z_pow, u_pow, derivs}; derivs lists the derivative order
of every factor of the unknown series (so Y'^2 Y'' is [1, 1, 2]).
"""
import json
import pathlib
import sys

import sympy as sp

z, u = sp.symbols("z u")
Y0, Y1, Y2 = sp.symbols("Y0 Y1 Y2")

# unknown Y = F'; F' -> Y0, F'' -> Y1, F''' -> Y2
FP, FPP, FPPP = Y0, Y1, Y2
FPRIME = (
    9 * FP**2 * FPP**5 * u**6
    + 36 * FP**2 * FPP**3 * FPPP * u**5 * z
    + 144 * FP**2 * FPP**4 * u**5
    - 12 * (21 * z - 1) * FP * FPP**5 * u**5
    + 432 * FP**2 * FPP**2 * FPPP * u**4 * z
    - 48 * (24 * z - 1) * FP * FPP**3 * FPPP * u**4 * z
    + 864 * FP**2 * FPP**3 * u**4
    - 96 * (27 * z - 2) * FP * FPP**4 * u**4
    + 4 * (27 * z - 1) * (15 * z - 1) * FPP**5 * u**4
    + 1728 * FP**2 * FPP * FPPP * u**3 * z
    - 288 * (21 * z - 2) * FP * FPP**2 * FPPP * u**3 * z
    + 10368 * FP * FPPP**2 * u**2 * z**3
    + 16 * (27 * z - 1) * (21 * z - 1) * FPP**3 * FPPP * u**3 * z
    + 2304 * FP**2 * FPP**2 * u**3
    - 288 * (31 * z - 4) * FP * FPP**3 * u**3
    - 64 * (6 * u * z - 162 * z**2 + 33 * z - 1) * FPP**4 * u**3
    + 2304 * FP**2 * FPPP * u**2 * z
    - 2304 * (6 * z - 1) * FP * FPP * FPPP * u**2 * z
    - 192 * (8 * u * z - 54 * z**2 + 29 * z - 1) * FPP**2 * FPPP * u**2 * z
    - 768 * (2 * u + 189 * z - 7) * FPPP**2 * u * z**3
    + 2304 * FP**2 * FPP * u**2
    - 3072 * (3 * z - 1) * FP * FPP**2 * u**2
    - 192 * (24 * u * z - 27 * z**2 + 55 * z - 2) * FPP**3 * u**2
    - 1536 * (21 * z - 2) * FP * FPPP * u * z
    - 768 * (12 * u * z + 81 * z**2 + 24 * z - 1) * FPP * FPPP * u * z
    + 1536 * (9 * z + 2) * FP * FPP * u
    - 512 * (39 * u * z + 81 * z**2 + 51 * z - 2) * FPP**2 * u
    + 36864 * FP * z
    - 1024 * (12 * u * z - 162 * z**2 + 33 * z - 1) * FPPP * z
    - 1024 * (36 * u * z + 27 * z - 1) * FPP
    - 24576 * z
)

H, H1, H2 = Y0, Y1, Y2
H_EQ = (
    3 * (u + 1) * u**2 * H1**2 * H2
    + 12 * u**2 * z * H1 * H2
    + 6 * (u - 8) * u * H1**2
    + 240 * H
    + 4 * (6 * u * z - 54 * z + 1) * H1
    + 4 * (3 * u * z**2 + 30 * u * H + 27 * z**2 - z) * H2
    + 24 * z**2
)

# W = V/u keeps every coefficient polynomial in u; the equation below is the
# W equation after that substitution, multiplied through by u.
V, V1, V2 = Y0, Y1, Y2
X = 5 * V - u * z + z
W_EQ = (
    (3 * z * V1**4 - X * V1**3 + 4 * (u + 1) * X**2) * V2
    - 48 * z * (u + 1) * V1**3
    + 8 * (u + 1) * X * V1**2
    + 4 * (u**2 - 1) * X * V1
)


def check_w_substitution():
    w, w1, w2 = sp.symbols("w w1 w2")
    xw = 5 * w * u - u * z + z
    orig = (
        (3 * u**4 * z * w1**4 - u**3 * xw * w1**3 + 4 * (u + 1) * xw**2) * w2
        - 48 * u**2 * z * (u + 1) * w1**3
        + 8 * u * (u + 1) * xw * w1**2
        + 4 * (u**2 - 1) * xw * w1
    )
    sub = orig.subs({w: V / u, w1: V1 / u, w2: V2 / u}, simultaneous=True) * u
    assert sp.expand(sub - W_EQ) == 0


def terms(expr):
    poly = sp.Poly(sp.expand(expr), z, u, Y0, Y1, Y2)
    out = []
    for (zp, up, a, b, c), coeff in sorted(poly.terms()):
        out.append(
            {
                "coeff": str(sp.Rational(coeff)),
                "z_pow": int(zp),
                "u_pow": int(up),
                "derivs": [0] * a + [1] * b + [2] * c,
            }
        )
    return out


def main():
    root = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent
    check_w_substitution()
    outdir = root / "data" / "de"
    outdir.mkdir(parents=True, exist_ok=True)
    for name, expr in [("fprime_4valent", FPRIME), ("h_4valent", H_EQ), ("w_cubic", W_EQ)]:
        t = terms(expr)
        body = ",\n".join(" " + json.dumps(x) for x in t)
        (outdir / f"{name}.json").write_text("[\n" + body + "\n]\n")
        print(f"{name}: {len(t)} terms")


if __name__ == "__main__":
    main()
