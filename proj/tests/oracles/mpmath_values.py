#!/usr/bin/env python3
"""Reference values computed with mpmath, independent of the C++ code.

The numbers printed here are frozen into tests/test_numerics.cpp and
tests/test_random_model.cpp. Rerun to audit them.
"""
from fractions import Fraction

from mpmath import mp, mpf, hyp2f1, sqrt, pi, findroot, diff, nsum, inf, factorial

mp.dps = 40


def phi4(x):
    return x * (hyp2f1(mpf(1) / 3, mpf(2) / 3, 2, 27 * x) - 1)


def dphi4(x):
    a, b = mpf(1) / 3, mpf(2) / 3
    return hyp2f1(a, b, 2, 27 * x) - 1 + x * (a * b / 2) * 27 * hyp2f1(a + 1, b + 1, 3, 27 * x)


def theta4(x):
    return 4 * nsum(lambda i: factorial(3 * i - 3) / (factorial(i - 2) * factorial(i) ** 2) * x**i, [2, inf])


def quartic(u):
    u = mpf(u)
    if u <= 0:
        return None
    tau = findroot(lambda t: 1 - u * dphi4(t), (mpf(10) ** -4, mpf(1) / 27 - mpf(10) ** -35), solver="illinois")
    return tau, tau - u * phi4(tau)


def psi1(t):
    return t * hyp2f1(mpf(1) / 4, mpf(3) / 4, 2, 64 * t)


def psi2(t):
    return nsum(lambda i: factorial(4 * i - 2) / (factorial(2 * i - 1) * factorial(i) ** 2) * t**i, [1, inf])


def cubic_phis(x, y):
    r = sqrt(1 - 4 * y)
    t = x / (1 - 4 * y) ** 2
    return r**3 * psi1(t) - x, r * psi2(t) + (1 - r) ** 2 / 4


def cubic(u):
    u = mpf(u)

    def eqs(x, y):
        p1, p2 = cubic_phis(x, y)
        f1x = diff(lambda a: cubic_phis(a, y)[0], x)
        f1y = diff(lambda b: cubic_phis(x, b)[0], y)
        f2x = diff(lambda a: cubic_phis(a, y)[1], x)
        f2y = diff(lambda b: cubic_phis(x, b)[1], y)
        return [y - u * p2, (1 - u * f1x) * (1 - u * f2y) - u**2 * f1y * f2x]

    tau, sigma = findroot(eqs, (mpf("0.0098"), mpf("0.0345")))
    return tau, sigma, tau - u * cubic_phis(tau, sigma)[0]


def main():
    print("Phi(1/27)", phi4(mpf(1) / 27))
    print("sqrt3/(12pi)", sqrt(3) / (12 * pi))
    for u in ["1/2", "1", "2"]:
        tau, rho = quartic(mpf(Fraction(u).numerator) / Fraction(u).denominator)
        print("p4 u", u, "tau", tau, "rho", rho)
    for u in ["-1/2", "-1/4"]:
        uu = mpf(Fraction(u).numerator) / Fraction(u).denominator
        print("p4 affine u", u, "rho", mpf(1) / 27 - uu * phi4(mpf(1) / 27))
    tau, rho = quartic(1)
    ph = phi4(tau)
    print("kappa1", 2 * ph / (tau - ph))
    print("slope1", ph / (tau - ph))
    print("kappa0", 27 * phi4(mpf(1) / 27))
    dth = diff(theta4, tau)
    print("law k=1 at u=1", 12 * tau / dth)
    print("2F1(1/3,2/3;2;0.9)", hyp2f1(mpf(1) / 3, mpf(2) / 3, 2, mpf("0.9")))
    print("2F1(1/3,2/3;2;1-1e-20)", hyp2f1(mpf(1) / 3, mpf(2) / 3, 2, 1 - mpf(10) ** -20))
    print("2F1(1/4,3/4;2;0.5)", hyp2f1(mpf(1) / 4, mpf(3) / 4, 2, mpf("0.5")))
    print("2F1(7/3,8/3;4;0.3)", hyp2f1(mpf(7) / 3, mpf(8) / 3, 4, mpf("0.3")))
    tau, sigma, rho = cubic(1)
    print("p3 u=1 tau", tau, "sigma", sigma, "rho", rho)
    print("pi^2/384", pi**2 / 384)


if __name__ == "__main__":
    main()
