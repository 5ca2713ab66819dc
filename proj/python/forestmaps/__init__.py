"""Forested-map generating functions: exact series, residual checks and numerics."""
from fractions import Fraction

from ._forestmaps import (
    __version__,
    check_de,
    check_identity,
    criterion,
    identities,
    kappa,
    oracle,
    radius,
    series,
    spanning_tree_counts,
)


def coefficients(p, order, u="symbolic", name="F"):
    """Series coefficients as lists of Fractions (u-polynomial coefficients per z-power)."""
    return [[Fraction(c) for c in row] for row in series(p, order, str(u))[name]]


__all__ = [
    "__version__",
    "check_de",
    "check_identity",
    "coefficients",
    "criterion",
    "identities",
    "kappa",
    "oracle",
    "radius",
    "series",
    "spanning_tree_counts",
]
