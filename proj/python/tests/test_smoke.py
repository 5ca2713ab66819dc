from fractions import Fraction

import forestmaps as fm


def test_version():
    assert fm.__version__.count(".") == 2


def test_cubic_coefficients():
    f = fm.coefficients(3, 4)
    assert f[3] == [6, 4]
    assert f[4] == [140, 234, 144, 32]
    assert fm.coefficients(3, 4, u="1/2")[3] == [Fraction(8)]


def test_oracle_agrees():
    assert fm.oracle(4, 4) == ["20", "9"]
    assert fm.oracle(3, 4, "root_edge_outside") == ["70", "156", "120", "32"]


def test_residuals():
    for name in fm.identities():
        assert fm.check_identity(name, 10)["is_zero"], name
    assert fm.check_de("de_4valent_H", 10)["is_zero"]


def test_radius_and_kappa():
    r = fm.radius(4, "1")
    assert abs(float(r["rho"]) - 0.02832697891811931140) < 1e-15
    assert r["regime"] == "positive_u"
    assert abs(float(fm.kappa("1")) - 0.5640411277927382339) < 1e-15


def test_tree_counts():
    assert fm.spanning_tree_counts(3, 4)[3:] == ["6", "140"]
