import math

import pytest

import lierf


def test_symbolic_basics():
    assert lierf.vev("a[X] adag[Y]") == "(X;Y)"
    assert lierf.parse_index("xi(X1; xi(X2; Y1))") == "xi(X1,X2;Y1)"
    assert lierf.normal_order("a[X] adag[Y]") != "0"
    assert lierf.canonical("vev( a[X]adag[Y] )") == "vev(a[X]*adag[Y])"
    with pytest.raises(ValueError):
        lierf.canonical("a[")


def test_multiplicity():
    assert lierf.multiplicity([4]) == 144
    assert [lierf.multiplicity([n]) for n in range(1, 5)] == [1, 2, 12, 144]


def test_inner_product():
    assert lierf.inner_product(["Y"], ["X"]) == "(Y;X)"
    assert lierf.inner_product(["Y"], ["X1", "X2"]) == "0"  # cross-level
    t = lierf.table1()
    assert len(t) == 4 and all(len(row) == 4 for row in t)
    assert "3*(Y1,Y2;X1,X2)" in t[1][1]


def test_run_suite():
    rep = lierf.run_suite("table1")
    assert rep["suite"] == "table1"
    assert rep["pass"] is True
    assert len(rep["checks"]) == 16
    with pytest.raises(ValueError):
        lierf.run_suite("bogus")


def test_moment_identity():
    m2 = lierf.moment(2, grid=8)
    m4 = lierf.moment(4, grid=8, lambda_=0.0)
    assert m4 == pytest.approx(3 * m2 * m2, rel=1e-10)


def test_kernel_symmetry():
    c, residual, ok = lierf.kernel_symmetry(phi=math.pi / 4, grid=8)
    assert ok and residual < 1e-12
    assert c == pytest.approx(complex(math.cos(math.pi / 4), math.sin(math.pi / 4)))


def test_em_integrand():
    u = [1.5, 0.0, 0.0, 1.5]
    v = lierf.em_integrand([1, 0, 0], [0, 1, 0], [1, 0, 0], [0, 1, 0], u)
    assert v == pytest.approx(4 * 1.5**2)
    z = lierf.em_integrand([0, 0, 1], [0, 0, 0], [0, 0, 1], [0, 0, 0], u)
    assert z == 0


def test_eigenvalues():
    eig = lierf.eigenvalues([[2, 1j], [-1j, 2]])
    assert eig == pytest.approx([1.0, 3.0])
