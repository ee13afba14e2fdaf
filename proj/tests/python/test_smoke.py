"""Smoke tests for the python bindings."""

import pytest

import fermatrings as fr


@pytest.fixture
def quadratic_ring():
    return fr.Ring(3, [2, 2, 2], conductor=4)


def test_cyclotomic_polynomial():
    assert fr.cyclotomic_polynomial(4) == ["1", "0", "1"]
    assert fr.cyclotomic_polynomial(12) == ["1", "0", "-1", "0", "1"]


def test_reduction(quadratic_ring):
    assert str(quadratic_ring.parse("x3^2")) == "-x1^2 - x2^2"
    assert quadratic_ring.parse("x1^2 + x2^2 + x3^2").is_zero()


def test_arithmetic(quadratic_ring):
    x1 = quadratic_ring.var(1)
    x2 = quadratic_ring.var(2)
    assert str(x1 * x1 + x2) == "x1^2 + x2"
    assert (x1 - x1).is_zero()


def test_parse_errors(quadratic_ring):
    with pytest.raises(ValueError):
        quadratic_ring.parse("x9")
    with pytest.raises(ValueError):
        quadratic_ring.parse("x1 +")


def test_uncertified_derivation_refuses_to_act(quadratic_ring):
    bad = quadratic_ring.derivation(
        [quadratic_ring.var(2), quadratic_ring.zero(), quadratic_ring.zero()]
    )
    assert not bad.certified
    with pytest.raises(ValueError):
        bad.apply(quadratic_ring.var(1))


def test_generators(quadratic_ring):
    eps = quadratic_ring.epsilon()
    assert eps.certified
    f = quadratic_ring.parse("x1*x2")
    assert str(eps.apply(f)) == "x1*x2"
    d12 = quadratic_ring.dij(1, 2)
    assert [str(im) for im in d12.images()] == ["-2*x2", "2*x1", "0"]


def test_linear_space_dimensions(quadratic_ring):
    assert len(quadratic_ring.linear_space()) == 4
    cubic = fr.Ring(3, [3, 3, 3])
    assert len(cubic.linear_space()) == 1


def test_classify_and_kernel(quadratic_ring):
    d = quadratic_ring.linear("1,0,0;0,1,-1;0,1,1")
    info = d.classify()
    assert info["kind"] == "scalar+skew"
    assert info["alpha"] == "1"
    assert d.kernel(6).trivial

    ds = quadratic_ring.linear("0,0,0;0,0,-1;0,1,0")
    assert not ds.is_locally_nilpotent()
    report = ds.kernel(2)
    assert not report.trivial
    assert report.first_nontrivial == 1
    assert report.basis(1) == ["x1"]


def test_families():
    odd = fr.family_odd(3)
    assert odd.matrix.text() == "0,0,-1;0,0,-w;1,w,0"
    assert odd.matrix.power(3).is_zero()
    assert odd.is_locally_nilpotent()

    even = fr.family_even(4)
    assert even.matrix.is_skew_symmetric()
    assert even.matrix.power(3).is_zero()


def test_find_alpha(quadratic_ring):
    ds = quadratic_ring.linear("0,0,0;0,0,-1;0,1,0")
    assert ds.find_alpha(4, ["1", "2"]) == "1"
    assert ds.find_alpha(2, ["i"]) is None


def test_verify_subset():
    ok, report = fr.verify(max_degree=2, bound=1)
    assert ok, report
    assert "PASS normal-form-idempotence" in report
