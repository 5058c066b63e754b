import pytest
from hypothesis import given, strategies as st

from conftest import polys
from fqcarlitz import DomainError, Poly, carlitz_coeffs, carlitz_eval, carlitz_eval_mod, field_from_q
from fqcarlitz.carlitz import carlitz_eval_coeffs, carlitz_tpower_values
from fqcarlitz.polyring import enumerate_monic, enumerate_monic_irreducible

FIELDS = [field_from_q(q) for q in (3, 4, 5)]
ids = lambda F: f"q{F.q}"  # noqa: E731


def test_small_values(P):
    assert str(carlitz_eval(P("T"), P("1"))) == "T+1"
    assert carlitz_eval(P("1"), P("T^2+2")) == P("T^2+2")
    # C_T(u) = T u + u^3
    u = P("T+2")
    assert carlitz_eval(P("T"), u) == P("T") * u + u ** 3


def test_coefficients_of_c_t_squared(P):
    # C_{T^2} = T^2 + (T + T^q) tau + tau^2
    c = carlitz_coeffs(P("T^2"))
    assert [str(x) for x in c.coeffs] == ["T^2", "T^3+T", "1"]


def test_zero_cases(P):
    assert carlitz_eval(P("0"), P("T")) == P("0")
    assert carlitz_eval(P("T"), P("0")) == P("0")
    with pytest.raises(DomainError):
        carlitz_coeffs(P("0"))
    with pytest.raises(DomainError):
        carlitz_eval_mod(P("T"), P("1"), P("2"))


@pytest.mark.parametrize("F", FIELDS, ids=ids)
@given(data=st.data())
def test_two_evaluation_routes_agree(F, data):
    m = data.draw(polys(F, 4))
    u = data.draw(polys(F, 3))
    assert carlitz_eval(m, u) == carlitz_eval_coeffs(m, u)


@pytest.mark.parametrize("F", FIELDS, ids=ids)
@given(data=st.data())
def test_ring_homomorphism(F, data):
    a, b = data.draw(polys(F, 2)), data.draw(polys(F, 2))
    u, v = data.draw(polys(F, 2)), data.draw(polys(F, 2))
    c = Poly.constant(F, data.draw(st.integers(0, F.q - 1)))
    assert carlitz_eval(a * b, u) == carlitz_eval(a, carlitz_eval(b, u))
    assert carlitz_eval(a + b, u) == carlitz_eval(a, u) + carlitz_eval(b, u)
    assert carlitz_eval(a, u + v) == carlitz_eval(a, u) + carlitz_eval(a, v)
    assert carlitz_eval(a, c * u) == c * carlitz_eval(a, u)


@pytest.mark.parametrize("F", FIELDS, ids=ids)
@given(data=st.data())
def test_mod_matches_exact(F, data):
    m = data.draw(polys(F, 3))
    u = data.draw(polys(F, 3))
    n = data.draw(polys(F, 4).filter(lambda f: f.deg >= 1))
    assert carlitz_eval_mod(m, u, n) == carlitz_eval(m, u) % n


def test_tpower_values_reduced(P):
    u, n = P("T+1"), P("T^2+1")
    full = carlitz_tpower_values(u, 4)
    red = carlitz_tpower_values(u, 4, modulus=n)
    assert [f % n for f in full] == red


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_monic_coefficient_shape(F):
    for m in enumerate_monic(3, F):
        c = carlitz_coeffs(m)
        assert len(c) == 4
        assert c[0] == m and c[3].is_one()
        for i in range(1, 3):
            # deg [m, i] = q^i (deg m - i)
            assert c[i].deg == F.q ** i * (3 - i) or not c[i]


@pytest.mark.parametrize("q", [3, 4])
def test_eisenstein_degree_three(q):
    F = field_from_q(q)
    for p in enumerate_monic_irreducible(3, F):
        c = carlitz_coeffs(p)
        assert all(p.divides(c[i]) for i in range(3))


@pytest.mark.parametrize("F", FIELDS, ids=ids)
@given(data=st.data())
def test_fermat_analogue(F, data):
    u = data.draw(polys(F, 5))
    for p in enumerate_monic_irreducible(2, F):
        assert not carlitz_eval_mod(p - 1, u, p)


@pytest.mark.parametrize("F", FIELDS, ids=ids)
@given(data=st.data())
def test_degree_formulas(F, data):
    m = data.draw(polys(F, 3, nonzero=True))
    u = data.draw(polys(F, 2, nonzero=True))
    v = carlitz_eval(m, u)
    assert v
    if u.deg >= 1:
        assert v.deg == u.deg * F.q ** m.deg
    elif m.deg >= 1:
        assert v.deg == F.q ** (m.deg - 1)
