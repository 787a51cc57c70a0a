import pytest
from hypothesis import given, strategies as st

from delpezzo import (
    DivisorParseError,
    RuledCoords,
    SurfaceMismatch,
    arithmetic_genus,
    blow_up,
    canonical_class,
    degree,
    divisor,
    euler_characteristic,
    format_divisor,
    from_ruled,
    hyperplane,
    intersect,
    parse_divisor,
    quadric,
    self_intersection,
    surface_from_name,
    to_ruled,
    zero_class,
)

ALL_SURFACES = [blow_up(r) for r in range(7)] + [quadric()]

X0, X1, X2, X3, X6 = blow_up(0), blow_up(1), blow_up(2), blow_up(3), blow_up(6)
Q = quadric()


def vectors(surface, bound=10):
    return st.tuples(*([st.integers(-bound, bound)] * surface.rank))


# --- intersection pairing ---------------------------------------------------


def test_pairing_on_generators():
    l = divisor(X3, 1, 0, 0, 0)
    e1 = divisor(X3, 0, 1, 0, 0)
    e2 = divisor(X3, 0, 0, 1, 0)
    assert intersect(l, l) == 1
    assert intersect(e1, e1) == -1
    assert intersect(e1, e2) == 0
    assert intersect(l, e1) == 0


def test_pairing_wild_pair_value():
    C = parse_divisor(X3, "3l-2e1-e2")
    D = parse_divisor(X3, "3l-2e2-e3")
    assert intersect(C, D) == 7


def test_pairing_quadric():
    h = divisor(Q, 1, 0)
    m = divisor(Q, 0, 1)
    assert intersect(h, m) == 1
    assert intersect(h, h) == 0
    assert intersect(m, m) == 0


def test_pairing_surface_mismatch():
    with pytest.raises(SurfaceMismatch):
        intersect(divisor(X2, 1, 0, 0), divisor(X3, 1, 0, 0, 0))


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
@given(data=st.data())
def test_pairing_symmetric_bilinear(surface, data):
    u = divisor(surface, *data.draw(vectors(surface)))
    v = divisor(surface, *data.draw(vectors(surface)))
    w = divisor(surface, *data.draw(vectors(surface)))
    n = data.draw(st.integers(-5, 5))
    assert intersect(u, v) == intersect(v, u)
    assert intersect(u + v, w) == intersect(u, w) + intersect(v, w)
    assert intersect(n * u, w) == n * intersect(u, w)


def test_pairing_signature_is_diagonal():
    for surface in ALL_SURFACES:
        if surface.kind == "quadric":
            continue
        rank = surface.rank
        basis = [divisor(surface, *(1 if k == i else 0 for k in range(rank))) for i in range(rank)]
        gram = [[intersect(a, b) for b in basis] for a in basis]
        expected = [[0] * rank for _ in range(rank)]
        expected[0][0] = 1
        for i in range(1, rank):
            expected[i][i] = -1
        assert gram == expected


# --- canonical class, hyperplane, degree ------------------------------------


def test_canonical_class_values():
    assert canonical_class(X0) == parse_divisor(X0, "-3l")
    assert canonical_class(X6) == parse_divisor(X6, "-3l+e1+e2+e3+e4+e5+e6")
    assert canonical_class(Q) == parse_divisor(Q, "-2h-2m")


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
def test_canonical_self_intersection_is_degree(surface):
    K = canonical_class(surface)
    assert intersect(K, K) == surface.degree


def test_hyperplane_values():
    assert hyperplane(X1) == parse_divisor(X1, "3l-e1")
    assert hyperplane(X0) == parse_divisor(X0, "3l")
    assert hyperplane(Q) == parse_divisor(Q, "2h+2m")
    for surface in ALL_SURFACES:
        H = hyperplane(surface)
        assert intersect(H, H) == surface.degree


def test_degree_examples():
    assert degree(parse_divisor(X1, "e1")) == 1
    assert degree(parse_divisor(X2, "2l-e1-e2")) == 4
    assert degree(zero_class(X3)) == 0


# --- genus and Euler characteristic -----------------------------------------


def test_genus_examples():
    assert arithmetic_genus(parse_divisor(X0, "l")) == 0
    assert arithmetic_genus(parse_divisor(X0, "3l")) == 1


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
@given(data=st.data())
def test_genus_adjunction_identity(surface, data):
    D = divisor(surface, *data.draw(vectors(surface)))
    K = canonical_class(surface)
    assert arithmetic_genus(D) == 1 + (self_intersection(D) + intersect(D, K)) / 2


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
def test_chi_of_structure_sheaf(surface):
    assert euler_characteristic(zero_class(surface)) == 1


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
def test_chi_of_minus_two_h(surface):
    assert euler_characteristic(-2 * hyperplane(surface)) == surface.degree + 1


def test_chi_of_h_on_cubic():
    assert euler_characteristic(hyperplane(X3)) == 7


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
@given(data=st.data())
def test_chi_closed_form(surface, data):
    D = divisor(surface, *data.draw(vectors(surface)))
    assert 2 * euler_characteristic(D) - 2 == self_intersection(D) + degree(D)


# --- ruled coordinates on X1 -------------------------------------------------


def test_ruled_examples():
    assert from_ruled(RuledCoords(c0=1, f=1)) == parse_divisor(X1, "l")
    assert from_ruled(RuledCoords(c0=2, f=3)) == parse_divisor(X1, "3l-e1")
    assert from_ruled(RuledCoords(c0=0, f=0)) == zero_class(X1)
    assert to_ruled(parse_divisor(X1, "3l-e1")) == RuledCoords(c0=2, f=3)


@given(c0=st.integers(-10, 10), f=st.integers(-10, 10))
def test_ruled_round_trip(c0, f):
    coords = RuledCoords(c0, f)
    assert to_ruled(from_ruled(coords)) == coords


@given(a=st.integers(-10, 10), c1=st.integers(-10, 10))
def test_ruled_round_trip_other_way(a, c1):
    D = divisor(X1, a, c1)
    assert from_ruled(to_ruled(D)) == D


def test_ruled_wrong_surface():
    with pytest.raises(SurfaceMismatch):
        to_ruled(divisor(X2, 1, 0, 0))


# --- text grammar -------------------------------------------------------------


def test_parse_basic_forms():
    assert parse_divisor(X3, "3l-2e1-e2") == divisor(X3, 3, -2, -1, 0)
    assert parse_divisor(Q, "h+3m") == divisor(Q, 1, 3)
    assert parse_divisor(X1, "2C0+3f") == divisor(X1, 3, -1)
    assert parse_divisor(X2, "0") == zero_class(X2)


def test_parse_whitespace_and_order():
    assert parse_divisor(X3, " - e2 + 3 l - 2 e1 ") == divisor(X3, 3, -2, -1, 0)
    assert parse_divisor(X3, "-2e1+3l-e2") == parse_divisor(X3, "3l-2e1-e2")


def test_parse_duplicate_terms_summed():
    assert parse_divisor(X3, "l+l+l-e1-e1") == divisor(X3, 3, -2, 0, 0)


def test_parse_errors_carry_position():
    with pytest.raises(DivisorParseError) as err:
        parse_divisor(X3, "3l-2e1-h")
    assert err.value.position == 7
    with pytest.raises(DivisorParseError):
        parse_divisor(X3, "e7")  # index out of range for the surface
    with pytest.raises(DivisorParseError):
        parse_divisor(X2, "C0")  # ruled basis exists only on X1
    with pytest.raises(DivisorParseError):
        parse_divisor(X3, "")
    with pytest.raises(DivisorParseError):
        parse_divisor(X3, "3l e1")
    with pytest.raises(DivisorParseError):
        parse_divisor(X3, "5")


@pytest.mark.parametrize("surface", ALL_SURFACES, ids=str)
@given(data=st.data())
def test_format_parse_round_trip(surface, data):
    D = divisor(surface, *data.draw(vectors(surface)))
    assert parse_divisor(surface, format_divisor(D)) == D


def test_surface_names():
    assert surface_from_name("P2") == X0
    assert surface_from_name("x4") == blow_up(4)
    assert surface_from_name("Q") == Q
    with pytest.raises(ValueError):
        surface_from_name("X9")
