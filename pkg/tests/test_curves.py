import pytest

from sigforge.curves import (
    EDWARDS,
    CurveSpec,
    Point,
    coord_as_int,
    is_neutral,
    is_on_curve,
    negate,
    neutral,
    order_bits,
    point_add,
    scalar_mul,
    validate_curve,
)
from sigforge.registry import get_curve

from conftest import GF16, TOY_ED13, TOY_K16, TOY_W17
from oracles import (
    cyclic_table,
    ed_add,
    edwards_points,
    k_add,
    koblitz_points,
    w_add,
    weierstrass_points,
)


def _as_tuple(P):
    return None if P is None else (P.x, P.y)


def _from_tuple(t):
    return None if t is None else Point(*t)


# oracle-side view of each toy curve: (all points incl. neutral, oracle add)
def _oracle_universe(curve):
    if curve is TOY_W17:
        pts = weierstrass_points(17, 2, 2)
        return [None] + pts, lambda P, Q: w_add(P, Q, 17, 2)
    if curve is TOY_ED13:
        pts = edwards_points(13, 1, 7)
        return pts, lambda P, Q: ed_add(P, Q, 13, 1, 7)
    assert curve is TOY_K16
    pts = koblitz_points(4, GF16.poly, 1, 8)
    return [None] + pts, lambda P, Q: k_add(P, Q, 4, GF16.poly, 1)


TOYS = (TOY_W17, TOY_ED13, TOY_K16)


class TestIsOnCurve:
    def test_neutral_is_member(self):
        assert is_on_curve(None, TOY_W17)
        assert is_on_curve(None, TOY_K16)
        assert is_on_curve(Point(0, 1), TOY_ED13)

    def test_direct_substitution_examples(self):
        assert is_on_curve(Point(5, 1), TOY_W17)
        assert not is_on_curve(Point(5, 2), TOY_W17)

    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_matches_enumeration(self, curve):
        universe, _ = _oracle_universe(curve)
        affine = {t for t in universe if t is not None}
        size = curve.field_size
        for x in range(size):
            for y in range(size):
                assert is_on_curve(Point(x, y), curve) == ((x, y) in affine)

    def test_out_of_range_coordinates_rejected(self):
        assert not is_on_curve(Point(5, 1 + 17), TOY_W17)
        assert not is_on_curve(Point(0, 1 + 13), TOY_ED13)
        assert not is_on_curve(Point(2, 12 + 16), TOY_K16)


class TestPointAddAgainstOracle:
    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_every_pair_matches_brute_force_table(self, curve):
        universe, oracle_add = _oracle_universe(curve)
        for P in universe:
            for Q in universe:
                got = point_add(_from_tuple(P), _from_tuple(Q), curve)
                assert _as_tuple(got) == oracle_add(P, Q), (P, Q)

    def test_known_doubling(self):
        assert point_add(Point(5, 1), Point(5, 1), TOY_W17) == Point(6, 3)

    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_identity_law(self, curve):
        universe, _ = _oracle_universe(curve)
        e = neutral(curve)
        for P in universe:
            P = _from_tuple(P)
            assert point_add(P, e, curve) == (P if P is not None else e)
            assert point_add(e, P, curve) == (P if P is not None else e)

    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_inverse_law(self, curve):
        universe, _ = _oracle_universe(curve)
        for P in universe:
            P = _from_tuple(P)
            if P is None:
                continue
            assert is_neutral(point_add(P, negate(P, curve), curve), curve)

    def test_off_curve_input_rejected(self):
        with pytest.raises(ValueError):
            point_add(Point(5, 2), Point(5, 1), TOY_W17)
        with pytest.raises(ValueError):
            negate(Point(5, 2), TOY_W17)
        with pytest.raises(ValueError):
            scalar_mul(2, Point(5, 2), TOY_W17)


class TestGroupAxioms:
    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_closure_and_commutativity(self, curve):
        universe, _ = _oracle_universe(curve)
        pts = [_from_tuple(t) for t in universe]
        for P in pts:
            for Q in pts:
                s1 = point_add(P, Q, curve)
                assert is_on_curve(s1, curve)
                assert s1 == point_add(Q, P, curve)

    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_associativity_exhaustive(self, curve):
        universe, _ = _oracle_universe(curve)
        pts = [_from_tuple(t) for t in universe]
        for P in pts:
            for Q in pts:
                pq = point_add(P, Q, curve)
                for R in pts:
                    assert point_add(pq, R, curve) == point_add(
                        P, point_add(Q, R, curve), curve
                    )


class TestNegate:
    def test_neutral_cases(self):
        assert negate(None, TOY_W17) is None
        assert negate(Point(0, 1), TOY_ED13) == Point(0, 1)

    def test_weierstrass_flips_y(self):
        assert negate(Point(5, 1), TOY_W17) == Point(5, 16)

    def test_koblitz_adds_x(self):
        P = Point(2, 12)
        assert negate(P, TOY_K16) == Point(2, 2 ^ 12)

    def test_edwards_flips_x(self):
        assert negate(Point(2, 9), TOY_ED13) == Point(11, 9)


class TestScalarMul:
    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_matches_repeated_addition(self, curve):
        universe, oracle_add = _oracle_universe(curve)
        e = None if curve.form != EDWARDS else (0, 1)
        table = cyclic_table(oracle_add, _as_tuple(curve.g), e)
        assert len(table) == curve.n
        for k in range(3 * curve.n):
            assert _as_tuple(scalar_mul(k, curve.g, curve)) == table[k % curve.n]

    def test_zero_and_one(self):
        assert scalar_mul(0, Point(5, 1), TOY_W17) is None
        assert scalar_mul(1, Point(5, 1), TOY_W17) == Point(5, 1)

    def test_order_annihilates(self):
        assert scalar_mul(19, TOY_W17.g, TOY_W17) is None
        assert scalar_mul(5, TOY_ED13.g, TOY_ED13) == Point(0, 1)
        assert scalar_mul(5, TOY_K16.g, TOY_K16) is None

    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_distributes_over_scalar_addition(self, curve):
        for a in range(2 * curve.n):
            for b in range(curve.n):
                lhs = scalar_mul(a + b, curve.g, curve)
                rhs = point_add(
                    scalar_mul(a, curve.g, curve), scalar_mul(b, curve.g, curve), curve
                )
                assert lhs == rhs

    def test_reduction_modulo_order_on_registry_curve(self):
        curve = get_curve("secp192k1")
        for k in (1, 7, 12345, curve.n - 1):
            assert scalar_mul(k, curve.g, curve) == scalar_mul(k + curve.n, curve.g, curve)

    def test_negative_scalar_rejected(self):
        with pytest.raises(ValueError):
            scalar_mul(-1, TOY_W17.g, TOY_W17)


class TestEdwardsDenominatorGuard:
    def test_incomplete_curve_surfaces_error(self):
        # d = 4 is a square mod 13, so the unified law has exceptional pairs
        bad = CurveSpec("bad-ed", EDWARDS, 13, 1, 4, Point(0, 1), 2, 1)
        P = Point(4, 5)
        assert is_on_curve(P, bad)
        with pytest.raises(ValueError, match="denominator"):
            point_add(P, P, bad)


class TestCoordAsInt:
    def test_prime_field_identity(self):
        assert coord_as_int(5, TOY_W17) == 5

    def test_binary_bit_pattern(self):
        assert coord_as_int(0b1010, TOY_K16) == 10

    def test_edwards_neutral_x(self):
        assert coord_as_int(neutral(TOY_ED13).x, TOY_ED13) == 0


class TestOrderBits:
    def test_toy_values(self):
        assert order_bits(TOY_W17) == 5  # 19 needs five bits
        assert order_bits(TOY_ED13) == 3


class TestValidateCurve:
    @pytest.mark.parametrize("curve", TOYS, ids=lambda c: c.name)
    def test_toys_validate(self, curve):
        validate_curve(curve)

    def test_bad_base_point_rejected(self):
        broken = CurveSpec("broken", TOY_W17.form, 17, 2, 2, Point(5, 2), 19, 1)
        with pytest.raises(ValueError, match="base point"):
            validate_curve(broken)

    def test_composite_order_rejected(self):
        broken = CurveSpec("broken", TOY_W17.form, 17, 2, 2, Point(5, 1), 18, 1)
        with pytest.raises(ValueError, match="not prime"):
            validate_curve(broken)

    def test_hasse_violation_rejected(self):
        # n = 19 with cofactor 3 puts h*n far outside the interval around 18
        broken = CurveSpec("broken", TOY_W17.form, 17, 2, 2, Point(5, 1), 19, 3)
        with pytest.raises(ValueError, match="Hasse"):
            validate_curve(broken)
