import pytest

from sigforge.binary_field import BinaryField
from sigforge.curves import EDWARDS, KOBLITZ, WEIERSTRASS, CurveSpec, Point

# y^2 = x^3 + 2x + 2 over F_17; the subgroup of G = (5, 1) has prime order 19
TOY_W17 = CurveSpec("toy-w17", WEIERSTRASS, 17, 2, 2, Point(5, 1), 19, 1)

# x^2 + y^2 = 1 + 7 x^2 y^2 over F_13; |E| = 20, G = (2, 9) has order 5
TOY_ED13 = CurveSpec("toy-ed13", EDWARDS, 13, 1, 7, Point(2, 9), 5, 4)

# y^2 + xy = x^3 + x^2 + 8 over GF(2^4)/(x^4+x+1); |E| = 20, G = (2, 12) order 5
GF16 = BinaryField(4, 0b10011)
TOY_K16 = CurveSpec("toy-k16", KOBLITZ, GF16, 1, 8, Point(2, 12), 5, 4)


@pytest.fixture
def toy_w17():
    return TOY_W17


@pytest.fixture
def toy_ed13():
    return TOY_ED13


@pytest.fixture
def toy_k16():
    return TOY_K16
