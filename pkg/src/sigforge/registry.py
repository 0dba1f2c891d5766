"""Named-curve registry.

Parameters are transcribed from the curves' published standards (SEC 2,
NIST FIPS 186, RFC 7748/8032 style definitions, the E-521 and NUMS curve
definitions).  Every entry is validated against the full CurveSpec invariant
set the first time the registry is used; a transcription error aborts loudly
rather than producing a subtly wrong curve.
"""

from .binary_field import BinaryField
from .curves import EDWARDS, KOBLITZ, WEIERSTRASS, CurveSpec, Point, validate_curve
from .errors import UnknownCurveError

# GF(2^m) reduction polynomials shared by the binary curves below
_F113 = BinaryField(113, (1 << 113) | (1 << 9) | 1)
_F163 = BinaryField(163, (1 << 163) | (1 << 7) | (1 << 6) | (1 << 3) | 1)
_F233 = BinaryField(233, (1 << 233) | (1 << 74) | 1)

_DEFS = (
    # --- prime-field Weierstrass ------------------------------------------
    CurveSpec(
        name="secp192k1",
        form=WEIERSTRASS,
        field=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFEE37,
        a=0,
        b=3,
        g=Point(
            0xDB4FF10EC057E9AE26B07D0280B7F4341DA5D1B1EAE06C7D,
            0x9B2F2F6D9C5628A7844163D015BE86344082AA88D95E2F9D,
        ),
        n=0xFFFFFFFFFFFFFFFFFFFFFFFE26F2FC170F69466A74DEFD8D,
        h=1,
    ),
    CurveSpec(
        name="secp256k1",
        form=WEIERSTRASS,
        field=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F,
        a=0,
        b=7,
        g=Point(
            0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798,
            0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8,
        ),
        n=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141,
        h=1,
    ),
    CurveSpec(
        name="p256",
        form=WEIERSTRASS,
        field=0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF,
        a=0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFC,
        b=0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B,
        g=Point(
            0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296,
            0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5,
        ),
        n=0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551,
        h=1,
    ),
    CurveSpec(
        name="p384",
        form=WEIERSTRASS,
        field=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFF0000000000000000FFFFFFFF,
        a=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFF0000000000000000FFFFFFFC,
        b=0xB3312FA7E23EE7E4988E056BE3F82D19181D9C6EFE8141120314088F5013875AC656398D8A2ED19D2A85C8EDD3EC2AEF,
        g=Point(
            0xAA87CA22BE8B05378EB1C71EF320AD746E1D3B628BA79B9859F741E082542A385502F25DBF55296C3A545E3872760AB7,
            0x3617DE4A96262C6F5D9E98BF9292DC29F8F41DBD289A147CE9DA3113B5F0B8C00A60B1CE1D7E819D7A431D7C90EA0E5F,
        ),
        n=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFC7634D81F4372DDF581A0DB248B0A77AECEC196ACCC52973,
        h=1,
    ),
    CurveSpec(
        name="p521",
        form=WEIERSTRASS,
        field=(1 << 521) - 1,
        a=(1 << 521) - 4,
        b=0x0051953EB9618E1C9A1F929A21A0B68540EEA2DA725B99B315F3B8B489918EF109E156193951EC7E937B1652C0BD3BB1BF073573DF883D2C34F1EF451FD46B503F00,
        g=Point(
            0x00C6858E06B70404E9CD9E3ECB662395B4429C648139053FB521F828AF606B4D3DBAA14B5E77EFE75928FE1DC127A2FFA8DE3348B3C1856A429BF97E7E31C2E5BD66,
            0x011839296A789A3BC0045C8A5FB42C7D1BD998F54449579B446817AFBD17273E662C97EE72995EF42640C550B9013FAD0761353C7086A272C24088BE94769FD16650,
        ),
        n=0x01FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFA51868783BF2F966B7FCC0148F709A5D03BB5C9B8899C47AEBB6FB71E91386409,
        h=1,
    ),
    # --- prime-field (twisted) Edwards ------------------------------------
    CurveSpec(
        name="ed25519",
        form=EDWARDS,
        field=(1 << 255) - 19,
        a=(1 << 255) - 20,  # a = -1
        b=37095705934669439343138083508754565189542113879843219016388785533085940283555,
        g=Point(
            15112221349535400772501151409588531511454012693041857206046113283949847762202,
            46316835694926478169428394003475163141307993866256225615783033603165251855960,
        ),
        n=(1 << 252) + 27742317777372353535851937790883648493,
        h=8,
    ),
    CurveSpec(
        name="ed448",
        form=EDWARDS,
        field=(1 << 448) - (1 << 224) - 1,
        a=1,
        b=(1 << 448) - (1 << 224) - 1 - 39081,  # d = -39081
        g=Point(
            0x4F1970C66BED0DED221D15A622BF36DA9E146570470F1767EA6DE324A3D3A46412AE1AF72AB66511433B80E18B00938E2626A82BC70CC05E,
            0x693F46716EB6BC248876203756C9C7624BEA73736CA3984087789C1E05A0C2D73AD3FF1CE67C39C4FDBD132C4ED7C8AD9808795BF230FA14,
        ),
        n=(1 << 446) - 13818066809895115352007386748515426880336692474882178609894547503885,
        h=4,
    ),
    CurveSpec(
        name="e521",
        form=EDWARDS,
        field=(1 << 521) - 1,
        a=1,
        b=(1 << 521) - 1 - 376014,  # d = -376014
        g=Point(
            0x752CB45C48648B189DF90CB2296B2878A3BFD9F42FC6C818EC8BF3C9C0C6203913F6ECC5CCC72434B1AE949D568FC99C6059D0FB13364838AA302A940A2F19BA6C,
            0xC,
        ),
        n=(1 << 519)
        - 337554763258501705789107630418782636071904961214051226618635150085779108655765,
        h=4,
    ),
    CurveSpec(
        name="numsp384t1",
        form=EDWARDS,
        field=(1 << 384) - 317,
        a=(1 << 384) - 318,  # a = -1
        b=333194,  # d = 0x5158A
        g=Point(
            0x08,
            0x749CDABA136CE9B65BD4471794AA619DAA5C7B4C930BFF8EBD798A8AE753C6D72F003860FEBABAD534A4ACF5FA7F5BEE,
        ),
        n=0x3FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFECD7D11ED5A259A25A13A0458E39F4E451D6D71F70426E25,
        h=4,
    ),
    # --- binary-field Koblitz form ----------------------------------------
    CurveSpec(
        name="k163",
        form=KOBLITZ,
        field=_F163,
        a=1,
        b=1,
        g=Point(
            0x2FE13C0537BBC11ACAA07D793DE4E6D5E5C94EEE8,
            0x289070FB05D38FF58321F2E800536D538CCDAA3D9,
        ),
        n=0x4000000000000000000020108A2E0CC0D99F8A5EF,
        h=2,
    ),
    CurveSpec(
        name="b163",
        form=KOBLITZ,
        field=_F163,
        a=1,
        b=0x20A601907B8C953CA1481EB10512F78744A3205FD,
        g=Point(
            0x3F0EBA16286A2D57EA0991168D4994637E8343E36,
            0x0D51FBC6C71A0094FA2CDD545B11C5C0C797324F1,
        ),
        n=0x40000000000000000000292FE77E70C12A4234C33,
        h=2,
    ),
    CurveSpec(
        name="k233",
        form=KOBLITZ,
        field=_F233,
        a=0,
        b=1,
        g=Point(
            0x17232BA853A7E731AF129F22FF4149563A419C26BF50A4C9D6EEFAD6126,
            0x1DB537DECE819B7F70F555A67C427A8CD9BF18AEB9B56E0C11056FAE6A3,
        ),
        n=0x8000000000000000000000000000069D5BB915BCD46EFB1AD5F173ABDF,
        h=4,
    ),
    CurveSpec(
        name="b233",
        form=KOBLITZ,
        field=_F233,
        a=1,
        b=0x66647EDE6C332C7F8C0923BB58213B333B20E9CE4281FE115F7D8F90AD,
        g=Point(
            0xFAC9DFCBAC8313BB2139F1BB755FEF65BC391F8B36F8F8EB7371FD558B,
            0x1006A08A41903350678E58528BEBF8A0BEFF867A7CA36716F7E01F81052,
        ),
        n=0x1000000000000000000000000000013E974E72F8A6922031D2603CFE0D7,
        h=2,
    ),
    CurveSpec(
        name="sect113r1",
        form=KOBLITZ,
        field=_F113,
        a=0x3088250CA6E7C7FE649CE85820F7,
        b=0xE8BEE4D3E2260744188BE0E9C723,
        g=Point(
            0x9D73616F35F4AB1407D73562C10F,
            0xA52830277958EE84D1315ED31886,
        ),
        n=0x100000000000000D9CCEC8A39E56F,
        h=2,
    ),
)

_registry = None


def _load():
    global _registry
    if _registry is None:
        curves = {}
        for spec in _DEFS:
            validate_curve(spec)
            curves[spec.name] = spec
        _registry = curves
    return _registry


def curve_names() -> tuple:
    """All registered curve names, sorted."""
    return tuple(sorted(_load()))


def get_curve(name: str) -> CurveSpec:
    """Look up a curve by name (case-insensitive)."""
    curves = _load()
    key = name.lower()
    if key not in curves:
        raise UnknownCurveError(
            f"unknown curve {name!r}; available: {', '.join(sorted(curves))}"
        )
    return curves[key]
