"""Elliptic-curve signature schemes: ECDSA and a hash-nonce EdDSA variant.

Both schemes are generic over any CurveSpec, whatever its form: ECDSA runs
on Edwards curves and EdDSA on Weierstrass or Koblitz curves just as well as
on their conventional forms.

The EdDSA variant here derives its nonce as r = H(H(m) || m) reduced mod n,
computes the challenge h from the x coordinates of R and the public key plus
the hashed message, and leaves s = r + h*k_a unreduced.  It is deterministic:
signing the same message twice yields byte-identical signatures.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .curves import (
    CurveSpec,
    KOBLITZ,
    Point,
    coord_as_int,
    is_neutral,
    is_on_curve,
    order_bits,
    point_add,
    scalar_mul,
)
from .errors import MissingPrivateKeyError
from .hashing import digest, digest_to_int, select_hash_for_order
from .numeric import RngHandle, mod_inv, rand_below


@dataclass(frozen=True)
class EcKey:
    curve: CurveSpec
    q: Point  # public point
    ka: Optional[int] = None  # private scalar

    @property
    def has_private(self) -> bool:
        return self.ka is not None

    def public_only(self) -> "EcKey":
        return EcKey(curve=self.curve, q=self.q)


class EcdsaSignature(NamedTuple):
    r: int
    s: int


class EddsaSignature(NamedTuple):
    R: Point
    s: int


def ec_keygen(curve: CurveSpec, rng: RngHandle) -> EcKey:
    """Draw a private scalar in [1, n-1] and derive the public point."""
    ka = rand_below(curve.n, rng)
    return EcKey(curve=curve, q=scalar_mul(ka, curve.g, curve), ka=ka)


def ecdsa_sign_digest(key: EcKey, hm: int, k_r: int) -> Optional[EcdsaSignature]:
    """(r, s) for the digest integer and nonce k_r; None when r or s is 0."""
    if key.ka is None:
        raise MissingPrivateKeyError("ECDSA signing requires the private scalar")
    curve = key.curve
    big_r = scalar_mul(k_r, curve.g, curve)
    if is_neutral(big_r, curve):
        return None
    r = coord_as_int(big_r.x, curve) % curve.n
    if r == 0:
        return None
    s = (hm + r * key.ka) * mod_inv(k_r, curve.n) % curve.n
    if s == 0:
        return None
    return EcdsaSignature(r, s)


def ecdsa_sign(key: EcKey, message: bytes, rng: RngHandle) -> EcdsaSignature:
    """Sign with a fresh random nonce per call; nonce reuse leaks the key."""
    if key.ka is None:
        raise MissingPrivateKeyError("ECDSA signing requires the private scalar")
    curve = key.curve
    alg = select_hash_for_order(order_bits(curve))
    hm = digest_to_int(message, alg, curve.n)
    while True:
        k_r = rand_below(curve.n, rng)
        sig = ecdsa_sign_digest(key, hm, k_r)
        if sig is not None:
            return sig


def ecdsa_verify_digest(key: EcKey, hm: int, sig: EcdsaSignature) -> bool:
    curve = key.curve
    r, s = sig
    if not (0 < r < curve.n and 0 < s < curve.n):
        return False
    w = mod_inv(s, curve.n)
    u1 = scalar_mul(hm * w % curve.n, curve.g, curve)
    u2 = scalar_mul(r * w % curve.n, key.q, curve)
    total = point_add(u1, u2, curve)
    if is_neutral(total, curve):
        return False
    return coord_as_int(total.x, curve) % curve.n == r


def ecdsa_verify(key: EcKey, message: bytes, sig: EcdsaSignature) -> bool:
    alg = select_hash_for_order(order_bits(key.curve))
    return ecdsa_verify_digest(key, digest_to_int(message, alg, key.curve.n), sig)


def eddsa_nonce(curve: CurveSpec, message: bytes, alg: str) -> int:
    """Deterministic nonce: digest-then-message rehashed, reduced mod n.

    A zero value (probability ~2^-n) is replaced by 1 so the scheme stays
    redraw-free.
    """
    r = digest_to_int(digest(message, alg) + message, alg, curve.n)
    return r if r != 0 else 1


def eddsa_challenge(curve: CurveSpec, big_r: Point, public: Point, message: bytes, alg: str) -> int:
    """Challenge h = R_x + Q_x + hashed message, reduced by the field prime
    (by n on binary-field curves, which have no prime modulus)."""
    modulus = curve.n if curve.form == KOBLITZ else curve.field
    return (
        coord_as_int(big_r.x, curve)
        + coord_as_int(public.x, curve)
        + digest_to_int(message, alg, modulus)
    ) % modulus


def eddsa_sign(key: EcKey, message: bytes) -> EddsaSignature:
    if key.ka is None:
        raise MissingPrivateKeyError("EdDSA signing requires the private scalar")
    curve = key.curve
    alg = select_hash_for_order(order_bits(curve))
    r = eddsa_nonce(curve, message, alg)
    big_r = scalar_mul(r, curve.g, curve)
    h = eddsa_challenge(curve, big_r, key.q, message, alg)
    return EddsaSignature(big_r, r + h * key.ka)  # s deliberately unreduced


def eddsa_verify(key: EcKey, message: bytes, sig: EddsaSignature) -> bool:
    curve = key.curve
    big_r, s = sig
    if s < 0 or not isinstance(big_r, tuple) or len(big_r) != 2:
        return False
    big_r = Point(*big_r)
    if not is_on_curve(big_r, curve):
        return False
    alg = select_hash_for_order(order_bits(curve))
    h = eddsa_challenge(curve, big_r, key.q, message, alg)
    p1 = scalar_mul(s, curve.g, curve)
    p2 = point_add(big_r, scalar_mul(h, key.q, curve), curve)
    return p1 == p2
