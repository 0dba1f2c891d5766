"""High-level API: build a cryptosystem, export keys, sign, verify.

    from sigforge import Cryptosystem

    signer = Cryptosystem(algorithm="eddsa", form="edwards", curve="ed25519")
    signer.export_keys("public.txt", public=True)
    signature = signer.sign(b"Hello, world!")

    verifier = Cryptosystem(algorithm="eddsa", key_file="public.txt")
    assert verifier.verify(b"Hello, world!", signature)
"""

from . import keystore
from .ec_signatures import ec_keygen, ecdsa_sign, ecdsa_verify, eddsa_sign, eddsa_verify
from .ff_signatures import (
    dsa_keygen,
    dsa_paramgen,
    dsa_sign,
    dsa_verify,
    rsa_keygen,
    rsa_sign,
    rsa_verify,
)
from .hashing import digest_bits, select_hash_for_modulus
from .numeric import RngHandle
from .registry import get_curve

ALGORITHMS = ("rsa", "dsa", "ecdsa", "eddsa")

DEFAULT_BITS = 2048
DEFAULT_CURVES = {"ecdsa": "secp256k1", "eddsa": "ed25519"}


def dsa_subgroup_bits(modulus_bits: int) -> int:
    """Subgroup size paired with a DSA modulus: the width of its selected hash."""
    return digest_bits(select_hash_for_modulus(modulus_bits))


def generate_key(algorithm: str, rng: RngHandle, bits=None, curve=None):
    """Fresh key material for any supported algorithm."""
    if algorithm in ("ecdsa", "eddsa"):
        spec = get_curve(curve or DEFAULT_CURVES[algorithm])
        return ec_keygen(spec, rng)
    size = bits or DEFAULT_BITS
    if algorithm == "rsa":
        return rsa_keygen(size, rng)
    if algorithm == "dsa":
        params = dsa_paramgen(size, dsa_subgroup_bits(size), rng)
        return dsa_keygen(params, rng)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def sign_message(algorithm: str, key, message: bytes, rng: RngHandle):
    if algorithm == "rsa":
        return rsa_sign(key, message)
    if algorithm == "dsa":
        return dsa_sign(key, message, rng)
    if algorithm == "ecdsa":
        return ecdsa_sign(key, message, rng)
    if algorithm == "eddsa":
        return eddsa_sign(key, message)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def verify_message(algorithm: str, key, message: bytes, signature) -> bool:
    if algorithm == "rsa":
        return rsa_verify(key, message, signature)
    if algorithm == "dsa":
        return dsa_verify(key, message, signature)
    if algorithm == "ecdsa":
        return ecdsa_verify(key, message, signature)
    if algorithm == "eddsa":
        return eddsa_verify(key, message, signature)
    raise ValueError(f"unknown algorithm {algorithm!r}")


class Cryptosystem:
    """A configured signing/verifying endpoint.

    Without ``key_file`` a fresh key is generated; with it, the key material
    is loaded (and may be public-only, in which case only verification
    works).  ``seed`` makes key generation and signing nonces reproducible.
    """

    def __init__(self, algorithm, *, form=None, curve=None, bits=None, key_file=None, seed=None):
        algorithm = algorithm.lower()
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
        self.algorithm = algorithm
        self.rng = RngHandle(seed)
        if key_file is not None:
            file_alg, key = keystore.import_key(key_file)
            if file_alg != algorithm:
                raise ValueError(
                    f"key file holds a {file_alg!r} key, but algorithm is {algorithm!r}"
                )
            self.key = key
        else:
            self.key = generate_key(algorithm, self.rng, bits=bits, curve=curve)
        if algorithm in ("ecdsa", "eddsa"):
            if curve is not None and self.key.curve.name != curve.lower():
                raise ValueError(
                    f"key uses curve {self.key.curve.name!r}, not {curve!r}"
                )
            if form is not None and self.key.curve.form != form.lower():
                raise ValueError(
                    f"curve {self.key.curve.name!r} has form {self.key.curve.form!r}, "
                    f"not {form!r}"
                )
        elif form is not None or curve is not None:
            raise ValueError(f"{algorithm} does not take a form or curve")

    @staticmethod
    def _as_bytes(message) -> bytes:
        return message.encode("utf-8") if isinstance(message, str) else bytes(message)

    def sign(self, message):
        return sign_message(self.algorithm, self.key, self._as_bytes(message), self.rng)

    def verify(self, message, signature) -> bool:
        return verify_message(self.algorithm, self.key, self._as_bytes(message), signature)

    def export_keys(self, path, public: bool = False) -> None:
        keystore.export_key(self.algorithm, self.key, path, public_only=public)
