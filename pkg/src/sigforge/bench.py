"""Benchmark harness: time keygen, sign and verify for a list of configurations.

Each configuration is timed single-threaded with a monotonic wall clock; the
reported figure is the median over the requested repeats.  Results are
emitted as CSV with columns

    algorithm,form,curve,key_size,hash,keygen_s,sign_s,verify_s

where RSA/DSA rows carry "-" in the form and curve columns.
"""

import statistics
import time
from dataclasses import dataclass
from typing import Optional

from .cryptosystem import dsa_subgroup_bits, sign_message, verify_message
from .curves import order_bits
from .ec_signatures import ec_keygen
from .ff_signatures import dsa_keygen, dsa_paramgen, rsa_keygen
from .hashing import select_hash_for_modulus, select_hash_for_order
from .numeric import RngHandle
from .registry import get_curve

BENCH_MESSAGE = bytes(range(256)) * 4  # fixed 1 KiB message


@dataclass(frozen=True)
class BenchConfig:
    algorithm: str
    bits: Optional[int] = None  # rsa/dsa modulus size
    curve: Optional[str] = None  # ecdsa/eddsa curve name


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    form: str
    curve: str
    key_size: int
    hash_name: str
    keygen_s: float
    sign_s: float
    verify_s: float


DEFAULT_SUITE = (
    BenchConfig("rsa", bits=3072),
    BenchConfig("dsa", bits=3072),
    BenchConfig("ecdsa", curve="secp256k1"),
    BenchConfig("ecdsa", curve="p256"),
    BenchConfig("eddsa", curve="ed25519"),
)

# desk-scale suite: RSA capped at 3072 and DSA at 2048 so it finishes in
# minutes, plus curve rows across all three forms and cross-form combinations
PAPER_SMALL_SUITE = (
    BenchConfig("rsa", bits=1024),
    BenchConfig("rsa", bits=2048),
    BenchConfig("rsa", bits=3072),
    BenchConfig("dsa", bits=1024),
    BenchConfig("dsa", bits=2048),
    BenchConfig("ecdsa", curve="secp256k1"),
    BenchConfig("ecdsa", curve="p256"),
    BenchConfig("ecdsa", curve="p384"),
    BenchConfig("ecdsa", curve="p521"),
    BenchConfig("ecdsa", curve="ed25519"),
    BenchConfig("ecdsa", curve="k163"),
    BenchConfig("eddsa", curve="ed25519"),
    BenchConfig("eddsa", curve="numsp384t1"),
    BenchConfig("eddsa", curve="e521"),
    BenchConfig("eddsa", curve="secp256k1"),
    BenchConfig("eddsa", curve="k163"),
)

SUITES = {"default": DEFAULT_SUITE, "paper-small": PAPER_SMALL_SUITE}


def _timed(fn, repeats):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def bench_one(config: BenchConfig, repeats: int, rng: RngHandle) -> BenchRecord:
    algorithm = config.algorithm
    if algorithm in ("ecdsa", "eddsa"):
        spec = get_curve(config.curve)
        keygen = lambda: ec_keygen(spec, rng)
        form, curve_name = spec.form, spec.name
        key_size = order_bits(spec)
        hash_name = select_hash_for_order(key_size)
    elif algorithm == "rsa":
        keygen = lambda: rsa_keygen(config.bits, rng)
        form = curve_name = "-"
        key_size = config.bits
        hash_name = select_hash_for_modulus(key_size)
    elif algorithm == "dsa":
        subgroup = dsa_subgroup_bits(config.bits)
        keygen = lambda: dsa_keygen(dsa_paramgen(config.bits, subgroup, rng), rng)
        form = curve_name = "-"
        key_size = config.bits
        hash_name = select_hash_for_modulus(key_size)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")

    keygen_s, key = _timed(keygen, repeats)
    sign_s, signature = _timed(lambda: sign_message(algorithm, key, BENCH_MESSAGE, rng), repeats)
    verify_s, ok = _timed(
        lambda: verify_message(algorithm, key, BENCH_MESSAGE, signature), repeats
    )
    if not ok:
        raise AssertionError(f"benchmark produced an invalid signature for {config}")
    return BenchRecord(
        algorithm=algorithm,
        form=form,
        curve=curve_name,
        key_size=key_size,
        hash_name=hash_name,
        keygen_s=keygen_s,
        sign_s=sign_s,
        verify_s=verify_s,
    )


def run_bench(configs, repeats: int = 5, seed=None, progress=None) -> list:
    """Benchmark every configuration; ``progress`` is an optional callable
    fed each finished BenchRecord."""
    if repeats < 3:
        raise ValueError("repeats must be >= 3")
    records = []
    for index, config in enumerate(configs):
        # per-config stream: one row's draws never shift another row's keys
        rng = RngHandle(None if seed is None else seed + index)
        record = bench_one(config, repeats, rng)
        records.append(record)
        if progress is not None:
            progress(record)
    return records


def emit_csv(records) -> str:
    """CSV text for the records: header plus one row each, times to 4 decimals."""
    lines = ["algorithm,form,curve,key_size,hash,keygen_s,sign_s,verify_s"]
    for r in records:
        lines.append(
            f"{r.algorithm},{r.form},{r.curve},{r.key_size},{r.hash_name},"
            f"{r.keygen_s:.4f},{r.sign_s:.4f},{r.verify_s:.4f}"
        )
    return "\n".join(lines) + "\n"
