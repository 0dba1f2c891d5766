import pytest

from sigforge.bench import (
    BenchConfig,
    BenchRecord,
    DEFAULT_SUITE,
    PAPER_SMALL_SUITE,
    emit_csv,
    run_bench,
)
from sigforge.hashing import select_hash_for_order


class TestSuites:
    def test_default_suite_rows(self):
        assert BenchConfig("ecdsa", curve="secp256k1") in DEFAULT_SUITE
        assert BenchConfig("eddsa", curve="ed25519") in DEFAULT_SUITE
        assert BenchConfig("rsa", bits=3072) in DEFAULT_SUITE

    def test_paper_small_caps_sizes(self):
        for config in PAPER_SMALL_SUITE:
            if config.algorithm == "rsa":
                assert config.bits <= 3072
            if config.algorithm == "dsa":
                assert config.bits <= 2048

    def test_paper_small_spans_all_forms_and_combinations(self):
        curves = {c.curve for c in PAPER_SMALL_SUITE if c.curve}
        assert {"secp256k1", "ed25519", "k163"} <= curves
        # cross-form rows present for both elliptic schemes
        assert BenchConfig("ecdsa", curve="ed25519") in PAPER_SMALL_SUITE
        assert BenchConfig("eddsa", curve="secp256k1") in PAPER_SMALL_SUITE


class TestRunBench:
    def test_records_well_formed(self):
        records = run_bench(
            [BenchConfig("ecdsa", curve="secp192k1"), BenchConfig("rsa", bits=512)],
            repeats=3,
            seed=1,
        )
        ec, rsa = records
        assert ec.algorithm == "ecdsa"
        assert ec.form == "weierstrass"
        assert ec.curve == "secp192k1"
        assert ec.key_size == 192
        assert ec.hash_name == "sha224"
        assert rsa.form == "-" and rsa.curve == "-"
        assert rsa.key_size == 512 and rsa.hash_name == "sha160"
        for record in records:
            assert record.keygen_s > 0 and record.sign_s > 0 and record.verify_s > 0

    def test_hash_column_follows_selection_rule(self):
        (record,) = run_bench([BenchConfig("ecdsa", curve="p521")], repeats=3, seed=2)
        assert record.hash_name == "sha512" == select_hash_for_order(521)

    def test_repeats_validated(self):
        with pytest.raises(ValueError):
            run_bench([BenchConfig("rsa", bits=512)], repeats=2)

    def test_seeded_runs_identical_except_times(self):
        configs = [BenchConfig("ecdsa", curve="secp192k1"), BenchConfig("eddsa", curve="ed25519")]
        a = emit_csv(run_bench(configs, repeats=5, seed=33))
        b = emit_csv(run_bench(configs, repeats=5, seed=33))
        fixed_a = [row.split(",")[:5] for row in a.splitlines()]
        fixed_b = [row.split(",")[:5] for row in b.splitlines()]
        assert fixed_a == fixed_b


class TestEmitCsv:
    def test_empty_is_header_only(self):
        assert emit_csv([]) == "algorithm,form,curve,key_size,hash,keygen_s,sign_s,verify_s\n"

    def test_rsa_row_dashes(self):
        record = BenchRecord("rsa", "-", "-", 3072, "sha256", 9.3434, 0.0704, 0.0693)
        text = emit_csv([record])
        assert text.splitlines()[1] == "rsa,-,-,3072,sha256,9.3434,0.0704,0.0693"

    def test_four_decimal_rounding(self):
        record = BenchRecord("rsa", "-", "-", 1024, "sha160", 0.00671, 0.5, 1.0)
        assert ",0.0067,0.5000,1.0000" in emit_csv([record]).splitlines()[1]

    def test_lf_endings(self):
        record = BenchRecord("eddsa", "edwards", "ed25519", 253, "sha256", 0.1, 0.1, 0.1)
        text = emit_csv([record])
        assert "\r" not in text
        assert text.endswith("\n")
