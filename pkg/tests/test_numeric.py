import pytest

from sigforge.errors import NotInvertibleError
from sigforge.numeric import RngHandle, gen_prime, is_probable_prime, mod_exp, mod_inv, rand_below

from oracles import brute_mod_inv, naive_mod_exp, trial_division_is_prime


class TestModExp:
    def test_zero_exponent_is_one(self):
        for a in (0, 1, 5, 123456789):
            assert mod_exp(a, 0, 97) == 1

    def test_order_nine_element(self):
        # 5 has multiplicative order 9 mod 19
        assert mod_exp(5, 117, 19) == 1
        assert naive_mod_exp(5, 117, 19) == 1

    def test_toy_rsa_roundtrip(self):
        # p=61, q=53, e=17, d=2753: signing then verifying recovers the value
        n, e, d = 3233, 17, 2753
        signed = mod_exp(65, d, n)
        assert signed == naive_mod_exp(65, d, n)
        assert mod_exp(signed, e, n) == 65

    def test_exhaustive_against_repeated_multiplication(self):
        # all base, exp, mod < 2^8; the oracle multiplies one factor at a time
        for mod in range(2, 256):
            for base in range(256):
                acc = 1 % mod
                b = base % mod
                for exp in range(256):
                    assert mod_exp(base, exp, mod) == acc, (base, exp, mod)
                    acc = (acc * b) % mod

    def test_spot_check_against_naive_oracle(self):
        for base, exp, mod in ((7, 13, 255), (2, 200, 101), (250, 99, 19)):
            assert mod_exp(base, exp, mod) == naive_mod_exp(base, exp, mod)

    def test_matches_builtin_pow_on_large_values(self):
        rng = RngHandle(42)
        for _ in range(50):
            b = rng.getrandbits(256)
            e = rng.getrandbits(256)
            m = rng.getrandbits(256) | 1 | (1 << 255)
            assert mod_exp(b, e, m) == pow(b, e, m)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            mod_exp(2, 3, 1)
        with pytest.raises(ValueError):
            mod_exp(2, 3, 0)


class TestModInv:
    def test_identity(self):
        assert mod_inv(1, 97) == 1

    def test_small_case(self):
        assert mod_inv(3, 11) == 4
        assert brute_mod_inv(3, 11) == 4

    def test_not_invertible(self):
        with pytest.raises(NotInvertibleError):
            mod_inv(4, 8)

    def test_exhaustive_small_moduli(self):
        for m in range(2, 60):
            for a in range(m):
                expected = brute_mod_inv(a, m)
                if expected is None:
                    with pytest.raises(NotInvertibleError):
                        mod_inv(a, m)
                else:
                    got = mod_inv(a, m)
                    assert got == expected
                    assert 0 < got < m
                    assert (a * got) % m == 1

    def test_composite_modulus(self):
        # RSA needs inverses modulo phi(n), which is composite
        phi = 3120
        assert (17 * mod_inv(17, phi)) % phi == 1
        assert mod_inv(17, phi) == 2753

    def test_inverse_property_random(self):
        rng = RngHandle(7)
        m = (1 << 255) - 19
        for _ in range(50):
            a = rand_below(m, rng)
            assert (a * mod_inv(a, m)) % m == 1


class TestFermatProperty:
    def test_prime_powers_give_one(self):
        # a^(n-1) = 1 mod n for prime n and all a in [1, n)
        for n in (5, 19, 97, 101):
            for a in range(1, n):
                assert mod_exp(a, n - 1, n) == 1


class TestIsProbablePrime:
    def test_units_and_small(self):
        assert not is_probable_prime(1, 10)
        assert not is_probable_prime(0, 10)
        assert is_probable_prime(2, 10)
        assert is_probable_prime(97, 10)

    def test_known_prime(self):
        assert is_probable_prime(7919, 20)
        assert trial_division_is_prime(7919)

    def test_carmichael_number_rejected(self):
        # 561 = 3*11*17 fools plain Fermat tests
        assert not is_probable_prime(561, 20)
        assert not trial_division_is_prime(561)

    def test_agrees_with_trial_division(self):
        for n in range(2, 3000):
            assert is_probable_prime(n, 10) == trial_division_is_prime(n)

    def test_large_known_values(self):
        assert is_probable_prime((1 << 255) - 19, 40)
        assert not is_probable_prime((1 << 255) - 18, 40)

    def test_rounds_validated(self):
        with pytest.raises(ValueError):
            is_probable_prime(97, 0)


class TestGenPrime:
    def test_eight_bit_range(self):
        rng = RngHandle(1)
        for _ in range(20):
            p = gen_prime(8, rng)
            assert 128 <= p <= 255
            assert trial_division_is_prime(p)

    def test_exact_bit_length(self):
        rng = RngHandle(2)
        for bits in (8, 16, 24, 48, 64):
            p = gen_prime(bits, rng)
            assert p.bit_length() == bits
            assert p % 2 == 1

    def test_seeded_replay(self):
        assert gen_prime(16, RngHandle(99)) == gen_prime(16, RngHandle(99))

    def test_large_prime_self_check(self):
        p = gen_prime(512, RngHandle(5))
        assert p.bit_length() == 512
        assert is_probable_prime(p, 40)

    def test_too_small(self):
        with pytest.raises(ValueError):
            gen_prime(7, RngHandle(0))


class TestRandBelow:
    def test_single_value(self):
        rng = RngHandle(3)
        assert all(rand_below(2, rng) == 1 for _ in range(10))

    def test_range_contract(self):
        rng = RngHandle(4)
        q = 11
        draws = [rand_below(q, rng) for _ in range(10_000)]
        assert all(1 <= v <= q - 1 for v in draws)
        assert set(draws) == set(range(1, q))  # all values reachable

    def test_seeded_replay(self):
        a = [rand_below(1000, RngHandle(8)) for _ in range(5)]
        b = [rand_below(1000, RngHandle(8)) for _ in range(5)]
        # same seed, fresh handle each draw: both sequences start identically
        assert a == b
        r1, r2 = RngHandle(123), RngHandle(123)
        assert [rand_below(10**9, r1) for _ in range(100)] == [
            rand_below(10**9, r2) for _ in range(100)
        ]

    def test_bad_upper(self):
        with pytest.raises(ValueError):
            rand_below(1, RngHandle(0))
