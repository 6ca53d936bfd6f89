import math
import random

import mpmath as mp
import pytest

import thetadist as td
from thetadist import LogScaledReal as LSR


class TestConstruction:
    def test_round_trip_small(self):
        for x in (1.0, 2.5, 1e-10, 3.14159, 1e300):
            v = LSR.from_real(x)
            assert abs(float(v.to_mpf()) - x) <= 1e-14 * x

    def test_round_trip_huge_int(self):
        n = 10**300 + 12345
        v = LSR.from_int(n)
        with mp.workprec(400):
            ref = mp.log(mp.mpf(n))
        assert abs(v.ln() - ref) < mp.mpf("1e-30") * ref

    def test_zero_and_one(self):
        assert LSR.zero().sign == 0
        assert LSR.zero().to_mpf() == 0
        assert LSR.one().to_mpf() == 1

    def test_negative(self):
        v = LSR.from_int(-7)
        assert v.sign == -1
        assert abs(v.to_mpf() + 7) < 1e-20

    def test_bad_sign(self):
        with pytest.raises(td.InvalidInput):
            LSR(2, 0)
        with pytest.raises(td.InvalidInput):
            LSR(1)  # nonzero sign without a magnitude


class TestArithmetic:
    def test_add_matches_exact_integers(self):
        rng = random.Random(1)
        for _ in range(50):
            a = rng.randint(1, 10**40)
            b = rng.randint(1, 10**40)
            s = LSR.from_int(a) + LSR.from_int(b)
            with mp.workprec(256):
                ref = mp.log(mp.mpf(a + b))
            assert abs(s.ln() - ref) < mp.mpf("1e-30")

    def test_mul_matches_exact_integers(self):
        rng = random.Random(2)
        for _ in range(50):
            a = rng.randint(1, 10**40)
            b = rng.randint(1, 10**40)
            m = LSR.from_int(a) * LSR.from_int(b)
            with mp.workprec(256):
                ref = mp.log(mp.mpf(a) * b)
            assert abs(m.ln() - ref) < mp.mpf("1e-30")

    def test_pow_matches_exact(self):
        v = LSR.from_int(3) ** 1000
        with mp.workprec(256):
            ref = 1000 * mp.log(mp.mpf(3))
        assert abs(v.ln() - ref) < mp.mpf("1e-30")

    def test_huge_values_never_overflow(self):
        v = (LSR.from_int(10) ** (10**12)) * (LSR.from_int(7) ** (10**11))
        assert mp.isfinite(v.ln())
        with mp.workprec(192):
            ref = 10**12 * mp.log(mp.mpf(10)) + 10**11 * mp.log(mp.mpf(7))
        assert abs(v.ln() - ref) < mp.mpf("1e-18") * ref

    def test_add_zero_identity(self):
        v = LSR.from_int(5)
        assert (v + LSR.zero()).ln() == v.ln()
        assert (LSR.zero() + v).ln() == v.ln()

    def test_mixed_sign_addition_rejected(self):
        with pytest.raises(td.InvalidInput):
            LSR.from_int(3) + LSR.from_int(-2)

    def test_negative_power_rejected(self):
        with pytest.raises(td.InvalidInput):
            LSR.from_int(-3) ** 2
        with pytest.raises(td.InvalidInput):
            LSR.zero() ** 0

    def test_coercion_from_python_numbers(self):
        v = LSR.from_int(4) * 2
        assert abs(v.to_mpf() - 8) < 1e-20
        w = 1 + LSR.from_int(1)
        assert abs(w.to_mpf() - 2) < 1e-20


class TestQueries:
    def test_ordering(self):
        vals = [LSR.from_int(n) for n in (-5, -1, 0, 1, 7)]
        assert vals == sorted(vals)
        assert LSR.zero() < LSR.one()
        assert LSR.from_int(-100) < LSR.zero()
        assert LSR.from_int(3) <= LSR.from_int(3)

    def test_comparison_with_ints(self):
        assert LSR.from_int(5) <= 5
        assert LSR.from_int(4) < 5
        assert LSR.from_int(5) == 5

    def test_log10(self):
        v = LSR.from_int(10) ** 100
        assert abs(v.log10() - 100) < mp.mpf("1e-30")

    def test_ln_of_nonpositive_rejected(self):
        with pytest.raises(td.InvalidInput):
            LSR.zero().ln()
        with pytest.raises(td.InvalidInput):
            LSR.from_int(-2).ln()

    def test_exp_of(self):
        v = LSR.exp_of(mp.mpf(1000))
        assert abs(v.ln() - 1000) == 0
        assert LSR.exp_of(0, -1).sign == -1

    def test_repr_mentions_sign_and_log(self):
        assert "0" in repr(LSR.zero())
        assert "ln=" in repr(LSR.from_int(3))
