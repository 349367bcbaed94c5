import unittest

from pydend.exception import FieldException
from pydend.field import MAX_MODULUS, FieldOp, FpScalar, PrimeField, field_ops, fp_inv, fp_pow, is_prime


class TestPrimeField(unittest.TestCase):
    def test_is_prime(self):
        primes = [n for n in range(60) if is_prime(n)]
        self.assertEqual(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59])
        self.assertTrue(is_prime(MAX_MODULUS))
        self.assertFalse(is_prime(MAX_MODULUS - 2))

    def test_rejects_bad_modulus(self):
        for bad in (0, 1, 4, 91, MAX_MODULUS + 2):
            with self.assertRaises(FieldException):
                PrimeField(bad)

    def test_inverse_and_power(self):
        field = PrimeField(7)
        self.assertEqual(field.inv(4), 2)
        self.assertEqual(field.power(3, 7), 3)
        with self.assertRaises(FieldException):
            field.inv(14)

    def test_dtype_widens_for_large_moduli(self):
        small = PrimeField(5)
        large = PrimeField(MAX_MODULUS)
        self.assertIsNot(small.dtype_for(1000), object)
        self.assertIs(large.dtype_for(2**10), object)


class TestFpScalar(unittest.TestCase):
    def test_field_ops(self):
        self.assertEqual(field_ops(FpScalar(3, 5), FpScalar(4, 5), FieldOp.ADD).value, 2)
        self.assertEqual(field_ops(FpScalar(0, 7), FpScalar(6, 7), FieldOp.MUL).value, 0)
        self.assertEqual(field_ops(FpScalar(1, 2), FpScalar(2, 2), FieldOp.SUB).value, 1)
        self.assertEqual(FpScalar(3, 5) + FpScalar(4, 5), 2)
        self.assertEqual(-FpScalar(1, 3), FpScalar(2, 3))

    def test_modulus_mismatch(self):
        with self.assertRaises(FieldException) as ctx:
            FpScalar(1, 3) + FpScalar(1, 5)
        self.assertIn("3", str(ctx.exception))
        self.assertIn("5", str(ctx.exception))

    def test_inverse(self):
        self.assertEqual(fp_inv(FpScalar(1, 11)).value, 1)
        self.assertEqual(fp_inv(FpScalar(2, 5)).value, 3)
        self.assertEqual(fp_inv(FpScalar(4, 7)).value, 2)
        for p in (2, 3, 5, 7, 257):
            for a in range(1, p):
                self.assertEqual((FpScalar(a, p) * fp_inv(FpScalar(a, p))).value, 1)
        with self.assertRaises(FieldException):
            fp_inv(FpScalar(0, 5))

    def test_fermat(self):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            for a in range(p):
                self.assertEqual(fp_pow(FpScalar(a, p), p).value, a)

    def test_negative_power(self):
        self.assertEqual((FpScalar(2, 5) ** -1).value, 3)
