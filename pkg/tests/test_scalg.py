import unittest

import numpy as np

from pydend.exception import ConfigException, GateException, StructureException
from pydend.field import PrimeField
from pydend.laws import SamplingPlan, verify_dendriform, verify_functor_squares, verify_restricted_prelie
from pydend.library import get_library_algebra, matrix_algebra, truncated_polynomial, upper_triangular, zero_algebra
from pydend.scalg import (
    BilinearStructure,
    LinearOperator,
    SCAlgebra,
    StructureTag,
    TensorElement,
    algebra_mul,
    aybe_residual,
    check_aybe,
    check_rota_baxter,
    frobenius,
    induced_dendriform,
    rb_from_tensor,
    trivial_dendriform,
)


class TestSCAlgebra(unittest.TestCase):
    def setUp(self):
        self.m2 = matrix_algebra(2, 2)

    def test_matrix_units(self):
        e11, e12 = self.m2.e(0), self.m2.e(1)
        self.assertTrue(self.m2.equal(algebra_mul(self.m2, e11, e12), e12))
        self.assertTrue(self.m2.is_zero(algebra_mul(self.m2, e12, e12)))
        self.assertEqual(self.m2.names, ["e11", "e12", "e21", "e22"])

    def test_frobenius(self):
        self.assertTrue(self.m2.is_zero(frobenius(self.m2, self.m2.e(1))))
        m3 = matrix_algebra(2, 3)
        diag = m3.vector([2, 0, 0, 1])
        self.assertEqual(m3.describe(frobenius(m3, diag)), [2, 0, 0, 1])

    def test_unit(self):
        self.assertEqual(self.m2.describe(self.m2.unit()), [1, 0, 0, 1])
        x = self.m2.vector([1, 1, 0, 1])
        self.assertTrue(self.m2.equal(self.m2.mul(self.m2.unit(), x), x))
        self.assertIsNone(zero_algebra(2, 1).unit())
        self.assertIsNone(zero_algebra(2).unit())

    def test_non_associative_constants(self):
        field = PrimeField(2)
        with self.assertRaises(StructureException) as ctx:
            SCAlgebra.from_sparse(2, 2, [[0, 0, 1, 1], [1, 0, 0, 1]], ["a", "b"])
        self.assertIn("(a, a, a)", str(ctx.exception))
        with self.assertRaises(StructureException):
            SCAlgebra(field, field.zeros((2, 2, 3)))

    def test_dimension_mismatch(self):
        with self.assertRaises(StructureException):
            self.m2.mul(self.m2.e(0), np.zeros(3, dtype=np.int64))

    def test_library(self):
        self.assertEqual(upper_triangular(2, 2).dim, 3)
        poly = truncated_polynomial(3, 5)
        x = poly.e(1)
        self.assertEqual(poly.describe(poly.mul(x, x)), [0, 0, 1])
        self.assertTrue(poly.is_zero(poly.power(x, 3)))
        self.assertEqual(get_library_algebra("m3", 2).dim, 9)
        with self.assertRaises(ConfigException):
            get_library_algebra("m4", 2)

    def test_sparse_round_trip(self):
        rebuilt = SCAlgebra.from_sparse(2, 4, self.m2.to_sparse(), self.m2.names)
        self.assertTrue(np.array_equal(rebuilt.constants, self.m2.constants))


class TestRotaBaxter(unittest.TestCase):
    def test_zero_operator(self):
        algebra = matrix_algebra(2, 3)
        report = check_rota_baxter(algebra, LinearOperator.zero(algebra.field, 4))
        self.assertTrue(report.passed())
        self.assertEqual(report.get_checked(), 16)

    def test_identity_needs_a_zero_product(self):
        # β(x)β(y) = xy against β(2xy) = 2xy
        for p in (2, 3):
            algebra = matrix_algebra(2, p)
            self.assertFalse(check_rota_baxter(algebra, LinearOperator.identity(algebra.field, 4)).passed())
        algebra = zero_algebra(2, 2)
        self.assertTrue(check_rota_baxter(algebra, LinearOperator.identity(algebra.field, 2)).passed())

    def test_identity_on_zero_product(self):
        algebra = zero_algebra(3, 2)
        structure = induced_dendriform(algebra, LinearOperator.identity(algebra.field, 2))
        self.assertEqual(structure.tag, StructureTag.ROTA_BAXTER)
        self.assertFalse(np.any(structure.left_constants))
        self.assertTrue(verify_dendriform(structure, SamplingPlan.exhaustive()).passed())

    def test_gate_refuses(self):
        algebra = matrix_algebra(2, 3)
        with self.assertRaises(GateException) as ctx:
            induced_dendriform(algebra, LinearOperator.identity(algebra.field, 4))
        self.assertFalse(ctx.exception.report.passed())

    def test_operator_shape(self):
        algebra = truncated_polynomial(2, 2)
        with self.assertRaises(StructureException):
            check_rota_baxter(algebra, LinearOperator.identity(algebra.field, 3))
        with self.assertRaises(StructureException):
            LinearOperator.from_row_major(algebra.field, 2, [1, 0, 0])

    def test_operator_algebra(self):
        field = PrimeField(3)
        beta = LinearOperator.from_row_major(field, 2, [0, 1, 0, 0])
        self.assertEqual(beta.row_major(), [0, 1, 0, 0])
        self.assertEqual(list(beta(np.array([0, 2]))), [2, 0])
        self.assertTrue(beta.compose(beta).is_zero())
        self.assertEqual(beta, LinearOperator.from_row_major(field, 2, [0, 4, 3, 0]))

    def test_nilpotent_operator_chain(self):
        algebra = truncated_polynomial(2, 2)
        beta = LinearOperator.from_row_major(algebra.field, 2, [0, 0, 1, 0])
        structure = induced_dendriform(algebra, beta)
        plan = SamplingPlan.exhaustive().set_count(20)
        self.assertTrue(verify_dendriform(structure, plan).passed())
        self.assertTrue(verify_restricted_prelie(structure, structure.star_power, plan).passed())
        self.assertTrue(verify_functor_squares(structure, plan).passed())


class TestTrivialSplitting(unittest.TestCase):
    def test_bracket_is_the_product(self):
        algebra = matrix_algebra(2, 3)
        structure = trivial_dendriform(algebra)
        self.assertEqual(structure.tag, StructureTag.TRIVIAL_SPLITTING)
        rng = np.random.default_rng(3)
        for _ in range(10):
            x, y = algebra.random_element(rng), algebra.random_element(rng)
            self.assertTrue(algebra.equal(structure.prelie(x, y), algebra.mul(x, y)))
            self.assertTrue(algebra.equal(structure.star(x, y), algebra.mul(x, y)))

    def test_perturbed_tables_fail(self):
        algebra = matrix_algebra(2, 2)
        structure = trivial_dendriform(algebra).perturbed("left", 0, 0, 0)
        report = verify_dendriform(structure, SamplingPlan.exhaustive())
        self.assertFalse(report.passed())
        self.assertTrue(report.get_counterexamples())

    def test_bilinear_shapes(self):
        field = PrimeField(2)
        with self.assertRaises(StructureException):
            BilinearStructure(field, field.zeros((2, 2, 2)), field.zeros((3, 3, 3)))


class TestAYBE(unittest.TestCase):
    def setUp(self):
        self.algebra = truncated_polynomial(2, 2)

    def test_zero_tensor(self):
        r = TensorElement(self.algebra, [])
        self.assertTrue(check_aybe(self.algebra, r).passed())
        self.assertTrue(rb_from_tensor(self.algebra, r).is_zero())

    def test_square_zero_summand(self):
        r = TensorElement(self.algebra, [([0, 1], [0, 1])])
        self.assertTrue(check_aybe(self.algebra, r).passed())
        self.assertFalse(np.any(aybe_residual(self.algebra, r)))
        self.assertTrue(rb_from_tensor(self.algebra, r).is_zero())
        self.assertEqual(r.to_json(), [[[0, 1], [0, 1]]])

    def test_non_solution_rejected(self):
        r = TensorElement(self.algebra, [([1, 0], [1, 0])])
        report = check_aybe(self.algebra, r)
        self.assertFalse(report.passed())
        self.assertEqual(report.get_violations(), 1)
        with self.assertRaises(GateException):
            rb_from_tensor(self.algebra, r)

    def test_zero_factors_pruned(self):
        r = TensorElement(self.algebra, [([0, 0], [1, 1]), ([1, 0], [0, 1])])
        self.assertEqual(len(r.summands), 1)
        self.assertEqual(r.matrix().tolist(), [[0, 1], [0, 0]])
