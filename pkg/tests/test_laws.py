import unittest

from pydend.exception import ConfigException, StructureException
from pydend.field import PrimeField
from pydend.freedend import FreeDendriform
from pydend.laws import (
    SUITE_ALL,
    LawAbstract,
    LawReport,
    SamplingPlan,
    get_laws,
    resolve_suite,
    suite_names,
    verify_dendriform,
    verify_dzhumadildaev,
    verify_functor_squares,
    verify_operator_identities,
    verify_prelie,
    verify_restricted_lie,
    verify_restricted_prelie,
    verify_zinbiel,
)
from pydend.library import matrix_algebra, truncated_polynomial, zero_algebra
from pydend.scalg import BilinearStructure, trivial_dendriform
from pydend.structures import DendriformOps, ProductTable, VectorOps, dense_constants


def free_pmap_plan(y_max_degree, count=30, seed=0):
    return SamplingPlan.exhaustive().set_x_degree(1).set_y_max_degree(y_max_degree).set_count(count).set_seed(seed)


class TestSamplingPlan(unittest.TestCase):
    def test_fluent_setters(self):
        plan = SamplingPlan.random(10, seed=4, max_degree=3).set_terms(2)
        self.assertFalse(plan.is_exhaustive())
        self.assertEqual(
            plan.to_dict(),
            {
                "mode": "random",
                "max_degree": 3,
                "count": 10,
                "seed": 4,
                "terms": 2,
                "x_degree": None,
                "y_max_degree": None,
            },
        )

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            SamplingPlan().set_mode("grid")


class TestLawReport(unittest.TestCase):
    def test_verdict_follows_counterexamples(self):
        report = LawReport("demo", SamplingPlan.exhaustive())
        self.assertTrue(report.record("r", [1], 0, True))
        self.assertTrue(report.passed())
        self.assertFalse(report.record("r", [2], 5, False))
        self.assertFalse(report.passed())
        data = report.to_dict()
        self.assertEqual(data["verdict"], "fail")
        self.assertEqual(data["checked"], 2)
        self.assertEqual(data["counterexamples"], [{"relation": "r", "inputs": [2], "residual": 5}])
        self.assertEqual(report.relations_failed(), ["r"])

    def test_merge(self):
        first = LawReport("demo")
        first.record("a", [1], 0, True)
        second = LawReport("demo")
        second.record("b", [2], 1, False)
        first.merge(second)
        self.assertEqual(first.get_checked(), 2)
        self.assertEqual(first.get_violations(), 1)

    def test_storage_is_capped(self):
        report = LawReport("demo", max_stored=3)
        for i in range(10):
            report.record("r", [i], 1, False)
        self.assertEqual(report.get_violations(), 10)
        self.assertEqual(len(report.get_counterexamples()), 3)


class TestSuites(unittest.TestCase):
    def test_registry(self):
        self.assertEqual(
            sorted(get_laws()),
            [
                "dendriform",
                "dzhumadildaev",
                "functor-squares",
                "operators",
                "prelie",
                "restricted-lie",
                "restricted-prelie",
                "zinbiel",
            ],
        )
        self.assertIn(SUITE_ALL, suite_names())

    def test_abstract_bases(self):
        for base in (LawAbstract, VectorOps, DendriformOps):
            with self.assertRaises(TypeError):
                base()

    def test_all_leaves_out_predicates(self):
        names = [law.name for law in resolve_suite(SUITE_ALL)]
        self.assertNotIn("zinbiel", names)
        self.assertNotIn("dzhumadildaev", names)
        self.assertIn("restricted-prelie", names)
        with self.assertRaises(ConfigException):
            resolve_suite("jordan")

    def test_structure_requirements(self):
        table = matrix_algebra(2, 2).as_prelie()
        with self.assertRaises(StructureException):
            verify_dendriform(table, SamplingPlan.exhaustive())
        with self.assertRaises(StructureException):
            verify_restricted_prelie(table, None, SamplingPlan.exhaustive())


class TestFreeAlgebraLaws(unittest.TestCase):
    def test_dendriform_axioms(self):
        for p in (2, 3, 5):
            free = FreeDendriform(PrimeField(p), 1)
            report = verify_dendriform(free, SamplingPlan.exhaustive(6))
            self.assertTrue(report.passed(), report.get_counterexamples())
            self.assertGreater(report.get_checked(), 0)
        free = FreeDendriform(PrimeField(3), 2)
        report = verify_dendriform(free, SamplingPlan.random(500, seed=1, max_degree=3))
        self.assertTrue(report.passed())

    def test_prelie(self):
        free = FreeDendriform(PrimeField(3), 1)
        self.assertTrue(verify_prelie(free, SamplingPlan.exhaustive(5)).passed())

    def test_not_zinbiel(self):
        free = FreeDendriform(PrimeField(2), 1)
        report = verify_zinbiel(free, SamplingPlan.exhaustive(2))
        self.assertFalse(report.passed())
        self.assertEqual(report.relations_failed(), ["zinbiel"])

    def test_star_power_is_restricted(self):
        for p, y_max in ((2, 3), (3, 2)):
            free = FreeDendriform(PrimeField(p), 1)
            plan = free_pmap_plan(y_max)
            report = verify_restricted_prelie(free, free.star_power, plan)
            self.assertTrue(report.passed(), report.get_counterexamples())
            self.assertTrue(verify_operator_identities(free, plan).passed())

    def test_restricted_lie(self):
        free = FreeDendriform(PrimeField(2), 2)
        self.assertTrue(verify_restricted_lie(free, free.star_power, free_pmap_plan(2, count=10)).passed())

    def test_functor_squares(self):
        free = FreeDendriform(PrimeField(3), 1)
        plan = SamplingPlan.exhaustive(2).set_x_degree(1).set_y_max_degree(2).set_count(10)
        self.assertTrue(verify_functor_squares(free, plan).passed())

    def test_random_plans_are_reproducible(self):
        free = FreeDendriform(PrimeField(3), 2)
        plan = SamplingPlan.random(20, seed=42, max_degree=2)
        self.assertEqual(verify_dendriform(free, plan).to_dict(), verify_dendriform(free, plan).to_dict())


class TestStructureConstantLaws(unittest.TestCase):
    def test_jacobson_on_matrices(self):
        for n in (2, 3):
            for p in (2, 3):
                algebra = matrix_algebra(n, p)
                plan = SamplingPlan.exhaustive().set_count(200).set_seed(n * p)
                report = verify_restricted_lie(algebra, algebra.frobenius, plan)
                self.assertTrue(report.passed(), (n, p, report.get_counterexamples()[:1]))

    def test_zero_pmap_on_nonabelian(self):
        algebra = matrix_algebra(2, 2)
        report = verify_restricted_lie(algebra, lambda x: algebra.zero(), SamplingPlan.exhaustive().set_count(0))
        self.assertFalse(report.passed())
        self.assertIn("ad-power", report.relations_failed())

    def test_zero_pmap_on_abelian(self):
        algebra = zero_algebra(3, 2)
        plan = SamplingPlan.exhaustive().set_count(20)
        self.assertTrue(verify_restricted_lie(algebra, lambda x: algebra.zero(), plan).passed())
        table = algebra.as_prelie()
        self.assertTrue(verify_restricted_prelie(table, lambda x: table.zero(), plan).passed())

    def test_associative_product_is_prelie(self):
        table = matrix_algebra(2, 3).as_prelie()
        self.assertTrue(verify_prelie(table, SamplingPlan.exhaustive()).passed())

    def test_perturbed_prelie_fails(self):
        field = PrimeField(2)
        table = ProductTable(field, dense_constants(field, 2, [[0, 1, 0, 1]]), ["e1", "e2"])
        report = verify_prelie(table, SamplingPlan.exhaustive())
        self.assertFalse(report.passed())
        self.assertEqual(report.relations_failed(), ["left-symmetry"])

    def test_trivial_splitting_chain(self):
        for p in (2, 3):
            algebra = matrix_algebra(2, p)
            structure = trivial_dendriform(algebra)
            plan = SamplingPlan.exhaustive().set_count(30)
            self.assertTrue(verify_dendriform(structure, plan).passed())
            self.assertTrue(verify_restricted_prelie(structure, algebra.frobenius, plan).passed())
            self.assertTrue(verify_functor_squares(structure, plan).passed())
            self.assertTrue(verify_operator_identities(structure, plan).passed())
            self.assertTrue(verify_dzhumadildaev(structure, plan).passed())

    def test_zinbiel_on_commutative_algebra(self):
        algebra = truncated_polynomial(3, 3)
        c = algebra.constants
        structure = BilinearStructure(algebra.field, c, c)
        self.assertTrue(verify_zinbiel(structure, SamplingPlan.exhaustive()).passed())
        zero = BilinearStructure(algebra.field, algebra.field.zeros(c.shape), algebra.field.zeros(c.shape))
        self.assertTrue(verify_zinbiel(zero, SamplingPlan.exhaustive()).passed())
        self.assertTrue(verify_dendriform(zero, SamplingPlan.exhaustive()).passed())
        self.assertTrue(verify_functor_squares(zero, SamplingPlan.exhaustive().set_count(5)).passed())
