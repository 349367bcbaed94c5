import unittest

from pydend.algebra_config import AlgebraConfJsonFile
from pydend.envelope import (
    CSV_COLUMNS,
    PreLieData,
    audit_pmap_relations,
    ideal_span,
    membership_check,
    quotient_dims,
    relation_generators_U,
    relation_generators_Up,
    relation_ideal,
)
from pydend.exception import EnvelopeException
from pydend.field import PrimeField
from pydend.freedend import FreeDendriform
from pydend.linalg import rref_mod
from pydend.trees import trees_up_to


def abelian(p, pmap=None):
    field = PrimeField(p)
    return PreLieData(field, field.zeros((1, 1, 1)), pmap, ["x"])


def fixture(name):
    return AlgebraConfJsonFile(name).find_prelie()


def row_rank(free, elements, d):
    columns = trees_up_to(d, free.generators)
    index = {tree: i for i, tree in enumerate(columns)}
    mat = free.field.zeros((len(elements), len(columns)))
    for r, element in enumerate(elements):
        for tree, coeff in element.items():
            mat[r, index[tree]] = coeff
    return len(rref_mod(mat, free.field)[1])


class TestPreLieData(unittest.TestCase):
    def test_from_fixture(self):
        data = fixture("prelie2_f2")
        self.assertEqual(data.p, 2)
        self.assertEqual(data.dim, 2)
        self.assertTrue(data.has_pmap())
        self.assertEqual(list(data.pmap_row(1)), [0, 1])
        self.assertEqual(data.free.generators, 2)

    def test_not_prelie(self):
        with self.assertRaises(EnvelopeException):
            fixture("not_prelie_f2")

    def test_pmap_must_be_restricted(self):
        field = PrimeField(2)
        constants = field.zeros((2, 2, 2))
        constants[1, 0, 0] = 1
        with self.assertRaises(EnvelopeException):
            PreLieData(field, constants, [[0, 0], [0, 0]])
        with self.assertRaises(EnvelopeException):
            PreLieData(field, constants, [[0, 0]])
        data = PreLieData(field, constants, [[0, 0], [0, 0]], validate=False)
        self.assertTrue(data.has_pmap())

    def test_pmap_extension(self):
        data = fixture("prelie2_f2")
        table = data.table
        self.assertEqual(list(data.pmap_of(table.e(1))), [0, 1])
        # (e1 + e2)^[2] = e1^[2] + e2^[2] + [e2, e1] = 0 + e2 + e1
        self.assertEqual(list(data.pmap_of(table.vector([1, 1]))), [1, 1])
        self.assertEqual(list(data.pmap_of(table.zero())), [0, 0])

    def test_pmap_missing(self):
        data = abelian(2)
        self.assertFalse(data.has_pmap())
        with self.assertRaises(EnvelopeException):
            data.pmap_row(0)

    def test_embed(self):
        data = fixture("prelie2_f2")
        free = data.free
        self.assertEqual(data.embed(data.table.vector([1, 1])), free.generator(0) + free.generator(1))
        self.assertTrue(data.embed(data.table.zero()).is_zero())


class TestRelationGenerators(unittest.TestCase):
    def test_abelian(self):
        data = abelian(3)
        free = data.free
        x = free.generator(0)
        self.assertEqual(relation_generators_U(data), [free.left(x, x) - free.right(x, x)])

    def test_restricted(self):
        data = abelian(2, [[1]])
        free = data.free
        x = free.generator(0)
        generators = relation_generators_Up(data)
        self.assertEqual(len(generators), 2)
        self.assertEqual(generators[1], x - free.star_power(x))
        with self.assertRaises(EnvelopeException):
            relation_generators_Up(abelian(2))

    def test_pair_count(self):
        self.assertEqual(len(relation_generators_U(fixture("prelie2_f2"))), 4)
        self.assertEqual(len(relation_generators_Up(fixture("prelie2_f2"))), 6)


class TestIdealSpan(unittest.TestCase):
    def test_empty(self):
        with self.assertRaises(EnvelopeException):
            ideal_span([], 2)
        span = ideal_span([], 2, FreeDendriform(PrimeField(2), 1))
        self.assertEqual(span.rank, 0)
        self.assertEqual(span.basis(), [])

    def test_closure(self):
        free = FreeDendriform(PrimeField(2), 1)
        x = free.generator(0)
        span = ideal_span([x], 3)
        # every tree of degree <= 3 is a multiple of x
        self.assertEqual(span.rank, 1 + 2 + 5)
        self.assertEqual(span.rank_up_to(2), 3)
        self.assertGreaterEqual(span.rounds, 1)

    def test_generator_above_truncation(self):
        free = FreeDendriform(PrimeField(2), 1)
        x = free.generator(0)
        span = ideal_span([free.star(x, free.star(x, x))], 2)
        self.assertEqual(span.rank, 0)

    def test_canonical_basis(self):
        free = FreeDendriform(PrimeField(3), 1)
        x = free.generator(0)
        left, right = free.left(x, x), free.right(x, x)
        first = ideal_span([left + right, left - right], 2)
        second = ideal_span([left, right], 2)
        self.assertEqual(first.basis(), second.basis())
        self.assertEqual(first.pivot_trees(), second.pivot_trees())

    def test_vector_round_trip(self):
        free = FreeDendriform(PrimeField(2), 1)
        x = free.generator(0)
        span = ideal_span([], 2, free)
        element = free.star(x, x) + x
        self.assertEqual(span.to_element(span.to_vector(element)), element)
        with self.assertRaises(EnvelopeException):
            span.to_vector(free.star(x, free.star(x, x)))


class TestQuotientDims(unittest.TestCase):
    def test_abelian_char_two(self):
        report = quotient_dims(abelian(2), 2)
        self.assertEqual(report.quotient_dims(), [1, 2])
        report = quotient_dims(abelian(2), 3)
        self.assertEqual(report.free_dims(), [1, 2, 5])
        self.assertEqual([row["cumulative_free"] for row in report.rows], [1, 3, 8])

    def test_matches_row_reduction(self):
        for p in (2, 3):
            data = abelian(p)
            free = data.free
            x = free.generator(0)
            (r,) = relation_generators_U(data)
            # all of I ∩ F_<=3: r and its products with x on either side under either product
            spanning = [r, free.left(r, x), free.left(x, r), free.right(r, x), free.right(x, r)]
            report = quotient_dims(data, 3)
            self.assertEqual(report.ideal_ranks(), [0, row_rank(free, spanning[:1], 2), row_rank(free, spanning, 3)])
            self.assertEqual(report.quotient_dims()[-1], 8 - row_rank(free, spanning, 3))
        self.assertEqual(quotient_dims(abelian(2), 3).quotient_dims()[-1], 4)

    def test_monotone(self):
        for data, restricted in (
            (abelian(2), False),
            (abelian(3), False),
            (fixture("prelie2_f2"), False),
            (fixture("prelie2_f2"), True),
            (fixture("abelian1_f2_pmap0"), True),
        ):
            dims = quotient_dims(data, 3, restricted).quotient_dims()
            self.assertEqual(dims, sorted(dims), (data.p, restricted))

    def test_abelian_char_three(self):
        self.assertEqual(quotient_dims(abelian(3), 3).quotient_dims(), [1, 2, 3])

    def test_restricted(self):
        self.assertEqual(quotient_dims(abelian(2, [[0]]), 2, restricted=True).quotient_dims(), [1, 2])
        self.assertEqual(quotient_dims(abelian(2, [[1]]), 2, restricted=True).quotient_dims(), [0, 0])
        with self.assertRaises(EnvelopeException):
            quotient_dims(abelian(2), 2, restricted=True)

    def test_restricted_is_a_quotient(self):
        data = fixture("prelie2_f2")
        plain = quotient_dims(data, 2).quotient_dims()
        restricted = quotient_dims(data, 2, restricted=True).quotient_dims()
        for u, u_p in zip(plain, restricted):
            self.assertLessEqual(u_p, u)

    def test_stability(self):
        report = quotient_dims(abelian(2), 2, check_stability=True)
        self.assertEqual([row["stabilized"] for row in report.rows], [True, True])
        report = quotient_dims(abelian(2), 2)
        self.assertEqual([row["stabilized"] for row in report.rows], [None, None])

    def test_bad_truncation(self):
        with self.assertRaises(EnvelopeException):
            quotient_dims(abelian(2), 0)

    def test_no_generators(self):
        field = PrimeField(2)
        data = PreLieData(field, field.zeros((0, 0, 0)))
        report = quotient_dims(data, 3)
        self.assertEqual(report.rows, [])
        self.assertEqual(report.to_dict()["g"], 0)

    def test_outputs(self):
        report = quotient_dims(abelian(2), 2, check_stability=True)
        lines = report.to_csv().splitlines()
        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertEqual(lines[1], "1,1,1,0,1,true")
        data = report.to_dict()
        self.assertEqual(data["algebra"], "U")
        self.assertNotIn("audit", data)
        self.assertEqual(data["pivots"], ["(· x0 (· x0 ·))"])
        plain = quotient_dims(abelian(2), 2).to_csv().splitlines()
        self.assertEqual(plain[2], "2,2,3,1,2,")
        self.assertEqual(quotient_dims(abelian(2, [[0]]), 1, restricted=True).to_dict()["algebra"], "U_p")


class TestMembership(unittest.TestCase):
    def test_star_square(self):
        data = abelian(2)
        free = data.free
        x = free.generator(0)
        self.assertTrue(membership_check(data, 2, free.star(x, x)))
        self.assertFalse(membership_check(data, 2, free.right(x, x)))
        self.assertTrue(membership_check(data, 2, free.zero()))
        with self.assertRaises(EnvelopeException):
            membership_check(data, 1, free.star(x, x))

    def test_reuses_span(self):
        data = abelian(2, [[1]])
        free = data.free
        span = relation_ideal(data, 2, restricted=True)
        self.assertTrue(membership_check(data, 2, free.generator(0), restricted=True, span=span))


class TestAudit(unittest.TestCase):
    def test_passes(self):
        for data in (abelian(2, [[0]]), abelian(2, [[1]]), fixture("prelie2_f2")):
            report = quotient_dims(data, 2, restricted=True)
            rows = audit_pmap_relations(data, 2, 50, seed=3)
            self.assertEqual(len(rows), 50)
            self.assertTrue(all(row["member"] for row in rows))
            self.assertTrue(report.set_audit(rows).audit_passed())
            self.assertEqual(report.to_dict()["audit"]["failures"], 0)

    def test_zero_pmap_fixture(self):
        data = fixture("abelian1_f2_pmap0")
        free = data.free
        x = free.generator(0)
        span = relation_ideal(data, 2, restricted=True)
        # x^[2] = 0 puts x ⋆ x in the ideal
        self.assertTrue(membership_check(data, 2, free.star(x, x), restricted=True, span=span))
        report = quotient_dims(data, 2, restricted=True)
        rows = audit_pmap_relations(data, 2, 50, seed=0, span=span)
        self.assertEqual(len(rows), 50)
        self.assertTrue(report.set_audit(rows).audit_passed())
        self.assertEqual(report.to_dict()["audit"], {"checked": 50, "failures": 0, "rows": rows})

    def test_seeded(self):
        data = fixture("prelie2_f2")
        self.assertEqual(audit_pmap_relations(data, 2, 8, seed=1), audit_pmap_relations(data, 2, 8, seed=1))

    def test_needs_degree_p(self):
        with self.assertRaises(EnvelopeException):
            audit_pmap_relations(abelian(2, [[0]]), 1, 5)

    def test_failing_rows(self):
        report = quotient_dims(abelian(2, [[0]]), 2, restricted=True)
        report.set_audit([{"x": [1], "pmap": [0], "member": False}])
        self.assertFalse(report.audit_passed())
        self.assertEqual(report.to_dict()["audit"]["failures"], 1)
