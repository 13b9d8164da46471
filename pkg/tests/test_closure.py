import unittest

from src.closure.ascent import closure_ascent, grow_integral_elements, growth_step
from src.closure.criteria import (
    CHAR_ZERO,
    GENERICALLY_CI,
    JACOBIAN_IDEAL,
    UNMIXED,
    generic_socle,
    goto_reduction_check,
    gorenstein_gci_test,
    integrality_reduction_number,
    integrality_witness_check,
    is_integrally_closed,
    jacobian_ideal,
    jacobian_test,
    radical_formula_test,
)
from src.core.errors import CharacteristicError, DegenerateInputError, PreconditionError, RefutedRadicalError
from src.core.models import AscentStatus, CheckStatus, ClosednessMethod, JacobianVariant, Verdict
from src.ideals.handle import IdealHandle
from src.ideals.radical import radical_zero_dim
from src.monomial.closure import monomial_integral_closure
from tests.support import P, ideal, load_problem, ring, use_default_config


def setUpModule():
    use_default_config()


class RadicalFormulaTests(unittest.TestCase):
    def test_northcott_generic_socle(self):
        problem = load_problem("northcott.txt")
        I, M = problem.ideal("I"), problem.ideal("M")
        L = generic_socle(I, M)
        self.assertTrue(L.equals(ideal(problem.ring, "x^2", "x*y^3", "y^4")))
        raw, parts = radical_formula_test(I, M)
        self.assertTrue(raw)
        self.assertTrue(parts["B"].equals(M))

    def test_formula_fails_for_non_closed_ci(self):
        R = ring("x,y")
        raw, parts = radical_formula_test(ideal(R, "x^2", "y^2"), ideal(R, "x", "y"))
        self.assertFalse(raw)
        self.assertTrue(parts["L"].equals(ideal(R, "x^2", "x*y", "y^2")))

    def test_refuted_candidate(self):
        R = ring("x,y")
        with self.assertRaises(RefutedRadicalError) as ctx:
            radical_formula_test(ideal(R, "x^2", "y^2"), ideal(R, "x"))
        self.assertEqual(ctx.exception.offending, "y^2")


class JacobianTests(unittest.TestCase):
    def test_jacobian_ideal_variants(self):
        R = ring("x,y")
        I = ideal(R, "x^2", "y^2")
        self.assertEqual(jacobian_ideal(I, JacobianVariant.MINORS_ONLY).render(), ["x*y"])
        self.assertTrue(jacobian_ideal(I).equals(ideal(R, "x^2", "x*y", "y^2")))

    def test_jacobian_test(self):
        R = ring("x,y")
        self.assertFalse(jacobian_test(ideal(R, "x^2", "y^2"), JacobianVariant.IDEAL_PLUS_MINORS))
        self.assertTrue(jacobian_test(ideal(R, "x", "y^2"), JacobianVariant.MINORS_ONLY))
        northcott = load_problem("northcott.txt").ideal("I")
        self.assertTrue(jacobian_test(northcott, JacobianVariant.MINORS_ONLY, seed=0))

    def test_jacobian_needs_unmixed(self):
        R = ring("x,y")
        with self.assertRaises(PreconditionError):
            jacobian_test(ideal(R, "x^2", "x*y"), seed=0)

    def test_jacobian_rejects_char_p(self):
        R = ring("x,y", characteristic=5)
        with self.assertRaises(CharacteristicError):
            jacobian_test(ideal(R, "x^2", "y^2"))


class GorensteinTests(unittest.TestCase):
    def test_square_colon(self):
        R = ring("x,y,z")
        self.assertTrue(gorenstein_gci_test(ideal(R, "x", "y", "z")))
        # x^2 ∈ I^2 : I 但不在 I 中
        self.assertFalse(gorenstein_gci_test(ideal(R, "x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2")))


class WitnessTests(unittest.TestCase):
    def test_northcott_witness(self):
        problem = load_problem("northcott.txt")
        I = problem.ideal("I")
        R = problem.ring
        self.assertEqual(integrality_reduction_number(P(R, "x*y^3"), I), 1)
        self.assertEqual(integrality_reduction_number(P(R, "x^2"), I), 0)
        self.assertIsNone(integrality_reduction_number(P(R, "x*y^2"), I))
        self.assertFalse(integrality_witness_check(P(R, "y^4"), I))

    def test_quotient_witness(self):
        problem = load_problem("quotient.txt")
        R = problem.ring
        I = problem.ideal("I")
        self.assertEqual(integrality_reduction_number(P(R, "z"), I), 3)
        self.assertIsNone(integrality_reduction_number(P(R, "z"), I, rmax=2))
        self.assertEqual(integrality_reduction_number(P(R, "z"), IdealHandle(R, [P(R, "x"), P(R, "y")])), 3)

    def test_negative_bound(self):
        R = ring("x,y")
        with self.assertRaises(DegenerateInputError):
            integrality_reduction_number(P(R, "x"), ideal(R, "x"), rmax=-1)


class GotoTests(unittest.TestCase):
    def test_both_parts_hold(self):
        R = ring("x,y")
        check = goto_reduction_check(ideal(R, "x^2", "y^2"), ideal(R, "x", "y"))
        self.assertTrue(check.l_squared_equals_il)
        self.assertTrue(check.im_equals_lm)
        self.assertTrue(check.holds)
        self.assertFalse(check.out_of_hypothesis)

    def test_first_part_fails(self):
        R = ring("x,y")
        check = goto_reduction_check(ideal(R, "x", "y^2"), ideal(R, "x", "y"))
        self.assertFalse(check.l_squared_equals_il)
        self.assertFalse(check.holds)


class VerdictTests(unittest.TestCase):
    def test_northcott_is_inconclusive(self):
        problem = load_problem("northcott.txt")
        report = is_integrally_closed(problem.ideal("I"), problem.ideal("M"), seed=0)
        self.assertTrue(report.raw_result)
        self.assertEqual(report.hypothesis_checks[UNMIXED].status, CheckStatus.PASS)
        self.assertEqual(report.hypothesis_checks[GENERICALLY_CI].status, CheckStatus.FAIL)
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)

    def test_certified_not_closed(self):
        R = ring("x,y")
        report = is_integrally_closed(ideal(R, "x^2", "y^2"), ideal(R, "x", "y"),
                                      method=ClosednessMethod.RADICAL_FORMULA, seed=0)
        self.assertFalse(report.raw_result)
        self.assertEqual(report.verdict, Verdict.NOT_CLOSED)
        self.assertEqual(report.witnesses["H"], ["y^2", "x*y", "x^2"])

    def test_jacobian_method(self):
        R = ring("x,y")
        report = is_integrally_closed(ideal(R, "x^2", "y^2"), method="jacobian", seed=0)
        self.assertEqual(report.verdict, Verdict.NOT_CLOSED)
        self.assertEqual(report.witnesses["H"], ["y^2", "x*y", "x^2"])
        self.assertEqual(report.hypothesis_checks[CHAR_ZERO].status, CheckStatus.PASS)

    def test_radical_required(self):
        R = ring("x,y")
        with self.assertRaises(PreconditionError):
            is_integrally_closed(ideal(R, "x", "y"), method=ClosednessMethod.RADICAL_FORMULA)

    def test_linear_pfaffians_are_closed(self):
        problem = load_problem("pfaffian.txt")
        report = is_integrally_closed(problem.ideal("I"), problem.ideal("Rad"), seed=0)
        self.assertTrue(report.raw_result)
        self.assertEqual(report.verdict, Verdict.CLOSED)
        self.assertIn("L", report.witnesses)

    def test_gorenstein_method_on_linear_pfaffians(self):
        problem = load_problem("pfaffian.txt")
        I, rad = problem.ideal("I"), problem.ideal("Rad")
        report = is_integrally_closed(I, rad, method=ClosednessMethod.GORENSTEIN,
                                      assert_gen_gorenstein=True, seed=0)
        self.assertTrue(gorenstein_gci_test(I))
        self.assertTrue(radical_formula_test(I, rad)[0])
        self.assertTrue(report.raw_result)
        self.assertEqual(report.verdict, Verdict.CLOSED)
        self.assertIn("I^2:I", report.witnesses)

    def test_gorenstein_method_when_square_colon_grows(self):
        R = ring("x,y,z")
        I = ideal(R, "x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2")
        report = is_integrally_closed(I, ideal(R, "x", "y", "z"), method="gorenstein",
                                      assert_gen_gorenstein=True, seed=0)
        self.assertFalse(gorenstein_gci_test(I))
        self.assertFalse(report.raw_result)
        self.assertNotEqual(report.verdict, Verdict.CLOSED)

    def test_jacobian_method_in_a_quotient_ring(self):
        problem = load_problem("quotient.txt")
        report = is_integrally_closed(problem.ideal("I"), method="jacobian", seed=0)
        self.assertEqual(report.hypothesis_checks[JACOBIAN_IDEAL].status, CheckStatus.ERROR)
        self.assertFalse(report.raw_result)
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)

    def test_not_closed_verdicts_are_backed_by_growth(self):
        R = ring("x,y")
        m = ideal(R, "x", "y")
        for gens in (("x^2", "y^2"), ("x^2", "y^3"), ("x^3", "y^3")):
            I = ideal(R, *gens)
            with self.subTest(I=gens):
                report = is_integrally_closed(I, m, method=ClosednessMethod.RADICAL_FORMULA, seed=0)
                self.assertEqual(report.verdict, Verdict.NOT_CLOSED)
                H, certified = grow_integral_elements(I, m, seed=0)
                self.assertTrue(H.contains_ideal(I))
                self.assertFalse(I.contains_ideal(H))
                self.assertTrue(certified)
                self.assertTrue(monomial_integral_closure(I).contains_ideal(H))


class AscentTests(unittest.TestCase):
    def test_growth_step(self):
        R = ring("x,y")
        step = growth_step(ideal(R, "x", "y^2"), ideal(R, "x", "y"))
        self.assertTrue(step["H"].equals(ideal(R, "x", "y^2")))
        self.assertTrue(step["C"].is_unit())

    def test_grow(self):
        R = ring("x,y")
        H, certified = grow_integral_elements(ideal(R, "x^2", "y^2"), ideal(R, "x", "y"), seed=0)
        self.assertTrue(H.equals(ideal(R, "x^2", "x*y", "y^2")))
        self.assertTrue(certified)

    def test_grow_needs_hypotheses(self):
        problem = load_problem("northcott.txt")
        with self.assertRaises(PreconditionError):
            grow_integral_elements(problem.ideal("I"), problem.ideal("M"), seed=0)

    def test_ascent_reaches_fixed_point(self):
        R = ring("x,y")
        result = closure_ascent(ideal(R, "x^2", "y^2"), ideal(R, "x", "y"), seed=0)
        self.assertEqual(result.status, AscentStatus.FIXED_POINT)
        self.assertEqual(len(result.chain), 2)
        self.assertTrue(result.last.equals(ideal(R, "x^2", "x*y", "y^2")))

    def test_chain_keeps_the_radical(self):
        R = ring("x,y")
        m = ideal(R, "x", "y")
        for gens in (("x^2", "y^2"), ("x^3", "y^3")):
            I = ideal(R, *gens)
            with self.subTest(I=gens):
                result = closure_ascent(I, m, seed=0)
                for Ik in result.chain:
                    self.assertTrue(radical_zero_dim(Ik).equals(m))
                self.assertTrue(monomial_integral_closure(I).contains_ideal(result.last))

    def test_zero_rounds(self):
        R = ring("x,y")
        I = ideal(R, "x^2", "y^2")
        result = closure_ascent(I, ideal(R, "x", "y"), max_rounds=0)
        self.assertEqual(result.chain, [I])
        self.assertEqual(result.status, AscentStatus.MAX_ROUNDS)


if __name__ == "__main__":
    unittest.main()
