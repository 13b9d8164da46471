import random
import unittest
from fractions import Fraction
from math import lcm

from src.core.errors import DegenerateInputError, NotMonomialError
from src.core.polynomial import Polynomial, substitute_linear
from src.ideals.calculus import intersect
from src.ideals.handle import IdealHandle
from src.ideals.hypotheses import is_unmixed
from src.ideals.radical import radical_membership
from src.monomial.closure import (
    brute_force_oracle,
    is_binomial_ideal,
    is_monomial_ideal,
    monomial_exponents,
    monomial_integral_closure,
)
from src.monomial.newton import NewtonPolyhedron, membership_certificate, np_membership, np_membership_fm
from tests.support import P, ideal, load_problem, ring, use_default_config


def setUpModule():
    use_default_config()


class NewtonPolyhedronTests(unittest.TestCase):
    def test_membership_examples(self):
        NP = NewtonPolyhedron(((2, 0), (0, 5)))
        self.assertFalse(np_membership((1, 2), NP))
        self.assertTrue(np_membership((1, 3), NP))
        self.assertTrue((2, 0) in NP)
        self.assertFalse(np_membership((0, 0), NP))

    def test_certificate_is_convex(self):
        NP = NewtonPolyhedron(((2, 0), (1, 4), (0, 5)))
        weights = membership_certificate((1, 3), NP)
        self.assertIsNotNone(weights)
        self.assertEqual(sum(weights), 1)
        self.assertTrue(all(w >= 0 for w in weights))
        for j, a in enumerate((1, 3)):
            self.assertLessEqual(sum(w * v[j] for w, v in zip(weights, NP.generators)), a)

    def test_fourier_motzkin_agrees(self):
        NP = NewtonPolyhedron(((3, 0, 0), (0, 2, 1), (1, 1, 3)))
        for a in [(1, 1, 1), (2, 1, 0), (0, 2, 1), (1, 0, 0), (2, 2, 2), (0, 0, 5)]:
            with self.subTest(a=a):
                self.assertEqual(np_membership(a, NP), np_membership_fm(a, NP))

    def test_rejects_bad_vectors(self):
        with self.assertRaises(DegenerateInputError):
            NewtonPolyhedron(())
        with self.assertRaises(DegenerateInputError):
            NewtonPolyhedron(((1, 0), (0, -1)))
        with self.assertRaises(DegenerateInputError):
            np_membership((1, 1, 1), NewtonPolyhedron(((1, 0),)))


class MonomialClosureTests(unittest.TestCase):
    def test_northcott_closure(self):
        I = load_problem("northcott.txt").ideal("I")
        self.assertEqual(sorted(monomial_exponents(I)), [(0, 5), (1, 4), (2, 0)])
        closure = monomial_integral_closure(I)
        self.assertEqual(sorted(closure.render()), sorted(["x^2", "x*y^3", "y^5"]))

    def test_closed_ideals_are_fixed(self):
        R = ring("x,y,z")
        for gens in (("x", "y"), ("x^2", "x*y", "y^2"), ("x*y*z",), ("x^2", "y*z")):
            with self.subTest(gens=gens):
                I = ideal(R, *gens)
                self.assertTrue(monomial_integral_closure(I).equals(I))

    def test_closure_of_pure_powers(self):
        R = ring("x,y,z")
        closure = monomial_integral_closure(ideal(R, "x^3", "y^3", "z^3"))
        cube = ideal(R, "x", "y", "z")
        from_cube = cube.with_gens([a * b * c for a in cube.gens for b in cube.gens for c in cube.gens])
        self.assertTrue(closure.equals(from_cube))

    def test_square_ideal(self):
        R = ring("x,y")
        self.assertTrue(monomial_integral_closure(ideal(R, "x^2", "y^2")).equals(ideal(R, "x^2", "x*y", "y^2")))
        self.assertTrue(monomial_integral_closure(ideal(R, "1")).is_unit())
        self.assertEqual(monomial_integral_closure(IdealHandle.zero(R)).render(), [])

    def test_not_monomial(self):
        R = ring("x,y")
        self.assertFalse(is_monomial_ideal(ideal(R, "x+y")))
        with self.assertRaises(NotMonomialError):
            monomial_integral_closure(ideal(R, "x+y", "y^2"))
        with self.assertRaises(NotMonomialError):
            brute_force_oracle((1, 1), ideal(R, "x-y"))

    def test_oracle(self):
        I = load_problem("northcott.txt").ideal("I")
        self.assertTrue(brute_force_oracle((1, 3), I, K=2))
        self.assertFalse(brute_force_oracle((0, 4), I, K=6))
        self.assertFalse(brute_force_oracle((1, 3), I, K=1))
        with self.assertRaises(DegenerateInputError):
            brute_force_oracle((1, 3), I, K=0)


class BinomialTests(unittest.TestCase):
    def setUp(self):
        self.problem = load_problem("binomial.txt")
        self.R = self.problem.ring

    def test_closure_is_intersection_of_components(self):
        R = self.R
        components = [
            ideal(R, "x-y", "z-w"),
            ideal(R, "x^2", "x*y", "y^2", "z-w"),
            ideal(R, "x-y", "z^2", "z*w", "w^2"),
        ]
        meet = intersect(intersect(components[0], components[1]), components[2])
        self.assertTrue(meet.equals(self.problem.ideal("Ibar")))
        self.assertTrue(meet.contains_ideal(self.problem.ideal("I")))

    def test_binomial_shape(self):
        self.assertTrue(is_binomial_ideal(self.problem.ideal("I")))
        self.assertFalse(is_binomial_ideal(self.problem.ideal("Ibar")))

    def test_linear_change_gives_monomial_ideal(self):
        R = self.R
        mapping = {"x": P(R, "x+y"), "z": P(R, "z+w")}
        image = IdealHandle(R, [substitute_linear(g, mapping) for g in self.problem.ideal("I").gens])
        mono = self.problem.ideal("Mono")
        self.assertTrue(is_monomial_ideal(image))
        self.assertTrue(image.equals(mono))
        closure = monomial_integral_closure(mono)
        self.assertTrue(closure.equals(ideal(R, "x^2", "x*y", "z^2", "z*w", "x*z")))

    def test_binomial_ideal_is_mixed(self):
        self.assertFalse(is_unmixed(self.problem.ideal("I"), seed=0))


class MonomialPropertyTests(unittest.TestCase):
    def test_oracle_and_polyhedron_agree(self):
        rng = random.Random(1234)
        R = ring("x,y,z")
        K = 12
        for trial in range(100):
            exps = [tuple(rng.randint(0, 6) for _ in range(3)) for _ in range(rng.randint(1, 3))]
            exps = [v for v in exps if any(v)] or [(1, 0, 0)]
            I = IdealHandle(R, [Polynomial.monomial(R, v) for v in exps])
            NP = NewtonPolyhedron(tuple(monomial_exponents(I)))
            for _ in range(5):
                a = tuple(rng.randint(0, 7) for _ in range(3))
                with self.subTest(trial=trial, a=a):
                    inside = np_membership(a, NP)
                    self.assertEqual(inside, np_membership_fm(a, NP))
                    if brute_force_oracle(a, I, K):
                        self.assertTrue(inside)
                    weights = membership_certificate(a, NP)
                    if weights is not None and lcm(*(Fraction(w).denominator for w in weights)) <= K:
                        self.assertTrue(brute_force_oracle(a, I, K))

    def test_closure_is_radical_and_idempotent(self):
        rng = random.Random(99)
        R = ring("x,y,z")
        for trial in range(20):
            exps = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(rng.randint(1, 3))]
            exps = [v for v in exps if any(v)] or [(0, 2, 0)]
            I = IdealHandle(R, [Polynomial.monomial(R, v) for v in exps])
            with self.subTest(trial=trial, exps=exps):
                closure = monomial_integral_closure(I)
                self.assertTrue(closure.contains_ideal(I))
                for g in closure.gens:
                    self.assertTrue(radical_membership(g, I))
                self.assertTrue(monomial_integral_closure(closure).equals(closure))


if __name__ == "__main__":
    unittest.main()
