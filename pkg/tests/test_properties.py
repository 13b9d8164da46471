"""Randomized laws of ideal calculus, checked on small seeded examples."""
import random
import unittest

from src.core.polynomial import Polynomial
from src.ideals.calculus import colon, ideal_product, ideal_sum, intersect, saturate
from src.ideals.handle import IdealHandle
from src.ideals.radical import radical_membership, radical_zero_dim
from tests.support import ring, use_default_config

SEED = 20240611


def setUpModule():
    use_default_config()


def random_exponent(n, d, rng):
    cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
    return tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))


def random_poly(R, rng, degree, terms=3):
    f = Polynomial.zero(R)
    for _ in range(terms):
        d = rng.randint(0, degree)
        f = f + Polynomial.monomial(R, random_exponent(R.nvars, d, rng), rng.choice([-2, -1, 1, 3]))
    return f


def random_ideal(R, rng, count=2, degree=4):
    gens = [random_poly(R, rng, degree) for _ in range(count)]
    return IdealHandle(R, [g for g in gens if g])


def zero_dimensional_ideal(R, rng):
    a, b = rng.randint(2, 3), rng.randint(2, 3)
    f = Polynomial.monomial(R, (a, 0)) + random_poly(R, rng, a - 1, terms=2)
    g = Polynomial.monomial(R, (0, b)) + random_poly(R, rng, b - 1, terms=2)
    return IdealHandle(R, [f, g])


class IdealLawTests(unittest.TestCase):
    def setUp(self):
        self.rings = [ring("x,y"), ring("x,y,z")]
        self.rng = random.Random(SEED)

    def pick(self):
        return self.rng.choice(self.rings)

    def test_intersection_bounds(self):
        for trial in range(70):
            R = self.pick()
            I, J = random_ideal(R, self.rng), random_ideal(R, self.rng)
            if not I.gens or not J.gens:
                continue
            with self.subTest(trial=trial):
                meet = intersect(I, J)
                self.assertTrue(I.contains_ideal(meet))
                self.assertTrue(J.contains_ideal(meet))
                self.assertTrue(meet.contains_ideal(ideal_product(I, J)))
                self.assertTrue(intersect(J, I).equals(meet))

    def test_colon_laws(self):
        for trial in range(70):
            R = self.pick()
            I, J = random_ideal(R, self.rng), random_ideal(R, self.rng)
            if not J.gens:
                continue
            with self.subTest(trial=trial):
                Q = colon(I, J)
                self.assertTrue(Q.contains_ideal(I))
                self.assertTrue(I.contains_ideal(ideal_product(Q, J)))
                self.assertTrue(colon(I, IdealHandle.unit(R)).equals(I))
                self.assertTrue(colon(ideal_sum(I, J), J).is_unit())

    def test_iterated_colon(self):
        # (I:J):K == I:(JK)
        for trial in range(20):
            R = self.pick()
            I = random_ideal(R, self.rng)
            J = random_ideal(R, self.rng, count=1, degree=2)
            K = random_ideal(R, self.rng, count=1, degree=2)
            if not J.gens or not K.gens:
                continue
            with self.subTest(trial=trial):
                self.assertTrue(colon(colon(I, J), K).equals(colon(I, ideal_product(J, K))))

    def test_equality_is_mutual_membership(self):
        for trial in range(40):
            R = self.pick()
            I = random_ideal(R, self.rng)
            if len(I.gens) == 2 and trial % 2 == 0:
                f, g = I.gens
                J = IdealHandle(R, [f + g * random_poly(R, self.rng, 1), g])
            else:
                J = random_ideal(R, self.rng)
            mutual = all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)
            with self.subTest(trial=trial):
                self.assertEqual(I.equals(J), mutual)
                if len(I.gens) == 2 and trial % 2 == 0:
                    self.assertTrue(mutual)

    def test_saturation_contains_colon(self):
        for trial in range(60):
            R = self.pick()
            I, J = random_ideal(R, self.rng), random_ideal(R, self.rng, count=1, degree=1)
            if not J.gens:
                continue
            with self.subTest(trial=trial):
                S = saturate(I, J)
                self.assertTrue(S.contains_ideal(colon(I, J)))
                self.assertTrue(colon(S, J).equals(S))

    def test_zero_dimensional_radical_sandwich(self):
        R = ring("x,y")
        for trial in range(20):
            I = zero_dimensional_ideal(R, self.rng)
            if I.is_unit():
                continue
            with self.subTest(trial=trial, gens=[str(g) for g in I.gens]):
                rad = radical_zero_dim(I)
                self.assertTrue(rad.contains_ideal(I))
                for g in rad.gens:
                    self.assertTrue(radical_membership(g, I))
                self.assertTrue(radical_zero_dim(rad).equals(rad))


if __name__ == "__main__":
    unittest.main()
