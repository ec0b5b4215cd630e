import unittest

from magmatic.domains import get_domain
from magmatic.errors import EmptyGenerators, KindError, NoIncomparableSubmagmas
from magmatic.kernel import EMPTY, atom_ideal, magma_ideal, pr, pr_iter, subset, member, random_magma, random_submagma
from magmatic.separation import (Refuted, Unrefuted, class_descriptor, class_contains, separate, equal_to, in_class,
                                 pair_predicate, one_of, completion, magmatic_condition_sampler,
                                 replacement_pr_witness, completion_not_functional_demo, constant_image_demo)

tag, plane = get_domain('tag'), get_domain('plane')
SEEDS = tag.seeds()


def m(t, v):
    return pr(tag.atom(t, v))


class ClassTest(unittest.TestCase):

    def test_descriptor(self):
        C = class_descriptor([m(0, 2), m(1, 0)])
        self.assertTrue(class_contains(C, m(0, 1)))
        self.assertTrue(class_contains(C, random_submagma(m(1, 0), 4)))
        self.assertFalse(class_contains(C, m(5, 0)))
        self.assertFalse(class_contains(C, tag.atom(0, 0)))
        with self.assertRaises(EmptyGenerators):
            class_descriptor([])
        with self.assertRaises(KindError):
            class_descriptor([tag.atom(0, 0)])

    def test_separate(self):
        C = class_descriptor([m(0, 2)])
        u = magma_ideal([m(0, 5), m(1, 0)])
        v = separate(C, u)
        self.assertEqual(v, pr(m(0, 2)))
        for z in (m(0, 1), m(0, 3), m(1, 0), m(0, -7)):
            self.assertEqual(member(z, v), class_contains(C, z) and member(z, u))
        self.assertIs(separate(C, pr(m(1, 0))), EMPTY)
        self.assertIs(separate(C, m(0, 5)), EMPTY)

    def test_separate_plane(self):
        roots = [random_magma(3, 2, s, 'plane') for s in range(3)]
        u = random_magma(3, 2, 99, 'plane')
        C = class_descriptor(roots)
        v = separate(C, u)
        samples = [random_submagma(r, s) for s in range(20) for r in roots + [u]]
        for z in samples:
            self.assertEqual(v is not EMPTY and member(z, v), class_contains(C, z) and member(z, u))


class SamplerTest(unittest.TestCase):

    def test_class_is_unrefuted(self):
        C = class_descriptor([m(0, 2), pr_iter(3, tag.atom(1, 0))])
        self.assertEqual(magmatic_condition_sampler(in_class(C), 100, 1), Unrefuted(100))

    def test_singleton_is_refuted(self):
        y0 = m(0, 0)
        verdict = magmatic_condition_sampler(equal_to(y0), 10, 1)
        self.assertIsInstance(verdict, Refuted)
        self.assertEqual(verdict.x, y0)
        self.assertTrue(subset(verdict.y, y0))

    def test_pairs_are_refuted(self):
        self.assertIsInstance(magmatic_condition_sampler(pair_predicate(SEEDS), 200, 3), Refuted)

    def test_deterministic(self):
        P = one_of([m(0, 0), m(1, 0)])
        self.assertEqual(magmatic_condition_sampler(P, 50, 7), magmatic_condition_sampler(P, 50, 7))

    def test_completion(self):
        roots = [m(0, 2), pr_iter(2, tag.atom(1, 0))]
        P = completion(one_of(roots), roots)
        C = class_descriptor(roots)
        for seed in range(20):
            x = random_submagma(roots[seed % 2], seed)
            self.assertEqual(P(x), class_contains(C, x))
        self.assertEqual(magmatic_condition_sampler(P, 100, 0), Unrefuted(100))


class WitnessTest(unittest.TestCase):

    def test_replacement_pr(self):
        for u in (pr(atom_ideal(SEEDS)),
                  pr_iter(3, atom_ideal(SEEDS)),
                  pr(atom_ideal([plane.atom(0, 0)])),
                  atom_ideal([plane.atom(2, 3)])):
            w = replacement_pr_witness(u)
            self.assertTrue(w.verified, u)
            self.assertFalse(w['z'].is_principal)

    def test_replacement_pr_refused(self):
        with self.assertRaises(NoIncomparableSubmagmas):
            replacement_pr_witness(m(0, 0))
        with self.assertRaises(KindError):
            replacement_pr_witness(tag.atom(0, 0))

    def test_completion_not_functional(self):
        w = completion_not_functional_demo(SEEDS)
        self.assertTrue(w.verified)
        self.assertTrue(subset(w['y1'], w['y']))

    def test_constant_image(self):
        w = constant_image_demo(m(0, 0), m(1, 0))
        self.assertTrue(w.verified)
        self.assertEqual(dict(w.facts), {'y1-below-y0': True, 'y1-not-y0': True})


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
