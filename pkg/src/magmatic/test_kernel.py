import unittest
from fractions import Fraction

from magmatic.domains import get_domain, leq, equivalent, strictly_below, common_lower_bounds, canonical_rep
from magmatic.errors import DomainMismatch, SeedsUnavailable, EmptyGenerators, KindMismatch, KindError, LevelCap
from magmatic.kernel import (EMPTY, Level, atom_ideal, magma_ideal, ideal, pr, pr_iter, subset, equal, member,
                             union, intersect, level, random_magma, random_submagma)

tag, plane, qdup = get_domain('tag'), get_domain('plane'), get_domain('qdup')


class DomainTest(unittest.TestCase):

    def test_tag_order(self):
        self.assertTrue(leq(tag.atom(0, 3), tag.atom(0, 5)))
        self.assertFalse(leq(tag.atom(0, 5), tag.atom(0, 3)))
        self.assertFalse(leq(tag.atom(0, 0), tag.atom(1, 0)))
        self.assertEqual(common_lower_bounds(tag.atom(0, 3), tag.atom(0, -1)), (tag.atom(0, -1),))
        self.assertEqual(common_lower_bounds(tag.atom(0, 3), tag.atom(1, 3)), ())

    def test_plane_meet(self):
        self.assertEqual(common_lower_bounds(plane.atom(0, 3), plane.atom(2, 1)), (plane.atom(0, 1),))
        lo, hi = plane.incomparable_below(plane.atom(2, 2))
        self.assertFalse(leq(lo, hi) or leq(hi, lo))
        self.assertTrue(leq(lo, plane.atom(2, 2)) and leq(hi, plane.atom(2, 2)))

    def test_qdup_collapse(self):
        a, b = qdup.atom(Fraction(1, 2), 0), qdup.atom(Fraction(1, 2), 1)
        self.assertTrue(equivalent(a, b))
        self.assertEqual(canonical_rep(b), a)
        self.assertEqual(atom_ideal([b]), atom_ideal([a]))

    def test_strictly_below(self):
        for a in (tag.atom(0, 0), plane.atom(1, 1), qdup.atom(0, 1)):
            b = strictly_below(a)
            self.assertTrue(leq(b, a))
            self.assertFalse(leq(a, b))

    def test_seeds(self):
        a0, a1 = tag.seeds()
        self.assertFalse(leq(a0, a1) or leq(a1, a0))
        self.assertTrue(plane.has_seeds())
        self.assertFalse(qdup.has_seeds())
        with self.assertRaises(SeedsUnavailable):
            qdup.seeds()

    def test_cross_domain(self):
        with self.assertRaises(DomainMismatch):
            leq(tag.atom(0, 0), plane.atom(0, 0))
        with self.assertRaises(DomainMismatch):
            get_domain('nope')

    def test_qdup_copy_bit(self):
        with self.assertRaises(ValueError):
            qdup.atom(0, 2)


class KernelTest(unittest.TestCase):

    def test_canonical_antichain(self):
        x = atom_ideal([tag.atom(0, 3), tag.atom(0, 1), tag.atom(1, 0)])
        self.assertEqual(x.generators, (tag.atom(0, 3), tag.atom(1, 0)))
        self.assertEqual(x.key, '(ai (at tag 0 3) (at tag 1 0))')
        self.assertEqual(magma_ideal([pr(tag.atom(0, 0)), pr(tag.atom(0, -1))]), pr_iter(2, tag.atom(0, 0)))

    def test_empty_generators(self):
        with self.assertRaises(EmptyGenerators):
            atom_ideal([])
        with self.assertRaises(EmptyGenerators):
            magma_ideal([])

    def test_ideal_kinds(self):
        with self.assertRaises(KindMismatch):
            ideal([tag.atom(0, 0), pr(tag.atom(0, 0))])
        self.assertTrue(ideal([tag.atom(0, 0)]).is_atom_ideal)

    def test_subset_across_kinds(self):
        a = tag.atom(0, 0)
        self.assertFalse(subset(pr(a), pr_iter(2, a)))
        self.assertFalse(subset(pr_iter(2, a), pr(a)))

    def test_membership(self):
        a = tag.atom(0, 0)
        self.assertTrue(member(strictly_below(a), pr(a)))
        self.assertTrue(member(pr(a), pr_iter(2, a)))
        self.assertFalse(member(a, pr_iter(2, a)))
        self.assertFalse(member(pr_iter(2, a), pr_iter(2, a)))

    def test_union(self):
        a, b = tag.atom(0, 0), tag.atom(1, 0)
        self.assertEqual(union(pr(a), pr(b)), atom_ideal([a, b]))
        with self.assertRaises(KindMismatch):
            union(pr(a), pr_iter(2, a))

    def test_intersect(self):
        a, b = tag.atom(0, 0), tag.atom(1, 0)
        self.assertIs(intersect(pr(a), pr(b)), EMPTY)
        self.assertIs(intersect(pr(a), pr_iter(2, a)), EMPTY)
        x = atom_ideal([tag.atom(0, 3), tag.atom(1, 2)])
        self.assertEqual(intersect(x, atom_ideal([tag.atom(0, 1), tag.atom(1, 5)])),
                         atom_ideal([tag.atom(0, 1), tag.atom(1, 2)]))
        self.assertEqual(intersect(pr_iter(2, tag.atom(0, 4)), pr_iter(2, tag.atom(0, 2))),
                         pr_iter(2, tag.atom(0, 2)))

    def test_intersect_plane_seed_towers(self):
        a0, a1 = plane.seeds()
        meet = atom_ideal([plane.atom(0, 0)])
        self.assertEqual(intersect(pr(a0), pr(a1)), meet)
        self.assertEqual(intersect(pr_iter(3, a0), pr_iter(3, a1)), pr_iter(2, meet))

    def test_require_magma(self):
        with self.assertRaises(KindError):
            subset(tag.atom(0, 0), pr(tag.atom(0, 0)))

    def test_levels(self):
        a = tag.atom(0, 0)
        self.assertEqual(level(pr(a)), Level(0, 1))
        self.assertEqual(level(pr_iter(4, a)), Level(0, 4))
        mixed = magma_ideal([pr(a), pr_iter(2, a)])
        self.assertEqual(level(mixed), Level(1, 1))
        self.assertEqual(level(pr(mixed)), Level(1, 2))
        self.assertEqual(str(Level(2, 3)), 'w*2+3')
        self.assertEqual(str(Level(1, 0)), 'w')

    def test_level_cap(self):
        a = tag.atom(0, 0)
        with self.assertRaises(LevelCap):
            level(magma_ideal([pr(a), pr_iter(2, a)]), cap=0)

    def test_random_is_deterministic(self):
        for name in ('tag', 'plane', 'qdup'):
            self.assertEqual(random_magma(3, 2, 17, name), random_magma(3, 2, 17, name))

    def test_random_submagma_is_strict(self):
        for seed in range(50):
            x = random_magma(3, 2, seed, 'plane')
            y = random_submagma(x, seed)
            self.assertTrue(subset(y, x))
            self.assertFalse(equal(x, y))

    def test_random_bounds(self):
        with self.assertRaises(ValueError):
            random_magma(0, 2, 1)
        with self.assertRaises(ValueError):
            random_magma(2, 0, 1)

    def test_random_shape(self):
        def depth(x):
            return 1 if x.is_atom_ideal else 1 + max(depth(g) for g in x.generators)

        def widths(x):
            yield len(x.generators)
            if not x.is_atom_ideal:
                for g in x.generators:
                    yield from widths(g)

        for d in (1, 2, 3, 4):
            for seed in range(100):
                x = random_magma(d, 3, seed, 'plane')
                self.assertLessEqual(depth(x), d)
                self.assertLessEqual(max(widths(x)), 3)
        self.assertTrue(random_magma(1, 2, 5).is_atom_ideal)

    def test_random_mixes_kinds(self):
        roots, below = [0, 0], [0, 0]
        for seed in range(1000):
            x = random_magma(3, 2, seed)
            roots[x.is_atom_ideal] += 1
            if not x.is_atom_ideal:
                for g in x.generators:
                    below[g.is_atom_ideal] += 1
        for counts in (roots, below):
            self.assertGreater(min(counts), sum(counts) // 10, counts)

    def test_negative_counts(self):
        with self.assertRaises(ValueError):
            pr_iter(-1, tag.atom(0, 0))
        with self.assertRaises(ValueError):
            Level(-3, 0)


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
