import unittest

from magmatic.domains import get_domain
from magmatic.errors import SeedsUnavailable, SeedMismatch, NotAPair, ArityTooSmall, KindError
from magmatic.kernel import pr, pr_iter, union, subset, equal, random_magma, random_submagma
from magmatic.pairs import (check_seeds, mk_pair, is_pair, extract_pair, mk_tuple, extract_tuple,
                            union2_equality_case, replay_case)

tag, plane = get_domain('tag'), get_domain('plane')
SEEDS = tag.seeds()


def m(t, v):
    return pr(tag.atom(t, v))


class PairTest(unittest.TestCase):

    def test_shape(self):
        x, y = m(0, -3), m(1, -3)
        p = mk_pair(x, y, SEEDS)
        a0, a1 = SEEDS
        expected = union(pr(union(pr_iter(2, x), pr_iter(2, a0))), pr(union(pr_iter(2, y), pr_iter(2, a1))))
        self.assertEqual(p.whole, expected)
        self.assertEqual(tuple(p), (x, y))
        self.assertEqual(len(p.whole.generators), 2)

    def test_distinct_pairs(self):
        x, y = m(0, 1), m(1, 1)
        self.assertFalse(equal(mk_pair(x, y, SEEDS).whole, mk_pair(y, x, SEEDS).whole))
        self.assertEqual(len(mk_pair(x, x, SEEDS).whole.generators), 2)

    def test_extract(self):
        for seed in range(30):
            x, y = random_magma(3, 2, seed, 'tag'), random_magma(3, 2, seed + 100, 'tag')
            self.assertEqual(extract_pair(mk_pair(x, y, SEEDS).whole, SEEDS), (x, y))
        with self.assertRaises(NotAPair):
            extract_pair(m(0, 0), SEEDS)
        self.assertFalse(is_pair(pr_iter(3, tag.atom(0, 0)), SEEDS))

    def test_sub_pair(self):
        x, y = random_magma(3, 2, 5, 'plane'), random_magma(3, 2, 6, 'plane')
        seeds = plane.seeds()
        x2 = random_submagma(x, 1)
        self.assertTrue(subset(mk_pair(x2, y, seeds).whole, mk_pair(x, y, seeds).whole))
        self.assertFalse(subset(mk_pair(x, y, seeds).whole, mk_pair(x2, y, seeds).whole))

    def test_collateral_non_pair(self):
        x, y = m(0, 2), m(1, 2)
        a0 = SEEDS[0]
        block = pr(union(pr_iter(2, m(0, 1)), pr_iter(2, a0)))
        self.assertTrue(subset(block, mk_pair(x, y, SEEDS).whole))
        self.assertFalse(is_pair(block, SEEDS))

    def test_seeds(self):
        with self.assertRaises(SeedsUnavailable):
            check_seeds(None)
        with self.assertRaises(SeedsUnavailable):
            check_seeds((tag.atom(0, 0), tag.atom(0, 1)))
        with self.assertRaises(KindError):
            mk_pair(tag.atom(0, 0), m(0, 0), SEEDS)

    def test_seed_mismatch(self):
        x, y = m(0, 0), m(1, 0)
        p = mk_pair(x, y, SEEDS)
        q = mk_pair(x, y, (tag.atom(0, 5), tag.atom(2, 0)))
        self.assertTrue(p.same_as(mk_pair(x, y, SEEDS)))
        with self.assertRaises(SeedMismatch):
            p.same_as(q)

    def test_tuples(self):
        xs = [m(0, 1), m(0, 2), m(1, 3), m(2, 4)]
        t = mk_tuple(xs, SEEDS)
        self.assertEqual(extract_tuple(t, 4, SEEDS), xs)
        self.assertEqual(t, mk_pair(mk_tuple(xs[:3], SEEDS), xs[3], SEEDS).whole)
        with self.assertRaises(ArityTooSmall):
            mk_tuple(xs[:1], SEEDS)
        with self.assertRaises(ArityTooSmall):
            extract_tuple(t, 1, SEEDS)


class UnionEqualityTest(unittest.TestCase):

    def test_cases(self):
        x, y = m(0, 0), m(1, 0)
        self.assertEqual(union2_equality_case(x, y, x, y).tag, 'I')
        self.assertEqual(union2_equality_case(x, y, y, x).tag, 'II')
        self.assertEqual(union2_equality_case(x, y, x, x).tag, 'Unequal')
        low, lower = m(0, -1), m(0, -2)
        case = union2_equality_case(x, low, x, lower)
        self.assertEqual(case.tag, 'III')
        self.assertEqual(case.detail, (('equal', 'x', "x'"), ('subset', 'y', 'x'), ('subset', "y'", 'x')))
        self.assertTrue(replay_case(case, x, low, x, lower))

    def test_replay_catches_wrong_tag(self):
        x, y = m(0, 0), m(1, 0)
        case = union2_equality_case(x, y, y, x)
        self.assertFalse(replay_case(case, x, y, x, x))


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
