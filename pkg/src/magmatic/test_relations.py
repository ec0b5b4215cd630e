import unittest

from magmatic.constants import CLASSIFICATIONS
from magmatic.domains import get_domain
from magmatic.errors import EmptyPresentation, KindError, NotInDomain, NoGreatestImage, PresentationTooLarge
from magmatic.kernel import EMPTY, atom_ideal, magma_ideal, pr, pr_iter, union, member
from magmatic.pairs import mk_pair
from magmatic.relations import (mk_relation, product, weak_product, weak_member, dom, ran, classify, images,
                                slice_at, greatest, is_semifunction, closed_sets, find_clash, is_function, apply)
from magmatic.session import Session
from magmatic import demos

tag = get_domain('tag')
SEEDS = tag.seeds()
INTENDED, COLLATERAL_PAIR, COLLATERAL_NON_PAIR, NOT_ELEMENT = CLASSIFICATIONS


def m(t, v):
    return pr(tag.atom(t, v))


class RelationTest(unittest.TestCase):

    def test_single_pair(self):
        z, w = m(0, 0), m(1, 0)
        R = mk_relation([(z, w)], SEEDS)
        self.assertEqual(R.whole, pr(mk_pair(z, w, SEEDS).whole))
        self.assertEqual(dom(R), pr(z))
        self.assertEqual(ran(R), pr(w))
        self.assertTrue(is_function(R))
        self.assertEqual(apply(R, m(0, -4)), w)

    def test_empty(self):
        with self.assertRaises(EmptyPresentation):
            mk_relation([], SEEDS)

    def test_classify(self):
        z, w = m(0, 0), m(1, 0)
        R = mk_relation([(z, w)], SEEDS)
        a0 = SEEDS[0]
        self.assertEqual(classify(R, mk_pair(z, w, SEEDS).whole), INTENDED)
        self.assertEqual(classify(R, mk_pair(m(0, -1), m(1, -1), SEEDS).whole), COLLATERAL_PAIR)
        self.assertEqual(classify(R, pr(union(pr_iter(2, m(0, -1)), pr_iter(2, a0)))), COLLATERAL_NON_PAIR)
        self.assertEqual(classify(R, pr_iter(2, tag.atom(2, 0))), NOT_ELEMENT)

    def test_product(self):
        x = magma_ideal([m(0, 0), m(0, 5)])
        self.assertEqual(x, pr(m(0, 5)))
        u, v = m(0, 0), m(1, 0)
        self.assertEqual(product(pr(u), pr(v), SEEDS).whole, pr(mk_pair(u, v, SEEDS).whole))
        with self.assertRaises(KindError):
            product(u, pr(v), SEEDS)

    def test_weak_product(self):
        wp = weak_product(pr(m(0, 0)), pr(m(1, 0)), SEEDS)
        self.assertTrue(weak_member(mk_pair(m(0, -2), m(1, -2), SEEDS).whole, wp))
        self.assertFalse(weak_member(mk_pair(m(1, -2), m(0, -2), SEEDS).whole, wp))
        self.assertFalse(weak_member(m(0, 0), wp))

    def test_product_agrees_with_weak_product_on_pairs(self):
        x, y = magma_ideal([m(0, 0), m(2, 0)]), magma_ideal([m(1, 0)])
        R, wp = product(x, y, SEEDS), weak_product(x, y, SEEDS)
        for z in (m(0, -1), m(2, 3), m(2, -3), m(1, 0)):
            for w in (m(1, -1), m(1, 1), m(0, 0)):
                p = mk_pair(z, w, SEEDS).whole
                self.assertEqual(member(p, R.whole), weak_member(p, wp))

    def test_slices(self):
        R = mk_relation([(m(0, 0), m(1, 0)), (m(0, 5), m(1, 3))], SEEDS)
        self.assertEqual(images(R, m(0, -1)), [m(1, 0), m(1, 3)])
        self.assertEqual(slice_at(R, m(0, -1)), pr(m(1, 3)))
        self.assertEqual(slice_at(R, m(0, 3)), pr(m(1, 3)))
        self.assertIs(slice_at(R, m(7, 0)), EMPTY)
        self.assertTrue(is_function(R))

    def test_semifunction(self):
        R = mk_relation([(m(0, 0), m(1, 0)), (m(0, 0), m(2, 0))], SEEDS)
        self.assertFalse(is_semifunction(R))
        self.assertFalse(is_function(R))
        with self.assertRaises(NoGreatestImage):
            apply(R, m(0, 0))

    def test_intersection_clash(self):
        z1 = atom_ideal([tag.atom(0, 0)])
        z2 = atom_ideal([tag.atom(0, 3), tag.atom(1, 0)])
        z3 = atom_ideal([tag.atom(1, 3)])
        R = mk_relation([(z2, m(2, 0)), (z3, m(3, 0)), (z1, m(2, 1))], SEEDS)
        self.assertTrue(is_semifunction(R))
        z, ws = find_clash(R)
        self.assertFalse(is_function(R))
        self.assertEqual(z, atom_ideal([tag.atom(1, 0)]))
        self.assertIsNone(greatest(ws))
        with self.assertRaises(NoGreatestImage):
            apply(R, z)

    def test_closed_sets(self):
        R = mk_relation([(m(0, 0), m(1, 0)), (m(0, 5), m(1, 3)), (m(1, 0), m(2, 0))], SEEDS)
        found = {closure: z for z, closure in closed_sets(R)}
        self.assertEqual(found[frozenset([0, 1])], m(0, 0))
        self.assertEqual(found[frozenset([1])], m(0, 5))
        self.assertEqual(found[frozenset([2])], m(1, 0))
        self.assertNotIn(frozenset([0]), found)

    def test_cap(self):
        R = mk_relation([(m(0, i), m(1, i)) for i in range(5)], SEEDS)
        with self.assertRaises(PresentationTooLarge):
            is_function(R, cap=4)

    def test_not_in_domain(self):
        R = mk_relation([(m(0, 0), m(1, 0))], SEEDS)
        with self.assertRaises(NotInDomain):
            apply(R, m(1, 0))


class RelationDemoTest(unittest.TestCase):

    def test_demos(self):
        session = Session()
        for name in ('antisymmetry-loss', 'intersection-clash', 'overlapping-function'):
            w = demos.run_demo(session, name)
            self.assertTrue(w.verified, name)


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
