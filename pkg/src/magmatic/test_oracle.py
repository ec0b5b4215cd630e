import unittest

from magmatic.domains import get_domain
from magmatic.errors import BoundExceeded, OutOfRange
from magmatic.kernel import atom_ideal, pr, union
from magmatic.oracle import (Closure, FiniteUniverse, lower_open_sets, ext_le, ext_in, small_magmas, gate,
                             pair_theorem, levels, functions)
from magmatic.pairs import mk_pair
from magmatic.relations import mk_relation, is_function
from magmatic.suites import gate_universe, pair_universe

tag = get_domain('tag')


def mismatches(lines):
    return [line for line in lines if not line.endswith(' OK')]


class UniverseTest(unittest.TestCase):

    def test_chain(self):
        # a below b: level 1 is {a} and {a, b}
        self.assertEqual(lower_open_sets([0, 1], lambda i, j: i <= j), [frozenset([0]), frozenset([0, 1])])
        U = FiniteUniverse('tag', [tag.atom(0, 0), tag.atom(0, 1)], 1)
        self.assertEqual(U.sizes(), [2])

    def test_sizes(self):
        U = FiniteUniverse('tag', [tag.atom(0, 0), tag.atom(1, 0)], 2)
        self.assertEqual(U.sizes(), [3, 4])
        self.assertEqual(U.embed(pr(tag.atom(0, 0))), frozenset([0]))

    def test_embed_and_reify(self):
        U = gate_universe()
        for k in (1, 2):
            for e, x in zip(U.levels[k - 1], U.family_magmas(k)):
                self.assertEqual(U.embed(x), e)

    def test_bounds(self):
        with self.assertRaises(BoundExceeded):
            FiniteUniverse('tag', [], 2)
        with self.assertRaises(BoundExceeded):
            FiniteUniverse('tag', [tag.atom(0, 0)], 4)
        with self.assertRaises(BoundExceeded):
            FiniteUniverse('tag', [tag.atom(t, 0) for t in range(9)], 1)
        with self.assertRaises(OutOfRange):
            gate_universe().embed(pr(tag.atom(5, 0)))

    def test_closures(self):
        U = pair_universe()
        a0, a1 = tag.seeds()
        x, y = pr(tag.atom(0, -1)), pr(tag.atom(0, 0))
        p = U.embed(mk_pair(x, y, (a0, a1)).whole)
        q = U.embed(mk_pair(y, y, (a0, a1)).whole)
        self.assertIsInstance(p, Closure)
        self.assertTrue(ext_le(p, q))
        self.assertFalse(ext_le(q, p))
        self.assertFalse(ext_in(0, p))


class AgreementTest(unittest.TestCase):

    def test_gate(self):
        U = gate_universe()
        magmas = small_magmas(U)
        self.assertTrue(len(magmas) > 10)
        self.assertEqual(mismatches(gate(U, magmas)), [])

    def test_pairs(self):
        self.assertEqual(mismatches(pair_theorem(pair_universe(), tag.seeds())), [])

    def test_pairs_four_atoms(self):
        U = gate_universe()
        self.assertEqual(len(U.atoms), 4)
        lines = list(pair_theorem(U, tag.seeds()))
        self.assertEqual(U.sizes()[0], 8)
        # every pair of level-1 magmas against every other, equality and inclusion
        self.assertEqual(len(lines), 2 * 64 * 64)
        self.assertEqual(mismatches(lines), [])

    def test_levels(self):
        for U in (gate_universe(), pair_universe()):
            self.assertEqual(mismatches(levels(U)), [])

    def test_functions(self):
        U = pair_universe()
        ones = U.family_magmas(1)
        low, mid, side = (atom_ideal([tag.atom(t, v)]) for t, v in ((0, -1), (0, 0), (1, 0)))
        seeds = tag.seeds()
        relations = [
            mk_relation([(ones[0], ones[1])], seeds),
            mk_relation([(ones[-1], ones[0]), (ones[-1], ones[1])], seeds),
            mk_relation([(z, w) for z, w in zip(ones, reversed(ones))], seeds),
            # t0/-1 has two distinct intended outputs, so this is no semi-function
            mk_relation([(low, union(low, side)), (mid, union(mid, side)), (low, mid)], seeds),
        ]
        self.assertFalse(is_function(relations[-1]))
        self.assertEqual(mismatches(functions(U, relations)), [])

    def test_line_format(self):
        U = FiniteUniverse('tag', [tag.atom(0, 0)], 1)
        x = atom_ideal([tag.atom(0, 0)])
        lines = list(gate(U, [x]))
        self.assertIn('subset 0-0 OK', lines)
        self.assertIn('member a0-0 OK', lines)
        self.assertTrue(all(len(line.split(' ')) == 3 for line in lines))


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
