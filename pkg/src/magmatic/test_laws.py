import unittest

from hypothesis import given, settings, strategies as st

from magmatic.domains import get_domain
from magmatic.kernel import (EMPTY, Level, Magma, pr, union, intersect, subset, equal, member, random_magma,
                             random_submagma, ideal, level)
from magmatic.pairs import mk_pair, extract_pair, is_pair, union2_equality_case, replay_case
from magmatic.relations import mk_relation, is_function, find_clash, slice_at
from magmatic.ordinals import Variant, nat, ord_less, ord_add, ord_value, add_concrete
from magmatic.separation import class_descriptor, class_contains, separate

TAG_SEEDS = get_domain('tag').seeds()


@st.composite
def magmas(draw, domain=st.sampled_from(['tag', 'plane', 'qdup']), depth=3):
    return random_magma(draw(st.integers(1, depth)), 2, draw(st.integers(0, 2 ** 32)), draw(domain))


@st.composite
def magma_pairs(draw, domains=st.sampled_from(['tag', 'plane'])):
    """Two magmas of one domain, the second often a submagma of the first."""
    domain = draw(domains)
    x = draw(magmas(st.just(domain)))
    if draw(st.booleans()):
        return x, random_submagma(x, draw(st.integers(0, 2 ** 32)))
    return x, draw(magmas(st.just(domain)))


tag_magmas = magmas(st.just('tag'))
ordinals = st.builds(Level, st.integers(0, 3), st.integers(0, 5))


class KernelLaws(unittest.TestCase):

    @given(magmas())
    def test_canonical_form_is_stable(self, x):
        self.assertEqual(ideal(x.generators), x)

    @given(magma_pairs())
    def test_equal_iff_mutual_subset(self, xy):
        x, y = xy
        self.assertEqual(equal(x, y), subset(x, y) and subset(y, x))

    @given(magma_pairs())
    def test_pr_is_an_order_embedding(self, xy):
        x, y = xy
        self.assertEqual(subset(x, y), subset(pr(x), pr(y)))
        self.assertEqual(equal(x, y), equal(pr(x), pr(y)))

    @given(magmas(), st.integers(0, 2 ** 32))
    def test_no_minimal_magma(self, x, seed):
        y = random_submagma(x, seed)
        self.assertTrue(subset(y, x))
        self.assertFalse(equal(y, x))

    @given(magma_pairs())
    def test_intersect_is_a_lower_bound(self, xy):
        x, y = xy
        m = intersect(x, y)
        if m is not EMPTY:
            self.assertTrue(subset(m, x) and subset(m, y))

    @given(magma_pairs())
    def test_union_of_prs(self, xy):
        x, y = xy
        u = union(pr(x), pr(y))
        self.assertTrue(member(x, u) and member(y, u))

    @given(magmas())
    def test_x_is_in_pr_x_one_level_up(self, x):
        self.assertTrue(member(x, pr(x)))
        if level(x).is_finite:
            self.assertEqual(level(pr(x)), level(x).successor())


class PairLaws(unittest.TestCase):

    @given(tag_magmas, tag_magmas)
    def test_pair_round_trip(self, x, y):
        p = mk_pair(x, y, TAG_SEEDS)
        self.assertTrue(is_pair(p.whole, TAG_SEEDS))
        self.assertEqual(extract_pair(p.whole, TAG_SEEDS), (x, y))

    @given(magma_pairs(st.just('tag')), magma_pairs(st.just('tag')))
    def test_pair_equality_is_componentwise(self, xy, x2y2):
        (x, y), (x2, y2) = xy, x2y2
        p, q = mk_pair(x, y, TAG_SEEDS).whole, mk_pair(x2, y2, TAG_SEEDS).whole
        self.assertEqual(equal(p, q), equal(x, x2) and equal(y, y2))
        self.assertEqual(subset(p, q), subset(x, x2) and subset(y, y2))

    @given(tag_magmas, tag_magmas, st.integers(0, 2 ** 32))
    def test_union_equality_case_replays(self, x, y, seed):
        x2 = x if seed % 3 else random_submagma(x, seed)
        y2 = y if seed % 5 else random_submagma(y, seed)
        for a, b in ((x2, y2), (y2, x2)):
            case = union2_equality_case(x, y, a, b)
            self.assertTrue(replay_case(case, x, y, a, b))


class RelationLaws(unittest.TestCase):

    @given(st.lists(st.tuples(tag_magmas, tag_magmas), min_size=1, max_size=5))
    def test_function_verdict_matches_clash(self, intended):
        R = mk_relation(intended, TAG_SEEDS)
        clash = find_clash(R)
        if is_function(R):
            self.assertIsNone(clash)
        for z, w in intended:
            sl = slice_at(R, z)
            self.assertTrue(member(w, sl))


class OrdinalLaws(unittest.TestCase):

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_order_is_strict_inclusion(self, m, n):
        a0 = TAG_SEEDS[0]
        self.assertEqual(ord_less(nat(m, Variant.PRIMARY, a0), nat(n, Variant.PRIMARY, a0)), m < n)

    @given(st.integers(0, 4), st.integers(0, 4))
    def test_concrete_addition_agrees(self, a, b):
        a0 = TAG_SEEDS[0]
        self.assertEqual(add_concrete(a, b, a0), ord_value(ord_add(Level(0, a), Level(0, b)), a0))

    @given(ordinals, ordinals, ordinals)
    def test_addition_is_associative(self, a, b, c):
        self.assertEqual(ord_add(ord_add(a, b), c), ord_add(a, ord_add(b, c)))


class SeparationLaws(unittest.TestCase):

    @settings(max_examples=50)
    @given(st.lists(tag_magmas, min_size=1, max_size=3), tag_magmas, st.integers(0, 2 ** 32))
    def test_separation_biconditional(self, roots, u, seed):
        C = class_descriptor(roots)
        v = separate(C, u)
        for z in list(u.generators) + [random_submagma(r, seed) for r in roots]:
            if isinstance(z, Magma):
                inside = member(z, u) and class_contains(C, z)
                self.assertEqual(inside, v is not EMPTY and member(z, v))


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
