"""Check runner: one suite per law, each a list of sampled or exhaustive properties.

Suites are deterministic in (seed, cases, depth). A failing property keeps its
first counterexample as printed forms that can be pasted back into ``magma eval``.
"""
import logging
import random
from fractions import Fraction
from itertools import combinations

from magmatic.constants import FRESH_TAG_BASE, FUNCTION_SAMPLES
from magmatic.domains import DOMAINS, Atom, get_domain, leq, strictly_below, common_lower_bounds, canonical_rep, equivalent
from magmatic.errors import UnknownSuite, KindMismatch, NotInDomain, NoIncomparableSubmagmas, ArityTooSmall
from magmatic.evaluator import format_value
from magmatic.kernel import (EMPTY, Level, atom_ideal, magma_ideal, ideal, pr, pr_iter, union, intersect, subset,
                             equal, member, random_magma, random_submagma)
from magmatic import pairs, relations, ordinals, separation, oracle, demos
from magmatic.encodings import StandardEncoding, fuzz_subpair_freeness
from magmatic.session import Session

log = logging.getLogger('magmatic')

PAIR_DOMAINS = ('tag', 'plane')


class Check(object):
    """One property: counts its cases and keeps the first counterexample."""

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.counterexample = None
        self.sample = ()

    def __call__(self, ok, *witness):
        self.cases += 1
        if not self.sample:
            self.sample = witness
        if not ok and self.counterexample is None:
            self.counterexample = ' '.join(format_value(w) for w in witness) or '(no witness)'
        return ok

    @property
    def passed(self):
        return self.counterexample is None


class Report(object):
    def __init__(self, suite, checks):
        self.suite = suite
        self.checks = checks

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        for c in self.checks:
            if c.passed:
                yield '%s %s PASS %d' % (self.suite, c.name, c.cases)
                for w in c.sample:
                    if isinstance(w, separation.Witness):
                        yield '%s %s witness %s' % (self.suite, c.name, format_value(w))
            else:
                yield '%s %s FAIL %d %s' % (self.suite, c.name, c.cases, c.counterexample)


def _rng(seed, salt):
    return random.Random('%s/%s' % (seed, salt))


def _sessions(session, names=PAIR_DOMAINS):
    for name in names:
        yield Session(name, function_cap=session.function_cap, depth_cap=session.depth_cap, level_cap=session.level_cap)


def _magmas(rng, n, depth, domain, width=2):
    return [random_magma(depth, width, rng, domain) for _ in range(n)]


def _nearby(rng, x, depth, domain):
    """x itself, a submagma of x or an unrelated magma, so that both verdicts show up."""
    roll = rng.random()
    if roll < 0.3:
        return x
    if roll < 0.7:
        return random_submagma(x, rng)
    return random_magma(depth, 2, rng, domain)


# kernel and atoms

def atom_domains(session, seed, cases, depth):
    reflexive, transitive = Check('leq-reflexive'), Check('leq-transitive')
    descending, cover, collapse = Check('strictly-below-chain'), Check('lower-bound-cover'), Check('qdup-collapse')
    for name, domain in DOMAINS.items():
        rng = _rng(seed, name)
        for _ in range(cases):
            a, b, c = (domain.random_atom(rng) for _ in range(3))
            reflexive(leq(a, a), a)
            if leq(a, b) and leq(b, c):
                transitive(leq(a, c), a, b, c)
            chain = [a]
            for _ in range(10):
                chain.append(strictly_below(chain[-1]))
            descending(all(leq(lo, hi) and not leq(hi, lo) for lo, hi in zip(chain[1:], chain)), a)
        grid = _grid(domain)
        for a, b in combinations(grid, 2):
            lows = common_lower_bounds(a, b)
            for c in grid:
                expected = leq(c, a) and leq(c, b)
                cover(expected == any(leq(c, l) for l in lows), a, b, c)
    qdup = get_domain('qdup')
    rng = _rng(seed, 'collapse')
    for _ in range(cases):
        a = qdup.random_atom(rng)
        q = a.payload[0]
        collapse(equivalent(qdup.atom(q, 0), qdup.atom(q, 1)) and canonical_rep(qdup.atom(q, 0)) == canonical_rep(qdup.atom(q, 1)), a)
    return [reflexive, transitive, descending, cover, collapse]


def _grid(domain):
    if domain.name == 'tag':
        return [domain.atom(t, v) for t in (0, 1) for v in range(-2, 3)]
    if domain.name == 'plane':
        return [domain.atom(x, y) for x in range(-2, 3) for y in range(-2, 3)]
    return [domain.atom(Fraction(q, 2), c) for q in range(-4, 5) for c in (0, 1)]


def kernel_canonical(session, seed, cases, depth):
    mutual, recanon = Check('equal-iff-mutual-subset'), Check('canonical-idempotent')
    reflexive, transitive, antisymmetric = Check('subset-reflexive'), Check('subset-transitive'), Check('subset-antisymmetric')
    for name in DOMAINS:
        rng = _rng(seed, name)
        for _ in range(cases):
            x = random_magma(depth, 2, rng, name)
            y = _nearby(rng, x, depth, name)
            both = subset(x, y) and subset(y, x)
            mutual(equal(x, y) == both and equal(x, y) == (x.key == y.key), x, y)
            antisymmetric(not both or x == y, x, y)
            recanon(ideal(x.generators) == x, x)
            reflexive(subset(x, x), x)
            z = random_submagma(y, rng)
            if subset(y, x):
                transitive(subset(z, x), z, y, x)
    return [mutual, recanon, reflexive, transitive, antisymmetric]


def pr_embedding(session, seed, cases, depth):
    injective, embedding = Check('pr-injective'), Check('pr-order-embedding')
    atom_apart, self_member, down = Check('pr-atom-vs-magma'), Check('x-in-pr-x'), Check('member-down-closed')
    for name in DOMAINS:
        rng = _rng(seed, name)
        domain = get_domain(name)
        for _ in range(cases):
            x = random_magma(depth, 2, rng, name)
            y = _nearby(rng, x, depth, name)
            injective(not equal(pr(x), pr(y)) or equal(x, y), x, y)
            embedding(subset(x, y) == subset(pr(x), pr(y)), x, y)
            a = domain.random_atom(rng)
            atom_apart(not equal(pr(a), pr(x)), a, x)
            self_member(member(x, pr(x)), x)
            z = random_submagma(x, rng)
            u = pr(x)
            if member(z, u):
                down(subset(pr(z), u), z, u)
    return [injective, embedding, atom_apart, self_member, down]


def union_legality(session, seed, cases, depth):
    same_kind, mixed, idempotent = Check('same-kind-union'), Check('mixed-kinds-rejected'), Check('union-idempotent')
    for name in DOMAINS:
        rng = _rng(seed, name)
        domain = get_domain(name)
        for _ in range(cases):
            a, b = domain.random_atom(rng), domain.random_atom(rng)
            u = union(pr(a), pr(b))
            same_kind(u.is_atom_ideal and member(a, u) and member(b, u), a, b)
            x = random_magma(depth, 2, rng, name)
            idempotent(union(x, x) == x, x)
            try:
                union(pr(a), pr(pr(a)))
                mixed(False, a)
            except KindMismatch:
                mixed(True)
    return [same_kind, mixed, idempotent]


def two_one(session, seed, cases, depth):
    above, below, cases_iv = Check('union-below-pr'), Check('pr-below-union'), Check('four-case-disjunction')
    for name in DOMAINS:
        rng = _rng(seed, name)
        for _ in range(cases):
            z = random_magma(depth, 2, rng, name)
            x = _nearby(rng, z, depth, name)
            y = _nearby(rng, z, depth, name)
            u = union(pr(x), pr(y))
            above(subset(u, pr(z)) == (subset(x, z) and subset(y, z)), x, y, z)
            below(subset(pr(z), u) == (subset(z, x) or subset(z, y)), x, y, z)
            x2, y2 = _nearby(rng, x, depth, name), _nearby(rng, y, depth, name)
            case = pairs.union2_equality_case(x, y, x2, y2)
            cases_iv(pairs.replay_case(case, x, y, x2, y2), x, y, x2, y2, case)
    return [above, below, cases_iv]


def intersect_glb(session, seed, cases, depth):
    lower, greatest, seed_meets = Check('intersect-is-lower'), Check('intersect-is-greatest'), Check('seed-towers-meet')
    for name in DOMAINS:
        rng = _rng(seed, name)
        for _ in range(cases):
            x = random_magma(depth, 2, rng, name)
            y = _nearby(rng, x, depth, name)
            m = intersect(x, y)
            if m is not EMPTY:
                lower(subset(m, x) and subset(m, y), x, y, m)
            z = random_submagma(x, rng)
            if subset(z, y):
                greatest(m is not EMPTY and subset(z, m), x, y, z)
    for s in _sessions(session):
        a0, a1 = s.seeds
        # towers over seeds without a common lower bound are disjoint, otherwise they meet in the tower of the meet
        lows = common_lower_bounds(a0, a1)
        for n in range(1, 5):
            expected = pr_iter(n - 1, atom_ideal(lows)) if lows else EMPTY
            seed_meets(intersect(pr_iter(n, a0), pr_iter(n, a1)) == expected, pr_iter(n, a0), pr_iter(n, a1))
    return [lower, greatest, seed_meets]


def no_minimal(session, seed, cases, depth):
    strict = Check('strict-submagma')
    for name in DOMAINS:
        rng = _rng(seed, name)
        for _ in range(cases):
            x = random_magma(depth, 2, rng, name)
            y = random_submagma(x, rng)
            strict(subset(y, x) and not equal(y, x), x, y)
    return [strict]


def union_equality_cases(session, seed, cases, depth):
    tagged = {tag: Check('case-%s' % tag) for tag in ('I', 'II', 'III', 'Unequal')}
    rng = _rng(seed, 'cases')
    s = next(_sessions(session, ('tag',)))
    a0, a1 = s.seeds
    # fixed instances of each case
    x, y = pr(a0), pr(a1)
    low, lower = atom_ideal([strictly_below(a0)]), atom_ideal([strictly_below(strictly_below(a0))])
    fixtures = [((x, y, x, y), 'I'), ((x, y, y, x), 'II'), ((x, low, x, lower), 'III'), ((x, y, x, x), 'Unequal')]
    for _ in range(cases):
        p = random_magma(depth, 2, rng, 'tag')
        q = _nearby(rng, p, depth, 'tag')
        p2, q2 = _nearby(rng, p, depth, 'tag'), _nearby(rng, q, depth, 'tag')
        fixtures.append(((p, q, p2, q2), None))
    for args, expected in fixtures:
        case = pairs.union2_equality_case(*args)
        ok = pairs.replay_case(case, *args) and (expected is None or case.tag == expected)
        tagged[case.tag if expected is None else expected](ok, *(args + (case,)))
    return list(tagged.values())


# pairs and relations

def pair_theorem(session, seed, cases, depth):
    theorem, roundtrip = Check('pair-equality'), Check('extract-roundtrip')
    shape, distinct = Check('is-pair-shape'), Check('two-blocks')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        for _ in range(cases):
            x = random_magma(depth, 2, rng, s.domain.name)
            y = random_magma(depth, 2, rng, s.domain.name)
            x2, y2 = _nearby(rng, x, depth, s.domain.name), _nearby(rng, y, depth, s.domain.name)
            p, q = s.pair(x, y), s.pair(x2, y2)
            theorem(p.same_as(q) == (equal(x, x2) and equal(y, y2)), x, y, x2, y2)
            roundtrip(s.extract_pair(p.whole) == (x, y), x, y)
            shape(s.is_pair(p.whole) and not s.is_pair(pr(x)), x, y)
            distinct(len(s.pair(x, x).whole.generators) == 2, x)
    return [theorem, roundtrip, shape, distinct]


def sub_pair(session, seed, cases, depth):
    law, collateral, extract = Check('sub-pair-law'), Check('collateral-non-pair'), Check('extract-sub-pair')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        a0, _ = s.seeds
        for _ in range(cases):
            x = random_magma(depth, 2, rng, s.domain.name)
            y = random_magma(depth, 2, rng, s.domain.name)
            x2, y2 = _nearby(rng, x, depth, s.domain.name), _nearby(rng, y, depth, s.domain.name)
            whole = s.pair(x, y).whole
            law(subset(s.pair(x2, y2).whole, whole) == (subset(x2, x) and subset(y2, y)), x2, y2, x, y)
            xs, ys = random_submagma(x, rng), random_submagma(y, rng)
            extract(s.extract_pair(s.pair(xs, ys).whole) == (xs, ys), xs, ys)
            c = pr(union(pr_iter(2, xs), pr_iter(2, a0)))
            collateral(subset(c, whole) and not s.is_pair(c), c, whole)
    return [law, collateral, extract]


def tuples(session, seed, cases, depth):
    roundtrip, equality = Check('tuple-roundtrip'), Check('tuple-equality')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        for _ in range(cases):
            n = rng.randint(2, 4)
            xs = _magmas(rng, n, depth, s.domain.name)
            ys = [_nearby(rng, x, depth, s.domain.name) for x in xs]
            roundtrip(s.extract_tuple(s.tuple(xs), n) == xs, *xs)
            equality(equal(s.tuple(xs), s.tuple(ys)) == all(equal(x, y) for x, y in zip(xs, ys)), *(xs + ys))
        try:
            s.tuple(xs[:1])
            roundtrip(False, *xs[:1])
        except ArityTooSmall:
            pass
    return [roundtrip, equality]


def _magma_ideal(rng, depth, domain):
    return magma_ideal(_magmas(rng, rng.randint(1, 2), max(depth - 1, 1), domain))


def product(session, seed, cases, depth):
    corollary, agreement, bound = Check('principal-product'), Check('product-weak-product-agree'), Check('generator-count')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        for _ in range(cases):
            u, v = random_magma(depth, 2, rng, s.domain.name), random_magma(depth, 2, rng, s.domain.name)
            corollary(s.product(pr(u), pr(v)).whole == pr(s.pair(u, v).whole), u, v)
            x, y = _magma_ideal(rng, depth, s.domain.name), _magma_ideal(rng, depth, s.domain.name)
            R = s.product(x, y)
            wp = s.weak_product(x, y)
            bound(len(R.whole.generators) <= len(x.generators) * len(y.generators), x, y)
            for _ in range(5):
                g, h = rng.choice(x.generators), rng.choice(y.generators)
                z = g if rng.random() < 0.3 else random_submagma(g, rng)
                w = h if rng.random() < 0.3 else _nearby(rng, h, depth, s.domain.name)
                p = s.pair(z, w).whole
                agreement(member(p, R.whole) == relations.weak_member(p, wp), p, x, y)
    return [corollary, agreement, bound]


def dom_ran(session, seed, cases, depth):
    inside, outside, single, slices, kinds = (Check('sub-input-in-dom'), Check('fresh-input-outside-dom'),
                                              Check('single-pair-dom-ran'), Check('slice-matches-pairs'),
                                              Check('classify-collaterals'))
    s = next(_sessions(session, ('tag',)))
    rng = _rng(seed, 'dom-ran')
    a0, _ = s.seeds
    for n in range(cases):
        intended = [(random_magma(depth, 2, rng, 'tag'), random_magma(depth, 2, rng, 'tag')) for _ in range(rng.randint(1, 3))]
        R = s.relation(intended)
        z, w = rng.choice(intended)
        z2 = random_submagma(z, rng)
        inside(member(z2, relations.dom(R)) and member(w, relations.ran(R)), z2, R)
        fresh = atom_ideal([Atom('tag', (FRESH_TAG_BASE + n % 7, 0))])
        outside(not member(fresh, relations.dom(R)) and relations.slice_at(R, fresh) is EMPTY, fresh, R)
        one = s.relation([(z, w)])
        single(relations.dom(one) == pr(z) and relations.ran(one) == pr(w), z, w)
        w2 = _nearby(rng, w, depth, 'tag')
        sl = relations.slice_at(R, z2)
        slices((sl is not EMPTY and member(w2, sl)) == member(s.pair(z2, w2).whole, R.whole), z2, w2, R)
        e = s.pair(z, w).whole
        ok = relations.classify(R, e) == relations.INTENDED
        z3, w3 = random_submagma(z, rng), random_submagma(w, rng)
        ok = ok and relations.classify(R, s.pair(z3, w3).whole) == relations.COLLATERAL_PAIR
        ok = ok and relations.classify(R, pr(union(pr_iter(2, z3), pr_iter(2, a0)))) == relations.COLLATERAL_NON_PAIR
        kinds(ok and relations.classify(R, pr(fresh)) == relations.NOT_ELEMENT, z, w, R)
    return [inside, outside, single, slices, kinds]


def _sampling_verdict(R, rng, samples):
    """A z in dom(R) whose slice has no greatest element, or None if sampling finds none."""
    for _ in range(samples):
        z, _ = rng.choice(R.intended)
        z = z if rng.random() < 0.2 else random_submagma(z, rng)
        if not relations.slice_at(R, z).is_principal:
            return z
    return None


def function_check(session, seed, cases, depth):
    sound, witnessed, fixed = Check('sampled-images-have-greatest'), Check('false-verdict-witnessed'), Check('fixed-verdicts')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        for _ in range(cases):
            n = rng.randint(1, 6)
            zs = _magmas(rng, n, depth, s.domain.name)
            # overlapping inputs make clashes likely
            zs = [z if rng.random() < 0.5 else _nearby(rng, zs[0], depth, s.domain.name) for z in zs]
            R = s.relation([(z, random_magma(depth, 2, rng, s.domain.name)) for z in zs])
            verdict = s.is_function(R)
            if verdict:
                z = _sampling_verdict(R, rng, FUNCTION_SAMPLES)
                sound(z is None, R, z)
            elif relations.is_semifunction(R):
                clash = s.find_clash(R)
                witnessed(clash is not None and not relations.slice_at(R, clash[0]).is_principal, R)
            else:
                witnessed(any(equal(zi, zj) and not equal(wi, wj)
                              for (zi, wi), (zj, wj) in combinations(R.intended, 2)), R)
        for name in ('overlapping-function', 'intersection-clash'):
            w = demos.run_demo(s, name)
            fixed(w.verified, w)
        z, w = random_magma(depth, 2, rng, s.domain.name), random_magma(depth, 2, rng, s.domain.name)
        single = s.relation([(z, w)])
        fixed(s.is_function(single) and relations.apply(single, random_submagma(z, rng)) == w, single)
    return [sound, witnessed, fixed]


def disjoint_sufficiency(session, seed, cases, depth):
    disjoint, shared = Check('disjoint-inputs-function'), Check('shared-image-function')
    rng = _rng(seed, 'disjoint')
    s = next(_sessions(session, ('tag',)))
    for _ in range(cases):
        n = rng.randint(1, 6)
        intended = []
        for i in range(n):
            z = pr_iter(rng.randint(0, 2), atom_ideal([Atom('tag', (FRESH_TAG_BASE + i, rng.randint(-2, 2)))]))
            intended.append((z, random_magma(depth, 2, rng, 'tag')))
        R = s.relation(intended)
        ok = s.is_function(R)
        i = rng.randrange(n)
        z = random_submagma(intended[i][0], rng)
        disjoint(ok and relations.apply(R, z) == intended[i][1], R, z)
        w = random_magma(depth, 2, rng, 'tag')
        R = s.relation([(random_magma(depth, 2, rng, 'tag'), w) for _ in range(n)])
        shared(s.is_function(R), R)
    return [disjoint, shared]


def relation_demos(session, seed, cases, depth):
    checks = []
    for s in _sessions(session):
        for name in ('antisymmetry-loss', 'intersection-clash', 'overlapping-function'):
            c = Check('%s-%s' % (name, s.domain.name))
            w = demos.run_demo(s, name)
            c(w.verified, w)
            checks.append(c)
    return checks


# ordinals

def ordinal_order(session, seed, cases, depth):
    order, chain = Check('less-iff-strict-subset'), Check('expansion-chain')
    s = next(_sessions(session, ('tag',)))
    top = s.depth_cap
    for m in range(top + 1):
        for n in range(top + 1):
            a, b = s.nat(m), s.nat(n)
            order(ordinals.ord_less(a, b) == (m < n), a, b)
    values = ordinals.expansion(top, s.a0)
    for k in range(1, top + 1):
        gens = values[k].generators
        ok = set(gens) == {pr(s.a0), values[k - 1]}
        chain(ok and all(member(values[j], values[k]) for j in range(k)), values[k])
    return [order, chain]


def alt_disjoint(session, seed, cases, depth):
    disjoint, levels = Check('alt-naturals-disjoint'), Check('alt-level')
    s = next(_sessions(session, ('tag',)))
    for m in range(s.depth_cap + 1):
        a = s.nat(m, ordinals.Variant.ALT)
        levels(s.level(a.value) == Level(0, m + 2), a)
        for n in range(s.depth_cap + 1):
            disjoint(s.alt_disjoint(m, n) == (m != n), a, s.nat(n, ordinals.Variant.ALT))
    return [disjoint, levels]


def ordinal_add(session, seed, cases, depth):
    concrete, zero, absorb, assoc = Check('finite-sum-concrete'), Check('right-zero'), Check('absorption'), Check('associative')
    s = next(_sessions(session, ('tag',)))
    for a in range(s.depth_cap + 1):
        for b in range(s.depth_cap + 1 - a):
            total = s.ord_add(Level(0, a), Level(0, b))
            concrete(total == Level(0, a + b) and ordinals.add_concrete(a, b, s.a0, s.depth_cap) == s.ord_value(total),
                     Level(0, a), Level(0, b))
    rng = _rng(seed, 'ordinal-add')
    for _ in range(cases):
        x, y, z = (Level(rng.randint(0, 3), rng.randint(0, 5)) for _ in range(3))
        zero(s.ord_add(x, Level(0, 0)) == x, x)
        if x.is_finite:
            absorb(s.ord_add(x, Level(1, 0)) == Level(1, 0), x)
        assoc(s.ord_add(s.ord_add(x, y), z) == s.ord_add(x, s.ord_add(y, z)), x, y, z)
    return [concrete, zero, absorb, assoc]


def countgen(session, seed, cases, depth):
    applies, truncated, zero = Check('cg-apply-generator'), Check('cg-apply-matches-truncation'), Check('zero-outside-domain')
    s = next(_sessions(session, ('tag',)))
    rng = _rng(seed, 'countgen')
    tails = [ordinals.TailRule('const', random_magma(depth, 2, rng, 'tag')),
             ordinals.TailRule('pr-tower', random_magma(depth, 2, rng, 'tag')),
             ordinals.TailRule('shift', 1)]
    for tail in tails:
        F = s.countgen(_magmas(rng, rng.randint(0, 3), depth, 'tag'), tail)
        R = ordinals.truncate(F, 8)
        for _ in range(cases):
            n = rng.randint(1, 8)
            alt = ordinals.alt_value(n, s.a0)
            z = alt if rng.random() < 0.2 else random_submagma(alt, rng)
            y = ordinals.cg_apply(F, z)
            applies(y == F.generator(n), F, z)
            truncated(relations.apply(R, z) == y, F, z)
        try:
            ordinals.cg_apply(F, pr_iter(2, s.a0))
            zero(False, F)
        except NotInDomain:
            zero(True)
    return [applies, truncated, zero]


# separation

def mss(session, seed, cases, depth):
    canonical, inside, biconditional, closed = (Check('separation-canonical'), Check('separation-inside-u'),
                                                Check('membership-biconditional'), Check('descriptor-closed'))
    for name in PAIR_DOMAINS:
        rng = _rng(seed, name)
        done = 0
        for _ in range(cases * 10):
            if done == cases:
                break
            u = _magma_ideal(rng, depth, name)
            roots = [random_submagma(rng.choice(u.generators), rng) if rng.random() < 0.6
                     else random_magma(depth, 2, rng, name) for _ in range(rng.randint(1, 3))]
            C = separation.class_descriptor(roots)
            v = separation.separate(C, u)
            if v is EMPTY:
                continue
            done += 1
            canonical(ideal(v.generators) == v, v)
            inside(subset(v, u), v, u)
            for _ in range(10):
                base = rng.choice(u.generators + v.generators + C.roots)
                z = base if rng.random() < 0.3 else random_submagma(base, rng)
                biconditional(member(z, v) == (separation.class_contains(C, z) and member(z, u)), C, u, z)
                y = random_submagma(z, rng)
                if separation.class_contains(C, z):
                    closed(separation.class_contains(C, y), C, z, y)
    return [canonical, inside, biconditional, closed]


def magmatic_condition(session, seed, cases, depth):
    descriptor, singleton, pair_class = Check('descriptor-unrefuted'), Check('singleton-refuted'), Check('pairs-refuted')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        C = separation.class_descriptor(_magmas(rng, 2, depth, s.domain.name))
        verdict = s.sampler(separation.in_class(C), cases, seed)
        descriptor(isinstance(verdict, separation.Unrefuted), verdict)
        y0 = random_magma(depth, 2, rng, s.domain.name)
        verdict = s.sampler(separation.equal_to(y0), cases, seed)
        singleton(isinstance(verdict, separation.Refuted), y0, verdict)
        verdict = s.sampler(s.pair_predicate(), cases, seed)
        pair_class(isinstance(verdict, separation.Refuted), verdict)
    return [descriptor, singleton, pair_class]


def completion(session, seed, cases, depth):
    agree = Check('completion-equals-descriptor')
    for name in PAIR_DOMAINS:
        rng = _rng(seed, name)
        roots = _magmas(rng, 3, depth, name)
        P = separation.completion(separation.one_of(roots), roots)
        C = separation.class_descriptor(roots)
        for _ in range(cases):
            base = rng.choice(roots)
            x = _nearby(rng, base, depth, name)
            agree(P(x) == separation.class_contains(C, x), x)
    return [agree]


def replacement_pr(session, seed, cases, depth):
    witnesses, refusal = Check('witness-verified'), Check('chain-refused')
    tag, plane = get_domain('tag'), get_domain('plane')
    fixtures = [
        pr(atom_ideal([tag.atom(0, 0), tag.atom(1, 0)])),
        magma_ideal([atom_ideal([tag.atom(0, 0), tag.atom(1, 0)]), atom_ideal([tag.atom(2, 0)])]),
        pr_iter(3, atom_ideal([tag.atom(0, 0), tag.atom(1, 0)])),
        pr(atom_ideal([plane.atom(0, 0)])),
        atom_ideal([plane.atom(0, 0)]),
        pr_iter(2, plane.atom(2, 3)),
    ]
    for u in fixtures:
        w = separation.replacement_pr_witness(u)
        witnesses(w.verified, u, w)
    for u in (pr(atom_ideal([tag.atom(0, 0)])), atom_ideal([tag.atom(0, 0)])):
        try:
            separation.replacement_pr_witness(u)
            refusal(False, u)
        except NoIncomparableSubmagmas:
            refusal(True)
    return [witnesses, refusal]


def completion_not_functional(session, seed, cases, depth):
    c = Check('two-distinct-images')
    for s in _sessions(session):
        w = s.completion_not_functional()
        c(w.verified, w)
    return [c]


def constant_image(session, seed, cases, depth):
    c = Check('image-not-a-magma')
    for s in _sessions(session):
        rng = _rng(seed, s.domain.name)
        for _ in range(cases):
            u, y0 = random_magma(depth, 2, rng, s.domain.name), random_magma(depth, 2, rng, s.domain.name)
            w = demos.run_demo(s, 'constant-image', [u, y0])
            c(w.verified, w)
    return [c]


def subpair_fuzz(session, seed, cases, depth):
    present, verified = Check('standard-has-subpairs'), Check('subpair-verified')
    for s in _sessions(session):
        enc = StandardEncoding(s.seeds)
        found = fuzz_subpair_freeness(enc, s.domain.name, min(cases, 50), seed, depth)
        present(bool(found), s.domain.name)
        for c in found:
            inner, outer = enc.encode(c.sub_x, c.sub_y), enc.encode(c.x, c.y)
            verified(subset(inner, outer) and not equal(inner, outer), c.x, c.y, c.sub_x, c.sub_y)
    return [present, verified]


# oracle

def _oracle_checks(lines):
    checks = {}
    for line in lines:
        op, case, status = line.split(' ')
        c = checks.setdefault(op, Check(op))
        c(status == 'OK', case)
    return list(checks.values())


def gate_universe():
    tag = get_domain('tag')
    return oracle.FiniteUniverse('tag', [tag.atom(t, v) for t in (0, 1) for v in (0, 1)], 2)


def pair_universe():
    tag = get_domain('tag')
    return oracle.FiniteUniverse('tag', [tag.atom(0, -1), tag.atom(0, 0), tag.atom(1, 0)], 2)


def oracle_lines(U, name, session, seed=0, cases=30):
    """The ``<op> <case-id> OK|MISMATCH`` lines of one oracle comparison over U."""
    if name == 'gate':
        return oracle.gate(U)
    if name == 'pairs':
        return oracle.pair_theorem(U, session.seeds)
    if name == 'levels':
        return oracle.levels(U)
    if name == 'functions':
        ones = U.family_magmas(1)
        rng = _rng(seed, 'oracle-functions')
        rels = [session.relation([(rng.choice(ones), rng.choice(ones)) for _ in range(rng.randint(1, 3))])
                for _ in range(min(cases, 30))]
        return oracle.functions(U, rels)
    raise UnknownSuite('unknown oracle suite %r' % name)


def oracle_gate(session, seed, cases, depth):
    return _oracle_checks(oracle_lines(gate_universe(), 'gate', session))


def oracle_pairs(session, seed, cases, depth):
    s = Session('tag')
    return _oracle_checks(list(oracle_lines(pair_universe(), 'pairs', s)) + list(oracle_lines(gate_universe(), 'pairs', s)))


def oracle_levels(session, seed, cases, depth):
    return _oracle_checks(list(oracle.levels(gate_universe())) + list(oracle.levels(pair_universe())))


def oracle_functions(session, seed, cases, depth):
    s = next(_sessions(session, ('tag',)))
    return _oracle_checks(oracle_lines(pair_universe(), 'functions', s, seed, cases))


SUITES = {
    'atom-domains': atom_domains,
    'kernel-canonical': kernel_canonical,
    'pr-embedding': pr_embedding,
    'union-legality': union_legality,
    'two-one': two_one,
    'intersect-glb': intersect_glb,
    'no-minimal': no_minimal,
    'union-equality-cases': union_equality_cases,
    'pair-theorem': pair_theorem,
    'sub-pair': sub_pair,
    'tuples': tuples,
    'product': product,
    'dom-ran': dom_ran,
    'function-check': function_check,
    'disjoint-sufficiency': disjoint_sufficiency,
    'relation-demos': relation_demos,
    'subpair-fuzz': subpair_fuzz,
    'ordinal-order': ordinal_order,
    'alt-disjoint': alt_disjoint,
    'ordinal-add': ordinal_add,
    'countgen': countgen,
    'mss': mss,
    'magmatic-condition': magmatic_condition,
    'completion': completion,
    'replacement-pr': replacement_pr,
    'completion-not-functional': completion_not_functional,
    'constant-image': constant_image,
    'oracle-gate': oracle_gate,
    'oracle-pairs': oracle_pairs,
    'oracle-levels': oracle_levels,
    'oracle-functions': oracle_functions,
}


def run_suite(name, session=None, seed=0, cases=200, depth=3):
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite('unknown suite %r' % name)
    session = Session() if session is None else session
    log.debug(f'suite {name} start: seed={seed} cases={cases} depth={depth}')
    report = Report(name, suite(session, seed, cases, depth))
    log.debug(f'suite {name} done: passed={report.passed}')
    return report


def run_suites(names, session=None, seed=0, cases=200, depth=3):
    """Run the named suites ('all' for every one) in name order."""
    if 'all' in names:
        names = SUITES
    return [run_suite(name, session, seed, cases, depth) for name in sorted(set(names))]
