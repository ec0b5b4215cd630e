"""Magmatic ordered pairs built from pr-towers tagged by two incomparable seed atoms.

    <<x, y>> = pr(pr^2(x) u pr^2(a0)) u pr(pr^2(y) u pr^2(a1))

Every function takes the seeds ``(a0, a1)`` explicitly; a :class:`~magmatic.session.Session`
fixes them once and passes them along.
"""
import logging
from dataclasses import dataclass

from magmatic.domains import Atom, leq
from magmatic.errors import SeedsUnavailable, SeedMismatch, NotAPair, ArityTooSmall, KindError
from magmatic.kernel import Magma, pr, pr_iter, union, subset, equal

log = logging.getLogger('magmatic')

NAMES = ('x', 'y', "x'", "y'")


def check_seeds(seeds):
    if seeds is None:
        raise SeedsUnavailable('pair construction needs seeds (a0, a1)')
    a0, a1 = seeds
    if not (isinstance(a0, Atom) and isinstance(a1, Atom)):
        raise SeedsUnavailable('seeds must be atoms, got %r' % (seeds,))
    if leq(a0, a1) or leq(a1, a0):
        raise SeedsUnavailable('seeds %r and %r are comparable' % (a0, a1))
    return a0, a1


@dataclass(frozen=True)
class PairView:
    first: Magma
    second: Magma
    whole: Magma
    seeds: tuple

    def same_as(self, other):
        if self.seeds != other.seeds:
            raise SeedMismatch('pairs built over seeds %r and %r cannot be compared' % (self.seeds, other.seeds))
        return self.whole == other.whole

    def __iter__(self):
        return iter((self.first, self.second))


def _component(u, seed):
    return pr(union(pr_iter(2, u), pr_iter(2, seed)))

def mk_pair(x, y, seeds):
    a0, a1 = check_seeds(seeds)
    for v in (x, y):
        if not isinstance(v, Magma):
            raise KindError('pair constituents must be magmas, got %r' % (v,))
    whole = union(_component(x, a0), _component(y, a1))
    return PairView(x, y, whole, (a0, a1))


def _constituent(block, seed):
    """The u of a block shaped pr(u) u pr(seed), or None."""
    if block.is_atom_ideal or len(block.generators) != 2:
        return None
    tag = pr(seed)
    if tag not in block.generators:
        return None
    other = [g for g in block.generators if g != tag][0]
    if other.is_atom_ideal or not other.is_principal:
        return None
    return other.generators[0]

def _split(m, seeds):
    if not isinstance(m, Magma) or m.is_atom_ideal or len(m.generators) != 2:
        return None
    a0, a1 = seeds
    first, second = m.generators
    for b0, b1 in ((first, second), (second, first)):
        x, y = _constituent(b0, a0), _constituent(b1, a1)
        if x is not None and y is not None:
            return x, y
    return None


def is_pair(m, seeds):
    return _split(m, check_seeds(seeds)) is not None


def extract_pair(m, seeds):
    found = _split(m, check_seeds(seeds))
    if found is None:
        raise NotAPair('%s is not a magmatic pair' % (m,))
    return found


def mk_tuple(xs, seeds):
    xs = list(xs)
    if len(xs) < 2:
        raise ArityTooSmall('a tuple needs at least 2 components, got %d' % len(xs))
    whole = xs[0]
    for x in xs[1:]:
        whole = mk_pair(whole, x, seeds).whole
    return whole


def extract_tuple(m, n, seeds):
    if n < 2:
        raise ArityTooSmall('a tuple has at least 2 components, asked for %d' % n)
    out = []
    for _ in range(n - 1):
        m, last = extract_pair(m, seeds)
        out.append(last)
    out.append(m)
    return out[::-1]


@dataclass(frozen=True)
class UnionEqualityCase:
    """Which way pr(x) u pr(y) = pr(x') u pr(y') holds.

    ``tag`` is one of 'I', 'II', 'III' or 'Unequal'. For case III, ``detail`` holds
    ``('equal', a, b)`` for the cross-equality and ``('subset', c, a)`` for each
    remaining element sitting below it, named by position in ``NAMES``.
    """
    tag: str
    detail: tuple = ()


def union2_equality_case(x, y, x2, y2):
    if union(pr(x), pr(y)) != union(pr(x2), pr(y2)):
        return UnionEqualityCase('Unequal')
    if equal(x, x2) and equal(y, y2):
        return UnionEqualityCase('I')
    if equal(x, y2) and equal(y, x2):
        return UnionEqualityCase('II')
    values = dict(zip(NAMES, (x, y, x2, y2)))
    for left, left_other in (('x', 'y'), ('y', 'x')):
        for right, right_other in (("x'", "y'"), ("y'", "x'")):
            if not equal(values[left], values[right]):
                continue
            top = values[left]
            if subset(values[left_other], top) and subset(values[right_other], top):
                return UnionEqualityCase('III', (
                    ('equal', left, right),
                    ('subset', left_other, left),
                    ('subset', right_other, left),
                ))
    # unreachable for canonical inputs: equal unions always fall in one of the cases
    log.debug(f'union2_equality_case({x}, {y}, {x2}, {y2}): no case matched')
    raise AssertionError('equal two-generator unions without a case')


def replay_case(case, x, y, x2, y2):
    """Re-check a classification through the kernel alone."""
    values = dict(zip(NAMES, (x, y, x2, y2)))
    same = union(pr(x), pr(y)) == union(pr(x2), pr(y2))
    if case.tag == 'Unequal':
        return not same
    if not same:
        return False
    if case.tag == 'I':
        return equal(x, x2) and equal(y, y2)
    if case.tag == 'II':
        return equal(x, y2) and equal(y, x2)
    checks = {'equal': equal, 'subset': subset}
    return all(checks[op](values[a], values[b]) for op, a, b in case.detail)
