"""Canonical finitely-generated magmas and the kernel decision procedures.

A magma is presented by a finite nonempty antichain of generators, either atoms
(an atom-ideal) or magmas (a magma-ideal), and denotes the union of the
principal down-sets of its generators. Canonical presentations are unique, so
equality is identity of the canonical serialization.
"""
import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from magmatic.constants import ATOM_IDEAL_HEAD, MAGMA_IDEAL_HEAD, DEFAULT_LEVEL_CAP
from magmatic.domains import Atom, get_domain, leq, strictly_below, common_lower_bounds, canonical_rep, format_atom
from magmatic.errors import EmptyGenerators, DomainMismatch, KindMismatch, KindError, LevelCap

log = logging.getLogger('magmatic')


class Kind(Enum):
    ATOM_IDEAL = ATOM_IDEAL_HEAD
    MAGMA_IDEAL = MAGMA_IDEAL_HEAD


@dataclass(frozen=True, order=True)
class Level:
    """The ordinal omega*q + r."""
    q: int = 0
    r: int = 0

    def __post_init__(self):
        if self.q < 0 or self.r < 0:
            raise ValueError('ordinal coefficients are nonnegative, got w*%d+%d' % (self.q, self.r))

    def __str__(self):
        if self.q == 0:
            return str(self.r)
        head = 'w' if self.q == 1 else 'w*%d' % self.q
        return head if self.r == 0 else '%s+%d' % (head, self.r)

    @property
    def is_finite(self):
        return self.q == 0

    def successor(self):
        return Level(self.q, self.r + 1)


class _Empty(object):
    """The empty intersection. It is a value, never a magma."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'empty'

EMPTY = _Empty()


class Magma(object):
    __slots__ = ('kind', 'generators', '_key', '_level')

    def __init__(self, kind, generators):
        # generators must already be a canonical antichain; use atom_ideal/magma_ideal
        self.kind = kind
        self.generators = tuple(generators)
        self._key = None
        self._level = None

    @property
    def key(self):
        if self._key is None:
            if self.kind is Kind.ATOM_IDEAL:
                parts = [format_atom(a) for a in self.generators]
            else:
                parts = [g.key for g in self.generators]
            self._key = '(%s %s)' % (self.kind.value, ' '.join(parts))
        return self._key

    @property
    def is_atom_ideal(self):
        return self.kind is Kind.ATOM_IDEAL

    @property
    def is_principal(self):
        return len(self.generators) == 1

    def sort_key(self):
        return (0 if self.is_atom_ideal else 1, level(self), self.key)

    def __eq__(self, other):
        if not isinstance(other, Magma):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return self.key


def _require_magma(x, op):
    if not isinstance(x, Magma):
        raise KindError('%s expects a magma, got %r' % (op, x))
    return x


def _antichain(items, below):
    kept = []
    for g in items:
        if any(below(g, h) for h in kept):
            continue
        kept = [h for h in kept if not below(h, g)]
        kept.append(g)
    return kept


def atom_ideal(atoms):
    atoms = list(atoms)
    if not atoms:
        raise EmptyGenerators('an atom-ideal needs at least one generator')
    domains = set(a.domain for a in atoms)
    if len(domains) > 1:
        raise DomainMismatch('atom-ideal generators span domains %s' % ', '.join(sorted(domains)))
    reps = sorted(set(canonical_rep(a) for a in atoms))
    return Magma(Kind.ATOM_IDEAL, sorted(_antichain(reps, leq)))


def magma_ideal(magmas):
    magmas = [_require_magma(m, 'magma_ideal') for m in magmas]
    if not magmas:
        raise EmptyGenerators('a magma-ideal needs at least one generator')
    return Magma(Kind.MAGMA_IDEAL, sorted(_antichain(magmas, subset)))


def ideal(generators):
    """Canonical ideal on generators that are all atoms or all magmas."""
    generators = list(generators)
    if generators and all(isinstance(g, Atom) for g in generators):
        return atom_ideal(generators)
    if any(isinstance(g, Atom) for g in generators):
        raise KindMismatch('generators mix atoms and magmas')
    return magma_ideal(generators)


def generators(x):
    return _require_magma(x, 'generators').generators


def pr(x):
    if isinstance(x, Atom):
        return atom_ideal([x])
    return Magma(Kind.MAGMA_IDEAL, (_require_magma(x, 'pr'),))

def pr_iter(n, x):
    if n < 0:
        raise ValueError('pr^n needs n >= 0, got %d' % n)
    for _ in range(n):
        x = pr(x)
    return x


@lru_cache(maxsize=1 << 16)
def _subset(x, y):
    if x.kind is not y.kind:
        return False
    if x.key == y.key:
        return True
    if x.is_atom_ideal:
        return all(any(leq(g, h) for h in y.generators) for g in x.generators)
    return all(any(_subset(g, h) for h in y.generators) for g in x.generators)

def subset(x, y):
    return _subset(_require_magma(x, 'subset'), _require_magma(y, 'subset'))


def equal(x, y):
    return _require_magma(x, 'equal').key == _require_magma(y, 'equal').key


def member(z, x):
    _require_magma(x, 'member')
    if isinstance(z, Atom):
        return x.is_atom_ideal and any(leq(z, g) for g in x.generators)
    _require_magma(z, 'member')
    return not x.is_atom_ideal and any(_subset(z, g) for g in x.generators)


def union(x, y):
    _require_magma(x, 'union')
    _require_magma(y, 'union')
    if x.kind is not y.kind:
        # an atom-ideal joined with a magma-ideal is not a magma
        raise KindMismatch('union of %s with %s is not a magma' % (x, y))
    if x.is_atom_ideal:
        return atom_ideal(x.generators + y.generators)
    return magma_ideal(x.generators + y.generators)


def intersect(x, y):
    _require_magma(x, 'intersect')
    _require_magma(y, 'intersect')
    if x.kind is not y.kind:
        return EMPTY
    if x.is_atom_ideal:
        meets = [c for g in x.generators for h in y.generators for c in common_lower_bounds(g, h)]
        return atom_ideal(meets) if meets else EMPTY
    parts = []
    for g in x.generators:
        for h in y.generators:
            m = intersect(g, h)
            if m is not EMPTY:
                parts.append(m)
    return magma_ideal(parts) if parts else EMPTY


def level(x, cap=DEFAULT_LEVEL_CAP):
    x = _require_magma(x, 'level')
    if x._level is None:
        if x.is_atom_ideal:
            x._level = Level(0, 1)
        else:
            levels = [level(g, cap) for g in x.generators]
            if all(l == levels[0] for l in levels):
                result = levels[0].successor()
            else:
                # least limit above all generators, plus one
                result = Level(max(l.q for l in levels) + 1, 1)
            if result.q > cap:
                raise LevelCap('level %s exceeds the cap w*%d' % (result, cap))
            x._level = result
    return x._level


def _rng(seed):
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_magma(depth, width, seed, domain='tag'):
    """A canonical magma of generator-tree depth <= depth and <= width generators per node."""
    if depth < 1 or width < 1:
        raise ValueError('random_magma needs depth >= 1 and width >= 1')
    return _random_magma(_rng(seed), depth, width, get_domain(domain))

def _random_magma(rng, depth, width, domain):
    count = rng.randint(1, width)
    if depth == 1 or rng.random() < 0.3:
        return atom_ideal([domain.random_atom(rng) for _ in range(count)])
    return magma_ideal([_random_magma(rng, rng.randint(1, depth - 1), width, domain) for _ in range(count)])


def random_submagma(x, seed):
    """A magma strictly below ``x``: one generator shrinks strictly, others may shrink or drop."""
    return _shrink(_rng(seed), _require_magma(x, 'random_submagma'))

def _shrink(rng, x):
    pick = rng.randrange(len(x.generators))
    out = []
    for i, g in enumerate(x.generators):
        if i == pick:
            out.append(_shrink_generator(rng, g, strict=True))
        elif rng.random() < 0.3:
            continue
        else:
            out.append(_shrink_generator(rng, g, strict=False))
    return ideal(out)

def _shrink_generator(rng, g, strict):
    if isinstance(g, Atom):
        for _ in range(rng.randint(1 if strict else 0, 2)):
            g = strictly_below(g)
        return g
    if not strict and rng.random() < 0.5:
        return g
    return _shrink(rng, g)
