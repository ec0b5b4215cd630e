"""Pluggable decidable atom preorders.

Every domain is a stateless value-level contract over :class:`Atom` values. The
three shipped domains together exercise incomparable atoms, empty meets, lattice
meets and the collapsing of equivalent atoms:

* ``tag``   -- tags x integers, a linear order inside each tag, tags incomparable;
* ``plane`` -- integer points ordered componentwise;
* ``qdup``  -- rationals with a duplicated copy bit, ordered by the rational only.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from magmatic.constants import PAYLOAD_BOUND, RANDOM_TAGS, ATOM_HEAD, format_rational, get_rational
from magmatic.errors import DomainMismatch, SeedsUnavailable

log = logging.getLogger('magmatic')


@dataclass(frozen=True, order=True)
class Atom:
    domain: str
    payload: tuple

    def __repr__(self):
        return format_atom(self)


class AtomDomain(ABC):
    name = None

    def atom(self, *payload):
        return Atom(self.name, self.coerce(payload))

    def coerce(self, payload):
        return tuple(int(v) for v in payload)

    def check(self, *atoms):
        for a in atoms:
            if a.domain != self.name:
                raise DomainMismatch('atom %r is not in domain %s' % (a, self.name))

    @abstractmethod
    def leq(self, a, b):
        pass

    @abstractmethod
    def strictly_below(self, a):
        pass

    @abstractmethod
    def seeds(self):
        pass

    @abstractmethod
    def common_lower_bounds(self, a, b):
        pass

    def canonical_rep(self, a):
        return a

    def incomparable_below(self, a):
        """Two incomparable atoms strictly below ``a``, or None if the domain has none."""
        return None

    def has_seeds(self):
        try:
            self.seeds()
        except SeedsUnavailable:
            return False
        return True

    @abstractmethod
    def random_atom(self, rng):
        pass

    def parse_payload(self, args):
        return self.coerce(args)

    def format_payload(self, payload):
        return ' '.join(str(v) for v in payload)


class TaggedInt(AtomDomain):
    name = 'tag'

    def leq(self, a, b):
        self.check(a, b)
        return a.payload[0] == b.payload[0] and a.payload[1] <= b.payload[1]

    def strictly_below(self, a):
        tag, value = a.payload
        return self.atom(tag, value - 1)

    def seeds(self):
        return self.atom(0, 0), self.atom(1, 0)

    def common_lower_bounds(self, a, b):
        self.check(a, b)
        if a.payload[0] != b.payload[0]:
            return ()
        return (self.atom(a.payload[0], min(a.payload[1], b.payload[1])),)

    def random_atom(self, rng):
        return self.atom(rng.choice(RANDOM_TAGS), rng.randint(-PAYLOAD_BOUND, PAYLOAD_BOUND))


class Plane(AtomDomain):
    name = 'plane'

    def leq(self, a, b):
        self.check(a, b)
        return a.payload[0] <= b.payload[0] and a.payload[1] <= b.payload[1]

    def strictly_below(self, a):
        x, y = a.payload
        return self.atom(x - 1, y - 1)

    def seeds(self):
        return self.atom(0, 1), self.atom(1, 0)

    def common_lower_bounds(self, a, b):
        self.check(a, b)
        return (self.atom(min(a.payload[0], b.payload[0]), min(a.payload[1], b.payload[1])),)

    def incomparable_below(self, a):
        x, y = a.payload
        return self.atom(x - 1, y), self.atom(x, y - 1)

    def random_atom(self, rng):
        return self.atom(rng.randint(-PAYLOAD_BOUND, PAYLOAD_BOUND), rng.randint(-PAYLOAD_BOUND, PAYLOAD_BOUND))


class QDup(AtomDomain):
    name = 'qdup'

    def coerce(self, payload):
        q, copy = payload
        if int(copy) not in (0, 1):
            raise ValueError('qdup copy bit must be 0 or 1, got %r' % (copy,))
        return Fraction(q), int(copy)

    def leq(self, a, b):
        self.check(a, b)
        return a.payload[0] <= b.payload[0]

    def strictly_below(self, a):
        q, copy = a.payload
        return self.atom(q - Fraction(1, 2), copy)

    def seeds(self):
        # a linear preorder has no incomparable atoms
        raise SeedsUnavailable('domain qdup has no incomparable atoms')

    def common_lower_bounds(self, a, b):
        self.check(a, b)
        return (self.atom(min(a.payload[0], b.payload[0]), 0),)

    def canonical_rep(self, a):
        self.check(a)
        if a.payload[1] == 0:
            return a
        return self.atom(a.payload[0], 0)

    def random_atom(self, rng):
        return self.atom(Fraction(rng.randint(-2 * PAYLOAD_BOUND, 2 * PAYLOAD_BOUND), 2), rng.randint(0, 1))

    def parse_payload(self, args):
        q, copy = args
        if isinstance(q, str):
            q = get_rational(q)
        return self.coerce((q, copy))

    def format_payload(self, payload):
        return '%s %d' % (format_rational(payload[0]), payload[1])


DOMAINS = {d.name: d for d in (TaggedInt(), Plane(), QDup())}


def get_domain(name):
    try:
        return DOMAINS[name]
    except KeyError:
        raise DomainMismatch('unknown atom domain %r (known: %s)' % (name, ', '.join(DOMAINS)))


def _same_domain(a, b):
    if a.domain != b.domain:
        raise DomainMismatch('cannot compare %r with %r' % (a, b))
    return DOMAINS[a.domain]

def leq(a, b):
    return _same_domain(a, b).leq(a, b)

def equivalent(a, b):
    return leq(a, b) and leq(b, a)

def strictly_below(a):
    return DOMAINS[a.domain].strictly_below(a)

def common_lower_bounds(a, b):
    d = _same_domain(a, b)
    return tuple(sorted(set(d.canonical_rep(c) for c in d.common_lower_bounds(a, b))))

def canonical_rep(a):
    return DOMAINS[a.domain].canonical_rep(a)

def format_atom(a):
    return '(%s %s %s)' % (ATOM_HEAD, a.domain, DOMAINS[a.domain].format_payload(a.payload))
