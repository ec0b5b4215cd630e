import logging
import sys

from magmatic.constants import (DEFAULT_FUNCTION_CAP, DEFAULT_DEPTH_CAP, DEFAULT_LEVEL_CAP,
                                RE_CONFIG_LINE, RE_CONFIG_SKIP, get_number)
from magmatic.domains import get_domain
from magmatic.errors import ConfigError, SeedsUnavailable, MagmaError
from magmatic import kernel, pairs, relations, ordinals, separation

DEBUG = False

log = logging.getLogger('magmatic')
if DEBUG:               # pragma nocover
    log.setLevel(logging.DEBUG)
    log.addHandler(logging.StreamHandler(sys.stderr))
else:
    log.addHandler(logging.NullHandler())


def verbose():
    log.setLevel(logging.DEBUG)
    log.addHandler(logging.StreamHandler(sys.stderr))


class Session(object):
    """One atom domain, one choice of pair seeds and the engine caps.

    Sessions over a domain without incomparable atoms (qdup) are fine for the
    kernel; anything that builds pairs raises SeedsUnavailable.
    """
    def __init__(self, domain='tag', seeds=None, function_cap=DEFAULT_FUNCTION_CAP,
                 depth_cap=DEFAULT_DEPTH_CAP, level_cap=DEFAULT_LEVEL_CAP):
        self.domain = get_domain(domain)
        self.function_cap = function_cap
        self.depth_cap = depth_cap
        self.level_cap = level_cap
        if seeds is not None:
            self._seeds = pairs.check_seeds(tuple(seeds))
            self.domain.check(*self._seeds)
        elif self.domain.has_seeds():
            self._seeds = self.domain.seeds()
        else:
            self._seeds = None
        log.debug(f'Session({self.domain.name}, seeds={self._seeds}, function_cap={function_cap}, depth_cap={depth_cap})')

    @classmethod
    def from_config(cls, path):
        """Read ``key = value`` lines; keys domain, a0, a1, function_cap, depth_cap, level_cap."""
        with open(path) as f:
            return cls.from_text(f.read(), path)

    @classmethod
    def from_text(cls, text, source='<config>'):
        from magmatic.evaluator import read_atom
        raw = {}
        for n, line in enumerate(text.splitlines(), start=1):
            if RE_CONFIG_SKIP.match(line):
                continue
            m = RE_CONFIG_LINE.match(line)
            if not m:
                raise ConfigError('%s:%d: expected key = value' % (source, n))
            raw[m.group('key')] = m.group('value')
        unknown = set(raw) - {'domain', 'a0', 'a1', 'function_cap', 'depth_cap', 'level_cap'}
        if unknown:
            raise ConfigError('%s: unknown keys %s' % (source, ', '.join(sorted(unknown))))
        kwargs = {}
        try:
            for key in ('function_cap', 'depth_cap', 'level_cap'):
                if key in raw:
                    kwargs[key] = get_number(raw[key])
            if ('a0' in raw) != ('a1' in raw):
                raise ConfigError('%s: a0 and a1 go together' % source)
            if 'a0' in raw:
                kwargs['seeds'] = (read_atom(raw['a0']), read_atom(raw['a1']))
            return cls(raw.get('domain', 'tag'), **kwargs)
        except ConfigError:
            raise
        except (MagmaError, ValueError) as e:
            raise ConfigError('%s: %s' % (source, e))

    @property
    def seeds(self):
        if self._seeds is None:
            raise SeedsUnavailable('domain %s has no incomparable seed atoms' % self.domain.name)
        return self._seeds

    @property
    def a0(self):
        return self.seeds[0]

    def atom(self, *payload):
        return self.domain.atom(*payload)

    def level(self, x):
        return kernel.level(x, self.level_cap)

    def random_magma(self, depth, width, seed):
        return kernel.random_magma(depth, width, seed, self.domain.name)

    # pairs
    def pair(self, x, y):
        return pairs.mk_pair(x, y, self.seeds)

    def is_pair(self, m):
        return pairs.is_pair(m, self.seeds)

    def extract_pair(self, m):
        return pairs.extract_pair(m, self.seeds)

    def tuple(self, xs):
        return pairs.mk_tuple(xs, self.seeds)

    def extract_tuple(self, m, n):
        return pairs.extract_tuple(m, n, self.seeds)

    # relations
    def relation(self, intended):
        return relations.mk_relation(intended, self.seeds)

    def product(self, x, y):
        return relations.product(x, y, self.seeds)

    def weak_product(self, x, y):
        return relations.weak_product(x, y, self.seeds)

    def is_function(self, R):
        return relations.is_function(R, self.function_cap)

    def find_clash(self, R):
        return relations.find_clash(R, self.function_cap)

    # ordinals
    def nat(self, n, variant=ordinals.Variant.PRIMARY):
        return ordinals.nat(n, variant, self.a0, self.depth_cap)

    def alt_disjoint(self, m, n):
        return ordinals.alt_disjoint(m, n, self.a0, self.depth_cap)

    def ord_add(self, a, b):
        return ordinals.ord_add(a, b, self.level_cap)

    def ord_value(self, o):
        return ordinals.ord_value(o, self.a0, self.depth_cap)

    def countgen(self, prefix, tail):
        return ordinals.countgen_function(prefix, tail, self.seeds)

    # separation
    def pair_predicate(self):
        return separation.pair_predicate(self.seeds)

    def sampler(self, P, budget, seed):
        return separation.magmatic_condition_sampler(P, budget, seed, self.domain.name)

    def completion_not_functional(self):
        return separation.completion_not_functional_demo(self.seeds)

    def evaluator(self):
        from magmatic.evaluator import Evaluator
        return Evaluator(self)
