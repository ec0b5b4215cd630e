"""Magmatic naturals, ordinal notations and countably generated functions.

Two definitions of the naturals are carried side by side:

* Primary: ``0 = pr^2(a0)`` and ``n+1 = n u pr(n)``, strictly increasing under inclusion;
* Alt: ``n = pr^(n+2)(a0)``, pairwise disjoint.

Limit ordinals never become magmas. They exist only as :class:`OrdinalNotation`.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from magmatic.constants import DEFAULT_DEPTH_CAP, DEFAULT_LEVEL_CAP, TAIL_RULES
from magmatic.errors import DepthCap, VariantMismatch, NotRepresentable, NotInDomain, KindError
from magmatic.kernel import EMPTY, Level, Magma, pr, pr_iter, union, subset, equal, intersect, level
from magmatic.pairs import check_seeds
from magmatic.relations import mk_relation

log = logging.getLogger('magmatic')

OrdinalNotation = Level


class Variant(Enum):
    PRIMARY = 'nat'
    ALT = 'nat*'


@dataclass(frozen=True)
class MagNat:
    n: int
    variant: Variant
    value: Magma


@lru_cache(maxsize=256)
def primary_value(n, a0):
    if n == 0:
        return pr_iter(2, a0)
    prev = primary_value(n - 1, a0)
    return union(prev, pr(prev))

@lru_cache(maxsize=256)
def alt_value(n, a0):
    return pr_iter(n + 2, a0)


def nat(n, variant, a0, depth_cap=DEFAULT_DEPTH_CAP):
    if n < 0:
        raise ValueError('naturals are nonnegative, got %d' % n)
    if n > depth_cap:
        raise DepthCap('natural %d exceeds the depth cap %d' % (n, depth_cap))
    value = primary_value(n, a0) if variant is Variant.PRIMARY else alt_value(n, a0)
    return MagNat(n, variant, value)


def expansion(n, a0):
    """The chain 0, 1, ..., n of Primary naturals; each k+1 is generated by pr(a0) and k."""
    return [primary_value(k, a0) for k in range(n + 1)]


def ord_less(a, b):
    if a.variant is not b.variant:
        raise VariantMismatch('cannot compare %s with %s' % (a.variant.value, b.variant.value))
    if a.variant is not Variant.PRIMARY:
        # Alt naturals are pairwise disjoint, never nested
        raise VariantMismatch('order by inclusion is defined on Primary naturals only')
    return subset(a.value, b.value) and not equal(a.value, b.value)


def alt_disjoint(m, n, a0, depth_cap=DEFAULT_DEPTH_CAP):
    return intersect(nat(m, Variant.ALT, a0, depth_cap).value, nat(n, Variant.ALT, a0, depth_cap).value) is EMPTY


def ord_add(a, b, cap=DEFAULT_LEVEL_CAP):
    if b.q > 0:
        result = OrdinalNotation(a.q + b.q, b.r)
    else:
        result = OrdinalNotation(a.q, a.r + b.r)
    if result.q > cap:
        raise NotRepresentable('%s + %s is beyond w*%d' % (a, b, cap))
    return result


def ord_value(o, a0, depth_cap=DEFAULT_DEPTH_CAP):
    if not o.is_finite:
        raise NotRepresentable('%s is a limit-sized ordinal and has no finite magma' % (o,))
    return nat(o.r, Variant.PRIMARY, a0, depth_cap).value


def add_concrete(a, b, a0, depth_cap=DEFAULT_DEPTH_CAP):
    """a + b by unfolding a + (c+1) = (a + c) u pr(a + c) on magmas."""
    value = nat(a, Variant.PRIMARY, a0, depth_cap).value
    for _ in range(b):
        value = union(value, pr(value))
    return value


@dataclass(frozen=True)
class TailRule:
    rule: str
    arg: object

    def __post_init__(self):
        if self.rule not in TAIL_RULES:
            raise ValueError('unknown tail rule %r (known: %s)' % (self.rule, ', '.join(TAIL_RULES)))
        if self.rule == 'shift':
            if not isinstance(self.arg, int) or self.arg < 0:
                raise ValueError('shift needs a nonnegative integer, got %r' % (self.arg,))
        elif not isinstance(self.arg, Magma):
            raise KindError('%s tail needs a magma, got %r' % (self.rule, self.arg))


@dataclass(frozen=True)
class CountGenFun:
    """F = u{pr(<<n, y_n>>) : n >= 1} over the Alt naturals.

    ``prefix[0]`` is y_1; past the prefix the tail rule takes over.
    """
    prefix: tuple
    tail: TailRule
    seeds: tuple

    def generator(self, n):
        if n < 1:
            raise NotInDomain('countably generated functions start at 1, got %d' % n)
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        k = n - len(self.prefix)
        if self.tail.rule == 'const':
            return self.tail.arg
        if self.tail.rule == 'pr-tower':
            return pr_iter(k - 1, self.tail.arg)
        return alt_value(n + self.tail.arg, self.seeds[0])


def countgen_function(prefix, tail, seeds):
    prefix = tuple(prefix)
    for y in prefix:
        if not isinstance(y, Magma):
            raise KindError('countably generated images must be magmas, got %r' % (y,))
    return CountGenFun(prefix, tail, check_seeds(seeds))


def cg_index(F, z):
    """The n with z inside the Alt natural n, or None."""
    lvl = level(z)
    if not lvl.is_finite:
        return None
    n = lvl.r - 2
    if n < 1 or not subset(z, alt_value(n, F.seeds[0])):
        return None
    return n


def cg_apply(F, z):
    n = cg_index(F, z)
    if n is None:
        raise NotInDomain('%s is not below any nonzero Alt natural' % (z,))
    return F.generator(n)


def cg_range_prefix(F, k):
    return [F.generator(n) for n in range(1, k + 1)]


def truncate(F, k):
    """The finite relation on the first k generators of F."""
    return mk_relation([(alt_value(n, F.seeds[0]), F.generator(n)) for n in range(1, k + 1)], F.seeds)
