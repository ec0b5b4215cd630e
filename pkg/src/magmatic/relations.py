"""Magmatic products, relations and functions.

A relation is the union of pr(<<z_i, w_i>>) over an intended presentation. The
presentation is kept alongside the canonical magma: which elements count as
intended and which as collateral depends on it.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from magmatic.constants import DEFAULT_FUNCTION_CAP, CLASSIFICATIONS
from magmatic.errors import EmptyPresentation, KindError, NotInDomain, NoGreatestImage, PresentationTooLarge
from magmatic.kernel import EMPTY, Magma, magma_ideal, subset, equal, member, intersect
from magmatic.pairs import mk_pair, is_pair, extract_pair, check_seeds

log = logging.getLogger('magmatic')

INTENDED, COLLATERAL_PAIR, COLLATERAL_NON_PAIR, NOT_ELEMENT = CLASSIFICATIONS


@dataclass(frozen=True)
class Relation:
    intended: tuple
    whole: Magma
    seeds: tuple

    @property
    def pairs(self):
        return tuple(mk_pair(z, w, self.seeds).whole for z, w in self.intended)


@dataclass(frozen=True)
class WeakProduct:
    """The bare set of pairs <<z, w>> with z in left and w in right. It is queried, never built."""
    left: Magma
    right: Magma
    seeds: tuple


def mk_relation(pairs, seeds):
    seeds = check_seeds(seeds)
    intended = tuple((z, w) for z, w in pairs)
    if not intended:
        raise EmptyPresentation('a relation needs at least one intended pair')
    whole = magma_ideal([mk_pair(z, w, seeds).whole for z, w in intended])
    return Relation(intended, whole, seeds)


def _require_magma_ideal(x, op):
    if not isinstance(x, Magma) or x.is_atom_ideal:
        raise KindError('%s needs magma-ideals whose elements are magmas, got %r' % (op, x))
    return x


def product(x, y, seeds):
    _require_magma_ideal(x, 'product')
    _require_magma_ideal(y, 'product')
    return mk_relation([(g, h) for g in x.generators for h in y.generators], seeds)


def weak_product(x, y, seeds):
    return WeakProduct(_require_magma_ideal(x, 'weak_product'), _require_magma_ideal(y, 'weak_product'), check_seeds(seeds))


def weak_member(p, wp):
    if not is_pair(p, wp.seeds):
        return False
    z, w = extract_pair(p, wp.seeds)
    return member(z, wp.left) and member(w, wp.right)


def dom(R):
    return magma_ideal([z for z, _ in R.intended])

def ran(R):
    return magma_ideal([w for _, w in R.intended])


def classify(R, e):
    if any(e == p for p in R.pairs):
        return INTENDED
    if not member(e, R.whole):
        return NOT_ELEMENT
    if is_pair(e, R.seeds):
        return COLLATERAL_PAIR
    return COLLATERAL_NON_PAIR


def images(R, z):
    return [w for zi, w in R.intended if subset(z, zi)]

def slice_at(R, z):
    """R[z] = {w : <<z, w>> in R}, or EMPTY when z is outside dom(R)."""
    found = images(R, z)
    return magma_ideal(found) if found else EMPTY


def greatest(ws):
    for w in ws:
        if all(subset(v, w) for v in ws):
            return w
    return None


def is_semifunction(R):
    return all(equal(wi, wj) for (zi, wi), (zj, wj) in combinations(R.intended, 2) if equal(zi, zj))


def closed_sets(R, cap=DEFAULT_FUNCTION_CAP):
    """Yield (z_S, S') for every realizable trigger set S' = {i : z_S subset z_i}."""
    n = len(R.intended)
    if n > cap:
        raise PresentationTooLarge('%d intended pairs exceed the cap of %d' % (n, cap))
    zs = [z for z, _ in R.intended]
    seen = set()
    for size in range(1, n + 1):
        for chosen in combinations(range(n), size):
            z = zs[chosen[0]]
            for i in chosen[1:]:
                z = intersect(z, zs[i])
                if z is EMPTY:
                    break
            if z is EMPTY:
                continue
            closure = frozenset(i for i in range(n) if subset(z, zs[i]))
            if closure in seen:
                continue
            seen.add(closure)
            yield z, closure


def find_clash(R, cap=DEFAULT_FUNCTION_CAP):
    """A domain element whose images have no greatest member, as (z, images), or None."""
    for z, closure in closed_sets(R, cap):
        ws = [R.intended[i][1] for i in sorted(closure)]
        if greatest(ws) is None:
            log.debug(f'find_clash: {z} has images {ws} without a greatest one')
            return z, ws
    return None


def is_function(R, cap=DEFAULT_FUNCTION_CAP):
    if len(R.intended) > cap:
        raise PresentationTooLarge('%d intended pairs exceed the cap of %d' % (len(R.intended), cap))
    if not is_semifunction(R):
        return False
    return find_clash(R, cap) is None


def apply(R, z):
    found = images(R, z)
    if not found:
        raise NotInDomain('%s is not in the domain of the relation' % (z,))
    w = greatest(found)
    if w is None:
        raise NoGreatestImage('%s has images %s without a greatest one' % (z, found))
    return w
