"""Demo catalog: small constructions that exhibit a law or its failure.

Each demo returns a :class:`~magmatic.separation.Witness` whose facts are all
replayed through the kernel.
"""
import logging

from magmatic.domains import strictly_below
from magmatic.errors import UnknownSuite
from magmatic.kernel import EMPTY, atom_ideal, pr, pr_iter, subset, equal, intersect
from magmatic.relations import classify, is_function, find_clash, apply, COLLATERAL_PAIR
from magmatic.separation import Witness, replacement_pr_witness, constant_image_demo

log = logging.getLogger('magmatic')


def _below(a, n):
    for _ in range(n):
        a = strictly_below(a)
    return a


def replacement_pr(session, u=None):
    if u is None:
        u = pr(atom_ideal(session.seeds))
    return replacement_pr_witness(u)


def completion_not_functional(session):
    return session.completion_not_functional()


def constant_image(session, u=None, y0=None):
    a0, a1 = session.seeds
    return constant_image_demo(pr_iter(2, a0) if u is None else u, pr(a1) if y0 is None else y0)


def antisymmetry_loss(session):
    """R = pr(<<z, w>>) with z below w holds both <<z, z'>> and <<z', z>> for z' below z."""
    a0, _ = session.seeds
    z = atom_ideal([_below(a0, 1)])
    w = atom_ideal([a0])
    z2 = atom_ideal([_below(a0, 2)])
    R = session.relation([(z, w)])
    forward = session.pair(z, z2).whole
    backward = session.pair(z2, z).whole
    facts = (
        ('z-below-w', subset(z, w) and not equal(z, w)),
        ('forward-collateral', classify(R, forward) == COLLATERAL_PAIR),
        ('backward-collateral', classify(R, backward) == COLLATERAL_PAIR),
        ('z-z2-distinct', not equal(z, z2)),
    )
    return Witness('antisymmetry-loss', (('z', z), ('w', w), ('z2', z2)), facts)


def intersection_clash(session):
    """Overlapping inputs with incomparable images: no greatest image on the overlap."""
    a0, a1 = session.seeds
    z1 = atom_ideal([a0])
    z2 = atom_ideal([a1, _below(a0, 1)])
    w1, w2 = pr(a0), pr(a1)
    R = session.relation([(z1, w1), (z2, w2)])
    clash = find_clash(R, session.function_cap)
    overlap = intersect(z1, z2)
    facts = (
        ('overlap-nonempty', overlap is not EMPTY),
        ('images-incomparable', not subset(w1, w2) and not subset(w2, w1)),
        ('not-a-function', not is_function(R, session.function_cap)),
        ('clash-found', clash is not None),
    )
    return Witness('intersection-clash', (('z1', z1), ('z2', z2), ('w1', w1), ('w2', w2)), facts)


def overlapping_function(session):
    """Incomparable overlapping inputs whose images are nested still give a function."""
    a0, a1 = session.seeds
    z1 = atom_ideal([a0, _below(a1, 5)])
    z2 = atom_ideal([_below(a0, 5), a1])
    w1, w2 = atom_ideal([_below(a0, 1)]), atom_ideal([a0])
    R = session.relation([(z1, w1), (z2, w2)])
    overlap = intersect(z1, z2)
    facts = (
        ('inputs-incomparable', not subset(z1, z2) and not subset(z2, z1)),
        ('overlap-nonempty', overlap is not EMPTY),
        ('images-nested', subset(w1, w2) and not equal(w1, w2)),
        ('is-function', is_function(R, session.function_cap)),
        ('overlap-maps-to-w2', overlap is not EMPTY and apply(R, overlap) == w2),
    )
    return Witness('overlapping-function', (('z1', z1), ('z2', z2), ('w1', w1), ('w2', w2)), facts)


DEMOS = {
    'replacement-pr': replacement_pr,
    'completion-not-functional': completion_not_functional,
    'constant-image': constant_image,
    'antisymmetry-loss': antisymmetry_loss,
    'intersection-clash': intersection_clash,
    'overlapping-function': overlapping_function,
}


def run_demo(session, name, args=()):
    try:
        demo = DEMOS[name]
    except KeyError:
        raise UnknownSuite('unknown demo %r (known: %s)' % (name, ', '.join(sorted(DEMOS))))
    witness = demo(session, *args)
    log.debug(f'demo {name}: verified={witness.verified}')
    return witness
