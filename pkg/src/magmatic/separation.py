"""Magmatic classes, the separation scheme and the Replacement counterexamples."""
import logging
import random
from dataclasses import dataclass, field

from magmatic.domains import Atom, get_domain, strictly_below
from magmatic.errors import EmptyGenerators, NoIncomparableSubmagmas, KindError
from magmatic.kernel import EMPTY, Magma, atom_ideal, magma_ideal, pr, union, subset, equal, intersect, random_magma, random_submagma
from magmatic.pairs import mk_pair, is_pair, check_seeds

log = logging.getLogger('magmatic')


@dataclass(frozen=True)
class ClassDescriptor:
    """The downward closure of finitely many root magmas."""
    roots: tuple

    def __post_init__(self):
        if not self.roots:
            raise EmptyGenerators('a class descriptor needs at least one root')
        for r in self.roots:
            if not isinstance(r, Magma):
                raise KindError('class roots must be magmas, got %r' % (r,))


def class_descriptor(roots):
    return ClassDescriptor(tuple(roots))


def class_contains(C, x):
    return isinstance(x, Magma) and any(subset(x, r) for r in C.roots)


def separate(C, u):
    """X n u for the class X of C, or EMPTY.

    Members of an atom-ideal are atoms and never belong to a class of magmas.
    """
    if not isinstance(u, Magma):
        raise KindError('separate expects a magma, got %r' % (u,))
    if u.is_atom_ideal:
        return EMPTY
    parts = []
    for r in C.roots:
        for g in u.generators:
            m = intersect(r, g)
            if m is not EMPTY:
                parts.append(m)
    return magma_ideal(parts) if parts else EMPTY


@dataclass(frozen=True)
class Predicate:
    """A total test on magmas plus a few known members to start sampling from."""
    name: str
    test: object = field(compare=False)
    hints: tuple = ()

    def __call__(self, x):
        return self.test(x)


def equal_to(y0):
    return Predicate('eq-to %s' % (y0,), lambda x: equal(x, y0), (y0,))

def in_class(C):
    return Predicate('in-class', lambda x: class_contains(C, x), C.roots)

def pair_predicate(seeds):
    seeds = check_seeds(seeds)
    hint = mk_pair(pr(seeds[0]), pr(seeds[1]), seeds).whole
    return Predicate('pair?', lambda x: is_pair(x, seeds), (hint,))

def one_of(roots):
    roots = tuple(roots)
    return Predicate('one-of', lambda x: any(equal(x, r) for r in roots), roots)


def completion(P, candidates):
    """The completed predicate: x lies below some candidate satisfying P."""
    witnesses = tuple(y for y in candidates if P(y))
    return Predicate('completion of %s' % P.name, lambda x: any(subset(x, y) for y in witnesses), witnesses)


@dataclass(frozen=True)
class Refuted:
    x: Magma
    y: Magma

@dataclass(frozen=True)
class Unrefuted:
    budget: int


def magmatic_condition_sampler(P, budget, seed, domain='tag', depth=3, width=2):
    """Look for x with P(x) and a submagma y of x with not P(y).

    Never reports a predicate as magmatic; the best it can say is Unrefuted.
    """
    rng = random.Random(seed)
    for i in range(budget):
        if P.hints and i % 2 == 0:
            x = P.hints[(i // 2) % len(P.hints)]
        else:
            x = random_magma(depth, width, rng, domain)
        if not P(x):
            continue
        y = random_submagma(x, rng)
        if not P(y):
            log.debug(f'magmatic_condition_sampler({P.name}): refuted by {x} > {y}')
            return Refuted(x, y)
    return Unrefuted(budget)


@dataclass(frozen=True)
class Witness:
    name: str
    fields: tuple
    facts: tuple

    @property
    def verified(self):
        return all(ok for _, ok in self.facts)

    def __getitem__(self, key):
        return dict(self.fields)[key]


def _lift(v):
    return pr(v) if isinstance(v, Atom) else v

def _incomparable_below(x):
    """Two incomparable strict submagmas of the magma x, or None."""
    if x.is_atom_ideal:
        if len(x.generators) >= 2:
            return atom_ideal(x.generators[:1]), atom_ideal(x.generators[1:2])
        below = get_domain(x.generators[0].domain).incomparable_below(x.generators[0])
        if below is None:
            return None
        return atom_ideal(below[:1]), atom_ideal(below[1:])
    if len(x.generators) >= 2:
        return pr(x.generators[0]), pr(x.generators[1])
    inner = _incomparable_below(x.generators[0])
    if inner is None:
        return None
    return pr(inner[0]), pr(inner[1])


def _choose(u):
    for x in u.generators:
        if isinstance(x, Atom):
            below = get_domain(x.domain).incomparable_below(x)
        else:
            below = _incomparable_below(x)
        if below is not None:
            return x, below
    return None


def replacement_pr_witness(u):
    """An element of pr[u] = {pr(x) : x in u} whose submagma is not of the form pr(y)."""
    if not isinstance(u, Magma):
        raise KindError('replacement_pr_witness expects a magma, got %r' % (u,))
    found = _choose(u)
    if found is None:
        raise NoIncomparableSubmagmas('no generator of %s has two incomparable strict submagmas' % (u,))
    x, (x1, x2) = found
    z = union(pr(x1), pr(x2))
    lx, l1, l2 = _lift(x), _lift(x1), _lift(x2)
    facts = (
        ('x1-below-x', subset(l1, lx) and not equal(l1, lx)),
        ('x2-below-x', subset(l2, lx) and not equal(l2, lx)),
        ('x1-x2-incomparable', not subset(l1, l2) and not subset(l2, l1)),
        ('z-in-pr-pr-x', subset(z, pr(x))),
        ('z-not-principal', not z.is_principal),
    )
    return Witness('replacement-pr', (('x', x), ('x1', x1), ('x2', x2), ('z', z)), facts)


def completion_not_functional_demo(seeds):
    """x = pr(a0) is related to y = pr(x) and, after completion, to the smaller y1 as well."""
    a0, _ = check_seeds(seeds)
    x = pr(a0)
    y = pr(x)
    y1 = pr(atom_ideal([strictly_below(a0)]))
    pair_y = mk_pair(x, y, seeds).whole
    pair_y1 = mk_pair(x, y1, seeds).whole
    facts = (
        ('phi-x-y', equal(y, pr(x))),
        ('y1-below-y', subset(y1, y)),
        ('pair-y1-below-pair-y', subset(pair_y1, pair_y)),
        ('y-y1-distinct', not equal(y, y1)),
    )
    return Witness('completion-not-functional', (('x', x), ('y', y), ('y1', y1)), facts)


def constant_image_demo(u, y0):
    """The constant function onto y0 sends u to {y0}, which misses the submagmas of y0."""
    if not isinstance(u, Magma) or not isinstance(y0, Magma):
        raise KindError('constant_image_demo expects magmas')
    y1 = random_submagma(y0, 0)
    facts = (
        ('y1-below-y0', subset(y1, y0)),
        ('y1-not-y0', not equal(y1, y0)),
    )
    return Witness('constant-image', (('u', u), ('y0', y0), ('y1', y1)), facts)
