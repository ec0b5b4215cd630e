"""Brute-force extensional semantics over a small finite preorder.

Level 1 holds the nonempty down-sets of the atoms; level k+1 holds the nonempty
down-sets of level k under inclusion. Atoms are represented by their index,
level-k elements by frozensets, and the pool is the union of the enumerated
levels.

A magma whose generators all lie in the pool is embedded as the flat frozenset
of its members. Above that (the pair blocks sit at limit levels, the pairs
themselves one higher) a magma is embedded as a :class:`Closure`: the set of
everything below one of its embedded generators.

Finite preorders have minimal elements, so only algebraic identities are
checked here, never the infinitude of magmas.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from magmatic.constants import ORACLE_MAX_ATOMS, ORACLE_MAX_DEPTH, ORACLE_MAX_FAMILY
from magmatic.domains import Atom, get_domain, canonical_rep
from magmatic.errors import BoundExceeded, OutOfRange, KindMismatch
from magmatic.kernel import EMPTY, atom_ideal, magma_ideal, subset, equal, member, union, intersect, level

log = logging.getLogger('magmatic')


def lower_open_sets(elements, below, cap=ORACLE_MAX_FAMILY):
    """All nonempty down-closed subsets of ``elements`` under ``below(a, b)`` (a <= b)."""
    elements = list(elements)
    downs = [frozenset(e for e in elements if below(e, top)) for top in elements]
    found = set()
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            for d in downs:
                t = s | d
                if t != s and t not in found:
                    found.add(t)
                    nxt.append(t)
                    if len(found) > cap:
                        raise BoundExceeded('more than %d lower-open sets' % cap)
        frontier = nxt
    rank = {e: i for i, e in enumerate(elements)}
    return sorted(found, key=lambda s: (len(s), sorted(rank[e] for e in s)))


@dataclass(frozen=True)
class Closure:
    tops: frozenset


def ext_le(a, b):
    if isinstance(a, frozenset) and isinstance(b, frozenset):
        return a <= b
    if not isinstance(a, Closure):
        return all(ext_in(e, b) for e in a)
    if not isinstance(b, Closure):
        return all(t in b for t in a.tops)
    return all(any(ext_le(t, u) for u in b.tops) for t in a.tops)

def ext_eq(a, b):
    return ext_le(a, b) and ext_le(b, a)

def ext_in(e, x):
    if isinstance(x, frozenset):
        return e in x
    return not isinstance(e, int) and any(ext_le(e, t) for t in x.tops)


class FiniteUniverse(object):
    def __init__(self, domain, atoms, depth):
        atoms = list(dict.fromkeys(canonical_rep(a) for a in atoms))
        if not atoms or len(atoms) > ORACLE_MAX_ATOMS:
            raise BoundExceeded('a finite universe takes 1..%d atoms, got %d' % (ORACLE_MAX_ATOMS, len(atoms)))
        if not 1 <= depth <= ORACLE_MAX_DEPTH:
            raise BoundExceeded('a finite universe takes depth 1..%d, got %d' % (ORACLE_MAX_DEPTH, depth))
        self.domain = get_domain(domain)
        self.atoms = atoms
        self.depth = depth
        self.index = {a: i for i, a in enumerate(atoms)}
        self.order = [[self.domain.leq(a, b) for b in atoms] for a in atoms]
        self.levels = [lower_open_sets(range(len(atoms)), lambda i, j: self.order[i][j])]
        for _ in range(depth - 1):
            self.levels.append(lower_open_sets(self.levels[-1], lambda s, t: s <= t))
        self.pool = [e for family in self.levels for e in family]
        self.level_of = {e: k + 1 for k, family in enumerate(self.levels) for e in family}
        self._cache = {}
        log.debug(f'FiniteUniverse({domain}, {len(atoms)} atoms, depth {depth}): sizes {self.sizes()}')

    def sizes(self):
        return [len(family) for family in self.levels]

    def embed(self, x):
        if isinstance(x, Atom):
            try:
                return self.index[canonical_rep(x)]
            except KeyError:
                raise OutOfRange('atom %r is not in the universe' % (x,))
        if x.key not in self._cache:
            tops = [self.embed(g) for g in x.generators]
            if x.is_atom_ideal:
                ext = frozenset(i for i in range(len(self.atoms)) if any(self.order[i][t] for t in tops))
            elif all(t in self.level_of for t in tops):
                ext = frozenset(e for e in self.pool if any(e <= t for t in tops))
            else:
                ext = Closure(frozenset(tops))
            self._cache[x.key] = ext
        return self._cache[x.key]

    def reify(self, e):
        """The canonical magma whose extension is the pool element e."""
        if self.level_of[e] == 1:
            return atom_ideal([self.atoms[i] for i in e])
        return magma_ideal([self.reify(f) for f in e])

    def family_magmas(self, k):
        return [self.reify(e) for e in self.levels[k - 1]]


def _flat(U, x, op):
    s = U.embed(x)
    if not isinstance(s, frozenset):
        raise OutOfRange('%s is compared on pool-level magmas only, got %s' % (op, x))
    return s


# extensional answers for the kernel operations

def ext_subset(U, x, y):
    return ext_le(U.embed(x), U.embed(y))

def ext_equal(U, x, y):
    return ext_eq(U.embed(x), U.embed(y))

def ext_member(U, z, x):
    return ext_in(U.embed(z), U.embed(x))

def ext_union(U, x, y):
    """The expected union, or KindMismatch when the set union mixes atoms with magmas."""
    s = _flat(U, x, 'union') | _flat(U, y, 'union')
    return KindMismatch if len(set(isinstance(e, int) for e in s)) > 1 else s

def ext_intersect(U, x, y):
    s = _flat(U, x, 'intersect') & _flat(U, y, 'intersect')
    return s if s else EMPTY


def _antichain(items, comparable):
    return all(not comparable(a, b) and not comparable(b, a) for a, b in combinations(items, 2))

def small_magmas(U, max_generators=2):
    """Atom-ideals over U's atoms and magma-ideals over its level-1 family, with few generators."""
    out = []
    for n in range(1, max_generators + 1):
        for gens in combinations(U.atoms, n):
            if _antichain(gens, U.domain.leq):
                out.append(atom_ideal(gens))
        for gens in combinations(U.family_magmas(1), n):
            if _antichain(gens, subset):
                out.append(magma_ideal(gens))
    return sorted(set(out))


def _line(op, case, ok):
    return '%s %s %s' % (op, case, 'OK' if ok else 'MISMATCH')


def gate(U, magmas=None):
    """Compare subset/equal/member/union/intersect on all pairs of small magmas."""
    magmas = small_magmas(U) if magmas is None else magmas
    for i, x in enumerate(magmas):
        for j, y in enumerate(magmas):
            case = '%d-%d' % (i, j)
            yield _line('subset', case, subset(x, y) == ext_subset(U, x, y))
            yield _line('equal', case, equal(x, y) == ext_equal(U, x, y))
            yield _line('member', case, member(x, y) == ext_member(U, x, y))
            try:
                got = U.embed(union(x, y))
            except KindMismatch:
                got = KindMismatch
            yield _line('union', case, got == ext_union(U, x, y))
            got = intersect(x, y)
            yield _line('intersect', case, (got if got is EMPTY else U.embed(got)) == ext_intersect(U, x, y))
        for n, a in enumerate(U.atoms):
            yield _line('member', 'a%d-%d' % (n, i), member(a, x) == ext_member(U, a, x))


def pair_theorem(U, seeds, components=None):
    """Extensional pair equality and inclusion against the componentwise answers."""
    from magmatic.pairs import mk_pair
    components = U.family_magmas(1) if components is None else components
    wholes = {(i, j): U.embed(mk_pair(x, y, seeds).whole) for i, x in enumerate(components) for j, y in enumerate(components)}
    for (i, j), p in wholes.items():
        for (k, l), q in wholes.items():
            case = '%d,%d-%d,%d' % (i, j, k, l)
            yield _line('pair-equal', case, ext_eq(p, q) == (i == k and j == l))
            expected = subset(components[i], components[k]) and subset(components[j], components[l])
            yield _line('pair-subset', case, ext_le(p, q) == expected)


def levels(U):
    """Level-family facts that are meaningful at finite scale."""
    for k, family in enumerate(U.levels, start=1):
        for other, later in enumerate(U.levels[k:], start=k + 1):
            yield _line('disjoint', '%d-%d' % (k, other), not set(family) & set(later))
        for n, e in enumerate(family):
            x = U.reify(e)
            case = '%d.%d' % (k, n)
            yield _line('level', case, level(x).is_finite and level(x).r == k)
            yield _line('embed', case, U.embed(x) == e)
            if k < U.depth:
                # P(x) cut down to the family is again a level element, and it is pr(x)
                below = frozenset(f for f in family if f <= e)
                yield _line('pr-powerset', case, U.level_of.get(below) == k + 1 and U.embed(magma_ideal([x])) == below)


def functions(U, relations):
    """is_function against the extensional definition on relations over level-1 components.

    <<z, w>> belongs to R when its extension sits inside the extension of an
    intended pair. R is a function when no two intended pairs share an input with
    different outputs, and every z with some w has a greatest one.
    """
    from magmatic.pairs import mk_pair
    from magmatic.relations import is_function
    candidates = U.family_magmas(1)
    for n, R in enumerate(relations):
        tops = [U.embed(p) for p in R.pairs]
        ok = not any(ext_eq(U.embed(z1), U.embed(z2)) and not ext_eq(U.embed(w1), U.embed(w2))
                     for (z1, w1), (z2, w2) in combinations(R.intended, 2))
        for z in (candidates if ok else ()):
            ws = [w for w in candidates if any(ext_le(U.embed(mk_pair(z, w, R.seeds).whole), t) for t in tops)]
            if ws and not any(all(ext_le(U.embed(v), U.embed(w)) for v in ws) for w in ws):
                ok = False
                break
        yield _line('function', str(n), is_function(R) == ok)
