"""Evaluation of S-expression forms against a session, and the value printer.

Every value the evaluator produces prints as a form that reads back to an
equal value.
"""
import logging
from functools import reduce

from magmatic.constants import ATOM_HEAD, ATOM_IDEAL_HEAD, MAGMA_IDEAL_HEAD, CLASSIFICATIONS
from magmatic.domains import Atom, get_domain, format_atom
from magmatic.errors import MagmaError, EvalError, UnboundName, BadForm, KindError
from magmatic.kernel import (EMPTY, Level, Magma, atom_ideal, magma_ideal, pr, pr_iter, union, intersect,
                             subset, equal, member, random_submagma)
from magmatic.pairs import UnionEqualityCase, union2_equality_case
from magmatic.relations import (Relation, WeakProduct, weak_member, dom, ran, classify, slice_at,
                                is_semifunction, apply)
from magmatic.ordinals import (MagNat, Variant, TailRule, CountGenFun, ord_less, cg_apply, cg_range_prefix,
                               truncate)
from magmatic.separation import (ClassDescriptor, Refuted, Unrefuted, Witness, class_descriptor, class_contains,
                                 separate, equal_to, in_class, one_of)
from magmatic.sexpr import Symbol, parse, parse_one, write

log = logging.getLogger('magmatic')

CONSTANTS = {'true': True, 'false': False, 'empty': EMPTY}
CONSTANTS.update((c, c) for c in CLASSIFICATIONS)


def atom_from_form(form):
    if not isinstance(form, list) or len(form) < 2 or form[0] != ATOM_HEAD:
        raise BadForm('expected (%s <domain> <payload>...), got %s' % (ATOM_HEAD, write(form)))
    domain = get_domain(str(form[1]))
    try:
        return Atom(domain.name, domain.parse_payload(list(form[2:])))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise BadForm('bad %s payload %s: %s' % (domain.name, write(form), e))

def read_atom(text):
    return atom_from_form(parse_one(text))


def format_value(v):
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if v is EMPTY:
        return 'empty'
    if isinstance(v, (Magma, Symbol, int)):
        return str(v)
    if isinstance(v, str):
        return v
    if isinstance(v, Atom):
        return format_atom(v)
    if isinstance(v, Level):
        return '(ord %d %d)' % (v.q, v.r)
    if isinstance(v, (list, tuple)):
        return '(values%s)' % ''.join(' ' + format_value(e) for e in v)
    if isinstance(v, Relation):
        return '(rel (%s))' % ' '.join('(%s %s)' % (z, w) for z, w in v.intended)
    if isinstance(v, WeakProduct):
        return '(wprod %s %s)' % (v.left, v.right)
    if isinstance(v, MagNat):
        return '(%s %d)' % (v.variant.value, v.n)
    if isinstance(v, ClassDescriptor):
        return '(class (roots %s))' % ' '.join(map(str, v.roots))
    if isinstance(v, UnionEqualityCase):
        return '(case %s%s)' % (v.tag, ''.join(' (%s)' % ' '.join(d) for d in v.detail))
    if isinstance(v, Refuted):
        return '(refuted %s %s)' % (v.x, v.y)
    if isinstance(v, Unrefuted):
        return '(unrefuted %d)' % v.budget
    if isinstance(v, Witness):
        fields = ''.join(' (%s %s)' % (k, format_value(x)) for k, x in v.fields)
        facts = ''.join(' (%s %s)' % (k, format_value(ok)) for k, ok in v.facts)
        return '(witness %s%s (facts%s))' % (v.name, fields, facts)
    if isinstance(v, CountGenFun):
        return '(cg (prefix%s) (tail %s %s))' % (''.join(' %s' % y for y in v.prefix), v.tail.rule, v.tail.arg)
    raise KindError('no printed form for %r' % (v,))


class Evaluator(object):
    """Evaluates forms one at a time; ``let`` binds names for later forms."""

    def __init__(self, session):
        self.session = session
        self.env = {}
        # head -> (handler, evaluate arguments first)
        self.forms = {
            ATOM_HEAD: (self._at, False),
            ATOM_IDEAL_HEAD: (lambda *xs: atom_ideal(xs), True),
            MAGMA_IDEAL_HEAD: (lambda *xs: magma_ideal([self._magma(x) for x in xs]), True),
            'let': (self._let, False),
            'values': (lambda *xs: list(xs), True),
            'pr': (lambda x: pr(x if isinstance(x, Atom) else self._magma(x)), True),
            'pr^': (lambda n, x: pr_iter(self._int(n), x if isinstance(x, Atom) else self._magma(x)), True),
            'union': (lambda *xs: reduce(union, map(self._magma, xs)), True),
            'inter': (self._inter, True),
            'subset?': (lambda x, y: subset(self._magma(x), self._magma(y)), True),
            'eq?': (lambda x, y: equal(self._magma(x), self._magma(y)), True),
            'in?': (lambda z, x: member(z if isinstance(z, Atom) else self._magma(z), self._magma(x)), True),
            'level': (lambda x: self.session.level(self._magma(x)), True),
            'generators': (lambda x: list(self._magma(x).generators), True),
            'random': (lambda d, w, s: self.session.random_magma(self._int(d), self._int(w), self._int(s)), True),
            'sub': (lambda x, s: random_submagma(self._magma(x), self._int(s)), True),
            # pairs
            'pair': (lambda x, y: self.session.pair(self._magma(x), self._magma(y)).whole, True),
            'tuple': (lambda *xs: self.session.tuple([self._magma(x) for x in xs]), True),
            'untuple': (lambda m, n: self.session.extract_tuple(self._magma(m), self._int(n)), True),
            'pair?': (lambda m: self.session.is_pair(self._magma(m)), True),
            'fst': (lambda m: self.session.extract_pair(self._magma(m))[0], True),
            'snd': (lambda m: self.session.extract_pair(self._magma(m))[1], True),
            'case=': (lambda *xs: union2_equality_case(*map(self._magma, xs)), True),
            'case': (self._case, False),
            # relations
            'rel': (self._rel, False),
            'prod': (lambda x, y: self.session.product(self._magma(x), self._magma(y)), True),
            'wprod': (lambda x, y: self.session.weak_product(self._magma(x), self._magma(y)), True),
            'weak-in?': (lambda p, wp: weak_member(self._magma(p), wp), True),
            'dom': (lambda r: dom(self._relation(r)), True),
            'ran': (lambda r: ran(self._relation(r)), True),
            'classify': (lambda r, e: classify(self._relation(r), self._magma(e)), True),
            'semifun?': (lambda r: is_semifunction(self._relation(r)), True),
            'fun?': (lambda r: self.session.is_function(self._relation(r)), True),
            'clash': (self._clash, True),
            'apply': (lambda r, z: apply(self._relation(r), self._magma(z)), True),
            'slice': (lambda r, z: slice_at(self._relation(r), self._magma(z)), True),
            # ordinals
            'nat': (lambda n: self.session.nat(self._int(n), Variant.PRIMARY), True),
            'nat*': (lambda n: self.session.nat(self._int(n), Variant.ALT), True),
            'ord': (lambda q, r: Level(self._int(q), self._int(r)), True),
            'ord+': (lambda a, b: self.session.ord_add(self._ordinal(a), self._ordinal(b)), True),
            'ord<': (self._ord_less, True),
            'ord-value': (lambda o: self.session.ord_value(self._ordinal(o)), True),
            'alt-disjoint?': (lambda m, n: self.session.alt_disjoint(self._int(m), self._int(n)), True),
            'cg': (self._cg, False),
            'cg-apply': (lambda f, z: cg_apply(self._countgen(f), self._magma(z)), True),
            'cg-range': (lambda f, k: cg_range_prefix(self._countgen(f), self._int(k)), True),
            'truncate': (lambda f, k: truncate(self._countgen(f), self._int(k)), True),
            # separation
            'class': (self._class, False),
            'in-class?': (lambda c, x: class_contains(self._descriptor(c), self._magma(x)), True),
            'separate': (lambda c, u: separate(self._descriptor(c), self._magma(u)), True),
            'magmatic?': (self._magmatic, False),
            'refuted': (lambda x, y: Refuted(self._magma(x), self._magma(y)), True),
            'unrefuted': (lambda n: Unrefuted(self._int(n)), True),
            'demo': (self._demo, False),
            'witness': (self._witness, False),
        }

    def run(self, text):
        """Evaluate every form in ``text`` and return the values in order."""
        return [self.eval(form) for form in parse(text)]

    def eval(self, expr):
        if isinstance(expr, Symbol):
            if expr in CONSTANTS:
                return CONSTANTS[expr]
            if expr in self.env:
                return self.env[expr]
            raise EvalError(write(expr), UnboundName('%s is not bound' % expr))
        if not isinstance(expr, list):
            return expr
        if not expr or not isinstance(expr[0], Symbol) or expr[0] not in self.forms:
            raise EvalError(write(expr), BadForm('unknown form'))
        handler, strict = self.forms[expr[0]]
        args = [self.eval(e) for e in expr[1:]] if strict else expr[1:]
        try:
            value = handler(*args)
        except EvalError:
            raise
        except MagmaError as e:
            log.debug(f'eval({write(expr)}): {type(e).__name__} {e}')
            raise EvalError(write(expr), e)
        except (TypeError, ValueError) as e:
            raise EvalError(write(expr), BadForm(str(e)))
        log.debug(f'eval({write(expr)}) = {format_value(value)}')
        return value

    # coercions
    def _magma(self, v):
        if isinstance(v, MagNat):
            return v.value
        if not isinstance(v, Magma):
            raise KindError('expected a magma, got %s' % format_value(v))
        return v

    def _int(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise BadForm('expected an integer, got %s' % format_value(v))
        return v

    def _ordinal(self, v):
        if isinstance(v, Level):
            return v
        if isinstance(v, MagNat):
            return Level(0, v.n)
        return Level(0, self._int(v))

    def _relation(self, v):
        if not isinstance(v, Relation):
            raise KindError('expected a relation, got %s' % format_value(v))
        return v

    def _countgen(self, v):
        if not isinstance(v, CountGenFun):
            raise KindError('expected a countably generated function, got %s' % format_value(v))
        return v

    def _descriptor(self, v):
        if not isinstance(v, ClassDescriptor):
            raise KindError('expected a class, got %s' % format_value(v))
        return v

    def _head(self, form, head):
        if not isinstance(form, list) or not form or form[0] != head:
            raise BadForm('expected (%s ...), got %s' % (head, write(form)))
        return form[1:]

    # special forms
    def _at(self, *args):
        return atom_from_form([Symbol(ATOM_HEAD)] + list(args))

    def _let(self, name, form):
        if not isinstance(name, Symbol) or name in CONSTANTS or name in self.forms:
            raise BadForm('cannot bind %s' % write(name))
        self.env[name] = self.eval(form)
        return self.env[name]

    def _inter(self, *xs):
        result = self._magma(xs[0])
        for x in xs[1:]:
            result = intersect(result, self._magma(x))
            if result is EMPTY:
                break
        return result

    def _rel(self, pairs):
        intended = []
        for p in pairs:
            if not isinstance(p, list) or len(p) != 2:
                raise BadForm('relation pairs are (z w), got %s' % write(p))
            intended.append((self._magma(self.eval(p[0])), self._magma(self.eval(p[1]))))
        return self.session.relation(intended)

    def _clash(self, r):
        found = self.session.find_clash(self._relation(r))
        if found is None:
            return False
        z, ws = found
        return [z, list(ws)]

    def _ord_less(self, a, b):
        if isinstance(a, MagNat) and isinstance(b, MagNat):
            return ord_less(a, b)
        return self._ordinal(a) < self._ordinal(b)

    def _cg(self, prefix, tail):
        prefix = [self._magma(self.eval(e)) for e in self._head(prefix, 'prefix')]
        rule = self._head(tail, 'tail')
        if len(rule) != 2:
            raise BadForm('expected (tail <rule> <arg>), got %s' % write(tail))
        arg = self.eval(rule[1])
        arg = arg if rule[0] == 'shift' else self._magma(arg)
        try:
            tail_rule = TailRule(str(rule[0]), arg)
        except ValueError as e:
            raise BadForm(str(e))
        return self.session.countgen(prefix, tail_rule)

    def _class(self, roots):
        return class_descriptor([self._magma(self.eval(e)) for e in self._head(roots, 'roots')])

    def _predicate(self, form):
        if form == 'pair?':
            return self.session.pair_predicate()
        head, args = form[0], [self.eval(e) for e in form[1:]]
        if head == 'eq-to':
            return equal_to(self._magma(args[0]))
        if head == 'in-class':
            return in_class(self._descriptor(args[0]))
        if head == 'one-of':
            return one_of([self._magma(a) for a in args])
        raise BadForm('unknown predicate %s' % write(form))

    def _magmatic(self, pred, *options):
        settings = {'--budget': 200, '--seed': 0}
        if len(options) % 2:
            raise BadForm('options come in --name value pairs')
        for key, value in zip(options[::2], options[1::2]):
            if key not in settings:
                raise BadForm('unknown option %s' % key)
            settings[key] = self._int(self.eval(value))
        return self.session.sampler(self._predicate(pred), settings['--budget'], settings['--seed'])

    def _demo(self, name, *args):
        from magmatic.demos import run_demo
        return run_demo(self.session, str(name), [self.eval(a) for a in args])

    def _case(self, tag, *detail):
        return UnionEqualityCase(str(tag), tuple(tuple(str(s) for s in d) for d in detail))

    def _witness(self, name, *parts):
        fields, facts = [], []
        for part in parts:
            if part and part[0] == 'facts':
                facts = [(str(k), self.eval(v)) for k, v in part[1:]]
            else:
                fields.append((str(part[0]), self.eval(part[1])))
        return Witness(str(name), tuple(fields), tuple(facts))
