import unittest

from magmatic import evaluate, format as mformat
from magmatic.errors import (ParseError, EvalError, KindMismatch, DomainMismatch, NotAPair, ArityTooSmall, DepthCap,
                             VariantMismatch, NotRepresentable, NotInDomain, UnboundName, BadForm, UnknownSuite,
                             EmptyGenerators, SeedsUnavailable, NoGreatestImage)
from magmatic.evaluator import format_value
from magmatic.session import Session

A = '(at tag 0 0)'
B = '(at tag 1 0)'
R1 = '(rel (((pr %s) (pr %s))))' % (A, B)
CLASH = '(rel (((pr (at tag 0 0)) (pr (at tag 0 5))) ((pr (at tag 0 0)) (pr (at tag 1 5)))))'

# Expressions consist of the form to evaluate, the expected printed value, and optionally the domain (default = tag)
expressions = [
        # atoms and canonical forms
        ('(at tag 0 3)', '(at tag 0 3)'),
        ('(pr (at tag 0 3))', '(ai (at tag 0 3))'),
        ('(ai (at tag 0 3) (at tag 0 1) (at tag 1 0))', '(ai (at tag 0 3) (at tag 1 0))'),
        ('(ai (at tag 1 0) (at tag 0 3))', '(ai (at tag 0 3) (at tag 1 0))'),
        ('(pr^ 2 (at tag 0 0))', '(mi (ai (at tag 0 0)))'),
        ('(pr^ 0 (pr (at tag 0 0)))', '(ai (at tag 0 0))'),
        ('(mi (pr (at tag 0 0)) (pr (at tag 0 -4)))', '(mi (ai (at tag 0 0)))'),
        ('(generators (ai (at tag 0 3) (at tag 1 0)))', '(values (at tag 0 3) (at tag 1 0))'),
        ('(pr (at plane 2 -1))', '(ai (at plane 2 -1))'),
        ('(pr (at qdup 1/2 1))', '(ai (at qdup 1/2 0))', 'qdup'),
        ('(pr (at qdup 3 0))', '(ai (at qdup 3/1 0))', 'qdup'),

        # inclusion, equality, membership
        ('(subset? (pr (at tag 0 3)) (pr (at tag 0 5)))', 'true'),
        ('(subset? (pr (at tag 0 5)) (pr (at tag 0 3)))', 'false'),
        ('(subset? (pr (at tag 0 0)) (pr (at tag 1 0)))', 'false'),
        ('(subset? (pr (at tag 0 0)) (pr^ 2 (at tag 0 0)))', 'false'),
        ('(eq? (pr (at plane 0 0)) (ai (at plane 0 0) (at plane -1 0)))', 'true'),
        ('(eq? (pr (at qdup 1/2 0)) (pr (at qdup 1/2 1)))', 'true', 'qdup'),
        ('(in? (at tag 0 -1) (pr (at tag 0 0)))', 'true'),
        ('(in? (at tag 1 -1) (pr (at tag 0 0)))', 'false'),
        ('(in? (pr (at tag 0 0)) (pr^ 2 (at tag 0 0)))', 'true'),
        ('(in? (pr (at tag 0 0)) (pr (at tag 0 0)))', 'false'),

        # union, intersection
        ('(union (pr (at tag 0 0)) (pr (at tag 1 2)))', '(ai (at tag 0 0) (at tag 1 2))'),
        ('(union (pr (at tag 0 0)) (pr (at tag 0 -2)))', '(ai (at tag 0 0))'),
        ('(inter (ai (at tag 0 3) (at tag 1 2)) (ai (at tag 0 1)))', '(ai (at tag 0 1))'),
        ('(inter (pr (at tag 0 0)) (pr (at tag 1 0)))', 'empty'),
        ('(inter (pr (at tag 0 0)) (pr^ 2 (at tag 0 0)))', 'empty'),
        ('(inter (pr (at plane 0 3)) (pr (at plane 2 1)))', '(ai (at plane 0 1))'),
        ('(inter (pr^ 2 (at tag 0 4)) (pr^ 2 (at tag 0 2)))', '(mi (ai (at tag 0 2)))'),

        # levels
        ('(level (pr (at tag 0 0)))', '(ord 0 1)'),
        ('(level (pr^ 3 (at tag 0 0)))', '(ord 0 3)'),
        ('(level (mi (pr (at tag 0 0)) (pr^ 2 (at tag 0 0))))', '(ord 1 1)'),

        # pairs
        ('(pair? (pair (pr (at tag 0 -3)) (pr (at tag 1 -3))))', 'true'),
        ('(fst (pair (pr (at tag 0 -3)) (pr (at tag 1 -3))))', '(ai (at tag 0 -3))'),
        ('(snd (pair (pr (at tag 0 -3)) (pr (at tag 1 -3))))', '(ai (at tag 1 -3))'),
        ('(pair? (pr (at tag 0 0)))', 'false'),
        ('(eq? (pair (pr (at tag 0 1)) (pr (at tag 1 1))) (pair (pr (at tag 1 1)) (pr (at tag 0 1))))', 'false'),
        ('(subset? (pair (pr (at tag 0 -1)) (pr (at tag 1 -1))) (pair (pr (at tag 0 1)) (pr (at tag 1 1))))', 'true'),
        ('(pair? (pair (pr (at plane 0 0)) (pr (at plane 3 3))))', 'true', 'plane'),
        ('(untuple (tuple (pr (at tag 0 1)) (pr (at tag 0 2)) (pr (at tag 0 3))) 3)',
         '(values (ai (at tag 0 1)) (ai (at tag 0 2)) (ai (at tag 0 3)))'),
        ('(case= (pr (at tag 0 0)) (pr (at tag 1 0)) (pr (at tag 0 0)) (pr (at tag 1 0)))', '(case I)'),
        ('(case= (pr (at tag 0 0)) (pr (at tag 1 0)) (pr (at tag 1 0)) (pr (at tag 0 0)))', '(case II)'),
        ('(case= (pr (at tag 0 0)) (pr (at tag 0 -1)) (pr (at tag 0 0)) (pr (at tag 0 -2)))',
         "(case III (equal x x') (subset y x) (subset y' x))"),
        ('(case= (pr (at tag 0 0)) (pr (at tag 1 0)) (pr (at tag 0 0)) (pr (at tag 0 0)))', '(case Unequal)'),

        # relations and functions
        (R1, '(rel (((ai (at tag 0 0)) (ai (at tag 1 0)))))'),
        ('(dom %s)' % R1, '(mi (ai (at tag 0 0)))'),
        ('(ran %s)' % R1, '(mi (ai (at tag 1 0)))'),
        ('(classify %s (pair (pr %s) (pr %s)))' % (R1, A, B), 'intended'),
        ('(classify %s (pair (pr (at tag 0 -1)) (pr %s)))' % (R1, B), 'collateral-pair'),
        ('(classify %s (pr^ 2 (at tag 2 0)))' % R1, 'not-element'),
        ('(fun? %s)' % R1, 'true'),
        ('(semifun? %s)' % R1, 'true'),
        ('(apply %s (pr (at tag 0 -1)))' % R1, '(ai (at tag 1 0))'),
        ('(slice %s (pr (at tag 2 0)))' % R1, 'empty'),
        ('(fun? %s)' % CLASH, 'false'),
        ('(clash %s)' % CLASH, '(values (ai (at tag 0 0)) (values (ai (at tag 0 5)) (ai (at tag 1 5))))'),
        ('(clash %s)' % R1, 'false'),
        ('(weak-in? (pair (pr (at tag 0 -1)) (pr (at tag 1 -1))) (wprod (pr^ 2 %s) (pr^ 2 %s)))' % (A, B), 'true'),
        ('(weak-in? (pr^ 2 %s) (wprod (pr^ 2 %s) (pr^ 2 %s)))' % (A, A, B), 'false'),

        # naturals and ordinals
        ('(nat 3)', '(nat 3)'),
        ('(nat* 0)', '(nat* 0)'),
        ('(ord< (nat 1) (nat 3))', 'true'),
        ('(ord< (nat 3) (nat 1))', 'false'),
        ('(alt-disjoint? 2 3)', 'true'),
        ('(alt-disjoint? 3 3)', 'false'),
        ('(ord+ (ord 0 2) (ord 1 0))', '(ord 1 0)'),
        ('(ord+ (ord 1 0) (ord 0 2))', '(ord 1 2)'),
        ('(ord+ 2 3)', '(ord 0 5)'),
        ('(ord-value 0)', '(mi (ai (at tag 0 0)))'),
        ('(eq? (ord-value 2) (nat 2))', 'true'),
        ('(level (nat* 2))', '(ord 0 4)'),
        ('(cg-apply (cg (prefix (pr (at tag 1 0))) (tail const (pr (at tag 1 1)))) (nat* 1))', '(ai (at tag 1 0))'),
        ('(cg-apply (cg (prefix (pr (at tag 1 0))) (tail const (pr (at tag 1 1)))) (nat* 4))', '(ai (at tag 1 1))'),
        ('(cg-apply (cg (prefix) (tail shift 1)) (nat* 1))', '(mi (mi (mi (ai (at tag 0 0)))))'),

        # separation
        ('(in-class? (class (roots (pr (at tag 0 2)))) (pr (at tag 0 1)))', 'true'),
        ('(in-class? (class (roots (pr (at tag 0 2)))) (pr (at tag 5 1)))', 'false'),
        ('(separate (class (roots (pr (at tag 0 2)))) (mi (pr (at tag 0 5)) (pr (at tag 1 0))))', '(mi (ai (at tag 0 2)))'),
        ('(separate (class (roots (pr (at tag 0 2)))) (mi (pr (at tag 1 0))))', 'empty'),
        ('(separate (class (roots (pr (at tag 0 2)))) (pr (at tag 0 5)))', 'empty'),
        ('(magmatic? (in-class (class (roots (pr (at tag 0 2))))) --budget 20)', '(unrefuted 20)'),

        # bindings and values
        ('(let x (pr (at tag 0 0)))', '(ai (at tag 0 0))'),
        ('(values (pr (at tag 0 0)) true empty)', '(values (ai (at tag 0 0)) true empty)'),
]

# Forms that must fail, and the engine error they carry
failures = [
        ('(union (pr (at tag 0 0)) (pr (pr (at tag 0 0))))', KindMismatch),
        ('(ai (at tag 0 0) (at plane 0 0))', DomainMismatch),
        ('(fst (pr (at tag 0 0)))', NotAPair),
        ('(tuple (pr (at tag 0 0)))', ArityTooSmall),
        ('(nat 9)', DepthCap),
        ('(ord< (nat 1) (nat* 2))', VariantMismatch),
        ('(ord-value (ord 1 0))', NotRepresentable),
        ('(apply %s (pr (at tag 2 0)))' % R1, NotInDomain),
        ('(apply %s (pr (at tag 0 0)))' % CLASH, NoGreatestImage),
        ('undefined-name', UnboundName),
        ('(frobnicate 1)', BadForm),
        ('(demo no-such-demo)', UnknownSuite),
        ('(class (roots))', EmptyGenerators),
        ('(nat -1)', BadForm),
        ('(random 0 1 1)', BadForm),
        ('(pr^ -1 (at tag 0 0))', BadForm),
        ('(ord -3 0)', BadForm),
        ('(at qdup 0 2)', BadForm),
        ('(subset? (pr (at tag 0 0)) 3)', Exception),
]


class EvalTest(unittest.TestCase):

    def test_high_level(self):
        self.assertEqual(mformat(evaluate('(pr (at tag 0 0))')[0]), '(ai (at tag 0 0))')

    def test_let_binds_for_later_forms(self):
        values = evaluate('(let x (pr (at tag 0 -3))) (let y (pr (at tag 1 -3))) (eq? (pair x y) (pair x y))')
        self.assertIs(values[-1], True)

    def test_parse_error_has_position(self):
        with self.assertRaises(ParseError) as cm:
            evaluate('(pr (at tag 0 0)')
        self.assertEqual(cm.exception.line, 1)
        with self.assertRaises(ParseError) as cm:
            evaluate('\n  (pr (at tag 0 0)))')
        self.assertEqual((cm.exception.line, cm.exception.column), (2, 20))
        with self.assertRaises(ParseError) as cm:
            evaluate('(pr (at qdup 1/0 0))', 'qdup')
        self.assertEqual((cm.exception.line, cm.exception.column), (1, 14))

    def test_eval_error_names_subexpression(self):
        with self.assertRaises(EvalError) as cm:
            evaluate('(pair? (union (pr (at tag 0 0)) (pr^ 2 (at tag 0 0))))')
        self.assertIsInstance(cm.exception.cause, KindMismatch)
        self.assertTrue(cm.exception.expr.startswith('(union'))

    def test_pairs_need_seeds(self):
        with self.assertRaises(EvalError) as cm:
            evaluate('(pair (pr (at qdup 0 0)) (pr (at qdup 1 0)))', 'qdup')
        self.assertIsInstance(cm.exception.cause, SeedsUnavailable)

    def test_demo_round_trip(self):
        session = Session()
        ev = session.evaluator()
        w = ev.run('(demo replacement-pr)')[0]
        self.assertTrue(w.verified)
        self.assertEqual(ev.run(format_value(w))[0], w)

    def test_comment_lines(self):
        self.assertEqual(evaluate('; a comment\n(pr (at tag 0 0)) ; trailing\n'), evaluate('(pr (at tag 0 0))'))


def tst_expression(form, expected, domain):
    def test_(self):
        ev = Session(domain).evaluator()
        value = ev.run(form)[-1]
        printed = format_value(value)
        self.assertEqual(printed, expected)
        back_again = ev.run(printed)[-1]
        if value is not True and value is not False:
            self.assertEqual(back_again, value)
        self.assertEqual(format_value(back_again), printed)
    return test_


def tst_failure(form, error):
    def test_(self):
        with self.assertRaises(EvalError) as cm:
            evaluate(form)
        self.assertIsInstance(cm.exception.cause, error)
    return test_


for i, expr in enumerate(expressions):
    if len(expr) == 3:
        form, expected, domain = expr
    else:
        form, expected = expr
        domain = 'tag'
    setattr(EvalTest, 'test_%03d_%s' % (i, form.split(' ')[0].strip('(')), tst_expression(form, expected, domain))

for i, (form, error) in enumerate(failures):
    setattr(EvalTest, 'test_fail_%03d_%s' % (i, error.__name__), tst_failure(form, error))


if __name__ == '__main__':  # pragma nocover
    unittest.main(verbosity=2)
