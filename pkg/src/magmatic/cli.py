"""Command-line surface: ``magma repl|eval|check|demo|oracle``.

Exit codes are 0 when everything passed, 1 for a failed check, an evaluation
error or an unverified demo, and 2 for usage and parse errors.
"""
import argparse
import logging
import sys

from magmatic.constants import EXIT_PASS, EXIT_FAIL, EXIT_USAGE, DOMAIN_NAMES, ORACLE_SUITES
from magmatic.demos import DEMOS, run_demo
from magmatic.errors import MagmaError, ParseError, EvalError, UnknownSuite, ConfigError, DomainMismatch
from magmatic.evaluator import atom_from_form, format_value
from magmatic.oracle import FiniteUniverse
from magmatic.session import Session, verbose
from magmatic.sexpr import parse
from magmatic.suites import SUITES, run_suites, oracle_lines

log = logging.getLogger('magmatic')

PROMPT = 'magma> '
MORE = '...    '


def report_error(e, out=None):
    if isinstance(e, EvalError):
        print('error %s: %s in %s' % (type(e.cause).__name__, e.cause, e.expr), file=out)
    else:
        print('error %s: %s' % (type(e).__name__, e), file=out)


def _session(args):
    if args.config:
        return Session.from_config(args.config)
    return Session(args.domain)


def cmd_eval(args):
    session = _session(args)
    if args.file:
        with open(args.file) as f:
            text = f.read()
    else:
        text = sys.stdin.read()
    ev = session.evaluator()
    for form in parse(text):
        try:
            value = ev.eval(form)
        except EvalError as e:
            report_error(e)
            return EXIT_FAIL
        print(format_value(value))
    return EXIT_PASS


def cmd_repl(args):
    session = _session(args)
    ev = session.evaluator()
    buffer = ''
    while True:
        try:
            line = input(MORE if buffer else PROMPT)
        except EOFError:
            print()
            return EXIT_PASS
        except KeyboardInterrupt:
            print()
            buffer = ''
            continue
        buffer += line + '\n'
        if buffer.count('(') > buffer.count(')'):
            continue
        text, buffer = buffer, ''
        try:
            for form in parse(text):
                print(format_value(ev.eval(form)))
        except MagmaError as e:
            report_error(e)


def cmd_check(args):
    session = _session(args)
    failed = False
    for report in run_suites(args.suites, session, args.seed, args.cases, args.depth):
        for line in report.lines():
            print(line)
        failed = failed or not report.passed
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_demo(args):
    session = _session(args)
    ev = session.evaluator()
    extra = [ev.eval(form) for form in parse(' '.join(args.args))]
    witness = run_demo(session, args.name, extra)
    print(format_value(witness))
    return EXIT_PASS if witness.verified else EXIT_FAIL


def cmd_oracle(args):
    session = _session(args)
    atoms = [atom_from_form(form) for form in parse(args.atoms)]
    domains = {a.domain for a in atoms}
    if len(domains) > 1:
        raise DomainMismatch('oracle atoms mix domains %s' % ', '.join(sorted(domains)))
    domain = domains.pop() if domains else session.domain.name
    U = FiniteUniverse(domain, atoms, args.depth)
    print('universe %s atoms %d depth %d sizes %s' % (domain, len(atoms), args.depth, ' '.join(map(str, U.sizes()))))
    ok = True
    for line in oracle_lines(U, args.suite, session, args.seed, args.cases):
        print(line)
        ok = ok and line.endswith(' OK')
    return EXIT_PASS if ok else EXIT_FAIL


def _common(defaults=True):
    """Session flags, accepted before and after the subcommand.

    After the subcommand they carry no defaults, so a flag given before it survives.
    """
    def default(value):
        return value if defaults else argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument('-d', '--domain', choices=DOMAIN_NAMES, default=default('tag'), help='atom domain (default: tag)')
    p.add_argument('-c', '--config', default=default(None), help='key = value file with domain, a0, a1 and engine caps')
    p.add_argument('-v', '--verbose', action='store_true', default=default(False), help='debug log on stderr')
    return p


def get_parser():
    parser = argparse.ArgumentParser(prog='magma', description='Symbolic calculus for finitely generated magmas',
                                     parents=[_common()])
    common = _common(defaults=False)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('repl', parents=[common], help='read-eval-print loop')
    p.set_defaults(func=cmd_repl)

    p = commands.add_parser('eval', parents=[common], help='evaluate every form of a file or stdin')
    p.add_argument('-f', '--file', help='read forms from this file instead of stdin')
    p.set_defaults(func=cmd_eval)

    p = commands.add_parser('check', parents=[common], help='run property suites')
    p.add_argument('suites', nargs='+', metavar='suite', help="'all' or any of: %s" % ', '.join(sorted(SUITES)))
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--cases', type=int, default=200)
    p.add_argument('--depth', type=int, default=3)
    p.set_defaults(func=cmd_check)

    p = commands.add_parser('demo', parents=[common], help='build and verify a named witness')
    p.add_argument('name', help=', '.join(sorted(DEMOS)))
    p.add_argument('args', nargs='*', help='optional argument forms, e.g. "(pr (at tag 0 0))"')
    p.set_defaults(func=cmd_demo)

    p = commands.add_parser('oracle', parents=[common], help='compare the engine with a finite extensional universe')
    p.add_argument('--atoms', required=True, help='atom forms, e.g. "(at tag 0 0) (at tag 1 0)"')
    p.add_argument('--depth', type=int, default=2)
    p.add_argument('--suite', choices=ORACLE_SUITES, default='gate')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--cases', type=int, default=30)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE
    if args.verbose:
        verbose()
    log.debug(f'magma {args.command}')
    try:
        return args.func(args)
    except (ParseError, UnknownSuite, ConfigError) as e:
        report_error(e)
        return EXIT_USAGE
    except EvalError as e:
        report_error(e)
        return EXIT_FAIL
    except MagmaError as e:
        report_error(e)
        return EXIT_USAGE if isinstance(e, DomainMismatch) else EXIT_FAIL
    except OSError as e:
        print('error %s: %s' % (type(e).__name__, e))
        return EXIT_USAGE


if __name__ == '__main__':  # pragma nocover
    sys.exit(main())
