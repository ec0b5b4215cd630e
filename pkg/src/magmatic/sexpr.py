"""S-expression tokenizer, reader and writer for the expression front end."""
import logging
from fractions import Fraction

from magmatic.constants import RE_WHITESPACE, RE_COMMENT, TOKEN_TYPES, get_number, get_rational, format_rational
from magmatic.errors import ParseError

log = logging.getLogger('magmatic')


class Symbol(str):
    def __repr__(self):
        return str(self)


class SList(list):
    """A parenthesised form that remembers where it started."""
    def __init__(self, items=(), line=0, column=0):
        super(SList, self).__init__(items)
        self.line = line
        self.column = column

    def __repr__(self):
        return write(self)


class Token(object):
    def __init__(self, text, type_, line, column):
        self.text = text
        self.type_ = type_
        self.line = line
        self.column = column

    def __repr__(self):
        return '<Token %s: %s @%d:%d>' % (self.text, self.type_, self.line, self.column)


class Tokenizer(list):
    TYPES = TOKEN_TYPES

    def __init__(self, text):
        super(Tokenizer, self).__init__()
        self.text = text
        pos, line, line_start = 0, 1, 0
        while pos < len(text):
            m = RE_WHITESPACE.match(text, pos) or RE_COMMENT.match(text, pos)
            if m:
                newlines = text.count('\n', pos, m.end())
                if newlines:
                    line += newlines
                    line_start = text.rindex('\n', pos, m.end()) + 1
                pos = m.end()
                continue
            for type_, regex in self.TYPES:
                m = regex.match(text, pos)
                if m:
                    self.append(Token(m.group(0), type_, line, pos - line_start + 1))
                    pos = m.end()
                    break
            else:       # pragma nocover
                raise ParseError('unexpected character %r' % text[pos], line, pos - line_start + 1)
        self.end = (line, pos - line_start + 1)
        log.debug("tokenized '%s'\n%s" % (self.text, self))


def _atom(tok):
    if tok.type_ == 'integer':
        return get_number(tok.text)
    if tok.type_ == 'rational':
        try:
            return get_rational(tok.text)
        except ZeroDivisionError:
            raise ParseError('zero denominator in %s' % tok.text, tok.line, tok.column)
    return Symbol(tok.text)


def parse(text):
    """Read every top-level form in ``text``."""
    tokens = Tokenizer(text)
    stack = [SList()]
    for tok in tokens:
        if tok.type_ == 'open':
            stack.append(SList(line=tok.line, column=tok.column))
        elif tok.type_ == 'close':
            if len(stack) == 1:
                raise ParseError('unbalanced )', tok.line, tok.column)
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(_atom(tok))
    if len(stack) > 1:
        raise ParseError('unclosed ( opened at %d:%d' % (stack[-1].line, stack[-1].column), *tokens.end)
    return list(stack[0])


def parse_one(text):
    forms = parse(text)
    if len(forms) != 1:
        raise ParseError('expected one form, got %d' % len(forms), 1, 1)
    return forms[0]


def write(expr):
    if isinstance(expr, list):
        return '(%s)' % ' '.join(write(e) for e in expr)
    if isinstance(expr, bool):
        return 'true' if expr else 'false'
    if isinstance(expr, Fraction):
        return format_rational(expr)
    return str(expr)
