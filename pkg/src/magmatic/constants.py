import re
from fractions import Fraction

# S-expression tokens, tried in order
RE_WHITESPACE = re.compile(r'[ \t\r\n]+')
RE_COMMENT = re.compile(r';[^\n]*')
RE_OPEN = re.compile(r'\(')
RE_CLOSE = re.compile(r'\)')
RE_RATIONAL = re.compile(r'-?\d+/\d+(?=[\s();]|$)')
RE_INTEGER = re.compile(r'-?\d+(?=[\s();]|$)')
RE_SYMBOL = re.compile(r'[^\s();]+')

TOKEN_TYPES = (
    ('open', RE_OPEN),
    ('close', RE_CLOSE),
    ('rational', RE_RATIONAL),
    ('integer', RE_INTEGER),
    ('symbol', RE_SYMBOL),
)

# plain key-value configuration lines
RE_CONFIG_LINE = re.compile(r'^\s*(?P<key>[a-z_0-9]+)\s*=\s*(?P<value>.*?)\s*$')
RE_CONFIG_SKIP = re.compile(r'^\s*(#.*)?$')

DOMAIN_NAMES = ('tag', 'plane', 'qdup')

# canonical serialization heads
ATOM_HEAD = 'at'
ATOM_IDEAL_HEAD = 'ai'
MAGMA_IDEAL_HEAD = 'mi'

DEFAULT_FUNCTION_CAP = 12
DEFAULT_DEPTH_CAP = 8
DEFAULT_LEVEL_CAP = 2 ** 31

# random generation bounds; kept small so that oracles stay exhaustive
PAYLOAD_BOUND = 4
RANDOM_TAGS = (0, 1, 2)
FRESH_TAG_BASE = 100
# domain elements sampled per relation when checking a true is_function verdict
FUNCTION_SAMPLES = 200

# oracle bounds
ORACLE_MAX_ATOMS = 8
ORACLE_MAX_DEPTH = 3
ORACLE_MAX_FAMILY = 200000

TAIL_RULES = ('const', 'pr-tower', 'shift')

CLASSIFICATIONS = ('intended', 'collateral-pair', 'collateral-non-pair', 'not-element')

ORACLE_SUITES = ('gate', 'pairs', 'levels', 'functions')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


# getters
def get_number(s):
    return int(s)

def get_rational(s):
    p, q = s.split('/')
    return Fraction(int(p), int(q))

def format_rational(q):
    return '%d/%d' % (q.numerator, q.denominator)
