"""Search for sub-pairs: codes of (x', y') sitting strictly inside the code of (x, y).

A pair encoding free of sub-pairs would keep relations from picking up
collateral pairs. The standard encoding has them whenever x or y has a strict
submagma, so the fuzzer always reports some for it.
"""
import logging
import random
from collections import namedtuple

from magmatic.kernel import equal, subset, random_magma, random_submagma

log = logging.getLogger('magmatic')

SubPair = namedtuple('SubPair', 'x y sub_x sub_y')


def _differs(x, y, x2, y2):
    return not (equal(x, x2) and equal(y, y2))


def fuzz_subpair_freeness(encoding, domain='tag', cases=200, seed=0, depth=3):
    """Sub-pair counterexamples found in ``cases`` random trials, in trial order."""
    rng = random.Random(seed)
    found = []
    for _ in range(cases):
        x, y = random_magma(depth, 2, rng, domain), random_magma(depth, 2, rng, domain)
        whole = encoding.encode(x, y)
        # shrink the components, then shrink the code itself and try to read a pair back
        candidates = [(random_submagma(x, rng), y), (x, random_submagma(y, rng))]
        sub = random_submagma(whole, rng)
        if encoding.is_code(sub):
            candidates.append(encoding.decode(sub))
        for x2, y2 in candidates:
            if _differs(x, y, x2, y2) and subset(encoding.encode(x2, y2), whole):
                found.append(SubPair(x, y, x2, y2))
                break
    log.debug(f'fuzz_subpair_freeness({encoding.name}, {domain}): {len(found)} of {cases} trials')
    return found
