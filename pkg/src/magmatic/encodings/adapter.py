from abc import ABC, abstractmethod

from magmatic.errors import NotAPair
from magmatic.pairs import check_seeds, mk_pair, extract_pair


class PairEncoding(ABC):
    """A way of coding (x, y) as one magma, decodable from the code alone."""
    name = None

    @abstractmethod
    def encode(self, x, y):
        """The magma coding (x, y)."""

    @abstractmethod
    def decode(self, m):
        """(x, y) for a code m; raises NotAPair for anything else."""

    def is_code(self, m):
        try:
            self.decode(m)
        except NotAPair:
            return False
        return True


class StandardEncoding(PairEncoding):
    name = 'standard'

    def __init__(self, seeds):
        self.seeds = check_seeds(seeds)

    def encode(self, x, y):
        return mk_pair(x, y, self.seeds).whole

    def decode(self, m):
        return extract_pair(m, self.seeds)
