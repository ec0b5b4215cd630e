from magmatic.encodings.adapter import PairEncoding, StandardEncoding
from magmatic.encodings.fuzz import SubPair, fuzz_subpair_freeness
