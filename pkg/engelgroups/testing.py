from pathlib import Path

import numpy as np

from .alphabet import TreeSignature
from .engel.free_word import FreeWord
from .finitewreath import WreathElem, WreathSpec, random_elem
from .metrics import GenSetTag, random_word
from .treeauto import Vertex, Word, random_vertex

HERE = Path(__file__).parent.absolute()


def _gen_random_word(
    sig: TreeSignature, length: int, seed: int = 0, level: int = 0, tag: str = "E"
) -> Word:
    """A normalized word of at most ``length`` letters drawn from E(level) or S(level)."""
    rng = np.random.default_rng(seed)
    gen_set = GenSetTag.E(level) if tag == "E" else GenSetTag.S(level)
    return random_word(sig, gen_set, length, rng)


def _gen_random_vertex(sig: TreeSignature, length: int, seed: int = 0) -> Vertex:
    return random_vertex(sig, length, np.random.default_rng(seed))


def _gen_random_free_word(arity: int, length: int, seed: int = 0) -> FreeWord:
    """
    A random word in ``x, y1, ..., y<arity>`` with ``length`` letters before
    free reduction.
    """
    rng = np.random.default_rng(seed)
    letters = [
        (int(rng.integers(arity + 1)), 1 if rng.integers(2) else -1) for _ in range(length)
    ]
    return FreeWord(tuple(letters), arity)


def _gen_random_wreath_elem(spec: WreathSpec, seed: int = 0) -> WreathElem:
    return random_elem(spec, np.random.default_rng(seed))
