"""
Word problem in Coxeter groups by Tits' braid-closure algorithm.

A word is reduced exactly when no word reachable from it by braid moves contains two equal
adjacent letters, so reduction saturates the braid class, deletes a square whenever one shows
up and starts over with the shorter word.
"""
import logging
from collections import deque
from functools import lru_cache
from typing import Iterator, Set, Tuple

from davis_lattice.config import Bounds
from davis_lattice.coxeter.system import INFINITY, CoxeterSystem
from davis_lattice.error import ConstructionError, WordTooLongError

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


def _alternating(s: str, t: str, length: int) -> Word:
    return tuple(s if i % 2 == 0 else t for i in range(length))


def braid_moves(sys: CoxeterSystem, w: Word) -> Iterator[Word]:
    """
    Yield every word obtained from w by one braid move
    :param sys: Coxeter system
    :param w: Word
    :return: Iterator over neighbouring words
    """
    for i in range(len(w) - 1):
        s, t = w[i], w[i + 1]
        if s == t:
            continue
        m = sys.m(s, t)
        if m == INFINITY or i + m > len(w):
            continue
        m = int(m)
        if w[i:i + m] == _alternating(s, t, m):
            yield w[:i] + _alternating(t, s, m) + w[i + m:]


def _square_position(w: Word) -> int:
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return i
    return -1


@lru_cache(maxsize=4096)
def _reduce(sys: CoxeterSystem, w: Word) -> Word:
    while True:
        seen: Set[Word] = {w}
        queue = deque([w])
        shorter = None
        while queue:
            current = queue.popleft()
            i = _square_position(current)
            if i >= 0:
                shorter = current[:i] + current[i + 2:]
                break
            for nxt in braid_moves(sys, current):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if shorter is None:
            return min(seen, key=lambda word: tuple(sys.index(x) for x in word))
        w = shorter


def word_reduce(sys: CoxeterSystem, w: Word, bounds: Bounds = Bounds()) -> Word:
    """
    Compute the lexicographically least reduced word equal to w
    :param sys: Coxeter system
    :param w: Word over the generators of sys
    :param bounds: Resource bounds (max_word_length applies)
    :return: Reduced word
    """
    w = tuple(w)
    for letter in w:
        if letter not in sys.generators:
            raise ConstructionError(f"Unknown generator in word: {letter}")
    if len(w) > bounds.max_word_length:
        raise WordTooLongError(
            f"Word of length {len(w)} too long for exact reduction (bound {bounds.max_word_length})",
            "max_word_length",
        )
    return _reduce(sys, w)


def words_equal(sys: CoxeterSystem, u: Word, v: Word, bounds: Bounds = Bounds()) -> bool:
    return word_reduce(sys, u, bounds) == word_reduce(sys, v, bounds)


def word_length(sys: CoxeterSystem, w: Word, bounds: Bounds = Bounds()) -> int:
    return len(word_reduce(sys, w, bounds))


def format_word(w: Word) -> str:
    return " ".join(w) if w else "1"
