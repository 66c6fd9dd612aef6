"""Abstract reducer for words in the two collapse correspondences.

The subalgebra generated by p0 (transposed collapse graph) and p2 (collapse
graph) is three-dimensional with relations

    p0 p0 = p0      p2 p2 = p2      p0 p2 = V      p2 p0 = 0      V V = 0

and the induced products p0 V = V, V p2 = V, V p0 = 0, p2 V = 0.  Words are
reduced with a lookup table, deliberately independent of the composition
engine so the two can be compared word by word.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

P0 = "p0"
P2 = "p2"
V = "V"
ZERO = "0"

# state o generator, for ordered composition x1 o x2 o ... o xk
_STEP = {
    (P0, P0): P0,
    (P0, P2): V,
    (P2, P0): ZERO,
    (P2, P2): P2,
    (V, P0): ZERO,
    (V, P2): V,
}


def reduce_word(word: Iterable[str]) -> str:
    """Reduce x1 o x2 o ... o xk to one of p0, p2, V, 0."""
    letters = list(word)
    if not letters:
        raise ValueError("empty word")
    state = letters[0]
    if state not in (P0, P2):
        raise ValueError(f"unknown generator {state!r}")
    for x in letters[1:]:
        if x not in (P0, P2):
            raise ValueError(f"unknown generator {x!r}")
        if state == ZERO:
            break
        state = _STEP[(state, x)]
    return state


def all_words(max_len: int) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = []
    for length in range(1, max_len + 1):
        out.extend(product((P0, P2), repeat=length))
    return out
