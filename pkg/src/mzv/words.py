"""Words over the three-letter alphabet {e0, e1, ez} and their subspaces.

A word encodes the pole sequence (a_1, ..., a_n) of the iterated integral

    L(e_{a_1} ... e_{a_n}) = int_{0 < t_1 < ... < t_n < 1}  prod_i dt_i / (t_i - a_i),

read left to right, the leftmost letter belonging to the integration
variable nearest 0.  In this convention the nested sum z(k_1, ..., k_d)
corresponds to the word ``1 0^{k_1 - 1} ... 1 0^{k_d - 1}``.

Words are stored as plain Python integers: a sentinel bit followed by two
bits per letter (00 = '0', 01 = '1', 10 = 'z'), most significant letter
first.  The empty word is the integer 1.  Since Python integers are
unbounded, the packing works at every weight.  For words of equal weight
the integer order coincides with lexicographic order under '0' < '1' < 'z',
and across weights lower weight sorts first; this integer order is the
canonical term order used throughout the package.

Subspace membership is decided letter-wise.  The tags and their word
characterizations (n = length, first/last letters):

====== ==============================================================
tag    membership for a word
====== ==============================================================
Az     any word over {0, 1, z}
A      letters in {0, 1}
Az0    n = 0; or n = 1 and the word is "z"; or n >= 2 with
       first in {1, z} and last in {0, z}  (admissible words)
A0     n = 0; or n >= 2 with first = 1, last = 0, letters in {0, 1}
Az1    n = 0 or first in {1, z}
A1     n = 0 or (first = 1 and letters in {0, 1})
AzM2   n = 0; or n >= 2 with first in {1, z} and last = 0
AzM1   AzM2 after stripping all trailing 'z' letters
Z0z    letters in {0, z}
Z1z    letters in {1, z}
====== ==============================================================
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

ZERO, ONE, Z = 0, 1, 2
EMPTY = 1

LETTERS = (ZERO, ONE, Z)
LETTER_CHARS = "01z"
_CODE_OF = {"0": ZERO, "1": ONE, "z": Z}


class SubspaceError(ValueError):
    """An input lies outside the subspace required by an operation."""


def weight(w: int) -> int:
    """Number of letters of the word (its degree)."""
    return (w.bit_length() - 1) // 2


def append(w: int, letter: int) -> int:
    return (w << 2) | letter


def prepend(letter: int, w: int) -> int:
    k2 = w.bit_length() - 1
    k2 -= k2 & 1
    return ((4 | letter) << k2) | (w ^ (1 << k2))


def concat(u: int, v: int) -> int:
    k2 = v.bit_length() - 1
    k2 -= k2 & 1
    return (u << k2) | (v ^ (1 << k2))


def letters(w: int) -> tuple[int, ...]:
    out = []
    while w != 1:
        out.append(w & 3)
        w >>= 2
    out.reverse()
    return tuple(out)


def from_letters(seq: Iterable[int]) -> int:
    w = EMPTY
    for c in seq:
        w = (w << 2) | c
    return w


def first_letter(w: int) -> int:
    if w == EMPTY:
        raise ValueError("the empty word has no letters")
    k2 = w.bit_length() - 1
    k2 -= k2 & 1
    return (w >> (k2 - 2)) & 3


def last_letter(w: int) -> int:
    if w == EMPTY:
        raise ValueError("the empty word has no letters")
    return w & 3


def reverse(w: int) -> int:
    return from_letters(reversed(letters(w)))


def parse_word(text: str) -> int:
    """Parse a word from its text form over the characters '0', '1', 'z'."""
    w = EMPTY
    for ch in text:
        try:
            w = (w << 2) | _CODE_OF[ch]
        except KeyError:
            raise ValueError(
                f"invalid character {ch!r} in word {text!r}; expected '0', '1' or 'z'"
            ) from None
    return w


def render_word(w: int) -> str:
    """Inverse of :func:`parse_word`; the empty word renders as ''."""
    return "".join(LETTER_CHARS[c] for c in letters(w))


def substitute_word(w: int, a: int, b: int) -> int:
    if a == b:
        return w
    return from_letters(b if c == a else c for c in letters(w))


def contains(w: int, letter: int) -> bool:
    while w != 1:
        if (w & 3) == letter:
            return True
        w >>= 2
    return False


def only(w: int, allowed: tuple[int, ...]) -> bool:
    while w != 1:
        if (w & 3) not in allowed:
            return False
        w >>= 2
    return True


def trailing_run(w: int, letter: int) -> int:
    n = 0
    while w != 1 and (w & 3) == letter:
        n += 1
        w >>= 2
    return n


def split_suffix(w: int, allowed: tuple[int, ...]) -> tuple[int, int]:
    """Split ``w = prefix . suffix`` at the maximal suffix over ``allowed``."""
    ls = letters(w)
    i = len(ls)
    while i > 0 and ls[i - 1] in allowed:
        i -= 1
    return from_letters(ls[:i]), from_letters(ls[i:])


# ---------------------------------------------------------------------------
# subspace predicates

def in_az(w: int) -> bool:
    return True


def in_a(w: int) -> bool:
    return only(w, (ZERO, ONE))


def in_az0(w: int) -> bool:
    if w == EMPTY:
        return True
    if weight(w) == 1:
        return (w & 3) == Z
    return first_letter(w) != ZERO and (w & 3) != ONE


def in_a0(w: int) -> bool:
    if w == EMPTY:
        return True
    return (
        weight(w) >= 2
        and first_letter(w) == ONE
        and (w & 3) == ZERO
        and only(w, (ZERO, ONE))
    )


def in_az1(w: int) -> bool:
    return w == EMPTY or first_letter(w) != ZERO


def in_a1(w: int) -> bool:
    return w == EMPTY or (first_letter(w) == ONE and only(w, (ZERO, ONE)))


def in_azm2(w: int) -> bool:
    if w == EMPTY:
        return True
    return weight(w) >= 2 and first_letter(w) != ZERO and (w & 3) == ZERO


def in_azm1(w: int) -> bool:
    while w != 1 and (w & 3) == Z:
        w >>= 2
    return in_azm2(w)


def in_z0z(w: int) -> bool:
    return only(w, (ZERO, Z))


def in_z1z(w: int) -> bool:
    return only(w, (ONE, Z))


SUBSPACE_PREDICATES = {
    "Az": in_az,
    "A": in_a,
    "Az0": in_az0,
    "A0": in_a0,
    "Az1": in_az1,
    "A1": in_a1,
    "AzM2": in_azm2,
    "AzM1": in_azm1,
    "Z0z": in_z0z,
    "Z1z": in_z1z,
}

SUBSPACE_TAGS = tuple(SUBSPACE_PREDICATES)


def word_in_subspace(w: int, tag: str) -> bool:
    try:
        pred = SUBSPACE_PREDICATES[tag]
    except KeyError:
        raise ValueError(f"unknown subspace tag {tag!r}; expected one of {SUBSPACE_TAGS}") from None
    return pred(w)


# ---------------------------------------------------------------------------
# enumeration in canonical (integer) order

def words_of_weight(k: int, alphabet: tuple[int, ...] = LETTERS) -> Iterator[int]:
    if k == 0:
        yield EMPTY
        return
    for combo in itertools.product(sorted(alphabet), repeat=k):
        yield from_letters(combo)


def az0_words(k: int) -> Iterator[int]:
    """Admissible words of weight ``k``; there are 4 * 3**(k-2) of them for k >= 2."""
    if k == 0:
        yield EMPTY
    elif k == 1:
        yield append(EMPTY, Z)
    else:
        for first in (ONE, Z):
            for mid in itertools.product(LETTERS, repeat=k - 2):
                for last in (ZERO, Z):
                    yield from_letters((first, *mid, last))


def a0_words(k: int) -> Iterator[int]:
    """Weight-k words of the form 1...0 over {0, 1}; 2**(k-2) of them for k >= 2."""
    if k == 0:
        yield EMPTY
        return
    if k == 1:
        return
    for mid in itertools.product((ZERO, ONE), repeat=k - 2):
        yield from_letters((ONE, *mid, ZERO))


def a1_words(k: int) -> Iterator[int]:
    if k == 0:
        yield EMPTY
        return
    for rest in itertools.product((ZERO, ONE), repeat=k - 1):
        yield from_letters((ONE, *rest))


def azm2_words(k: int) -> Iterator[int]:
    if k == 0:
        yield EMPTY
        return
    if k == 1:
        return
    for first in (ONE, Z):
        for mid in itertools.product(LETTERS, repeat=k - 2):
            yield from_letters((first, *mid, ZERO))


def azm1_words(k: int) -> Iterator[int]:
    """Weight-k words of the form (AzM2 word) . z^j, in canonical order."""
    found = set()
    for j in range(k + 1):
        tail = from_letters([Z] * j)
        for u in azm2_words(k - j):
            found.add(concat(u, tail))
    yield from sorted(found)
