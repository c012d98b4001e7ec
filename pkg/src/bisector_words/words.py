"""Pure combinatorics on occupancy words, signatures and bracelets.

An occupancy word is a binary word of length 2n (n >= 3): bit i records
whether region i of a circle cut into 2n arcs by n concurrent lines through
the center contains a marked point.  Its signature compresses the word to
length n by adding bits that are n apart, and realizability of a word by an
actual point configuration is decided entirely on the signature.

Everything here is 0-indexed.  Formulas stated elsewhere in 1-based cyclic
indexing translate by adding 1 to each index; cyclic indices are reduced
mod n or mod 2n throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]
Signature = tuple[int, ...]
FoldedWord = tuple[str, ...]

FOLDED_ALPHABET = ("00", "01", "10", "11")


def check_word(bits: Iterable[int]) -> Word:
    """Validate and normalize a word to a tuple of 0/1 ints of length 2n, n >= 3."""
    w = tuple(int(b) for b in bits)
    if len(w) < 6 or len(w) % 2 != 0:
        raise ValueError(f"word length must be an even number >= 6, got {len(w)}")
    if any(b not in (0, 1) for b in w):
        raise ValueError("word bits must be 0 or 1")
    return w


def check_signature(letters: Iterable[int]) -> Signature:
    s = tuple(int(x) for x in letters)
    if len(s) < 3:
        raise ValueError(f"signature length must be >= 3, got {len(s)}")
    if any(x not in (0, 1, 2) for x in s):
        raise ValueError("signature letters must be 0, 1 or 2")
    return s


def check_folded(letters: Iterable[str]) -> FoldedWord:
    f = tuple(str(a) for a in letters)
    if len(f) < 3:
        raise ValueError(f"folded word length must be >= 3, got {len(f)}")
    if any(a not in FOLDED_ALPHABET for a in f):
        raise ValueError("folded letters must be one of 00, 01, 10, 11")
    return f


def word_from_string(s: str) -> Word:
    if not set(s) <= {"0", "1"}:
        raise ValueError("word string must contain only '0' and '1'")
    return check_word(int(c) for c in s)


def word_to_string(w: Sequence[int]) -> str:
    return "".join(str(b) for b in w)


def signature_to_string(s: Sequence[int]) -> str:
    return "".join(str(x) for x in s)


def word_to_int(w: Sequence[int]) -> int:
    """Pack a word into an integer, first bit most significant."""
    acc = 0
    for b in w:
        acc = (acc << 1) | b
    return acc


def int_to_word(x: int, n: int) -> Word:
    return tuple((x >> (2 * n - 1 - i)) & 1 for i in range(2 * n))


def signature(w: Iterable[int]) -> Signature:
    """Letter i is bits[i] + bits[i + n], the point count of an antipodal region pair."""
    word = check_word(w)
    n = len(word) // 2
    return tuple(word[i] + word[i + n] for i in range(n))


def is_interlacing(letters: Iterable[int]) -> bool:
    """Test whether 0s and 2s strictly alternate around the cyclic signature.

    Equivalent to the defining property (exactly one 2 strictly between each
    cyclically consecutive pair of 0s, with both letters present); the
    equivalence is asserted against the literal definition in the test suite.
    """
    s = check_signature(letters)
    specials = [x for x in s if x != 1]
    m = len(specials)
    return m > 0 and all(specials[i] != specials[(i + 1) % m] for i in range(m))


def is_realizable(w: Iterable[int]) -> bool:
    """A word is achievable by points on the circle iff its signature interlaces."""
    return is_interlacing(signature(w))


def cyclic_shifts(w: Sequence) -> list:
    return [tuple(w[i:]) + tuple(w[:i]) for i in range(len(w))]


@dataclass(frozen=True)
class Bracelet:
    """Equivalence class of a word under cyclic shifts and reversal.

    ``word`` is the canonical representative: the lexicographically smallest
    member of the class.  ``orbit_size`` is the number of distinct words in
    the class; it divides 4n.
    """

    n: int
    word: Word
    orbit_size: int

    def __str__(self) -> str:
        return word_to_string(self.word)


def bracelet_class(w: Iterable[int]) -> set[Word]:
    """All distinct words obtained from w by cyclic shifts and reversal."""
    word = check_word(w)
    rev = word[::-1]
    return set(cyclic_shifts(word)) | set(cyclic_shifts(rev))


def canonical_bracelet(w: Iterable[int]) -> Bracelet:
    cls = bracelet_class(w)
    word = check_word(w)
    return Bracelet(n=len(word) // 2, word=min(cls), orbit_size=len(cls))


def fold(w: Iterable[int]) -> FoldedWord:
    """Length-n word over {00,01,10,11}; letter i concatenates bits i and i+n."""
    word = check_word(w)
    n = len(word) // 2
    return tuple(f"{word[i]}{word[i + n]}" for i in range(n))


def unfold(folded: Iterable[str], first_zero_is_11: bool = True) -> Word:
    """Inverse of :func:`fold` up to the placement of the balanced letters.

    Letters 10 and 01 are taken literally.  Balanced letters (00/11) are
    reassigned by strict alternation, the first one being 11 when
    ``first_zero_is_11`` is true; on a folded word whose balanced letters
    already alternate starting from that value this recovers the exact
    preimage.  A folded word without balanced letters ignores the flag.
    """
    f = check_folded(folded)
    n = len(f)
    first = [0] * n
    second = [0] * n
    next_is_11 = first_zero_is_11
    for i, letter in enumerate(f):
        if letter in ("00", "11"):
            bit = 1 if next_is_11 else 0
            first[i] = second[i] = bit
            next_is_11 = not next_is_11
        else:
            first[i] = int(letter[0])
            second[i] = int(letter[1])
    return tuple(first) + tuple(second)


def prefix_counts(s: Iterable[int], x: float) -> tuple[int, int, int]:
    """Occurrences of each letter among the first floor(x) signature letters."""
    sig = check_signature(s)
    if not 0 <= x <= len(sig):
        raise ValueError(f"prefix bound must lie in [0, {len(sig)}], got {x}")
    head = sig[: math.floor(x)]
    return head.count(0), head.count(1), head.count(2)


def run_word(n: int) -> Word:
    """The word (1, 0, 1, ..., 1, 0, ..., 0) of length 2n.

    One occupied region, one empty one, then a run of n-1 occupied regions
    followed by a run of n-1 empty ones.  Its bracelet is the most likely
    one under uniform random points.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return (1, 0) + (1,) * (n - 1) + (0,) * (n - 1)
