"""Exact generation and counting of realizable words and bracelets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import words
from .words import Word

MAX_ENUMERATION_N = 14  # desk scale; memory is one set of canonical words


def _check_range(n: int) -> None:
    if not 3 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 3 <= n <= {MAX_ENUMERATION_N}, got {n}")


def count_words(n: int) -> int:
    """Number of realizable words of length 2n: 3^n - 2^(n+1) + 1."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return 3**n - 2 ** (n + 1) + 1


def enumerate_signatures(n: int) -> Iterator[tuple[int, ...]]:
    """Interlacing signatures of length n in lexicographic order."""
    _check_range(n)
    for sig in product((0, 1, 2), repeat=n):
        if words.is_interlacing(sig):
            yield sig


def enumerate_words(n: int) -> Iterator[Word]:
    """All realizable words of length 2n, each exactly once.

    Signatures stream in lexicographic order; for each, the positions with
    letter 1 expand into the two bit choices in the fixed order (1,0) then
    (0,1), so the stream is reproducible.
    """
    _check_range(n)
    for sig in enumerate_signatures(n):
        free = [i for i, letter in enumerate(sig) if letter == 1]
        first = [0] * n
        second = [0] * n
        for i, letter in enumerate(sig):
            if letter == 2:
                first[i] = second[i] = 1
        for choice in product(((1, 0), (0, 1)), repeat=len(free)):
            for i, (a, b) in zip(free, choice):
                first[i] = a
                second[i] = b
            yield tuple(first) + tuple(second)


def count_bracelets(n: int) -> int:
    """Number of shift/reversal classes among the realizable words."""
    _check_range(n)
    return len({words.canonical_bracelet(w).word for w in enumerate_words(n)})


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    word_count: int
    bracelet_count: int
    formula_count: int
    orbit_size_histogram: dict[int, int]  # orbit size -> number of classes

    def words_in_orbits_smaller_than(self, bound: int) -> int:
        return sum(o * c for o, c in self.orbit_size_histogram.items() if o < bound)


def enumeration_report(n: int) -> EnumerationReport:
    _check_range(n)
    classes: dict[Word, int] = {}
    word_count = 0
    for w in enumerate_words(n):
        word_count += 1
        b = words.canonical_bracelet(w)
        classes[b.word] = b.orbit_size
    histogram = Counter(classes.values())
    return EnumerationReport(
        n=n,
        word_count=word_count,
        bracelet_count=len(classes),
        formula_count=count_words(n),
        orbit_size_histogram=dict(sorted(histogram.items())),
    )
