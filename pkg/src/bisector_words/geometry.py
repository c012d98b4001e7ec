"""Arc-coordinate geometry of bisector arrangements on the unit circle.

Points live on a circle of total length 1, identified with [0, 1) via
t -> exp(2*pi*i*t).  The n lines through the center (each the perpendicular
bisector of two cyclically consecutive points) reduce to n arc positions
plus their antipodes, so all computations happen on sorted positions mod 1.
Positions may be exact rationals (``fractions.Fraction``) or floats; the
same code path serves both, only the genericity tolerance differs.

Words are read with the first point rotated to 0: region 0 is the arc
containing positions just above 0, regions follow counterclockwise.
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import words
from .words import Signature, Word

logger = logging.getLogger(__name__)

# Two of the 4n critical values (points, antipodes, bisectors, antipodal
# bisectors) closer than this mod 1 make a float configuration degenerate.
FLOAT_TIE_TOLERANCE = 1e-12


class NonGenericConfiguration(ValueError):
    """Configuration with coinciding critical values; words are ill-defined."""


def _mod1(x):
    return x % 1


@dataclass(frozen=True)
class PointConfig:
    """n >= 3 strictly increasing positions in [0, 1) on the unit-length circle."""

    positions: tuple

    def __post_init__(self):
        pos = tuple(self.positions)
        if len(pos) < 3:
            raise ValueError(f"need at least 3 points, got {len(pos)}")
        exact = not any(isinstance(p, float) for p in pos)
        if exact:
            pos = tuple(Fraction(p) for p in pos)
        object.__setattr__(self, "positions", pos)
        if any(not 0 <= p < 1 for p in pos):
            raise ValueError("positions must lie in [0, 1)")
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError("positions must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.positions)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(p, float) for p in self.positions)

    @classmethod
    def from_points(cls, pts: Iterable) -> "PointConfig":
        """Build from arbitrary positions: reduced mod 1 and sorted."""
        return cls(tuple(sorted(_mod1(p) for p in pts)))

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "PointConfig":
        """Parse decimal or 'p/q' position strings; both parse exactly."""
        return cls.from_points(Fraction(s) for s in items)

    def to_strings(self) -> list[str]:
        return [str(p) for p in self.positions]

    def rotated(self, delta) -> "PointConfig":
        return PointConfig.from_points(p + delta for p in self.positions)

    def reflected(self) -> "PointConfig":
        return PointConfig.from_points(-p for p in self.positions)


def _rotate_first_to_zero(config: PointConfig) -> PointConfig:
    p0 = config.positions[0]
    if p0 == 0:
        return config
    return PointConfig(tuple(p - p0 for p in config.positions))


def circle_distance(a, b):
    d = abs(b - a)
    return min(d, 1 - d)


def bisector_positions(config: PointConfig) -> tuple:
    """Midpoint of each pair of cyclically consecutive points, in pair order.

    The wrap-around pair uses the branch (1 + p_last + p_first)/2 mod 1 so the
    midpoint lands on the short arc between the two points.
    """
    p = config.positions
    n = config.n
    out = []
    for i in range(n):
        a, b = p[i], p[(i + 1) % n]
        if a < b:
            out.append((a + b) / 2)
        else:
            out.append(_mod1((1 + a + b) / 2))
    return tuple(out)


def critical_values(config: PointConfig) -> list:
    """Points, antipodes, bisectors and antipodal bisectors: 4n values mod 1."""
    ls = bisector_positions(config)
    vals = list(config.positions)
    vals += [_mod1(p + Fraction(1, 2) if config.is_exact else p + 0.5) for p in config.positions]
    vals += list(ls)
    vals += [_mod1(l + Fraction(1, 2) if config.is_exact else l + 0.5) for l in ls]
    return sorted(vals)


def genericity_margin(config: PointConfig):
    """Smallest cyclic gap between two critical values; 0 means degenerate."""
    vals = critical_values(config)
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    gaps.append(vals[0] + 1 - vals[-1])
    return min(gaps)


def ensure_generic(config: PointConfig) -> None:
    margin = genericity_margin(config)
    if config.is_exact:
        if margin <= 0:
            raise NonGenericConfiguration("coinciding critical values")
    elif margin < FLOAT_TIE_TOLERANCE:
        raise NonGenericConfiguration(
            f"critical values within {FLOAT_TIE_TOLERANCE} of each other (margin {margin!r})"
        )


def region_boundaries(config: PointConfig) -> tuple:
    """The 2n sorted region boundaries: bisectors and their antipodes."""
    ls = bisector_positions(config)
    half = Fraction(1, 2) if config.is_exact else 0.5
    return tuple(sorted(list(ls) + [_mod1(l + half) for l in ls]))


def _region_index(boundaries: Sequence, x, m: int) -> int:
    # region 0 is the wrap arc [boundaries[-1] - 1, boundaries[0])
    return bisect_right(boundaries, x) % m


def occupancy_word(config: PointConfig) -> Word:
    """Binary word: bit i is 1 iff region i contains a point.

    The configuration is rotated so its first point sits at 0; region 0 is
    the arc containing that point, regions are numbered counterclockwise.
    """
    c = _rotate_first_to_zero(config)
    ensure_generic(c)
    bnd = region_boundaries(c)
    m = 2 * c.n
    v = [0] * m
    for p in c.positions:
        v[_region_index(bnd, p, m)] += 1
    if any(b > 1 for b in v):
        raise NonGenericConfiguration("two points share a region")
    return tuple(v)


@dataclass(frozen=True)
class Arrangement:
    """Positions of the region boundaries and dots after rotating p_0 to 0.

    ``bisectors`` keeps construction order (entry i separates points i and
    i+1); ``boundaries`` and ``dots`` are the sorted merges with antipodes.
    """

    n: int
    bisectors: tuple
    antipodal_bisectors: tuple
    boundaries: tuple
    dots: tuple


def arrangement(config: PointConfig) -> Arrangement:
    c = _rotate_first_to_zero(config)
    ensure_generic(c)
    ls = bisector_positions(c)
    half = Fraction(1, 2) if c.is_exact else 0.5
    lsp = tuple(_mod1(l + half) for l in ls)
    dots = tuple(sorted(list(c.positions) + [_mod1(p + half) for p in c.positions]))
    return Arrangement(
        n=c.n,
        bisectors=ls,
        antipodal_bisectors=lsp,
        boundaries=tuple(sorted(ls + lsp)),
        dots=dots,
    )


def arrangement_signature(arr: Arrangement) -> Signature:
    """Dot count per region for the first n regions, read from the arrangement."""
    m = 2 * arr.n
    counts = [0] * m
    for q in arr.dots:
        counts[_region_index(arr.boundaries, q, m)] += 1
    if counts[: arr.n] != counts[arr.n :]:
        raise NonGenericConfiguration("antipodal regions disagree on dot counts")
    return tuple(counts[: arr.n])


def _colored_dots(c: PointConfig) -> list[tuple]:
    """All 2n (position, is_black) dots of a rotated configuration, sorted."""
    half = Fraction(1, 2) if c.is_exact else 0.5
    dots = [(p, 1) for p in c.positions] + [(_mod1(p + half), 0) for p in c.positions]
    dots.sort()
    return dots


def _look_direction(q, opposite: Sequence) -> str:
    """Side (L/R) of the dot in ``opposite`` nearest to q on the circle."""
    best_delta = None
    best_dist = None
    for x in opposite:
        delta = _mod1(x - q)
        dist = min(delta, 1 - delta)
        if best_dist is None or dist < best_dist:
            best_dist, best_delta = dist, delta
        elif dist == best_dist:
            raise NonGenericConfiguration("equidistant opposite-color dots")
    if 2 * best_delta == 1:
        raise NonGenericConfiguration("nearest opposite-color dot is antipodal")
    return "R" if 2 * best_delta < 1 else "L"


def _dot_directions(dots: list[tuple]) -> list[str]:
    blacks = [q for q, c in dots if c]
    whites = [q for q, c in dots if not c]
    return [_look_direction(q, whites if c else blacks) for q, c in dots]


def ocdc(config: PointConfig) -> tuple[str, ...]:
    """Oriented colored dot configuration of the dots in [0, 1/2).

    After rotating the first point to 0, each of the n dots there is recorded
    as color (B for a point, W for an antipode) plus the side of its nearest
    opposite-color dot, e.g. "BR" or "WL".  Entry 0 is always black.
    """
    c = _rotate_first_to_zero(config)
    ensure_generic(c)
    dots = _colored_dots(c)
    dirs = _dot_directions(dots)
    entries = []
    for (q, color), d in zip(dots, dirs):
        if 2 * q < 1:
            entries.append(("B" if color else "W") + d)
    if len(entries) != c.n:
        raise NonGenericConfiguration("half circle does not hold exactly n dots")
    return tuple(entries)


def _nearest_opposite(q, opposite: Sequence):
    return min(opposite, key=lambda x: circle_distance(q, x))


def _strictly_between(x, a, b) -> bool:
    """x in the open counterclockwise arc from a to b."""
    return 0 < _mod1(x - a) < _mod1(b - a)


def verify_direction_patterns(config: PointConfig) -> bool:
    """Check the dot-pattern characterization of region types on one configuration.

    Verifies that regions holding two dots are exactly the mutual
    nearest-pairs showing look directions R then L, that empty antipodal
    pairs correspond exactly to L-then-R direction patterns with two
    boundaries in between, that a two-dot region exists, and that the
    signature interlaces.  Returns False (with a logged diagnostic) on any
    violation.
    """
    c = _rotate_first_to_zero(config)
    ensure_generic(c)
    m = 2 * c.n
    bnd = region_boundaries(c)
    dots = _colored_dots(c)
    dirs = _dot_directions(dots)
    blacks = [q for q, col in dots if col]
    whites = [q for q, col in dots if not col]

    regions: list[list[int]] = [[] for _ in range(m)]
    for idx, (q, _) in enumerate(dots):
        regions[_region_index(bnd, q, m)].append(idx)
    # wrap region: dots above the last boundary precede those below the first
    if regions[0]:
        upper = [i for i in regions[0] if dots[i][0] >= bnd[-1]]
        lower = [i for i in regions[0] if dots[i][0] < bnd[0]]
        regions[0] = upper + lower

    types = [len(r) for r in regions]
    sig = tuple(types[: c.n])

    if types[: c.n] != types[c.n :]:
        logger.warning("pattern check: antipodal regions have different types")
        return False

    # two-dot regions <-> mutual nearest pairs looking R then L
    rl_pairs = {
        (i, (i + 1) % m)
        for i in range(m)
        if dirs[i] == "R" and dirs[(i + 1) % m] == "L"
    }
    for j in range(m):
        if types[j] != 2:
            continue
        a, b = regions[j]
        qa, ca = dots[a]
        qb, cb = dots[b]
        if ca == cb:
            logger.warning("pattern check: two-dot region %d has equal colors", j)
            return False
        if (a, b) not in rl_pairs:
            logger.warning("pattern check: two-dot region %d is not an RL pair", j)
            return False
        if _nearest_opposite(qa, whites if ca else blacks) != qb or _nearest_opposite(
            qb, whites if cb else blacks
        ) != qa:
            logger.warning("pattern check: region %d dots are not mutual nearest", j)
            return False
    if len(rl_pairs) != sum(1 for t in types if t == 2):
        logger.warning("pattern check: RL pattern count != number of two-dot regions")
        return False

    # empty regions <-> L then R direction patterns
    lr_pairs = [
        (i, (i + 1) % m)
        for i in range(m)
        if dirs[i] == "L" and dirs[(i + 1) % m] == "R"
    ]
    empty = sum(1 for t in types if t == 0)
    if len(lr_pairs) != empty:
        logger.warning("pattern check: LR pattern count != number of empty regions")
        return False
    for i, k in lr_pairs:
        qa, qb = dots[i][0], dots[k][0]
        inside = [j for j, b in enumerate(bnd) if _strictly_between(b, qa, qb)]
        if len(inside) != 2:
            logger.warning("pattern check: LR gap holds %d boundaries", len(inside))
            return False
        j = max(inside) if max(inside) - min(inside) == 1 else 0
        if types[j] != 0:
            logger.warning("pattern check: region %d between LR pair is not empty", j)
            return False

    if not any(t == 2 for t in types):
        logger.warning("pattern check: no two-dot region")
        return False
    if not words.is_interlacing(sig):
        logger.warning("pattern check: signature %s does not interlace", sig)
        return False
    return True


@dataclass(frozen=True)
class RegionStats:
    """Per-region types and lengths plus aggregate and partial statistics.

    Region 0 is the arc containing position 0 after rotation; ``types[i]``
    is the dot count of region i (equal to the signature letter i mod n) and
    ``occupied`` is the occupancy word.  The curves count or measure only
    regions entirely contained in [0, t] for each grid value t.
    """

    types: tuple[int, ...]
    lengths: tuple
    occupied: Word
    region_counts: tuple[int, int, int]
    length_totals: tuple
    empty_length: object
    t_grid: tuple
    h_curves: tuple[tuple, ...]
    l_curves: tuple[tuple, ...]

    def to_json_dict(self) -> dict:
        return {
            "types": list(self.types),
            "lengths": [float(x) for x in self.lengths],
            "H": list(self.region_counts),
            "L": [float(x) for x in self.length_totals],
            "Le": float(self.empty_length),
            "h_grid": [list(row) for row in self.h_curves],
            "l_grid": [[float(x) for x in row] for row in self.l_curves],
        }


def region_stats(config: PointConfig, t_grid: Sequence = ()) -> RegionStats:
    c = _rotate_first_to_zero(config)
    ensure_generic(c)
    m = 2 * c.n
    bnd = region_boundaries(c)
    word = occupancy_word(c)
    sig = words.signature(word)
    types = tuple(sig[i % c.n] for i in range(m))

    lengths = [bnd[0] + 1 - bnd[-1]] + [bnd[j] - bnd[j - 1] for j in range(1, m)]
    region_counts = tuple(sum(1 for t in types if t == k) for k in (0, 1, 2))
    length_totals = tuple(
        sum(lengths[j] for j in range(m) if types[j] == k) for k in (0, 1, 2)
    )
    empty_length = sum(lengths[j] for j in range(m) if word[j] == 0)

    grid = tuple(t_grid)
    h_curves = []
    l_curves = []
    for k in (0, 1, 2):
        hk = []
        lk = []
        for t in grid:
            count = 0
            total = 0
            for j in range(m):
                if types[j] != k:
                    continue
                contained = t >= 1 if j == 0 else bnd[j] <= t
                if contained:
                    count += 1
                    total += lengths[j]
            hk.append(count)
            lk.append(total)
        h_curves.append(tuple(hk))
        l_curves.append(tuple(lk))

    return RegionStats(
        types=types,
        lengths=tuple(lengths),
        occupied=word,
        region_counts=region_counts,
        length_totals=length_totals,
        empty_length=empty_length,
        t_grid=grid,
        h_curves=tuple(h_curves),
        l_curves=tuple(l_curves),
    )
