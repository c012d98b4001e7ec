"""Explicit point configurations realizing a word with interlacing signature.

The construction anchors the doubled signature's 2s at the s-th roots of
unity (arc positions k/s), its 0s at the midpoints between consecutive
anchors, and spreads the remaining indices geometrically (offsets
eta * (2^d - 1)) toward their anchor, so that every region boundary can be
located by hand.  A final perturbation of epsilon * 2^(k-2n) at index k
removes the remaining boundary coincidences: the offsets have pairwise
distinct sums, so no two chord midpoints can keep shifting in lockstep.
(An arithmetic k*epsilon perturbation fails here: for index-sum-symmetric
words such as the one with signature (0,2,0,2), two coinciding midpoints
shift by the same amount for every epsilon.)  All arithmetic is exact
rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import words
from .geometry import PointConfig, ensure_generic, region_boundaries
from .words import Word


class NotRealizable(ValueError):
    """Word whose signature does not interlace; no configuration exists."""


def _mod1(x: Fraction) -> Fraction:
    return x % 1


@dataclass(frozen=True)
class RealizationPlan:
    """Intermediate data of the construction, kept for diagnostics.

    Indices refer to the input word rotated left by ``rotation`` so that
    signature letter 0 is a 0.  ``base`` are the unperturbed candidate
    positions for all 2n indices (possibly >= 1 before reduction mod 1);
    ``perturbed`` adds epsilon * 2^(index+1) / 4^n, a positive offset of at
    most epsilon.  ``components`` lists the runs of signature-1 indices
    between anchors as (kind, anchor, indices) with kind "descending" (run
    follows its anchor) or "ascending" (run precedes it).
    """

    n: int
    word: Word
    rotation: int
    rotated_word: Word
    s: int
    two_positions: tuple[int, ...]
    zero_positions: tuple[int, ...]
    eta: Fraction
    epsilon: Fraction
    base: tuple[Fraction, ...]
    perturbed: tuple[Fraction, ...]
    components: tuple[tuple, ...]

    def point_positions(self) -> tuple[Fraction, ...]:
        return tuple(
            sorted(
                _mod1(self.perturbed[i])
                for i in range(2 * self.n)
                if self.rotated_word[i] == 1
            )
        )

    def config(self) -> PointConfig:
        return PointConfig(self.point_positions())

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "T": list(self.two_positions),
            "Z": list(self.zero_positions),
            "eta": str(self.eta),
            "epsilon": str(self.epsilon),
            "r": [str(x) for x in self.base],
            "components": [
                {"kind": kind, "anchor": anchor, "indices": list(idx)}
                for kind, anchor, idx in self.components
            ],
        }


def plan_realization(w) -> RealizationPlan:
    word = words.check_word(w)
    sig = words.signature(word)
    if not words.is_interlacing(sig):
        raise NotRealizable(f"signature {words.signature_to_string(sig)} does not interlace")
    n = len(sig)
    m = 2 * n

    rotation = sig.index(0)
    rotated = word[rotation:] + word[:rotation]
    doubled = words.signature(rotated) * 2

    two_pos = tuple(i for i in range(m) if doubled[i] == 2)
    zero_pos = tuple(i for i in range(m) if doubled[i] == 0)
    s = len(two_pos)
    assert s == len(zero_pos) and zero_pos[0] == 0
    # interlacing makes zeros and twos alternate, starting with the zero at 0
    assert all(z < t for z, t in zip(zero_pos, two_pos))
    assert all(t < z for t, z in zip(two_pos, zero_pos[1:]))

    eta = Fraction(1, s * 2 ** (n + 3))
    epsilon = eta / (4 * n)

    base: list = [None] * m
    for k in range(1, s + 1):
        base[two_pos[k - 1]] = Fraction(k, s)
        base[zero_pos[k - 1]] = Fraction(2 * k - 1, 2 * s)

    components = []
    for k in range(1, s + 1):
        anchor = two_pos[k - 1]
        stop = zero_pos[k] if k < s else m
        descending = tuple(range(anchor + 1, stop))
        for h in descending:
            base[h] = base[anchor] + eta * (2 ** (h - anchor) - 1)
        ascending = tuple(range(zero_pos[k - 1] + 1, anchor))
        for h in ascending:
            base[h] = base[anchor] - eta * (2 ** (anchor - h) - 1)
        if len(descending) > n or len(ascending) > n:
            raise AssertionError("component longer than n; construction bound violated")
        if descending:
            components.append(("descending", anchor, descending))
        if ascending:
            components.append(("ascending", anchor, ascending))

    perturbed = tuple(
        base[h] + epsilon * Fraction(2 ** (h + 1), 4**n) for h in range(m)
    )

    return RealizationPlan(
        n=n,
        word=word,
        rotation=rotation,
        rotated_word=rotated,
        s=s,
        two_positions=two_pos,
        zero_positions=zero_pos,
        eta=eta,
        epsilon=epsilon,
        base=tuple(base),
        perturbed=perturbed,
        components=tuple(components),
    )


def realize(w) -> PointConfig:
    """Exact-rational generic configuration whose occupancy word is w.

    The reading convention fixes a rotation, so the word computed from the
    returned configuration is a cyclic shift of w; bracelets agree exactly.
    Raises :class:`NotRealizable` when the signature does not interlace.
    """
    config = plan_realization(w).config()
    ensure_generic(config)
    return config


def _strictly_between(x, a, b) -> bool:
    return 0 < (x - a) % 1 < (b - a) % 1


def verify_bisector_layout(plan: RealizationPlan) -> bool:
    """Check that every region boundary sits where the construction wants it.

    Each index of a descending run must have exactly one boundary just below
    its position, each index of an ascending run exactly one just above, and
    each window of width 1/(4s) around a zero anchor exactly two; together
    these must account for all 2n boundaries, each exactly once.
    """
    config = plan.config()
    boundaries = region_boundaries(config)
    m = 2 * plan.n
    pos = [_mod1(x) for x in plan.perturbed]

    claimed: list = []

    def grab(a, b, expected: int) -> bool:
        hits = [x for x in boundaries if _strictly_between(x, a, b)]
        claimed.extend(hits)
        return len(hits) == expected

    for kind, _anchor, indices in plan.components:
        for h in indices:
            if kind == "descending":
                ok = grab(pos[h - 1], pos[h], 1)
            else:
                ok = grab(pos[h], pos[(h + 1) % m], 1)
            if not ok:
                return False

    window = Fraction(1, 8 * plan.s)
    for k in range(1, plan.s + 1):
        center = Fraction(2 * k - 1, 2 * plan.s)
        if not grab(_mod1(center - window), _mod1(center + window), 2):
            return False

    return len(claimed) == m and len(set(claimed)) == m
