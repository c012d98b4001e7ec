import math
from fractions import Fraction

import numpy as np
import pytest

from bisector_words import geometry, realization, words
from bisector_words.geometry import (
    NonGenericConfiguration,
    PointConfig,
    arrangement,
    arrangement_signature,
    occupancy_word,
    ocdc,
    region_stats,
    verify_direction_patterns,
)

EXAMPLE = PointConfig((0.0, 0.1, 0.3))
EXAMPLE_EXACT = PointConfig((Fraction(0), Fraction(1, 10), Fraction(3, 10)))


def random_config(rng, n):
    while True:
        try:
            cfg = PointConfig(tuple(sorted(float(x) for x in rng.random(n))))
            geometry.ensure_generic(cfg)
            return cfg
        except (ValueError, NonGenericConfiguration):
            continue


def random_exact_config(rng, n, denominator=997):
    while True:
        nums = sorted(int(x) for x in rng.choice(denominator, size=n, replace=False))
        cfg = PointConfig(tuple(Fraction(v, denominator) for v in nums))
        if geometry.genericity_margin(cfg) > 0:
            return cfg


class TestPointConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            PointConfig((0.0, 0.5))
        with pytest.raises(ValueError):
            PointConfig((0.0, 0.5, 0.5))
        with pytest.raises(ValueError):
            PointConfig((0.0, 0.5, 1.2))

    def test_exactness_detection(self):
        assert EXAMPLE_EXACT.is_exact
        assert not EXAMPLE.is_exact

    def test_string_roundtrip(self):
        cfg = PointConfig.from_strings(["0", "1/10", "0.3"])
        assert cfg.is_exact
        assert cfg.positions == (Fraction(0), Fraction(1, 10), Fraction(3, 10))
        assert PointConfig.from_strings(cfg.to_strings()) == cfg

    def test_from_points_wraps_and_sorts(self):
        cfg = PointConfig.from_points([1.2, 0.9, 0.5])
        assert cfg.positions == (pytest.approx(0.2), 0.5, 0.9)


class TestOccupancyWord:
    def test_worked_example(self):
        assert occupancy_word(EXAMPLE) == (1, 1, 0, 1, 0, 0)
        assert occupancy_word(EXAMPLE_EXACT) == (1, 1, 0, 1, 0, 0)

    def test_sampled_signatures_interlace(self):
        rng = np.random.default_rng(7)
        for n in range(3, 9):
            for _ in range(200):
                w = occupancy_word(random_config(rng, n))
                assert words.is_interlacing(words.signature(w))

    def test_rotation_equivariance_at_bracelet_level(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            cfg = random_config(rng, 5)
            base = words.canonical_bracelet(occupancy_word(cfg))
            rotated = cfg.rotated(float(rng.random()))
            assert words.canonical_bracelet(occupancy_word(rotated)) == base

    def test_reflection_equivariance_at_bracelet_level(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            cfg = random_config(rng, 6)
            base = words.canonical_bracelet(occupancy_word(cfg))
            assert words.canonical_bracelet(occupancy_word(cfg.reflected())) == base

    def test_exact_and_float_agree_when_margin_is_clear(self):
        rng = np.random.default_rng(10)
        checked = 0
        for _ in range(100):
            exact = random_exact_config(rng, 5)
            approx = PointConfig(tuple(float(p) for p in exact.positions))
            if float(geometry.genericity_margin(exact)) > 1e-9:
                assert occupancy_word(approx) == occupancy_word(exact)
                checked += 1
        assert checked > 50

    def test_nongeneric_rejected(self):
        # second point antipodal to the first
        cfg = PointConfig((Fraction(0), Fraction(1, 2), Fraction(3, 4)))
        with pytest.raises(NonGenericConfiguration):
            occupancy_word(cfg)
        close = PointConfig((0.0, 0.25 + 1e-14, 0.25 + 2e-14))
        with pytest.raises(NonGenericConfiguration):
            occupancy_word(close)


class TestArrangement:
    def test_worked_example(self):
        arr = arrangement(EXAMPLE)
        assert arr.bisectors == (pytest.approx(0.05), pytest.approx(0.2), pytest.approx(0.65))
        assert arr.antipodal_bisectors == (
            pytest.approx(0.55),
            pytest.approx(0.7),
            pytest.approx(0.15),
        )
        assert len(arr.boundaries) == 6 and len(arr.dots) == 6

    def test_antipodal_boundary_symmetry(self):
        arr = arrangement(EXAMPLE_EXACT)
        shifted = sorted((b + Fraction(1, 2)) % 1 for b in arr.boundaries)
        assert shifted == list(arr.boundaries)

    def test_one_point_between_consecutive_bisectors(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            cfg = random_config(rng, 6)
            ls = sorted(geometry.bisector_positions(geometry._rotate_first_to_zero(cfg)))
            pos = geometry._rotate_first_to_zero(cfg).positions
            for a, b in zip(ls, ls[1:] + [ls[0] + 1]):
                inside = sum(1 for p in list(pos) + [p + 1 for p in pos] if a < p < b)
                assert inside == 1

    def test_signature_from_arrangement_matches_word(self):
        rng = np.random.default_rng(12)
        for n in (3, 5, 7):
            for _ in range(30):
                cfg = random_config(rng, n)
                assert arrangement_signature(arrangement(cfg)) == words.signature(
                    occupancy_word(cfg)
                )


class TestOcdc:
    def test_worked_example(self):
        entries = ocdc(EXAMPLE)
        assert entries == ("BL", "BL", "BR")
        assert entries[0][0] == "B"

    def test_first_entry_always_black(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            assert ocdc(random_config(rng, 5))[0][0] == "B"

    def test_length_is_n(self):
        rng = np.random.default_rng(14)
        for n in (3, 4, 6):
            assert len(ocdc(random_config(rng, n))) == n

    def test_antipodal_pair_rejected(self):
        cfg = PointConfig((Fraction(0), Fraction(1, 5), Fraction(1, 2)))
        with pytest.raises(NonGenericConfiguration):
            ocdc(cfg)


class TestDirectionPatterns:
    def test_worked_example(self):
        assert verify_direction_patterns(EXAMPLE)
        assert verify_direction_patterns(EXAMPLE_EXACT)

    def test_random_configurations(self):
        rng = np.random.default_rng(15)
        for n in range(3, 9):
            for _ in range(50):
                assert verify_direction_patterns(random_config(rng, n))

    def test_on_realized_nine_point_word(self):
        w = (0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1)
        cfg = realization.realize(w)
        assert verify_direction_patterns(cfg)
        got = words.signature(occupancy_word(cfg))
        sig = words.signature(w)
        assert got in {sig[k:] + sig[:k] for k in range(len(sig))}


class TestRegionStats:
    def test_worked_example(self):
        rs = region_stats(EXAMPLE_EXACT, t_grid=[Fraction(1, 2), 1])
        assert rs.types == (2, 1, 0, 2, 1, 0)
        assert rs.occupied == (1, 1, 0, 1, 0, 0)
        assert rs.region_counts == (2, 2, 2)
        assert rs.length_totals == (Fraction(1, 10), Fraction(1, 5), Fraction(7, 10))
        assert rs.empty_length == Fraction(1, 5)
        assert sum(rs.lengths) == 1

    def test_h2_is_two_for_triangles(self):
        rng = np.random.default_rng(16)
        for _ in range(50):
            assert region_stats(random_config(rng, 3)).region_counts[2] == 2

    def test_aggregate_identities(self):
        rng = np.random.default_rng(17)
        for n in (3, 5, 8):
            for _ in range(30):
                rs = region_stats(random_config(rng, n))
                h0, h1, h2 = rs.region_counts
                assert h0 == h2
                assert h1 == 2 * n - 2 * h2
                assert math.isclose(sum(rs.length_totals), 1.0)
                l0, l1, _ = rs.length_totals
                assert math.isclose(rs.empty_length, l0 + l1 / 2)
                assert all(b <= 1 for b in rs.occupied)

    def test_partial_curves(self):
        rng = np.random.default_rng(18)
        cfg = random_config(rng, 6)
        rs = region_stats(cfg, t_grid=[0.0, 0.4, 1.0])
        for k in (0, 1, 2):
            assert rs.h_curves[k][0] == 0
            assert rs.l_curves[k][0] == 0
            assert rs.h_curves[k][-1] == rs.region_counts[k]
            assert math.isclose(rs.l_curves[k][-1], rs.length_totals[k])
            assert rs.h_curves[k] == tuple(sorted(rs.h_curves[k]))

    def test_json_shape(self):
        rs = region_stats(EXAMPLE_EXACT, t_grid=[1])
        d = rs.to_json_dict()
        assert set(d) == {"types", "lengths", "H", "L", "Le", "h_grid", "l_grid"}
        assert d["Le"] == 0.2


def chord(a, b):
    return 2 * math.sin(math.pi * geometry.circle_distance(a, b))


class TestTrianglePattern:
    def test_sorted_side_lengths_fix_the_gaps(self):
        # relabel A, B, C by increasing chord length; then A,B are adjacent,
        # B,C have one empty region between them and C,A two (on one side)
        rng = np.random.default_rng(19)
        done = 0
        while done < 40:
            cfg = random_config(rng, 3)
            p = cfg.positions
            pairs = sorted(
                [(chord(p[0], p[1]), (0, 1)), (chord(p[1], p[2]), (1, 2)), (chord(p[0], p[2]), (0, 2))]
            )
            lengths = [round(c, 12) for c, _ in pairs]
            if len(set(lengths)) < 3:
                continue
            (_, ab), (_, bc), (_, ca) = pairs
            b_idx = set(ab) & set(bc)
            a_idx = set(ab) - b_idx
            c_idx = set(bc) - b_idx
            a, b, c = a_idx.pop(), b_idx.pop(), c_idx.pop()
            assert set(ca) == {c, a}

            word = occupancy_word(cfg)
            region_of = {}
            m = 6
            bnd = geometry.region_boundaries(geometry._rotate_first_to_zero(cfg))
            pos0 = geometry._rotate_first_to_zero(cfg).positions
            for i, q in enumerate(pos0):
                region_of[i] = geometry._region_index(bnd, q, m)

            def gap(i, j):
                # empty regions from point i to point j counterclockwise
                return (region_of[j] - region_of[i]) % m - 1

            assert min(gap(a, b), gap(b, a)) == 0
            assert min(gap(b, c), gap(c, b)) == 1
            assert min(gap(c, a), gap(a, c)) == 2
            assert sorted(word) == [0, 0, 0, 1, 1, 1]
            done += 1
