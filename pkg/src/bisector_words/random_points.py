"""Random configurations: sampling models, closed forms, Monte Carlo estimators.

Two sampling models are provided.  The circle model draws n i.i.d. uniform
points on the unit-length circle.  The exponential spacing model places
dots at partial sums of i.i.d. unit exponentials, colors them with fair
coins (the first dot black), and maps back to the circle by scaling the
half circle to the dot span; up to rotation this reproduces the circle
model, and the expected type-k length on the unit circle equals the
expected unnormalized type-k length divided by 2n.

Every estimator consumes trials in fixed-size batches; batch i draws from a
counter-based generator keyed by (seed, i) and partial sums are combined in
batch order, so results are bit-identical for any worker count.  The
batched geometry skips per-configuration genericity checks: sampled
configurations are generic almost surely, and the scalar APIs stay strict.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import words
from .geometry import PointConfig, ensure_generic
from .words import Bracelet

BATCH_SIZE = 1 << 14
_MASK64 = (1 << 64) - 1


def batch_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for batch ``index``: a pure function of (seed, index)."""
    key = np.array([seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


# ---------------------------------------------------------------------------
# closed forms (exact rationals)


def closed_form(name: str, n: int) -> Fraction:
    """Exact value of a named statistic of n uniform points on the circle.

    h2: expected number of two-dot regions; l0/l1/l2: expected total length
    of regions by type; le: expected total length of unoccupied regions;
    pbn: probability of the bracelet of :func:`bisector_words.words.run_word`;
    phi13: value at 1/3 of the weighted binomial double sum phi.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if name == "h2":
        return Fraction(n, 2) * (1 + Fraction(1, 3 ** (n - 2)))
    if name == "l0":
        return Fraction(3 ** (n - 1) + 2 * n - 7, 8 * 3 ** (n - 1))
    if name == "l1":
        return Fraction(3 ** (n - 1) - n - 1, 2 * 3 ** (n - 1))
    if name == "l2":
        return Fraction(3**n + 2 * n + 11, 8 * 3 ** (n - 1))
    if name == "le":
        return Fraction(3, 8) - Fraction(1, 8 * 3 ** (n - 3))
    if name == "pbn":
        return Fraction(n, 3 * 2 ** (2 * n - 6))
    if name == "phi13":
        return Fraction(1, 4) - Fraction(1, 2 ** (n - 1)) + Fraction(1, 4 * 3 ** (n - 2))
    raise ValueError(f"unknown closed form {name!r}")


def phi(x, n: int) -> Fraction:
    """Closed form of the double sum :func:`phi_series` for 0 < x < 1/2."""
    x = Fraction(x)
    if not 0 < x < Fraction(1, 2):
        raise ValueError(f"need 0 < x < 1/2, got {x}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    lead = (x / 2) * (1 - x ** (n - 2)) / (1 - x)
    tail = (x / 2 ** (n - 1)) * (1 - (2 * x) ** (n - 2)) / (1 - 2 * x)
    return lead - tail


def phi_series(x, n: int) -> Fraction:
    """Literal quadruple sum defining phi; exact, for cross-checking :func:`phi`."""
    x = Fraction(x)
    if not 0 < x < Fraction(1, 2):
        raise ValueError(f"need 0 < x < 1/2, got {x}")
    total = Fraction(0)
    for k in range(1, n - 1):
        for l in range(1, n - k):
            weight = Fraction(1, 2 ** min(1 + k + l, n - 1))
            for i in range(k):
                for j in range(l):
                    total += weight * math.comb(i + j, j) * x ** (i + j + 1)
    return total


def exp_below_erlangs_prob(k: int, l: int) -> Fraction:
    """P(X < U and X < V) for X ~ Exp(1), U ~ Erlang(k,1), V ~ Erlang(l,1), exact."""
    if k < 1 or l < 1:
        raise ValueError("need k, l >= 1")
    return sum(
        Fraction(math.comb(i + j, j), 3 ** (i + j + 1))
        for i in range(k)
        for j in range(l)
    )


# ---------------------------------------------------------------------------
# estimator plumbing


@dataclass(frozen=True)
class EstimatorResult:
    estimate: float
    std_error: float
    trials: int
    seed: int
    target: float
    z: float

    def to_json_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "std_error": self.std_error,
            "trials": self.trials,
            "seed": self.seed,
            "target": self.target,
            "z": self.z,
        }


def _make_result(total: float, total_sq: float, trials: int, seed: int, target) -> EstimatorResult:
    mean = total / trials
    var = 0.0
    if trials > 1:
        var = max((total_sq - trials * mean * mean) / (trials - 1), 0.0)
    se = math.sqrt(var / trials)
    target = float(target)
    if se == 0.0:
        z = 0.0 if mean == target else math.inf
    else:
        z = (mean - target) / se
    return EstimatorResult(
        estimate=mean, std_error=se, trials=trials, seed=seed, target=target, z=z
    )


def z_between(a: EstimatorResult, b: EstimatorResult) -> float:
    se = math.hypot(a.std_error, b.std_error)
    if se == 0.0:
        return 0.0 if a.estimate == b.estimate else math.inf
    return (a.estimate - b.estimate) / se


def _batch_plan(trials: int) -> list[tuple[int, int]]:
    if trials < 1:
        raise ValueError("need at least one trial")
    return [
        (i, min(BATCH_SIZE, trials - i * BATCH_SIZE))
        for i in range((trials + BATCH_SIZE - 1) // BATCH_SIZE)
    ]


def _map_tasks(tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) == 1:
        return [_run_batch(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_batch, tasks, chunksize=chunk))


# ---------------------------------------------------------------------------
# vectorized circle geometry on batches of configurations


def _rotate_rows(p: np.ndarray) -> np.ndarray:
    return p - p[:, :1]


def _boundaries_rows(p: np.ndarray) -> np.ndarray:
    """Region boundaries per row; rows must be sorted with first entry 0."""
    mid = np.empty_like(p)
    mid[:, :-1] = (p[:, :-1] + p[:, 1:]) / 2
    mid[:, -1] = (1 + p[:, -1]) / 2
    anti = mid + 0.5
    anti[anti >= 1] -= 1
    return np.sort(np.concatenate([mid, anti], axis=1), axis=1)


def _words_rows(p: np.ndarray) -> np.ndarray:
    bnd = _boundaries_rows(p)
    regions = (bnd[:, None, :] < p[:, :, None]).sum(axis=2) % (2 * p.shape[1])
    w = np.zeros((p.shape[0], 2 * p.shape[1]), dtype=np.uint8)
    np.put_along_axis(w, regions, 1, axis=1)
    return w


def _region_rows(p: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Occupancy words, region types and region lengths for each row."""
    n = p.shape[1]
    bnd = _boundaries_rows(p)
    regions = (bnd[:, None, :] < p[:, :, None]).sum(axis=2) % (2 * n)
    w = np.zeros((p.shape[0], 2 * n), dtype=np.uint8)
    np.put_along_axis(w, regions, 1, axis=1)
    types = w + np.roll(w, -n, axis=1)
    lengths = np.empty_like(bnd)
    lengths[:, 1:] = np.diff(bnd, axis=1)
    lengths[:, 0] = 1 - bnd[:, -1] + bnd[:, 0]
    return w, types, lengths


def _pack_words(w: np.ndarray) -> np.ndarray:
    weights = (1 << np.arange(w.shape[1] - 1, -1, -1)).astype(np.int64)
    return w.astype(np.int64) @ weights


def _uniform_rows(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    return _rotate_rows(np.sort(rng.random((size, n)), axis=1))


def _exp_model_rows(n: int, size: int, rng: np.random.Generator):
    """Unit-circle positions and circumferences 2*Y_n from the exponential model."""
    spac = rng.standard_exponential((size, n))
    y = np.cumsum(spac, axis=1)
    yn = y[:, -1:]
    dots = np.concatenate([np.zeros((size, 1)), y[:, :-1]], axis=1) / (2 * yn)
    colors = np.concatenate(
        [np.ones((size, 1), dtype=np.int64), rng.integers(0, 2, (size, n - 1))],
        axis=1,
    )
    pos = np.where(colors == 1, dots, dots + 0.5)
    return _rotate_rows(np.sort(pos, axis=1)), 2 * yn[:, 0]


def _count_non_interlacing(signatures: np.ndarray) -> int:
    bad = 0
    for row in signatures.tolist():
        specials = [v for v in row if v != 1]
        if not specials:
            bad += 1
            continue
        prev = specials[-1]
        for v in specials:
            if v == prev:
                bad += 1
                break
            prev = v
    return bad


# ---------------------------------------------------------------------------
# batch workers (top level so they cross process boundaries)


def _run_batch(task: tuple):
    kind, n, seed, index, size, extra = task
    rng = batch_rng(seed, index)
    if kind == "bracelet_hits":
        pos = _uniform_rows(n, size, rng)
        ints = _pack_words(_words_rows(pos))
        return int(np.isin(ints, np.asarray(extra, dtype=np.int64)).sum())
    if kind == "bracelet_hits_exp":
        pos, _ = _exp_model_rows(n, size, rng)
        ints = _pack_words(_words_rows(pos))
        return int(np.isin(ints, np.asarray(extra, dtype=np.int64)).sum())
    if kind == "region_stats":
        pos = _uniform_rows(n, size, rng)
        w, types, lengths = _region_rows(pos)
        h2 = (types == 2).sum(axis=1)
        values = {
            "h2": h2.astype(np.float64),
            "l0": (lengths * (types == 0)).sum(axis=1),
            "l1": (lengths * (types == 1)).sum(axis=1),
            "l2": (lengths * (types == 2)).sum(axis=1),
            "le": (lengths * (w == 0)).sum(axis=1),
        }
        return {k: (float(v.sum()), float((v * v).sum())) for k, v in values.items()}
    if kind == "exp_lengths":
        pos, circumference = _exp_model_rows(n, size, rng)
        _, types, lengths = _region_rows(pos)
        out = {}
        for k in (0, 1, 2):
            v = (lengths * (types == k)).sum(axis=1) * circumference / (2 * n)
            out[f"l{k}"] = (float(v.sum()), float((v * v).sum()))
        out["total"] = (float(circumference.sum()), float((circumference**2).sum()))
        return out
    if kind == "interlacing":
        pos = _uniform_rows(n, size, rng)
        w = _words_rows(pos)
        signatures = w[:, :n] + w[:, n:]
        return _count_non_interlacing(signatures)
    raise ValueError(f"unknown batch kind {kind!r}")


# ---------------------------------------------------------------------------
# scalar sampling APIs


def sample_uniform_config(n: int, rng: np.random.Generator) -> PointConfig:
    """n i.i.d. uniform positions on the circle, resampled if degenerate."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    while True:
        try:
            config = PointConfig(tuple(sorted(float(x) for x in rng.random(n))))
            ensure_generic(config)
        except ValueError:  # duplicate draw or tied critical values
            continue
        return config


@dataclass(frozen=True)
class ExpSpacingSample:
    """Dots at partial sums of unit exponentials with fair-coin colors.

    ``dots[i]`` is Y_i for 0 <= i <= n (Y_0 = 0); ``colors[i]`` is 1 for
    black, with colors[0] = 1 and colors[n] = 0 by convention.  ``dot_at``
    extends both to -n <= i <= 2n-1 by (Y_{i+-n}, 1 - color_i).
    """

    spacings: tuple[float, ...]
    dots: tuple[float, ...]
    colors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.spacings)

    def dot_at(self, i: int) -> tuple[float, int]:
        n = self.n
        if 0 <= i <= n - 1:
            return self.dots[i], self.colors[i]
        if n <= i <= 2 * n - 1:
            y, c = self.dot_at(i - n)
            return y + self.dots[n], 1 - c
        if -n <= i < 0:
            y, c = self.dot_at(i + n)
            return y - self.dots[n], 1 - c
        raise IndexError(f"dot index {i} outside [-{n}, {2 * n - 1}]")

    def to_point_config(self) -> PointConfig:
        """Scale the half circle to the dot span and lift colors back to points."""
        span = 2 * self.dots[self.n]
        pts = []
        for i in range(self.n):
            x = self.dots[i] / span
            pts.append(x if self.colors[i] == 1 else x + 0.5)
        return PointConfig(tuple(sorted(pts)))


def sample_exp_model(n: int, rng: np.random.Generator) -> ExpSpacingSample:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    spacings = tuple(float(t) for t in rng.standard_exponential(n))
    dots = (0.0, *np.cumsum(spacings).tolist())
    colors = (1, *(int(b) for b in rng.integers(0, 2, n - 1)), 0)
    return ExpSpacingSample(spacings=spacings, dots=dots, colors=colors)


# ---------------------------------------------------------------------------
# estimators


def _class_ints(target: Bracelet) -> tuple[int, ...]:
    return tuple(sorted(words.word_to_int(w) for w in words.bracelet_class(target.word)))


def estimate_bracelet_prob(
    n: int,
    target: Bracelet,
    trials: int,
    seed: int,
    workers: int = 1,
    model: str = "circle",
    target_prob=None,
) -> EstimatorResult:
    """Fraction of sampled configurations whose bracelet equals ``target``.

    ``model`` selects the circle model or the exponential spacing model
    ("exp"); the two agree in distribution.  The z score is computed against
    ``target_prob`` when given, against the known closed form when the
    target is the run-word bracelet, and is NaN otherwise.  Deterministic
    for fixed (seed, trials) whatever the worker count.
    """
    kind = {"circle": "bracelet_hits", "exp": "bracelet_hits_exp"}[model]
    if target_prob is None:
        if target.word == words.canonical_bracelet(words.run_word(n)).word:
            target_prob = closed_form("pbn", n)
        else:
            target_prob = float("nan")
    cls = _class_ints(target)
    tasks = [(kind, n, seed, i, size, cls) for i, size in _batch_plan(trials)]
    hits = sum(_map_tasks(tasks, workers))
    return _make_result(hits, hits, trials, seed, target_prob)


def estimate_region_stats(
    n: int, trials: int, seed: int, workers: int = 1
) -> dict[str, EstimatorResult]:
    """Monte Carlo means of h2/l0/l1/l2/le against their closed forms."""
    tasks = [("region_stats", n, seed, i, size, None) for i, size in _batch_plan(trials)]
    sums = {k: 0.0 for k in ("h2", "l0", "l1", "l2", "le")}
    sqs = dict(sums)
    for result in _map_tasks(tasks, workers):
        for k, (s, sq) in result.items():
            sums[k] += s
            sqs[k] += sq
    return {
        k: _make_result(sums[k], sqs[k], trials, seed, closed_form(k, n))
        for k in sums
    }


def interlacing_failures(n: int, trials: int, seed: int, workers: int = 1) -> int:
    """Number of sampled configurations whose signature fails to interlace."""
    tasks = [("interlacing", n, seed, i, size, None) for i, size in _batch_plan(trials)]
    return sum(_map_tasks(tasks, workers))


@dataclass(frozen=True)
class TransferComparison:
    k: int
    exp_model: EstimatorResult
    circle_model: EstimatorResult
    z_between: float


@dataclass(frozen=True)
class TransferReport:
    n: int
    trials: int
    seed: int
    comparisons: tuple[TransferComparison, ...]
    total_length_mean: float
    total_length_se: float
    total_length_target: float


def transfer_check(n: int, trials: int, seed: int, workers: int = 1) -> TransferReport:
    """Compare expected type-k lengths across the two models and the closed form.

    The exponential-model estimator averages (unnormalized type-k length)/(2n),
    which the transfer identity equates with the unit-circle expectation.
    Internally uses seeds seed+1 (circle) and seed+2 (exponential).
    """
    circle = estimate_region_stats(n, trials, seed + 1, workers)
    tasks = [("exp_lengths", n, seed + 2, i, size, None) for i, size in _batch_plan(trials)]
    sums = {f"l{k}": 0.0 for k in (0, 1, 2)}
    sums["total"] = 0.0
    sqs = dict(sums)
    for result in _map_tasks(tasks, workers):
        for key, (s, sq) in result.items():
            sums[key] += s
            sqs[key] += sq
    comparisons = []
    for k in (0, 1, 2):
        exp_res = _make_result(
            sums[f"l{k}"], sqs[f"l{k}"], trials, seed + 2, closed_form(f"l{k}", n)
        )
        circ_res = circle[f"l{k}"]
        comparisons.append(
            TransferComparison(
                k=k, exp_model=exp_res, circle_model=circ_res, z_between=z_between(exp_res, circ_res)
            )
        )
    total = _make_result(sums["total"], sqs["total"], trials, seed + 2, 2 * n)
    return TransferReport(
        n=n,
        trials=trials,
        seed=seed,
        comparisons=tuple(comparisons),
        total_length_mean=total.estimate,
        total_length_se=total.std_error,
        total_length_target=2 * n,
    )


@dataclass(frozen=True)
class PathReport:
    """Averaged partial region statistics on a t-grid.

    ``region_fraction[k][j]`` is the mean fraction of the 2n regions that
    have type k and lie entirely in [0, t_j]; ``length_fraction[k][j]`` the
    mean total length of those regions.  The large-n limits are
    (t/4, t/2, t/4) and (t/8, t/2, 3t/8) respectively.
    """

    n: int
    trials: int
    seed: int
    t_grid: tuple[float, ...]
    region_fraction: tuple[tuple[float, ...], ...]
    length_fraction: tuple[tuple[float, ...], ...]


def _boundaries_single(p: np.ndarray) -> np.ndarray:
    mid = np.empty_like(p)
    mid[:-1] = (p[:-1] + p[1:]) / 2
    mid[-1] = (1 + p[-1]) / 2
    anti = mid + 0.5
    anti[anti >= 1] -= 1
    return np.sort(np.concatenate([mid, anti]))


def equidistribution_paths(
    n: int, t_grid: Sequence[float], trials: int, seed: int
) -> PathReport:
    grid = np.asarray(t_grid, dtype=np.float64)
    h_acc = np.zeros((3, grid.size))
    l_acc = np.zeros((3, grid.size))
    m = 2 * n
    for i in range(trials):
        rng = batch_rng(seed, i)
        p = np.sort(rng.random(n))
        p -= p[0]
        bnd = _boundaries_single(p)
        regions = np.searchsorted(bnd, p, side="right") % m
        w = np.zeros(m, dtype=np.uint8)
        w[regions] = 1
        types = w + np.roll(w, -n)
        lengths = np.empty(m)
        lengths[1:] = np.diff(bnd)
        lengths[0] = 1 - bnd[-1] + bnd[0]
        # the region through position 0 is only contained at t = 1
        ends = np.concatenate([[1.0], bnd[1:]])
        for k in (0, 1, 2):
            mask = types == k
            order = np.argsort(ends[mask])
            ek = ends[mask][order]
            cum = np.concatenate([[0.0], np.cumsum(lengths[mask][order])])
            idx = np.searchsorted(ek, grid, side="right")
            h_acc[k] += idx / m
            l_acc[k] += cum[idx]
    h_acc /= trials
    l_acc /= trials
    return PathReport(
        n=n,
        trials=trials,
        seed=seed,
        t_grid=tuple(float(t) for t in grid),
        region_fraction=tuple(tuple(float(x) for x in row) for row in h_acc),
        length_fraction=tuple(tuple(float(x) for x in row) for row in l_acc),
    )


def max_spacing_check(n: int, trials: int, seed: int) -> EstimatorResult:
    """Mean of n * (largest gap) / log n for n uniform points on [0, 1/2].

    The statistic concentrates at 1/2 as n grows (slowly; expect a loose
    band at desk scale).
    """
    total = 0.0
    total_sq = 0.0
    for i in range(trials):
        rng = batch_rng(seed, i)
        u = np.sort(rng.random(n)) / 2
        stat = n * float(np.diff(u).max()) / math.log(n)
        total += stat
        total_sq += stat * stat
    return _make_result(total, total_sq, trials, seed, 0.5)


def estimate_exp_below_erlangs(
    k: int, l: int, trials: int, seed: int
) -> EstimatorResult:
    """Monte Carlo counterpart of :func:`exp_below_erlangs_prob`.

    Erlang variables are sampled as sums of independent unit exponentials.
    """
    hits = 0
    for i, size in _batch_plan(trials):
        rng = batch_rng(seed, i)
        x = rng.standard_exponential(size)
        u = rng.standard_exponential((size, k)).sum(axis=1)
        v = rng.standard_exponential((size, l)).sum(axis=1)
        hits += int(((x < u) & (x < v)).sum())
    return _make_result(hits, hits, trials, seed, exp_below_erlangs_prob(k, l))
