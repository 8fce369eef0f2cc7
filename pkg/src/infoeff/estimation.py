"""Empirical efficiency from sampled (signal, outcome) records.

The estimator is the plug-in (maximum likelihood) joint with optional
additive smoothing, default 0.5 (Jeffreys-style): cell = (count + s) /
(N + s*|X|*|Y|). Plug-in entropy biases low at small N, so efficiency can
bias low too; reports carry the sample size and a small-sample flag below
N = 10*|X|*|Y| rather than hiding the estimator's character.

Uncertainty comes from a seeded 95% percentile bootstrap (default 1000
resamples). Resampling records with replacement is performed as one
multinomial draw over the empirical cell counts per resample — the
bootstrap statistic depends on the records only through the contingency
table, so the two are distributionally identical and the multinomial form
is orders of magnitude faster. Resample r uses its own RNG stream derived
from (seed, r), so results are reproducible and order-deterministic no
matter how resamples would be scheduled.

Input CSV format: mandatory header line ``signal,outcome``; one record per
line; labels are arbitrary non-empty tokens without commas; comment lines
start with '#'. Directive comments ``# signals: a,b`` / ``# outcomes: h,t``
optionally declare the alphabets (and their order); otherwise alphabets are
the sorted observed labels.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .efficiency import STRONG, EfficiencyReport, efficiency, efficiency_with_quotes
from .errors import (
    DegenerateSystem,
    DomainViolation,
    EmptyInput,
    ParseError,
    ResamplesBelowMinimum,
)
from .measures import (
    _conditional_entropy_from_matrix,
    _cross_entropy_from_probs,
    _entropy_from_probs,
)
from .probability import Distribution, JointSystem, _check_labels

MIN_RESAMPLES = 100
DEFAULT_SMOOTHING = 0.5
DEFAULT_RESAMPLES = 1000

HEADER = ("signal", "outcome")


@dataclass(frozen=True)
class SampleSet:
    """Observed (signal, outcome) records plus their alphabets.

    Alphabets may be declared wider than the observed support (so smoothing
    can spread mass over unseen cells). Optional quote metadata rides along
    for efficiency-with-quotes estimation.
    """

    records: tuple[tuple[str, str], ...]
    signal_labels: tuple[str, ...]
    outcome_labels: tuple[str, ...]
    quotes: Distribution | None = None

    def __post_init__(self):
        if not self.records:
            raise EmptyInput("sample set has no records")
        _check_labels(self.signal_labels, "signal")
        _check_labels(self.outcome_labels, "outcome")

    def __len__(self) -> int:
        return len(self.records)

    def counts(self) -> np.ndarray:
        """Contingency table of raw counts, outcomes x signals."""
        x_index = {lbl: i for i, lbl in enumerate(self.outcome_labels)}
        y_index = {lbl: j for j, lbl in enumerate(self.signal_labels)}
        table = np.zeros((len(self.outcome_labels), len(self.signal_labels)))
        for signal, outcome in self.records:
            table[x_index[outcome], y_index[signal]] += 1.0
        return table


@dataclass(frozen=True)
class EstimateReport:
    """Point efficiency report with a bootstrap confidence interval.

    ci_low/ci_high bound `point.eff`; the quote-efficiency interval is
    present when quotes were supplied. The percentile interval is widened
    (if necessary) to contain the point estimate and clamped to [0, 1].
    """

    point: EfficiencyReport
    ci_low: float
    ci_high: float
    n_samples: int
    smoothing: float
    resamples: int
    seed: int
    small_sample: bool
    eff_q_ci_low: float | None = None
    eff_q_ci_high: float | None = None


def _parse_directive(body: str, line_no: int) -> tuple[str, tuple[str, ...]] | None:
    head, sep, rest = body.partition(":")
    key = head.strip().lower()
    if not sep or key not in ("signals", "outcomes"):
        return None
    labels = tuple(tok.strip() for tok in rest.split(","))
    if any(lbl == "" for lbl in labels):
        raise ParseError(line_no, 1, f"empty label in '{key}' directive")
    return key, labels


def read_samples(source: Iterable[str]) -> SampleSet:
    """Parse a (signal, outcome) CSV stream into a SampleSet.

    `source` is any iterable of text lines (an open file works). Raises
    ParseError with the offending line/column, or EmptyInput when the header
    is present but no records follow.
    """
    rows: list[tuple[int, str, str]] = []
    declared: dict[str, tuple[str, ...]] = {}
    header_seen = False
    line_no = 0
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if line == "":
            continue
        if line.startswith("#"):
            directive = _parse_directive(line.lstrip("#"), line_no)
            if directive is not None:
                declared[directive[0]] = directive[1]
            continue
        fields = [f.strip() for f in line.split(",")]
        if not header_seen:
            if len(fields) != 2:
                raise ParseError(line_no, 1, "header must have exactly 2 columns")
            for col, (got, want) in enumerate(zip(fields, HEADER), start=1):
                if got != want:
                    raise ParseError(line_no, col, f"unknown column {got!r} (expected {want!r})")
            header_seen = True
            continue
        if len(fields) != 2:
            raise ParseError(line_no, 1, f"expected 2 fields, got {len(fields)}")
        signal, outcome = fields
        if signal == "":
            raise ParseError(line_no, 1, "empty signal label")
        if outcome == "":
            raise ParseError(line_no, 2, "empty outcome label")
        rows.append((line_no, signal, outcome))

    if not header_seen:
        raise ParseError(1, 1, "missing header line 'signal,outcome'")
    if not rows:
        raise EmptyInput(f"no records after the header (line {line_no or 1})")

    signal_labels = declared.get("signals") or tuple(sorted({s for _, s, _ in rows}))
    outcome_labels = declared.get("outcomes") or tuple(sorted({o for _, _, o in rows}))
    signal_set, outcome_set = set(signal_labels), set(outcome_labels)
    for rec_line, signal, outcome in rows:
        if signal not in signal_set:
            raise ParseError(rec_line, 1, f"signal {signal!r} not in declared alphabet")
        if outcome not in outcome_set:
            raise ParseError(rec_line, 2, f"outcome {outcome!r} not in declared alphabet")
    return SampleSet(
        tuple((s, o) for _, s, o in rows), signal_labels, outcome_labels
    )


def _smoothed_joint(counts: np.ndarray, n: int, smoothing: float) -> np.ndarray:
    return (counts + smoothing) / (n + smoothing * counts.size)


def estimate_joint(samples: SampleSet, smoothing: float = DEFAULT_SMOOTHING) -> JointSystem:
    """Plug-in joint estimate with additive smoothing.

    cell(x, y) = (count(x, y) + smoothing) / (N + smoothing * |X| * |Y|).
    With smoothing 0 an unobserved cell is exactly 0.
    """
    if smoothing < 0.0:
        raise DomainViolation(f"smoothing must be >= 0, got {smoothing!r}")
    joint = _smoothed_joint(samples.counts(), len(samples), smoothing)
    return JointSystem(samples.outcome_labels, samples.signal_labels, joint)


def _eff_pair_from_joint(
    joint: np.ndarray, q: np.ndarray | None
) -> tuple[float, float | None]:
    """(eff, eff_q) from a raw joint matrix; NaN where the ratio is 0/0."""
    p_x = np.sum(joint, axis=1)
    h_x = _entropy_from_probs(p_x)
    h_xy = _conditional_entropy_from_matrix(joint)
    eff = h_xy / h_x if h_x > 0.0 else float("nan")
    eff_q = None
    if q is not None:
        h_q = _cross_entropy_from_probs(p_x, q)
        eff_q = h_xy / h_q if h_q > 0.0 else float("nan")
    return eff, eff_q


def _percentile_ci(values: np.ndarray, point: float) -> tuple[float, float]:
    valid = values[~np.isnan(values)]
    if len(valid) == 0:
        lo = hi = point
    else:
        lo, hi = np.percentile(valid, [2.5, 97.5])
    lo = max(0.0, min(float(lo), point))
    hi = min(1.0, max(float(hi), point))
    return lo, hi


def estimate_efficiency(
    samples: SampleSet,
    smoothing: float = DEFAULT_SMOOTHING,
    quotes: Distribution | None = None,
    resamples: int = DEFAULT_RESAMPLES,
    seed: int = 0,
    info_set: str = STRONG,
) -> EstimateReport:
    """Point efficiency estimate with a seeded 95% percentile-bootstrap CI.

    `quotes` (or `samples.quotes` as a fallback) switches on the
    quote-efficiency fields. Raises DegenerateSystem when the estimated
    outcome marginal has zero entropy, and ResamplesBelowMinimum when
    `resamples` < 100.
    """
    if resamples < MIN_RESAMPLES:
        raise ResamplesBelowMinimum(
            f"resamples must be >= {MIN_RESAMPLES}, got {resamples}"
        )
    if seed < 0:
        raise DomainViolation("seed must be nonnegative")
    if quotes is None:
        quotes = samples.quotes

    joint = estimate_joint(samples, smoothing)
    if quotes is not None:
        point = efficiency_with_quotes(joint, quotes, info_set)
        if point.eff is None:
            raise DegenerateSystem("estimated outcome marginal has zero entropy")
    else:
        point = efficiency(joint, info_set)

    n = len(samples)
    counts = samples.counts()
    small = n < 10 * counts.size
    if small:
        warnings.warn(
            f"only {n} samples for {counts.size} cells; "
            "plug-in efficiency biases low at small N",
            stacklevel=2,
        )

    q_vec = quotes.probs if quotes is not None else None
    p_flat = (counts / n).reshape(-1)
    effs = np.empty(resamples)
    effs_q = np.empty(resamples) if quotes is not None else None
    for r in range(resamples):
        rng = np.random.default_rng(np.random.SeedSequence((seed, r)))
        resampled = rng.multinomial(n, p_flat).reshape(counts.shape)
        joint_r = _smoothed_joint(resampled.astype(float), n, smoothing)
        eff_r, eff_q_r = _eff_pair_from_joint(joint_r, q_vec)
        effs[r] = eff_r
        if effs_q is not None:
            effs_q[r] = eff_q_r

    assert point.eff is not None
    ci_low, ci_high = _percentile_ci(effs, point.eff)
    eff_q_ci = (None, None)
    if effs_q is not None:
        assert point.eff_q is not None
        eff_q_ci = _percentile_ci(effs_q, point.eff_q)

    return EstimateReport(
        point=point,
        ci_low=ci_low,
        ci_high=ci_high,
        n_samples=n,
        smoothing=float(smoothing),
        resamples=resamples,
        seed=seed,
        small_sample=small,
        eff_q_ci_low=eff_q_ci[0],
        eff_q_ci_high=eff_q_ci[1],
    )
