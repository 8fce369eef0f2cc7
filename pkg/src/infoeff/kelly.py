"""Monte Carlo betting engine and brute-force strategy-search oracle.

Realizes the limit definition of growth, log2(V_n/V_0)/n, and verifies the
closed forms H(X)-H(X|Y) (fair quotes) and H(q)-H(X|Y) (arbitrary quotes)
empirically. Betting is full-investment proportional: each round the whole
bankroll is split across outcomes (fractions sum to 1), which is the growth
optimum in a no-cost complete market with sum(q) = 1 — every outcome pays,
so cash reserves only slow growth down.

Wealth is tracked in log2-space throughout; raw wealth is never
materialized (a million rounds at ~1 bit/round overflows any fixed-width
real).

RNG: NumPy PCG64, seeded through SeedSequence((seed, run_index)) so each
run owns an independent, reproducible stream. Identical (params, strategy,
rounds, seed, run_index) reproduce the result bit-for-bit.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from .efficiency import efficiency_with_quotes
from .errors import (
    DomainViolation,
    LabelMismatch,
    UnsupportedAlphabet,
    UnsupportedOutcome,
)
from .probability import (
    Channel,
    Distribution,
    JointSystem,
    bayes_posterior,
    joint_from_prior_channel,
)


@dataclass(frozen=True, eq=False)
class MarketParams:
    """A betting market: true prior over outcomes, signal channel, quotes.

    Quotes are anticipated probabilities q with sum(q) = 1 (enforced by the
    Distribution type); payouts are alpha_x = 1/q_x. Requires q(x) > 0 for
    every outcome with positive prior probability.
    """

    prior: Distribution
    channel: Channel
    quotes: Distribution

    def __post_init__(self):
        if self.channel.input_labels != self.prior.labels:
            raise LabelMismatch(
                f"channel inputs {self.channel.input_labels} != "
                f"prior labels {self.prior.labels}"
            )
        if self.quotes.labels != self.prior.labels:
            raise LabelMismatch(
                f"quote labels {self.quotes.labels} != prior labels {self.prior.labels}"
            )
        if np.any((self.prior.probs > 0.0) & (self.quotes.probs == 0.0)):
            raise UnsupportedOutcome(
                "q(x) = 0 for an outcome with p(x) > 0: payout is undefined"
            )

    def joint(self) -> JointSystem:
        return joint_from_prior_channel(self.prior, self.channel)


@dataclass(frozen=True, eq=False)
class BettingStrategy:
    """Per-signal wealth allocation: signal label -> Distribution over outcomes.

    The fraction staked on each outcome; fractions sum to 1 (enforced by the
    Distribution type).
    """

    allocations: Mapping[str, Distribution]

    def __post_init__(self):
        object.__setattr__(
            self, "allocations", MappingProxyType(dict(self.allocations))
        )


@dataclass(frozen=True)
class SimulationResult:
    """Outcome of one simulated betting run.

    final_log2_wealth is log2(V_n/V_0); mean_growth = final_log2_wealth/rounds
    in bits per round. bankrupt_round is the first 1-based round in which the
    strategy staked nothing on the realized outcome (wealth hit zero; the log
    values are -inf from there on), or None.
    """

    rounds: int
    seed: int
    run_index: int
    final_log2_wealth: float
    mean_growth: float
    trajectory_sample: tuple[tuple[int, float], ...] | None = None
    bankrupt_round: int | None = None


def kelly_strategy(prior: Distribution, channel: Channel) -> BettingStrategy:
    """Proportional betting on the Bayes posterior, per signal.

    This is the growth-optimal strategy for full-investment betting in a
    no-cost market, independent of the quotes. ZeroProbabilitySignal
    propagates if some signal can never occur.
    """
    return BettingStrategy(
        {y: bayes_posterior(prior, channel, y) for y in channel.output_labels}
    )


def _log2_payout_matrix(market: MarketParams, strategy: BettingStrategy) -> np.ndarray:
    """log2(allocation(y)(x) * alpha_x), shaped (n_signals, n_outcomes).

    Cells where the allocation is 0 are -inf (bankruptcy if realized).
    Outcomes with zero prior probability can never be drawn; their cells are
    zeroed to keep inf/nan out of the arithmetic.
    """
    outcomes = market.prior.labels
    signals = market.channel.output_labels
    alloc = np.empty((len(signals), len(outcomes)))
    for j, y in enumerate(signals):
        if y not in strategy.allocations:
            raise LabelMismatch(f"strategy has no allocation for signal {y!r}")
        dist = strategy.allocations[y]
        if dist.labels != outcomes:
            raise LabelMismatch(
                f"allocation labels {dist.labels} != outcome labels {outcomes}"
            )
        alloc[j] = dist.probs
    with np.errstate(divide="ignore"):
        log2_pay = np.log2(alloc) - np.log2(market.quotes.probs)[None, :]
    log2_pay[:, market.prior.probs == 0.0] = 0.0
    return log2_pay


def simulate(
    market: MarketParams,
    strategy: BettingStrategy,
    rounds: int,
    seed: int,
    run_index: int = 0,
    trajectory_points: int = 0,
) -> SimulationResult:
    """Run one betting simulation and return the realized log2 growth.

    Each round draws an outcome from the prior and a signal from the
    channel row of that outcome (one uniform variate per draw, in that
    order), then adds log2(allocation(y)(x) * alpha_x) to the log wealth.
    """
    if rounds < 1:
        raise DomainViolation(f"rounds must be >= 1, got {rounds}")
    if seed < 0 or run_index < 0:
        raise DomainViolation("seed and run_index must be nonnegative")
    log2_pay = _log2_payout_matrix(market, strategy)

    rng = np.random.default_rng(np.random.SeedSequence((seed, run_index)))
    cum_prior = np.cumsum(market.prior.probs)
    xs = np.searchsorted(cum_prior, rng.random(rounds), side="right")
    xs = np.minimum(xs, len(cum_prior) - 1)
    u_signal = rng.random(rounds)
    ys = np.empty(rounds, dtype=np.intp)
    for i in range(len(market.prior)):
        chosen = xs == i
        if not np.any(chosen):
            continue
        cum_row = np.cumsum(market.channel.rows[i])
        ys[chosen] = np.minimum(
            np.searchsorted(cum_row, u_signal[chosen], side="right"),
            len(cum_row) - 1,
        )

    per_round = log2_pay[ys, xs]
    bankrupt_round = None
    ruined = np.isneginf(per_round)
    if np.any(ruined):
        bankrupt_round = int(np.argmax(ruined)) + 1
    log2_wealth = np.cumsum(per_round)
    final = float(log2_wealth[-1])
    mean = final / rounds

    trajectory = None
    if trajectory_points > 0:
        idx = np.unique(
            np.linspace(1, rounds, min(trajectory_points, rounds)).astype(int)
        )
        trajectory = tuple((int(i), float(log2_wealth[i - 1])) for i in idx)

    return SimulationResult(
        rounds=rounds,
        seed=seed,
        run_index=run_index,
        final_log2_wealth=final,
        mean_growth=mean,
        trajectory_sample=trajectory,
        bankrupt_round=bankrupt_round,
    )


def expected_log2_growth(market: MarketParams, strategy: BettingStrategy) -> float:
    """Exact expected log2 growth per round of a fixed strategy, in bits.

    sum_{x,y} p(x,y) log2(allocation(y)(x) * alpha_x), computed analytically
    (no simulation). Returns -inf if the strategy stakes nothing on some
    outcome that can occur together with its signal.
    """
    log2_pay = _log2_payout_matrix(market, strategy)
    joint = market.prior.probs[:, None] * market.channel.rows  # (n_x, n_y)
    mask = joint > 0.0
    if np.any(mask & np.isneginf(log2_pay.T)):
        return float("-inf")
    return float(np.sum(joint[mask] * log2_pay.T[mask]))


def grid_search_optimal(
    market: MarketParams, resolution: int
) -> tuple[BettingStrategy, float]:
    """Exhaustive search for the best fixed strategy on a simplex grid.

    Binary outcome alphabets only (UnsupportedAlphabet otherwise); the
    fraction staked on the first outcome ranges over {0, 1/resolution, ...,
    1} per signal. Expected log2 growth is a sum of per-signal terms, so the
    per-signal argmax equals the argmax over the full product grid; each
    signal is searched independently (same result, linear cost).

    Returns (argmax strategy, exact expected growth in bits/round). This is
    an independent oracle: it never consults posteriors or entropy formulas.
    """
    if len(market.prior) != 2:
        raise UnsupportedAlphabet(
            f"grid search supports binary outcomes only, got {len(market.prior)}"
        )
    if resolution < 100:
        raise DomainViolation(f"resolution must be >= 100, got {resolution}")

    fractions = np.linspace(0.0, 1.0, resolution + 1)
    with np.errstate(divide="ignore"):
        log2_f = np.log2(fractions)
        log2_1mf = np.log2(1.0 - fractions)
    log2_alpha = -np.log2(market.quotes.probs)

    joint = market.prior.probs[:, None] * market.channel.rows
    total = 0.0
    allocations = {}
    for j, y in enumerate(market.channel.output_labels):
        p0, p1 = float(joint[0, j]), float(joint[1, j])
        value = np.zeros_like(fractions)
        if p0 > 0.0:
            value += p0 * (log2_f + log2_alpha[0])
        if p1 > 0.0:
            value += p1 * (log2_1mf + log2_alpha[1])
        best = int(np.argmax(value))
        f = float(fractions[best])
        allocations[y] = Distribution(market.prior.labels, (f, 1.0 - f))
        total += float(value[best])
    return BettingStrategy(allocations), total


def kelly_growth_target(market: MarketParams) -> float:
    """Closed-form optimal growth H(q) - H(X|Y) in bits/round.

    Convenience wrapper used by the CLI to print the simulation target next
    to the empirical growth.
    """
    report = efficiency_with_quotes(market.joint(), market.quotes)
    assert report.g_max_q is not None
    return report.g_max_q
