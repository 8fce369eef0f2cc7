"""Shannon quantities in bits (log base 2) on finite discrete systems.

All values are plain floats in bits. The convention 0*log2(0) = 0 applies
throughout. Negative results from floating-point cancellation are clamped
to 0 only when within 1e-12 of zero; anything more negative raises
NumericalInconsistency, separating rounding from bugs.

Pure functions on immutable inputs; unconditionally thread-safe.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import (
    LabelMismatch,
    NonpositiveQuote,
    NumericalInconsistency,
    UnsupportedOutcome,
)
from .probability import Distribution, JointSystem, marginal_outcome

CANCEL_TOL = 1e-12


def clamp_nonneg(value: float, what: str) -> float:
    """Clamp tiny negative cancellation noise to 0; reject real negatives."""
    if value < 0.0:
        if value < -CANCEL_TOL:
            raise NumericalInconsistency(f"{what} = {value!r} < -{CANCEL_TOL}")
        return 0.0
    return value


def _entropy_from_probs(p: np.ndarray) -> float:
    mask = p > 0.0
    terms = np.zeros_like(p)
    terms[mask] = p[mask] * np.log2(p[mask])
    return float(-np.sum(terms))


def _cross_entropy_from_probs(p: np.ndarray, q: np.ndarray) -> float:
    mask = p > 0.0
    terms = np.zeros_like(p)
    terms[mask] = p[mask] * np.log2(q[mask])
    return float(-np.sum(terms))


def _conditional_entropy_from_matrix(joint: np.ndarray) -> float:
    # -sum_y p(y) sum_x p(x|y) log2 p(x|y); zero-probability signals
    # contribute nothing. Accumulated signal by signal so that degenerate
    # slices stay bit-exact against the marginal entropy.
    total = 0.0
    for j in range(joint.shape[1]):
        column = joint[:, j]
        p_y = float(np.sum(column))
        if p_y <= 0.0:
            continue
        total += p_y * _entropy_from_probs(column / p_y)
    return total


def entropy(dist: Distribution) -> float:
    """H(X) = -sum_x p(x) log2 p(x), in bits."""
    return _entropy_from_probs(dist.probs)


def conditional_entropy(joint: JointSystem) -> float:
    """H(X|Y) = -sum_y p(y) sum_x p(x|y) log2 p(x|y), in bits."""
    return _conditional_entropy_from_matrix(joint.joint)


def mutual_information(joint: JointSystem) -> float:
    """M(X, Y) = H(X) - H(X|Y), in bits, clamped at -1e-12 to 0."""
    value = entropy(marginal_outcome(joint)) - conditional_entropy(joint)
    return clamp_nonneg(value, "mutual information")


def cross_entropy(p: Distribution, q: Distribution) -> float:
    """H(q) = -sum_x p(x) log2 q(x), in bits.

    Requires identical alphabets and q(x) > 0 wherever p(x) > 0;
    otherwise the cross-entropy is infinite (UnsupportedOutcome).
    """
    if q.labels != p.labels:
        raise LabelMismatch(f"quote labels {q.labels} != outcome labels {p.labels}")
    if np.any((p.probs > 0.0) & (q.probs == 0.0)):
        raise UnsupportedOutcome(
            "q(x) = 0 for an outcome with p(x) > 0: cross-entropy is infinite"
        )
    return _cross_entropy_from_probs(p.probs, q.probs)


def quote_entropy(p: Distribution, alphas: Sequence[float]) -> float:
    """sum_x p(x) log2 alpha_x for a payout-quote vector, in bits.

    Equals cross_entropy(p, q) when alpha_x = 1/q_x. Quotes on
    zero-probability outcomes are ignored; a nonpositive quote on a
    supported outcome raises NonpositiveQuote.
    """
    a = np.asarray(alphas, dtype=float)
    if a.ndim != 1 or len(a) != len(p):
        raise LabelMismatch(f"{len(p)} outcomes but {a.shape} quotes")
    mask = p.probs > 0.0
    if np.any(a[mask] <= 0.0):
        raise NonpositiveQuote(
            f"quote must be positive on every supported outcome, got {a.tolist()}"
        )
    terms = np.zeros_like(p.probs)
    terms[mask] = p.probs[mask] * np.log2(a[mask])
    return float(np.sum(terms))
