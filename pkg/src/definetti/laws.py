"""Exchangeable {0,1}-valued laws stored as count distributions.

Under exchangeability all sequences with the same number of ones are equally
likely, so the law of the count m = x_1 + ... + x_n determines every point
probability: P(x) = P(count = m) / C(n, m). Storing only the count law makes
non-exchangeable inputs unrepresentable.

All values are immutable and every operation is a pure function, so instances
are safe to share across concurrent callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .errors import (
    BadParamsError,
    DuplicateIndexError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NegativeWeightError,
    NotNormalizedError,
)
from .scalars import Scalar, WEIGHT_SUM_TOL, all_exact, coerce_scalar, exact_div


@dataclass(frozen=True)
class CountDistribution:
    """Law of the number of ones among ``n`` exchangeable binary variables.

    ``weights[m]`` is P(x_1 + ... + x_n = m). Weights may be exact (int or
    Fraction) or float; derived quantities inherit the mode. In exact mode the
    weights must sum to one exactly, in float mode within 1e-12.
    """

    n: int
    weights: tuple[Scalar, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise BadParamsError(f"sequence length must be a positive integer, got {self.n!r}")
        weights = tuple(coerce_scalar(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.n + 1:
            raise LengthMismatchError(
                f"need {self.n + 1} weights for n={self.n}, got {len(weights)}"
            )
        for m, w in enumerate(weights):
            if w < 0:
                raise NegativeWeightError(f"weights[{m}] = {w!r} is negative")
        total = sum(weights)
        if self.exact:
            if total != 1:
                raise NotNormalizedError(f"weights sum to {total}, expected exactly 1")
        elif abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise NotNormalizedError(f"weights sum to {total!r}, off by more than {WEIGHT_SUM_TOL}")

    @property
    def exact(self) -> bool:
        return all_exact(self.weights)


@dataclass(frozen=True)
class BinaryAssignment:
    """Prescription that certain distinct coordinates take given {0,1} values.

    ``pairs`` holds (index, value) with 1-based, pairwise distinct indices.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((i, v) for i, v in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        seen = set()
        for i, v in pairs:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise IndexOutOfRangeError(f"indices are positive integers, got {i!r}")
            if i in seen:
                raise DuplicateIndexError(f"index {i} appears twice")
            seen.add(i)
            if v not in (0, 1):
                raise BadParamsError(f"values must be 0 or 1, got {v!r}")

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def ones(self) -> int:
        return sum(v for _, v in self.pairs)


def as_assignment(obj) -> BinaryAssignment:
    """Coerce a BinaryAssignment, a mapping index->value, or pair iterable."""
    if isinstance(obj, BinaryAssignment):
        return obj
    if isinstance(obj, Mapping):
        return BinaryAssignment(tuple(obj.items()))
    return BinaryAssignment(tuple(obj))


def as_bits(x) -> tuple[int, ...]:
    """Validate and normalize a {0,1} sequence."""
    bits = tuple(x)
    for b in bits:
        if b not in (0, 1):
            raise BadParamsError(f"sequence entries must be 0 or 1, got {b!r}")
    return tuple(int(b) for b in bits)


def point_probability(d: CountDistribution, x) -> Scalar:
    """Probability of observing the exact sequence ``x`` under ``d``.

    Every one of the C(n, m) sequences with m ones carries probability
    weights[m] / C(n, m); summed over all of {0,1}^n this returns one.
    """
    bits = as_bits(x)
    if len(bits) != d.n:
        raise LengthMismatchError(f"expected a length-{d.n} sequence, got length {len(bits)}")
    m = sum(bits)
    return exact_div(d.weights[m], comb(d.n, m), d.exact)


@lru_cache(maxsize=512)
def marginalize(d: CountDistribution, k: int) -> CountDistribution:
    """Law of x_1 + ... + x_k under ``d``, for 1 <= k <= n.

    Hypergeometric contraction of the count law:
    P(count_k = j) = sum_m P(count_n = m) C(m, j) C(n-m, k-j) / C(n, k).
    Exact in rational mode; marginalize(d, n) is ``d`` itself.
    """
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= d.n:
        raise IndexOutOfRangeError(f"need 1 <= k <= {d.n}, got {k!r}")
    if k == d.n:
        return d
    n = d.n
    denom = comb(n, k)
    new_weights = []
    for j in range(k + 1):
        acc = sum(d.weights[m] * comb(m, j) * comb(n - m, k - j) for m in range(n + 1))
        new_weights.append(exact_div(acc, denom, d.exact))
    return CountDistribution(k, tuple(new_weights))


def event_probability(d: CountDistribution, assignment) -> Scalar:
    """Probability that the named coordinates take their prescribed values.

    Depends only on how many coordinates are named and how many of the
    prescribed values are one, never on which distinct indices were picked.
    An empty assignment is the sure event.
    """
    a = as_assignment(assignment)
    if a.size == 0:
        return Fraction(1) if d.exact else 1.0
    for i, _ in a.pairs:
        if i > d.n:
            raise IndexOutOfRangeError(f"index {i} exceeds sequence length {d.n}")
    dk = marginalize(d, a.size)
    return exact_div(dk.weights[a.ones], comb(a.size, a.ones), dk.exact)
