"""Brute-force ground truth for representation sets.

Everything here is defined directly from the counting definition: r(j) is
the number of ways to write j as a nonnegative combination of the
denominations.  The closed forms and generating functions elsewhere in the
package are always checked against this module.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from frobgen import dp
from frobgen.errors import (
    BoundTooLarge,
    EmptyList,
    IncompleteSet,
    Indeterminate,
    InfiniteSet,
    NonPositive,
    NotCoprime,
)
from frobgen.report import ORACLE, StatReport

DEFAULT_MAX_BOUND = 10_000_000
MAX_BOUND_ENV = "FROBGEN_MAX_BOUND"


def max_bound_ceiling() -> int:
    """Memory guard for table construction; override via FROBGEN_MAX_BOUND."""
    raw = os.environ.get(MAX_BOUND_ENV)
    return int(raw) if raw else DEFAULT_MAX_BOUND


@dataclass(frozen=True)
class Params:
    """Validated denominations: positive integers with overall gcd 1, sorted.

    Repeated values are permitted and change the counts (each coin slot is
    its own coordinate in a representation tuple).
    """

    denominations: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.denominations:
            raise EmptyList()
        for a in self.denominations:
            if not isinstance(a, int) or a < 1:
                raise NonPositive(a)
        if list(self.denominations) != sorted(self.denominations):
            raise ValueError("denominations must be sorted ascending")
        g = 0
        for a in self.denominations:
            g = gcd(g, a)
        if g != 1:
            raise NotCoprime(g)

    @property
    def n(self) -> int:
        return len(self.denominations)

    @property
    def smallest(self) -> int:
        return self.denominations[0]

    @property
    def largest(self) -> int:
        return self.denominations[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.denominations)


def validate_params(raw: Sequence[int]) -> Params:
    """Normalize (sort) and validate a raw denomination list."""
    if not raw:
        raise EmptyList()
    for a in raw:
        if not isinstance(a, int) or a < 1:
            raise NonPositive(a)
    return Params(tuple(sorted(raw)))


@dataclass(frozen=True)
class RepTable:
    """Dense exact representation counts for 0 <= j <= bound."""

    params: Params
    counts: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.counts) - 1

    def count(self, j: int) -> int:
        return self.counts[j]


def rep_table(
    params: Params,
    bound: int,
    *,
    max_bound: int | None = None,
    backend: str | None = None,
) -> RepTable:
    """Exact denumerant table; raises BoundTooLarge past the memory ceiling."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    ceiling = max_bound_ceiling() if max_bound is None else max_bound
    if bound > ceiling:
        raise BoundTooLarge(bound, ceiling)
    counts = dp.rep_counts(params.denominations, bound, backend=backend)
    return RepTable(params, tuple(counts))


@dataclass(frozen=True)
class GapSet:
    """The integers with exactly (or at most) k representations.

    `complete` is True only when a termination certificate proves no larger
    element exists; maxima are refused without it.
    """

    params: Params
    k: int
    elements: tuple[int, ...]
    complete: bool

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("elements must be strictly increasing")

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def maximum(self) -> int | None:
        """Largest element (None when empty); requires a complete set."""
        if not self.complete:
            raise IncompleteSet(
                "maximum requested of a set not proven complete"
            )
        return self.elements[-1] if self.elements else None

    def power_sum(self, m: int) -> int:
        return sum(j**m for j in self.elements)

    def to_json(self) -> str:
        return json.dumps(
            {
                "params": list(self.params.denominations),
                "k": self.k,
                "complete": self.complete,
                "elements": [str(j) for j in self.elements],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> GapSet:
        data = json.loads(text)
        return cls(
            params=Params(tuple(data["params"])),
            k=data["k"],
            elements=tuple(int(e) for e in data["elements"]),
            complete=data["complete"],
        )

    def to_csv(self) -> str:
        """One element per line."""
        return "".join(f"{j}\n" for j in self.elements)


def _find_window(counts: Sequence[int], width: int, k: int) -> int | None:
    """Start of the first run of `width` consecutive counts all > k.

    Such a window certifies that every j >= start has more than k
    representations: adding copies of the smallest denomination never
    decreases the count, and every larger j is reachable from the window.
    """
    run = 0
    for j, c in enumerate(counts):
        if c > k:
            run += 1
            if run == width:
                return j - width + 1
        else:
            run = 0
    return None


def _single_coin_set(params: Params, k: int, at_most: bool) -> GapSet:
    # One denomination forces a_1 = 1 and r(j) = 1 for every j >= 0, so the
    # window criterion can never certify k >= 1; settle analytically.
    infinite = k >= 1 if at_most else k == 1
    if infinite:
        raise InfiniteSet(
            f"every j >= 0 has exactly 1 representation; the requested set is infinite (k={k})"
        )
    return GapSet(params, k, (), complete=True)


def _enumerate(
    params: Params,
    k: int,
    bound: int | None,
    at_most: bool,
    max_bound: int | None,
) -> GapSet:
    if k < 0:
        raise ValueError("k must be >= 0")
    pred = (lambda c: c <= k) if at_most else (lambda c: c == k)
    width = params.smallest

    if bound is not None:
        table = rep_table(params, bound, max_bound=max_bound)
        window = _find_window(table.counts, width, k)
        elements = tuple(j for j, c in enumerate(table.counts) if pred(c))
        return GapSet(params, k, elements, complete=window is not None)

    if params.n == 1:
        return _single_coin_set(params, k, at_most)

    cap = max_bound_ceiling() if max_bound is None else max_bound
    b = (k + 1) * params.smallest * params.largest
    while True:
        if b > cap:
            raise Indeterminate(cap)
        table = rep_table(params, b, max_bound=cap)
        window = _find_window(table.counts, width, k)
        if window is not None:
            elements = tuple(
                j for j in range(window) if pred(table.counts[j])
            )
            return GapSet(params, k, elements, complete=True)
        b *= 2


def enumerate_exact_k(
    params: Params,
    k: int,
    bound: int | None = None,
    *,
    max_bound: int | None = None,
) -> GapSet:
    """All j with exactly k representations.

    With a bound: everything up to the bound, flagged complete only if the
    termination window also occurred.  Without a bound: grow the table
    geometrically until a window of a_1 consecutive counts all exceed k,
    which proves the set has been seen in full.
    """
    return _enumerate(params, k, bound, at_most=False, max_bound=max_bound)


def enumerate_at_most_k(
    params: Params,
    k: int,
    bound: int | None = None,
    *,
    max_bound: int | None = None,
) -> GapSet:
    """All j with at most k representations; same termination criterion."""
    return _enumerate(params, k, bound, at_most=True, max_bound=max_bound)


def oracle_stats(
    gap_set: GapSet,
    m: int = 1,
    stats: Sequence[str] = ("g", "c", "s^m"),
) -> list[StatReport]:
    """Exact max / cardinality / power sum reports for an enumerated set.

    Maxima require a complete set (IncompleteSet otherwise); counts and
    sums are over the elements as given.
    """
    reports: list[StatReport] = []
    p = gap_set.params.denominations
    for name in stats:
        if name == "g":
            reports.append(
                StatReport("g", p, gap_set.k, gap_set.maximum, provenance=ORACLE)
            )
        elif name == "c":
            reports.append(
                StatReport("c", p, gap_set.k, len(gap_set), provenance=ORACLE)
            )
        elif name in ("s", "s^m"):
            value = gap_set.power_sum(m)
            if m == 1:
                reports.append(StatReport("s", p, gap_set.k, value, provenance=ORACLE))
            else:
                reports.append(
                    StatReport("s^m", p, gap_set.k, value, m=m, provenance=ORACLE)
                )
        else:
            raise ValueError(f"unknown statistic {name!r}")
    return reports
