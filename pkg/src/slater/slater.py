"""Degree-sequence lower bounds on domination parameters.

All three numbers are minimal prefix lengths of the non-increasing degree
sequence ``d_1 >= ... >= d_n``:

* Slater number ``sl``: least ``s`` with ``sum_{i<=s} (d_i + 1) >= n``
  (lower bound on the domination number).
* total Slater number ``sl_t``: least ``s`` with ``sum_{i<=s} d_i >= n``
  (lower bound on the total domination number).
* connected order-sum number ``ord_c``: least ``s`` with
  ``sum_{i<=s} d_i >= n - s + 2``.
* connected domination degree bound: least ``s`` with
  ``sum_{i<=s} d_i >= n + s - 2``.  A connected dominating set of size
  ``s`` spans at least ``s - 1`` edges and sends one edge to each of the
  other ``n - s`` vertices, so this one is a lower bound on the connected
  domination number of a connected graph; on trees it is exact.  ``ord_c``
  as written can exceed it (stars give 2 against 1).

``sl_t`` and ``ord_c`` may not exist; such cases return ``None`` rather
than raising, so sweeps over arbitrary corpora never abort.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, InputError, degree_sequence


def _checked(d: Sequence[int]) -> Sequence[int]:
    if len(d) == 0:
        raise InputError("empty degree sequence")
    n = len(d)
    if any(not 0 <= x < n for x in d):
        raise InputError(f"degrees must lie in 0..{n - 1}")
    if any(a < b for a, b in zip(d, d[1:])):
        raise InputError("degree sequence must be non-increasing")
    return d


def slater_number(d: Sequence[int]) -> int:
    d = _checked(d)
    n = len(d)
    total = 0
    for s, di in enumerate(d, 1):
        total += di + 1
        if total >= n:
            return s
    raise AssertionError("unreachable: the full sum is at least n")


def total_slater_number(d: Sequence[int]) -> int | None:
    d = _checked(d)
    n = len(d)
    total = 0
    for s, di in enumerate(d, 1):
        total += di
        if total >= n:
            return s
    return None


def _least_prefix(d: Sequence[int], target) -> int | None:
    total = 0
    for s, di in enumerate(d, 1):
        total += di
        if total >= target(s):
            return s
    return None


def connected_order_sum(d: Sequence[int]) -> int | None:
    d = _checked(d)
    n = len(d)
    return _least_prefix(d, lambda s: n - s + 2)


def connected_domination_bound(d: Sequence[int]) -> int | None:
    d = _checked(d)
    n = len(d)
    return _least_prefix(d, lambda s: n + s - 2)


@dataclass(frozen=True)
class SlaterReport:
    slater: int
    total_slater: int | None
    ord_c: int | None
    connected_bound: int | None
    prefix_sums: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "slater": self.slater,
            "total_slater": self.total_slater,
            "ord_c": self.ord_c,
            "connected_bound": self.connected_bound,
            "prefix_sums": list(self.prefix_sums),
        }


def slater_report(g: Graph | Sequence[int]) -> SlaterReport:
    """Every bound plus the degree prefix sums ``d_1 + ... + d_s``."""
    d = degree_sequence(g) if isinstance(g, Graph) else _checked(g)
    sums, total = [], 0
    for di in d:
        total += di
        sums.append(total)
    return SlaterReport(
        slater=slater_number(d),
        total_slater=total_slater_number(d),
        ord_c=connected_order_sum(d),
        connected_bound=connected_domination_bound(d),
        prefix_sums=tuple(sums),
    )


def slater_of(g: Graph) -> int:
    return slater_number(degree_sequence(g))
