"""Search for partitions of a weighted set into constant-sum triples.

A free action of a 3-element cyclic group whose orbits average a fixed
statistic value must split the set into triples of equal statistic sum,
so such a partition is a certificate that the necessary orbit structure
exists.  The search is an exhaustive first-solution backtracking over
item indices; it reports a certificate, a proof of infeasibility (the
space was exhausted), or budget exhaustion, and never claims more.
"""

import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .errors import CoverageError, NotDivisibleByThreeError
from .matchings import (
    conjugate_matching,
    conjugate_tableau,
    enumerate_matchings,
    format_matching,
    parse_matching,
    stats,
)
from .partitions import Partition, size
from .tableaux import (
    count_formula,
    enumerate_ot,
    format_tableau,
    parse_tableau,
    weight,
)

WeightedItem = tuple[str, int]

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_TIME_BUDGET = 60.0


@dataclass
class TriplePartition:
    """Disjoint triples of item identifiers, each summing to the target."""

    triples: list[tuple[str, str, str]]
    target: int
    statistic: str = "value"


@dataclass
class SearchResult:
    """Outcome of a triple-partition search run."""

    status: str  # "certificate" | "infeasible" | "budget-exhausted"
    partition: Optional[TriplePartition]
    nodes: int
    elapsed: float
    mode: str = "sequential"
    target: int = 0
    item_count: int = 0

    @property
    def found(self) -> bool:
        return self.status == "certificate"


_STATUS_NAMES = {
    kernels.STATUS_FOUND: "certificate",
    kernels.STATUS_INFEASIBLE: "infeasible",
    kernels.STATUS_BUDGET: "budget-exhausted",
}


def _check_items(items: Sequence[WeightedItem]) -> None:
    if len(items) % 3:
        raise NotDivisibleByThreeError(
            f"{len(items)} items cannot be split into triples"
        )
    identifiers = [identifier for identifier, _ in items]
    if len(set(identifiers)) != len(identifiers):
        raise ValueError("item identifiers must be distinct")


def _mate_indices(
    items: Sequence[WeightedItem], mate: Optional[dict[str, str]]
) -> Optional[list[int]]:
    if mate is None:
        return None
    index = {identifier: i for i, (identifier, _) in enumerate(items)}
    out = []
    for identifier, _ in items:
        out.append(index[mate.get(identifier, identifier)])
    for i, j in enumerate(out):
        if out[j] != i:
            raise ValueError("mate mapping must be an involution on the item set")
    return out


def triple_partition_search(
    items: Sequence[WeightedItem],
    target: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    mate: Optional[dict[str, str]] = None,
    statistic: str = "value",
    parallel: bool = False,
) -> SearchResult:
    """Partition the items into triples of value sum `target`, if possible.

    Sequential mode is deterministic: identical input yields the
    identical certificate.  Parallel mode races the top-level branches
    across worker processes and returns the first certificate found.
    """
    _check_items(items)
    start_time = time.monotonic()
    if parallel and len(items) >= 6:
        return _parallel_search(items, target, node_budget, time_budget, mate, statistic)
    values = [value for _, value in items]
    status, triples, nodes = kernels.triple_search(
        values, target, node_budget, time_budget, _mate_indices(items, mate)
    )
    elapsed = time.monotonic() - start_time
    partition = None
    if status == kernels.STATUS_FOUND:
        partition = TriplePartition(
            [(items[i][0], items[j][0], items[k][0]) for i, j, k in triples],
            target,
            statistic,
        )
    return SearchResult(
        _STATUS_NAMES[status], partition, nodes, elapsed, "sequential", target, len(items)
    )


def _parallel_worker(
    args: tuple[list[int], int, int, float, Optional[list[int]], tuple[int, int, int]]
):
    values, target, node_budget, time_budget, mate, first = args
    i, j, k = first
    keep = [idx for idx in range(len(values)) if idx not in (i, j, k)]
    sub_values = [values[idx] for idx in keep]
    sub_mate = None
    if mate is not None:
        back = {idx: pos for pos, idx in enumerate(keep)}
        sub_mate = [back[mate[idx]] for idx in keep]
    status, triples, nodes = kernels.triple_search(
        sub_values, target, node_budget, time_budget, sub_mate
    )
    remapped = [(keep[a], keep[b], keep[c]) for a, b, c in triples]
    return status, [first] + remapped, nodes


def _parallel_search(
    items: Sequence[WeightedItem],
    target: int,
    node_budget: int,
    time_budget: float,
    mate: Optional[dict[str, str]],
    statistic: str,
) -> SearchResult:
    """Race the candidate triples containing the first item across processes."""
    start_time = time.monotonic()
    values = [value for _, value in items]
    mate_idx = _mate_indices(items, mate)
    total = sum(values)
    if total != (len(items) // 3) * target:
        return SearchResult("infeasible", None, 0, 0.0, "parallel", target, len(items))

    firsts = []
    for j in range(1, len(values)):
        for k in range(j + 1, len(values)):
            if values[0] + values[j] + values[k] != target:
                continue
            if mate_idx is not None:
                triple = {0, j, k}
                if {mate_idx[0], mate_idx[j], mate_idx[k]} != triple:
                    continue
            firsts.append((0, j, k))
    if not firsts:
        return SearchResult(
            "infeasible", None, len(values), time.monotonic() - start_time,
            "parallel", target, len(items),
        )

    workers = min(len(firsts), os.cpu_count() or 2)
    nodes_total = len(firsts)
    exhausted = False
    tasks = [
        (values, target, node_budget, time_budget, mate_idx, first)
        for first in firsts
    ]
    # Pool.__exit__ terminates still-running workers, so the first
    # certificate returns immediately instead of draining their budgets
    with multiprocessing.get_context().Pool(workers) as pool:
        for status, triples, nodes in pool.imap_unordered(_parallel_worker, tasks):
            nodes_total += nodes
            if status == kernels.STATUS_FOUND:
                partition = TriplePartition(
                    [(items[a][0], items[b][0], items[c][0]) for a, b, c in triples],
                    target,
                    statistic,
                )
                return SearchResult(
                    "certificate", partition, nodes_total,
                    time.monotonic() - start_time, "parallel", target, len(items),
                )
            if status == kernels.STATUS_BUDGET:
                exhausted = True
    status_name = "budget-exhausted" if exhausted else "infeasible"
    return SearchResult(
        status_name, None, nodes_total, time.monotonic() - start_time,
        "parallel", target, len(items),
    )


def homomesy_verify(partition: TriplePartition, items: Sequence[WeightedItem]) -> bool:
    """True when the triples cover the items exactly and share one sum.

    Raises CoverageError when the triples are not an exact cover of the
    item identifiers.
    """
    value_of = dict(items)
    if len(value_of) != len(items):
        raise ValueError("item identifiers must be distinct")
    seen: list[str] = []
    for triple in partition.triples:
        seen.extend(triple)
    if sorted(seen) != sorted(value_of):
        raise CoverageError("triples do not partition the item set")
    sums = {sum(value_of[identifier] for identifier in triple) for triple in partition.triples}
    if not sums:
        return True
    return sums == {partition.target}


def orbit_sum_target_tableaux(k: int, n: int) -> int:
    """Required weight sum of a size-3 orbit: (4n^2 + 3k^2 + 8kn + 2n + 3k) / 2."""
    numerator = 4 * n * n + 3 * k * k + 8 * k * n + 2 * n + 3 * k
    half, remainder = divmod(numerator, 2)
    if remainder:
        raise RuntimeError(f"orbit-sum numerator is odd for k={k}, n={n}")
    return half


def orbit_sum_target_matchings(n: int) -> int:
    """Required alignment sum of a size-3 orbit: C(n, 2)."""
    if n < 2:
        raise ValueError("orbit targets need n >= 2")
    return n * (n - 1) // 2


def divisibility_check(shape: Partition, n: int) -> bool:
    """True when 3 divides the closed-form walk count for this shape and n."""
    return count_formula(shape, n) % 3 == 0


def tableau_items(shape: Partition, n: int) -> list[WeightedItem]:
    """The walks to `shape` of length |shape|+2n, keyed by text form, valued by weight."""
    length = size(shape) + 2 * n
    return [
        (format_tableau(t), weight(t)) for t in enumerate_ot((), tuple(shape), length)
    ]


def matching_items(n: int) -> list[WeightedItem]:
    """All matchings of [2n], keyed by text form, valued by alignment count."""
    return [
        (format_matching(m), stats(m).alignments) for m in enumerate_matchings(n)
    ]


def search_tableaux(
    shape: Partition,
    n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    conjugation_closed: bool = False,
    parallel: bool = False,
) -> SearchResult:
    """Triple-partition search over the walks to `shape` with the weight statistic.

    With conjugation_closed=True only triples closed under stepwise
    conjugation of the walks are allowed (an exploratory restriction).
    """
    items = tableau_items(shape, n)
    if len(items) % 3:
        raise NotDivisibleByThreeError(
            f"{len(items)} walks cannot form triples; routine needs n >= 2"
        )
    mate = None
    if conjugation_closed:
        mate = {
            identifier: format_tableau(conjugate_tableau(parse_tableau(identifier)))
            for identifier, _ in items
        }
    return triple_partition_search(
        items,
        orbit_sum_target_tableaux(size(shape), n),
        node_budget,
        time_budget,
        mate,
        statistic="weight",
        parallel=parallel,
    )


def search_matchings(
    n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    conjugation_closed: bool = False,
    parallel: bool = False,
) -> SearchResult:
    """Triple-partition search over the matchings of [2n] with the alignment statistic."""
    items = matching_items(n)
    if len(items) % 3:
        raise NotDivisibleByThreeError(
            f"{len(items)} matchings cannot form triples; routine needs n >= 2"
        )
    mate = None
    if conjugation_closed:
        mate = {
            identifier: format_matching(conjugate_matching(parse_matching(identifier)))
            for identifier, _ in items
        }
    return triple_partition_search(
        items,
        orbit_sum_target_matchings(n),
        node_budget,
        time_budget,
        mate,
        statistic="alignments",
        parallel=parallel,
    )
