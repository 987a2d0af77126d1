"""Pure-Python implementations of the hot kernels.

These are the fallback backend behind osctab.kernels; osctab._kernels_c
compiles the same four functions with identical semantics.  Any change
here must be mirrored there, and tests/test_kernels.py checks the two
backends output-for-output on shared inputs.

Kernel contract
---------------
matching_stats(partner)            -> (crossings, nestings, alignments)
joint_distribution_counts(n)       -> {(cr, ne, al): count} over all matchings of [2n]
ot_weight_profile(start, shape, l) -> list c with c[w] = number of length-l
                                      lattice walks start -> shape of weight w
                                      (trailing zeros trimmed)
triple_search(values, target, node_budget, time_budget, mate)
                                   -> (status, triples, nodes); status 0 found,
                                      1 infeasible, 2 budget exhausted
"""

import time
from typing import Sequence

STATUS_FOUND = 0
STATUS_INFEASIBLE = 1
STATUS_BUDGET = 2

_TIME_CHECK_MASK = 0xFFF


def matching_stats(partner: Sequence[int]) -> tuple[int, int, int]:
    """Classify every pair of pairs of a perfect matching.

    partner[i] is the 0-indexed position matched with i.  For openers
    o1 < o2 with closers c1, c2: the pairs are disjoint (alignment) when
    c1 < o2, nested when c2 < c1, and crossing otherwise.
    """
    openers = [i for i in range(len(partner)) if partner[i] > i]
    cr = ne = al = 0
    for idx, o1 in enumerate(openers):
        c1 = partner[o1]
        for o2 in openers[idx + 1 :]:
            c2 = partner[o2]
            if c1 < o2:
                al += 1
            elif c2 < c1:
                ne += 1
            else:
                cr += 1
    return cr, ne, al


def joint_distribution_counts(n: int) -> dict[tuple[int, int, int], int]:
    """Count matchings of [2n] by their (crossings, nestings, alignments) triple.

    Enumerates by always pairing the smallest free position, updating the
    three counts incrementally: every existing pair has its opener before
    the new pair's opener, so a single comparison of closers classifies it.
    """
    counts: dict[tuple[int, int, int], int] = {}
    used = [False] * (2 * n)
    pairs: list[tuple[int, int]] = []

    def rec(cr: int, ne: int, al: int) -> None:
        a = -1
        for i in range(2 * n):
            if not used[i]:
                a = i
                break
        if a < 0:
            key = (cr, ne, al)
            counts[key] = counts.get(key, 0) + 1
            return
        used[a] = True
        for b in range(a + 1, 2 * n):
            if used[b]:
                continue
            dcr = dne = dal = 0
            for _, y in pairs:
                if y < a:
                    dal += 1
                elif b < y:
                    dne += 1
                else:
                    dcr += 1
            used[b] = True
            pairs.append((a, b))
            rec(cr + dcr, ne + dne, al + dal)
            pairs.pop()
            used[b] = False
        used[a] = False

    rec(0, 0, 0)
    return counts


def ot_weight_profile(
    start: tuple[int, ...], shape: tuple[int, ...], length: int
) -> list[int]:
    """Weight histogram of all length-`length` walks from start to shape.

    Depth-first over single-box moves.  A branch survives only if the
    remaining step count can still reach the target: the box distance
    |p| + |shape| - 2|p meet shape| must be at most the remaining steps
    and of the same parity, which also makes the walk count exact with
    no dead branches.
    """
    shape_size = sum(shape)
    cur = list(start)
    cur_size = sum(start)

    max_weight = 0
    for i in range(length + 1):
        max_weight += min(cur_size + i, shape_size + (length - i))
    profile = [0] * (max_weight + 1)

    def meet_size() -> int:
        total = 0
        for i in range(min(len(cur), len(shape))):
            total += min(cur[i], shape[i])
        return total

    def rec(cur_size: int, remaining: int, weight: int) -> None:
        dist = cur_size + shape_size - 2 * meet_size()
        if dist > remaining or (remaining - dist) % 2:
            return
        if remaining == 0:
            profile[weight] += 1
            return
        new_size = cur_size + 1
        new_weight = weight + new_size
        # grow: one position per distinct part value, then a new row
        for i in range(len(cur)):
            if i == 0 or cur[i - 1] > cur[i]:
                cur[i] += 1
                rec(new_size, remaining - 1, new_weight)
                cur[i] -= 1
        cur.append(1)
        rec(new_size, remaining - 1, new_weight)
        cur.pop()
        # shrink: remove each outer corner, top row first
        new_size = cur_size - 1
        new_weight = weight + new_size
        last = len(cur) - 1
        for i in range(len(cur)):
            if i == last or cur[i + 1] < cur[i]:
                if cur[i] == 1:
                    cur.pop()
                    rec(new_size, remaining - 1, new_weight)
                    cur.append(1)
                else:
                    cur[i] -= 1
                    rec(new_size, remaining - 1, new_weight)
                    cur[i] += 1

    rec(cur_size, length, cur_size)
    while profile and profile[-1] == 0:
        profile.pop()
    return profile


class _Budget(Exception):
    pass


def triple_search(
    values: Sequence[int],
    target: int,
    node_budget: int,
    time_budget: float,
    mate: Sequence[int] | None = None,
) -> tuple[int, list[tuple[int, int, int]], int]:
    """First-solution DFS partitioning indices into value-sum-`target` triples.

    The lowest unassigned index i is extended by every pair j < k of
    unassigned indices (j ascending, k located through a value index),
    so the search order and therefore the certificate and node count are
    deterministic.  With `mate` (an involution on indices) only triples
    closed under it are allowed.  A node is one attempted triple.
    """
    m = len(values)
    if m % 3:
        raise ValueError("item count must be divisible by 3")
    if sum(values) != (m // 3) * target:
        return STATUS_INFEASIBLE, [], 0

    by_value: dict[int, list[int]] = {}
    for i, v in enumerate(values):
        by_value.setdefault(v, []).append(i)
    free_count = {v: len(positions) for v, positions in by_value.items()}

    assigned = [False] * m
    chosen: list[tuple[int, int, int]] = []
    nodes = 0
    deadline = time.monotonic() + time_budget if time_budget > 0 else None

    def closed(i: int, j: int, k: int) -> bool:
        triple = {i, j, k}
        return {mate[i], mate[j], mate[k]} == triple

    def rec(lowest: int) -> bool:
        nonlocal nodes
        i = lowest
        while i < m and assigned[i]:
            i += 1
        if i == m:
            return True
        assigned[i] = True
        free_count[values[i]] -= 1
        vi = values[i]
        for j in range(i + 1, m):
            if assigned[j]:
                continue
            need = target - vi - values[j]
            candidates = by_value.get(need)
            if not candidates:
                continue
            # skipping a j whose completion value has no free item tries
            # the same zero nodes, so node counts stay backend-identical
            if free_count[need] - (1 if values[j] == need else 0) <= 0:
                continue
            assigned[j] = True
            free_count[values[j]] -= 1
            for k in candidates:
                if k <= j or assigned[k]:
                    continue
                if mate is not None and not closed(i, j, k):
                    continue
                nodes += 1
                if nodes > node_budget:
                    raise _Budget
                if deadline is not None and not (nodes & _TIME_CHECK_MASK):
                    if time.monotonic() > deadline:
                        raise _Budget
                assigned[k] = True
                free_count[values[k]] -= 1
                chosen.append((i, j, k))
                if rec(i + 1):
                    return True
                chosen.pop()
                assigned[k] = False
                free_count[values[k]] += 1
            assigned[j] = False
            free_count[values[j]] += 1
        assigned[i] = False
        free_count[values[i]] += 1
        return False

    try:
        found = rec(0)
    except _Budget:
        return STATUS_BUDGET, [], nodes
    if found:
        return STATUS_FOUND, list(chosen), nodes
    return STATUS_INFEASIBLE, [], nodes
