# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Semantics are defined by osctab._kernels_py; this module reproduces its
four functions (same outputs, same node counts) with C-level inner loops.
"""

import time

from libc.stdlib cimport free, malloc

STATUS_FOUND = 0
STATUS_INFEASIBLE = 1
STATUS_BUDGET = 2

cdef long long _TIME_CHECK_MASK = 0xFFF


def matching_stats(partner):
    """Classify every pair of pairs; see osctab._kernels_py.matching_stats."""
    cdef int m = len(partner)
    cdef int* part = <int*> malloc(m * sizeof(int))
    cdef int* openers = <int*> malloc(m * sizeof(int))
    if part == NULL or openers == NULL:
        free(part)
        free(openers)
        raise MemoryError
    cdef int i, n_open = 0
    cdef long long cr = 0, ne = 0, al = 0
    cdef int o1, o2, c1, c2, a, b
    try:
        for i in range(m):
            part[i] = partner[i]
        for i in range(m):
            if part[i] > i:
                openers[n_open] = i
                n_open += 1
        for a in range(n_open):
            o1 = openers[a]
            c1 = part[o1]
            for b in range(a + 1, n_open):
                o2 = openers[b]
                c2 = part[o2]
                if c1 < o2:
                    al += 1
                elif c2 < c1:
                    ne += 1
                else:
                    cr += 1
        return cr, ne, al
    finally:
        free(part)
        free(openers)


cdef void _joint_rec(int two_n, bint* used, int* pair_y, int n_pairs,
                     long long cr, long long ne, long long al, dict counts):
    cdef int a = -1
    cdef int i, b, t
    cdef long long dcr, dne, dal
    for i in range(two_n):
        if not used[i]:
            a = i
            break
    if a < 0:
        key = (cr, ne, al)
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
        return
    used[a] = True
    for b in range(a + 1, two_n):
        if used[b]:
            continue
        dcr = 0
        dne = 0
        dal = 0
        for t in range(n_pairs):
            if pair_y[t] < a:
                dal += 1
            elif b < pair_y[t]:
                dne += 1
            else:
                dcr += 1
        used[b] = True
        pair_y[n_pairs] = b
        _joint_rec(two_n, used, pair_y, n_pairs + 1, cr + dcr, ne + dne, al + dal, counts)
        used[b] = False
    used[a] = False


def joint_distribution_counts(int n):
    """Counts of (cr, ne, al) over all matchings of [2n]."""
    if n < 0 or n > 16:
        raise ValueError("n out of range for matching enumeration")
    counts = {}
    cdef int two_n = 2 * n
    cdef bint* used = <bint*> malloc((two_n + 1) * sizeof(bint))
    cdef int* pair_y = <int*> malloc((n + 1) * sizeof(int))
    if used == NULL or pair_y == NULL:
        free(used)
        free(pair_y)
        raise MemoryError
    cdef int i
    try:
        for i in range(two_n + 1):
            used[i] = False
        _joint_rec(two_n, used, pair_y, 0, 0, 0, 0, counts)
        return counts
    finally:
        free(used)
        free(pair_y)


cdef struct WalkState:
    int* cur
    int cur_len
    int* shape
    int shape_len
    long long shape_size
    long long* profile


cdef void _walk_rec(WalkState* st, long long cur_size, int remaining, long long weight):
    cdef long long meet = 0
    cdef int i, limit
    limit = st.cur_len if st.cur_len < st.shape_len else st.shape_len
    for i in range(limit):
        meet += st.cur[i] if st.cur[i] < st.shape[i] else st.shape[i]
    cdef long long dist = cur_size + st.shape_size - 2 * meet
    if dist > remaining or ((remaining - dist) & 1):
        return
    if remaining == 0:
        st.profile[weight] += 1
        return
    cdef long long new_size = cur_size + 1
    cdef long long new_weight = weight + new_size
    cdef int last
    for i in range(st.cur_len):
        if i == 0 or st.cur[i - 1] > st.cur[i]:
            st.cur[i] += 1
            _walk_rec(st, new_size, remaining - 1, new_weight)
            st.cur[i] -= 1
    st.cur[st.cur_len] = 1
    st.cur_len += 1
    _walk_rec(st, new_size, remaining - 1, new_weight)
    st.cur_len -= 1
    new_size = cur_size - 1
    new_weight = weight + new_size
    last = st.cur_len - 1
    for i in range(st.cur_len):
        if i == last or st.cur[i + 1] < st.cur[i]:
            if st.cur[i] == 1:
                st.cur_len -= 1
                _walk_rec(st, new_size, remaining - 1, new_weight)
                st.cur_len += 1
                st.cur[i] = 1
            else:
                st.cur[i] -= 1
                _walk_rec(st, new_size, remaining - 1, new_weight)
                st.cur[i] += 1


def ot_weight_profile(start, shape, int length):
    """Weight histogram of all length-`length` walks from start to shape."""
    cdef WalkState st
    cdef int start_len = len(start)
    cdef int shape_len = len(shape)
    cdef long long start_size = sum(start)
    cdef long long shape_size = sum(shape)
    cdef int cap = start_len + length + 1
    cdef long long max_weight = 0
    cdef long long a, b, trim
    cdef int i
    for i in range(length + 1):
        a = start_size + i
        b = shape_size + (length - i)
        max_weight += a if a < b else b

    st.cur = <int*> malloc(cap * sizeof(int))
    st.shape = <int*> malloc((shape_len + 1) * sizeof(int))
    st.profile = <long long*> malloc((max_weight + 1) * sizeof(long long))
    if st.cur == NULL or st.shape == NULL or st.profile == NULL:
        free(st.cur)
        free(st.shape)
        free(st.profile)
        raise MemoryError
    try:
        for i in range(start_len):
            st.cur[i] = start[i]
        st.cur_len = start_len
        for i in range(shape_len):
            st.shape[i] = shape[i]
        st.shape_len = shape_len
        st.shape_size = shape_size
        for i in range(max_weight + 1):
            st.profile[i] = 0
        _walk_rec(&st, start_size, length, start_size)
        trim = max_weight + 1
        while trim > 0 and st.profile[trim - 1] == 0:
            trim -= 1
        return [st.profile[i] for i in range(trim)]
    finally:
        free(st.cur)
        free(st.shape)
        free(st.profile)


cdef struct SearchState:
    int m
    long long* values
    long long target
    bint* assigned
    int* mate            # NULL when unused
    int* cand_pos        # positions grouped by value (CSR layout)
    int* cand_start      # group offsets, indexed by value id
    int* vid             # value-group id of each position
    int* free_cnt        # unassigned items per value group
    int n_values
    int* triples         # 3 * (m/3) scratch
    int n_triples
    long long nodes
    long long node_budget
    double deadline      # monotonic seconds; <0 means no limit


cdef int _search_rec(SearchState* st, int lowest, object value_ids):
    # returns 1 found, 0 exhausted, -1 budget
    cdef int i = lowest
    cdef int j, k, t, res
    cdef long long need
    cdef int gi, g_start, g_end, avail
    while i < st.m and st.assigned[i]:
        i += 1
    if i == st.m:
        return 1
    st.assigned[i] = True
    st.free_cnt[st.vid[i]] -= 1
    for j in range(i + 1, st.m):
        if st.assigned[j]:
            continue
        need = st.target - st.values[i] - st.values[j]
        group = value_ids.get(need)
        if group is None:
            continue
        gi = group
        # skipping a j whose completion value has no free item tries
        # the same zero nodes, so node counts stay backend-identical
        avail = st.free_cnt[gi]
        if st.vid[j] == gi:
            avail -= 1
        if avail <= 0:
            continue
        g_start = st.cand_start[gi]
        g_end = st.cand_start[gi + 1]
        st.assigned[j] = True
        st.free_cnt[st.vid[j]] -= 1
        for t in range(g_start, g_end):
            k = st.cand_pos[t]
            if k <= j or st.assigned[k]:
                continue
            if st.mate != NULL:
                if not _closed(st.mate, i, j, k):
                    continue
            st.nodes += 1
            if st.nodes > st.node_budget:
                return -1
            if st.deadline >= 0 and not (st.nodes & _TIME_CHECK_MASK):
                if time.monotonic() > st.deadline:
                    return -1
            st.assigned[k] = True
            st.free_cnt[st.vid[k]] -= 1
            st.triples[3 * st.n_triples] = i
            st.triples[3 * st.n_triples + 1] = j
            st.triples[3 * st.n_triples + 2] = k
            st.n_triples += 1
            res = _search_rec(st, i + 1, value_ids)
            if res != 0:
                return res
            st.n_triples -= 1
            st.assigned[k] = False
            st.free_cnt[st.vid[k]] += 1
        st.assigned[j] = False
        st.free_cnt[st.vid[j]] += 1
    st.assigned[i] = False
    st.free_cnt[st.vid[i]] += 1
    return 0


cdef bint _closed(int* mate, int i, int j, int k):
    cdef int a = mate[i], b = mate[j], c = mate[k]
    if a != i and a != j and a != k:
        return False
    if b != i and b != j and b != k:
        return False
    if c != i and c != j and c != k:
        return False
    return True


def triple_search(values, long long target, long long node_budget,
                  double time_budget, mate=None):
    """First-solution DFS into constant-sum triples; see the pure twin."""
    cdef int m = len(values)
    if m % 3:
        raise ValueError("item count must be divisible by 3")
    total = sum(values)
    if total != (m // 3) * target:
        return STATUS_INFEASIBLE, [], 0

    cdef SearchState st
    st.m = m
    st.target = target
    st.nodes = 0
    st.node_budget = node_budget
    st.deadline = (time.monotonic() + time_budget) if time_budget > 0 else -1.0
    st.n_triples = 0

    st.values = <long long*> malloc(m * sizeof(long long))
    st.assigned = <bint*> malloc((m + 1) * sizeof(bint))
    st.cand_pos = <int*> malloc((m + 1) * sizeof(int))
    st.triples = <int*> malloc((m + 3) * sizeof(int))
    st.vid = <int*> malloc((m + 1) * sizeof(int))
    st.mate = NULL
    st.cand_start = NULL
    st.free_cnt = NULL
    if (st.values == NULL or st.assigned == NULL or st.cand_pos == NULL
            or st.triples == NULL or st.vid == NULL):
        _free_search(&st)
        raise MemoryError

    cdef int i, gi, res
    value_ids = {}
    try:
        for i in range(m):
            st.values[i] = values[i]
            st.assigned[i] = False
        if mate is not None:
            st.mate = <int*> malloc(m * sizeof(int))
            if st.mate == NULL:
                raise MemoryError
            for i in range(m):
                st.mate[i] = mate[i]
        # group positions by value, ascending within each group
        for i in range(m):
            v = values[i]
            if v not in value_ids:
                value_ids[v] = len(value_ids)
        st.n_values = len(value_ids)
        st.cand_start = <int*> malloc((st.n_values + 1) * sizeof(int))
        st.free_cnt = <int*> malloc((st.n_values + 1) * sizeof(int))
        if st.cand_start == NULL or st.free_cnt == NULL:
            raise MemoryError
        sizes = [0] * st.n_values
        for i in range(m):
            gi = value_ids[values[i]]
            st.vid[i] = gi
            sizes[gi] += 1
        st.cand_start[0] = 0
        for i in range(st.n_values):
            st.cand_start[i + 1] = st.cand_start[i] + sizes[i]
            st.free_cnt[i] = sizes[i]
        fill = [st.cand_start[gi] for gi in range(st.n_values)]
        for i in range(m):
            gi = st.vid[i]
            st.cand_pos[fill[gi]] = i
            fill[gi] += 1

        res = _search_rec(&st, 0, value_ids)
        if res == -1:
            return STATUS_BUDGET, [], st.nodes
        if res == 1:
            triples = [
                (st.triples[3 * t], st.triples[3 * t + 1], st.triples[3 * t + 2])
                for t in range(st.n_triples)
            ]
            return STATUS_FOUND, triples, st.nodes
        return STATUS_INFEASIBLE, [], st.nodes
    finally:
        _free_search(&st)


cdef void _free_search(SearchState* st):
    free(st.values)
    free(st.assigned)
    free(st.cand_pos)
    free(st.triples)
    free(st.vid)
    free(st.mate)
    free(st.cand_start)
    free(st.free_cnt)
