"""Pure-Python feasibility kernel (reference and fallback for the compiled one).

Decides whether a host graph admits a transitive partition with exactly ``k``
parts, building the parts top-down: ``V_k`` first, then ``V_{k-1}``, and so on,
with whatever is left over forming ``V_1``.

Every valid partition can be normalised without changing ``k`` so that

* ``|V_k| = 1`` and, for ``2 <= j < k``, ``V_j`` is an inclusion-minimal set
  dominating ``V_{j+1} ∪ ... ∪ V_k`` (surplus vertices move to ``V_1``, which
  needs no dominator);
* whenever ``V_{j+1}`` also dominates ``V_j`` (so the two parts could trade
  places), ``key(V_{j+1}) < key(V_j)`` with ``key = (size, bitmask)``.

Each normalising move lowers ``(sum of levels, keys read top-down)``
lexicographically, so the normal form exists and the search only enumerates
normal forms. Minimal dominating sets are enumerated by branching on the
undominated vertex with the fewest candidates.

Pruning: once ``V_j`` is fixed, every placed vertex still needs a neighbour in
each of the ``j - 1`` lower parts, all drawn from the unplaced vertices.

Status codes: 1 found, 0 infeasible, -1 node budget exhausted.
"""

FOUND = 1
INFEASIBLE = 0
BUDGET = -1


class _Budget(Exception):
    pass


def _key_less(a, b):
    ca, cb = a.bit_count(), b.bit_count()
    return ca < cb or (ca == cb and a < b)


def feasible(adj, k, cap, node_budget):
    """Return ``(status, levels, nodes)``.

    ``adj`` holds neighbour bitmasks and ``cap[v]`` an upper bound on the level
    of ``v`` in any valid partition. ``levels`` gives the 1-based part of each
    vertex when ``status == FOUND``, else ``None``.
    """
    n = len(adj)
    if k <= 1:
        return FOUND, [1] * n, 0
    if k > n:
        return INFEASIBLE, None, 0
    capmask = [0] * (k + 1)
    for v in range(n):
        for j in range(1, min(cap[v], k) + 1):
            capmask[j] |= 1 << v
    parts = [0] * (k + 1)
    nodes = [0]

    def tick():
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise _Budget

    def enough(placed, R, need):
        # every placed vertex keeps `need` candidate neighbours among R
        if R.bit_count() < need:
            return False
        while placed:
            low = placed & -placed
            placed ^= low
            if (adj[low.bit_length() - 1] & R).bit_count() < need:
                return False
        return True

    def next_level(j, R, placed):
        # V_j .. V_k are fixed; either finish or choose V_{j-1}
        if j == 2:
            return True
        return build(j - 1, R, placed, 0, 0, R & capmask[j - 1])

    def build(j, R, placed, B, dom, avail):
        tick()
        und = placed & ~dom
        if not und:
            A = parts[j + 1]
            b = B
            mutual = True
            while b:
                low = b & -b
                b ^= low
                if not adj[low.bit_length() - 1] & A:
                    mutual = False
                    break
            if mutual and not _key_less(A, B):
                return False
            parts[j] = B
            if next_level(j, R, placed | B):
                return True
            parts[j] = 0
            return False
        best_t, best_c = -1, n + 1
        u_mask = und
        while u_mask:
            low = u_mask & -u_mask
            u_mask ^= low
            t = low.bit_length() - 1
            c = (adj[t] & avail).bit_count()
            if c < best_c:
                best_t, best_c = t, c
                if c <= 1:
                    break
        if best_c == 0:
            return False
        cand = adj[best_t] & avail
        while cand:
            low = cand & -cand
            cand ^= low
            avail &= ~low
            u = low.bit_length() - 1
            B2 = B | low
            R2 = R & ~low
            if not enough(placed | B2, R2, j - 1):
                continue
            if not _all_private(adj, placed, B2):
                continue
            if build(j, R2, placed, B2, dom | adj[u], avail):
                return True
        return False

    try:
        roots = capmask[k]
        full = (1 << n) - 1
        while roots:
            low = roots & -roots
            roots ^= low
            tick()
            R = full & ~low
            if not enough(low, R, k - 1):
                continue
            parts[k] = low
            if next_level(k, R, low):
                levels = [1] * n
                for j in range(2, k + 1):
                    m = parts[j]
                    while m:
                        bit = m & -m
                        m ^= bit
                        levels[bit.bit_length() - 1] = j
                return FOUND, levels, nodes[0]
            parts[k] = 0
    except _Budget:
        return BUDGET, None, nodes[0]
    return INFEASIBLE, None, nodes[0]


def _all_private(adj, targets, B):
    """True iff every member of ``B`` dominates some target no other member does."""
    if B & (B - 1) == 0:
        return True
    members = []
    m = B
    while m:
        low = m & -m
        m ^= low
        members.append(low.bit_length() - 1)
    for i, b in enumerate(members):
        others = 0
        for j, c in enumerate(members):
            if j != i:
                others |= adj[c]
        if not targets & adj[b] & ~others:
            return False
    return True


def level_caps(adj):
    """Upper bound on the level each vertex can reach, iterated to a fixpoint.

    A vertex at level ``L`` needs distinct neighbours at levels ``1..L-1``;
    a neighbour of cap ``c`` can serve levels ``<= c``. With neighbour caps
    sorted descending ``c_1 >= c_2 >= ...`` the best ``L`` is the largest one
    with ``c_t >= L - t`` for ``t = 1..L-1``.
    """
    n = len(adj)
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    cap = [len(nb) + 1 for nb in nbrs]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            cs = sorted((cap[u] for u in nbrs[v]), reverse=True)
            best = 1
            for L in range(cap[v], 1, -1):
                if all(cs[t - 1] >= L - t for t in range(1, L)):
                    best = L
                    break
            if best < cap[v]:
                cap[v] = best
                changed = True
    return cap
