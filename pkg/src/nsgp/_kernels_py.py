"""Pure-Python Apéry-table kernels.

Every function takes an Apéry table as a sequence ``ap`` of length ``m``
with ``ap[i]`` the least element congruent to ``i`` modulo ``m`` and
``ap[0] == 0``. The compiled twin in ``_kernels.pyx`` must return
identical values for identical inputs.
"""

from math import gcd


def apery_from_generators(gens):
    """Apéry table of <gens> with respect to its least generator.

    Round-robin shortest paths over residues modulo the least generator:
    each generator walks its residue cycles twice starting from the current
    minimum, which reaches the fixed point in a single pass per generator.
    """
    gens = sorted(set(gens))
    m = gens[0]
    inf = float("inf")
    ap = [inf] * m
    ap[0] = 0
    for a in gens[1:]:
        step = a % m
        if step == 0:
            continue
        d = gcd(step, m)
        cycle_len = m // d
        for start in range(d):
            # begin each cycle at its current minimum
            best, best_res = ap[start], start
            res = start
            for _ in range(cycle_len):
                res = (res + step) % m
                if ap[res] < best:
                    best, best_res = ap[res], res
            if best == inf:
                continue
            res = best_res
            cur = best
            for _ in range(cycle_len):
                nxt = (res + step) % m
                cand = cur + a
                if cand < ap[nxt]:
                    ap[nxt] = cand
                cur = ap[nxt]
                res = nxt
    if inf in ap:
        raise ValueError("generators do not span every residue class")
    return [int(w) for w in ap]


def _maximal_indices(ap, limit=None):
    # Apéry elements w != 0 with w + w' not in Ap for every nonzero w'
    m = len(ap)
    out = []
    for i in range(1, m):
        w = ap[i]
        if limit is not None and w >= limit:
            continue
        for j in range(1, m):
            if ap[(i + j) % m] == w + ap[j]:
                break
        else:
            out.append(i)
    return out


def pseudo_frobenius(ap):
    m = len(ap)
    return sorted(ap[i] - m for i in _maximal_indices(ap))


def special_gaps(ap):
    m = len(ap)
    out = []
    for i in _maximal_indices(ap):
        x = ap[i] - m
        y = 2 * x
        if y >= ap[y % m]:
            out.append(x)
    out.sort()
    return out


def minimal_generators(ap):
    m = len(ap)
    if m == 1:
        return [1]
    out = [m]
    for k in range(1, m):
        w = ap[k]
        for i in range(1, m):
            j = (k - i) % m
            if j and ap[i] + ap[j] == w:
                break
        else:
            out.append(w)
    out.sort()
    return out


def child_gaps(ap, exclude=-1):
    """Special gaps x with m < x < r and x != exclude, ascending."""
    m = len(ap)
    if m == 1:
        return []
    r = min(ap[1:])
    out = []
    # x = w - m < r restricts the candidate maximals to w < r + m
    for i in _maximal_indices(ap, r + m):
        x = ap[i] - m
        if x <= m or x == exclude:
            continue
        y = 2 * x
        if y >= ap[y % m]:
            out.append(x)
    out.sort()
    return out


def expand_level(level, exclude=-1):
    """Children of every table in ``level``.

    Returns ``(parent_index, x, child_table)`` triples, children of each
    parent in ascending ``x``.
    """
    out = []
    for p, ap in enumerate(level):
        m = len(ap)
        for x in child_gaps(ap, exclude):
            child = list(ap)
            child[x % m] = x
            out.append((p, x, tuple(child)))
    return out
