"""Independent reference computations used by the tests."""

from collections import Counter

from koszulkit.gmod import CokernelData, FreeModule, map_from_free
from koszulkit.xla import Mat


def _fat_cover(M):
    """Cover ``M`` by one generator per basis vector (far from minimal)."""
    p = M.base
    gens, images = [], []
    for X in p.objects:
        for n in range(M.lo, M.hi + 1):
            d = M.dim(X, n)
            for j in range(d):
                v = [M.field.zero] * d
                v[j] = M.field.one
                gens.append((X, n))
                images.append(v)
    free = FreeModule(p, gens, hi=None if M.complete else M.hi)
    cover = map_from_free(free, images, M, lo=free.lo, hi=free.hi)
    return free, cover.kernel()


def betti_from_fat_resolution(F, k_max):
    """``{(k, X, d): dim Tor_k(S_X, F)_d}`` via the fat resolution and the top functor.

    After tensoring with simples only the identity coefficients of the
    differential survive; homology of that complex gives the Betti numbers.
    """
    field = F.field
    stages = []   # (free, syzygy submodule)
    M = F
    for _ in range(k_max + 2):
        free, syz = _fat_cover(M)
        stages.append((free, syz))
        M = syz.as_module()
    # identity-coefficient matrices d_k : V_k -> V_{k-1}
    mats = {}
    for k in range(1, k_max + 2):
        free, _ = stages[k]
        prev_free, prev_syz = stages[k - 1]
        counters = Counter()
        rows = {}
        for h, (X, d) in enumerate(free.gens):
            j = counters[(X, d)]
            counters[(X, d)] += 1
            sp = prev_syz.space(X, d)
            unit = [field.zero] * sp.dim
            unit[j] = field.one
            vec = sp.from_coords(unit)
            col = [vec[prev_free.offset(X, d, g)] if prev_free.gens[g] == (X, d) else field.zero
                   for g in range(len(prev_free.gens))]
            rows[h] = col
        mats[k] = (rows, free.gens, prev_free.gens)
    out = {}
    for k in range(k_max + 1):
        gens_k = stages[k][0].gens
        for key in set(gens_k):
            X, d = key
            dim_k = sum(1 for g in gens_k if g == key)
            out_rank = _block_rank(field, mats.get(k), key)
            in_rank = _block_rank(field, mats[k + 1], key)
            b = dim_k - out_rank - in_rank
            if b:
                out[(k, X, d)] = b
    return out


def _block_rank(field, data, key):
    """Rank of the ``(X, d)`` block of a differential."""
    if data is None:
        return 0
    rows, src_gens, tgt_gens = data
    src = [h for h, g in enumerate(src_gens) if g == key]
    tgt = [g for g, t in enumerate(tgt_gens) if t == key]
    if not src or not tgt:
        return 0
    return Mat(field, [[rows[h][g] for g in tgt] for h in src], len(tgt)).rank()


def betti_from_minimal(res):
    out = Counter()
    for st in res.stages:
        for X, d in st.gens:
            out[(st.index, X, d)] += 1
    return dict(out)


def redundant_presentation(data, p):
    """Another presentation of the same left module: a duplicated row glued back and every relation doubled."""
    X0, m0 = data.rows[0]
    one = [p.field.one]
    rows = list(data.rows) + [(X0, m0)]
    cols = list(data.cols) + list(data.cols) + [(X0, m0)]
    ents = []
    for i, row in enumerate(data.entries):
        glue = one if i == 0 else None
        ents.append(list(row) + [None if e is None else [p.field.mul(2, x) for x in e] for e in row] + [glue])
    ents.append([None] * (2 * len(data.cols)) + [[p.field.neg(p.field.one)]])
    return CokernelData(rows, cols, ents)
