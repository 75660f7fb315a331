"""Slow, independent reference computations used for cross-checking.

Nothing here calls the convolution, radical or row-reduction code of the
fast path; products are expanded from the sparse structure constants.
"""
from __future__ import annotations


import numpy as np

from .constructors import GroupTable
from .gf_linear import Subspace

__all__ = [
    "OracleCapError",
    "sweedler_bruteforce",
    "radical_enumeration",
    "grouplike_enumeration",
    "group_indicator_count",
]

TERM_CAP = 60_000_000


class OracleCapError(ValueError):
    pass


def _sparse(tensor: np.ndarray):
    """CSR view of a 3-tensor keyed on its leading index (or leading pair)."""
    nz = np.argwhere(tensor)
    vals = tensor[tuple(nz.T)]
    return nz, vals


class _Table:
    """key -> list of (out indices, coeff), stored as offsets into flat arrays."""

    def __init__(self, keys: np.ndarray, outs: np.ndarray, coefs: np.ndarray, nkeys: int):
        order = np.argsort(keys, kind="stable")
        self.outs = outs[order]
        self.coefs = coefs[order]
        counts = np.bincount(keys, minlength=nkeys)
        self.start = np.concatenate([[0], np.cumsum(counts)[:-1]])
        self.count = counts

    def expand(self, keys: np.ndarray):
        """For each input key, the row numbers it expands to and the matching table rows."""
        reps = self.count[keys]
        src = np.repeat(np.arange(keys.size), reps)
        first = np.repeat(self.start[keys], reps)
        within = np.arange(src.size) - np.repeat(np.cumsum(reps) - reps, reps)
        return src, first + within


def sweedler_bruteforce(H, h: np.ndarray, m: int) -> np.ndarray:
    """h^[m] by explicit expansion of the iterated coproduct.

    Coassociativity lets Delta^(|m|-1)(h) be grown one leg at a time: the
    state is a list of terms (product of the legs already split off, last
    leg).  Each step splits the last leg with Delta, applies S to the new
    left piece when m < 0, and multiplies it onto the prefix.  Repeated
    terms are merged after every step, so the work stays near dim^2 terms.
    """
    if abs(m) > 8:
        raise OracleCapError("|m| must be at most 8")
    p, d = H.p, H.dim
    h = np.asarray(h, dtype=np.int64) % p
    if m == 0:
        eps = int(sum(int(a) * int(b) for a, b in zip(h, H.counit))) % p
        return (eps * np.asarray(H.unit, dtype=np.int64)) % p

    cnz, cval = _sparse(H.comult)
    cotable = _Table(cnz[:, 0], cnz[:, 1:], cval, d)
    mnz, mval = _sparse(H.mult)
    multable = _Table(mnz[:, 0] * d + mnz[:, 1], mnz[:, 2], mval, d * d)
    snz, sval = _sparse(H.antipode)
    stable = _Table(snz[:, 0], snz[:, 1], sval, d)

    def leg(idx, coef, col):
        """Apply S to column ``col`` of the index array when m < 0."""
        if m > 0:
            return idx, coef
        src, rows = stable.expand(idx[:, col])
        idx = idx[src].copy()
        idx[:, col] = stable.outs[rows]
        return idx, coef[src] * stable.coefs[rows] % p

    def times(idx, coef):
        """Replace columns (prefix, piece) by their product."""
        src, rows = multable.expand(idx[:, 0] * d + idx[:, 1])
        out = np.column_stack([multable.outs[rows], idx[src, 2:]])
        return out, coef[src] * multable.coefs[rows] % p

    start = np.flatnonzero(h)
    # state rows: (prefix, last); the prefix column is a placeholder until the first split
    state = np.column_stack([np.zeros_like(start), start]).astype(np.int64)
    coef = h[start]
    for step in range(abs(m) - 1):
        src, rows = cotable.expand(state[:, 1])
        if src.size > TERM_CAP:
            raise OracleCapError("iterated coproduct exceeds %d terms" % TERM_CAP)
        idx = np.column_stack([state[src, 0], cotable.outs[rows]])   # prefix, left, right
        coef = coef[src] * cotable.coefs[rows] % p
        idx, coef = leg(idx, coef, 1)
        if step == 0:
            idx = idx[:, 1:]
        else:
            idx, coef = times(idx, coef)
        state, coef = _collect(idx, coef, d, p)
    state, coef = leg(state, coef, 1)
    if abs(m) == 1:
        cur = state[:, 1]
    else:
        state, coef = times(state, coef)
        cur = state[:, 0]
    out = np.zeros(d, dtype=np.int64)
    np.add.at(out, cur, coef)
    return out % p


def _collect(legs: np.ndarray, coef: np.ndarray, d: int, p: int):
    """Merge repeated basis tensors and drop zero coefficients."""
    if legs.shape[0] == 0:
        return legs, coef
    width = legs.shape[1]
    if d ** width < 2**62:
        keys = np.zeros(legs.shape[0], dtype=np.int64)
        for c in range(width):
            keys = keys * d + legs[:, c]
        uniq, inv = np.unique(keys, return_inverse=True)
        total = np.zeros(uniq.size, dtype=np.int64)
        np.add.at(total, inv, coef)
        total %= p
        keep = total != 0
        uniq, total = uniq[keep], total[keep]
        out = np.zeros((uniq.size, width), dtype=np.int64)
        for c in range(width - 1, -1, -1):
            out[:, c] = uniq % d
            uniq = uniq // d
        return out, total
    keep = coef % p != 0
    return legs[keep], coef[keep] % p


# ---------------------------------------------------------------------------

def _batched_rref(a: np.ndarray, p: int) -> np.ndarray:
    """RREF of every matrix in a (N, R, C) stack, first-nonzero-column pivots."""
    a = a % p
    n, rows, cols = a.shape
    rank = np.zeros(n, dtype=np.int64)
    inv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
    row_ids = np.arange(rows)
    for c in range(cols):
        eligible = (a[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = eligible.any(axis=1) & (rank < rows)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        piv = np.argmax(eligible[b], axis=1)
        r0 = rank[b]
        tmp = a[b, r0].copy()
        a[b, r0] = a[b, piv]
        a[b, piv] = tmp
        a[b, r0] = a[b, r0] * inv[a[b, r0, c]][:, None] % p
        factors = a[b, :, c].copy()
        factors[np.arange(b.size), r0] = 0
        a[b] = (a[b] - factors[:, :, None] * a[b, r0][:, None, :]) % p
        rank[b] += 1
    return a


def _span(vectors, p: int, d: int) -> np.ndarray:
    vecs = np.asarray(vectors, dtype=np.int64).reshape(-1, d)
    red = _batched_rref(vecs[None, :, :], p)[0]
    return red[red.any(axis=1)]


def _closure_two_sided(rows: np.ndarray, mult: np.ndarray, p: int) -> np.ndarray:
    d = mult.shape[0]
    cur = rows
    while True:
        left = np.tensordot(cur, mult, axes=([1], [1]))   # [r, i, k] = (e_i v_r)_k
        right = np.tensordot(cur, mult, axes=([1], [0]))  # [r, j, k] = (v_r e_j)_k
        nxt = _span(np.vstack([cur, left.reshape(-1, d), right.reshape(-1, d)]), p, d)
        if nxt.shape[0] == cur.shape[0]:
            return nxt
        cur = nxt


def _is_nilpotent(rows: np.ndarray, mult: np.ndarray, p: int) -> bool:
    d = mult.shape[0]
    power = rows
    for _ in range(d + 1):
        if power.shape[0] == 0:
            return True
        prods = np.einsum("ai,bj,ijk->abk", power, rows, mult) % p
        nxt = _span(prods.reshape(-1, d), p, d)
        if nxt.shape[0] == power.shape[0]:
            return False
        power = nxt
    return power.shape[0] == 0


def _all_vectors(p: int, d: int, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.zeros((idx.size, d), dtype=np.int64)
    for c in range(d - 1, -1, -1):
        out[:, c] = idx % p
        idx //= p
    return out


def radical_enumeration(A, cap: int = 2**16) -> Subspace:
    """J = {x : the two-sided ideal generated by x is nilpotent}, by enumeration."""
    p, d = A.p, A.dim
    mult = np.asarray(A.mult, dtype=np.int64) % p
    total = p ** d
    if total > cap:
        raise OracleCapError(f"p^dim = {total} exceeds cap {cap}")
    members = []
    verdict: dict[bytes, bool] = {}
    chunk = 4096
    for lo in range(0, total, chunk):
        xs = _all_vectors(p, d, lo, min(lo + chunk, total))
        # rows e_a * x of the left ideal A x, row-reduced per element
        left = np.einsum("nj,ajk->nak", xs, mult) % p
        red = _batched_rref(left, p)
        for x, r in zip(xs, red):
            key = r.tobytes()
            if key not in verdict:
                basis = r[r.any(axis=1)]
                ideal = _closure_two_sided(basis, mult, p) if basis.size else basis
                verdict[key] = _is_nilpotent(ideal, mult, p)
            if verdict[key]:
                members.append(x)
    members = np.array(members, dtype=np.int64).reshape(-1, d)
    basis = _span(members, p, d) if members.size else np.zeros((0, d), dtype=np.int64)
    if p ** basis.shape[0] != members.shape[0]:
        raise AssertionError("enumerated radical is not a linear subspace")
    return Subspace(p, d, basis)


def grouplike_enumeration(H, cap: int = 2**20):
    """All v with Delta(v) = v (x) v and eps(v) = 1, plus their multiplication table.

    Returns ``(vectors, table)`` with vectors sorted lexicographically and
    ``table[i][j]`` the index of vectors[i] * vectors[j].
    """
    p, d = H.p, H.dim
    total = p ** d
    if total > cap:
        raise OracleCapError(f"p^dim = {total} exceeds cap {cap}")
    comult = np.asarray(H.comult, dtype=np.int64).reshape(d, d * d)
    counit = np.asarray(H.counit, dtype=np.int64)
    found = []
    chunk = max(1, 2**22 // (d * d))
    for lo in range(0, total, chunk):
        vs = _all_vectors(p, d, lo, min(lo + chunk, total))
        ok = (vs @ counit) % p == 1
        vs = vs[ok]
        if vs.size == 0:
            continue
        delta = (vs @ comult) % p
        outer = (vs[:, :, None] * vs[:, None, :]).reshape(-1, d * d) % p
        found.extend(vs[(delta == outer).all(axis=1)])
    vectors = sorted(tuple(int(c) for c in v) for v in found)
    index = {v: i for i, v in enumerate(vectors)}
    mult = np.asarray(H.mult, dtype=np.int64)
    table = []
    for a in vectors:
        row = []
        for b in vectors:
            prod = np.einsum("i,j,ijk->k", np.array(a), np.array(b), mult) % p
            row.append(index[tuple(int(c) for c in prod)])
        table.append(row)
    return [np.array(v, dtype=np.int64) for v in vectors], table


def group_indicator_count(G: GroupTable, n: int, p: int) -> int:
    """#{g in G : g^n = 1} mod p, by direct powering."""
    count = sum(1 for g in range(G.order) if G.power(g, n) == G.identity)
    return count % p
