"""Validated Hopf algebras from groups, H(delta) and restricted Lie algebras."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

import numpy as np

from .gf_linear import PrimeField, as_field_array, dim_cap, matmul
from .hopf_core import DimensionCapError, HopfAlgebraData, dual

__all__ = [
    "GroupTable",
    "RestrictedLieData",
    "cyclic_group",
    "direct_product",
    "load_group",
    "group_algebra",
    "function_algebra",
    "h_delta",
    "restricted_enveloping",
    "heisenberg_lie",
    "abelian_lie",
    "RewritingError",
]


class RewritingError(RuntimeError):
    """PBW straightening exceeded its step cap."""


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its Cayley table: ``table[i][j]`` is g_i * g_j."""

    table: np.ndarray
    identity: int = 0
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        object.__setattr__(self, "table", t)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise ValueError("invalid Cayley table: not a square table")
        if t.min() < 0 or t.max() >= n:
            raise ValueError("invalid Cayley table: entries out of range")
        rng = np.arange(n)
        if not (np.array_equal(t[self.identity], rng) and np.array_equal(t[:, self.identity], rng)):
            raise ValueError("invalid Cayley table: identity law fails")
        if any(len(set(row)) != n for row in t) or any(len(set(col)) != n for col in t.T):
            raise ValueError("invalid Cayley table: a row or column is not a permutation")
        # (ab)c == a(bc) for all triples
        left = t[t[:, :, None], np.arange(n)[None, None, :]]   # (ab)c
        right = t[np.arange(n)[:, None, None], t[None, :, :]]  # a(bc)
        if not np.array_equal(left, right):
            a, b, c = (int(x) for x in np.argwhere(left != right)[0])
            raise ValueError(f"invalid Cayley table: associativity fails at {(a, b, c)}")
        labels = tuple(self.labels) if self.labels else tuple(f"g{i}" for i in range(n))
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(np.flatnonzero(self.table[a] == self.identity)[0])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inverse(a), -n
        out = self.identity
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)

    @classmethod
    def from_json(cls, doc: dict) -> "GroupTable":
        table = np.asarray(doc["table"], dtype=np.int64)
        if "order" in doc and int(doc["order"]) != table.shape[0]:
            raise ValueError("invalid Cayley table: order does not match table size")
        return cls(table, int(doc.get("identity", 0)), tuple(doc.get("labels", ())), doc.get("name", ""))

    def to_json(self) -> dict:
        return {"order": self.order, "identity": self.identity, "labels": list(self.labels),
                "table": self.table.tolist()}


def cyclic_group(n: int) -> GroupTable:
    idx = np.arange(n)
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    return GroupTable((idx[:, None] + idx[None, :]) % n, 0, labels, f"C{n}")


def direct_product(G: GroupTable, K: GroupTable) -> GroupTable:
    """G x K on pairs (g, k) indexed g * |K| + k."""
    m = K.order
    table = G.table[:, None, :, None] * m + K.table[None, :, None, :]
    n = G.order * m
    labels = tuple(f"({a},{b})" for a in G.labels for b in K.labels)
    name = f"{G.name}x{K.name}" if G.name and K.name else ""
    return GroupTable(table.reshape(n, n), G.identity * m + K.identity, labels, name)


_BUNDLED = {
    "heisenberg27": "heisenberg27.json",
    "dihedral8": "dihedral8.json",
    "quaternion8": "quaternion8.json",
    "symmetric6": "symmetric6.json",
}


def load_group(name: str) -> GroupTable:
    """Bundled Cayley tables: heisenberg27, dihedral8, quaternion8, symmetric6."""
    fname = _BUNDLED[name]
    doc = json.loads(resources.files("hopfind.data").joinpath(fname).read_text())
    G = GroupTable.from_json(doc)
    return GroupTable(G.table, G.identity, G.labels, name)


def group_algebra(G: GroupTable, p: int) -> HopfAlgebraData:
    """kG: Delta(g) = g(x)g, eps(g) = 1, S(g) = g^-1."""
    n = G.order
    if n > dim_cap():
        raise DimensionCapError(f"dimension {n} exceeds cap {dim_cap()}")
    mult = np.zeros((n, n, n), dtype=np.int64)
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    mult[i, j, G.table] = 1
    comult = np.zeros((n, n, n), dtype=np.int64)
    comult[np.arange(n), np.arange(n), np.arange(n)] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[G.identity] = 1
    antipode = np.zeros((n, n), dtype=np.int64)
    for g in range(n):
        antipode[g, G.inverse(g)] = 1
    name = f"k{G.name}" if G.name else ""
    return HopfAlgebraData(PrimeField(p), mult, unit, comult, np.ones(n, dtype=np.int64),
                           antipode, G.labels, name)


def function_algebra(G: GroupTable, p: int) -> HopfAlgebraData:
    """k^G, the dual of kG; basis element i is the indicator of g_i."""
    H = dual(group_algebra(G, p))
    labels = tuple(f"d[{lab}]" for lab in G.labels)
    name = f"k^{G.name}" if G.name else ""
    return HopfAlgebraData(H.field, H.mult, H.unit, H.comult, H.counit, H.antipode, labels, name)


# ---------------------------------------------------------------------------
# primitively generated algebras

def _primitively_generated(p: int, mult: np.ndarray, chain: Sequence[tuple[int, int]],
                           generators: Sequence[int], labels, name) -> HopfAlgebraData:
    """Finish a Hopf structure on an algebra generated by primitive elements.

    Basis element 0 is the unit.  ``chain[k] = (g, k')`` says e_k = e_g * e_k'
    exactly, where g indexes a primitive generator; Delta and S are then built
    multiplicatively inside H(x)H from Delta(x) = x(x)1 + 1(x)x, S(x) = -x.
    """
    n = mult.shape[0]
    field = PrimeField(p)
    left = {g: np.ascontiguousarray(mult[g].T) for g in generators}    # y -> e_g y
    right = {g: np.ascontiguousarray(mult[:, g].T) for g in generators}  # y -> y e_g
    comult = np.zeros((n, n, n), dtype=np.int64)
    comult[0, 0, 0] = 1
    antipode = np.zeros((n, n), dtype=np.int64)
    antipode[0, 0] = 1
    for k in range(1, n):
        g, prev = chain[k]
        x = comult[prev]
        comult[k] = (matmul(left[g], x, p) + matmul(x, left[g].T, p)) % p
        # S(e_g e_prev) = S(e_prev) S(e_g) = -S(e_prev) e_g
        antipode[k] = (-matmul(right[g], antipode[prev][:, None], p)[:, 0]) % p
    counit = np.zeros(n, dtype=np.int64)
    counit[0] = 1
    unit = counit.copy()
    return HopfAlgebraData(field, mult, unit, comult, counit, antipode, labels, name)


def h_delta(p: int, delta: int) -> HopfAlgebraData:
    """H(delta) = k[x]/(x^p - delta x) with x primitive, basis 1, x, ..., x^(p-1)."""
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    mult = np.zeros((p, p, p), dtype=np.int64)
    for a in range(p):
        for b in range(p):
            s = a + b
            if s < p:
                mult[a, b, s] = 1
            elif delta:
                # x^s = x^p x^(s-p) = x^(s-p+1)
                mult[a, b, s - p + 1] = 1
    labels = tuple("1" if k == 0 else ("x" if k == 1 else f"x^{k}") for k in range(p))
    chain = [(0, 0)] + [(1, k - 1) for k in range(1, p)]
    return _primitively_generated(p, mult, chain, [1] if p > 1 else [], labels, f"H{p}({delta})")


@dataclass(frozen=True, eq=False)
class RestrictedLieData:
    """Restricted Lie algebra over GF(p) on basis e_0..e_{d-1}.

    ``bracket[i, j, k]`` is the e_k-coefficient of [e_i, e_j]; ``pmap[i, k]``
    the e_k-coefficient of e_i^[p].
    """

    p: int
    bracket: np.ndarray
    pmap: np.ndarray
    name: str = ""

    def __post_init__(self):
        PrimeField(self.p)
        c = as_field_array(self.bracket, self.p)
        d = c.shape[0]
        if c.shape != (d, d, d):
            raise ValueError("bracket must have shape (d, d, d)")
        pm = as_field_array(self.pmap, self.p)
        if pm.shape != (d, d):
            raise ValueError("pmap must have shape (d, d)")
        object.__setattr__(self, "bracket", c)
        object.__setattr__(self, "pmap", pm)
        problems = self.violations()
        if problems:
            raise ValueError("invalid restricted Lie data: " + "; ".join(problems))

    @property
    def dim(self) -> int:
        return self.bracket.shape[0]

    def ad(self, i: int) -> np.ndarray:
        """Column-convention matrix of ad e_i."""
        return np.ascontiguousarray(self.bracket[i].T)

    def violations(self) -> list[str]:
        p, c, d = self.p, self.bracket, self.dim
        out = []
        if np.mod(c + c.transpose(1, 0, 2), p).any() or c[np.arange(d), np.arange(d)].any():
            out.append("bracket is not alternating")
        # [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        inner = np.einsum("jkl,ilm->ijkm", c, c)
        jac = inner + inner.transpose(1, 2, 0, 3) + inner.transpose(2, 0, 1, 3)
        if np.mod(jac, p).any():
            at = tuple(int(v) for v in np.argwhere(np.mod(jac, p))[0][:3])
            out.append(f"Jacobi identity fails at {at}")
        for i in range(d):
            lhs = np.eye(d, dtype=np.int64)
            for _ in range(p):
                lhs = matmul(self.ad(i), lhs, p)
            rhs = np.einsum("k,kji->ij", self.pmap[i], c) % p
            if not np.array_equal(lhs, rhs):
                out.append(f"restrictedness fails for e_{i}: ad(e^[p]) != (ad e)^p")
        return out

    @classmethod
    def from_json(cls, doc: dict) -> "RestrictedLieData":
        p, d = int(doc["p"]), int(doc["dim"])
        c = np.zeros((d, d, d), dtype=np.int64)
        for i, j, k, coeff in doc.get("bracket", []):
            if not i < j:
                raise ValueError("bracket entries must have i < j")
            c[i, j, k] += coeff
            c[j, i, k] -= coeff
        pm = np.zeros((d, d), dtype=np.int64)
        for i, k, coeff in doc.get("pmap", []):
            pm[i, k] += coeff
        return cls(p, c % p, pm % p, doc.get("name", ""))

    def to_json(self) -> dict:
        d = self.dim
        bracket = [[i, j, k, int(self.bracket[i, j, k])]
                   for i in range(d) for j in range(i + 1, d) for k in range(d) if self.bracket[i, j, k]]
        pmap = [[i, k, int(self.pmap[i, k])] for i in range(d) for k in range(d) if self.pmap[i, k]]
        return {"p": self.p, "dim": d, "bracket": bracket, "pmap": pmap}


def heisenberg_lie(p: int) -> RestrictedLieData:
    """[x, y] = z with z central and every p-map zero."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 1, 2] = 1
    c[1, 0, 2] = p - 1
    return RestrictedLieData(p, c, np.zeros((3, 3), dtype=np.int64), f"heis{p}")


def abelian_lie(p: int, pmap: Sequence[Sequence[int]] | int) -> RestrictedLieData:
    """Abelian restricted Lie algebra; ``pmap`` is a d x d matrix or just d (zero p-map)."""
    if isinstance(pmap, int):
        pm = np.zeros((pmap, pmap), dtype=np.int64)
    else:
        pm = np.asarray(pmap, dtype=np.int64)
    d = pm.shape[0]
    return RestrictedLieData(p, np.zeros((d, d, d), dtype=np.int64), pm, f"ab{p}^{d}")


_STEP_CAP = 10**7


def restricted_enveloping(L: RestrictedLieData, step_cap: int = _STEP_CAP) -> HopfAlgebraData:
    """u(g) on the restricted PBW basis e_0^a0 ... e_{d-1}^a{d-1}, 0 <= a_i < p.

    Multiplication comes from straightening words with the rewriting rules
    e_j e_i -> e_i e_j + [e_j, e_i] (j > i) and e_i^p -> e_i^[p].
    """
    p, d = L.p, L.dim
    n = p ** d
    if n > dim_cap():
        raise DimensionCapError(f"u(g) has dimension {n}, above cap {dim_cap()}")
    monos = list(itertools.product(range(p), repeat=d))
    index = {m: k for k, m in enumerate(monos)}
    c, pm = L.bracket, L.pmap
    memo: dict[tuple[int, tuple[int, ...]], np.ndarray] = {}
    steps = 0

    def basis(m):
        v = np.zeros(n, dtype=np.int64)
        v[index[m]] = 1
        return v

    def times_vector(i, v):
        out = np.zeros(n, dtype=np.int64)
        for t in np.flatnonzero(v):
            out = (out + v[t] * gen_times(i, monos[t])) % p
        return out

    def gen_times(i, m):
        """e_i * (PBW monomial m), in normal form."""
        nonlocal steps
        key = (i, m)
        if key in memo:
            return memo[key]
        steps += 1
        if steps > step_cap:
            raise RewritingError("straightening exceeded %d steps" % step_cap)
        first = next((j for j, a in enumerate(m) if a), d)
        if i < first or (i == first and m[i] + 1 < p):
            bumped = list(m)
            bumped[i] += 1
            res = basis(tuple(bumped))
        elif i == first:
            # e_i^p -> e_i^[p]
            rest = list(m)
            rest[i] = 0
            rest = tuple(rest)
            res = np.zeros(n, dtype=np.int64)
            for k in np.flatnonzero(pm[i]):
                res = (res + pm[i, k] * gen_times(int(k), rest)) % p
        else:
            # e_i e_j m' -> e_j (e_i m') + [e_i, e_j] m'   (j = first < i)
            j = first
            shorter = list(m)
            shorter[j] -= 1
            shorter = tuple(shorter)
            res = times_vector(j, gen_times(i, shorter))
            for k in np.flatnonzero(c[i, j]):
                res = (res + c[i, j, k] * gen_times(int(k), shorter)) % p
        res.setflags(write=False)
        memo[key] = res
        return res

    # left multiplication by each generator, columns = images of basis monomials
    gens = [np.stack([gen_times(i, m) for m in monos], axis=1) for i in range(d)]
    chain: list[tuple[int, int]] = [(0, 0)]
    gen_index = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        gen_index.append(index[tuple(e)])
    left_of = [np.eye(n, dtype=np.int64)]
    for k, m in enumerate(monos[1:], start=1):
        first = next(j for j, a in enumerate(m) if a)
        prev = list(m)
        prev[first] -= 1
        prev_k = index[tuple(prev)]
        chain.append((gen_index[first], prev_k))
        left_of.append(matmul(gens[first], left_of[prev_k], p))
    # mult[a, b, :] = column b of L_a
    mult = np.stack([la.T for la in left_of], axis=0)
    names = [f"e{i}" for i in range(d)]
    labels = []
    for m in monos:
        parts = [(nm if a == 1 else f"{nm}^{a}") for nm, a in zip(names, m) if a]
        labels.append("*".join(parts) if parts else "1")
    name = f"u({L.name})" if L.name else ""
    return _primitively_generated(p, mult, chain, gen_index, tuple(labels), name)
