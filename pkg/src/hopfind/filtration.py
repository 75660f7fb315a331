"""Jacobson radical, coradical, the two filtrations and their graded algebras.

Both graded constructions share one recipe: pick a basis adapted to the
filtration (canonical RREF completion, step by step), give each vector its
filtration degree, and keep only the homogeneous part of every structure
constant.  Whether the result is a Hopf algebra is then *checked* with
``validate``; a failure means the filtration was not compatible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .gf_linear import Subspace, as_field_array, einsum, inverse, kernel, matmul
from .hopf_core import (
    HopfAlgebraData,
    antipode_map,
    dual,
    restrict_algebra,
    subspace_is_coideal_two_sided,
    subspace_is_hopf_subalgebra,
    subspace_is_ideal,
    subspace_is_stable_under,
    subspace_is_subalgebra,
    validate,
)

__all__ = [
    "FiniteAlgebra",
    "Filtration",
    "GradedHopfAlgebra",
    "GradingError",
    "jacobson_radical",
    "ideal_power",
    "jadic_filtration",
    "coradical",
    "coradical_filtration",
    "graded_from_coradical",
    "graded_from_jadic",
    "is_local",
    "is_connected",
    "has_dual_chevalley",
    "has_chevalley",
    "has_local_dual_chevalley",
    "has_connected_chevalley",
    "chevalley_summary",
]


class GradingError(ValueError):
    """The filtration does not yield a graded Hopf algebra."""


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """A bare associative algebra over GF(p) given by ``mult[i, j, k]``."""

    p: int
    mult: np.ndarray

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @classmethod
    def of(cls, H) -> "FiniteAlgebra":
        return cls(H.p, H.mult)

    @classmethod
    def restricted(cls, H, V: Subspace) -> "FiniteAlgebra":
        return cls(H.p, restrict_algebra(H, V))


def _products(A, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    if xs.shape[0] == 0 or ys.shape[0] == 0:
        return np.zeros((0, A.dim), dtype=np.int64)
    return einsum("ai,bj,ijk->abk", xs, ys, A.mult, q=A.p).reshape(-1, A.dim)


def ideal_power(A, J: Subspace, k: int) -> Subspace:
    """J^k (J^0 is the whole algebra)."""
    cur = Subspace.full(A.p, A.dim)
    for _ in range(k):
        cur = Subspace(A.p, A.dim, _products(A, cur.basis, J.basis))
    return cur


def _lifted_trace_power(mats: np.ndarray, p: int, level: int) -> np.ndarray:
    """Tr(M^(p^level)) / p^level mod p for a batch of integer lifts M."""
    modulus = p ** (level + 1)
    cur = mats % modulus
    for _ in range(level):
        # M^(p^k) -> M^(p^(k+1)) by p-fold multiplication
        base = cur
        for _ in range(p - 1):
            cur = matmul(cur, base, modulus)
    tr = np.trace(cur, axis1=-2, axis2=-1) % modulus
    scale = p ** level
    if np.any(tr % scale):
        raise ArithmeticError("trace not divisible by p^level; radical chain invariant broken")
    return (tr // scale) % p


def jacobson_radical(A) -> Subspace:
    """Jacobson radical of a finite-dimensional algebra over GF(p).

    Works in the left regular representation (degree n = dim A).  Starting
    from I = A, level i keeps those a in I with g_i(ab) = 0 for every basis
    element b, where g_i(x) = Tr(L~^(p^i)) / p^i mod p for an integer lift L~
    of the left-multiplication matrix of x.  Each condition is linear on the
    previous level; after level floor(log_p n) what remains is the radical.
    """
    p, d = A.p, A.dim
    mult = as_field_array(A.mult, p)
    top = 0
    while p ** (top + 1) <= d:
        top += 1
    cur = Subspace.full(p, d)
    eye = np.eye(d, dtype=np.int64)
    for level in range(top + 1):
        if cur.dim == 0:
            break
        prods = _products(A, cur.basis, eye)                # rows: a_r * e_b
        mats = einsum("ni,ijk->nkj", prods, mult, q=p)       # L_{a_r e_b}
        vals = _lifted_trace_power(mats, p, level).reshape(cur.dim, d)
        coeffs = kernel(vals.T, p)                           # sum_r lam_r g(a_r b) = 0 for all b
        cur = Subspace(p, d, matmul(coeffs.basis, cur.basis, p)) if coeffs.dim else Subspace(p, d)
    J = cur
    if not _is_two_sided_ideal(A, J):
        raise ArithmeticError("radical candidate is not a two-sided ideal")
    if ideal_power(A, J, d).dim != 0 and J.dim:
        raise ArithmeticError("radical candidate is not nilpotent")
    return J


def _is_two_sided_ideal(A, V: Subspace) -> bool:
    eye = np.eye(A.dim, dtype=np.int64)
    return V.contains_all(_products(A, eye, V.basis)) and V.contains_all(_products(A, V.basis, eye))


# ---------------------------------------------------------------------------
# filtrations

@dataclass(frozen=True, eq=False)
class Filtration:
    """An exhaustive chain of subspaces with its adapted basis.

    ``chain`` is ascending (H_0, H_1, ..., H) for the coradical kind and
    descending (H, J, J^2, ..., 0) for the J-adic kind.  ``basis`` rows form
    an adapted basis and ``degrees[r]`` is the filtration degree of row r.
    """

    kind: Literal["coradical", "jadic"]
    chain: tuple[Subspace, ...]
    basis: np.ndarray
    degrees: tuple[int, ...]

    @property
    def dims(self) -> list[int]:
        return [V.dim for V in self.chain]

    @property
    def graded_dims(self) -> list[int]:
        top = max(self.degrees, default=-1)
        return [self.degrees.count(i) for i in range(top + 1)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "dims": self.dims, "degrees": list(self.degrees)}


def _adapted(p: int, d: int, ascending: list[Subspace]) -> tuple[np.ndarray, tuple[int, ...]]:
    rows, degs = [], []
    prev = Subspace(p, d)
    for deg, V in enumerate(ascending):
        extra = prev.complement_in(V)
        rows.extend(extra)
        degs.extend([deg] * len(extra))
        prev = V
    basis = np.array(rows, dtype=np.int64).reshape(-1, d)
    return basis, tuple(degs)


def jadic_filtration(H) -> Filtration:
    A = FiniteAlgebra.of(H)
    J = jacobson_radical(A)
    chain = [Subspace.full(H.p, H.dim)]
    while chain[-1].dim:
        nxt = Subspace(H.p, H.dim, _products(A, chain[-1].basis, J.basis))
        if nxt.dim == chain[-1].dim:
            raise ArithmeticError("powers of the radical stopped shrinking")
        chain.append(nxt)
    # degree i spans a complement of J^(i+1) in J^i
    rows, degs = [], []
    for i in range(len(chain) - 1):
        extra = chain[i + 1].complement_in(chain[i])
        rows.extend(extra)
        degs.extend([i] * len(extra))
    basis = np.array(rows, dtype=np.int64).reshape(-1, H.dim)
    return Filtration("jadic", tuple(chain), basis, tuple(degs))


def coradical(H: HopfAlgebraData) -> Subspace:
    """H_0 = annihilator of J(H*) under the evaluation pairing."""
    return jacobson_radical(FiniteAlgebra.of(dual(H))).annihilator()


def coradical_filtration(H: HopfAlgebraData) -> Filtration:
    """H_n = Delta^-1(H (x) H_{n-1} + H_0 (x) H), up to H."""
    p, d = H.p, H.dim
    H0 = coradical(H)
    chain = [H0]
    ann0 = H0.annihilator().basis
    while chain[-1].dim < d:
        ann = chain[-1].annihilator().basis
        # (phi (x) psi)(Delta h) = 0 for phi in H_0^perp, psi in H_{n-1}^perp
        rows = einsum("ai,bj,kij->abk", ann0, ann, H.comult, q=p).reshape(-1, d)
        nxt = kernel(rows, p)
        if nxt.dim <= chain[-1].dim:
            raise ArithmeticError("coradical filtration stalled below H")
        chain.append(nxt)
    basis, degs = _adapted(p, d, chain)
    return Filtration("coradical", tuple(chain), basis, degs)


# ---------------------------------------------------------------------------
# associated graded Hopf algebras

@dataclass(frozen=True, eq=False)
class GradedHopfAlgebra:
    base: HopfAlgebraData
    degrees: tuple[int, ...]
    source: str

    @property
    def graded_dims(self) -> list[int]:
        top = max(self.degrees, default=-1)
        return [self.degrees.count(i) for i in range(top + 1)]

    def dual(self) -> "GradedHopfAlgebra":
        return GradedHopfAlgebra(dual(self.base), self.degrees, f"dual({self.source})")

    def component(self, deg: int) -> Subspace:
        d = self.base.dim
        eye = np.eye(d, dtype=np.int64)
        return Subspace(self.base.p, d, eye[[i for i in range(d) if self.degrees[i] == deg]])

    def grading_violations(self) -> list[str]:
        H, deg = self.base, np.array(self.degrees)
        out = []
        total = deg[:, None, None] + deg[None, :, None]
        if (H.mult.astype(bool) & (total != deg[None, None, :])).any():
            out.append("multiplication is not homogeneous")
        if (H.comult.astype(bool) & (deg[None, :, None] + deg[None, None, :] != deg[:, None, None])).any():
            out.append("comultiplication is not homogeneous")
        if (H.antipode.astype(bool) & (deg[:, None] != deg[None, :])).any():
            out.append("antipode does not preserve degree")
        if not subspace_is_hopf_subalgebra(self.component(0), H):
            out.append("degree-0 component is not a Hopf subalgebra")
        return out

    def to_json(self) -> dict:
        return {"kind": self.source, "dims": self.graded_dims, "degrees": list(self.degrees)}


def _vector_label(row, labels) -> str:
    terms = [lab if c == 1 else f"{c}{lab}" for c, lab in zip(row.tolist(), labels) if c]
    return terms[0] if len(terms) == 1 else "(" + " + ".join(terms) + ")"


def _graded(H: HopfAlgebraData, F: Filtration, source: str) -> GradedHopfAlgebra:
    p, d = H.p, H.dim
    B = F.basis                                  # rows = adapted vectors
    Pinv = inverse(np.ascontiguousarray(B.T), p)  # old coords -> adapted coords
    deg = np.array(F.degrees)
    prods = einsum("ai,bj,ijk->abk", B, B, H.mult, q=p)
    mult = matmul(prods.reshape(d * d, d), Pinv.T, p).reshape(d, d, d)
    mult[deg[:, None, None] + deg[None, :, None] != deg[None, None, :]] = 0
    comult = einsum("kx,xyz,iy,jz->kij", B, H.comult, Pinv, Pinv, q=p)
    comult[deg[None, :, None] + deg[None, None, :] != deg[:, None, None]] = 0
    antipode = einsum("ix,xy,jy->ij", B, H.antipode, Pinv, q=p)
    antipode[deg[:, None] != deg[None, :]] = 0
    unit = matmul(Pinv, H.unit[:, None], p)[:, 0]
    unit[deg != 0] = 0
    counit = matmul(B, H.counit[:, None], p)[:, 0]
    counit[deg != 0] = 0
    labels = tuple(_vector_label(row, H.labels) for row in B)
    name = f"gr_{'C' if F.kind == 'coradical' else 'J'}({H.name})" if H.name else ""
    G = HopfAlgebraData(H.field, mult, unit, comult, counit, antipode, labels, name)
    failures = validate(G)
    if failures:
        what = "multiplicative/comultiplicative"
        raise GradingError(f"filtration not {what}: {failures[0]}")
    out = GradedHopfAlgebra(G, F.degrees, source)
    problems = out.grading_violations()
    if problems:
        raise GradingError("graded output inconsistent: " + "; ".join(problems))
    return out


def graded_from_coradical(H: HopfAlgebraData) -> GradedHopfAlgebra:
    H0 = coradical(H)
    if not (subspace_is_subalgebra(H0, H) and subspace_is_stable_under(antipode_map(H), H0)):
        raise GradingError("H_0 not a Hopf subalgebra")
    return _graded(H, coradical_filtration(H), "gr_C")


def graded_from_jadic(H: HopfAlgebraData) -> GradedHopfAlgebra:
    F = jadic_filtration(H)
    J = F.chain[1] if len(F.chain) > 1 else Subspace(H.p, H.dim)
    if not (subspace_is_ideal(J, H) and subspace_is_coideal_two_sided(J, H)
            and subspace_is_stable_under(antipode_map(H), J)):
        raise GradingError("J not a Hopf ideal")
    return _graded(H, F, "gr_J")


# ---------------------------------------------------------------------------
# Chevalley-type predicates

def is_local(A) -> bool:
    """dim(A / J(A)) == 1."""
    return A.dim - jacobson_radical(A).dim == 1


def is_connected(H: HopfAlgebraData) -> bool:
    return coradical(H).dim == 1


def has_dual_chevalley(H: HopfAlgebraData) -> bool:
    return subspace_is_hopf_subalgebra(coradical(H), H)


def has_chevalley(H: HopfAlgebraData) -> bool:
    J = jacobson_radical(FiniteAlgebra.of(H))
    return (subspace_is_ideal(J, H) and subspace_is_coideal_two_sided(J, H)
            and subspace_is_stable_under(antipode_map(H), J))


def has_local_dual_chevalley(H: HopfAlgebraData) -> bool:
    H0 = coradical(H)
    if not subspace_is_hopf_subalgebra(H0, H):
        return False
    return is_local(FiniteAlgebra.restricted(H, H0))


def has_connected_chevalley(H: HopfAlgebraData) -> bool:
    """J is a Hopf ideal and H/J is a connected coalgebra.

    (H/J)* is the subalgebra J^perp of H*, and a coalgebra is connected
    exactly when its dual algebra is local.
    """
    if not has_chevalley(H):
        return False
    J = jacobson_radical(FiniteAlgebra.of(H))
    perp = J.annihilator()
    return is_local(FiniteAlgebra.restricted(dual(H), perp))


def chevalley_summary(H: HopfAlgebraData) -> dict:
    """Every predicate plus the prime-power dimension check, as a JSON-able dict."""
    d, p = H.dim, H.p
    n, rest = 0, d
    while rest % p == 0:
        rest //= p
        n += 1
    ldc = has_local_dual_chevalley(H)
    return {
        "algebra": H.name or "H",
        "p": p,
        "dim": d,
        "local": is_local(FiniteAlgebra.of(H)),
        "connected": is_connected(H),
        "dual_chevalley": has_dual_chevalley(H),
        "chevalley": has_chevalley(H),
        "local_dual_chevalley": ldc,
        "connected_chevalley": has_connected_chevalley(H),
        "dim_is_p_power": rest == 1,
        "dim_exponent": n if rest == 1 else None,
    }
