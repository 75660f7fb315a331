"""Hopf algebras as dense structure constants over GF(p).

Index conventions (fixed once, used everywhere):

* ``mult[i, j, k]``   -- e_i * e_j = sum_k mult[i, j, k] e_k
* ``comult[k, i, j]`` -- Delta(e_k) = sum_{i,j} comult[k, i, j] e_i (x) e_j
* ``antipode[i, j]``  -- S(e_i) = sum_j antipode[i, j] e_j   (row convention)

Linear endomorphisms of H (Sweedler powers, convolution products) are plain
d x d arrays in *column* convention: the image of e_i is column i.  So the
endomorphism matrix of S is ``antipode.T``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf_linear import (
    PrimeField,
    Subspace,
    as_field_array,
    dim_cap,
    einsum,
    inverse,
    kernel,
    krylov_min_poly,
    matmul,
)

__all__ = [
    "HopfAlgebraData",
    "AxiomFailure",
    "StructureError",
    "DimensionCapError",
    "validate",
    "dual",
    "tensor",
    "opposite",
    "co_opposite",
    "identity_map",
    "unit_counit",
    "antipode_map",
    "convolve",
    "convolution_inverse",
    "convolution_power",
    "multiply",
    "comultiply",
    "left_mult_matrix",
    "right_mult_matrix",
    "is_commutative",
    "is_cocommutative",
    "primitive_space",
    "subspace_is_subalgebra",
    "subspace_is_ideal",
    "subspace_is_coideal_two_sided",
    "subspace_is_stable_under",
    "subspace_is_subcoalgebra",
    "subspace_is_hopf_ideal",
    "subspace_is_hopf_subalgebra",
    "restrict_algebra",
]


class StructureError(ValueError):
    """Structure constants with inconsistent shapes or out-of-range data."""


class DimensionCapError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    field: PrimeField
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        p = self.field.q
        d = np.shape(self.unit)[0] if np.ndim(self.unit) == 1 else -1
        expected = {
            "mult": (d, d, d),
            "unit": (d,),
            "comult": (d, d, d),
            "counit": (d,),
            "antipode": (d, d),
        }
        for key, shape in expected.items():
            arr = getattr(self, key)
            if np.shape(arr) != shape:
                raise StructureError(f"{key} has shape {np.shape(arr)}, expected {shape}")
        if d > dim_cap():
            raise DimensionCapError(f"dimension {d} exceeds cap {dim_cap()}")
        for key in expected:
            arr = as_field_array(getattr(self, key), p)
            arr.setflags(write=False)
            object.__setattr__(self, key, arr)
        labels = tuple(self.labels) if self.labels else tuple(f"e{i}" for i in range(d))
        if len(labels) != d:
            raise StructureError(f"{len(labels)} labels for dimension {d}")
        object.__setattr__(self, "labels", labels)

    @property
    def p(self) -> int:
        return self.field.q

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    def same_structure(self, other: "HopfAlgebraData") -> bool:
        """Equality of structure constants on the nose (labels ignored)."""
        return self.p == other.p and all(
            np.array_equal(getattr(self, k), getattr(other, k))
            for k in ("mult", "unit", "comult", "counit", "antipode")
        )

    def renamed(self, name: str) -> "HopfAlgebraData":
        return HopfAlgebraData(self.field, self.mult, self.unit, self.comult, self.counit,
                               self.antipode, self.labels, name)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<HopfAlgebraData{tag} dim={self.dim} over GF({self.p})>"


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    index: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom} fails at index {self.index}"


# ---------------------------------------------------------------------------
# elementwise operations

def multiply(H: HopfAlgebraData, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return einsum("i,j,ijk->k", x, y, H.mult, q=H.p)


def comultiply(H: HopfAlgebraData, x: np.ndarray) -> np.ndarray:
    """Delta(x) as a d x d coefficient matrix."""
    return einsum("k,kij->ij", x, H.comult, q=H.p)


def left_mult_matrix(H: HopfAlgebraData, x: np.ndarray) -> np.ndarray:
    """Column-convention matrix of y -> x*y."""
    return einsum("i,ijk->kj", x, H.mult, q=H.p)


def right_mult_matrix(H: HopfAlgebraData, x: np.ndarray) -> np.ndarray:
    """Column-convention matrix of y -> y*x."""
    return einsum("j,ijk->ki", x, H.mult, q=H.p)


def identity_map(H: HopfAlgebraData) -> np.ndarray:
    return np.eye(H.dim, dtype=np.int64)


def unit_counit(H: HopfAlgebraData) -> np.ndarray:
    """The convolution unit u o eps."""
    return np.outer(H.unit, H.counit) % H.p


def antipode_map(H: HopfAlgebraData) -> np.ndarray:
    return np.ascontiguousarray(H.antipode.T)


def is_commutative(H: HopfAlgebraData) -> bool:
    return np.array_equal(H.mult, H.mult.transpose(1, 0, 2))


def is_cocommutative(H: HopfAlgebraData) -> bool:
    return np.array_equal(H.comult, H.comult.transpose(0, 2, 1))


# ---------------------------------------------------------------------------
# validation

def _first(diff: np.ndarray) -> tuple[int, ...] | None:
    hit = np.argwhere(diff != 0)
    return tuple(int(i) for i in hit[0]) if hit.size else None


def validate(H: HopfAlgebraData, sample: int | None = None, rng=None) -> list[AxiomFailure]:
    """Check every Hopf algebra axiom; return one failure per broken axiom.

    Checks are exhaustive over all index tuples.  ``sample`` restricts the
    quartic/sextic checks to that many random leading indices (fast mode).
    """
    p, d = H.p, H.dim
    m, c = H.mult, H.comult
    eye = np.eye(d, dtype=np.int64)
    failures: list[AxiomFailure] = []

    def record(axiom, diff, offset=()):
        at = _first(np.mod(diff, p))
        if at is not None:
            failures.append(AxiomFailure(axiom, tuple(offset) + at))
            return True
        return False

    leading = range(d)
    if sample is not None and sample < d:
        rng = np.random.default_rng(rng)
        leading = sorted(rng.choice(d, size=sample, replace=False).tolist())

    flat_m = m.reshape(d, d * d)
    tall_m = m.reshape(d * d, d)
    for i in leading:
        # (e_i e_j) e_k vs e_i (e_j e_k), indexed [j, k, out]
        left = matmul(m[i], flat_m, p).reshape(d, d, d)
        right = matmul(tall_m, m[i], p).reshape(d, d, d)
        if record("associativity", left - right, (i,)):
            break

    record("left unit law", einsum("i,ijk->jk", H.unit, m, q=p) - eye)
    record("right unit law", einsum("j,ijk->ik", H.unit, m, q=p) - eye)

    flat_c = c.reshape(d, d * d)
    for k in leading:
        # (Delta (x) id) Delta(e_k) vs (id (x) Delta) Delta(e_k), indexed [a, b, c]
        left = matmul(np.ascontiguousarray(c[k].T), flat_c, p).reshape(d, d, d).transpose(1, 2, 0)
        right = matmul(c[k], flat_c, p).reshape(d, d, d)
        if record("coassociativity", left - right, (k,)):
            break

    record("left counit law", einsum("kij,i->kj", c, H.counit, q=p) - eye)
    record("right counit law", einsum("kij,j->ki", c, H.counit, q=p) - eye)

    # Delta multiplicative: Delta(e_i e_j) = Delta(e_i) Delta(e_j), indexed [j, a, b]
    lhs = matmul(tall_m, flat_c, p).reshape(d, d, d, d)
    c_wz = np.ascontiguousarray(c.transpose(0, 2, 1)).reshape(d * d, d)
    for i in leading:
        # step[y, z, a] = sum_x c[i, x, y] m[x, z, a]
        step = matmul(np.ascontiguousarray(c[i].T), flat_m, p).reshape(d, d, d)
        # nxt[j, w, y, a] = sum_z c[j, z, w] step[y, z, a]
        nxt = matmul(c_wz, np.ascontiguousarray(step.transpose(1, 0, 2)).reshape(d, d * d), p)
        nxt = nxt.reshape(d, d, d, d).transpose(0, 3, 2, 1).reshape(d * d, d * d)
        rhs = matmul(np.ascontiguousarray(nxt), tall_m, p).reshape(d, d, d)
        if record("comultiplication is multiplicative", lhs[i] - rhs, (i,)):
            break
    record("comultiplication is unital", einsum("k,kij->ij", H.unit, c, q=p) - np.outer(H.unit, H.unit))
    record("counit is multiplicative",
           einsum("ijk,k->ij", m, H.counit, q=p) - np.outer(H.counit, H.counit))
    record("counit is unital", np.array([int(H.unit @ H.counit) - 1]))

    target = unit_counit(H)
    s = antipode_map(H)
    left_conv = convolve(s, identity_map(H), H)
    right_conv = convolve(identity_map(H), s, H)
    # report the basis element (column) first
    record("antipode axiom (S * id)", (left_conv - target).T)
    record("antipode axiom (id * S)", (right_conv - target).T)
    return failures


# ---------------------------------------------------------------------------
# functorial constructions

def dual(H: HopfAlgebraData) -> HopfAlgebraData:
    """H* on the dual basis: (m, u, Delta, eps, S)* = (Delta^T, eps, m^T, u, S^T)."""
    labels = tuple(f"{lab}*" for lab in H.labels)
    return HopfAlgebraData(
        H.field,
        mult=H.comult.transpose(1, 2, 0),
        unit=H.counit,
        comult=H.mult.transpose(2, 0, 1),
        counit=H.unit,
        antipode=H.antipode.T,
        labels=labels,
        name=f"dual({H.name})" if H.name else "",
    )


def tensor(H: HopfAlgebraData, K: HopfAlgebraData) -> HopfAlgebraData:
    """H (x) K on the basis e_i (x) f_j, index i * dim K + j."""
    if H.p != K.p:
        raise StructureError(f"field mismatch: GF({H.p}) vs GF({K.p})")
    a, b = H.dim, K.dim
    if a * b > dim_cap():
        raise DimensionCapError(f"dimension {a * b} exceeds cap {dim_cap()}")
    n = a * b
    mult = np.einsum("ijk,abc->iajbkc", H.mult, K.mult).reshape(n, n, n)
    comult = np.einsum("kij,cab->kciajb", H.comult, K.comult).reshape(n, n, n)
    labels = tuple(f"{x}(x){y}" for x in H.labels for y in K.labels)
    name = f"{H.name}(x){K.name}" if H.name and K.name else ""
    return HopfAlgebraData(
        H.field,
        mult=mult % H.p,
        unit=np.kron(H.unit, K.unit) % H.p,
        comult=comult % H.p,
        counit=np.kron(H.counit, K.counit) % H.p,
        antipode=np.kron(H.antipode, K.antipode) % H.p,
        labels=labels,
        name=name,
    )


def _inverse_antipode(H: HopfAlgebraData) -> np.ndarray:
    try:
        return inverse(H.antipode, H.p)
    except ZeroDivisionError as exc:
        raise StructureError("antipode is not invertible") from exc


def opposite(H: HopfAlgebraData) -> HopfAlgebraData:
    """H^op: reversed multiplication, antipode S^-1."""
    return HopfAlgebraData(H.field, H.mult.transpose(1, 0, 2), H.unit, H.comult, H.counit,
                           _inverse_antipode(H), H.labels,
                           f"op({H.name})" if H.name else "")


def co_opposite(H: HopfAlgebraData) -> HopfAlgebraData:
    """H^cop: flipped comultiplication, antipode S^-1."""
    return HopfAlgebraData(H.field, H.mult, H.unit, H.comult.transpose(0, 2, 1), H.counit,
                           _inverse_antipode(H), H.labels,
                           f"cop({H.name})" if H.name else "")


# ---------------------------------------------------------------------------
# convolution algebra End(H)

def convolve(f: np.ndarray, g: np.ndarray, H: HopfAlgebraData) -> np.ndarray:
    """(f*g)(h) = f(h_(1)) g(h_(2)), all maps in column convention."""
    p, d = H.p, H.dim
    if f.shape != (d, d) or g.shape != (d, d):
        raise StructureError("endomorphism shape does not match the algebra")
    # t[k, a, b] = sum_{i,j} comult[k, i, j] f[a, i] g[b, j]
    t = matmul(matmul(f[None, :, :], H.comult, p), g.T[None, :, :], p)
    out = matmul(t.reshape(d, d * d), H.mult.reshape(d * d, d), p)
    return np.ascontiguousarray(out.T)


def _conv_min_poly(f: np.ndarray, H: HopfAlgebraData) -> tuple[int, ...]:
    def powers():
        cur = unit_counit(H)
        while True:
            yield cur
            cur = convolve(cur, f, H)

    return krylov_min_poly(powers(), H.p, H.dim ** 2)


def convolution_inverse(f: np.ndarray, H: HopfAlgebraData) -> np.ndarray:
    """Inverse in the convolution algebra; S for the identity map."""
    p = H.p
    if np.array_equal(f % p, identity_map(H)):
        return antipode_map(H)
    rel = _conv_min_poly(f, H)
    a0 = rel[0]
    if a0 == 0:
        raise ZeroDivisionError("endomorphism has no convolution inverse")
    # f^-1 = -a0^-1 (a1 + a2 f + ... + a_m f^(m-1))
    scale = (-pow(a0, -1, p)) % p
    acc = np.zeros_like(f)
    cur = unit_counit(H)
    for a in rel[1:]:
        acc = (acc + a * cur) % p
        cur = convolve(cur, f, H)
    return acc * scale % p


def convolution_power(f: np.ndarray, n: int, H: HopfAlgebraData) -> np.ndarray:
    """n-th power in the convolution monoid by square-and-multiply."""
    base = f if n >= 0 else convolution_inverse(f, H)
    n = abs(n)
    result = unit_counit(H)
    while n:
        if n & 1:
            result = convolve(result, base, H)
        n >>= 1
        if n:
            base = convolve(base, base, H)
    return result


# ---------------------------------------------------------------------------
# subspace predicates

def _products(H: HopfAlgebraData, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """All products x*y for rows x of xs and y of ys, as rows."""
    if xs.shape[0] == 0 or ys.shape[0] == 0:
        return np.zeros((0, H.dim), dtype=np.int64)
    out = einsum("ai,bj,ijk->abk", xs, ys, H.mult, q=H.p)
    return out.reshape(-1, H.dim)


def subspace_is_subalgebra(V: Subspace, H: HopfAlgebraData) -> bool:
    """Closed under products (units are not required)."""
    return V.contains_all(_products(H, V.basis, V.basis))


def subspace_is_ideal(V: Subspace, H: HopfAlgebraData) -> bool:
    eye = np.eye(H.dim, dtype=np.int64)
    return V.contains_all(_products(H, eye, V.basis)) and V.contains_all(_products(H, V.basis, eye))


def subspace_is_coideal_two_sided(V: Subspace, H: HopfAlgebraData) -> bool:
    """Delta(V) in V(x)H + H(x)V and eps(V) = 0."""
    if V.dim == 0:
        return True
    if (V.basis @ H.counit % H.p).any():
        return False
    ann = V.annihilator().basis
    # V(x)H + H(x)V is the annihilator of ann (x) ann
    pair = einsum("vk,kij,ai,bj->vab", V.basis, H.comult, ann, ann, q=H.p)
    return not pair.any()


def subspace_is_subcoalgebra(V: Subspace, H: HopfAlgebraData) -> bool:
    """Delta(V) in V(x)V."""
    if V.dim == 0:
        return True
    ann = V.annihilator().basis
    left = einsum("vk,kij,ai->vaj", V.basis, H.comult, ann, q=H.p)
    right = einsum("vk,kij,bj->vib", V.basis, H.comult, ann, q=H.p)
    return not left.any() and not right.any()


def subspace_is_stable_under(m: np.ndarray, V: Subspace) -> bool:
    """m(V) in V for a column-convention matrix m."""
    return V.contains_all(matmul(V.basis, m.T, V.q))


def subspace_is_hopf_ideal(V: Subspace, H: HopfAlgebraData) -> bool:
    return (subspace_is_ideal(V, H) and subspace_is_coideal_two_sided(V, H)
            and subspace_is_stable_under(antipode_map(H), V))


def subspace_is_hopf_subalgebra(V: Subspace, H: HopfAlgebraData) -> bool:
    return (V.contains(H.unit) and subspace_is_subalgebra(V, H)
            and subspace_is_subcoalgebra(V, H)
            and subspace_is_stable_under(antipode_map(H), V))


def restrict_algebra(H, V: Subspace) -> np.ndarray:
    """Structure constants of the subalgebra V in its canonical basis."""
    prods = _products(H, V.basis, V.basis)
    if not V.contains_all(prods):
        raise StructureError("subspace is not closed under multiplication")
    n = V.dim
    return V.coordinates(prods).reshape(n, n, n)


def primitive_space(H: HopfAlgebraData) -> Subspace:
    """Kernel of h -> Delta(h) - h(x)1 - 1(x)h."""
    d, p = H.dim, H.p
    one = H.unit
    # column k of the map: comult[k] - e_k (x) 1 - 1 (x) e_k, flattened
    cols = H.comult.reshape(d, d * d).copy()
    eye = np.eye(d, dtype=np.int64)
    cols -= np.einsum("ki,j->kij", eye, one).reshape(d, d * d)
    cols -= np.einsum("i,kj->kij", one, eye).reshape(d, d * d)
    return kernel(cols.T % p, p)
