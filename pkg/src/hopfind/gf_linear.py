"""Exact linear algebra over prime fields GF(q).

Matrices and tensors are plain ``numpy`` int64 arrays whose entries are kept
reduced to ``[0, q)``; the modulus travels alongside as an ``int`` (or a
:class:`PrimeField`).  Polynomials are tuples of coefficients, lowest degree
first, e.g. ``(1, 0, 1)`` is ``x^2 + 1``.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "PrimeField",
    "Subspace",
    "InsufficientTermsError",
    "PeriodCapError",
    "DEFAULT_DIM_CAP",
    "dim_cap",
    "is_prime",
    "as_field_array",
    "matmul",
    "einsum",
    "rref",
    "rank",
    "kernel",
    "inverse",
    "KrylovReducer",
    "min_poly_matrix",
    "berlekamp_massey",
    "sequence_period",
    "poly_trim",
    "poly_monic",
    "poly_mul",
    "poly_divmod",
    "poly_divides",
    "poly_eval",
    "poly_str",
]

DEFAULT_DIM_CAP = 512
_FLOAT_EXACT = 2**53


def dim_cap() -> int:
    """Global dimension cap; ``HOPFIND_DIM_CAP`` overrides the default."""
    value = os.environ.get("HOPFIND_DIM_CAP")
    return int(value) if value else DEFAULT_DIM_CAP


class InsufficientTermsError(ValueError):
    pass


class PeriodCapError(RuntimeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(q), 2 <= q < 2**31."""

    q: int

    def __post_init__(self):
        if not (2 <= self.q < 2**31) or not is_prime(self.q):
            raise ValueError(f"modulus {self.q} is not a prime below 2**31")

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.q)
        return pow(a, -1, self.q)

    def array(self, values) -> np.ndarray:
        return as_field_array(values, self.q)


def _modulus(field_or_q) -> int:
    return field_or_q.q if isinstance(field_or_q, PrimeField) else int(field_or_q)


def as_field_array(values, q) -> np.ndarray:
    q = _modulus(q)
    arr = np.asarray(values)
    if arr.dtype == object:
        arr = np.array([int(v) % q for v in arr.ravel()], dtype=np.int64).reshape(arr.shape)
        return arr
    return np.mod(arr.astype(np.int64), q)


# ---------------------------------------------------------------------------
# products

def matmul(a: np.ndarray, b: np.ndarray, q) -> np.ndarray:
    """Matrix product reduced mod q (supports numpy batch broadcasting).

    Uses float64 BLAS whenever every partial sum is provably below 2**53,
    otherwise int64 products summed in overflow-safe chunks.
    """
    q = _modulus(q)
    k = a.shape[-1]
    bound = (q - 1) ** 2
    if k * bound < _FLOAT_EXACT:
        out = np.matmul(a.astype(np.float64), b.astype(np.float64))
        return np.mod(out, q).astype(np.int64)
    step = max(1, (2**62) // max(bound, 1))
    out = None
    for s in range(0, k, step):
        part = np.mod(np.matmul(a[..., s:s + step], b[..., s:s + step, :]), q)
        out = part if out is None else np.mod(out + part, q)
    return out


_EINSUM_TERM = re.compile(r"[a-zA-Z]")


def einsum(subscripts: str, *operands: np.ndarray, q) -> np.ndarray:
    """``np.einsum`` reduced mod q, exact for any modulus."""
    q = _modulus(q)
    inputs, _, output = subscripts.replace(" ", "").partition("->")
    sizes: dict[str, int] = {}
    for term, op in zip(inputs.split(","), operands):
        for letter, n in zip(term, op.shape):
            sizes[letter] = n
    summed = math.prod(n for letter, n in sizes.items() if letter not in output)
    bound = (q - 1) ** len(operands) * max(summed, 1)
    if bound < _FLOAT_EXACT:
        ops = [o.astype(np.float64) for o in operands]
        out = np.einsum(subscripts, *ops, optimize=True)
        return np.mod(out, q).astype(np.int64)
    ops = [o.astype(object) for o in operands]
    out = np.einsum(subscripts, *ops)
    return as_field_array(np.mod(out, q), q)


# ---------------------------------------------------------------------------
# row reduction

def rref(m: np.ndarray, q) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form and rank.

    Pivot is the first nonzero column; rows are scanned top-down, so the
    result is the unique RREF of ``m``.
    """
    q = _modulus(q)
    a = as_field_array(m, q).copy()
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, q)
        if inv != 1:
            a[r] = (a[r] * inv) % q
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % q
        r += 1
    return a, r


def rank(m: np.ndarray, q) -> int:
    return rref(m, q)[1]


def _pivots(reduced: np.ndarray) -> list[int]:
    return [int(np.flatnonzero(row)[0]) for row in reduced]


def inverse(m: np.ndarray, q) -> np.ndarray:
    q = _modulus(q)
    n, k = m.shape
    if n != k:
        raise ValueError("cannot invert a non-square matrix")
    aug = np.hstack([as_field_array(m, q), np.eye(n, dtype=np.int64)])
    red, r = rref(aug, q)
    if r < n or not np.array_equal(red[:, :n], np.eye(n, dtype=np.int64)):
        raise ZeroDivisionError("matrix is singular mod %d" % q)
    return red[:, n:]


class Subspace:
    """A subspace of GF(q)^d held by its canonical (RREF) basis rows.

    Two subspaces are equal iff their basis matrices are identical.
    """

    __slots__ = ("q", "ambient", "basis", "pivots")

    def __init__(self, q, ambient: int, basis: np.ndarray | None = None, *, reduced: bool = False):
        self.q = _modulus(q)
        self.ambient = int(ambient)
        if basis is None or np.size(basis) == 0:
            red = np.zeros((0, self.ambient), dtype=np.int64)
        else:
            basis = np.asarray(basis).reshape(-1, self.ambient)
            if reduced:
                red = as_field_array(basis, self.q)
            else:
                red, r = rref(basis, self.q)
                red = red[:r]
        red.setflags(write=False)
        self.basis = red
        self.pivots = tuple(_pivots(red))

    @classmethod
    def span(cls, q, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        vecs = [np.asarray(v) for v in vectors]
        if not vecs:
            return cls(q, ambient)
        return cls(q, ambient, np.vstack(vecs))

    @classmethod
    def full(cls, q, ambient: int) -> "Subspace":
        return cls(q, ambient, np.eye(ambient, dtype=np.int64), reduced=True)

    @classmethod
    def zero(cls, q, ambient: int) -> "Subspace":
        return cls(q, ambient)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.q, self.ambient) == (other.q, other.ambient) and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.q, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(q={self.q}, ambient={self.ambient}, dim={self.dim})"

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Remainder of ``v`` (or of each row of a matrix) after clearing pivot columns."""
        v = as_field_array(v, self.q)
        single = v.ndim == 1
        w = v.reshape(-1, self.ambient).copy()
        for row, c in zip(self.basis, self.pivots):
            coeff = w[:, c].copy()
            if coeff.any():
                w = (w - np.outer(coeff, row)) % self.q
        return w[0] if single else w

    def contains(self, v: np.ndarray) -> bool:
        return not self.reduce(v).any()

    def contains_all(self, vectors: np.ndarray) -> bool:
        vectors = np.asarray(vectors).reshape(-1, self.ambient)
        return vectors.shape[0] == 0 or not self.reduce(vectors).any()

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_all(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.q, self.ambient, np.vstack([self.basis, other.basis]))

    def intersection(self, other: "Subspace") -> "Subspace":
        return self.annihilator().__add__(other.annihilator()).annihilator()

    def annihilator(self) -> "Subspace":
        """Vectors w with <w, v> = 0 for all v here (standard dot pairing)."""
        if self.dim == 0:
            return Subspace.full(self.q, self.ambient)
        return kernel(self.basis, self.q)

    def image(self, m: np.ndarray) -> "Subspace":
        """Image under a matrix in column convention (``v -> m @ v``)."""
        if self.dim == 0:
            return Subspace(self.q, m.shape[0])
        return Subspace(self.q, m.shape[0], matmul(self.basis, m.T, self.q))

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coefficients of ``v`` in the canonical basis (``v`` must lie in the span)."""
        v = as_field_array(v, self.q)
        coords = v[..., list(self.pivots)]
        return coords

    def complement_in(self, larger: "Subspace") -> np.ndarray:
        """Canonical vectors of ``larger`` spanning a complement of ``self``.

        Each basis row of ``larger`` is cleared on our pivot columns; the RREF
        of what remains is returned.
        """
        rest = self.reduce(larger.basis)
        red, r = rref(rest, self.q)
        return red[:r]


def kernel(m: np.ndarray, q) -> Subspace:
    """Right kernel ``{v : m @ v = 0}`` as a canonical subspace."""
    q = _modulus(q)
    m = np.atleast_2d(as_field_array(m, q))
    cols = m.shape[1]
    red, r = rref(m, q)
    pivots = _pivots(red[:r])
    free = [c for c in range(cols) if c not in set(pivots)]
    vecs = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        vecs[i, f] = 1
        for row, c in enumerate(pivots):
            vecs[i, c] = (-red[row, f]) % q
    return Subspace(q, cols, vecs)


# ---------------------------------------------------------------------------
# polynomials (coefficient tuples, low degree first)

def poly_trim(f: Sequence[int], q) -> tuple[int, ...]:
    q = _modulus(q)
    coeffs = [int(c) % q for c in f]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_monic(f: Sequence[int], q) -> tuple[int, ...]:
    q = _modulus(q)
    f = poly_trim(f, q)
    if not f:
        raise ValueError("zero polynomial has no monic form")
    lead = pow(f[-1], -1, q)
    return tuple(c * lead % q for c in f)


def poly_mul(f: Sequence[int], g: Sequence[int], q) -> tuple[int, ...]:
    q = _modulus(q)
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % q
    return poly_trim(out, q)


def poly_divmod(f: Sequence[int], g: Sequence[int], q) -> tuple[tuple[int, ...], tuple[int, ...]]:
    q = _modulus(q)
    f = list(poly_trim(f, q))
    g = poly_trim(g, q)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, q)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    for shift in range(len(f) - len(g), -1, -1):
        c = f[shift + len(g) - 1] * inv % q
        quot[shift] = c
        if c:
            for i, b in enumerate(g):
                f[shift + i] = (f[shift + i] - c * b) % q
    return poly_trim(quot, q), poly_trim(f, q)


def poly_divides(g: Sequence[int], f: Sequence[int], q) -> bool:
    return not poly_divmod(f, g, q)[1]


def poly_eval(f: Sequence[int], x: int, q) -> int:
    q = _modulus(q)
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % q
    return acc


def poly_str(f: Sequence[int], var: str = "x") -> str:
    """Human form with descending powers, e.g. ``x^2 + 2x + 1``."""
    terms = []
    for deg in range(len(f) - 1, -1, -1):
        c = int(f[deg])
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# minimal polynomials

class KrylovReducer:
    """Incremental elimination that detects the first linear dependence.

    Feed vectors ``v_0, v_1, ...``; :meth:`add` returns ``None`` while they
    stay independent and, at the first dependent ``v_m``, the monic relation
    ``(c_0, ..., c_{m-1}, 1)`` with ``sum c_i v_i = 0``.
    """

    def __init__(self, q):
        self.q = _modulus(q)
        self._rows: list[np.ndarray] = []
        self._combos: list[np.ndarray] = []
        self._pivots: list[int] = []
        self.count = 0

    def add(self, v: np.ndarray) -> tuple[int, ...] | None:
        q = self.q
        w = as_field_array(np.ravel(v), q).copy()
        m = self.count
        combo = np.zeros(m + 1, dtype=np.int64)
        combo[m] = 1
        for row, comb, c in zip(self._rows, self._combos, self._pivots):
            coeff = int(w[c])
            if coeff:
                w = (w - coeff * row) % q
                combo[: comb.size] = (combo[: comb.size] - coeff * comb) % q
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return tuple(int(c) for c in combo)
        c = int(nz[0])
        inv = pow(int(w[c]), -1, q)
        self._rows.append(w * inv % q)
        self._combos.append(combo * inv % q)
        self._pivots.append(c)
        self.count += 1
        return None


def krylov_min_poly(vectors: Iterator[np.ndarray], q, max_degree: int) -> tuple[int, ...]:
    """Monic least-degree relation among an iterated sequence of vectors."""
    red = KrylovReducer(q)
    for i, v in enumerate(vectors):
        rel = red.add(v)
        if rel is not None:
            return rel
        if i >= max_degree:
            break
    raise RuntimeError("no linear dependence within %d terms" % (max_degree + 1))


def min_poly_matrix(m: np.ndarray, q) -> tuple[int, ...]:
    """Minimal polynomial of a square matrix by Krylov iteration on I, M, M^2, ..."""
    q = _modulus(q)
    m = as_field_array(m, q)
    n, k = m.shape
    if n != k:
        raise ValueError("minimal polynomial needs a square matrix")

    def powers():
        cur = np.eye(n, dtype=np.int64)
        while True:
            yield cur
            cur = matmul(cur, m, q)

    return krylov_min_poly(powers(), q, n * n)


def berlekamp_massey(window: Sequence[int], q, degree_bound: int | None = None) -> tuple[int, ...]:
    """Minimal polynomial of a linearly recursive sequence.

    The result ``f`` is monic and satisfies ``sum f_i a_{n+i} = 0`` across the
    window.  When ``degree_bound`` is given the window must hold at least
    ``2 * degree_bound`` terms.
    """
    q = _modulus(q)
    s = [int(v) % q for v in window]
    if degree_bound is not None and len(s) < 2 * degree_bound:
        raise InsufficientTermsError(
            f"insufficient terms: {len(s)} values for degree bound {degree_bound}"
        )
    c = [1]
    b = [1]
    ell = 0
    shift = 1
    last = 1
    for n in range(len(s)):
        d = s[n]
        for i in range(1, ell + 1):
            if i < len(c):
                d = (d + c[i] * s[n - i]) % q
        if d == 0:
            shift += 1
            continue
        coef = d * pow(last, -1, q) % q
        t = list(c)
        need = len(b) + shift
        if len(c) < need:
            c.extend([0] * (need - len(c)))
        for i, bi in enumerate(b):
            c[i + shift] = (c[i + shift] - coef * bi) % q
        if 2 * ell <= n:
            ell = n + 1 - ell
            b = t
            last = d
            shift = 1
        else:
            shift += 1
    c = c + [0] * (ell + 1 - len(c))
    # connection polynomial C(x) -> reciprocal x^L C(1/x)
    return tuple(c[ell - i] for i in range(ell + 1))


def sequence_period(f: Sequence[int], q, cap: int = 10**6) -> int:
    """Least T >= 1 with x^T = 1 mod f (f monic, f(0) != 0)."""
    q = _modulus(q)
    f = poly_monic(f, q)
    if f[0] == 0:
        raise ValueError("period undefined: f(0) = 0")
    deg = len(f) - 1
    if deg == 0:
        return 1
    one = [1] + [0] * (deg - 1)
    cur = list(one)
    for t in range(1, cap + 1):
        # multiply by x, then reduce by x^deg = -sum f_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] = (cur[i] - top * f[i]) % q
        if cur == one:
            return t
    raise PeriodCapError(f"period exceeds cap {cap}")
