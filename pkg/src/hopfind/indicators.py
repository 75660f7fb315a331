"""Sweedler powers, the indicator sequence nu_n(H) and its recurrence data."""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .gf_linear import (
    InsufficientTermsError,
    KrylovReducer,
    berlekamp_massey,
    matmul,
    poly_divides,
    poly_str,
    sequence_period,
)
from .hopf_core import (
    HopfAlgebraData,
    antipode_map,
    convolution_power,
    convolve,
    identity_map,
    unit_counit,
)

__all__ = [
    "LRSequence",
    "IndicatorReport",
    "sweedler_power",
    "sweedler_powers",
    "indicator",
    "indicator_sequence",
    "convolution_min_poly",
    "indicator_min_poly",
    "check_p_pertinent",
    "pertinent_sequence",
    "trace_antipode_power",
    "binomial_profile",
    "indicator_report",
    "default_window",
]


@dataclass(frozen=True)
class LRSequence:
    """A window ``values[i] = a_{offset + i}`` of a sequence over GF(q)."""

    q: int
    offset: int
    values: tuple[int, ...]
    min_poly: tuple[int, ...] | None = None
    period: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) % self.q for v in self.values))
        if self.min_poly is not None and not self.satisfies(self.min_poly):
            raise ValueError("min_poly does not annihilate the window")
        if self.period is not None and not self.has_period(self.period):
            raise ValueError(f"window is not {self.period}-periodic")

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.values))

    def __getitem__(self, n: int) -> int:
        if n not in self.indices:
            raise IndexError(f"index {n} outside window {self.offset}..{self.indices[-1]}")
        return self.values[n - self.offset]

    def __len__(self) -> int:
        return len(self.values)

    def items(self):
        return zip(self.indices, self.values)

    def satisfies(self, f) -> bool:
        """True if f_0 a_n + ... + f_m a_{n+m} = 0 for every full sub-window."""
        m = len(f) - 1
        v = self.values
        return all(
            sum(int(f[i]) * v[n + i] for i in range(m + 1)) % self.q == 0
            for n in range(len(v) - m)
        )

    def has_period(self, t: int) -> bool:
        v = self.values
        return all(v[i] == v[i + t] for i in range(len(v) - t))

    def __mul__(self, other: "LRSequence") -> "LRSequence":
        if (self.q, self.offset, len(self)) != (other.q, other.offset, len(other)):
            raise ValueError("sequences live on different windows")
        return LRSequence(self.q, self.offset, tuple(a * b for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class IndicatorReport:
    algebra: str
    p: int
    window: tuple[int, int]
    sequence: LRSequence
    min_poly: tuple[int, ...]
    period: int
    is_p_pertinent: bool

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "p": self.p,
            "window": list(self.window),
            "values": list(self.sequence.values),
            "min_poly": list(self.min_poly),
            "period": self.period,
            "p_pertinent": self.is_p_pertinent,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def table(self) -> str:
        lines = [f"{n:>6}  {v}" for n, v in self.sequence.items()]
        lines.append(f"min poly: {poly_str(self.min_poly)}")
        lines.append(f"period: {self.period}")
        lines.append(f"p-pertinent: {'yes' if self.is_p_pertinent else 'no'}")
        return "\n".join(lines)


def default_window(p: int) -> tuple[int, int]:
    return -2 * p * p, 2 * p * p


# ---------------------------------------------------------------------------

def sweedler_power(H: HopfAlgebraData, m: int) -> np.ndarray:
    """P^(m) = m-th convolution power of id (P^(0) = u eps, P^(-1) = S)."""
    return convolution_power(identity_map(H), m, H)


def sweedler_powers(H: HopfAlgebraData, lo: int, hi: int):
    """Yield ``(m, P^(m))`` for m = lo..hi, one convolution per step."""
    cur = sweedler_power(H, lo)
    ident = identity_map(H)
    for m in range(lo, hi + 1):
        yield m, cur
        if m < hi:
            cur = convolve(cur, ident, H)


def _trace_after_antipode(H: HopfAlgebraData, P: np.ndarray) -> int:
    # Tr(S o P) with S = antipode.T in column convention
    return int(np.sum(H.antipode * P) % H.p)


def indicator(H: HopfAlgebraData, n: int) -> int:
    """nu_n(H) = Tr(S o P^(n-1))."""
    return _trace_after_antipode(H, sweedler_power(H, n - 1))


def indicator_sequence(H: HopfAlgebraData, n_lo: int, n_hi: int) -> LRSequence:
    """nu_n(H) for n_lo <= n <= n_hi.

    A single square-and-multiply jump reaches P^(n_lo - 1); every later term
    costs one convolution with id.
    """
    if n_lo > n_hi:
        raise ValueError("empty window")
    values = [_trace_after_antipode(H, P) for _, P in sweedler_powers(H, n_lo - 1, n_hi - 1)]
    return LRSequence(H.p, n_lo, tuple(values))


def convolution_min_poly(H: HopfAlgebraData) -> tuple[int, ...]:
    """Minimal polynomial of id in the convolution algebra End(H)."""
    red = KrylovReducer(H.p)
    ident = identity_map(H)
    cur = unit_counit(H)
    for _ in range(H.dim ** 2 + 1):
        rel = red.add(cur)
        if rel is not None:
            return rel
        cur = convolve(cur, ident, H)
    raise RuntimeError("Krylov iteration did not terminate")


def indicator_min_poly(H: HopfAlgebraData) -> tuple[int, ...]:
    """Minimal polynomial of {nu_n(H)}.

    Phi = min poly of id under convolution bounds the degree; Berlekamp-Massey
    runs on 2 deg(Phi) terms.  The result divides Phi and has f(0) != 0.
    """
    phi = convolution_min_poly(H)
    m = len(phi) - 1
    seq = indicator_sequence(H, 1, max(2 * m, 2))
    f = berlekamp_massey(seq.values, H.p, degree_bound=m)
    if not poly_divides(f, phi, H.p):
        raise ArithmeticError("sequence polynomial does not divide the convolution polynomial")
    if f[0] == 0:
        raise ArithmeticError("indicator minimal polynomial has zero constant term")
    return f


def check_p_pertinent(seq: LRSequence, p: int) -> bool:
    """True iff a_n = (0 if p | n else 1) at every index of the window."""
    if len(seq) < 2 * p:
        raise InsufficientTermsError(f"window of {len(seq)} terms is shorter than 2p = {2 * p}")
    return all(v == (0 if n % p == 0 else 1 % seq.q) for n, v in seq.items())


def pertinent_sequence(p: int, q: int, n_lo: int, n_hi: int) -> LRSequence:
    """The p-pertinent sequence read over GF(q) on [n_lo, n_hi]."""
    return LRSequence(q, n_lo, tuple(0 if n % p == 0 else 1 for n in range(n_lo, n_hi + 1)))


def trace_antipode_power(H: HopfAlgebraData, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    cur = np.eye(H.dim, dtype=np.int64)
    s = antipode_map(H)
    for _ in range(n):
        cur = matmul(s, cur, H.p)
    return int(np.trace(cur) % H.p)


def binomial_profile(p: int, n_hi: int) -> LRSequence:
    """B_n = sum_j C(n, j) b_j mod p for n = 1..n_hi, b_0 = 0, b_j = (-1)^(j+1) for 0 < j < p."""
    if n_hi < 2 * p:
        raise ValueError("n_hi must be at least 2p")
    b = [0] + [(-1) ** (j + 1) % p for j in range(1, p)]
    row = [1]  # Pascal row n, reduced mod p
    values = []
    for n in range(1, n_hi + 1):
        row = [1] + [(row[j - 1] + row[j]) % p for j in range(1, n)] + [1]
        values.append(sum(row[j] * b[j] for j in range(min(n, p - 1) + 1)) % p)
    return LRSequence(p, 1, tuple(values))


def indicator_report(H: HopfAlgebraData, n_lo: int | None = None, n_hi: int | None = None,
                     name: str | None = None) -> IndicatorReport:
    lo, hi = default_window(H.p)
    n_lo = lo if n_lo is None else n_lo
    n_hi = hi if n_hi is None else n_hi
    f = indicator_min_poly(H)
    period = sequence_period(f, H.p)
    seq = indicator_sequence(H, n_lo, n_hi)
    seq = LRSequence(seq.q, seq.offset, seq.values, f, period)
    try:
        pert = check_p_pertinent(seq, H.p)
    except InsufficientTermsError:
        # short windows: decide on the recurrence instead
        full = indicator_sequence(H, *default_window(H.p))
        pert = check_p_pertinent(full, H.p)
    return IndicatorReport(name or H.name or "H", H.p, (n_lo, n_hi), seq, f, period, pert)
