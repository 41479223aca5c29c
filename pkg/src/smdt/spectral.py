"""Characteristic polynomial of a binary pattern and the dominant-root test.

Three independent routes produce the characteristic polynomial of the signed
transfer matrix T_p:

* ``charpoly_det``: det(lambda I - T_p) by fraction-free (Bareiss) elimination.
  The polynomial entries are packed into one integer by substituting
  lambda = 2^B (Kronecker substitution), so the elimination is exact integer
  arithmetic and the coefficients are read back as balanced base-2^B digits.
* ``charpoly_periods``: read straight off the period set.
* ``charpoly_recurrence``: prefix-by-prefix recurrence driven by the KMP
  mismatch edges.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath
import numpy as np
import sympy

from .errors import AlphabetUnsupported, RootFindingFailed
from .kmp import build_automaton, gbar_vectors, transfer_matrix
from .pattern import Pattern, periods

DEFAULT_TOL = 1e-9
DEFAULT_HORIZON = 2000
ZERO_FREE_SUFFIX = 1000
_DPS = 40


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial with ascending coefficients c_0..c_deg."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) or (0,))

    @classmethod
    def from_desc(cls, desc: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(reversed(list(desc))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def desc(self) -> list[int]:
        return list(reversed(self.coeffs))

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def scale(self, a: int) -> "IntPolynomial":
        return IntPolynomial(tuple(a * c for c in self.coeffs))

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by lambda^k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _require_binary(p: Pattern) -> None:
    if p.sigma != 2:
        raise AlphabetUnsupported(f"characteristic polynomial needs sigma = 2, got {p.sigma}")


def _bareiss_det(rows: list[list[int]]) -> int:
    a = [r[:] for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def charpoly_matrix(T: np.ndarray) -> IntPolynomial:
    """Exact det(lambda I - T) for an integer matrix."""
    T = [[int(v) for v in row] for row in np.asarray(T)]
    m = len(T)
    if m == 0:
        return IntPolynomial((1,))
    # every coefficient is a signed sum of principal minors, bounded by prod(1 + |col|)
    bound = 1
    for j in range(m):
        bound *= 1 + math.isqrt(sum(T[i][j] ** 2 for i in range(m))) + 1
    bits = bound.bit_length() + 2
    X = 1 << bits
    rows = [[(X if i == j else 0) - T[i][j] for j in range(m)] for i in range(m)]
    det = _bareiss_det(rows)
    coeffs = []
    half = X >> 1
    for _ in range(m + 1):
        r = det & (X - 1)
        if r >= half:
            r -= X
        coeffs.append(r)
        det = (det - r) >> bits
    if det != 0:
        raise ArithmeticError("coefficient bound violated while unpacking determinant")
    return IntPolynomial(tuple(coeffs))


def charpoly_det(p: Pattern) -> IntPolynomial:
    _require_binary(p)
    return charpoly_matrix(transfer_matrix(p))


def charpoly_periods(p: Pattern) -> IntPolynomial:
    _require_binary(p)
    m = p.m
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    for k in periods(p):
        coeffs[m - k] = (-1) ** p.weight(k)
    return IntPolynomial(tuple(coeffs))


def charpoly_recurrence(p: Pattern) -> IntPolynomial:
    """Build P_1..P_m for the prefixes of p from each state's mismatch edge.

    If the mismatch edge of state q_i lands on q_{i-k+1}:
    P_i = lambda P_{i-1} - (-1)^wt(p[1..k]) P_{i-k} when k < i, and
    P_i = lambda P_{i-1} + (-1)^wt(p[1..i]) when k = i.
    """
    _require_binary(p)
    aut = build_automaton(p)
    P = [IntPolynomial((1,))]
    for i in range(1, p.m + 1):
        k = i + 1 - aut.back_transition(i)
        if k < i:
            P.append(P[i - 1].shift() - P[i - k].scale((-1) ** p.weight(k)))
        else:
            P.append(P[i - 1].shift() + IntPolynomial(((-1) ** p.weight(i),)))
    return P[p.m]


def gbar_last_state(p: Pattern, n_max: int) -> list[int]:
    """gbar(n, m) for n = 0..n_max straight from the automaton DP."""
    return [v[p.m - 1] for v in gbar_vectors(p, n_max)]


def g_recurrence_check(p: Pattern, n_max: int, poly: IntPolynomial | None = None) -> bool:
    """Whether gbar(., m) satisfies the characteristic recurrence for n <= n_max - m."""
    _require_binary(p)
    poly = charpoly_det(p) if poly is None else poly
    m = p.m
    u = gbar_last_state(p, n_max)
    c = poly.coeffs
    return all(sum(c[j] * u[n + j] for j in range(m + 1)) == 0 for n in range(n_max - m + 1))


def cayley_hamilton_residual(p: Pattern, poly: IntPolynomial | None = None) -> np.ndarray:
    """P(T_p) as an exact integer matrix; zero when P is the characteristic polynomial."""
    m = p.m
    # Horner partial sums stay below (m + 1) * 2^m in magnitude for a charpoly
    dtype = np.int64 if m <= 48 else object
    T = transfer_matrix(p).astype(dtype)
    poly = charpoly_det(p) if poly is None else poly
    acc = np.zeros((m, m), dtype=dtype)
    for c in poly.desc:  # Horner
        acc = acc.dot(T)
        for i in range(m):
            acc[i, i] += c
    return acc


@dataclass(frozen=True)
class RootProfile:
    roots: list[complex]
    multiplicities: list[int]
    moduli: list[float]
    case: int | None
    tolerance: float

    def as_dict(self) -> dict:
        return {
            "roots": [[r.real, r.imag] for r in self.roots],
            "multiplicities": self.multiplicities,
            "moduli": self.moduli,
            "case": self.case,
            "tolerance": self.tolerance,
        }


def _distinct_roots(poly: IntPolynomial) -> list[tuple[mpmath.mpc, int]]:
    lam = sympy.Symbol("lam")
    sp = sympy.Poly(poly.desc, lam)
    _, factors = sp.sqf_list()
    out = []
    with mpmath.workdps(_DPS):
        for factor, mult in factors:
            desc = [int(c) for c in factor.all_coeffs()]
            if len(desc) == 1:
                continue
            try:
                rts = mpmath.polyroots(desc, maxsteps=500, extraprec=2 * _DPS)
            except mpmath.libmp.NoConvergence as exc:
                raise RootFindingFailed(f"no convergence for factor {desc}") from exc
            if not isinstance(rts, list):
                rts = [rts]
            scale = sum(abs(c) for c in desc)
            for r in rts:
                resid = abs(mpmath.polyval(desc, r))
                if resid > mpmath.mpf(10) ** (-(_DPS // 2)) * scale * max(1, abs(r)) ** (len(desc) - 1):
                    raise RootFindingFailed(f"residual {resid} too large at root {r}")
                out.append((mpmath.mpc(r), mult))
    return out


def _classify(roots: list[mpmath.mpc], tol: float) -> int | None:
    """Match the three dominant-root patterns; None whenever the picture is ambiguous."""
    same = mpmath.mpf(10) ** (-(_DPS // 2))
    mods = [abs(r) for r in roots]
    top = mods[0]
    group = []
    for r, mod in zip(roots, mods):
        gap = (top - mod) / top
        if gap <= same:
            group.append(r)
        elif gap <= tol:
            return None
        else:
            break
    is_real = [abs(r.imag) <= same * max(1, abs(r)) for r in group]

    def conjugate(a, b) -> bool:
        return abs(a - mpmath.conj(b)) <= same * max(1, abs(a))

    if len(group) == 1:
        return 1
    if len(group) == 2:
        a, b = group
        return 2 if not any(is_real) and conjugate(a, b) else None
    if len(group) == 3 and sum(is_real) == 1:
        a, b = [r for r, real in zip(group, is_real) if not real]
        return 3 if conjugate(a, b) else None
    return None


def root_profile(poly: IntPolynomial, tol: float = DEFAULT_TOL) -> RootProfile:
    if poly.degree < 1 or not poly.is_monic:
        raise ValueError("root_profile needs a monic polynomial of degree >= 1")
    pairs = _distinct_roots(poly)
    pairs.sort(key=lambda rm: (-abs(rm[0]), -float(rm[0].real), -float(rm[0].imag)))
    roots = [r for r, _ in pairs]
    with mpmath.workdps(_DPS):
        case = _classify(roots, tol)
    return RootProfile(
        roots=[complex(r) for r in roots],
        multiplicities=[k for _, k in pairs],
        moduli=[float(abs(r)) for r in roots],
        case=case,
        tolerance=tol,
    )


@dataclass(frozen=True)
class SkolemVerdict:
    pattern: str
    charpoly: IntPolynomial
    root_case: int | None
    horizon_checked: int
    nonzero_from: int | None
    last_zero: int | None
    verdict: str

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "charpoly": self.charpoly.desc,
            "root_case": self.root_case,
            "horizon_checked": self.horizon_checked,
            "nonzero_from": self.nonzero_from,
            "last_zero": self.last_zero,
            "verdict": self.verdict,
            "evidence": "empirical: zero-free suffix of the checked range, no proved N0",
        }


def gbar_sequence(p: Pattern, horizon: int, poly: IntPolynomial | None = None) -> list[int]:
    """gbar(n, m) for n = 0..horizon: DP seeds for n < m, then the characteristic recurrence."""
    poly = charpoly_det(p) if poly is None else poly
    m = p.m
    u = gbar_last_state(p, min(horizon, m - 1))
    c = poly.coeffs
    for n in range(m, horizon + 1):
        u.append(-sum(c[j] * u[n - m + j] for j in range(m)))
    return u


def skolem_verdict(
    p: Pattern, horizon: int = DEFAULT_HORIZON, tol: float = DEFAULT_TOL
) -> SkolemVerdict:
    _require_binary(p)
    poly = charpoly_det(p)
    profile = root_profile(poly, tol)
    u = gbar_sequence(p, horizon, poly)
    zeros = [n for n, v in enumerate(u) if v == 0]
    last_zero = zeros[-1] if zeros else None
    start = 0 if last_zero is None else last_zero + 1
    nonzero_from = start if start <= horizon else None
    ok = (
        profile.case in (1, 2, 3)
        and nonzero_from is not None
        and nonzero_from <= horizon - ZERO_FREE_SUFFIX
    )
    return SkolemVerdict(
        pattern=str(p),
        charpoly=poly,
        root_case=profile.case,
        horizon_checked=horizon,
        nonzero_from=nonzero_from,
        last_zero=last_zero,
        verdict="evasive-by-algebra" if ok else "inconclusive",
    )
