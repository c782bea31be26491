"""Integer-order Bessel J evaluation and positive-zero tables.

Evaluation goes through the quadrature kernel backend (compiled or pure);
zeros are located by sign-change scanning at half the asymptotic spacing
and refined with Brent's method.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import _kernels
from .errors import ConsistencyError, RangeError

MAX_ORDER = 5000
MAX_ARGUMENT = 3000.0
SCAN_STEP = math.pi / 2
ZERO_RESIDUAL_TOL = 1e-11
_BRENT_RTOL = 4 * np.finfo(float).eps


class ZeroKind(enum.Enum):
    DIRICHLET = "dirichlet"   # zeros of J_k
    NEUMANN = "neumann"       # zeros of J_k'


def bessel_j(k: int, x: float) -> float:
    """J_k(x) via the cosine integral representation.

    Composite Gauss-Legendre with node count 64 + 8*ceil((k+x)/pi);
    absolute error well under 1e-11 for x <= 3000.
    """
    _check_range(k, x)
    return _kernels.bessel_j_scalar(k, float(x))


def bessel_j_prime(k: int, x: float) -> float:
    """J_k'(x) = (J_{k-1}(x) - J_{k+1}(x))/2, with J_0' = -J_1."""
    _check_range(k, x)
    return _jprime(k, float(x))


def _check_range(k: int, x: float) -> None:
    if not (0 <= k <= MAX_ORDER):
        raise RangeError(f"order {k} outside supported [0, {MAX_ORDER}]")
    if not (0 <= x <= MAX_ARGUMENT):
        raise RangeError(f"argument {x} outside supported [0, {MAX_ARGUMENT}]")


def _jprime(k: int, x: float) -> float:
    if k == 0:
        return -_kernels.bessel_j_scalar(1, x)
    return 0.5 * (_kernels.bessel_j_scalar(k - 1, x)
                  - _kernels.bessel_j_scalar(k + 1, x))


def _eval_batch(k: int, kind: ZeroKind, xs: np.ndarray) -> np.ndarray:
    if kind is ZeroKind.DIRICHLET:
        return _kernels.bessel_j_batch(k, xs)
    if k == 0:
        return -_kernels.bessel_j_batch(1, xs)
    return 0.5 * (_kernels.bessel_j_batch(k - 1, xs)
                  - _kernels.bessel_j_batch(k + 1, xs))


def mcmahon_estimate(k: int, l: int, kind: ZeroKind) -> float:
    """Large-index asymptotic for the l-th zero.

    Dirichlet: beta - (4k^2-1)/(8 beta), beta = (l + k/2 - 1/4) pi.
    Neumann:   beta - (4k^2+3)/(8 beta), beta = (l + k/2 - 3/4) pi.

    For k = 0 Neumann the classical index convention is shifted by one:
    the formula at index l approximates the (l-1)-th positive zero of
    J_0' (the l-th positive zero of J_1 is matched by index l+1).
    """
    if l < 1:
        raise RangeError("zero index l must be >= 1")
    if kind is ZeroKind.DIRICHLET:
        beta = (l + 0.5 * k - 0.25) * math.pi
        return beta - (4 * k * k - 1) / (8 * beta)
    beta = (l + 0.5 * k - 0.75) * math.pi
    return beta - (4 * k * k + 3) / (8 * beta)


def _mcmahon_index(k: int, z: float, kind: ZeroKind) -> float:
    """Inverse of mcmahon_estimate: fractional index of a zero at z."""
    if kind is ZeroKind.DIRICHLET:
        return z / math.pi + (4 * k * k - 1) / (8 * math.pi * z) - 0.5 * k + 0.25
    idx = z / math.pi + (4 * k * k + 3) / (8 * math.pi * z) - 0.5 * k + 0.75
    if k == 0:
        idx -= 1.0  # A&S index shift for J_0'
    return idx


@dataclass(frozen=True)
class ModeLine:
    """All positive zeros of J_k (or J_k') below upper_bound."""
    order: int
    kind: ZeroKind
    upper_bound: float
    zeros: np.ndarray = field(repr=False)

    def __post_init__(self):
        z = np.asarray(self.zeros, dtype=np.float64)
        object.__setattr__(self, "zeros", z)
        if len(z) > 1 and not np.all(np.diff(z) > 0):
            raise ConsistencyError(
                f"zeros of order {self.order} not strictly increasing")

    def __len__(self):
        return len(self.zeros)


def find_zeros(k: int, kind: ZeroKind, upper: float) -> ModeLine:
    """Locate every positive zero on (max(0.8k, 0.1), upper].

    Scans with step pi/2 (no two zeros fit in one step: the minimal
    spacing of J_k / J_k' zeros exceeds 3.1), refines each bracket with
    Brent, and cross-checks the count against the McMahon index.
    """
    if upper <= k:
        raise RangeError(f"upper bound {upper} must exceed the order {k}")
    _check_range(k, min(upper, MAX_ARGUMENT))
    if upper > MAX_ARGUMENT:
        raise RangeError(f"upper bound {upper} beyond supported {MAX_ARGUMENT}")

    start = max(0.8 * k, 0.1)
    grid = np.arange(start, upper, SCAN_STEP)
    if len(grid) == 0 or grid[-1] < upper:
        grid = np.append(grid, upper)
    vals = _eval_batch(k, kind, grid)

    def f(x: float) -> float:
        if kind is ZeroKind.DIRICHLET:
            return _kernels.bessel_j_scalar(k, x)
        return _jprime(k, x)

    zeros = []
    for i in np.where(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        zeros.append(brentq(f, grid[i], grid[i + 1],
                            xtol=1e-13, rtol=_BRENT_RTOL))
    exact = np.where(vals == 0.0)[0]
    for i in exact:
        zeros.append(float(grid[i]))
    zeros = np.array(sorted(z for z in zeros if z <= upper))

    _verify_line(k, kind, zeros)
    line = ModeLine(order=k, kind=kind, upper_bound=float(upper), zeros=zeros)
    return line


def _verify_line(k: int, kind: ZeroKind, zeros: np.ndarray) -> None:
    label = f"order {k} {kind.value}"
    if len(zeros) == 0:
        return
    resid = np.abs(_eval_batch(k, kind, zeros))
    if np.max(resid) > ZERO_RESIDUAL_TOL:
        raise ConsistencyError(
            f"{label}: refined zero residual {np.max(resid):.2e} above "
            f"{ZERO_RESIDUAL_TOL}")
    if len(zeros) > 1:
        gaps = np.diff(zeros)
        if np.min(gaps) < 0.6 * math.pi:
            raise ConsistencyError(
                f"{label}: duplicate/spurious zero (gap {np.min(gaps):.3f})")
        asym = gaps[zeros[:-1] > max(3 * k, 50)]
        if len(asym) and (np.min(asym) < 0.8 * math.pi
                          or np.max(asym) > 1.2 * math.pi):
            raise ConsistencyError(
                f"{label}: missed zero suspected (asymptotic gap outside "
                f"[0.8, 1.2]*pi)")
    z_last = zeros[-1]
    if z_last > max(4 * k, 40):
        pred = _mcmahon_index(k, z_last, kind)
        if abs(pred - len(zeros)) > 1.0:
            raise ConsistencyError(
                f"{label}: zero count {len(zeros)} disagrees with McMahon "
                f"index {pred:.2f} (interlacing violation)")


def check_interlacing(line_d: ModeLine, line_n: ModeLine) -> None:
    """Between consecutive Dirichlet zeros of order k lies exactly one
    Neumann zero and vice versa; raises on violation."""
    if line_d.order != line_n.order:
        raise ValueError("interlacing check needs matching orders")
    upper = min(line_d.upper_bound, line_n.upper_bound)
    zd = line_d.zeros[line_d.zeros <= upper]
    zn = line_n.zeros[line_n.zeros <= upper]
    merged = np.concatenate([zd, zn])
    labels = np.concatenate([np.zeros(len(zd)), np.ones(len(zn))])
    order = np.argsort(merged)
    lab = labels[order]
    if np.any(lab[:-1] == lab[1:]):
        raise ConsistencyError(
            f"order {line_d.order}: Dirichlet/Neumann zeros fail to "
            f"interlace below {upper}")
