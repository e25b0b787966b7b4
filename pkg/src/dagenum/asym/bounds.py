"""Two-sided Airy-profile witnesses bracketing the scaled-table columns.

The scaled recurrence d[i, j] = U(i, j) d[i-1, j-1] + d[i-1, j+k-1] admits
explicit sandwich witnesses of the form

    X(i, j) = bracket(i, j) * Ai(a1 + B (j + 1) / i^(1/3))

with B = (2/(k-1))^(1/3), a1 the largest real zero of Ai, and bracket a
polynomial correction in j/i^(2/3), j^2/i, j/i, j^2/i^(4/3), j^3/i^(5/3)
(plus an eta j^4/i^2 term on the upper side).  Together with the per-column
factors

    s(i) = k (1 + a1 / (B i^(2/3)) + (7k - 6) / (6 i) -+ i^(-7/6))

the lower witness eventually satisfies, inside a sublinear column window,

    s(i) X(i, j) <= U(i, j) X(i-1, j-1) + X(i-1, j+k-1)

with X clamped at zero, and the upper witness the reversed inequality
without clamping.  Iterating either inequality down the columns sandwiches
d[i, 0] between multiples of prod_t s(t), which is where the stretched
exponential exp(3 a1 i^(1/3) / B) comes from.

verify_bounds checks the cell inequalities exhaustively over a finite index
range and reports every violating cell as data; it never extrapolates
beyond the scanned range.  p_ratio_check validates, in exact arithmetic,
the companion monotonicity of the weighted suffix-walk counts that the
window-truncation argument rests on.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .airy import _airy_ai_vec, airy_ai, airy_root_a1
from .scaled import _exact_rows, weight_u_exact

__all__ = [
    "BoundParams",
    "BoundReport",
    "bound_value",
    "h_product_log",
    "min_eta",
    "p_ratio_check",
    "s_factor",
    "verify_bounds",
]

# Below this magnitude both inequality sides have fallen through the
# double-precision denormal range (Ai underflows near argument 108), so a
# raw comparison only measures rounding garbage; such cells count as
# satisfied.  Genuine in-window comparisons stay ~40 orders above the floor.
_UNDERFLOW_FLOOR = 1e-290

# Ai(x) is exactly 0.0 in double precision past x ~ 108; skip the evaluator
# for larger arguments instead of letting the asymptotic series underflow.
_AI_ZERO_CUTOFF = 115.0

_SIDES = ("lower", "upper")


def _check_side(side: str) -> None:
    if side not in _SIDES:
        raise ValueError(f"side: {side!r} is not 'lower' or 'upper'")


def min_eta(k: int) -> float:
    """Admissibility floor for the upper witness's quartic coefficient."""
    if k < 2:
        raise ValueError(f"arity-k: {k}")
    return (k + 2) ** 2 / (72.0 * (k - 1) ** 2)


@dataclass(frozen=True)
class BoundParams:
    """Constants of the sandwich witnesses for one arity.

    eta only enters the upper witness; it must sit strictly above
    min_eta(k).  epsilon controls the column windows (j < i^(2/3-eps) on
    the lower side, j < i^(1-eps) on the upper side).  i0 is the verified
    threshold index, None until a verifier run fills it in.
    """

    k: int
    eta: float
    epsilon: float
    i0: Optional[int] = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"arity-k: {self.k}")
        floor = min_eta(self.k)
        if not self.eta > floor:
            raise ValueError(f"eta-floor: {self.eta} is not above {floor}")
        if not 0.0 < self.epsilon < 2.0 / 3.0:
            raise ValueError(f"epsilon-range: {self.epsilon} outside (0, 2/3)")
        assert self.B > 0.0
        assert -2.4 < self.a1 < -2.3

    @property
    def B(self) -> float:
        return (2.0 / (self.k - 1)) ** (1.0 / 3.0)

    @property
    def a1(self) -> float:
        return airy_root_a1()


def _bracket_coeffs(p: BoundParams) -> tuple[float, float, float, float, float]:
    # c4 = c1^2/2 and c5 = c1*c2; kept in closed form for readability.
    k, B, a1 = p.k, p.B, p.a1
    c1 = a1 * (k - 2) * B**2 / 6.0
    c2 = (k + 2) / (6.0 * (k - 1))
    c3 = (7 * k - 11) / (6.0 * (k - 1))
    c4 = a1**2 * (k - 2) ** 2 * B**4 / 72.0
    c5 = a1 * (k**2 - 4) * B**5 / 72.0
    return c1, c2, c3, c4, c5


def _default_quartic(p: BoundParams, i: int, j):
    """Standard upper-side quartic correction eta * j^4 / i^2.

    verify_bounds and bound_value accept any callable with this signature
    in its place, so alternative readings of the quartic term can be
    tested without touching the verifier.
    """
    return p.eta * j**4 / float(i) ** 2


QuarticTerm = Callable[[BoundParams, int, "np.ndarray | float"], "np.ndarray | float"]


def _ai_profile(args: np.ndarray) -> np.ndarray:
    out = np.zeros_like(args)
    live = args <= _AI_ZERO_CUTOFF
    if np.any(live):
        out[live] = _airy_ai_vec(args[live])
    return out


def _x_row(
    side: str,
    p: BoundParams,
    i: int,
    js: np.ndarray,
    quartic: QuarticTerm,
    clamp: bool,
) -> np.ndarray:
    """Witness values X(i, j) over an integer column vector js."""
    jf = js.astype(np.float64)
    c1, c2, c3, c4, c5 = _bracket_coeffs(p)
    i13 = float(i) ** (1.0 / 3.0)
    i23 = i13 * i13
    br = (
        1.0
        - c1 * jf / i23
        - c2 * jf * jf / i
        + c3 * jf / i
        + c4 * jf * jf / (i23 * i23)
        + c5 * jf**3 / (i23 * i23 * i13)
    )
    if side == "upper":
        br = br + quartic(p, i, jf)
    vals = br * _ai_profile(p.a1 + p.B * (jf + 1.0) / i13)
    if clamp:
        vals = np.maximum(vals, 0.0)
    return vals


def bound_value(
    side: str,
    params: BoundParams,
    i: int,
    j: int,
    quartic: Optional[QuarticTerm] = None,
) -> float:
    """Witness value X(i, j) from the closed formula.

    Returns the raw formula value; the lower side's clamping at zero is
    applied by verify_bounds, not here.  The ghost column j = -1 evaluates
    to bracket * Ai(a1), which is zero up to the root tolerance.
    """
    _check_side(side)
    if i < 1:
        raise ValueError(f"out-of-range: i={i} is below 1")
    c1, c2, c3, c4, c5 = _bracket_coeffs(params)
    jf = float(j)
    i13 = float(i) ** (1.0 / 3.0)
    i23 = i13 * i13
    br = (
        1.0
        - c1 * jf / i23
        - c2 * jf * jf / i
        + c3 * jf / i
        + c4 * jf * jf / (i23 * i23)
        + c5 * jf**3 / (i23 * i23 * i13)
    )
    if side == "upper":
        q = quartic if quartic is not None else _default_quartic
        br += q(params, i, jf)
    return br * airy_ai(params.a1 + params.B * (jf + 1.0) / i13)


def s_factor(side: str, k: int, i: int) -> float:
    """Per-column growth factor; the sign of the i^(-7/6) slack term is
    what separates the lower factor from the upper one."""
    _check_side(side)
    if k < 2:
        raise ValueError(f"arity-k: {k}")
    if i < 1:
        raise ValueError(f"out-of-range: i={i} is below 1")
    B = (2.0 / (k - 1)) ** (1.0 / 3.0)
    tail = float(i) ** (-7.0 / 6.0)
    if side == "lower":
        tail = -tail
    return k * (
        1.0
        + airy_root_a1() / (B * float(i) ** (2.0 / 3.0))
        + (7 * k - 6) / (6.0 * i)
        + tail
    )


def h_product_log(side: str, k: int, i: int, start: int = 1) -> float:
    """ln prod_{t=start..i} s(t), the column normalizer in log form.

    Raises a "log-domain" error when a factor is non-positive: for k=2 the
    lower side has s(1) < 0, so its product only has a real logarithm when
    started at t=2 (constant offsets are absorbed by the bracketing
    constants, so diagnostics may shift the start index).
    """
    if start < 1:
        raise ValueError(f"out-of-range: start={start} is below 1")
    if i < start:
        raise ValueError(f"out-of-range: i={i} is below start={start}")
    total = 0.0
    for t in range(start, i + 1):
        s = s_factor(side, k, t)
        if s <= 0.0:
            raise ValueError(f"log-domain: factor at t={t} is {s!r}")
        total += math.log(s)
    return total


@dataclass
class BoundReport:
    """Outcome of one exhaustive inequality scan."""

    side: str
    params: BoundParams
    i_min: int
    i_max: int
    violations: list[tuple[int, int]]

    @property
    def first_verified_i0(self) -> int:
        assert self.params.i0 is not None
        return self.params.i0

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "k": self.params.k,
            "eta": self.params.eta,
            "epsilon": self.params.epsilon,
            "i_min": self.i_min,
            "i_max": self.i_max,
            "first_verified_i0": self.first_verified_i0,
            "violations": [list(v) for v in self.violations],
        }


def _window(i: int, p_exp: float) -> int:
    """Number of window columns at index i; j then ranges over [0, count)."""
    return math.ceil(float(i) ** p_exp)


def _scan_block(
    side: str,
    params: BoundParams,
    p_exp: float,
    quartic: QuarticTerm,
    lo: int,
    hi: int,
) -> list[tuple[int, int]]:
    """Check the cell inequalities for every i in [lo, hi].

    Row i is evaluated once over j in [-1, window+k+1] and reused as the
    parent of row i+1; the window widens by at most one column per step,
    so the retained row always covers the parent positions j-1 and j+k-1.
    """
    k = params.k
    clamp = side == "lower"
    out: list[tuple[int, int]] = []
    cnt = _window(lo, p_exp)
    prev = _x_row(side, params, lo - 1, np.arange(-1, cnt + k + 2), quartic, clamp)
    for i in range(lo, hi + 1):
        cnt = _window(i, p_exp)
        cur = _x_row(side, params, i, np.arange(-1, cnt + k + 2), quartic, clamp)
        assert prev.shape[0] >= cnt + k + 1, "parent row too short"
        jf = np.arange(cnt, dtype=np.float64)
        u = (k - 1) ** 2 * (i - jf + k) / ((k - 1) * i + jf)
        lhs = s_factor(side, k, i) * cur[1 : cnt + 1]
        rhs = u * prev[0:cnt] + prev[k : cnt + k]
        bad = (lhs > rhs) if clamp else (lhs < rhs)
        bad &= np.maximum(np.abs(lhs), np.abs(rhs)) >= _UNDERFLOW_FLOOR
        if bad.any():
            out.extend((i, int(j)) for j in np.nonzero(bad)[0])
        prev = cur
    return out


def verify_bounds(
    side: str,
    k: int,
    eta: float,
    epsilon: float,
    i_range: tuple[int, int],
    threads: Optional[int] = None,
    quartic: Optional[QuarticTerm] = None,
) -> BoundReport:
    """Exhaustively check one witness inequality on a finite index range.

    Scans every cell (i, j) with i_range[0] <= i <= i_range[1] and j inside
    the side's window.  Violations are reported as data, never raised.  The
    report's first_verified_i0 is the least index beyond which the scanned
    range is violation-free (i_min when the whole range is clean); nothing
    is claimed about indices outside the range.

    threads splits the index range into contiguous blocks scanned in
    parallel; each block recomputes its entry parent row, so the result is
    identical for any thread count.
    """
    _check_side(side)
    params = BoundParams(k=k, eta=eta, epsilon=epsilon)
    i_min, i_max = int(i_range[0]), int(i_range[1])
    if i_min < 2 or i_max < i_min:
        raise ValueError(f"i-range: ({i_min}, {i_max}) needs 2 <= i_min <= i_max")
    q = quartic if quartic is not None else _default_quartic
    p_exp = (2.0 / 3.0 - epsilon) if side == "lower" else (1.0 - epsilon)
    total = i_max - i_min + 1
    n_jobs = min(max(1, int(threads)) if threads else 1, total)
    if n_jobs == 1:
        violations = _scan_block(side, params, p_exp, q, i_min, i_max)
    else:
        blocks = []
        base, extra = divmod(total, n_jobs)
        lo = i_min
        for b in range(n_jobs):
            hi = lo + base - 1 + (1 if b < extra else 0)
            blocks.append((lo, hi))
            lo = hi + 1
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = pool.map(
                lambda blk: _scan_block(side, params, p_exp, q, blk[0], blk[1]),
                blocks,
            )
            violations = [v for part in parts for v in part]
    i0 = violations[-1][0] + 1 if violations else i_min
    return BoundReport(
        side=side,
        params=replace(params, i0=i0),
        i_min=i_min,
        i_max=i_max,
        violations=violations,
    )


def p_ratio_check(k: int, n: int) -> dict:
    """Exact monotonicity checks for the weighted suffix-walk counts.

    p[r][s] counts, with U weights on up steps, the walks from (r, s) to
    (kn, 0) that never go below the axis; they are computed backward in
    exact rationals.  Two families are checked: p[r][s]/(s+1) is
    nonincreasing in s over admissible s <= r (same residue class mod k),
    and the corner consequence p[kx][ky] <= (ky+1) p[kx][0] for y <= x.
    The suffix count at the origin must also reproduce the forward
    weighted-walk total, tying the two routes together exactly.

    Returns {"ok", "kn", "pairs_checked", "first_violation"}.
    """
    if k < 2:
        raise ValueError(f"arity-k: {k}")
    if n < 1:
        raise ValueError(f"out-of-range: n={n}")
    kn = k * n
    if kn > 60:
        raise ValueError(f"too-large: exact suffix counts capped at kn=60, got {kn}")
    cols: list[dict[int, Fraction]] = [dict() for _ in range(kn + 1)]
    cols[kn][0] = Fraction(1)
    for r in range(kn - 1, -1, -1):
        nxt = cols[r + 1]
        cur = cols[r]
        for s in range(r % k, (k - 1) * (kn - r) + 1, k):
            v = Fraction(0)
            up = nxt.get(s + 1)
            if up is not None:
                v += weight_u_exact(k, r + 1, s + 1) * up
            if s - k + 1 >= 0:
                dn = nxt.get(s - k + 1)
                if dn is not None:
                    v += dn
            if v:
                cur[s] = v
    rows = _exact_rows(k, kn)
    assert cols[0].get(0, Fraction(0)) == rows[kn][0], "suffix/forward mismatch"
    pairs = 0
    first: Optional[tuple] = None
    for r in range(kn + 1):
        admissible = [s for s in sorted(cols[r]) if s <= r]
        for a in range(len(admissible) - 1):
            s1 = admissible[a]
            for b in range(a + 1, len(admissible)):
                s2 = admissible[b]
                pairs += 1
                if cols[r][s1] * (s2 + 1) < cols[r][s2] * (s1 + 1):
                    if first is None:
                        first = ("monotone", r, s1, s2)
    for x in range(n + 1):
        for y in range(x + 1):
            pairs += 1
            if cols[k * x].get(k * y, Fraction(0)) > (k * y + 1) * cols[k * x].get(
                0, Fraction(0)
            ):
                if first is None:
                    first = ("corner", x, y)
    return {
        "ok": first is None,
        "kn": kn,
        "pairs_checked": pairs,
        "first_violation": first,
    }
