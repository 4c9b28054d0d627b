"""Closed-form bounds and reference curves, exact where possible.

Rational inputs stay rational (fractions.Fraction); irrational evaluation
uses mpmath at a configurable precision (default 50 significant digits).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional, Sequence, Union

import mpmath as mp

DEFAULT_DPS = 50

Rational = Union[Fraction, int]


class FormulaError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# degree threshold for the 4-vertex 3-edge motif
# ---------------------------------------------------------------------------


def f_n_d(n: int, d: int) -> Fraction:
    """(n^2 - 5n + 6 - 3d^2 + 5d)/2, cross-checked against its defining form
    C(n-2,2) + d - d(d-1) - C(d,2)."""
    if not 1 <= d <= n - 2:
        raise FormulaError(f"d must be in 1..{n - 2}, got {d}")
    quadratic = Fraction(n * n - 5 * n + 6 - 3 * d * d + 5 * d, 2)
    defining = comb(n - 2, 2) + d - d * (d - 1) - comb(d, 2)
    if quadratic != defining:
        raise ArithmeticError(f"f_n_d forms disagree at n={n}, d={d}")
    return quadratic


def d_star(n: int, dps: int = DEFAULT_DPS) -> tuple[mp.mpf, int]:
    """Root of (n-1)d/2 = f_n(d): (sqrt(13n^2-72n+108) - n + 6)/6.

    Self-check: the defining-equation residual must be below 1e-9.
    """
    if n < 3:
        raise FormulaError(f"need n >= 3, got {n}")
    with mp.workdps(dps):
        d = (mp.sqrt(13 * n * n - 72 * n + 108) - n + 6) / 6
        lhs = (n - 1) * d / 2
        rhs = (n * n - 5 * n + 6 - 3 * d * d + 5 * d) / 2
        if abs(lhs - rhs) >= mp.mpf("1e-9"):
            raise ArithmeticError(f"d_star residual check failed at n={n}")
        return d, int(mp.floor(d))


# ---------------------------------------------------------------------------
# piecewise upper envelope for the minimum of the maximum triangle-degree
# ---------------------------------------------------------------------------


def _tau_interval(rho: Fraction) -> int:
    """The r with rho in [(r-1)/r, r/(r+1)]; exact right endpoints take the
    lower r so evaluation is deterministic (the branch values coincide)."""
    q = 1 / (1 - rho)  # in [r, r+1]
    if q.denominator == 1:
        return max(2, int(q) - 1)
    return max(2, int(q))


def tau_upper(rho: Rational) -> Fraction:
    """Piecewise-linear upper envelope; exact rational output.

    Zero for rho <= 1/2; continuous and nondecreasing on [0, 1].
    """
    rho = _frac(rho)
    if not 0 <= rho <= 1:
        raise FormulaError(f"rho must be in [0, 1], got {rho}")
    if rho <= Fraction(1, 2):
        return Fraction(0)
    if rho == 1:
        return Fraction(1)
    r = _tau_interval(rho)
    breakpoint_ = Fraction(r, r + 1) - Fraction(1, 3 * r * (r + 1))
    if rho <= breakpoint_:
        return Fraction((r - 1) * (r - 2), r * r) + Fraction(3 * (r - 1), r) * (
            rho - Fraction(r - 1, r)
        )
    return Fraction(r * (r - 1), (r + 1) ** 2) - Fraction(3 * (r - 1), r + 1) * (
        Fraction(r, r + 1) - rho
    )


def tau_upper_inverse(y: Rational) -> Fraction:
    """Inverse of tau_upper on the strictly increasing region (1/2, 1]."""
    y = _frac(y)
    if not 0 <= y <= 1:
        raise FormulaError(f"y must be in [0, 1], got {y}")
    if y == 0:
        return Fraction(1, 2)
    if y == 1:
        return Fraction(1)
    r = 2
    while Fraction(r * (r - 1), (r + 1) ** 2) < y:
        r += 1
    left_val = Fraction((r - 1) * (r - 2), r * r)
    breakpoint_ = Fraction(r, r + 1) - Fraction(1, 3 * r * (r + 1))
    break_val = tau_upper(breakpoint_)
    if y <= break_val:
        return Fraction(r - 1, r) + (y - left_val) * Fraction(r, 3 * (r - 1))
    return Fraction(r, r + 1) - (Fraction(r * (r - 1), (r + 1) ** 2) - y) * Fraction(
        r + 1, 3 * (r - 1)
    )


# ---------------------------------------------------------------------------
# greedy factorisation x = prod (r_i - 1)/r_i  and the book value b(x)
# ---------------------------------------------------------------------------


class GreedyError(FormulaError):
    pass


def greedy_book(x: Rational, max_factors: int = 64) -> tuple[tuple[int, ...], Fraction]:
    """Factor list r_1..r_k with x = prod (r_i-1)/r_i and b = prod (r_i-2)/r_i.

    Each step takes the least integer r >= 3 with (r-1)/r >= residual.  The
    numerator of 1 - residual strictly decreases every step, so rational
    inputs always terminate; the cap guards the contract anyway.
    """
    x = _frac(x)
    if not Fraction(1, 2) < x < 1:
        raise GreedyError(f"x must be in (1/2, 1), got {x}")
    factors: list[int] = []
    residual = x
    while residual != 1:
        if len(factors) >= max_factors:
            raise GreedyError(f"no finite greedy representation found for {x}")
        q = 1 / (1 - residual)
        r = max(3, int(q) if q.denominator == 1 else int(q) + 1)
        if factors and (factors[-1] - 1) ** 2 >= r:
            raise GreedyError(
                f"factor constraint violated for {x}: ({factors[-1]}-1)^2 >= {r}"
            )
        factors.append(r)
        residual = residual * r / (r - 1)
    b = Fraction(1)
    for r in factors:
        b *= Fraction(r - 2, r)
    return tuple(factors), b


def best_lower_rational(x: Fraction, max_den: int) -> Fraction:
    """Largest rational <= x with denominator <= max_den."""
    if x.denominator <= max_den:
        return x
    c = x.limit_denominator(max_den)
    if c <= x:
        return c
    # c is the closest approximant but lies above x; the answer is c's left
    # Farey neighbour a/b of order max_den, fixed by p*b - a*q = 1.
    p, q = c.numerator, c.denominator
    b0 = pow(p, -1, q) if q > 1 else 0
    b = b0 + ((max_den - b0) // q) * q
    a = (p * b - 1) // q
    return Fraction(a, b)


BETA_MAX_DENOMINATOR = 10**4


def beta_prime(rho: Rational, max_den: int = BETA_MAX_DENOMINATOR) -> Fraction:
    """Left-continuous monotone extension of the greedy book value.

    At a rational point the greedy value is itself left-continuous, so it is
    evaluated directly; if its factorisation does not terminate within the
    cap, the value is approached from below over rationals with bounded
    denominator.
    """
    rho = _frac(rho)
    if not Fraction(1, 2) < rho < 1:
        raise GreedyError(f"rho must be in (1/2, 1), got {rho}")
    try:
        return greedy_book(rho)[1]
    except GreedyError:
        pass
    x = best_lower_rational(rho, max_den)
    step = Fraction(1, max_den)
    for _ in range(64):
        if x <= Fraction(1, 2):
            break
        try:
            return greedy_book(x)[1]
        except GreedyError:
            x -= step  # step down: limit from below
    raise GreedyError(f"could not evaluate the book extension near {rho}")


# ---------------------------------------------------------------------------
# reference curves
# ---------------------------------------------------------------------------

#: prefactor choice for the minimum-triangle-density curve.  1/18 makes
#: kappa(2/3) = lambda(2/3) = tau_prime(2/3) = 2/9 and kappa(1/2) = 0;
#: the commonly printed 1/6 variant breaks that endpoint identity.
KAPPA_PREFACTOR = Fraction(1, 18)
KAPPA_PREFACTOR_ALTERNATIVE = Fraction(1, 6)


def kappa(rho: Rational, dps: int = DEFAULT_DPS) -> mp.mpf:
    """Minimum scaled triangle count at edge density rho, on [1/2, 2/3]."""
    rho = _frac(rho)
    if not Fraction(1, 2) <= rho <= Fraction(2, 3):
        raise FormulaError(f"kappa is evaluated on [1/2, 2/3], got {rho}")
    with mp.workdps(dps):
        s = mp.sqrt(2 * (2 - 3 * mp.mpf(rho.numerator) / rho.denominator))
        pre = mp.mpf(KAPPA_PREFACTOR.numerator) / KAPPA_PREFACTOR.denominator
        return pre * (1 - s) * (2 + s) ** 2


def lam(rho: Rational) -> Fraction:
    """Minimum scaled triangle count under a minimum-degree condition."""
    rho = _frac(rho)
    if not Fraction(1, 2) <= rho <= Fraction(2, 3):
        raise FormulaError(f"lambda is evaluated on [1/2, 2/3], got {rho}")
    return 3 * rho * (1 - rho) * (2 * rho - 1)


def tau_prime(rho: Rational) -> Fraction:
    """Conjectured least maximum scaled triangle-degree on [1/2, 2/3]."""
    rho = _frac(rho)
    if not Fraction(1, 2) <= rho <= Fraction(2, 3):
        raise FormulaError(f"tau_prime is evaluated on [1/2, 2/3], got {rho}")
    if rho <= Fraction(11, 18):
        return Fraction(3, 2) * (rho - Fraction(1, 2))
    return rho - Fraction(4, 9)


@dataclass(frozen=True)
class CurvePoint:
    rho: Fraction
    kappa: Optional[mp.mpf]
    lam: Optional[Fraction]
    tau_prime: Optional[Fraction]
    f_upper: Optional[Fraction]
    rho_beta: Optional[Fraction]


def reference_curves(rho: Rational, dps: int = DEFAULT_DPS) -> CurvePoint:
    """All five reference curves at one density.

    kappa/lam/tau_prime live on [1/2, 2/3]; f_upper on [1/2, 3/4];
    rho*beta' on (1/2, 3/4].  Out-of-domain entries are None.
    """
    rho = _frac(rho)
    if not Fraction(1, 2) <= rho <= Fraction(3, 4):
        raise FormulaError(f"curves are evaluated on [1/2, 3/4], got {rho}")
    in_low = rho <= Fraction(2, 3)
    return CurvePoint(
        rho=rho,
        kappa=kappa(rho, dps) if in_low else None,
        lam=lam(rho) if in_low else None,
        tau_prime=tau_prime(rho) if in_low else None,
        f_upper=tau_upper(rho),
        rho_beta=rho * beta_prime(rho) if rho > Fraction(1, 2) else None,
    )


CSV_HEADER = "rho,kappa,lambda,tau_prime,f_upper,rho_beta"


def _cell(value, dps: int) -> str:
    # 12 decimal digits sit comfortably inside double precision
    return "" if value is None else f"{float(value):.12f}"


def curve_grid(start: Fraction, stop: Fraction, steps: int) -> list[Fraction]:
    """steps+1 equally spaced exact rationals from start to stop inclusive."""
    if steps < 1:
        raise FormulaError(f"need at least 1 step, got {steps}")
    delta = (stop - start) / steps
    return [start + k * delta for k in range(steps + 1)]


def render_curves_csv(
    start: Fraction, stop: Fraction, steps: int, dps: int = DEFAULT_DPS
) -> str:
    """CSV of curve points, 12 decimal digits, empty cells where undefined."""
    if not Fraction(1, 2) <= start < stop <= Fraction(3, 4):
        raise FormulaError(
            f"grid must satisfy 1/2 <= start < stop <= 3/4, got [{start}, {stop}]"
        )
    lines = [CSV_HEADER]
    for rho in curve_grid(start, stop, steps):
        pt = reference_curves(rho, dps)
        lines.append(
            ",".join(
                (
                    _cell(rho, dps),
                    _cell(pt.kappa, dps),
                    _cell(pt.lam, dps),
                    _cell(pt.tau_prime, dps),
                    _cell(pt.f_upper, dps),
                    _cell(pt.rho_beta, dps),
                )
            )
        )
    return "\n".join(lines) + "\n"


def curves_metadata(start: Fraction, stop: Fraction, steps: int) -> dict:
    """Sidecar metadata: normalisation choice plus reference annotations."""
    return {
        "grid": {"from": str(start), "to": str(stop), "steps": steps},
        "kappa_prefactor": str(KAPPA_PREFACTOR),
        "kappa_prefactor_alternative": str(KAPPA_PREFACTOR_ALTERNATIVE),
        "kappa_note": (
            "prefactor 1/18 keeps kappa(2/3) = lambda(2/3) = tau_prime(2/3) = 2/9 "
            "and kappa(1/2) = 0; the 1/6 variant breaks the shared endpoint"
        ),
        "envelope_defect_annotations": [
            {"from": str(a), "to": str(b), "defect": d}
            for a, b, d in TAU_DEFECT_BOUNDS
        ],
        "rho_star_upper": str(RHO_STAR_UPPER),
    }


#: reference defect bounds for the piecewise-linear envelope on (1/2, 3/4]:
#: on each interval the true curve lies within the stated defect below the
#: envelope.  Emitted as annotations in curve metadata; not reproduced here.
TAU_DEFECT_BOUNDS: tuple[tuple[Fraction, Fraction, float], ...] = (
    (Fraction(1, 2), Fraction(29, 54), 0.0010705),
    (Fraction(29, 54), Fraction(31, 54), 0.0044863),
    (Fraction(31, 54), Fraction(11, 18), 0.0106917),
    (Fraction(11, 18), Fraction(17, 27), 0.0106917),
    (Fraction(17, 27), Fraction(35, 54), 0.0058198),
    (Fraction(35, 54), Fraction(2, 3), 0.0002057),
    (Fraction(2, 3), Fraction(25, 36), 0.00123143),
    (Fraction(25, 36), Fraction(13, 18), 0.00534603),
    (Fraction(13, 18), Fraction(53, 72), 0.00534583),
    (Fraction(53, 72), Fraction(3, 4), 0.00189005),
)

#: reference upper bound for the density where the envelope crosses 1 - rho
RHO_STAR_UPPER = Fraction(19, 27) + Fraction(74, 10**10)


# ---------------------------------------------------------------------------
# recursive covering bound
# ---------------------------------------------------------------------------


def recursive_cover_bound(c, dps: int = DEFAULT_DPS) -> mp.mpf:
    """g(c) = (-1 + sqrt(3 - 2c)) / (1 - c) on (0, 1)."""
    with mp.workdps(dps):
        c = mp.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mp.mpf(c)
        if not 0 < c < 1:
            raise FormulaError(f"c must be in (0, 1), got {c}")
        return (-1 + mp.sqrt(3 - 2 * c)) / (1 - c)


def iterate_cover_bounds(c0, k: int, dps: int = DEFAULT_DPS) -> list[mp.mpf]:
    """Apply the recursive bound k times, full precision carried throughout."""
    out = []
    with mp.workdps(dps):
        c = mp.mpf(c0.numerator) / c0.denominator if isinstance(c0, Fraction) else mp.mpf(c0)
        for _ in range(k):
            c = recursive_cover_bound(c, dps)
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# tripartite edge/triangle trade-off
# ---------------------------------------------------------------------------


def tripartite_bounds(x: Rational, s: Rational) -> tuple[Fraction, Fraction]:
    """f1 = x - x^2 + (s/4)(1-x)^2 and f2 = s x (1-x)/2, exact."""
    x, s = _frac(x), _frac(s)
    if not 0 <= x <= 1 or not 0 <= s <= 1:
        raise FormulaError(f"x and s must be in [0, 1], got x={x}, s={s}")
    f1 = x - x * x + Fraction(s, 4) * (1 - x) ** 2
    f2 = s * x * (1 - x) / 2
    return f1, f2


# ---------------------------------------------------------------------------
# convexity check with a deficient-element split
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JensenCheck:
    holds: bool
    vacuous: bool
    lhs: float
    rhs: float

    def __bool__(self) -> bool:
        return self.holds


def extended_jensen_check(
    a: Sequence[float], eta: float, f: Callable[[float], float]
) -> JensenCheck:
    """Numeric check of sum f(a_i) >= |B| f((1-eta)m) + (n-|B|) f((1+eta|B|/(n-|B|))m)
    where m is the mean and B = {i : a_i <= (1-eta)m}.

    f must be convex on the relevant interval (caller-asserted).  The
    degenerate case B = everything is reported as vacuously true.
    """
    if not a:
        raise FormulaError("need a nonempty sequence")
    if eta <= 0:
        raise FormulaError(f"eta must be positive, got {eta}")
    n = len(a)
    mean = sum(a) / n
    b = sum(1 for ai in a if ai <= (1 - eta) * mean)
    lhs = sum(f(ai) for ai in a)
    if b == n:
        return JensenCheck(True, True, lhs, float("nan"))
    rhs = b * f((1 - eta) * mean) + (n - b) * f((1 + eta * b / (n - b)) * mean)
    return JensenCheck(lhs >= rhs - 1e-12 * max(1.0, abs(rhs)), False, lhs, rhs)
