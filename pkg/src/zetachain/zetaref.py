"""Independent ground truth for the Hurwitz zeta function on Re s > 1.

Provides the truncated Dirichlet sum the simulator realizes, an
Euler-Maclaurin evaluation of the full function used as acceptance
oracle, and the truncation-error model that bounds the accessible
parameter domain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain, ValidationError

__all__ = [
    "dirichlet_truncated",
    "hurwitz_zeta",
    "truncation_error_estimate",
    "n_min",
    "tail_bound",
    "DomainPoint",
    "accessible_domain",
]

# guard band below which the Euler-Maclaurin oracle refuses to evaluate
_SIGMA_GUARD = 1.0 + 1e-6

# B_{2k} / (2k)! for k = 1, 2, 3; the first neglected coefficient (B_8/8!)
# sizes the adaptive cutoff
_EM_COEFFS = (1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0)
_B8_OVER_8F = 1.0 / 1209600.0

# default cap used when reporting the diverging N_min near sigma = 1
DEFAULT_N_CAP = 10**6


def _check_a(a: float):
    if not (0.0 < a <= 1.0):
        raise ValidationError(f"a must lie in (0, 1], got {a}")


def dirichlet_truncated(s: complex, a: float, n_terms: int) -> complex:
    """Truncated Dirichlet sum over (n + a)**(-s), n = 0..n_terms-1."""
    _check_a(a)
    if n_terms < 1:
        raise ValidationError(f"n_terms must be >= 1, got {n_terms}")
    n = np.arange(n_terms, dtype=float)
    return complex(np.sum((n + a) ** (-s)))


def hurwitz_zeta(s: complex, a: float) -> complex:
    """Hurwitz zeta by explicit summation plus Euler-Maclaurin tail.

    M explicit terms, integral term (M+a)**(1-s)/(s-1), half-term, and
    Bernoulli corrections through B_6; M is chosen so the first neglected
    correction is below 1e-12 relative.  Restricted to Re s > 1 (with a
    small guard band).
    """
    _check_a(a)
    s = complex(s)
    if s.real <= _SIGMA_GUARD:
        raise OutOfDomain(f"Re s = {s.real} outside convergence strip (need > {_SIGMA_GUARD})")

    # size M from the first neglected (B_8) correction:
    #   |B_8/8!| * prod_{j=0}^{6} |s+j| * (M+a)^(1 - Re s - 8) < 1e-13
    prod = 1.0
    for j in range(7):
        prod *= abs(s + j)
    target = 1e-13
    m = int(np.ceil((_B8_OVER_8F * prod / target) ** (1.0 / (s.real + 7.0)))) + 1
    m = max(m, 16)

    n = np.arange(m, dtype=float)
    head = complex(np.sum((n + a) ** (-s)))
    x = m + a
    tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    factor = s * x ** (-s - 1.0)
    tail += _EM_COEFFS[0] * factor
    factor *= (s + 1.0) * (s + 2.0) / (x * x)
    tail += _EM_COEFFS[1] * factor
    factor *= (s + 3.0) * (s + 4.0) / (x * x)
    tail += _EM_COEFFS[2] * factor
    return head + tail


def truncation_error_estimate(n_terms: float, sigma: float) -> float:
    """Leading-order truncation error N**(1-sigma)/(sigma-1) at t = 0.

    Accepts real n_terms so it composes with the real-valued n_min.
    """
    if n_terms < 1:
        raise ValidationError(f"n_terms must be >= 1, got {n_terms}")
    if not sigma > 1.0:
        raise ValidationError(f"sigma must exceed 1, got {sigma}")
    return float(n_terms) ** (1.0 - sigma) / (sigma - 1.0)


def n_min(sigma: float) -> float:
    """Minimum truncation order (sigma-1)**(-1/(sigma-1)) for small error."""
    if not sigma > 1.0:
        raise ValidationError(f"sigma must exceed 1, got {sigma}")
    try:
        return float((sigma - 1.0) ** (-1.0 / (sigma - 1.0)))
    except OverflowError:  # diverges as sigma -> 1+
        return float("inf")


def tail_bound(sigma: float, a: float, n_terms: int) -> float:
    """Rigorous integral bound on |zeta(s,a) - truncated sum|, any t.

    The tail sum over n >= N of (n+a)**(-sigma) is dominated by the
    integral from N-1+a, giving (N-1+a)**(1-sigma)/(sigma-1).
    """
    _check_a(a)
    if not sigma > 1.0:
        raise ValidationError(f"sigma must exceed 1, got {sigma}")
    return (n_terms - 1 + a) ** (1.0 - sigma) / (sigma - 1.0)


@dataclass(frozen=True)
class DomainPoint:
    """Feasibility record for one sigma of the accessible-domain map."""

    sigma: float
    n_min: float
    feasible: bool
    t_min: float
    t_max: float  # inf when no coherence cutoff applies


def accessible_domain(sigma_grid, t_coh: float = None, n_cap: int = DEFAULT_N_CAP):
    """Map each sigma to its minimum truncation order and time window.

    N_min values beyond n_cap are reported saturated at the cap with the
    feasible flag cleared; the window is [0, t_coh] or unbounded.
    """
    if t_coh is not None and not t_coh > 0.0:
        raise ValidationError(f"t_coh must be positive, got {t_coh}")
    t_max = float("inf") if t_coh is None else float(t_coh)
    points = []
    for sigma in np.asarray(sigma_grid, dtype=float):
        nm = n_min(float(sigma))
        feasible = np.isfinite(nm) and nm <= n_cap
        points.append(
            DomainPoint(
                sigma=float(sigma),
                n_min=nm if feasible else float(n_cap),
                feasible=bool(feasible),
                t_min=0.0,
                t_max=t_max,
            )
        )
    return points
