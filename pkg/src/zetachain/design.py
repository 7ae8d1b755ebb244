"""Hardware export: spin-chain parameters and curved waveguide-array geometry.

The tridiagonal Hamiltonian maps one-to-one onto the single-excitation
sector of an XY spin chain (J_n couplings, B_n fields) and onto a chain
of evanescently coupled waveguides where J_n = kappa * exp(-alpha * d_n)
sets spacings and axis bending sets site-energy gradients.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import CouplingTooStrong, TiltInfeasible, ValidationError
from .synthesis import SymmetricTridiagonal

__all__ = [
    "SpinChainParams",
    "FabricationConstants",
    "WaveguideDesign",
    "spin_chain_params",
    "waveguide_layout",
    "feasibility_report",
    "waveguide_design_json",
]


@dataclass(frozen=True)
class SpinChainParams:
    """Spin-spin couplings and local fields realizing the chain (units hbar*omega).

    dropped_constant records the common diagonal term -sum(B_n) omitted in
    the single-excitation identification.
    """

    couplings: np.ndarray = field(repr=False)
    fields: np.ndarray = field(repr=False)
    dropped_constant: float = 0.0

    def to_tridiagonal(self) -> SymmetricTridiagonal:
        return SymmetricTridiagonal(self.fields.copy(), self.couplings.copy())


@dataclass(frozen=True)
class FabricationConstants:
    """Waveguide fabrication parameters.

    kappa, alpha  : coupling scale and decay constant of J = kappa*exp(-alpha*d)
    bend_radius   : radius R of the circular axis bend
    lambda_bar    : optical wavelength over 2*pi, same length units as d
    n_substrate   : substrate refractive index
    e_offset      : straight-axis propagation constant (gauge, not synthesized)
    """

    kappa: float
    alpha: float
    bend_radius: float
    lambda_bar: float
    n_substrate: float
    e_offset: float = 0.0

    def __post_init__(self):
        for name in ("kappa", "alpha", "bend_radius", "lambda_bar", "n_substrate"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive, got {getattr(self, name)}")


@dataclass(frozen=True)
class WaveguideDesign:
    """Planar layout of the waveguide chain.

    spacings d_n and tilt angles theta_n fix consecutive guide positions
    via (dx, dy) = d_n (cos theta_n, sin theta_n); detunings are the
    bend-induced propagation constant shifts n_s * x_n / (R * lambda_bar).
    """

    spacings: np.ndarray = field(repr=False)
    angles: np.ndarray = field(repr=False)
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    detunings: np.ndarray = field(repr=False)
    fab: FabricationConstants = None

    def couplings(self) -> np.ndarray:
        """Hopping rates rebuilt from the spacings (round-trip check)."""
        return self.fab.kappa * np.exp(-self.fab.alpha * self.spacings)

    def field_differences(self) -> np.ndarray:
        """Site-energy differences rebuilt from the geometry (round-trip check)."""
        return self.fab.n_substrate * np.diff(self.x) / (self.fab.bend_radius * self.fab.lambda_bar)


def spin_chain_params(tri: SymmetricTridiagonal) -> SpinChainParams:
    """Identify the tridiagonal entries with spin-chain couplings and fields."""
    return SpinChainParams(
        couplings=tri.offdiagonal.copy(),
        fields=tri.diagonal.copy(),
        dropped_constant=float(-tri.diagonal.sum()),
    )


def waveguide_layout(tri: SymmetricTridiagonal, fab: FabricationConstants) -> WaveguideDesign:
    """Solve the waveguide geometry realizing the given chain.

    Spacings invert the exponential coupling law; tilt angles place the
    bend-induced detuning differences on the prescribed field gradient.
    Only energy differences are realized; the global offset is gauge.
    """
    j = tri.offdiagonal
    b = tri.diagonal
    if j.size and j.max() >= fab.kappa:
        k = int(np.argmax(j))
        raise CouplingTooStrong(
            f"J_{k} = {j[k]:.6g} >= kappa = {fab.kappa:.6g}; "
            f"kappa must exceed {j.max():.17g}"
        )
    if j.size and j.min() <= 0.0:
        raise ValidationError("all couplings must be strictly positive")

    d = np.log(fab.kappa / j) / fab.alpha
    if d.size and fab.bend_radius <= 100.0 * d.max():
        raise ValidationError(
            f"bend radius {fab.bend_radius:.6g} too small for the paraxial picture; "
            f"need R > {100.0 * d.max():.6g}"
        )
    db = np.diff(b)
    cos_theta = db * fab.bend_radius * fab.lambda_bar / (fab.n_substrate * d)
    bad = np.flatnonzero(np.abs(cos_theta) > 1.0)
    if bad.size:
        k = int(bad[0])
        r_fix = fab.n_substrate * d[k] / (fab.lambda_bar * abs(db[k]))
        raise TiltInfeasible(
            f"|cos theta_{k}| = {abs(cos_theta[k]):.6g} > 1; "
            f"reduce bend radius to at most {r_fix:.17g}"
        )
    theta = np.arccos(cos_theta)
    n = tri.order
    x = np.zeros(n)
    y = np.zeros(n)
    x[1:] = np.cumsum(d * cos_theta)
    y[1:] = np.cumsum(d * np.sin(theta))
    detunings = fab.n_substrate * x / (fab.bend_radius * fab.lambda_bar)
    return WaveguideDesign(spacings=d, angles=theta, x=x, y=y, detunings=detunings, fab=fab)


def feasibility_report(tri: SymmetricTridiagonal, fab: FabricationConstants) -> dict:
    """Per-bond constraint margins and an overall feasibility verdict.

    coupling margins are kappa - J_n (> 0 required); tilt margins are
    1 - |cos theta_n| where defined.  suggested_r_max is the largest bend
    radius keeping every tilt realizable (|cos theta| is linear in R).
    """
    j = tri.offdiagonal
    db = np.diff(tri.diagonal)
    coupling_margins = fab.kappa - j
    feasible = bool(np.all(coupling_margins > 0.0)) and bool(np.all(j > 0.0))
    if feasible and j.size:
        d = np.log(fab.kappa / j) / fab.alpha
        cos_theta = db * fab.bend_radius * fab.lambda_bar / (fab.n_substrate * d)
        tilt_margins = 1.0 - np.abs(cos_theta)
        with np.errstate(divide="ignore"):
            r_limits = fab.n_substrate * d / (fab.lambda_bar * np.abs(db))
        suggested_r_max = float(r_limits.min()) if r_limits.size else float("inf")
        feasible = bool(np.all(tilt_margins > 0.0))
    else:
        tilt_margins = np.full(j.shape, np.nan)
        suggested_r_max = float("nan")
    return {
        "coupling_margins": coupling_margins,
        "tilt_margins": tilt_margins,
        "feasible": feasible,
        "suggested_r_max": suggested_r_max,
    }


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def waveguide_design_json(design: WaveguideDesign) -> str:
    """Serialize a design as JSON with all reals at 17 significant digits."""
    fab = design.fab
    doc = {
        "fabrication": {
            "kappa": _fmt(fab.kappa),
            "alpha": _fmt(fab.alpha),
            "bend_radius": _fmt(fab.bend_radius),
            "lambda_bar": _fmt(fab.lambda_bar),
            "n_substrate": _fmt(fab.n_substrate),
            "e_offset": _fmt(fab.e_offset),
        },
        "guides": [
            {
                "index": i,
                "x": _fmt(design.x[i]),
                "y": _fmt(design.y[i]),
                "detuning": _fmt(design.detunings[i]),
            }
            for i in range(design.x.size)
        ],
        "bonds": [
            {
                "index": i,
                "d": _fmt(design.spacings[i]),
                "theta": _fmt(design.angles[i]),
                "J": _fmt(design.couplings()[i]),
            }
            for i in range(design.spacings.size)
        ],
    }
    # numbers are emitted as raw tokens, not strings, at fixed precision
    text = json.dumps(doc, indent=2)
    return re.sub(r'"(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"', r"\1", text)
