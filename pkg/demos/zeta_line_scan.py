"""Trace the normalized zeta function along sigma + i t with a 5-site chain.

Evolves the bare edge state, compares its autocorrelation against the
exact (Euler-Maclaurin) zeta oracle, and tabulates how the truncation
error grows as sigma approaches the convergence boundary.
"""

import numpy as np

from zetachain import (
    SimulationParams,
    TimeGrid,
    evolve_spectral,
    hurwitz_zeta,
    n_min,
    synthesize,
    tail_bound,
)

grid = TimeGrid(t_start=0.0, t_end=50.0, n_points=501)

for sigma in (2.0, 1.5, 1.2):
    params = SimulationParams(n_levels=5, a=1.0, sigma=sigma)
    series = evolve_spectral(synthesize(params), grid)
    z_sigma = hurwitz_zeta(sigma, 1.0)
    refs = np.array([hurwitz_zeta(sigma + 1j * t, 1.0) for t in series.times])
    deviation = np.abs(series.amplitudes - refs / z_sigma).max()
    bound = 2.0 * tail_bound(sigma, 1.0, 5) / abs(z_sigma)
    print(
        f"sigma = {sigma}: max |a(t) - zeta_norm| = {deviation:.4f} "
        f"(bound {bound:.4f}), N_min = {n_min(sigma):.1f}"
    )

print()
print("Five sites suffice well above sigma ~ 1.5; near sigma = 1.2 one")
print("would need N of order 3000 for comparable accuracy.")
