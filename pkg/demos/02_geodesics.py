"""Closed-form geodesics and the inverse problem.

A geodesic from the base point is a spiral combining a sphere arc
(respectively hyperbolic ray) with an exponential fibre drift.  Direction
angles (u, v) and arc length tau determine it completely, and the inverse
problem recovers them from the endpoint's coordinates.
"""

import numpy as np

from prodgeo import Geometry, distance, geodesic_params, geodesic_point, sample_curve, tangent_of

# forward: where does the geodesic with u=30deg, v=20deg end after tau=1.5?
g = (np.pi / 6, np.pi / 9, 1.5)
for kind in Geometry:
    print(f"{kind.value}: endpoint of (u=pi/6, v=pi/9, tau=1.5) ->",
          np.round(geodesic_point(kind, g), 6))

# inverse: parameters of the geodesic reaching a given point
for kind, target in [(Geometry.S2R, (1, 3, -2, 1)), (Geometry.H2R, (1, 2, 1.5, 1))]:
    params = geodesic_params(kind, target)
    print(f"\n{kind.value}: geodesic to {target}")
    print(f"  u = {params.u:+.6f}  v = {params.v:+.6f}  tau = {params.tau:.6f}")
    print(f"  tangent at the base point: {np.round(tangent_of(params), 6)}")
    print(f"  re-evaluated endpoint:     {np.round(geodesic_point(kind, params), 12)}")

# distances: the fibre segment has length 1 in both geometries
for kind in Geometry:
    print(f"\n{kind.value}: d(base, (1, e, 0, 0)) =",
          distance(kind, (1, 1, 0, 0), (1, np.e, 0, 0)))

# a sampled curve stays inside the model and is plot-ready
curve = np.array(sample_curve(Geometry.S2R, geodesic_params(Geometry.S2R, (1, 2, 1, 0)), 9))
print("\nS2xR curve to (1, 2, 1, 0), 9 samples:")
print(np.round(curve, 4))
