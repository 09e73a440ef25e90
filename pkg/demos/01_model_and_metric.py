"""The coordinate model of the two product geometries.

Points live in the affine chart (1 : x : y : z).  S2xR is everything except
the centre E0; H2xR is the open cone x^2 > y^2 + z^2, x > 0.  The fibre
coordinate is the log of the radial quadratic form, and at the base point
(1 : 1 : 0 : 0) both metrics reduce to the identity, which is what makes
angle measurement there Euclidean.
"""

import numpy as np

from prodgeo import Geometry, contains, metric_at, to_model

for kind in Geometry:
    print(f"--- {kind.value}")
    for p in [(1, 1, 0, 0), (1, 2, 1, 0), (1, 1, 2, 0), (1, 0, 0, 0)]:
        print(f"  contains{p} = {contains(kind, p)}")

print("\nmetric at the base point (both geometries):")
for kind in Geometry:
    print(f"  {kind.value}:\n{metric_at(kind, (1, 1, 0, 0))}")

print("\nS2xR metric scales with the inverse squared radius:")
print(metric_at(Geometry.S2R, (1, 2, 0, 0)))

print("\nH2xR metric away from the axis is genuinely anisotropic:")
with np.printoptions(precision=4, suppress=True):
    print(metric_at(Geometry.H2R, (1, 2, 1.5, 1)))

print("\nintrinsic charts land inside the model:")
print("  s2r geographic (t=0.3, phi=1.0, theta=0.4) ->",
      np.round(to_model(Geometry.S2R, 0.3, 1.0, 0.4), 6))
print("  h2r cylindrical (t=0.3, r=1.0, alpha=0.4) ->",
      np.round(to_model(Geometry.H2R, 0.3, 1.0, 0.4), 6))
