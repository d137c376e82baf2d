"""Nodal structure of the cubic x^2 - y^2 + z^3 - 3 x^2 z.

This harmonic cubic has exactly two nodal domains near the origin even
though its zero set through 0 looks locally like two crossing planes; the
domains are connected through the z != 0 slices and are not Lipschitz.  The
origin is its only critical zero in the unit ball, with vanishing depth 2.
"""

import os

from harmonic_ratios import (
    Region,
    catalog_get,
    critical_set_sample,
    depth_of_zero,
    nodal_domain_count,
    zero_set_sample,
)
from harmonic_ratios.nodal import write_points_csv

h = catalog_get("paperH").polynomial
ball = Region.ball((0, 0, 0), 0.5)

print("depth of the zero at the origin:", depth_of_zero(h, (0, 0, 0)))

for res in (128, 256):
    print(f"nodal domains in the ball of radius 0.5 at resolution {res}:",
          nodal_domain_count(h, ball, res))

crit = critical_set_sample(h, Region.ball((0, 0, 0), 1.0), grid=20)
print("critical zeros found in the unit ball:", crit.critical_points)

points, _ = zero_set_sample(h, ball, 24)
out = os.path.join(os.path.dirname(__file__), "paperH_zero_set.csv")
write_points_csv(points, out)
print(f"{len(points)} zero-set samples written to {out}")
