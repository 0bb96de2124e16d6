"""Rediscovering the broadband phase angles by cancelling error orders.

The five-pulse template (theta/2)_0 180_phi1 360_phi2 180_phi1 (theta/2)_0
has two free phases.  Expanding its quaternion to first order in the pulse
length error g shows two leading error channels: a y component, killed for
any phi1 by the relation phi2 = 3 phi1, and a rotation-angle error
proportional to theta + 4 pi cos(phi1), killed by
phi1 = arccos(-theta / 4 pi).  The solver finds both numerically -- finite
differences plus a bracketed root-find -- and an unconstrained 2-D search
recovers the phi2 = 3 phi1 relation on its own.
"""

import numpy as np

from robustgates import bb1_template, estimate_series, solve_bb1_phases, solve_bb1_phases_free
from robustgates.sequences import bb1_phase


def main():
    theta = np.pi

    def builder(phi1, phi2):
        return bb1_template(theta, phi1, phi2)

    print("first-order quaternion coefficients with phi2 = 3 phi1 imposed:")
    print(f"{'phi1 (deg)':>11}  {'scalar':>10}  {'v_y':>10}")
    for phi1_deg in (95.0, 100.0, 104.4775, 110.0, 115.0):
        phi1 = np.radians(phi1_deg)
        series = estimate_series(builder, (phi1, 3 * phi1))
        print(f"{phi1_deg:11.4f}  {series.first[0]:10.6f}  {series.first[2]:10.2e}")
    print("(the scalar coefficient crosses zero at the broadband phase angle)")

    print("\nsolved phase angles vs arccos(-theta / 4 pi):")
    for theta_deg in (45, 90, 180, 360):
        phi1, phi2 = solve_bb1_phases(np.radians(theta_deg))
        closed = bb1_phase(np.radians(theta_deg))
        print(f"  theta = {theta_deg:3d} deg: phi1 = {np.degrees(phi1):11.6f} deg "
              f"(closed form {np.degrees(closed):11.6f}, "
              f"difference {abs(np.degrees(phi1 - closed)):.2e} deg)")

    phi1, phi2 = solve_bb1_phases_free(np.pi)
    residual = (phi2 - 3 * phi1) % (2 * np.pi)
    residual = min(residual, 2 * np.pi - residual)
    print("\nunconstrained 2-D search over (phi1, phi2):")
    print(f"  phi1 = {np.degrees(phi1):.6f} deg, phi2 = {np.degrees(phi2):.6f} deg")
    print(f"  |phi2 - 3 phi1| mod 360 = {np.degrees(residual):.2e} deg "
          "(the 3:1 phase relation emerges by itself)")


if __name__ == "__main__":
    main()
