"""How the error scales: power-law orders per sequence and per initial state.

Fitting log(1 - F) against log(g) exposes the cancellation structure:

* naive pulse, gate fidelity: g^2
* conventional inversion composite on +-z states: g^4 (a better inversion
  pulse than the naive one, despite the gate fidelity gaining nothing)
* broadband composite, gate fidelity and every cardinal initial state: g^6
* and on one special pair of initial-state axes in the xz plane the
  broadband NOT error drops all the way to g^10.

The scan locates that pair numerically; it lands at half the broadband
phase angle from +z (arccos(-1/4) / 2 = 52.2388 degrees) and its antipode.
States on those axes sit along the residual third-order error rotation
axis, so the leading deviation cannot move them.
"""

import numpy as np

from robustgates import (bb1, conventional_inversion, estimate_error_order,
                         find_high_order_axes, gate_family, naive, state_error_survey)


def show_survey(name, pulses):
    print(f"{name}:")
    for label, result in state_error_survey(pulses):
        if isinstance(result, str):
            print(f"  initial {label}: {result}")
        else:
            print(f"  initial {label}: order {result.exponent:5.2f} "
                  f"(coefficient {result.coefficient:.3e})")


def main():
    print("gate-fidelity error orders:")
    for name, seq in (("naive 180x", naive(np.pi)), ("BB1 NOT", bb1(np.pi))):
        estimate = estimate_error_order(gate_family(seq))
        print(f"  {name}: order {estimate.exponent:.2f} over g in "
              f"[{estimate.g_min:.3g}, {estimate.g_max:.3g}]")

    print()
    show_survey("naive 180x per initial state", naive(np.pi))
    print()
    show_survey("conventional composite per initial state", conventional_inversion())
    print()
    show_survey("BB1 NOT per initial state", bb1(np.pi))

    print("\nscanning xz-plane initial states for higher-order behaviour...")
    axes = find_high_order_axes(bb1(np.pi), resolution_deg=1.0)
    for item in axes:
        print(f"  axis at {item.angle_deg:8.4f} deg from +z: "
              f"order {item.estimate.exponent:.2f}")
    half_phase = np.degrees(np.arccos(-0.25)) / 2
    print(f"  (compare arccos(-1/4) / 2 = {half_phase:.4f} deg)")


if __name__ == "__main__":
    main()
