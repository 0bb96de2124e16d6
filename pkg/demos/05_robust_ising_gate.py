"""A controlled-phase gate that forgives coupling-strength errors.

Evolution under the Ising coupling for a time 1/2J gives a controlled-phase
gate -- if the coupling J is known exactly.  Replacing that single period by
five periods in the ratios 1:4:8:4:1 of t = 1/4J, interleaved with y
rotations of arccos(-1/8) on one spin, cancels the g^2 and g^4 error terms
exactly as the single-qubit broadband composite does: the fidelity curve of
the composite gate IS the single-qubit curve for a 90-degree rotation, with
leading infidelity 63 pi^6 g^6 / 65536.  Over +-10% coupling error the gate
stays within one part in 10^6, a tolerance the simple gate only meets when
J is controlled to 0.2%.

Writes ising_gate_fidelity.csv and robust_cphase.pulseprog (and a PNG when
matplotlib is available) into demos/output/.
"""

from pathlib import Path

import numpy as np

from robustgates import (CNOT, cnot_from_cphase, load_program, propagator_fidelity,
                         robust_ising_elements, robust_ising_gate, save_program,
                         simple_ising_gate)
from robustgates.ising import elements_unitary

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    ideal = simple_ising_gate(0.0)

    print("controlled-phase propagator fidelity vs coupling error:")
    print(f"{'g':>6}  {'simple':>12}  {'robust':>12}")
    for g in (0.01, 0.05, 0.1, 0.25):
        simple = propagator_fidelity(simple_ising_gate(g), ideal)
        robust = propagator_fidelity(robust_ising_gate(g), ideal)
        print(f"{g:6.2f}  {simple:12.9f}  {robust:12.9f}")

    threshold = 1e-6
    simple_limit = 4 / np.pi * np.sqrt(2 * threshold)
    print(f"\nfor infidelity below {threshold:.0e}: simple gate needs |g| <= "
          f"{simple_limit:.4f}, robust gate tolerates |g| <= 0.1 "
          f"({0.1 / simple_limit:.0f}x looser)")

    print("\ncontrolled-NOT from the controlled-phase gate (Hadamards on the target):")
    for g in (0.0, 0.1):
        for robust in (False, True):
            fid = propagator_fidelity(cnot_from_cphase(g, robust=robust), CNOT)
            kind = "robust" if robust else "simple"
            print(f"  g = {g:4.2f}, {kind:6s}: fidelity {fid:.9f}")

    # pulse program export and replay
    program_path = OUT / "robust_cphase.pulseprog"
    save_program(robust_ising_elements(), program_path)
    replay = elements_unitary(load_program(program_path), coupling_error=0.1)
    direct = robust_ising_gate(0.1)
    print(f"\nwrote {program_path}")
    print("replayed-program fidelity deviation:",
          f"{abs(propagator_fidelity(replay, ideal) - propagator_fidelity(direct, ideal)):.2e}")

    gs = np.linspace(-1.0, 1.0, 401)
    simple_curve = np.array([propagator_fidelity(simple_ising_gate(g), ideal) for g in gs])
    robust_curve = np.array([propagator_fidelity(robust_ising_gate(g), ideal) for g in gs])
    csv_path = OUT / "ising_gate_fidelity.csv"
    with csv_path.open("w") as handle:
        handle.write("g,simple,robust\n")
        for g, s, r in zip(gs, simple_curve, robust_curve):
            handle.write(f"{float(g)!r},{float(s)!r},{float(r)!r}\n")
    print(f"wrote {csv_path}")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the figure")
        return

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(gs, simple_curve, "k--", label="simple gate")
    ax.plot(gs, robust_curve, "k-", label="robust composite gate")
    ax.set_xlabel("fractional coupling error g")
    ax.set_ylabel("propagator fidelity")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(OUT / "ising_gate_fidelity.png", dpi=150)
    print(f"wrote {OUT / 'ising_gate_fidelity.png'}")


if __name__ == "__main__":
    main()
