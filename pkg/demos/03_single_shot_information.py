"""Measurements as channels: one use, how many bits?

Reading a measurement as a quantum-to-classical channel, the most
min-mutual-information a single use can create is log2(1 + R).  The same
log-ratio structure gives the accessible min-information of an ensemble,
computed here for a pair of tilted states.
"""

import math

import numpy as np

from povmrobust import (
    acc_min_info_ensemble,
    acc_min_info_measurement,
    h_min,
    h_min_cond,
    i_min,
    joint_from_game,
    projective_povm,
    random_ensemble,
    random_povm,
    trivial_povm,
    validate_ensemble,
)

print("min-entropy warm-up:")
print("  H_min(uniform over 4)  =", h_min([0.25] * 4), "bits")
print("  H_min((1/2,1/4,1/4))   =", h_min([0.5, 0.25, 0.25]), "bits")
print()

for name, m in [
    ("sharp qubit", projective_povm(np.eye(2))),
    ("sharp qutrit", projective_povm(np.eye(3))),
    ("coin-flip box", trivial_povm([0.5, 0.5], 2)),
    ("random d=3, o=4", random_povm(3, 4, seed=7)),
]:
    bits, witness = acc_min_info_measurement(m)
    attained = i_min(joint_from_game(witness, m))
    print(f"{name:16s} accessible min-information = {bits:.6f} bits "
          f"(witness game attains {attained:.6f})")
print()

m = random_povm(2, 3, seed=8)
bits, _ = acc_min_info_measurement(m)
sweep = max(
    i_min(joint_from_game(random_ensemble(2, 1 + i % 4, seed=i), m))
    for i in range(200)
)
print(f"200 random encodings against one measurement: best {sweep:.6f} "
      f"<= {bits:.6f} bits")
print()

plus = np.full((2, 2), 0.5)
pair = validate_ensemble([np.diag([1.0, 0.0]), plus], [0.5, 0.5])
joint = joint_from_game(pair, projective_povm(np.eye(2)))
print("tilted two-state ensemble:")
print(f"  conditional min-entropy under a fixed readout: "
      f"{h_min_cond(joint):.6f} bits")
print(f"  accessible min-information over all readouts : "
      f"{acc_min_info_ensemble(pair):.6f} bits "
      f"(= log2(1 + 1/sqrt(2)) = {math.log2(1 + 2 ** -0.5):.6f})")
