"""The robustness of a measurement is exactly its best edge in a guessing
game.

For any ensemble of states, measuring can beat blind guessing by at most
a factor 1 + R.  The bound is tight: the game built from the dual states
of the robustness program attains it.  Random games stay strictly below.
"""

from povmrobust import (
    advantage,
    optimal_ensemble,
    p_guess_classical,
    p_guess_with_measurement,
    random_ensemble,
    random_povm,
    rom,
)
from povmrobust.selftest import qubit_sic

m = random_povm(3, 4, seed=2024)
bound = 1.0 + rom(m)
print(f"random 3-level measurement with 4 outcomes: 1 + R = {bound:.6f}")

best = optimal_ensemble(m)
print("its own best game:")
print("  blind guessing  :", p_guess_classical(best))
print("  with measurement:", p_guess_with_measurement(best, m))
print(f"  advantage       : {advantage(best, m):.6f}  (attains the bound)")
print()

print("a hundred random games never cross the bound:")
worst = max(
    advantage(random_ensemble(3, 1 + i % 5, seed=i), m) for i in range(100)
)
print(f"  best random advantage: {worst:.6f}  <  {bound:.6f}")
print()

sic = qubit_sic()
e = optimal_ensemble(sic)
print("symmetric 4-outcome qubit measurement, its optimal game:")
print(f"  guessing probability {p_guess_with_measurement(e, sic):.4f} "
      f"(= d/o = 2/4), advantage {advantage(e, sic):.4f} (= d)")
