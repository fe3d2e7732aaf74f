"""Print the screw-jack and vertical-actuator reductions next to the general closed form.

    python scripts/reductions.py
"""

import math

from scissorlift import ActuatorPlacement, ArmSlope, LiftSpec, force

lift = LiftSpec(n=2, D=1.0, W=40.0, L=180.0)
screw_jack = ActuatorPlacement(a=0.0, b=2.0, i=0, slope=ArmSlope.NEGATIVE)
vertical = ActuatorPlacement(a=0.0, b=0.0, i=1, slope=ArmSlope.POSITIVE)

print(f"L_E = {lift.effective_load} N, n = {lift.n}")
print(f"{'theta':>6} {'screw jack':>12} {'n L_E/tan':>12} {'vertical':>10} {'n L_E':>8}")
for deg in range(10, 90, 10):
    t = math.radians(deg)
    print(
        f"{deg:>6} {force(lift, screw_jack, t):>12.4f} {lift.n * lift.effective_load / math.tan(t):>12.4f}"
        f" {force(lift, vertical, t):>10.4f} {lift.n * lift.effective_load:>8.4f}"
    )
